#include "bulab/complex.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "bulab/error.hpp"

namespace bulab {

std::optional<Simplex> canonical_simplex(std::vector<VertexId> vertices)
{
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        return std::nullopt;
    return vertices;
}

bool is_face_of(const Simplex& face, const Simplex& s)
{
    return std::includes(s.begin(), s.end(), face.begin(), face.end());
}

struct Complex::Data {
    int dimension = 0;
    std::vector<std::string> names;
    std::vector<Simplex> facets;
    std::unordered_map<std::string, VertexId> ids;
};

struct Complex::Cache {
    std::once_flag faces_once;
    std::vector<std::vector<Simplex>> faces;

    std::once_flag neighbors_once;
    std::vector<std::vector<VertexId>> neighbors;

    std::once_flag ridges_once;
    std::map<Simplex, std::vector<std::size_t>> ridges;
};

Complex::Complex() : Complex(std::make_shared<const Data>()) {}

Complex::Complex(std::shared_ptr<const Data> data)
    : data_(std::move(data)), cache_(std::make_shared<Cache>())
{
}

Complex Complex::from_facets(const std::vector<std::vector<std::string>>& facets)
{
    if (facets.empty())
        throw Error(ErrorCode::EmptyInput, "no facets given");
    const std::size_t width = facets.front().size();
    if (width == 0)
        throw Error(ErrorCode::EmptyInput, "empty facet");

    std::vector<std::string> names;
    std::unordered_map<std::string, VertexId> ids;
    std::vector<Simplex> simplices;
    simplices.reserve(facets.size());
    for (const auto& facet : facets) {
        if (facet.size() != width)
            throw Error(ErrorCode::MixedDimension,
                        "facet of size " + std::to_string(facet.size()) + " among facets of size " +
                            std::to_string(width));
        std::vector<VertexId> vertices;
        for (const auto& name : facet) {
            auto [it, inserted] = ids.try_emplace(name, static_cast<VertexId>(names.size()));
            if (inserted)
                names.push_back(name);
            vertices.push_back(it->second);
        }
        auto canonical = canonical_simplex(std::move(vertices));
        if (!canonical) {
            std::string joined;
            for (const auto& name : facet)
                joined += (joined.empty() ? "" : " ") + name;
            throw Error(ErrorCode::DuplicateVertexInFacet, "facet [" + joined + "]");
        }
        simplices.push_back(std::move(*canonical));
    }
    return from_indexed(static_cast<int>(width) - 1, std::move(names), std::move(simplices));
}

Complex Complex::from_indexed(int dimension, std::vector<std::string> names, std::vector<Simplex> facets)
{
    if (dimension < 0)
        throw Error(ErrorCode::InvalidArgument, "negative dimension");
    auto data = std::make_shared<Data>();
    data->dimension = dimension;

    std::vector<char> used(names.size(), 0);
    for (auto& facet : facets) {
        if (static_cast<int>(facet.size()) != dimension + 1)
            throw Error(ErrorCode::MixedDimension, "facet does not have dimension " + std::to_string(dimension));
        auto canonical = canonical_simplex(facet);
        if (!canonical)
            throw Error(ErrorCode::DuplicateVertexInFacet, "repeated vertex in facet");
        facet = std::move(*canonical);
        for (VertexId v : facet) {
            if (v >= names.size())
                throw Error(ErrorCode::InvalidArgument, "vertex id out of range");
            used[v] = 1;
        }
    }
    if (!facets.empty() && std::find(used.begin(), used.end(), 0) != used.end())
        throw Error(ErrorCode::InvalidArgument, "vertex not contained in any facet");
    if (facets.empty() && !names.empty())
        throw Error(ErrorCode::InvalidArgument, "empty complex with vertices");

    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i].empty())
            throw Error(ErrorCode::InvalidArgument, "empty vertex name");
        if (!data->ids.emplace(names[i], static_cast<VertexId>(i)).second)
            throw Error(ErrorCode::NameCollision, "vertex name '" + names[i] + "' used twice");
    }
    data->names = std::move(names);
    data->facets = std::move(facets);
    return Complex(std::move(data));
}

int Complex::dimension() const { return data_->dimension; }
std::size_t Complex::num_vertices() const { return data_->names.size(); }
const std::vector<Simplex>& Complex::facets() const { return data_->facets; }
const std::vector<std::string>& Complex::names() const { return data_->names; }
const std::string& Complex::name(VertexId v) const { return data_->names.at(v); }

std::optional<VertexId> Complex::find(std::string_view name) const
{
    auto it = data_->ids.find(std::string(name));
    if (it == data_->ids.end())
        return std::nullopt;
    return it->second;
}

VertexId Complex::id(std::string_view name) const
{
    auto v = find(name);
    if (!v)
        throw Error(ErrorCode::UnknownVertex, "no vertex named '" + std::string(name) + "'");
    return *v;
}

const std::vector<Simplex>& Complex::faces(int k) const
{
    std::call_once(cache_->faces_once, [this] {
        const int d = data_->dimension;
        std::vector<std::vector<Simplex>> faces(static_cast<std::size_t>(d + 1));
        for (const auto& facet : data_->facets) {
            const std::size_t n = facet.size();
            for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
                Simplex face;
                for (std::size_t i = 0; i < n; ++i)
                    if (mask & (std::uint64_t{1} << i))
                        face.push_back(facet[i]);
                faces[face.size() - 1].push_back(std::move(face));
            }
        }
        for (auto& bucket : faces) {
            std::sort(bucket.begin(), bucket.end());
            bucket.erase(std::unique(bucket.begin(), bucket.end()), bucket.end());
        }
        cache_->faces = std::move(faces);
    });
    static const std::vector<Simplex> none;
    if (k < 0 || k > data_->dimension)
        return none;
    return cache_->faces[static_cast<std::size_t>(k)];
}

bool Complex::contains(const Simplex& s) const
{
    if (s.empty())
        return !empty();
    const auto& bucket = faces(simplex_dimension(s));
    return std::binary_search(bucket.begin(), bucket.end(), s);
}

std::optional<std::size_t> Complex::facet_index(const Simplex& s) const
{
    const auto& f = data_->facets;
    auto it = std::lower_bound(f.begin(), f.end(), s);
    if (it == f.end() || *it != s)
        return std::nullopt;
    return static_cast<std::size_t>(it - f.begin());
}

const std::vector<std::vector<VertexId>>& Complex::neighbors() const
{
    std::call_once(cache_->neighbors_once, [this] {
        std::vector<std::vector<VertexId>> adj(num_vertices());
        for (const auto& e : faces(1)) {
            adj[e[0]].push_back(e[1]);
            adj[e[1]].push_back(e[0]);
        }
        for (auto& list : adj)
            std::sort(list.begin(), list.end());
        cache_->neighbors = std::move(adj);
    });
    return cache_->neighbors;
}

const std::map<Simplex, std::vector<std::size_t>>& Complex::ridge_incidence() const
{
    std::call_once(cache_->ridges_once, [this] {
        std::map<Simplex, std::vector<std::size_t>> ridges;
        const auto& f = data_->facets;
        for (std::size_t i = 0; i < f.size(); ++i) {
            for (std::size_t skip = 0; skip < f[i].size(); ++skip) {
                Simplex ridge;
                ridge.reserve(f[i].size() - 1);
                for (std::size_t j = 0; j < f[i].size(); ++j)
                    if (j != skip)
                        ridge.push_back(f[i][j]);
                ridges[std::move(ridge)].push_back(i);
            }
        }
        cache_->ridges = std::move(ridges);
    });
    return cache_->ridges;
}

std::vector<std::string> Complex::facet_names(const Simplex& s) const
{
    std::vector<std::string> out;
    out.reserve(s.size());
    for (VertexId v : s)
        out.push_back(name(v));
    return out;
}

std::string Complex::format(const Simplex& s) const
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            out += ",";
        out += name(s[i]);
    }
    return out + "}";
}

bool Complex::same_as(const Complex& other) const
{
    if (dimension() != other.dimension() || facets().size() != other.facets().size() ||
        num_vertices() != other.num_vertices())
        return false;
    auto by_name = [](const Complex& c) {
        std::set<std::vector<std::string>> out;
        for (const auto& f : c.facets()) {
            auto names = c.facet_names(f);
            std::sort(names.begin(), names.end());
            out.insert(std::move(names));
        }
        return out;
    };
    return by_name(*this) == by_name(other);
}

ManifoldCheckReport manifold_check(const Complex& complex)
{
    ManifoldCheckReport report;
    if (complex.empty())
        return report;

    bool all_two = true;
    bool all_one_or_two = true;
    const auto& ridges = complex.ridge_incidence();
    for (const auto& [ridge, owners] : ridges) {
        if (owners.size() != 2)
            all_two = false;
        if (owners.size() > 2)
            all_one_or_two = false;
        if (owners.size() == 1)
            report.boundary_ridges.push_back(ridge);
    }
    report.is_closed_pseudomanifold = all_two;
    report.is_pseudomanifold_with_boundary = all_one_or_two;

    // Union-find over facets; facets sharing a ridge are adjacent.
    std::vector<std::size_t> parent(complex.facets().size());
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t components = parent.size();
    for (const auto& [ridge, owners] : ridges) {
        for (std::size_t i = 1; i < owners.size(); ++i) {
            auto a = root(owners[0]);
            auto b = root(owners[i]);
            if (a != b) {
                parent[a] = b;
                --components;
            }
        }
    }
    report.is_strongly_connected = components == 1;
    return report;
}

Complex boundary_complex(const Complex& complex)
{
    const int d = complex.dimension();
    if (d < 1)
        throw Error(ErrorCode::NotPseudomanifold, "boundary of a 0-dimensional complex");

    std::vector<Simplex> ridges;
    for (const auto& [ridge, owners] : complex.ridge_incidence()) {
        if (owners.size() > 2)
            throw Error(ErrorCode::NotPseudomanifold,
                        "ridge " + complex.format(ridge) + " lies in " + std::to_string(owners.size()) + " facets");
        if (owners.size() == 1)
            ridges.push_back(ridge);
    }

    std::vector<VertexId> remap(complex.num_vertices(), static_cast<VertexId>(-1));
    for (const auto& r : ridges)
        for (VertexId v : r)
            remap[v] = 0;
    std::vector<std::string> names;
    for (VertexId v = 0; v < complex.num_vertices(); ++v) {
        if (remap[v] == 0) {
            remap[v] = static_cast<VertexId>(names.size());
            names.push_back(complex.name(v));
        }
    }
    for (auto& r : ridges)
        for (auto& v : r)
            v = remap[v];
    return Complex::from_indexed(d - 1, std::move(names), std::move(ridges));
}

long long euler_characteristic(const Complex& complex)
{
    long long chi = 0;
    for (int k = 0; k <= complex.dimension(); ++k) {
        const auto n = static_cast<long long>(complex.num_faces(k));
        chi += (k % 2 == 0) ? n : -n;
    }
    return chi;
}

Subdivision barycentric_subdivision(const Complex& complex)
{
    Subdivision out;
    std::vector<std::string> names;
    for (int k = 0; k <= complex.dimension(); ++k) {
        for (const auto& face : complex.faces(k)) {
            const auto id = static_cast<VertexId>(out.carrier.size());
            out.carrier.push_back(face);
            out.vertex_of_face.emplace(face, id);
            if (k == 0) {
                names.push_back(complex.name(face[0]));
            } else {
                std::string name = "(";
                for (std::size_t i = 0; i < face.size(); ++i)
                    name += (i ? "," : "") + complex.name(face[i]);
                names.push_back(name + ")");
            }
        }
    }

    std::vector<Simplex> facets;
    for (const auto& facet : complex.facets()) {
        Simplex order = facet;
        do {
            Simplex chain;
            Simplex prefix;
            for (VertexId v : order) {
                prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), v), v);
                chain.push_back(out.vertex_of_face.at(prefix));
            }
            std::sort(chain.begin(), chain.end());
            facets.push_back(std::move(chain));
        } while (std::next_permutation(order.begin(), order.end()));
    }
    out.complex = Complex::from_indexed(complex.dimension(), std::move(names), std::move(facets));
    return out;
}

Complex stellar_subdivision(const Complex& complex, const Simplex& s, const std::string& new_name)
{
    if (s.empty() || !complex.contains(s))
        throw Error(ErrorCode::InvalidArgument, "stellar subdivision of a face not in the complex");
    const auto fresh = static_cast<VertexId>(complex.num_vertices());
    std::vector<Simplex> facets;
    for (const auto& facet : complex.facets()) {
        if (!is_face_of(s, facet)) {
            facets.push_back(facet);
            continue;
        }
        for (VertexId v : s) {
            Simplex replaced;
            for (VertexId w : facet)
                if (w != v)
                    replaced.push_back(w);
            replaced.push_back(fresh);
            facets.push_back(std::move(replaced));
        }
    }
    auto names = complex.names();
    names.push_back(new_name);
    return Complex::from_indexed(complex.dimension(), std::move(names), std::move(facets));
}

std::vector<VertexId> map_by_name(const Complex& sub, const Complex& super)
{
    std::vector<VertexId> out(sub.num_vertices());
    for (VertexId v = 0; v < sub.num_vertices(); ++v)
        out[v] = super.id(sub.name(v));
    return out;
}

} // namespace bulab
