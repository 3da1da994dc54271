#include "bulab/symmetry.hpp"

#include <algorithm>
#include <set>

#include "bulab/error.hpp"

namespace bulab {

Involution Involution::build(const Complex& complex, std::vector<VertexId> image)
{
    const std::size_t n = complex.num_vertices();
    if (image.size() != n)
        throw Error(ErrorCode::InvalidArgument, "involution is not total on the vertices");
    for (VertexId v = 0; v < n; ++v) {
        if (image[v] >= n)
            throw Error(ErrorCode::InvalidArgument, "involution image out of range");
    }
    for (VertexId v = 0; v < n; ++v) {
        if (image[image[v]] != v)
            throw Error(ErrorCode::NotOrderTwo, "A(A(" + complex.name(v) + ")) = " + complex.name(image[image[v]]));
    }
    for (const auto& facet : complex.facets()) {
        Simplex mapped;
        for (VertexId v : facet)
            mapped.push_back(image[v]);
        std::sort(mapped.begin(), mapped.end());
        if (!complex.facet_index(mapped))
            throw Error(ErrorCode::NotSimplicial,
                        "image of facet " + complex.format(facet) + " is not a facet");
    }
    return Involution(complex, std::move(image));
}

Involution Involution::from_pairs(const Complex& complex,
                                  const std::vector<std::pair<std::string, std::string>>& pairs)
{
    std::vector<VertexId> image(complex.num_vertices());
    std::vector<char> assigned(image.size(), 0);
    for (VertexId v = 0; v < image.size(); ++v)
        image[v] = v;
    for (const auto& [a, b] : pairs) {
        const VertexId v = complex.id(a);
        const VertexId w = complex.id(b);
        if ((assigned[v] && image[v] != w) || (assigned[w] && image[w] != v))
            throw Error(ErrorCode::NotOrderTwo, "conflicting images for " + a + " / " + b);
        image[v] = w;
        image[w] = v;
        assigned[v] = assigned[w] = 1;
    }
    return build(complex, std::move(image));
}

Simplex Involution::apply(const Simplex& s) const
{
    Simplex out;
    out.reserve(s.size());
    for (VertexId v : s)
        out.push_back(image_[v]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<VertexId, VertexId>> Involution::orbit_pairs() const
{
    std::vector<std::pair<VertexId, VertexId>> out;
    for (VertexId v = 0; v < image_.size(); ++v)
        if (v < image_[v])
            out.emplace_back(v, image_[v]);
    return out;
}

FreenessReport is_free(const Involution& a)
{
    FreenessReport report;
    const auto& complex = a.complex();
    for (VertexId v = 0; v < complex.num_vertices(); ++v)
        if (a(v) == v)
            report.fixed_vertices.push_back(v);
    for (int k = 1; k <= complex.dimension() && !report.fixed_simplex; ++k) {
        for (const auto& s : complex.faces(k)) {
            if (a.apply(s) == s) {
                report.fixed_simplex = s;
                break;
            }
        }
    }
    report.is_free = report.fixed_vertices.empty() && !report.fixed_simplex;
    return report;
}

Involution lift_involution(const Involution& a, const Subdivision& sd)
{
    std::vector<VertexId> image(sd.carrier.size());
    for (VertexId v = 0; v < image.size(); ++v)
        image[v] = sd.vertex_of_face.at(a.apply(sd.carrier[v]));
    return Involution::build(sd.complex, std::move(image));
}

AntipodalSphere crosspolytope_boundary(int n)
{
    if (n < 1 || n > 20)
        throw Error(ErrorCode::InvalidArgument, "crosspolytope dimension out of range");
    std::vector<std::string> names;
    for (int k = 1; k <= n; ++k) {
        names.push_back("+" + std::to_string(k));
        names.push_back("-" + std::to_string(k));
    }
    std::vector<Simplex> facets;
    for (std::uint32_t signs = 0; signs < (1u << n); ++signs) {
        Simplex facet;
        for (int k = 0; k < n; ++k)
            facet.push_back(static_cast<VertexId>(2 * k + ((signs >> k) & 1u)));
        facets.push_back(std::move(facet));
    }
    auto complex = Complex::from_indexed(n - 1, std::move(names), std::move(facets));
    std::vector<VertexId> image(complex.num_vertices());
    for (VertexId v = 0; v < image.size(); ++v)
        image[v] = v ^ 1u;
    auto involution = Involution::build(complex, std::move(image));
    return {std::move(complex), std::move(involution)};
}

namespace {

struct BoundaryData {
    std::vector<char> on_boundary;  // indexed by vertex of M
    std::set<Simplex> faces;        // boundary simplices in ids of M
};

BoundaryData boundary_data(const Complex& m)
{
    BoundaryData out;
    out.on_boundary.assign(m.num_vertices(), 0);
    for (const auto& [ridge, owners] : m.ridge_incidence()) {
        if (owners.size() != 1)
            continue;
        const std::size_t n = ridge.size();
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
            Simplex face;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (std::uint64_t{1} << i))
                    face.push_back(ridge[i]);
            out.faces.insert(std::move(face));
        }
        for (VertexId v : ridge)
            out.on_boundary[v] = 1;
    }
    return out;
}

} // namespace

std::vector<Simplex> boundary_chords(const Complex& m)
{
    const auto boundary = boundary_data(m);
    std::set<Simplex> chords;
    std::vector<Simplex> minimal;
    for (int k = 1; k <= m.dimension(); ++k) {
        for (const auto& s : m.faces(k)) {
            bool spanned = std::all_of(s.begin(), s.end(), [&](VertexId v) { return boundary.on_boundary[v]; });
            if (!spanned || boundary.faces.count(s))
                continue;
            chords.insert(s);
            bool is_minimal = true;
            for (std::size_t skip = 0; skip < s.size() && is_minimal; ++skip) {
                Simplex face;
                for (std::size_t j = 0; j < s.size(); ++j)
                    if (j != skip)
                        face.push_back(s[j]);
                if (chords.count(face))
                    is_minimal = false;
            }
            if (is_minimal)
                minimal.push_back(s);
        }
    }
    return minimal;
}

FullBoundaryRefinement make_boundary_full(const Complex& m)
{
    FullBoundaryRefinement out;
    out.complex = m;
    out.original_vertices = m.num_vertices();
    for (;;) {
        auto chords = boundary_chords(out.complex);
        if (chords.empty())
            break;
        const Simplex& chord = chords.front();
        std::string name = "s(";
        for (std::size_t i = 0; i < chord.size(); ++i)
            name += (i ? "," : "") + out.complex.name(chord[i]);
        name += ")";
        while (out.complex.find(name))
            name += "'";
        out.complex = stellar_subdivision(out.complex, chord, name);
        out.carriers.push_back(chord);
    }
    return out;
}

DoublingResult double_complex(const Complex& m, const Involution& boundary_involution)
{
    const auto check = manifold_check(m);
    if (!check.is_pseudomanifold_with_boundary || check.boundary_ridges.empty())
        throw Error(ErrorCode::NotManifoldWithBoundary, "input is not a pseudomanifold with nonempty boundary");
    const Complex boundary = boundary_complex(m);
    if (!boundary_involution.complex().same_as(boundary))
        throw Error(ErrorCode::NotManifoldWithBoundary, "involution does not act on the boundary of the input");
    if (!is_free(boundary_involution).is_free)
        throw Error(ErrorCode::BoundaryInvolutionNotFree, "boundary involution has a fixed simplex");
    if (auto chords = boundary_chords(m); !chords.empty())
        throw Error(ErrorCode::BoundaryNotFull,
                    "simplex " + m.format(chords.front()) + " is spanned by boundary vertices but is interior");

    const auto& bc = boundary_involution.complex();
    std::vector<char> on_boundary(m.num_vertices(), 0);
    std::vector<VertexId> a_in_m(m.num_vertices());
    for (VertexId w = 0; w < bc.num_vertices(); ++w) {
        const VertexId v = m.id(bc.name(w));
        on_boundary[v] = 1;
        a_in_m[v] = m.id(bc.name(boundary_involution(w)));
    }

    DoublingResult out;
    std::vector<std::string> names;
    out.inclusion.resize(m.num_vertices());
    for (VertexId v = 0; v < m.num_vertices(); ++v) {
        out.inclusion[v] = static_cast<VertexId>(names.size());
        names.push_back(on_boundary[v] ? m.name(v) : m.name(v) + "+");
    }
    std::vector<VertexId> minus(m.num_vertices(), 0);
    for (VertexId v = 0; v < m.num_vertices(); ++v) {
        if (!on_boundary[v]) {
            minus[v] = static_cast<VertexId>(names.size());
            names.push_back(m.name(v) + "-");
        }
    }
    out.mirror.resize(m.num_vertices());
    for (VertexId v = 0; v < m.num_vertices(); ++v)
        out.mirror[v] = on_boundary[v] ? out.inclusion[a_in_m[v]] : minus[v];

    std::vector<Simplex> facets;
    facets.reserve(2 * m.facets().size());
    for (const auto& facet : m.facets()) {
        Simplex upper;
        Simplex lower;
        for (VertexId v : facet) {
            upper.push_back(out.inclusion[v]);
            lower.push_back(out.mirror[v]);
        }
        facets.push_back(std::move(upper));
        facets.push_back(std::move(lower));
    }
    const std::size_t total = names.size();
    out.doubled = Complex::from_indexed(m.dimension(), std::move(names), std::move(facets));

    std::vector<VertexId> image(total);
    for (VertexId v = 0; v < m.num_vertices(); ++v) {
        image[out.inclusion[v]] = out.mirror[v];
        if (!on_boundary[v])
            image[minus[v]] = out.inclusion[v];
    }
    out.involution = Involution::build(out.doubled, std::move(image));

    out.boundary_inclusion.resize(bc.num_vertices());
    for (VertexId w = 0; w < bc.num_vertices(); ++w)
        out.boundary_inclusion[w] = out.inclusion[m.id(bc.name(w))];
    return out;
}

CrosspolytopeEmbedding crosspolytope_embedding(const Complex& x, const Involution& a)
{
    const Complex& y = a.complex();
    std::vector<VertexId> y_in_x;
    try {
        y_in_x = map_by_name(y, x);
    } catch (const Error&) {
        throw Error(ErrorCode::InvalidArgument, "involution acts on vertices outside the complex");
    }
    std::vector<char> in_y(x.num_vertices(), 0);
    for (VertexId v : y_in_x)
        in_y[v] = 1;

    // Y must be a full subcomplex: faces of X spanned by Y-vertices are faces of Y, and conversely.
    for (int k = 0; k <= y.dimension() && !y.empty(); ++k) {
        for (const auto& s : y.faces(k)) {
            Simplex mapped;
            for (VertexId v : s)
                mapped.push_back(y_in_x[v]);
            std::sort(mapped.begin(), mapped.end());
            if (!x.contains(mapped))
                throw Error(ErrorCode::InvalidArgument, "subcomplex simplex " + y.format(s) + " is not in the complex");
        }
    }
    for (int k = 1; k <= x.dimension(); ++k) {
        for (const auto& s : x.faces(k)) {
            if (!std::all_of(s.begin(), s.end(), [&](VertexId v) { return in_y[v]; }))
                continue;
            Simplex mapped;
            for (VertexId v : s)
                mapped.push_back(y.id(x.name(v)));
            std::sort(mapped.begin(), mapped.end());
            if (!y.contains(mapped))
                throw Error(ErrorCode::InvalidArgument, "subcomplex is not full: " + x.format(s));
        }
    }
    if (!is_free(a).is_free)
        throw Error(ErrorCode::InvolutionNotFree, "involution on the subcomplex is not free");

    CrosspolytopeEmbedding out;
    const auto pairs = a.orbit_pairs();
    out.pairs = static_cast<int>(pairs.size());
    const std::size_t off_y = x.num_vertices() - y.num_vertices();
    out.ambient = out.pairs + static_cast<int>(off_y);
    out.coordinates.assign(x.num_vertices(), std::vector<int>(static_cast<std::size_t>(out.ambient), 0));
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        out.coordinates[y_in_x[pairs[k].first]][k] = 1;
        out.coordinates[y_in_x[pairs[k].second]][k] = -1;
    }
    std::size_t next = pairs.size();
    for (VertexId v = 0; v < x.num_vertices(); ++v)
        if (!in_y[v])
            out.coordinates[v][next++] = 1;

    out.antipodal_on_subcomplex = true;
    for (VertexId w = 0; w < y.num_vertices(); ++w) {
        const auto& p = out.coordinates[y_in_x[w]];
        const auto& q = out.coordinates[y_in_x[a(w)]];
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i] != -q[i])
                out.antipodal_on_subcomplex = false;
    }
    out.positive_off_subcomplex = true;
    for (VertexId v = 0; v < x.num_vertices(); ++v) {
        if (in_y[v])
            continue;
        int sum = 0;
        for (std::size_t i = pairs.size(); i < out.coordinates[v].size(); ++i)
            sum += out.coordinates[v][i];
        if (sum <= 0)
            out.positive_off_subcomplex = false;
    }
    std::set<std::vector<int>> distinct(out.coordinates.begin(), out.coordinates.end());
    out.injective = distinct.size() == out.coordinates.size();

    out.no_antipodal_simplex = true;
    for (const auto& e : x.edges()) {
        if (in_y[e[0]] && in_y[e[1]]) {
            const VertexId u = y.id(x.name(e[0]));
            if (y_in_x[a(u)] == e[1])
                out.no_antipodal_simplex = false;
        }
    }
    return out;
}

} // namespace bulab
