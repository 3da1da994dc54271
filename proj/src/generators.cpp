#include "bulab/generators.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>

#include "bulab/error.hpp"

namespace bulab {

Layout lift_layout(const Layout& layout, const Complex& base, const Subdivision& sd)
{
    Layout out;
    for (VertexId v = 0; v < sd.carrier.size(); ++v) {
        Point p;
        for (VertexId w : sd.carrier[v]) {
            auto it = layout.find(base.name(w));
            if (it == layout.end())
                return {};
            p.x += it->second.x;
            p.y += it->second.y;
        }
        const double n = static_cast<double>(sd.carrier[v].size());
        out[sd.complex.name(v)] = {p.x / n, p.y / n};
    }
    return out;
}

AntipodalSphere crosspolytope_sphere(int d)
{
    if (d < 1)
        throw Error(ErrorCode::InvalidArgument, "crosspolytope sphere needs d >= 1");
    return crosspolytope_boundary(d + 1);
}

Labelling identity_labelling(const AntipodalSphere& sphere)
{
    std::vector<int> labels(sphere.complex.num_vertices());
    for (VertexId v = 0; v < labels.size(); ++v)
        labels[v] = std::stoi(sphere.complex.name(v));
    return Labelling::build(sphere.complex, std::move(labels));
}

Layout crosspolytope_layout(int d)
{
    Layout out;
    if (d == 1) {
        out["+1"] = {100, 0};
        out["+2"] = {0, 100};
        out["-1"] = {-100, 0};
        out["-2"] = {0, -100};
    } else if (d == 2) {
        // Outer facet {+1,+2,+3}; each -k sits opposite +k, between the other two.
        const double outer = 200;
        const double inner = 60;
        for (int k = 1; k <= 3; ++k) {
            const double angle = std::numbers::pi / 2 + 2 * std::numbers::pi * (k - 1) / 3;
            out["+" + std::to_string(k)] = {outer * std::cos(angle), outer * std::sin(angle)};
            out["-" + std::to_string(k)] = {-inner * std::cos(angle), -inner * std::sin(angle)};
        }
    }
    return out;
}

BoundedFixture fig2_grid()
{
    constexpr int size = 4;
    auto name = [](int col, int row) { return "x" + std::to_string(col) + "y" + std::to_string(row); };
    auto id = [](int col, int row) { return static_cast<VertexId>(col * size + row); };

    std::vector<std::string> names;
    for (int col = 0; col < size; ++col)
        for (int row = 0; row < size; ++row)
            names.push_back(name(col, row));

    std::vector<Simplex> facets;
    for (int col = 0; col + 1 < size; ++col) {
        for (int row = 0; row + 1 < size; ++row) {
            const VertexId bl = id(col, row);
            const VertexId br = id(col + 1, row);
            const VertexId tr = id(col + 1, row + 1);
            const VertexId tl = id(col, row + 1);
            facets.push_back({bl, br, tr});
            facets.push_back({bl, tr, tl});
        }
    }
    BoundedFixture out;
    out.complex = Complex::from_indexed(2, names, std::move(facets));

    const Complex boundary = boundary_complex(out.complex);
    std::vector<std::pair<std::string, std::string>> pairs;
    for (int col = 0; col < size; ++col)
        for (int row = 0; row < size; ++row)
            if (col == 0 || row == 0 || col == size - 1 || row == size - 1)
                pairs.emplace_back(name(col, row), name(size - 1 - col, size - 1 - row));
    out.boundary_involution = Involution::from_pairs(boundary, pairs);

    // Columns left to right, entries bottom to top.
    const int labels[size][size] = {{2, 1, 3, -1}, {3, 3, 1, 2}, {-2, -1, -2, -3}, {1, -3, -1, -2}};
    std::vector<int> values(names.size());
    for (int col = 0; col < size; ++col)
        for (int row = 0; row < size; ++row)
            values[id(col, row)] = labels[col][row];
    out.labelling = Labelling::build(out.complex, std::move(values));

    for (int col = 0; col < size; ++col)
        for (int row = 0; row < size; ++row)
            out.layout[name(col, row)] = {60.0 * col, 40.0 * row};
    return out;
}

BoundedFixture disk(int k)
{
    if (k < 2)
        throw Error(ErrorCode::InvalidArgument, "disk needs k >= 2");
    const int rim = 2 * k;
    std::vector<std::string> names{"c"};
    for (int i = 0; i < rim; ++i)
        names.push_back("b" + std::to_string(i));
    std::vector<Simplex> facets;
    for (int i = 0; i < rim; ++i)
        facets.push_back({0, static_cast<VertexId>(1 + i), static_cast<VertexId>(1 + (i + 1) % rim)});

    BoundedFixture out;
    out.complex = Complex::from_indexed(2, names, std::move(facets));
    std::vector<std::pair<std::string, std::string>> pairs;
    for (int i = 0; i < k; ++i)
        pairs.emplace_back("b" + std::to_string(i), "b" + std::to_string(i + k));
    out.boundary_involution = Involution::from_pairs(boundary_complex(out.complex), pairs);

    out.layout["c"] = {0, 0};
    for (int i = 0; i < rim; ++i) {
        const double angle = 2 * std::numbers::pi * i / rim;
        out.layout["b" + std::to_string(i)] = {100 * std::cos(angle), 100 * std::sin(angle)};
    }
    return out;
}

BoundedFixture punctured_torus(int n)
{
    if (n < 3)
        throw Error(ErrorCode::InvalidArgument, "torus grid needs n >= 3");
    auto name = [](int i, int j) { return "t" + std::to_string(i) + "_" + std::to_string(j); };
    auto id = [n](int i, int j) { return static_cast<VertexId>(((i % n) * n) + (j % n)); };

    std::vector<std::string> names;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            names.push_back(name(i, j));
    std::vector<Simplex> facets;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == 0 && j == 0)
                continue; // the removed cell
            facets.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
            facets.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
        }
    }
    BoundedFixture out;
    out.complex = Complex::from_indexed(2, names, std::move(facets));
    out.boundary_involution = Involution::from_pairs(boundary_complex(out.complex),
                                                     {{name(0, 0), name(1, 1)}, {name(1, 0), name(0, 1)}});
    return out;
}

DoublingResult genus2_surface()
{
    const auto torus = punctured_torus();
    return double_complex(torus.complex, torus.boundary_involution);
}

RefinedSphere refine(const Complex& complex, const Involution& a, int depth)
{
    RefinedSphere out{complex, a};
    for (int i = 0; i < depth; ++i) {
        const auto sd = barycentric_subdivision(out.complex);
        out.involution = lift_involution(out.involution, sd);
        out.complex = sd.complex;
    }
    return out;
}

namespace {

int label_of_index(int index) { return (index / 2 + 1) * (index % 2 ? -1 : 1); }
int index_of_label(int label) { return 2 * (std::abs(label) - 1) + (label < 0 ? 1 : 0); }

void require_no_fixed_vertex(const Involution& a)
{
    for (VertexId v = 0; v < a.image().size(); ++v)
        if (a(v) == v)
            throw Error(ErrorCode::InvalidArgument, "involution fixes vertex " + a.complex().name(v));
}

} // namespace

Labelling random_antipodal_labelling(const Involution& a, int n, std::uint64_t seed)
{
    if (n < 1)
        throw Error(ErrorCode::InvalidArgument, "alphabet size must be positive");
    require_no_fixed_vertex(a);
    std::mt19937_64 rng(seed);
    std::vector<int> labels(a.image().size(), 0);
    for (const auto& [v, w] : a.orbit_pairs()) {
        const int label = label_of_index(static_cast<int>(rng() % static_cast<std::uint64_t>(2 * n)));
        labels[v] = label;
        labels[w] = -label;
    }
    return Labelling::build(a.complex(), std::move(labels));
}

namespace {

class ComplementaryFreeSearch {
public:
    ComplementaryFreeSearch(const Involution& a, int n, std::uint64_t seed, std::uint64_t budget)
        : a_(a), n_(n), budget_(budget), rng_(seed)
    {
        const auto pairs = a.orbit_pairs();
        const std::size_t vertices = a.image().size();
        orbit_.assign(vertices, 0);
        sign_.assign(vertices, 1);
        for (std::size_t o = 0; o < pairs.size(); ++o) {
            orbit_[pairs[o].first] = o;
            orbit_[pairs[o].second] = o;
            sign_[pairs[o].second] = -1;
        }
        const std::size_t orbits = pairs.size();
        constraints_.resize(orbits);
        for (const auto& e : a.complex().edges()) {
            const std::size_t p = orbit_[e[0]];
            const std::size_t q = orbit_[e[1]];
            // L(u) != -L(v) with L(u) = s_u l_p, L(v) = s_v l_q, i.e. l_q != -(s_u s_v) l_p.
            const int factor = -sign_[e[0]] * sign_[e[1]];
            constraints_[p].push_back({q, factor});
            constraints_[q].push_back({p, factor});
        }
        const std::uint64_t all = (2 * n_ >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (2 * n_)) - 1);
        domain_.assign(orbits, all);
        value_.assign(orbits, 0);
        priority_.resize(orbits);
        for (std::size_t o = 0; o < orbits; ++o)
            priority_[o] = rng_();
        order_.resize(orbits);
        for (auto& order : order_) {
            order.resize(static_cast<std::size_t>(2 * n_));
            for (int i = 0; i < 2 * n_; ++i)
                order[static_cast<std::size_t>(i)] = i;
            std::shuffle(order.begin(), order.end(), rng_);
        }
    }

    SearchResult run()
    {
        SearchResult result;
        const bool found = descend(0);
        result.steps = steps_;
        if (found) {
            std::vector<int> labels(a_.image().size());
            for (VertexId v = 0; v < labels.size(); ++v)
                labels[v] = sign_[v] * value_[orbit_[v]];
            result.status = SearchStatus::Found;
            result.labelling = Labelling::build(a_.complex(), std::move(labels));
        } else {
            result.status = out_of_budget_ ? SearchStatus::BudgetExceeded : SearchStatus::Exhausted;
        }
        return result;
    }

private:
    struct Constraint {
        std::size_t other;
        int factor;
    };

    bool descend(std::size_t assigned)
    {
        if (assigned == value_.size())
            return true;
        // Most constrained unassigned orbit; seeded priority breaks ties.
        std::size_t pick = value_.size();
        int best = 1 << 30;
        for (std::size_t o = 0; o < value_.size(); ++o) {
            if (value_[o] != 0)
                continue;
            const int options = std::popcount(domain_[o]);
            if (options < best || (options == best && priority_[o] < priority_[pick])) {
                best = options;
                pick = o;
            }
        }
        if (best == 0)
            return false;

        for (int index : order_[pick]) {
            if (!((domain_[pick] >> index) & 1u))
                continue;
            if (budget_ != 0 && steps_ >= budget_) {
                out_of_budget_ = true;
                return false;
            }
            ++steps_;
            const int label = label_of_index(index);
            value_[pick] = label;
            std::vector<std::pair<std::size_t, std::uint64_t>> trail;
            bool dead = false;
            for (const auto& c : constraints_[pick]) {
                if (value_[c.other] != 0) {
                    if (value_[c.other] == c.factor * label)
                        dead = true;
                    continue;
                }
                const std::uint64_t bit = std::uint64_t{1} << index_of_label(c.factor * label);
                if (domain_[c.other] & bit) {
                    trail.emplace_back(c.other, domain_[c.other]);
                    domain_[c.other] &= ~bit;
                    if (domain_[c.other] == 0)
                        dead = true;
                }
            }
            if (!dead && descend(assigned + 1))
                return true;
            for (auto it = trail.rbegin(); it != trail.rend(); ++it)
                domain_[it->first] = it->second;
            value_[pick] = 0;
            if (out_of_budget_)
                return false;
        }
        return false;
    }

    const Involution& a_;
    int n_;
    std::uint64_t budget_;
    std::mt19937_64 rng_;
    std::vector<std::size_t> orbit_;
    std::vector<int> sign_;
    std::vector<std::vector<Constraint>> constraints_;
    std::vector<std::uint64_t> domain_;
    std::vector<int> value_;
    std::vector<std::uint64_t> priority_;
    std::vector<std::vector<int>> order_;
    std::uint64_t steps_ = 0;
    bool out_of_budget_ = false;
};

} // namespace

SearchResult search_complementary_free(const Involution& a, int n, std::uint64_t seed, std::uint64_t budget)
{
    if (n < 1 || n > 32)
        throw Error(ErrorCode::InvalidArgument, "alphabet size must be in 1..32");
    if (!is_free(a).is_free)
        throw Error(ErrorCode::InvalidArgument, "search needs a free involution");
    return ComplementaryFreeSearch(a, n, seed, budget).run();
}

void GeneratorSpec::validate() const
{
    switch (kind) {
    case GeneratorKind::Crosspolytope:
        if (dimension < 1 || dimension > 8)
            throw Error(ErrorCode::InvalidArgument, "crosspolytope dimension must be in 1..8");
        break;
    case GeneratorKind::Disk:
        if (k < 2 || k > 1000)
            throw Error(ErrorCode::InvalidArgument, "disk k must be in 2..1000");
        break;
    case GeneratorKind::PuncturedTorus:
        if (size < 3 || size > 100)
            throw Error(ErrorCode::InvalidArgument, "torus size must be in 3..100");
        break;
    case GeneratorKind::Fig2:
    case GeneratorKind::Genus2:
        break;
    }
    if (refine < 0 || refine > 4)
        throw Error(ErrorCode::InvalidArgument, "refinement depth must be in 0..4");
    const bool closed = kind == GeneratorKind::Crosspolytope || kind == GeneratorKind::Genus2;
    if (refine > 0 && !closed)
        throw Error(ErrorCode::InvalidArgument, "refinement is only offered for closed generators");
}

GeneratorKind parse_generator_kind(const std::string& text)
{
    if (text == "crosspolytope")
        return GeneratorKind::Crosspolytope;
    if (text == "fig2")
        return GeneratorKind::Fig2;
    if (text == "disk")
        return GeneratorKind::Disk;
    if (text == "punctured-torus")
        return GeneratorKind::PuncturedTorus;
    if (text == "genus2")
        return GeneratorKind::Genus2;
    throw Error(ErrorCode::InvalidArgument, "unknown generator '" + text + "'");
}

Generated generate(const GeneratorSpec& spec)
{
    spec.validate();
    Generated out;
    auto take_bounded = [&](BoundedFixture f) {
        out.complex = std::move(f.complex);
        out.involution = std::move(f.boundary_involution);
        out.involution_on_boundary = true;
        out.labelling = std::move(f.labelling);
        out.layout = std::move(f.layout);
    };
    switch (spec.kind) {
    case GeneratorKind::Crosspolytope: {
        auto sphere = crosspolytope_sphere(spec.dimension);
        out.labelling = identity_labelling(sphere);
        out.layout = crosspolytope_layout(spec.dimension);
        out.complex = sphere.complex;
        out.involution = sphere.involution;
        break;
    }
    case GeneratorKind::Fig2:
        take_bounded(fig2_grid());
        break;
    case GeneratorKind::Disk:
        take_bounded(disk(spec.k));
        break;
    case GeneratorKind::PuncturedTorus:
        take_bounded(punctured_torus(spec.size));
        break;
    case GeneratorKind::Genus2: {
        auto g = genus2_surface();
        out.complex = g.doubled;
        out.involution = g.involution;
        break;
    }
    }
    for (int i = 0; i < spec.refine; ++i) {
        const auto sd = barycentric_subdivision(out.complex);
        out.involution = lift_involution(out.involution, sd);
        if (out.labelling)
            out.labelling = lift_labelling(*out.labelling, sd);
        if (!out.layout.empty())
            out.layout = lift_layout(out.layout, out.complex, sd);
        out.complex = sd.complex;
    }
    return out;
}

} // namespace bulab
