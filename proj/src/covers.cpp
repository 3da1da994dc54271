#include "bulab/covers.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "bulab/error.hpp"

namespace bulab {

ClosedSet ClosedSet::from_names(const Complex& complex, std::string name, const std::vector<std::string>& vertices)
{
    std::vector<char> members(complex.num_vertices(), 0);
    for (const auto& v : vertices)
        members[complex.id(v)] = 1;
    return ClosedSet(std::move(name), std::move(members));
}

ClosedSet ClosedSet::from_ids(const Complex& complex, std::string name, const std::vector<VertexId>& vertices)
{
    std::vector<char> members(complex.num_vertices(), 0);
    for (VertexId v : vertices)
        members.at(v) = 1;
    return ClosedSet(std::move(name), std::move(members));
}

bool ClosedSet::contains(const Simplex& s) const
{
    return std::all_of(s.begin(), s.end(), [&](VertexId v) { return members_[v] != 0; });
}

std::size_t ClosedSet::size() const
{
    return static_cast<std::size_t>(std::count(members_.begin(), members_.end(), 1));
}

std::vector<VertexId> ClosedSet::vertices() const
{
    std::vector<VertexId> out;
    for (VertexId v = 0; v < members_.size(); ++v)
        if (members_[v])
            out.push_back(v);
    return out;
}

ClosedSet ClosedSet::image(const Involution& a, std::string name) const
{
    std::vector<char> members(members_.size(), 0);
    for (VertexId v = 0; v < members_.size(); ++v)
        if (members_[v])
            members[a(v)] = 1;
    return ClosedSet(std::move(name), std::move(members));
}

ClosedSet ClosedSet::intersect(const ClosedSet& other, std::string name) const
{
    std::vector<char> members(members_.size(), 0);
    for (std::size_t v = 0; v < members.size(); ++v)
        members[v] = members_[v] && other.members_[v];
    return ClosedSet(std::move(name), std::move(members));
}

ClosedSet ClosedSet::unite(const ClosedSet& other, std::string name) const
{
    std::vector<char> members(members_.size(), 0);
    for (std::size_t v = 0; v < members.size(); ++v)
        members[v] = members_[v] || other.members_[v];
    return ClosedSet(std::move(name), std::move(members));
}

bool ClosedSet::disjoint(const ClosedSet& other) const
{
    for (std::size_t v = 0; v < members_.size(); ++v)
        if (members_[v] && other.members_[v])
            return false;
    return true;
}

const ClosedSet& PairedCover::at(int signed_index) const
{
    const int i = std::abs(signed_index);
    if (i < 1 || i > size())
        throw Error(ErrorCode::InvalidArgument, "set index " + std::to_string(signed_index) + " out of range");
    return signed_index > 0 ? positive[static_cast<std::size_t>(i - 1)] : negative[static_cast<std::size_t>(i - 1)];
}

std::vector<ClosedSet> PairedCover::members() const
{
    std::vector<ClosedSet> out;
    for (int i = 0; i < size(); ++i) {
        out.push_back(positive[static_cast<std::size_t>(i)]);
        out.push_back(negative[static_cast<std::size_t>(i)]);
    }
    return out;
}

PairedCover paired_view(const Cover& cover)
{
    if (cover.pairs.empty())
        throw Error(ErrorCode::InvalidArgument, "cover declares no pairs");
    PairedCover out;
    out.complex = cover.complex;
    for (const auto& [p, n] : cover.pairs) {
        out.positive.push_back(cover.sets.at(p));
        out.negative.push_back(cover.sets.at(n));
    }
    return out;
}

Cover to_cover(const PairedCover& paired)
{
    Cover out;
    out.complex = paired.complex;
    for (int i = 0; i < paired.size(); ++i) {
        out.pairs.emplace_back(out.sets.size(), out.sets.size() + 1);
        out.sets.push_back(paired.positive[static_cast<std::size_t>(i)]);
        out.sets.push_back(paired.negative[static_cast<std::size_t>(i)]);
    }
    return out;
}

CoverCheck verify_cover(const Complex& complex, const std::vector<ClosedSet>& sets)
{
    CoverCheck out;
    for (const auto& facet : complex.facets()) {
        const bool inside = std::any_of(sets.begin(), sets.end(), [&](const ClosedSet& s) { return s.contains(facet); });
        if (!inside) {
            out.uncovered_facet = facet;
            return out;
        }
    }
    out.covers = true;
    return out;
}

bool antipodal_pair_free(const ClosedSet& set, const Involution& a)
{
    for (VertexId v = 0; v < set.universe(); ++v)
        if (set.contains(v) && set.contains(a(v)))
            return false;
    return true;
}

bool is_paired_by(const PairedCover& cover, const Involution& a)
{
    for (int i = 0; i < cover.size(); ++i) {
        const auto mirrored = cover.positive[static_cast<std::size_t>(i)].image(a, "");
        if (mirrored.members() != cover.negative[static_cast<std::size_t>(i)].members())
            return false;
    }
    return true;
}

PairedCover cover_from_labelling(const Labelling& l, int n)
{
    PairedCover out;
    out.complex = l.complex();
    if (n <= 0)
        n = l.max_abs();
    if (n < l.max_abs())
        throw Error(ErrorCode::LabelOutOfRange, "labels exceed Pi_" + std::to_string(n));
    for (int k = 1; k <= n; ++k) {
        std::vector<VertexId> pos;
        std::vector<VertexId> neg;
        for (VertexId v = 0; v < l.complex().num_vertices(); ++v) {
            if (l[v] == k)
                pos.push_back(v);
            else if (l[v] == -k)
                neg.push_back(v);
        }
        out.positive.push_back(ClosedSet::from_ids(l.complex(), "B" + std::to_string(k), pos));
        out.negative.push_back(ClosedSet::from_ids(l.complex(), "B-" + std::to_string(k), neg));
    }
    return out;
}

namespace {

void require_pairs_disjoint(const PairedCover& cover)
{
    for (int i = 1; i <= cover.size(); ++i)
        if (!cover.at(i).disjoint(cover.at(-i)))
            throw Error(ErrorCode::PreconditionViolated,
                        "sets " + cover.at(i).name() + " and " + cover.at(-i).name() + " intersect");
}

} // namespace

Labelling min_index_labelling(const PairedCover& cover)
{
    require_pairs_disjoint(cover);
    const Complex& t = cover.complex;
    std::vector<int> labels(t.num_vertices(), 0);
    for (VertexId v = 0; v < t.num_vertices(); ++v) {
        for (int i = 1; i <= cover.size() && labels[v] == 0; ++i) {
            if (cover.at(i).contains(v))
                labels[v] = i;
            else if (cover.at(-i).contains(v))
                labels[v] = -i;
        }
        if (labels[v] == 0)
            throw Error(ErrorCode::VertexUncovered, "vertex " + t.name(v) + " lies in no set");
    }
    return Labelling::build(t, std::move(labels));
}

RainbowResult find_rainbow_simplex(const PairedCover& cover, const Signature& signature)
{
    const Complex& t = cover.complex;
    if (signature.size() != t.dimension() + 1 || cover.size() != signature.size())
        throw Error(ErrorCode::SignatureDimensionMismatch,
                    "signature of size " + std::to_string(signature.size()) + " for " +
                        std::to_string(cover.size()) + " set pairs on a complex of dimension " +
                        std::to_string(t.dimension()));
    require_pairs_disjoint(cover);

    RainbowResult out;
    std::vector<int> wanted = signature.labels();
    std::sort(wanted.begin(), wanted.end());

    std::optional<Labelling> labelling;
    try {
        labelling = min_index_labelling(cover);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::VertexUncovered)
            throw;
        out.diagnostic = e.what();
    }
    if (labelling) {
        if (auto edges = complementary_edges(*labelling); !edges.empty())
            out.complementary_edge = edges.front();
        for (const auto& facet : t.facets()) {
            std::vector<int> labels;
            for (VertexId v : facet)
                labels.push_back((*labelling)[v]);
            std::vector<int> sorted = labels;
            std::sort(sorted.begin(), sorted.end());
            if (sorted == wanted) {
                out.facet = facet;
                out.assignment = labels;
                out.via_labelling = true;
                return out;
            }
        }
    }

    // Direct matching: some permutation of the signature fits the facet's vertices.
    for (const auto& facet : t.facets()) {
        std::vector<int> order = wanted;
        do {
            bool fits = true;
            for (std::size_t j = 0; j < facet.size() && fits; ++j)
                fits = cover.at(order[j]).contains(facet[j]);
            if (fits) {
                out.facet = facet;
                out.assignment = order;
                return out;
            }
        } while (std::next_permutation(order.begin(), order.end()));
    }
    if (out.diagnostic.empty())
        out.diagnostic = out.complementary_edge
                             ? "no rainbow facet; the min-index labelling has a complementary edge, refine"
                             : "no rainbow facet";
    return out;
}

FanTransform fan_transform(const Complex& complex, const std::vector<ClosedSet>& sets, const Involution& a)
{
    const int d = complex.dimension();
    if (static_cast<int>(sets.size()) != d + 2)
        throw Error(ErrorCode::InvalidArgument,
                    "expected " + std::to_string(d + 2) + " sets, got " + std::to_string(sets.size()));
    for (const auto& c : sets)
        if (!antipodal_pair_free(c, a))
            throw Error(ErrorCode::InputNotAntipodeFree, "set " + c.name() + " holds an antipodal pair");
    if (auto check = verify_cover(complex, sets); !check.covers)
        throw Error(ErrorCode::InputNotCovering, "facet " + complex.format(*check.uncovered_facet) + " is uncovered");

    const int m = (d + 1) / 2;
    const int cycle = d + 1;
    std::vector<ClosedSet> mirrored;
    for (const auto& c : sets)
        mirrored.push_back(c.image(a, "A(" + c.name() + ")"));

    FanTransform out;
    out.family.complex = complex;
    for (int i = 1; i <= cycle; ++i) {
        ClosedSet reach = mirrored[static_cast<std::size_t>(d + 1)];
        for (int step = 1; step <= m; ++step) {
            const int j = (i - 1 + step) % cycle + 1;
            reach = reach.unite(mirrored[static_cast<std::size_t>(j - 1)], "");
        }
        auto b = sets[static_cast<std::size_t>(i - 1)].intersect(reach, "B" + std::to_string(i));
        auto b_neg = b.image(a, "B-" + std::to_string(i));
        out.family.positive.push_back(std::move(b));
        out.family.negative.push_back(std::move(b_neg));
    }

    out.pairs_disjoint = true;
    for (int i = 1; i <= cycle; ++i)
        if (!out.family.at(i).disjoint(out.family.at(-i)))
            out.pairs_disjoint = false;
    const auto check = verify_cover(complex, out.family.members());
    out.union_covers = check.covers;
    out.uncovered_facet = check.uncovered_facet;
    return out;
}

bool is_fan_witness(const std::vector<ClosedSet>& sets, const Involution& a, int k, VertexId x)
{
    for (int i = 0; i < static_cast<int>(sets.size()); ++i) {
        const VertexId probe = i < k ? x : a(x);
        if (!sets[static_cast<std::size_t>(i)].contains(probe))
            return false;
    }
    return true;
}

ClosedSet lift_set(const ClosedSet& set, const Subdivision& sd)
{
    std::vector<char> members(sd.carrier.size(), 0);
    for (VertexId v = 0; v < members.size(); ++v)
        members[v] = set.contains(sd.carrier[v]) ? 1 : 0;
    return ClosedSet(set.name(), std::move(members));
}

PairedCover lift_paired_cover(const PairedCover& cover, const Subdivision& sd)
{
    PairedCover out;
    out.complex = sd.complex;
    for (int i = 0; i < cover.size(); ++i) {
        out.positive.push_back(lift_set(cover.positive[static_cast<std::size_t>(i)], sd));
        out.negative.push_back(lift_set(cover.negative[static_cast<std::size_t>(i)], sd));
    }
    return out;
}

FanWitness verify_fan_cover_theorem(const Complex& complex, const Involution& a, const std::vector<ClosedSet>& sets,
                                    int k, int max_refine)
{
    const int d = complex.dimension();
    if (k <= 0 || k >= d + 2)
        throw Error(ErrorCode::InvalidArgument, "k must satisfy 0 < k < d+2");

    FanWitness out;
    out.complex = complex;
    out.involution = a;
    out.sets = sets;
    // The statement for (C_1..C_k | C_{k+1}..C_{d+2}) is the statement for the
    // reordered family with the roles of x and A(x) exchanged.
    out.flipped = 2 * k < d + 2;
    const int k_eff = out.flipped ? d + 2 - k : k;

    for (int level = 0;; ++level) {
        std::vector<ClosedSet> ordered;
        if (out.flipped) {
            ordered.insert(ordered.end(), out.sets.begin() + k, out.sets.end());
            ordered.insert(ordered.end(), out.sets.begin(), out.sets.begin() + k);
        } else {
            ordered = out.sets;
        }

        auto transform = fan_transform(out.complex, ordered, out.involution);
        std::optional<RainbowResult> rainbow;
        if (transform.union_covers) {
            std::vector<int> labels;
            for (int i = 1; i <= d + 1; ++i)
                labels.push_back(i <= k_eff ? i : -i);
            rainbow = find_rainbow_simplex(transform.family, Signature::from_labels(labels));
        }

        if (rainbow && rainbow->facet) {
            out.refinements = level;
            out.rainbow_facet = *rainbow->facet;
            out.rainbow_assignment = rainbow->assignment;

            std::vector<VertexId> candidates;
            for (VertexId v : out.rainbow_facet) {
                candidates.push_back(v);
                candidates.push_back(out.involution(v));
            }
            for (VertexId v : out.rainbow_facet) {
                for (VertexId w : out.complex.neighbors()[v]) {
                    candidates.push_back(w);
                    candidates.push_back(out.involution(w));
                }
            }
            for (VertexId x : candidates) {
                if (is_fan_witness(out.sets, out.involution, k, x)) {
                    out.vertex = x;
                    out.vertex_found_near_rainbow = true;
                    return out;
                }
            }
        }

        if (level >= max_refine) {
            if (rainbow && rainbow->facet) {
                for (VertexId x = 0; x < out.complex.num_vertices(); ++x) {
                    if (is_fan_witness(out.sets, out.involution, k, x)) {
                        out.vertex = x;
                        out.vertex_found_near_rainbow = false;
                        return out;
                    }
                }
                throw Error(ErrorCode::NoWitnessAtThisResolution,
                            "rainbow facet " + out.complex.format(out.rainbow_facet) +
                                " found but no vertex lies in the required intersections");
            }
            throw Error(ErrorCode::NoWitnessAtThisResolution,
                        transform.union_covers ? "no rainbow facet after " + std::to_string(level) + " refinements"
                                               : "transformed family does not cover after " + std::to_string(level) +
                                                     " refinements");
        }

        const auto sd = barycentric_subdivision(out.complex);
        out.involution = lift_involution(out.involution, sd);
        for (auto& c : out.sets)
            c = lift_set(c, sd);
        out.complex = sd.complex;
    }
}

LsReport ls_corollary_check(const Complex& complex, const Involution& a, const std::vector<ClosedSet>& sets)
{
    if (static_cast<int>(sets.size()) > complex.dimension() + 1)
        throw Error(ErrorCode::InvalidArgument, "at most d+1 sets expected");
    for (const auto& c : sets)
        if (!antipodal_pair_free(c, a))
            throw Error(ErrorCode::PreconditionViolated, "set " + c.name() + " holds an antipodal pair");
    LsReport out;
    const auto check = verify_cover(complex, sets);
    out.violation = check.covers;
    out.uncovered_facet = check.uncovered_facet;
    return out;
}

} // namespace bulab
