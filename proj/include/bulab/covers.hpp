/**
 * Closed covers of a triangulation.
 *
 * A closed set is the full subcomplex spanned by a vertex subset: a simplex
 * belongs to it iff all its vertices do. A family covers the triangulation
 * when every facet lies in some member; covering the vertices is not enough.
 */
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bulab/complex.hpp"
#include "bulab/labels.hpp"
#include "bulab/symmetry.hpp"

namespace bulab {

class ClosedSet {
public:
    ClosedSet() = default;
    ClosedSet(std::string name, std::vector<char> members) : name_(std::move(name)), members_(std::move(members)) {}

    static ClosedSet from_names(const Complex& complex, std::string name, const std::vector<std::string>& vertices);
    static ClosedSet from_ids(const Complex& complex, std::string name, const std::vector<VertexId>& vertices);

    const std::string& name() const { return name_; }
    bool contains(VertexId v) const { return members_[v] != 0; }
    bool contains(const Simplex& s) const;
    std::size_t size() const;
    std::size_t universe() const { return members_.size(); }
    std::vector<VertexId> vertices() const;
    const std::vector<char>& members() const { return members_; }

    ClosedSet image(const Involution& a, std::string name) const;
    ClosedSet intersect(const ClosedSet& other, std::string name) const;
    ClosedSet unite(const ClosedSet& other, std::string name) const;
    bool disjoint(const ClosedSet& other) const;

private:
    std::string name_;
    std::vector<char> members_;
};

/// A general family as read from a cover file. `pairs` are indices into `sets`.
struct Cover {
    Complex complex;
    std::vector<ClosedSet> sets;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

/// B_i = positive[i-1], B_{-i} = negative[i-1].
struct PairedCover {
    Complex complex;
    std::vector<ClosedSet> positive;
    std::vector<ClosedSet> negative;

    int size() const { return static_cast<int>(positive.size()); }
    /// Set for a signed index +i / -i.
    const ClosedSet& at(int signed_index) const;
    std::vector<ClosedSet> members() const;
};

/// Uses the declared pairs, in order, as B_1, B_2, ... Throws InvalidArgument without pairs.
PairedCover paired_view(const Cover& cover);
Cover to_cover(const PairedCover& paired);

struct CoverCheck {
    bool covers = false;
    std::optional<Simplex> uncovered_facet;
};

CoverCheck verify_cover(const Complex& complex, const std::vector<ClosedSet>& sets);

/// S and A(S) share no vertex.
bool antipodal_pair_free(const ClosedSet& set, const Involution& a);

/// B_{-i} = A(B_i) vertex by vertex, for every i.
bool is_paired_by(const PairedCover& cover, const Involution& a);

/// B_l := L^{-1}(l) for l in Pi_n; n <= 0 means max |L|.
PairedCover cover_from_labelling(const Labelling& l, int n = 0);

/**
 * L(v) = l where v is in B_l and |l| = min{|k| : v in B_k}.
 * Throws VertexUncovered, or PreconditionViolated if some B_i meets B_{-i}.
 */
Labelling min_index_labelling(const PairedCover& cover);

struct RainbowResult {
    std::optional<Simplex> facet;
    /// For each vertex of the facet (same order), the signed set index it was matched to.
    std::vector<int> assignment;
    bool via_labelling = false;            // found by the min-index labelling, as opposed to direct matching
    std::optional<Simplex> complementary_edge;
    std::string diagnostic;
};

/**
 * A facet whose vertices lie respectively in B_{k_1}, ..., B_{k_{d+1}}.
 * The min-index labelling is searched first; a direct matching search over
 * all facets follows when it finds nothing. Throws
 * SignatureDimensionMismatch or PreconditionViolated (some B_i meets B_{-i}).
 */
RainbowResult find_rainbow_simplex(const PairedCover& cover, const Signature& signature);

struct FanTransform {
    PairedCover family;            // d+1 pairs with B_{-i} = A(B_i)
    bool union_covers = false;     // facet-covering sense
    std::optional<Simplex> uncovered_facet;
    bool pairs_disjoint = false;
};

/**
 * The cyclic set algebra B_i = C_i meet (C_{-(i+1)} join ... join C_{-(i+m)}
 * join C_{-(d+2)}), indices of the inner terms taken cyclically in 1..d+1,
 * m = ceil(d/2), C_{-j} = A(C_j). Takes exactly d+2 sets. Throws
 * InputNotAntipodeFree or InputNotCovering.
 */
FanTransform fan_transform(const Complex& complex, const std::vector<ClosedSet>& sets, const Involution& a);

struct FanWitness {
    int refinements = 0;
    Complex complex;                       // where the witness lives
    Involution involution;
    std::vector<ClosedSet> sets;           // the C_i on that complex, original order
    bool flipped = false;                  // k < (d+2)/2 was handled through the mirrored statement
    Simplex rainbow_facet;
    std::vector<int> rainbow_assignment;
    /// x with x in C_1..C_k and A(x) in C_{k+1}..C_{d+2}.
    VertexId vertex = 0;
    bool vertex_found_near_rainbow = false;  // otherwise found by a scan of every vertex
};

/**
 * Runs the transform, finds the rainbow facet for (B_1..B_k', B_{-(k'+1)}..B_{-(d+1)})
 * and reads off a vertex x in C_1..C_k with A(x) in C_{k+1}..C_{d+2}.
 * Refines (barycentric subdivision, lifted sets) up to `max_refine` times
 * while the transform fails to cover or no rainbow facet exists. Throws
 * InvalidArgument for k outside (0, d+2), the transform's errors, or
 * NoWitnessAtThisResolution.
 */
FanWitness verify_fan_cover_theorem(const Complex& complex, const Involution& a, const std::vector<ClosedSet>& sets,
                                    int k, int max_refine = 2);

/// True iff x in C_1..C_k and A(x) in C_{k+1}..C_{d+2}.
bool is_fan_witness(const std::vector<ClosedSet>& sets, const Involution& a, int k, VertexId x);

struct LsReport {
    bool violation = false;                 // the family covers: a counterexample
    std::optional<Simplex> uncovered_facet;
};

/// d+1 antipode-free sets must not cover. Throws PreconditionViolated if a set holds an antipodal pair.
LsReport ls_corollary_check(const Complex& complex, const Involution& a, const std::vector<ClosedSet>& sets);

/// The closed set on sd(T): the barycentre of s belongs iff s lies in the set.
ClosedSet lift_set(const ClosedSet& set, const Subdivision& sd);
PairedCover lift_paired_cover(const PairedCover& cover, const Subdivision& sd);

} // namespace bulab
