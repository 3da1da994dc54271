/**
 * Antipodal labellings and the Tucker / Shashkin / Ky Fan verifiers.
 *
 * Labels live in Pi_n = {+1, -1, ..., +n, -n}. A labelling without
 * complementary edges (no edge labelled +k, -k) induces a simplicial map into
 * the boundary of the n-dimensional crosspolytope, and the verifiers here
 * count fully labelled facets against that picture.
 */
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bulab/complex.hpp"
#include "bulab/degree.hpp"
#include "bulab/symmetry.hpp"

namespace bulab {

struct LabelAlphabet {
    int n = 1;

    bool contains(int label) const { return label != 0 && label >= -n && label <= n; }
    /// +1, -1, +2, -2, ...
    std::vector<int> labels() const;
};

class Labelling {
public:
    Labelling() = default;

    /// Throws LabelOutOfRange on a zero label.
    static Labelling build(const Complex& complex, std::vector<int> labels);
    /// Every vertex must be labelled exactly once (InvalidArgument otherwise).
    static Labelling from_pairs(const Complex& complex, const std::vector<std::pair<std::string, int>>& pairs);

    const Complex& complex() const { return complex_; }
    int operator[](VertexId v) const { return labels_[v]; }
    const std::vector<int>& values() const { return labels_; }
    int max_abs() const;

private:
    Labelling(Complex complex, std::vector<int> labels) : complex_(std::move(complex)), labels_(std::move(labels)) {}

    Complex complex_;
    std::vector<int> labels_;
};

/// One label per absolute value: labels[i] is +(i+1) or -(i+1).
class Signature {
public:
    /// Bit i of `negative_mask` set means the label of absolute value i+1 is negative.
    static Signature from_mask(int size, std::uint32_t negative_mask);
    /// Labels in any order; throws InvalidArgument unless the absolute values are exactly 1..size.
    static Signature from_labels(std::vector<int> labels);
    /// "1,-2,3" style.
    static Signature parse(const std::string& text);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<int>& labels() const { return labels_; }
    std::uint32_t mask() const;
    Signature negated() const;
    std::string to_string() const;

    bool operator==(const Signature&) const = default;

private:
    explicit Signature(std::vector<int> labels) : labels_(std::move(labels)) {}
    std::vector<int> labels_;
};

struct LabelAntipodality {
    bool antipodal = true;
    std::optional<VertexId> witness; // vertex of the labelled complex
};

/// L(A(v)) = -L(v) for every vertex.
LabelAntipodality is_antipodal_labelling(const Labelling& l, const Involution& a);
/// Same, checked only on the vertices of the boundary complex `a` acts on (matched by name).
LabelAntipodality is_boundary_antipodal(const Labelling& l, const Involution& boundary_involution);

/// All edges {u, v} with L(u) = -L(v), in sorted edge order.
std::vector<Simplex> complementary_edges(const Labelling& l);

struct TuckerResult {
    std::optional<Simplex> edge;
    std::size_t complementary_count = 0;
    /// Filled when no complementary edge exists: the input is not of Borsuk-Ulam type, or something is wrong.
    std::string counterexample;
};

/**
 * Closed case: A a free involution of T, L antipodal with values in Pi_d.
 * Throws LabelOutOfRange, or PreconditionViolated when A is not free or L is
 * not antipodal.
 */
TuckerResult verify_tucker(const Labelling& l, const Involution& a);
/// With-boundary case: A a free involution of the boundary, L antipodal on the boundary, values in Pi_d.
TuckerResult verify_tucker_with_boundary(const Labelling& l, const Involution& boundary_involution);

/// f_L into the boundary of C^n: vertex labelled +k goes to "+k", -k to "-k".
struct InducedMap {
    SimplicialMap map;
    AntipodalSphere target;
};
/// Throws ComplementaryEdgePresent or LabelOutOfRange.
InducedMap induced_map(const Labelling& l, int n);

/**
 * Facet counts for every signature of size d+1 in one pass, indexed by mask.
 * Facets whose labels repeat an absolute value or leave Pi_{d+1} count for nothing.
 */
std::vector<long long> signature_table(const Labelling& l);

/// Number of facets labelled exactly by the signature. Throws SignatureDimensionMismatch.
long long count_signature(const Labelling& l, const Signature& s);
/// Facets labelled by s or by -s.
long long count_signature_pair(const Labelling& l, const Signature& s);

struct AlternatingCount {
    /// Increasing absolute values k_0 < ... < k_d -> facets labelled +k_0, -k_1, +k_2, ...
    std::map<std::vector<int>, long long> per_sequence;
    long long total = 0;
    bool total_odd = false;
    bool alphabet_large_enough = false; // n >= d + 1
};

AlternatingCount count_alternating(const Labelling& l, int n);

struct SignatureRow {
    Signature signature;
    long long count = 0;
};

struct ShashkinReport {
    bool closed = true;
    /// Closed: all 2^{d+1} signatures. Boundary: the 2^d classes {s, -s} with +1 first.
    std::vector<SignatureRow> rows;
    std::vector<Simplex> complementary;
    bool all_odd = false;
    std::optional<DegreeReport> degree;     // closed case only
    bool parity_matches_degree = false;     // closed case only
    /// No complementary edges, every count odd, and (closed case) parity equal to deg2(f_L).
    bool holds = false;
};

/**
 * Closed case: A free on T, L antipodal into Pi_{d+1}. Reports every
 * signature count and cross-checks their parity with deg2(f_L).
 */
ShashkinReport shashkin_report(const Labelling& l, const Involution& a);
/// With-boundary case: pair counts over the boundary-antipodal labelling.
ShashkinReport shashkin_report_with_boundary(const Labelling& l, const Involution& boundary_involution);

/// Labels sd(T): the barycentre of s takes the label of largest absolute value on s
/// (positive on a tie). Preserves antipodality and the absence of complementary edges.
Labelling lift_labelling(const Labelling& l, const Subdivision& sd);

/// Extends L over the vertices added by make_boundary_full: each new vertex
/// copies the label of the first vertex of its carrier. Signature counts are unchanged.
Labelling extend_labelling(const Labelling& l, const FullBoundaryRefinement& refinement);

/// L on the original copy and -L on the mirrored one. Requires L antipodal on the boundary.
Labelling double_labelling(const Labelling& l, const DoublingResult& doubled, const Involution& boundary_involution);

} // namespace bulab
