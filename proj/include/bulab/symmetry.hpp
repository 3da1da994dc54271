#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bulab/complex.hpp"

namespace bulab {

/**
 * An order-two simplicial vertex permutation of a complex.
 *
 * Construction validates A(A(v)) = v and that A maps facets onto facets.
 * Freeness is a separate question, answered by is_free().
 */
class Involution {
public:
    Involution() = default;

    /// Throws NotOrderTwo or NotSimplicial (the message names the witness).
    static Involution build(const Complex& complex, std::vector<VertexId> image);

    /// Pairs are (v, w) meaning A(v) = w and A(w) = v. Vertices not mentioned are fixed.
    static Involution from_pairs(const Complex& complex,
                                 const std::vector<std::pair<std::string, std::string>>& pairs);

    const Complex& complex() const { return complex_; }
    VertexId operator()(VertexId v) const { return image_[v]; }
    const std::vector<VertexId>& image() const { return image_; }

    Simplex apply(const Simplex& s) const;

    /// One (v, A(v)) per orbit of size two with v < A(v), in vertex order.
    std::vector<std::pair<VertexId, VertexId>> orbit_pairs() const;

private:
    Involution(Complex complex, std::vector<VertexId> image)
        : complex_(std::move(complex)), image_(std::move(image)) {}

    Complex complex_;
    std::vector<VertexId> image_;
};

struct FreenessReport {
    bool is_free = false;
    std::vector<VertexId> fixed_vertices;
    std::optional<Simplex> fixed_simplex;
};

/// Free iff no vertex is fixed and no simplex is mapped onto itself as a set.
FreenessReport is_free(const Involution& a);

/// The involution induced on sd(T): the barycentre of s goes to the barycentre of A(s).
Involution lift_involution(const Involution& a, const Subdivision& sd);

/// A canonical representation of the antipodal sphere: the boundary of the
/// n-dimensional crosspolytope with vertices named "+k" / "-k" and the map +k <-> -k.
struct AntipodalSphere {
    Complex complex;
    Involution involution;
};
AntipodalSphere crosspolytope_boundary(int n);

/**
 * Two copies of M glued along the boundary by the boundary involution.
 *
 * Interior vertex v becomes "v+" (the original copy N) and "v-"; boundary
 * vertex w keeps its name. The involution swaps v+ and v- and agrees with the
 * boundary involution on boundary vertices.
 */
struct DoublingResult {
    Complex doubled;
    Involution involution;
    /// Vertex of M -> vertex of the original copy N in the double.
    std::vector<VertexId> inclusion;
    /// Vertex of the boundary complex -> vertex of the double.
    std::vector<VertexId> boundary_inclusion;
    /// Vertex of M -> vertex of the mirrored copy (boundary vertices go through A).
    std::vector<VertexId> mirror;
};

/**
 * `boundary_involution` must act on a complex equal (by vertex names) to
 * boundary_complex(m). Throws NotManifoldWithBoundary, BoundaryNotFull (the
 * boundary spans a simplex of M that is not a boundary simplex; see
 * make_boundary_full) or BoundaryInvolutionNotFree.
 */
DoublingResult double_complex(const Complex& m, const Involution& boundary_involution);

/// Simplices of M spanned by boundary vertices that are not boundary simplices,
/// minimal under inclusion.
std::vector<Simplex> boundary_chords(const Complex& m);

/**
 * Repeatedly stellar-subdivides boundary chords until the boundary is a full
 * subcomplex. The boundary complex is unchanged. New vertex i (id
 * original_vertices + i) subdivides carriers[i], expressed in ids of the
 * refined complex.
 */
struct FullBoundaryRefinement {
    Complex complex;
    std::size_t original_vertices = 0;
    std::vector<Simplex> carriers;
};
FullBoundaryRefinement make_boundary_full(const Complex& m);

/**
 * Vertex coordinates of the embedding of X into the boundary of a
 * crosspolytope: paired vertices of Y go to +e_k / -e_k for k <= m, the
 * remaining vertices of X to e_k for k > m. Coordinates are exact integers.
 */
struct CrosspolytopeEmbedding {
    int pairs = 0;     // m
    int ambient = 0;   // n
    std::vector<std::vector<int>> coordinates; // indexed by vertex of X
    bool antipodal_on_subcomplex = false;      // F(A(y)) = -F(y)
    bool positive_off_subcomplex = false;      // x_{m+1} + ... + x_n > 0 off Y
    bool injective = false;
    bool no_antipodal_simplex = false;          // no simplex of X holds y and A(y)
};

/// Y must be a full subcomplex of X (by names) and A a free involution on Y.
/// Throws InvolutionNotFree, or InvalidArgument when Y is not a full subcomplex.
CrosspolytopeEmbedding crosspolytope_embedding(const Complex& x, const Involution& a);

} // namespace bulab
