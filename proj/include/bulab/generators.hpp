#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "bulab/complex.hpp"
#include "bulab/labels.hpp"
#include "bulab/symmetry.hpp"

namespace bulab {

struct Point {
    double x = 0;
    double y = 0;
};

/// Planar drawing positions keyed by vertex name.
using Layout = std::map<std::string, Point>;

/// Barycentres of the carriers; empty if some base vertex has no position.
Layout lift_layout(const Layout& layout, const Complex& base, const Subdivision& sd);

/// Boundary of the (d+1)-crosspolytope, a centrally symmetric d-sphere.
AntipodalSphere crosspolytope_sphere(int d);
/// Vertex "+k" labelled k, "-k" labelled -k.
Labelling identity_labelling(const AntipodalSphere& sphere);
/// Square for d = 1, a Schlegel diagram of the octahedron for d = 2, empty otherwise.
Layout crosspolytope_layout(int d);

struct BoundedFixture {
    Complex complex;
    Involution boundary_involution; // acts on boundary_complex(complex)
    std::optional<Labelling> labelling;
    Layout layout;
};

/**
 * A 4x4 vertex grid with vertices "x<col>y<row>". Each cell is split by its
 * bottom-left to top-right diagonal, central symmetry acts on the boundary
 * 12-gon, and a fixed boundary-antipodal labelling into Pi_3 is attached.
 */
BoundedFixture fig2_grid();

/// Cone over a 2k-gon (centre "c", rim "b0".."b<2k-1>") with the rotation by k on the rim. k >= 2.
BoundedFixture disk(int k);

/**
 * An n x n grid torus ("t<i>_<j>") with both triangles of one cell removed.
 * The boundary is the 4-cycle of that cell with its rotation by two. n >= 3.
 */
BoundedFixture punctured_torus(int n = 4);

/// The double of punctured_torus(): a closed surface of genus two with a free involution.
DoublingResult genus2_surface();

struct RefinedSphere {
    Complex complex;
    Involution involution;
};
/// `depth` barycentric subdivisions, lifting the involution each time.
RefinedSphere refine(const Complex& complex, const Involution& a, int depth);

/// Uniform label from Pi_n for the smaller vertex of each orbit; its partner gets the negation.
/// The involution must have no fixed vertex.
Labelling random_antipodal_labelling(const Involution& a, int n, std::uint64_t seed);

enum class SearchStatus { Found, Exhausted, BudgetExceeded };

struct SearchResult {
    SearchStatus status = SearchStatus::Exhausted;
    std::optional<Labelling> labelling;
    std::uint64_t steps = 0;
};

/**
 * Backtracking search for an antipodal labelling into Pi_n with no
 * complementary edge. Orbits are assigned most-constrained first with forward
 * checking; the seed permutes label and tie-break orders. `budget` bounds the
 * number of label assignments tried (0 means unbounded).
 */
SearchResult search_complementary_free(const Involution& a, int n, std::uint64_t seed, std::uint64_t budget = 1'000'000);

enum class GeneratorKind { Crosspolytope, Fig2, Disk, PuncturedTorus, Genus2 };

struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::Crosspolytope;
    int dimension = 2;   // crosspolytope
    int k = 2;           // disk: 2k-gon rim
    int size = 4;        // punctured torus grid
    int refine = 0;      // closed kinds only

    /// Throws InvalidArgument on out-of-range parameters.
    void validate() const;
};

GeneratorKind parse_generator_kind(const std::string& text);

struct Generated {
    Complex complex;
    Involution involution;
    bool involution_on_boundary = false;
    std::optional<Labelling> labelling;
    Layout layout;
};

Generated generate(const GeneratorSpec& spec);

} // namespace bulab
