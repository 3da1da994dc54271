/**
 * Finite abstract simplicial complexes given by their facets.
 *
 * A Complex is pure: every facet has the same dimension. Vertices are interned
 * to dense integer ids in order of first appearance; the original names are
 * kept so the text formats round-trip exactly. Complexes are immutable after
 * construction and cheap to copy (shared storage). Derived structure (the face
 * lattice, ridge incidence, vertex adjacency) is computed on first use and
 * cached; concurrent queries are safe.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bulab {

using VertexId = std::uint32_t;

/// Strictly increasing list of vertex ids. Dimension is size() - 1.
using Simplex = std::vector<VertexId>;

/// Sorts and checks for repeated vertices. Returns nullopt on a repeat.
std::optional<Simplex> canonical_simplex(std::vector<VertexId> vertices);

inline int simplex_dimension(const Simplex& s) { return static_cast<int>(s.size()) - 1; }

/// True if every vertex of `face` is a vertex of `s` (both canonical).
bool is_face_of(const Simplex& face, const Simplex& s);

class Complex {
public:
    /**
     * Builds a complex from facets given as lists of vertex names.
     *
     * Duplicate facets (as sets) are merged. Throws EmptyInput,
     * MixedDimension or DuplicateVertexInFacet.
     */
    static Complex from_facets(const std::vector<std::vector<std::string>>& facets);

    /**
     * Builds a complex from already-interned data. `facets` may be empty, in
     * which case the result is the empty complex of the given dimension.
     * Every named vertex must appear in some facet and names must be unique.
     */
    static Complex from_indexed(int dimension, std::vector<std::string> names,
                                std::vector<Simplex> facets);

    Complex();

    int dimension() const;
    bool empty() const { return facets().empty(); }

    std::size_t num_vertices() const;
    const std::vector<Simplex>& facets() const;
    const std::vector<std::string>& names() const;
    const std::string& name(VertexId v) const;

    std::optional<VertexId> find(std::string_view name) const;
    /// Like find() but throws UnknownVertex.
    VertexId id(std::string_view name) const;

    /// All k-faces for 0 <= k <= dimension(), sorted. Cached.
    const std::vector<Simplex>& faces(int k) const;
    const std::vector<Simplex>& edges() const { return faces(1); }
    std::size_t num_faces(int k) const { return faces(k).size(); }

    bool contains(const Simplex& s) const;
    std::optional<std::size_t> facet_index(const Simplex& s) const;

    /// Sorted neighbour lists in the 1-skeleton. Cached.
    const std::vector<std::vector<VertexId>>& neighbors() const;

    /// Ridge -> indices of the facets containing it. Cached.
    const std::map<Simplex, std::vector<std::size_t>>& ridge_incidence() const;

    std::vector<std::string> facet_names(const Simplex& s) const;
    std::string format(const Simplex& s) const;

    /// Same facets over the same vertex names (ids may differ).
    bool same_as(const Complex& other) const;

private:
    struct Data;
    struct Cache;
    explicit Complex(std::shared_ptr<const Data> data);

    std::shared_ptr<const Data> data_;
    std::shared_ptr<Cache> cache_;
};

struct ManifoldCheckReport {
    bool is_closed_pseudomanifold = false;
    bool is_pseudomanifold_with_boundary = false;
    bool is_strongly_connected = false;
    std::vector<Simplex> boundary_ridges;
};

ManifoldCheckReport manifold_check(const Complex& complex);

/**
 * The (d-1)-complex of ridges lying in exactly one facet. A closed complex
 * gives the empty complex. Throws NotPseudomanifold if some ridge lies in
 * three or more facets, or if d == 0.
 */
Complex boundary_complex(const Complex& complex);

long long euler_characteristic(const Complex& complex);

/// Result of a barycentric subdivision. New vertex i is the barycentre of carrier[i].
struct Subdivision {
    Complex complex;
    std::vector<Simplex> carrier;
    std::map<Simplex, VertexId> vertex_of_face;
};

/**
 * Standard barycentric subdivision: vertices are the faces of T, facets are
 * maximal chains. A vertex of T keeps its name; a higher face is named
 * "(a,b,...)" from its vertex names.
 */
Subdivision barycentric_subdivision(const Complex& complex);

/**
 * Stellar subdivision of a face `s`: every facet F containing s is replaced
 * by the facets F - {v} + {new} for v in s. Old vertex ids are preserved and
 * the new vertex gets id num_vertices().
 */
Complex stellar_subdivision(const Complex& complex, const Simplex& s, const std::string& new_name);

/// Maps each vertex of `sub` to the vertex of `super` with the same name. Throws UnknownVertex.
std::vector<VertexId> map_by_name(const Complex& sub, const Complex& super);

} // namespace bulab
