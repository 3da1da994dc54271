#pragma once

#include <optional>
#include <vector>

#include "bulab/complex.hpp"
#include "bulab/symmetry.hpp"

namespace bulab {

/// Vertex map sending every simplex of the source onto a (possibly lower-dimensional) simplex of the target.
class SimplicialMap {
public:
    SimplicialMap() = default;

    /// Throws NotSimplicial naming the first facet whose image is not a face of the target.
    static SimplicialMap build(const Complex& source, const Complex& target, std::vector<VertexId> vertex_map);

    const Complex& source() const { return source_; }
    const Complex& target() const { return target_; }
    VertexId operator()(VertexId v) const { return map_[v]; }
    const std::vector<VertexId>& vertex_map() const { return map_; }

    /// Image vertex set of s, sorted and deduplicated.
    Simplex image(const Simplex& s) const;

private:
    SimplicialMap(Complex source, Complex target, std::vector<VertexId> vertex_map)
        : source_(std::move(source)), target_(std::move(target)), map_(std::move(vertex_map)) {}

    Complex source_;
    Complex target_;
    std::vector<VertexId> map_;
};

/// g after f.
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

struct AntipodalityReport {
    bool antipodal = true;
    std::optional<VertexId> witness; // source vertex with f(A(v)) != B(f(v))
};

AntipodalityReport is_antipodal_map(const SimplicialMap& f, const Involution& source_involution,
                                    const Involution& target_involution);

struct DegreeReport {
    /// Number of source facets mapped bijectively onto each target facet (target facet order).
    std::vector<long long> preimage_counts;
    bool consistent = false; // all counts share one parity
    int degree_mod2 = 0;     // meaningful only when consistent
};

/**
 * Mod-2 degree by preimage counting. A source facet counts for the target
 * facet it maps onto without collapse; degenerate facets count for nothing.
 *
 * The target must be a closed, strongly connected pseudomanifold of the same
 * dimension as the source (DimensionMismatch, NotClosedPseudomanifold,
 * TargetNotStronglyConnected). The source is not checked: inputs that are not
 * closed pseudomanifolds show up as consistent == false.
 */
DegreeReport degree_mod2(const SimplicialMap& f);

struct OddMappingVerdict {
    bool holds = false; // consistent and degree 1
    DegreeReport degree;
};

/// Checks that an antipodal map has odd degree. Throws PreconditionViolated if the map is not antipodal.
OddMappingVerdict verify_odd_mapping(const SimplicialMap& f, const Involution& source_involution,
                                     const Involution& target_involution);

} // namespace bulab
