#include "bulab/degree.hpp"

#include <algorithm>

#include "bulab/error.hpp"

namespace bulab {

SimplicialMap SimplicialMap::build(const Complex& source, const Complex& target, std::vector<VertexId> vertex_map)
{
    if (vertex_map.size() != source.num_vertices())
        throw Error(ErrorCode::InvalidArgument, "vertex map is not total on the source");
    for (VertexId w : vertex_map)
        if (w >= target.num_vertices())
            throw Error(ErrorCode::InvalidArgument, "vertex map image out of range");
    SimplicialMap f(source, target, std::move(vertex_map));
    for (const auto& facet : source.facets()) {
        if (!target.contains(f.image(facet)))
            throw Error(ErrorCode::NotSimplicial, "image of " + source.format(facet) + " is " +
                                                      target.format(f.image(facet)) + ", not a simplex");
    }
    return f;
}

Simplex SimplicialMap::image(const Simplex& s) const
{
    Simplex out;
    out.reserve(s.size());
    for (VertexId v : s)
        out.push_back(map_[v]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f)
{
    if (!f.target().same_as(g.source()))
        throw Error(ErrorCode::InvalidArgument, "maps are not composable");
    const auto bridge = map_by_name(f.target(), g.source());
    std::vector<VertexId> composed(f.source().num_vertices());
    for (VertexId v = 0; v < composed.size(); ++v)
        composed[v] = g(bridge[f(v)]);
    return SimplicialMap::build(f.source(), g.target(), std::move(composed));
}

AntipodalityReport is_antipodal_map(const SimplicialMap& f, const Involution& source_involution,
                                    const Involution& target_involution)
{
    if (source_involution.image().size() != f.source().num_vertices() ||
        target_involution.image().size() != f.target().num_vertices())
        throw Error(ErrorCode::InvalidArgument, "involutions do not match the map's complexes");
    AntipodalityReport report;
    for (VertexId v = 0; v < f.source().num_vertices(); ++v) {
        if (f(source_involution(v)) != target_involution(f(v))) {
            report.antipodal = false;
            report.witness = v;
            break;
        }
    }
    return report;
}

DegreeReport degree_mod2(const SimplicialMap& f)
{
    const Complex& src = f.source();
    const Complex& dst = f.target();
    if (src.dimension() != dst.dimension())
        throw Error(ErrorCode::DimensionMismatch, "source has dimension " + std::to_string(src.dimension()) +
                                                      ", target " + std::to_string(dst.dimension()));
    const auto target_check = manifold_check(dst);
    if (!target_check.is_closed_pseudomanifold)
        throw Error(ErrorCode::NotClosedPseudomanifold, "target is not a closed pseudomanifold");
    if (!target_check.is_strongly_connected)
        throw Error(ErrorCode::TargetNotStronglyConnected, "target is not strongly connected");

    DegreeReport report;
    report.preimage_counts.assign(dst.facets().size(), 0);
    const std::size_t full = static_cast<std::size_t>(dst.dimension()) + 1;
    for (const auto& facet : src.facets()) {
        Simplex img = f.image(facet);
        if (img.size() != full)
            continue;
        if (auto idx = dst.facet_index(img))
            ++report.preimage_counts[*idx];
    }
    const long long parity = report.preimage_counts.front() & 1;
    report.consistent = std::all_of(report.preimage_counts.begin(), report.preimage_counts.end(),
                                    [&](long long c) { return (c & 1) == parity; });
    report.degree_mod2 = static_cast<int>(parity);
    return report;
}

OddMappingVerdict verify_odd_mapping(const SimplicialMap& f, const Involution& source_involution,
                                     const Involution& target_involution)
{
    const auto antipodal = is_antipodal_map(f, source_involution, target_involution);
    if (!antipodal.antipodal)
        throw Error(ErrorCode::PreconditionViolated,
                    "map is not antipodal at vertex " + f.source().name(*antipodal.witness));
    OddMappingVerdict verdict;
    verdict.degree = degree_mod2(f);
    verdict.holds = verdict.degree.consistent && verdict.degree.degree_mod2 == 1;
    return verdict;
}

} // namespace bulab
