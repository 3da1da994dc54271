#pragma once

#include <optional>
#include <string>

#include "bulab/complex.hpp"
#include "bulab/generators.hpp"
#include "bulab/labels.hpp"

namespace bulab {

/// Deterministic spring embedding used when no layout is supplied.
Layout force_directed_layout(const Complex& complex, int iterations = 300);

struct RenderOptions {
    double size = 480;   // square canvas, pixels
    double margin = 40;
    bool show_names = true;
};

/**
 * SVG drawing of a complex of dimension at most 2: filled triangles, edges,
 * vertices with names and labels, complementary edges highlighted. Vertices
 * missing from `layout` trigger the force-directed fallback. Throws
 * DimensionTooHigh.
 */
std::string render_svg(const Complex& complex, const std::optional<Labelling>& labelling, const Layout& layout,
                       const RenderOptions& options = {});

} // namespace bulab
