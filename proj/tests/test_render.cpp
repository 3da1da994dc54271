#include <gtest/gtest.h>

#include "bulab/error.hpp"
#include "bulab/generators.hpp"
#include "bulab/render.hpp"

using namespace bulab;

namespace {

std::size_t occurrences(const std::string& text, const std::string& needle)
{
    std::size_t n = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1))
        ++n;
    return n;
}

} // namespace

TEST(Render, Fig2)
{
    const auto g = fig2_grid();
    const std::string svg = render_svg(g.complex, g.labelling, g.layout);
    EXPECT_EQ(svg.rfind("<svg", 0), 0u);
    EXPECT_EQ(occurrences(svg, "<polygon"), 18u);
    EXPECT_EQ(occurrences(svg, "<circle"), 16u);
    EXPECT_EQ(occurrences(svg, "class=\"complementary\""), 0u);
    EXPECT_NE(svg.find("x0y0: 2"), std::string::npos);
}

TEST(Render, Octahedron)
{
    const auto s = crosspolytope_sphere(2);
    const std::string svg = render_svg(s.complex, identity_labelling(s), crosspolytope_layout(2));
    EXPECT_EQ(occurrences(svg, "<polygon"), 8u);
    EXPECT_EQ(occurrences(svg, "<line"), 12u);
}

TEST(Render, ComplementaryEdgesHighlighted)
{
    const Complex c = Complex::from_facets({{"a", "b"}, {"b", "c"}, {"c", "a"}});
    const Labelling l = Labelling::from_pairs(c, {{"a", 1}, {"b", -1}, {"c", 2}});
    const std::string svg = render_svg(c, l, {});
    EXPECT_EQ(occurrences(svg, "class=\"complementary\""), 1u);
    EXPECT_EQ(occurrences(svg, "<polygon"), 0u);
}

TEST(Render, Deterministic)
{
    const auto g = genus2_surface();
    EXPECT_EQ(render_svg(g.doubled, std::nullopt, {}), render_svg(g.doubled, std::nullopt, {}));
    const Layout a = force_directed_layout(g.doubled);
    const Layout b = force_directed_layout(g.doubled);
    ASSERT_EQ(a.size(), g.doubled.num_vertices());
    for (const auto& [name, p] : a) {
        EXPECT_EQ(p.x, b.at(name).x);
        EXPECT_EQ(p.y, b.at(name).y);
    }
}

TEST(Render, IncompleteLayoutFallsBack)
{
    const auto g = fig2_grid();
    Layout partial = g.layout;
    partial.erase("x1y1");
    const Layout fallback = force_directed_layout(g.complex);
    EXPECT_EQ(render_svg(g.complex, g.labelling, partial), render_svg(g.complex, g.labelling, fallback));
}

TEST(Render, RejectsHighDimension)
{
    try {
        render_svg(crosspolytope_sphere(3).complex, std::nullopt, {});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DimensionTooHigh);
    }
}

TEST(Render, NamesCanBeHidden)
{
    const auto g = fig2_grid();
    const std::string svg = render_svg(g.complex, g.labelling, g.layout, {.show_names = false});
    EXPECT_EQ(svg.find("x0y0"), std::string::npos);
}
