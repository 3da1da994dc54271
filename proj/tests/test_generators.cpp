#include <gtest/gtest.h>

#include "bulab/error.hpp"
#include "bulab/generators.hpp"
#include "bulab/io.hpp"
#include "oracles.hpp"

using namespace bulab;

namespace {

ErrorCode code_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::EmptyInput;
}

std::string fixture(const std::string& name) { return read_text_file(std::string(BULAB_FIXTURE_DIR) + "/" + name); }

long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

} // namespace

TEST(Crosspolytope, Counts)
{
    for (int d = 1; d <= 5; ++d) {
        const auto s = crosspolytope_sphere(d);
        EXPECT_EQ(s.complex.num_vertices(), static_cast<std::size_t>(2 * (d + 1)));
        EXPECT_EQ(s.complex.facets().size(), std::size_t{1} << (d + 1));
        EXPECT_EQ(s.complex.dimension(), d);
        EXPECT_TRUE(manifold_check(s.complex).is_closed_pseudomanifold);
        EXPECT_TRUE(is_free(s.involution).is_free);
        EXPECT_EQ(euler_characteristic(s.complex), d % 2 == 0 ? 2 : 0);
    }
    EXPECT_EQ(code_of([] { crosspolytope_sphere(0); }), ErrorCode::InvalidArgument);
}

TEST(Crosspolytope, IdentityLabelling)
{
    for (int d = 1; d <= 4; ++d) {
        const auto s = crosspolytope_sphere(d);
        const auto l = identity_labelling(s);
        EXPECT_TRUE(is_antipodal_labelling(l, s.involution).antipodal);
        EXPECT_TRUE(complementary_edges(l).empty());
        EXPECT_EQ(l[s.complex.id("-" + std::to_string(d + 1))], -(d + 1));
    }
}

TEST(Crosspolytope, LayoutCoversVertices)
{
    for (int d = 1; d <= 2; ++d) {
        const auto s = crosspolytope_sphere(d);
        const auto layout = crosspolytope_layout(d);
        for (VertexId v = 0; v < s.complex.num_vertices(); ++v)
            EXPECT_TRUE(layout.count(s.complex.name(v)));
    }
}

TEST(Fig2, Shape)
{
    const auto g = fig2_grid();
    EXPECT_EQ(g.complex.num_vertices(), 16u);
    EXPECT_EQ(g.complex.facets().size(), 18u);
    EXPECT_TRUE(is_free(g.boundary_involution).is_free);
    ASSERT_TRUE(g.labelling.has_value());
    EXPECT_TRUE(is_boundary_antipodal(*g.labelling, g.boundary_involution).antipodal);
    EXPECT_EQ(g.layout.size(), 16u);
    EXPECT_EQ(euler_characteristic(g.complex), 1);
}

TEST(Fig2, MatchesCommittedFixtures)
{
    const auto g = fig2_grid();
    EXPECT_EQ(write_complex(g.complex), fixture("fig2.cx"));
    EXPECT_EQ(write_involution(g.boundary_involution), fixture("fig2.inv"));
    EXPECT_EQ(write_labelling(*g.labelling), fixture("fig2.lab"));
    EXPECT_EQ(write_layout(g.layout), fixture("fig2.lay"));
}

TEST(Refine, MatchesCommittedFixture)
{
    const auto s = crosspolytope_sphere(2);
    const auto r = refine(s.complex, s.involution, 1);
    EXPECT_EQ(write_complex(r.complex), fixture("sd_octahedron.cx"));
    EXPECT_EQ(write_involution(r.involution), fixture("sd_octahedron.inv"));
}

TEST(Refine, FacetGrowthAndFreeness)
{
    for (int d = 1; d <= 3; ++d) {
        const auto s = crosspolytope_sphere(d);
        for (int depth = 0; depth <= 2; ++depth) {
            const auto r = refine(s.complex, s.involution, depth);
            long long expected = static_cast<long long>(s.complex.facets().size());
            for (int i = 0; i < depth; ++i)
                expected *= factorial(d + 1);
            EXPECT_EQ(static_cast<long long>(r.complex.facets().size()), expected);
            EXPECT_TRUE(is_free(r.involution).is_free);
            EXPECT_EQ(euler_characteristic(r.complex), euler_characteristic(s.complex));
        }
    }
}

TEST(Disk, Shape)
{
    for (int k = 2; k <= 6; ++k) {
        const auto d = disk(k);
        EXPECT_EQ(d.complex.num_vertices(), static_cast<std::size_t>(2 * k + 1));
        EXPECT_EQ(d.complex.facets().size(), static_cast<std::size_t>(2 * k));
        EXPECT_EQ(boundary_complex(d.complex).facets().size(), static_cast<std::size_t>(2 * k));
        EXPECT_TRUE(is_free(d.boundary_involution).is_free);
        EXPECT_EQ(euler_characteristic(d.complex), 1);
    }
    EXPECT_EQ(code_of([] { disk(1); }), ErrorCode::InvalidArgument);
}

TEST(PuncturedTorus, Shape)
{
    for (int n = 3; n <= 6; ++n) {
        const auto t = punctured_torus(n);
        EXPECT_EQ(euler_characteristic(t.complex), -1);
        EXPECT_EQ(boundary_complex(t.complex).facets().size(), 4u);
        EXPECT_TRUE(is_free(t.boundary_involution).is_free);
        EXPECT_TRUE(manifold_check(t.complex).is_pseudomanifold_with_boundary);
    }
    EXPECT_EQ(code_of([] { punctured_torus(2); }), ErrorCode::InvalidArgument);
}

TEST(Genus2, Shape)
{
    const auto g = genus2_surface();
    EXPECT_EQ(euler_characteristic(g.doubled), -2);
    EXPECT_TRUE(manifold_check(g.doubled).is_closed_pseudomanifold);
    EXPECT_TRUE(manifold_check(g.doubled).is_strongly_connected);
    EXPECT_TRUE(is_free(g.involution).is_free);
}

TEST(RandomLabelling, SeedStableAndAntipodal)
{
    const auto s = crosspolytope_sphere(2);
    const auto r = refine(s.complex, s.involution, 1);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto l = random_antipodal_labelling(r.involution, 3, seed);
        EXPECT_EQ(l.values(), random_antipodal_labelling(r.involution, 3, seed).values());
        EXPECT_TRUE(is_antipodal_labelling(l, r.involution).antipodal);
        EXPECT_LE(l.max_abs(), 3);
    }
    EXPECT_NE(random_antipodal_labelling(r.involution, 3, 1).values(),
              random_antipodal_labelling(r.involution, 3, 2).values());
    EXPECT_EQ(code_of([&] { random_antipodal_labelling(r.involution, 0, 1); }), ErrorCode::InvalidArgument);
}

TEST(RandomLabelling, RejectsFixedVertex)
{
    const Complex c = Complex::from_facets({{"a", "b"}, {"b", "c"}, {"c", "a"}});
    const Involution a = Involution::from_pairs(c, {{"b", "c"}});
    EXPECT_EQ(code_of([&] { random_antipodal_labelling(a, 2, 1); }), ErrorCode::InvalidArgument);
}

TEST(Search, FindsComplementaryFreeLabellings)
{
    const auto s = crosspolytope_sphere(2);
    const auto r = refine(s.complex, s.involution, 1);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto found = search_complementary_free(r.involution, 3, seed);
        ASSERT_EQ(found.status, SearchStatus::Found);
        ASSERT_TRUE(found.labelling.has_value());
        EXPECT_TRUE(is_antipodal_labelling(*found.labelling, r.involution).antipodal);
        EXPECT_TRUE(complementary_edges(*found.labelling).empty());
        EXPECT_TRUE(oracle::complementary(oracle::raw(r.complex), oracle::raw(*found.labelling)).empty());
        EXPECT_EQ(found.labelling->values(), search_complementary_free(r.involution, 3, seed).labelling->values());
    }
}

TEST(Search, TooFewLabelsIsExhausted)
{
    for (int d = 1; d <= 3; ++d) {
        const auto s = crosspolytope_sphere(d);
        const auto found = search_complementary_free(s.involution, d, 7);
        EXPECT_EQ(found.status, SearchStatus::Exhausted) << d;
        EXPECT_FALSE(found.labelling.has_value());
    }
}

TEST(Search, BudgetCanRunOut)
{
    const auto s = crosspolytope_sphere(2);
    const auto r = refine(s.complex, s.involution, 1);
    const auto found = search_complementary_free(r.involution, 2, 3, 5);
    EXPECT_EQ(found.status, SearchStatus::BudgetExceeded);
    EXPECT_FALSE(found.labelling.has_value());
}

TEST(Search, Preconditions)
{
    const auto s = crosspolytope_sphere(2);
    EXPECT_EQ(code_of([&] { search_complementary_free(s.involution, 0, 1); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([&] { search_complementary_free(s.involution, 33, 1); }), ErrorCode::InvalidArgument);
    const Complex c = Complex::from_facets({{"a", "b"}, {"b", "c"}, {"c", "a"}});
    EXPECT_EQ(code_of([&] { search_complementary_free(Involution::from_pairs(c, {{"b", "c"}}), 2, 1); }),
              ErrorCode::InvalidArgument);
}

TEST(GeneratorSpec, Validation)
{
    const auto bad = [](GeneratorSpec s) { return code_of([&] { s.validate(); }); };
    EXPECT_EQ(bad({.kind = GeneratorKind::Crosspolytope, .dimension = 0}), ErrorCode::InvalidArgument);
    EXPECT_EQ(bad({.kind = GeneratorKind::Crosspolytope, .dimension = 9}), ErrorCode::InvalidArgument);
    EXPECT_EQ(bad({.kind = GeneratorKind::Disk, .k = 1}), ErrorCode::InvalidArgument);
    EXPECT_EQ(bad({.kind = GeneratorKind::PuncturedTorus, .size = 2}), ErrorCode::InvalidArgument);
    EXPECT_EQ(bad({.kind = GeneratorKind::Crosspolytope, .refine = 5}), ErrorCode::InvalidArgument);
    EXPECT_EQ(bad({.kind = GeneratorKind::Fig2, .refine = 1}), ErrorCode::InvalidArgument);
    EXPECT_NO_THROW((GeneratorSpec{.kind = GeneratorKind::Genus2, .refine = 1}.validate()));
    EXPECT_EQ(code_of([] { parse_generator_kind("sphere"); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(parse_generator_kind("punctured-torus"), GeneratorKind::PuncturedTorus);
}

TEST(Generate, AllKinds)
{
    const auto cp = generate({.kind = GeneratorKind::Crosspolytope, .dimension = 2, .refine = 1});
    EXPECT_EQ(cp.complex.facets().size(), 48u);
    EXPECT_FALSE(cp.involution_on_boundary);
    ASSERT_TRUE(cp.labelling.has_value());
    EXPECT_TRUE(is_antipodal_labelling(*cp.labelling, cp.involution).antipodal);
    EXPECT_EQ(cp.layout.size(), cp.complex.num_vertices());

    const auto f = generate({.kind = GeneratorKind::Fig2});
    EXPECT_TRUE(f.involution_on_boundary);
    EXPECT_TRUE(f.labelling.has_value());

    const auto d = generate({.kind = GeneratorKind::Disk, .k = 4});
    EXPECT_EQ(d.complex.facets().size(), 8u);
    EXPECT_TRUE(d.involution_on_boundary);

    const auto g = generate({.kind = GeneratorKind::Genus2});
    EXPECT_FALSE(g.involution_on_boundary);
    EXPECT_EQ(euler_characteristic(g.complex), -2);
}
