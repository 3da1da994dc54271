#include <gtest/gtest.h>

#include "bulab/covers.hpp"
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
    return ErrorCode::InvalidArgument;
}

using NameSet = std::set<std::string>;

NameSet names_of(const ClosedSet& s, const Complex& c)
{
    NameSet out;
    for (VertexId v : s.vertices())
        out.insert(c.name(v));
    return out;
}

NameSet mirror(const NameSet& s, const std::map<std::string, std::string>& a)
{
    NameSet out;
    for (const auto& v : s)
        out.insert(a.at(v));
    return out;
}

NameSet meet(const NameSet& x, const NameSet& y)
{
    NameSet out;
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::inserter(out, out.end()));
    return out;
}

struct TetraFixture {
    Complex complex;
    Involution involution;
    std::vector<ClosedSet> sets;
};

TetraFixture load_tetra()
{
    const std::string dir = BULAB_FIXTURE_DIR;
    TetraFixture f;
    f.complex = parse_complex(read_text_file(dir + "/sd_octahedron.cx"));
    f.involution = parse_involution(read_text_file(dir + "/sd_octahedron.inv"), f.complex);
    f.sets = parse_cover(read_text_file(dir + "/tetra4.cover"), f.complex).sets;
    return f;
}

PairedCover singleton_cover(const AntipodalSphere& s)
{
    PairedCover p;
    p.complex = s.complex;
    for (int k = 1; k <= 3; ++k) {
        p.positive.push_back(ClosedSet::from_names(s.complex, "B" + std::to_string(k), {"+" + std::to_string(k)}));
        p.negative.push_back(ClosedSet::from_names(s.complex, "B-" + std::to_string(k), {"-" + std::to_string(k)}));
    }
    return p;
}

} // namespace

TEST(ClosedSet, FullSubcomplexMembership)
{
    const auto oct = crosspolytope_sphere(2).complex;
    const auto s = ClosedSet::from_names(oct, "S", {"+1", "+2", "+3"});
    EXPECT_TRUE(s.contains(Simplex{oct.id("+1"), oct.id("+2"), oct.id("+3")}));
    EXPECT_FALSE(s.contains(Simplex{oct.id("+1"), oct.id("-2")}));
    EXPECT_EQ(s.size(), 3u);
    EXPECT_THROW(ClosedSet::from_names(oct, "T", {"nope"}), Error);
}

TEST(VerifyCover, Examples)
{
    const auto s = crosspolytope_sphere(2);
    std::vector<ClosedSet> facets;
    for (const auto& f : s.complex.facets())
        facets.push_back(ClosedSet::from_ids(s.complex, s.complex.format(f), f));
    EXPECT_TRUE(verify_cover(s.complex, facets).covers);

    const Simplex dropped = s.complex.facets()[5];
    facets.erase(facets.begin() + 5);
    const auto missing = verify_cover(s.complex, facets);
    EXPECT_FALSE(missing.covers);
    EXPECT_EQ(missing.uncovered_facet, dropped);

    const std::vector<ClosedSet> halves{ClosedSet::from_names(s.complex, "P", {"+1", "+2", "+3"}),
                                        ClosedSet::from_names(s.complex, "N", {"-1", "-2", "-3"})};
    EXPECT_FALSE(verify_cover(s.complex, halves).covers);
    std::vector<std::set<std::string>> raw_sets{{"+1", "+2", "+3"}, {"-1", "-2", "-3"}};
    EXPECT_FALSE(oracle::covers(oracle::raw(s.complex), raw_sets));
}

TEST(AntipodePairFree, Examples)
{
    const auto s = crosspolytope_sphere(2);
    EXPECT_TRUE(antipodal_pair_free(ClosedSet::from_names(s.complex, "S", {"+1", "+2", "+3"}), s.involution));
    EXPECT_FALSE(antipodal_pair_free(ClosedSet::from_names(s.complex, "S", {"+1", "-2", "-1"}), s.involution));
    EXPECT_TRUE(antipodal_pair_free(ClosedSet::from_names(s.complex, "E", {}), s.involution));
}

TEST(MinIndex, SingletonCoverGivesIdentity)
{
    const auto s = crosspolytope_sphere(2);
    const Labelling l = min_index_labelling(singleton_cover(s));
    EXPECT_EQ(l.values(), identity_labelling(s).values());
}

TEST(MinIndex, SmallestIndexWins)
{
    const auto s = crosspolytope_sphere(2);
    PairedCover p = singleton_cover(s);
    p.positive[1] = ClosedSet::from_names(s.complex, "B2", {"+2", "+1"});
    EXPECT_EQ(min_index_labelling(p)[s.complex.id("+1")], 1);
    p.positive[0] = ClosedSet::from_names(s.complex, "B1", {"+3"});
    EXPECT_EQ(min_index_labelling(p)[s.complex.id("+1")], 2);
}

TEST(MinIndex, Errors)
{
    const auto s = crosspolytope_sphere(2);
    PairedCover p = singleton_cover(s);
    p.positive[2] = ClosedSet::from_names(s.complex, "B3", {});
    EXPECT_EQ(code_of([&] { min_index_labelling(p); }), ErrorCode::VertexUncovered);
    p = singleton_cover(s);
    p.negative[0] = ClosedSet::from_names(s.complex, "B-1", {"-1", "+1"});
    EXPECT_EQ(code_of([&] { min_index_labelling(p); }), ErrorCode::PreconditionViolated);
}

TEST(MinIndex, RoundTripFromLabelling)
{
    const auto s = crosspolytope_sphere(2);
    const auto sd = refine(s.complex, s.involution, 1);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Labelling l = random_antipodal_labelling(sd.involution, 3, seed);
        const PairedCover p = cover_from_labelling(l, 3);
        EXPECT_TRUE(is_paired_by(p, sd.involution));
        EXPECT_EQ(min_index_labelling(p).values(), l.values());
    }
    EXPECT_EQ(code_of([&] { cover_from_labelling(identity_labelling(s), 2); }), ErrorCode::LabelOutOfRange);
}

TEST(MinIndex, PairedCoversGiveAntipodalLabellings)
{
    oracle::Rng rng(11);
    const auto s = crosspolytope_sphere(2);
    const auto sd = refine(s.complex, s.involution, 1);
    const auto& a = sd.involution;
    const std::size_t n = sd.complex.num_vertices();
    for (int trial = 0; trial < 200; ++trial) {
        // Per orbit and index, put the representative in B_i, in B_{-i}, or in neither.
        std::vector<std::vector<VertexId>> pos(3), neg(3);
        for (const auto& [v, w] : a.orbit_pairs()) {
            bool placed = false;
            for (int i = 0; i < 3; ++i) {
                int choice = rng.below(3);
                if (i == 2 && !placed)
                    choice = 1 + rng.below(2);
                if (choice == 0)
                    continue;
                placed = true;
                const VertexId in = choice == 1 ? v : w;
                pos[i].push_back(in);
                neg[i].push_back(a(in));
            }
        }
        PairedCover p;
        p.complex = sd.complex;
        for (int i = 0; i < 3; ++i) {
            p.positive.push_back(ClosedSet::from_ids(sd.complex, "B" + std::to_string(i + 1), pos[i]));
            p.negative.push_back(ClosedSet::from_ids(sd.complex, "B-" + std::to_string(i + 1), neg[i]));
        }
        ASSERT_TRUE(is_paired_by(p, a));
        const Labelling l = min_index_labelling(p);
        for (VertexId v = 0; v < n; ++v)
            EXPECT_EQ(l[a(v)], -l[v]);
    }
}

TEST(Rainbow, OctahedronSingletons)
{
    const auto s = crosspolytope_sphere(2);
    const auto r = find_rainbow_simplex(singleton_cover(s), Signature::parse("1,-2,3"));
    ASSERT_TRUE(r.facet.has_value());
    const auto names = s.complex.facet_names(*r.facet);
    EXPECT_EQ(oracle::Face(names.begin(), names.end()), (oracle::Face{"+1", "-2", "+3"}));
    EXPECT_TRUE(r.via_labelling);
}

TEST(Rainbow, SearchedLabellingCovers)
{
    const auto s = crosspolytope_sphere(2);
    const auto sd = refine(s.complex, s.involution, 1);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto found = search_complementary_free(sd.involution, 3, seed);
        ASSERT_TRUE(found.labelling.has_value());
        const PairedCover p = cover_from_labelling(*found.labelling, 3);
        for (std::uint32_t mask = 0; mask < 8; ++mask) {
            const auto sig = Signature::from_mask(3, mask);
            const auto r = find_rainbow_simplex(p, sig);
            ASSERT_TRUE(r.facet.has_value());
            std::vector<int> used = r.assignment;
            std::sort(used.begin(), used.end());
            std::vector<int> want = sig.labels();
            std::sort(want.begin(), want.end());
            EXPECT_EQ(used, want);
            for (std::size_t i = 0; i < r.facet->size(); ++i)
                EXPECT_TRUE(p.at(r.assignment[i]).contains((*r.facet)[i]));
        }
    }
}

TEST(Rainbow, DirectMatchingWithoutFullCover)
{
    // B_1 misses -1's orbit partner, so the min-index labelling is undefined there.
    const auto s = crosspolytope_sphere(2);
    PairedCover p = singleton_cover(s);
    p.positive[0] = ClosedSet::from_names(s.complex, "B1", {});
    p.negative[0] = ClosedSet::from_names(s.complex, "B-1", {"-1"});
    const auto r = find_rainbow_simplex(p, Signature::parse("-1,2,3"));
    ASSERT_TRUE(r.facet.has_value());
    EXPECT_FALSE(r.via_labelling);
    const auto none = find_rainbow_simplex(p, Signature::parse("1,2,3"));
    EXPECT_FALSE(none.facet.has_value());
    EXPECT_FALSE(none.diagnostic.empty());
}

TEST(Rainbow, Errors)
{
    const auto s = crosspolytope_sphere(2);
    PairedCover p = singleton_cover(s);
    p.negative[1] = ClosedSet::from_names(s.complex, "B-2", {"-2", "+2"});
    EXPECT_EQ(code_of([&] { find_rainbow_simplex(p, Signature::parse("1,2,3")); }), ErrorCode::PreconditionViolated);
    EXPECT_EQ(code_of([&] { find_rainbow_simplex(singleton_cover(s), Signature::parse("1,2")); }),
              ErrorCode::SignatureDimensionMismatch);
}

TEST(FanTransform, TetrahedralFixture)
{
    const auto f = load_tetra();
    const auto t = fan_transform(f.complex, f.sets, f.involution);
    EXPECT_TRUE(t.union_covers);
    EXPECT_TRUE(t.pairs_disjoint);
    EXPECT_TRUE(is_paired_by(t.family, f.involution));
    ASSERT_EQ(t.family.size(), 3);

    // Independent set algebra on names: B_i = C_i meet (C_{-(i+1)} join C_{-(i+m)} join C_{-4}), m = 1.
    const auto a = oracle::raw(f.involution);
    std::vector<NameSet> c, c_neg;
    for (const auto& s : f.sets) {
        c.push_back(names_of(s, f.complex));
        c_neg.push_back(mirror(c.back(), a));
    }
    std::vector<std::set<std::string>> family;
    for (int i = 1; i <= 3; ++i) {
        NameSet reach = c_neg[3];
        const int next = i % 3 + 1;
        reach.insert(c_neg[static_cast<std::size_t>(next - 1)].begin(), c_neg[static_cast<std::size_t>(next - 1)].end());
        const NameSet b = meet(c[static_cast<std::size_t>(i - 1)], reach);
        EXPECT_EQ(names_of(t.family.at(i), f.complex), b);
        EXPECT_EQ(names_of(t.family.at(-i), f.complex), mirror(b, a));
        EXPECT_TRUE(meet(b, mirror(b, a)).empty());
        family.push_back(b);
        family.push_back(mirror(b, a));
    }
    EXPECT_TRUE(oracle::covers(oracle::raw(f.complex), family));
}

TEST(FanTransform, EmptyMemberStillDefined)
{
    // Two disjoint triangles swapped by A: not of Borsuk-Ulam type, so two antipode-free sets can cover.
    const Complex c = Complex::from_facets({{"a", "b"}, {"b", "c"}, {"c", "a"}, {"x", "y"}, {"y", "z"}, {"z", "x"}});
    const Involution a = Involution::from_pairs(c, {{"a", "x"}, {"b", "y"}, {"c", "z"}});
    const std::vector<ClosedSet> sets{ClosedSet::from_names(c, "C1", {"a", "b", "c"}),
                                      ClosedSet::from_names(c, "C2", {"x", "y", "z"}),
                                      ClosedSet::from_names(c, "C3", {})};
    const auto t = fan_transform(c, sets, a);
    EXPECT_EQ(t.family.size(), 2);
    EXPECT_TRUE(t.pairs_disjoint);
    // B_1 = C1 meet (A(C2) join A(C3)) = C1, B_2 = C2 meet (A(C1) join A(C3)) = C2.
    EXPECT_EQ(t.family.at(1).size(), 3u);
    EXPECT_EQ(t.family.at(2).size(), 3u);
    EXPECT_TRUE(t.union_covers);
}

TEST(FanTransform, Errors)
{
    const auto f = load_tetra();
    std::vector<ClosedSet> three(f.sets.begin(), f.sets.begin() + 3);
    EXPECT_EQ(code_of([&] { fan_transform(f.complex, three, f.involution); }), ErrorCode::InvalidArgument);
    auto holes = f.sets;
    holes[3] = ClosedSet::from_names(f.complex, "C4", {});
    EXPECT_EQ(code_of([&] { fan_transform(f.complex, holes, f.involution); }), ErrorCode::InputNotCovering);
    auto bad = f.sets;
    bad[0] = bad[0].unite(bad[0].image(f.involution, ""), "C1");
    EXPECT_EQ(code_of([&] { fan_transform(f.complex, bad, f.involution); }), ErrorCode::InputNotAntipodeFree);
}

TEST(FanTheorem, WitnessForEveryK)
{
    const auto f = load_tetra();
    for (int k = 1; k <= 3; ++k) {
        const auto w = verify_fan_cover_theorem(f.complex, f.involution, f.sets, k);
        EXPECT_EQ(w.refinements, 0);
        EXPECT_EQ(w.flipped, k < 2);
        // Brute force over every vertex.
        std::set<VertexId> witnesses;
        for (VertexId x = 0; x < w.complex.num_vertices(); ++x) {
            bool ok = true;
            for (int i = 0; i < 4; ++i)
                ok = ok && w.sets[static_cast<std::size_t>(i)].contains(i < k ? x : w.involution(x));
            if (ok)
                witnesses.insert(x);
        }
        EXPECT_TRUE(witnesses.count(w.vertex)) << k;
        EXPECT_TRUE(is_fan_witness(w.sets, w.involution, k, w.vertex));
    }
}

TEST(FanTheorem, ExpectedWitnessVertices)
{
    const auto f = load_tetra();
    EXPECT_TRUE(is_fan_witness(f.sets, f.involution, 2, f.complex.id("+1")));
    EXPECT_TRUE(is_fan_witness(f.sets, f.involution, 1, f.complex.id("(+1,+2,+3)")));
    EXPECT_TRUE(is_fan_witness(f.sets, f.involution, 3, f.complex.id("(+1,+2,-3)")));
}

TEST(FanTheorem, RejectsBadK)
{
    const auto f = load_tetra();
    EXPECT_EQ(code_of([&] { verify_fan_cover_theorem(f.complex, f.involution, f.sets, 0); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([&] { verify_fan_cover_theorem(f.complex, f.involution, f.sets, 4); }), ErrorCode::InvalidArgument);
}

TEST(Ls, OctahedronThreeSets)
{
    const auto s = crosspolytope_sphere(2);
    const std::vector<ClosedSet> sets{ClosedSet::from_names(s.complex, "S1", {"+1", "+2", "+3"}),
                                      ClosedSet::from_names(s.complex, "S2", {"-1", "+2", "+3"}),
                                      ClosedSet::from_names(s.complex, "S3", {"+1", "-2", "-3"})};
    const auto r = ls_corollary_check(s.complex, s.involution, sets);
    EXPECT_FALSE(r.violation);
    ASSERT_TRUE(r.uncovered_facet.has_value());
    bool inside = false;
    for (const auto& set : sets)
        inside = inside || set.contains(*r.uncovered_facet);
    EXPECT_FALSE(inside);
}

TEST(Ls, EmptyFamily)
{
    const auto s = crosspolytope_sphere(2);
    const auto r = ls_corollary_check(s.complex, s.involution, {});
    EXPECT_FALSE(r.violation);
    EXPECT_TRUE(r.uncovered_facet.has_value());
}

TEST(Ls, Errors)
{
    const auto s = crosspolytope_sphere(2);
    const std::vector<ClosedSet> bad{ClosedSet::from_names(s.complex, "S", {"+1", "-1"})};
    EXPECT_EQ(code_of([&] { ls_corollary_check(s.complex, s.involution, bad); }), ErrorCode::PreconditionViolated);
    const std::vector<ClosedSet> many(4, ClosedSet::from_names(s.complex, "S", {"+1"}));
    EXPECT_EQ(code_of([&] { ls_corollary_check(s.complex, s.involution, many); }), ErrorCode::InvalidArgument);
}

TEST(Ls, NonBorsukUlamInputIsReported)
{
    const Complex c = Complex::from_facets({{"a", "b"}, {"b", "c"}, {"c", "a"}, {"x", "y"}, {"y", "z"}, {"z", "x"}});
    const Involution a = Involution::from_pairs(c, {{"a", "x"}, {"b", "y"}, {"c", "z"}});
    const std::vector<ClosedSet> sets{ClosedSet::from_names(c, "C1", {"a", "b", "c"}),
                                      ClosedSet::from_names(c, "C2", {"x", "y", "z"})};
    EXPECT_TRUE(ls_corollary_check(c, a, sets).violation);
}

TEST(Lift, SetMembershipFollowsCarriers)
{
    const auto s = crosspolytope_sphere(2);
    const auto sd = barycentric_subdivision(s.complex);
    const auto set = ClosedSet::from_names(s.complex, "S", {"+1", "+2", "-3"});
    const auto lifted = lift_set(set, sd);
    for (VertexId v = 0; v < sd.complex.num_vertices(); ++v)
        EXPECT_EQ(lifted.contains(v), set.contains(sd.carrier[v]));
    EXPECT_EQ(lifted.size(), 3u + 3u + 1u);
}
