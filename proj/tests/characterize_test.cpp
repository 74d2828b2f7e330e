#include <gtest/gtest.h>

#include <random>

#include "ehrkit/characterize.hpp"
#include "test_util.hpp"

using namespace ehrkit;
using namespace ehrkit::testing;

namespace {

SearchOptions small_budget(std::size_t n) {
    SearchOptions o;
    o.budget = n;
    return o;
}

} // namespace

TEST(Witness, SimplexTranslateOneThird) {
    auto p = standard_triangle();
    RatVector c = rv({"1/3", "1/3"});
    EXPECT_EQ(count_points(p, c, 1), 0);
    EXPECT_EQ(count_points(p, -c, 1), 1);
}

TEST(Witness, SimplexAsymmetry) {
    auto r = asymmetry_witness(standard_triangle());
    ASSERT_TRUE(r.found);
    EXPECT_EQ(r.kind, WitnessKind::asymmetry);
    EXPECT_EQ((r.first_residue + r.second_residue) % r.period, 0u);
    EXPECT_NE(r.first, r.second);
    EXPECT_TRUE(verify_witness(standard_triangle(), r));
}

TEST(Witness, PentagonAsymmetryAtSmallDenominator) {
    auto r = asymmetry_witness(pentagon());
    ASSERT_TRUE(r.found);
    EXPECT_LE(r.period, 4u);
    EXPECT_TRUE(verify_witness(pentagon(), r));
}

TEST(Witness, OctahedronGcdViolation) {
    auto oct = octahedron();
    auto r = gcd_violation_witness(oct);
    ASSERT_TRUE(r.found);
    EXPECT_EQ(r.period % 2, 1u);
    EXPECT_EQ(r.first_residue, 1u);
    EXPECT_EQ(r.second_residue, 2u);
    EXPECT_TRUE(verify_witness(oct, r));
    auto sym = asymmetry_witness(oct, small_budget(300));
    EXPECT_FALSE(sym.found);
    EXPECT_EQ(sym.attempts, 300u);
    EXPECT_THROW(require_witness(sym), BudgetExhausted);
}

TEST(Witness, SimplexGcdViolationHasOddDenominator) {
    auto r = gcd_violation_witness(standard_triangle());
    ASSERT_TRUE(r.found);
    EXPECT_EQ(r.period % 2, 1u);
    EXPECT_TRUE(verify_witness(standard_triangle(), r));
}

TEST(Witness, CubeExhaustsBothSearches) {
    auto cube = unit_cube(3);
    auto a = asymmetry_witness(cube, small_budget(500));
    auto g = gcd_violation_witness(cube, small_budget(500));
    EXPECT_FALSE(a.found);
    EXPECT_FALSE(g.found);
    EXPECT_EQ(a.attempts, 500u);
    EXPECT_EQ(g.attempts, 500u);
}

TEST(Witness, TamperedReportFailsVerification) {
    auto p = standard_triangle();
    auto r = asymmetry_witness(p);
    ASSERT_TRUE(r.found);
    auto swapped = r;
    std::swap(swapped.first, swapped.second);
    EXPECT_FALSE(verify_witness(p, swapped));
    auto wrong_pair = r;
    wrong_pair.second_residue = 1;
    EXPECT_FALSE(verify_witness(p, wrong_pair));
}

TEST(Witness, DeterministicAcrossJobs) {
    SearchOptions one, four;
    four.jobs = 4;
    one.seed = four.seed = 9;
    auto a = gcd_violation_witness(pentagon(), one);
    auto b = gcd_violation_witness(pentagon(), four);
    ASSERT_TRUE(a.found);
    EXPECT_EQ(a.translate, b.translate);
    EXPECT_EQ(a.attempts, b.attempts);
}

TEST(Witness, SymmetricPolytopesNeverYieldAsymmetry) {
    std::mt19937_64 rng(51);
    for (int iter = 0; iter < 6; ++iter) {
        auto pts = random_points(rng, 2, 3, -2, 2);
        auto n = pts.size();
        for (std::size_t i = 0; i < n; ++i) pts.push_back(-pts[i]);
        LatticePolytope p(pts);
        EXPECT_FALSE(asymmetry_witness(p, small_budget(200)).found);
    }
    // Zonotopes never yield a GCD violation.
    auto hexagon = lattice({{0, 0}, {1, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 1}});
    EXPECT_FALSE(gcd_violation_witness(hexagon, small_budget(300)).found);
}

TEST(Classify, Verdicts) {
    auto cube = classify(unit_cube(3));
    EXPECT_TRUE(cube.centrally_symmetric);
    EXPECT_TRUE(cube.zonotope);
    EXPECT_TRUE(cube.facet_violations.empty());

    ClassifyOptions opt;
    opt.witness = true;
    auto oct = classify(octahedron(), opt);
    EXPECT_TRUE(oct.centrally_symmetric);
    EXPECT_FALSE(oct.zonotope);
    EXPECT_FALSE(oct.asymmetry.has_value());
    ASSERT_TRUE(oct.gcd_violation.has_value());
    EXPECT_TRUE(oct.gcd_violation->found);

    auto pn = classify(p_n(8), opt);
    EXPECT_FALSE(pn.centrally_symmetric);
    EXPECT_FALSE(pn.facet_violations.empty());
    ASSERT_TRUE(pn.asymmetry.has_value());
    EXPECT_TRUE(pn.asymmetry->found);
    EXPECT_TRUE(verify_witness(p_n(8), *pn.asymmetry));

    auto point = classify(lattice({{1, 1}}), opt);
    EXPECT_TRUE(point.centrally_symmetric);
    EXPECT_TRUE(point.zonotope);
}
