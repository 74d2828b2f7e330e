#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "ehrkit/polytope.hpp"
#include "test_util.hpp"

using namespace ehrkit;
using namespace ehrkit::testing;

namespace {

// Independent vertex oracle: a point of the input is a vertex iff it is not
// a convex combination of the others, decided by trying every set of d+1
// other points (Carathéodory) with exact barycentric coordinates.
bool in_simplex_hull(const std::vector<IntVector>& pts, std::size_t skip, const IntVector& x, std::size_t d) {
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (i != skip && pts[i] != x) others.push_back(i);
    std::vector<std::size_t> pick;
    std::function<bool(std::size_t)> rec = [&](std::size_t start) -> bool {
        if (!pick.empty()) {
            // Solve sum l_i p_i = x, sum l_i = 1, l >= 0.
            const std::size_t k = pick.size();
            RatMatrix a(d + 1, k + 1);
            for (std::size_t j = 0; j < k; ++j) {
                for (std::size_t i = 0; i < d; ++i) a(i, j) = pts[pick[j]][i];
                a(d, j) = 1;
            }
            for (std::size_t i = 0; i < d; ++i) a(i, k) = x[i];
            a(d, k) = 1;
            auto e = row_echelon(a);
            bool consistent = std::find(e.pivot_columns.begin(), e.pivot_columns.end(), k) == e.pivot_columns.end();
            if (consistent && e.pivot_columns.size() == k) {
                bool nonneg = true;
                for (std::size_t r = 0; r < k; ++r) nonneg = nonneg && e.reduced(r, k) >= 0;
                if (nonneg) return true;
            }
        }
        if (pick.size() == d + 1) return false;
        for (std::size_t i = start; i < others.size(); ++i) {
            pick.push_back(others[i]);
            if (rec(i + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    return rec(0);
}

std::vector<IntVector> oracle_vertices(const std::vector<IntVector>& pts, std::size_t d) {
    std::set<IntVector> out;
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (!in_simplex_hull(pts, i, pts[i], d)) out.insert(pts[i]);
    return {out.begin(), out.end()};
}

} // namespace

TEST(Polytope, CubeStructure) {
    auto c = unit_cube(3);
    EXPECT_EQ(c.vertices().size(), 8u);
    EXPECT_EQ(c.dim(), 3u);
    EXPECT_EQ(c.inequalities().size(), 6u);
    EXPECT_TRUE(c.equalities().empty());
    for (const auto& in : c.inequalities()) {
        EXPECT_EQ(c.facet_vertices(&in - c.inequalities().data()).size(), 4u);
    }
}

TEST(Polytope, InteriorPointsDropped) {
    auto p = lattice({{0, 0}, {2, 0}, {0, 2}, {1, 1}, {1, 0}, {0, 1}, {2, 2}});
    EXPECT_EQ(p.vertices(), (std::vector<IntVector>{iv({0, 0}), iv({0, 2}), iv({2, 0}), iv({2, 2})}));
}

TEST(Polytope, PentagonInequalities) {
    auto p = pentagon();
    ASSERT_EQ(p.inequalities().size(), 5u);
    // Every vertex satisfies every inequality, with equality on exactly two facets.
    for (const auto& v : p.vertices()) {
        int tight = 0;
        for (const auto& in : p.inequalities()) {
            Integer ax = dot(in.normal, v);
            EXPECT_LE(Rational(ax), in.offset);
            if (Rational(ax) == in.offset) ++tight;
        }
        EXPECT_EQ(tight, 2);
    }
}

TEST(Polytope, LowerDimensional) {
    auto seg = lattice({{0, 0, 0}, {2, 4, 6}});
    EXPECT_EQ(seg.dim(), 1u);
    EXPECT_EQ(seg.equalities().size(), 2u);
    EXPECT_EQ(relative_volume(seg), 2);
    auto tri = lattice({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    EXPECT_EQ(tri.dim(), 2u);
    EXPECT_EQ(relative_volume(tri), q("1/2"));
    auto pt = lattice({{3, 4}});
    EXPECT_EQ(pt.dim(), 0u);
    EXPECT_EQ(relative_volume(pt), 1);
}

TEST(Polytope, Volumes) {
    EXPECT_EQ(relative_volume(unit_cube(3)), 1);
    EXPECT_EQ(relative_volume(octahedron()), q("4/3"));
    EXPECT_EQ(relative_volume(pentagon()), q("7/2"));
    // Wedge over the square plus the pyramid below it: n^2/2 + n^2 (n-1)/3.
    EXPECT_EQ(relative_volume(p_n(8)), q("32") + q("448/3"));
}

TEST(Polytope, FaceLatticeEuler) {
    std::mt19937_64 rng(3);
    for (int iter = 0; iter < 40; ++iter) {
        auto p = LatticePolytope(random_points(rng, 3, 6 + iter % 5, -3, 3));
        auto levels = face_lattice(p);
        long euler = 0;
        for (std::size_t k = 0; k < p.dim(); ++k) euler += (k % 2 == 0 ? 1 : -1) * static_cast<long>(levels[k].size());
        long expected = p.dim() == 3 ? 2 : p.dim() == 2 ? 0 : p.dim() == 1 ? 2 : 0;
        if (p.dim() >= 1) {
            EXPECT_EQ(euler, expected);
        }
        if (p.dim() == 3) EXPECT_EQ(levels[0].size(), p.vertices().size());
    }
}

TEST(Polytope, VerticesMatchOracle) {
    std::mt19937_64 rng(4);
    for (int iter = 0; iter < 60; ++iter) {
        std::size_t d = 2 + iter % 2;
        auto pts = random_points(rng, d, 5 + iter % 5, -3, 3);
        LatticePolytope p(pts);
        if (p.dim() != d) continue;
        EXPECT_EQ(p.vertices(), oracle_vertices(pts, d)) << iter;
    }
}

TEST(Polytope, HRepContainsExactlyTheHull) {
    std::mt19937_64 rng(5);
    for (int iter = 0; iter < 40; ++iter) {
        auto pts = random_points(rng, 3, 7, -2, 2);
        LatticePolytope p(pts);
        for (const auto& x : pts) {
            for (const auto& in : p.inequalities()) ASSERT_LE(Rational(dot(in.normal, x)), in.offset);
            for (const auto& eq : p.equalities()) ASSERT_EQ(Rational(dot(eq.normal, x)), eq.offset);
        }
        // Each facet contains at least dim affinely independent vertices.
        for (std::size_t i = 0; i < p.inequalities().size(); ++i)
            ASSERT_EQ(affine_dimension(p, p.facet_vertices(i)), p.dim() - 1);
    }
}

TEST(Polytope, CentralSymmetry) {
    auto c = is_centrally_symmetric(unit_cube(3));
    ASSERT_TRUE(c);
    EXPECT_EQ(*c, rv({"1", "1", "1"}));
    EXPECT_TRUE(is_centrally_symmetric(octahedron()));
    EXPECT_FALSE(is_centrally_symmetric(pentagon()));
    EXPECT_FALSE(is_centrally_symmetric(standard_triangle()));
}

TEST(Polytope, MinkowskiCheckEmptyIffSymmetric) {
    std::mt19937_64 rng(6);
    for (int iter = 0; iter < 60; ++iter) {
        auto pts = random_points(rng, 3, 4, -2, 2);
        if (iter % 2 == 0) {
            auto n = pts.size();
            for (std::size_t i = 0; i < n; ++i) pts.push_back(-pts[i]);
        }
        LatticePolytope p(pts);
        if (p.dim() == 0) continue;
        EXPECT_EQ(minkowski_facet_check(p).empty(), is_centrally_symmetric(p).has_value()) << iter;
    }
    auto v = minkowski_facet_check(standard_triangle());
    EXPECT_EQ(v.size(), 3u);
}

TEST(Polytope, ZonotopeRecognition) {
    EXPECT_TRUE(is_zonotope(unit_cube(3)).is_zonotope);
    auto oct = is_zonotope(octahedron());
    EXPECT_FALSE(oct.is_zonotope);
    ASSERT_TRUE(oct.asymmetric_face);
    EXPECT_EQ(oct.asymmetric_face->vertex_indices.size(), 3u);
    EXPECT_FALSE(is_zonotope(pentagon()).is_zonotope);
    // Hexagon.
    EXPECT_TRUE(is_zonotope(lattice({{0, 0}, {1, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 1}})).is_zonotope);
}

TEST(Polytope, RationalPolytope) {
    RationalPolytope r({rv({"0", "0"}), rv({"1/3", "0"}), rv({"0", "1/2"})});
    EXPECT_EQ(r.dim(), 2u);
    EXPECT_EQ(r.inequalities().size(), 3u);
    EXPECT_THROW(LatticePolytope(std::vector<IntVector>{}), Error);
}

TEST(Polytope, TranslationLengthChecked) {
    EXPECT_THROW(AlmostIntegralPolytope(pentagon(), rv({"1/2"})), DimensionMismatch);
    AlmostIntegralPolytope a(pentagon(), rv({"1/2", "1/3"}));
    EXPECT_EQ(a.denominator(), 6);
}
