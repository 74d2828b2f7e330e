#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "ehrkit/normal_form.hpp"
#include "test_util.hpp"

using namespace ehrkit;
using ehrkit::testing::iv;
using ehrkit::testing::rv;

namespace {

IntMatrix columns(std::size_t d, std::vector<IntVector> cols) { return IntMatrix::from_columns(d, cols); }

// Independent oracle: gcd over all k x k minors, by explicit row-subset enumeration.
Integer gcd_of_minors(const IntMatrix& w) {
    const std::size_t d = w.rows(), k = w.cols();
    Integer g = 0;
    std::vector<std::size_t> rows(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
        if (depth == k) {
            IntMatrix m(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) m(i, j) = w(rows[i], j);
            g = gcd(g, determinant(m));
            return;
        }
        for (std::size_t r = start; r < d; ++r) {
            rows[depth] = r;
            rec(r + 1, depth + 1);
        }
    };
    rec(0, 0);
    return g;
}

// Independent oracle: some z ∈ Z^d near v with z - v ∈ span(W).
bool meets_lattice_by_search(const IntMatrix& w, const RatVector& v) {
    const std::size_t d = w.rows();
    long radius = 1;
    for (std::size_t j = 0; j < w.cols(); ++j) {
        long m = 0;
        for (std::size_t i = 0; i < d; ++i) m = std::max(m, Integer(abs(w(i, j))).get_si());
        radius += m;
    }
    auto normals = integer_nullspace_basis(to_rational(w.transposed()));
    std::vector<Rational> targets;
    for (auto& n : normals) targets.push_back(dot(n, v));
    IntVector z(d);
    for (std::size_t i = 0; i < d; ++i) z[i] = floor_of(v[i]) - radius;
    for (;;) {
        bool on = true;
        for (std::size_t k = 0; k < normals.size() && on; ++k) on = Rational(dot(normals[k], z)) == targets[k];
        if (on) return true;
        std::size_t i = 0;
        while (i < d && z[i] == floor_of(v[i]) + radius) z[i] = floor_of(v[i]) - radius, ++i;
        if (i == d) return false;
        ++z[i];
    }
}

} // namespace

TEST(Snf, IdentityIsFixed) {
    auto s = snf(IntMatrix::identity(2));
    EXPECT_EQ(s.D, IntMatrix::identity(2));
    EXPECT_EQ(s.U, IntMatrix::identity(2));
    EXPECT_EQ(s.V, IntMatrix::identity(2));
    EXPECT_EQ(s.rank, 2u);
}

TEST(Snf, SingleColumn) {
    auto s = snf(columns(2, {iv({2, 4})}));
    ASSERT_EQ(s.rank, 1u);
    EXPECT_EQ(s.invariant_factors(), std::vector<Integer>{2});
}

TEST(Snf, SaturatedPairHasUnitFactors) {
    auto s = snf(columns(3, {iv({1, 1, 0}), iv({0, 1, 1})}));
    EXPECT_EQ(s.invariant_factors(), (std::vector<Integer>{1, 1}));
}

TEST(Snf, EmptyMatrix) {
    auto s = snf(IntMatrix(3, 0));
    EXPECT_EQ(s.rank, 0u);
    EXPECT_EQ(s.U, IntMatrix::identity(3));
}

TEST(Snf, RandomRoundTripAndDivisibility) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> entry(-20, 20), size(1, 8);
    for (int iter = 0; iter < 300; ++iter) {
        std::size_t d = static_cast<std::size_t>(size(rng)), k = static_cast<std::size_t>(size(rng));
        IntMatrix w(d, k);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < k; ++j) w(i, j) = iter % 5 == 0 ? entry(rng) % 3 : entry(rng);
        auto s = snf(w);
        ASSERT_EQ(s.U * w * s.V, s.D);
        ASSERT_EQ(abs(determinant(s.U)), 1);
        ASSERT_EQ(abs(determinant(s.V)), 1);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                if (i != j || i >= s.rank) ASSERT_EQ(s.D(i, j), 0);
                else ASSERT_GT(s.D(i, j), 0);
            }
        for (std::size_t i = 1; i < s.rank; ++i) ASSERT_EQ(s.D(i, i) % s.D(i - 1, i - 1), 0);
        ASSERT_EQ(s.rank, rank(w));
        // Determinism.
        auto again = snf(w);
        ASSERT_EQ(again.U, s.U);
        ASSERT_EQ(again.V, s.V);
    }
}

TEST(GcdMaximalMinors, Examples) {
    EXPECT_EQ(gcd_maximal_minors(columns(2, {iv({2, 4})})), 2);
    EXPECT_EQ(gcd_maximal_minors(IntMatrix::identity(3)), 1);
    EXPECT_EQ(gcd_maximal_minors(columns(3, {iv({1, 1, 0}), iv({0, 1, 1})})), 1);
}

TEST(GcdMaximalMinors, RankDeficientThrows) {
    EXPECT_THROW(gcd_maximal_minors(columns(2, {iv({1, 2}), iv({2, 4})})), RankDeficient);
}

TEST(GcdMaximalMinors, AgreesWithMinorEnumeration) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> entry(-6, 6), dim(1, 5);
    int checked = 0;
    while (checked < 200) {
        std::size_t d = static_cast<std::size_t>(dim(rng));
        std::size_t k = 1 + static_cast<std::size_t>(dim(rng)) % d;
        IntMatrix w(d, k);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < k; ++j) w(i, j) = entry(rng);
        if (rank(w) != k) continue;
        ASSERT_EQ(gcd_maximal_minors(w), gcd_of_minors(w));
        ++checked;
    }
}

TEST(AffineLattice, Examples) {
    EXPECT_TRUE(affine_lattice_nonempty(IntMatrix(2, 0), rv({"1", "0"})));
    EXPECT_FALSE(affine_lattice_nonempty(IntMatrix(2, 0), rv({"1/2", "0"})));
    IntMatrix xy = columns(3, {iv({1, 0, 0}), iv({0, 1, 0})});
    EXPECT_TRUE(affine_lattice_nonempty(xy, rv({"1/3", "2/3", "1"})));
    EXPECT_FALSE(affine_lattice_nonempty(xy, rv({"1/9", "2/9", "1/3"})));
    EXPECT_THROW(affine_lattice_nonempty(xy, rv({"1", "2"})), DimensionMismatch);
}

TEST(AffineLattice, LatticePointLiesOnSubspace) {
    IntMatrix w = columns(3, {iv({1, 2, 0}), iv({0, 3, 3})});
    RatVector v = rv({"1/2", "1/3", "5/6"});
    auto z = affine_lattice_point(w, v);
    ASSERT_EQ(z.has_value(), affine_lattice_nonempty(w, v));
    if (z) {
        std::vector<IntVector> cols = {w.column(0), w.column(1)};
        std::vector<RatVector> vecs = {to_rational(cols[0]), to_rational(cols[1]), to_rational(*z) - v};
        EXPECT_EQ(rank_of(vecs, 3), 2u);
    }
}

TEST(AffineLattice, AgreesWithBruteForceSearch) {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> entry(-3, 3), rows(2, 3), dens(1, 6), nums(-6, 6);
    for (int iter = 0; iter < 250; ++iter) {
        std::size_t d = static_cast<std::size_t>(rows(rng));
        IntMatrix w(d, 2);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < 2; ++j) w(i, j) = entry(rng);
        RatVector v(d);
        for (auto& x : v) x = make_rational(nums(rng), dens(rng));
        bool fast = affine_lattice_nonempty(w, v);
        ASSERT_EQ(fast, meets_lattice_by_search(w, v)) << iter;
        // Integer shifts do not change the answer.
        RatVector shifted = v;
        shifted[0] += 3;
        shifted[d - 1] -= 2;
        ASSERT_EQ(affine_lattice_nonempty(w, shifted), fast);
        ASSERT_EQ(affine_lattice_point(w, v).has_value(), fast);
    }
}

TEST(Hnf, SaturatedBasisOfLine) {
    auto basis = saturated_lattice_basis({iv({2, 4})}, 2);
    ASSERT_EQ(basis.size(), 1u);
    EXPECT_EQ(basis[0], iv({1, 2}));
    EXPECT_TRUE(saturated_lattice_basis({}, 3).empty());
    EXPECT_EQ(saturated_lattice_basis({iv({1, 0}), iv({0, 2})}, 2).size(), 2u);
}

TEST(Hnf, CanonicalForm) {
    IntMatrix m = IntMatrix::from_rows(2, {iv({4, 6}), iv({2, 2})});
    IntMatrix h = hnf(m);
    // Lattice generated by (4,6),(2,2) has basis (2,0),(0,2) with det 4.
    EXPECT_EQ(h, IntMatrix::from_rows(2, {iv({2, 0}), iv({0, 2})}));
}
