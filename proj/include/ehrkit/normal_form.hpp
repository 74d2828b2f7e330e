#pragma once

// Smith and Hermite normal forms over Z, and the lattice questions built on
// them: relative volume of a lattice parallelepiped and whether a rational
// affine subspace meets Z^d.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ehrkit/errors.hpp"
#include "ehrkit/matrix.hpp"
#include "ehrkit/rational.hpp"

namespace ehrkit {

/// U * W * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... | d_r, d_i > 0.
struct SnfDecomposition {
    IntMatrix U;
    IntMatrix V;
    IntMatrix D;
    std::size_t rank = 0;

    std::vector<Integer> invariant_factors() const {
        std::vector<Integer> f;
        for (std::size_t i = 0; i < rank; ++i) f.push_back(D(i, i));
        return f;
    }
};

namespace detail {

inline bool find_smallest(const IntMatrix& a, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            Integer m = abs(a(i, j));
            if (!found || m < best) {
                best = m;
                pi = i;
                pj = j;
                found = true;
            }
        }
    return found;
}

inline Integer trunc_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

} // namespace detail

/// Smith normal form with smallest-entry pivoting; deterministic for a given input.
inline SnfDecomposition snf(const IntMatrix& w) {
    const std::size_t d = w.rows(), k = w.cols();
    IntMatrix a = w;
    IntMatrix u = IntMatrix::identity(d);
    IntMatrix v = IntMatrix::identity(k);
    std::size_t t = 0;
    for (; t < std::min(d, k); ++t) {
        std::size_t pi = 0, pj = 0;
        if (!detail::find_smallest(a, t, pi, pj)) break;
        for (;;) {
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);
            const Integer p = a(t, t);
            bool dirty = false;
            for (std::size_t i = t + 1; i < d; ++i) {
                if (a(i, t) == 0) continue;
                Integer q = detail::trunc_div(a(i, t), p);
                a.add_row_multiple(i, t, -q);
                u.add_row_multiple(i, t, -q);
                dirty = dirty || a(i, t) != 0;
            }
            for (std::size_t j = t + 1; j < k; ++j) {
                if (a(t, j) == 0) continue;
                Integer q = detail::trunc_div(a(t, j), p);
                a.add_col_multiple(j, t, -q);
                v.add_col_multiple(j, t, -q);
                dirty = dirty || a(t, j) != 0;
            }
            if (!dirty) {
                // Row and column cleared; enforce divisibility of the remaining block.
                for (std::size_t i = t + 1; i < d && !dirty; ++i)
                    for (std::size_t j = t + 1; j < k; ++j)
                        if (a(i, j) % p != 0) {
                            a.add_row_multiple(t, i, Integer(1));
                            u.add_row_multiple(t, i, Integer(1));
                            dirty = true;
                            break;
                        }
            }
            if (!dirty) break;
            detail::find_smallest(a, t, pi, pj);
        }
        if (a(t, t) < 0) {
            a.negate_row(t);
            u.negate_row(t);
        }
    }
    return SnfDecomposition{std::move(u), std::move(v), std::move(a), t};
}

/// Row-style Hermite normal form of the lattice spanned by the rows of m:
/// echelon rows with positive pivots and entries above each pivot in [0, pivot).
/// Zero rows are dropped.
inline IntMatrix hnf(const IntMatrix& m) {
    IntMatrix a = m;
    std::size_t r = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        // Euclid on column c among rows r.. until a single nonzero remains.
        for (;;) {
            std::size_t best = a.rows();
            for (std::size_t i = r; i < a.rows(); ++i)
                if (a(i, c) != 0 && (best == a.rows() || abs(a(i, c)) < abs(a(best, c)))) best = i;
            if (best == a.rows()) break;
            a.swap_rows(r, best);
            bool others = false;
            for (std::size_t i = r + 1; i < a.rows(); ++i) {
                if (a(i, c) == 0) continue;
                a.add_row_multiple(i, r, -detail::trunc_div(a(i, c), a(r, c)));
                others = others || a(i, c) != 0;
            }
            if (!others) break;
        }
        if (a(r, c) == 0) continue;
        if (a(r, c) < 0) a.negate_row(r);
        for (std::size_t i = 0; i < r; ++i) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
            if (q != 0) a.add_row_multiple(i, r, -q);
        }
        pivots.push_back(c);
        ++r;
    }
    IntMatrix out(r, a.cols());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    return out;
}

/// Inverse of a unimodular integer matrix.
inline IntMatrix unimodular_inverse(const IntMatrix& u) {
    const std::size_t n = u.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = u(i, j);
        aug(i, n + i) = 1;
    }
    auto red = row_echelon(aug).reduced;
    IntMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!is_integral(red(i, n + j))) throw Error("matrix is not unimodular");
            inv(i, j) = red(i, n + j).get_num();
        }
    return inv;
}

/// gcd of all k x k minors of a d x k matrix of rank k, i.e. the relative
/// volume of the lattice parallelepiped spanned by its columns.
inline Integer gcd_maximal_minors(const IntMatrix& w) {
    auto s = snf(w);
    if (s.rank != w.cols()) throw RankDeficient("columns are linearly dependent");
    Integer p = 1;
    for (const auto& f : s.invariant_factors()) p *= f;
    return p;
}

/// Some integer point of v + span(columns of w), or nothing if the affine
/// subspace misses Z^d. w may have zero columns.
inline std::optional<IntVector> affine_lattice_point(const IntMatrix& w, const RatVector& v) {
    if (v.size() != w.rows()) throw DimensionMismatch("translation length differs from row count");
    auto s = snf(w);
    RatVector y = s.U * v;
    IntVector yi(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (i >= s.rank && !is_integral(y[i])) return std::nullopt;
        yi[i] = floor_of(y[i]);
    }
    return unimodular_inverse(s.U) * yi;
}

/// Whether some rational combination of the columns of w moves v onto Z^d.
inline bool affine_lattice_nonempty(const IntMatrix& w, const RatVector& v) {
    if (v.size() != w.rows()) throw DimensionMismatch("translation length differs from row count");
    auto s = snf(w);
    RatVector y = s.U * v;
    for (std::size_t i = s.rank; i < y.size(); ++i)
        if (!is_integral(y[i])) return false;
    return true;
}

/// Precomputed form of affine_lattice_nonempty for repeated queries against
/// the same column set.
class AffineLatticeTest {
public:
    explicit AffineLatticeTest(const IntMatrix& w) : snf_(snf(w)) {}

    bool nonempty(const RatVector& v) const {
        if (v.size() != snf_.U.cols()) throw DimensionMismatch("translation length differs from row count");
        for (std::size_t i = snf_.rank; i < snf_.U.rows(); ++i) {
            Rational s = 0;
            for (std::size_t j = 0; j < v.size(); ++j) s += snf_.U(i, j) * v[j];
            if (!is_integral(s)) return false;
        }
        return true;
    }

    std::size_t rank() const { return snf_.rank; }

private:
    SnfDecomposition snf_;
};

/// Hermite-reduced basis of span(vectors) ∩ Z^n.
inline std::vector<IntVector> saturated_lattice_basis(const std::vector<IntVector>& vectors, std::size_t n) {
    RatMatrix rows(vectors.size(), n);
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) rows(i, j) = vectors[i][j];
    if (rank(rows) == 0) return {};
    auto normals = integer_nullspace_basis(rows); // span(vectors)^perp
    IntMatrix nm = IntMatrix::from_rows(n, normals);
    // Integer kernel of the normal matrix: the trailing columns of V in its SNF.
    std::vector<IntVector> kernel;
    if (normals.empty()) {
        for (std::size_t i = 0; i < n; ++i) {
            IntVector e(n);
            e[i] = 1;
            kernel.push_back(e);
        }
    } else {
        auto s = snf(nm);
        for (std::size_t j = s.rank; j < n; ++j) kernel.push_back(s.V.column(j));
    }
    auto h = hnf(IntMatrix::from_rows(n, kernel));
    std::vector<IntVector> basis;
    for (std::size_t i = 0; i < h.rows(); ++i) basis.push_back(h.row(i));
    return basis;
}

} // namespace ehrkit
