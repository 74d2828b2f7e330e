#pragma once

// Lattice-point counting in dilated, translated polytopes and the
// (quasi-)polynomials interpolated from those counts.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "ehrkit/errors.hpp"
#include "ehrkit/matrix.hpp"
#include "ehrkit/normal_form.hpp"
#include "ehrkit/parallel.hpp"
#include "ehrkit/polynomial.hpp"
#include "ehrkit/polytope.hpp"
#include "ehrkit/quasi_polynomial.hpp"
#include "ehrkit/rational.hpp"

namespace ehrkit {

namespace detail {

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Integer ceil_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

/// Integer points x in the box [lo, hi] with A x <= rhs. The outer d-1
/// coordinates are enumerated; the last one is solved as an interval.
template <class Int>
class BoxCounter {
public:
    BoxCounter(std::vector<std::vector<Int>> a, std::vector<Int> rhs, std::vector<Int> lo, std::vector<Int> hi)
        : a_(std::move(a)), rhs_(std::move(rhs)), lo_(std::move(lo)), hi_(std::move(hi)), d_(lo_.size()) {
        // A constraint is fully determined once its last nonzero coordinate is fixed.
        settled_at_.assign(d_, {});
        for (std::size_t i = 0; i < a_.size(); ++i) {
            std::size_t last = 0;
            bool any = false;
            for (std::size_t j = 0; j < d_; ++j)
                if (a_[i][j] != 0) last = j, any = true;
            if (!any) constant_.push_back(i);
            else if (last + 1 < d_) settled_at_[last].push_back(i);
        }
    }

    Integer count() const {
        for (auto i : constant_)
            if (rhs_[i] < 0) return 0;
        std::vector<Int> partial(a_.size(), Int(0));
        return recurse(0, partial);
    }

private:
    Integer recurse(std::size_t level, std::vector<Int>& partial) const {
        if (level + 1 == d_) {
            Int lo = lo_[level], hi = hi_[level];
            for (std::size_t i = 0; i < a_.size(); ++i) {
                const Int& c = a_[i][level];
                Int rem = rhs_[i] - partial[i];
                if (c > 0) hi = std::min(hi, Int(floor_div(rem, c)));
                else if (c < 0) lo = std::max(lo, Int(ceil_div(rem, c)));
                else if (rem < 0) return 0;
                if (lo > hi) return 0;
            }
            return Integer(hi - lo + 1);
        }
        Integer total = 0;
        std::vector<Int> next(partial.size());
        for (Int x = lo_[level]; x <= hi_[level]; ++x) {
            for (std::size_t i = 0; i < a_.size(); ++i) next[i] = partial[i] + a_[i][level] * x;
            bool ok = true;
            for (auto i : settled_at_[level])
                if (next[i] > rhs_[i]) {
                    ok = false;
                    break;
                }
            if (ok) total += recurse(level + 1, next);
        }
        return total;
    }

    std::vector<std::vector<Int>> a_;
    std::vector<Int> rhs_, lo_, hi_;
    std::size_t d_;
    std::vector<std::vector<std::size_t>> settled_at_;
    std::vector<std::size_t> constant_;
};

inline Integer count_box(const std::vector<IntVector>& a, const IntVector& rhs, const IntVector& lo,
                         const IntVector& hi) {
    const std::size_t d = lo.size();
    for (std::size_t j = 0; j < d; ++j)
        if (lo[j] > hi[j]) return 0;
    Integer bound = 0;
    Integer xmax = 0;
    for (std::size_t j = 0; j < d; ++j) {
        Integer l = abs(lo[j]), h = abs(hi[j]);
        xmax = std::max({xmax, l, h});
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        Integer b = abs(rhs[i]);
        for (const auto& c : a[i]) b += abs(c) * (xmax + 1);
        bound = std::max(bound, b);
    }
    bound = std::max(bound, Integer(xmax + 2));
    if (bound < (Integer(1) << 61)) {
        auto narrow = [](const IntVector& v) {
            std::vector<std::int64_t> r(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i].get_si();
            return r;
        };
        std::vector<std::vector<std::int64_t>> a64;
        for (const auto& row : a) a64.push_back(narrow(row));
        return BoxCounter<std::int64_t>(std::move(a64), narrow(rhs), narrow(lo), narrow(hi)).count();
    }
    return BoxCounter<Integer>(a, rhs, lo, hi).count();
}

} // namespace detail

/// Counts #((c + tP) ∩ Z^d) for a fixed polytope P and varying c, t.
/// Full-dimensional polytopes are counted over a bounding box against the
/// facet inequalities; lower-dimensional ones are first moved into the
/// lattice coordinates of their affine hull.
template <class Scalar>
class TranslatedCounter {
public:
    explicit TranslatedCounter(const Polytope<Scalar>& p) : ambient_(p.ambient_dim()), dim_(p.dim()) {
        auto [lo, hi] = p.bounding_box();
        box_lo_ = std::move(lo);
        box_hi_ = std::move(hi);
        if (dim_ == ambient_) {
            ineqs_ = p.inequalities();
            return;
        }
        auto hull = affine_hull(p);
        origin_ = hull.origin;
        if (dim_ == 0) return;
        IntMatrix basis = IntMatrix::from_columns(ambient_, hull.lattice_basis);
        snf_ = std::make_shared<SnfDecomposition>(snf(basis));
        u_inverse_ = unimodular_inverse(snf_->U);
        to_lattice_ = left_inverse(to_rational(basis));
        std::vector<std::vector<Scalar>> coords;
        for (const auto& v : p.rational_vertices())
            coords.push_back(detail::convert_point<Scalar>(to_lattice_ * (v - origin_)));
        inner_ = std::make_shared<TranslatedCounter>(Polytope<Scalar>(coords));
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return dim_; }

    Integer count(const RatVector& c, const Integer& t) const {
        if (c.size() != ambient_) throw DimensionMismatch("translation vector length differs from the ambient dimension");
        if (t < 0) throw Error("dilation factor must be non-negative");
        if (t == 0) return is_integral(c) ? 1 : 0;
        if (dim_ == ambient_) return count_full(c, t);
        RatVector v = c + scaled(origin_, Rational(t));
        if (dim_ == 0) return is_integral(v) ? 1 : 0;
        // Integer point z of v + aff_0(P), then coordinates relative to it.
        RatVector y = snf_->U * v;
        IntVector yi(y.size());
        for (std::size_t i = 0; i < y.size(); ++i) {
            if (i >= snf_->rank && !is_integral(y[i])) return 0;
            yi[i] = floor_of(y[i]);
        }
        IntVector z = u_inverse_ * yi;
        RatVector omega = to_lattice_ * (v - to_rational(z));
        return inner_->count(omega, t);
    }

private:
    Integer count_full(const RatVector& c, const Integer& t) const {
        IntVector lo(ambient_), hi(ambient_);
        for (std::size_t j = 0; j < ambient_; ++j) {
            lo[j] = ceil_of(c[j] + box_lo_[j] * t);
            hi[j] = floor_of(c[j] + box_hi_[j] * t);
            if (lo[j] > hi[j]) return 0;
        }
        std::vector<IntVector> a;
        IntVector rhs;
        for (const auto& in : ineqs_) {
            a.push_back(in.normal);
            rhs.push_back(floor_of(in.offset * t + dot(in.normal, c)));
        }
        return detail::count_box(a, rhs, lo, hi);
    }

    std::size_t ambient_, dim_;
    RatVector box_lo_, box_hi_;
    std::vector<Inequality> ineqs_;
    RatVector origin_;
    std::shared_ptr<SnfDecomposition> snf_;
    IntMatrix u_inverse_;
    RatMatrix to_lattice_;
    std::shared_ptr<TranslatedCounter> inner_;
};

/// #((c + tP) ∩ Z^d). t = 0 gives [c ∈ Z^d].
template <class Scalar>
Integer count_points(const Polytope<Scalar>& p, const RatVector& c, const Integer& t) {
    return TranslatedCounter<Scalar>(p).count(c, t);
}

/// L_(P,c)(t) = #((c + tP) ∩ Z^d) as a polynomial in t, interpolated on
/// t = 1..dim P + 1 and checked at t = dim P + 2.
inline Polynomial translated_enumerator(const TranslatedCounter<Integer>& counter, const RatVector& c) {
    const std::size_t m = counter.dim();
    std::vector<std::pair<Rational, Rational>> samples;
    for (std::size_t t = 1; t <= m + 1; ++t) samples.emplace_back(Rational(t), Rational(counter.count(c, t)));
    Polynomial f = interpolate(samples);
    Integer guard_t = static_cast<unsigned long>(m + 2);
    if (f(Rational(guard_t)) != Rational(counter.count(c, guard_t)))
        throw InterpolationGuardFailed("enumerator disagrees with direct count at t = " + to_string(guard_t));
    return f;
}

inline Polynomial translated_enumerator(const LatticePolytope& p, const RatVector& c) {
    if (c.size() != p.ambient_dim()) throw DimensionMismatch("translation vector length differs from the ambient dimension");
    return translated_enumerator(TranslatedCounter<Integer>(p), c);
}

/// Ehrhart quasi-polynomial of c + P' with period den(c); the k-th
/// constituent is the translated enumerator of P' at k*c.
inline QuasiPolynomial ehrhart_quasi(const AlmostIntegralPolytope& p, std::size_t jobs = 1) {
    const Integer rho_z = p.denominator();
    if (!rho_z.fits_ulong_p()) throw Error("period too large");
    const std::size_t rho = rho_z.get_ui();
    TranslatedCounter<Integer> counter(p.base);
    std::vector<Polynomial> constituents(rho);
    detail::parallel_for(rho, jobs, [&](std::size_t i) {
        RatVector kc = fractional_part(scaled(p.translate, Rational(static_cast<unsigned long>(i + 1))));
        constituents[i] = translated_enumerator(counter, kc);
    });
    return QuasiPolynomial(std::move(constituents));
}

/// Quasi-polynomial with the given period and constituent degree bound, from
/// a counting function: constituent k is interpolated on t = k + j*period,
/// j = 0..degree, and checked at j = degree + 1.
inline QuasiPolynomial quasi_from_counts(std::size_t period, std::size_t degree,
                                         const std::function<Integer(std::size_t)>& count, std::size_t jobs = 1) {
    if (period == 0) throw Error("period must be positive");
    std::vector<Polynomial> constituents(period);
    detail::parallel_for(period, jobs, [&](std::size_t i) {
        std::vector<std::pair<Rational, Rational>> samples;
        for (std::size_t j = 0; j <= degree; ++j) {
            std::size_t t = i + 1 + j * period;
            samples.emplace_back(Rational(static_cast<unsigned long>(t)), Rational(count(t)));
        }
        Polynomial f = interpolate(samples);
        std::size_t guard = i + 1 + (degree + 1) * period;
        if (f(Rational(static_cast<unsigned long>(guard))) != Rational(count(guard)))
            throw InterpolationGuardFailed("constituent " + std::to_string(i + 1) + " fails its guard sample");
        constituents[i] = std::move(f);
    });
    return QuasiPolynomial(std::move(constituents));
}

/// Ehrhart quasi-polynomial of a rational polytope Q (counts of tQ), with
/// period the lcm of the vertex denominators.
inline QuasiPolynomial ehrhart_quasi_rational(const RationalPolytope& q, std::size_t jobs = 1) {
    Integer rho = 1;
    for (const auto& v : q.vertices()) rho = lcm(rho, den(v));
    if (!rho.fits_ulong_p()) throw Error("period too large");
    TranslatedCounter<Rational> counter(q);
    RatVector zero(q.ambient_dim());
    return quasi_from_counts(rho.get_ui(), q.dim(),
                             [&](std::size_t t) { return counter.count(zero, Integer(static_cast<unsigned long>(t))); },
                             jobs);
}

/// #{x ∈ Z^d_{>=0} : sum_i m_i x_i <= s} for every s = 0..max_t.
inline std::vector<Integer> weighted_simplex_counts(const std::vector<std::size_t>& weights, std::size_t max_t) {
    for (auto m : weights)
        if (m == 0) throw BadParams("simplex weights must be positive");
    std::vector<Integer> ways(max_t + 1);
    ways[0] = 1;
    for (auto m : weights)
        for (std::size_t s = m; s <= max_t; ++s) ways[s] += ways[s - m];
    for (std::size_t s = 1; s <= max_t; ++s) ways[s] += ways[s - 1];
    return ways;
}

inline Integer count_weighted_simplex(const std::vector<std::size_t>& weights, std::size_t t) {
    return weighted_simplex_counts(weights, t).back();
}

/// Ehrhart quasi-polynomial of {x >= 0 : sum m_i x_i <= 1}; period lcm(m_i).
inline QuasiPolynomial weighted_simplex_quasi(const std::vector<std::size_t>& weights, std::size_t jobs = 1) {
    std::size_t rho = 1;
    for (auto m : weights) rho = std::lcm(rho, m);
    const std::size_t degree = weights.size();
    auto table = weighted_simplex_counts(weights, rho * (degree + 2));
    return quasi_from_counts(rho, degree, [&](std::size_t t) { return table.at(t); }, jobs);
}

struct LostNewCounts {
    Integer lost;
    Integer gained;
};

/// Sizes of ((tP + [0,c]) \ (c + tP)) ∩ Z^d ("lost") and ((tP + [0,c]) \ tP) ∩ Z^d ("new").
inline LostNewCounts lost_new_counts(const LatticePolytope& p, const RatVector& c, const Integer& t) {
    const std::size_t d = p.ambient_dim();
    if (c.size() != d) throw DimensionMismatch("translation vector length differs from the ambient dimension");
    if (t < 0) throw Error("dilation factor must be non-negative");
    auto [blo, bhi] = p.bounding_box();
    IntVector lo(d), hi(d);
    for (std::size_t j = 0; j < d; ++j) {
        Rational l = blo[j] * t, h = bhi[j] * t;
        lo[j] = floor_of(std::min(l, Rational(l + c[j])));
        hi[j] = ceil_of(std::max(h, Rational(h + c[j])));
    }
    struct Row {
        IntVector a;
        Rational tb, ac;
        bool equality;
    };
    std::vector<Row> rows;
    for (const auto& in : p.inequalities()) rows.push_back({in.normal, in.offset * t, dot(in.normal, c), false});
    for (const auto& eq : p.equalities()) rows.push_back({eq.normal, eq.offset * t, dot(eq.normal, c), true});

    LostNewCounts out{0, 0};
    IntVector x = lo;
    for (;;) {
        // Feasible s in [0,1] with x - s c ∈ tP.
        Rational s_lo = 0, s_hi = 1;
        bool at0 = true, at1 = true, swept = true;
        for (const auto& r : rows) {
            Rational ax = dot(r.a, to_rational(x));
            Rational slack = ax - r.tb;  // need slack - s*ac <= 0 (or == 0)
            if (r.equality) {
                at0 = at0 && slack == 0;
                at1 = at1 && slack == r.ac;
                if (r.ac == 0) swept = swept && slack == 0;
                else {
                    Rational s = slack / r.ac;
                    s_lo = std::max(s_lo, s);
                    s_hi = std::min(s_hi, s);
                }
            } else {
                at0 = at0 && slack <= 0;
                at1 = at1 && slack <= r.ac;
                if (r.ac > 0) s_lo = std::max(s_lo, Rational(slack / r.ac));
                else if (r.ac < 0) s_hi = std::min(s_hi, Rational(slack / r.ac));
                else swept = swept && slack <= 0;
            }
        }
        swept = swept && s_lo <= s_hi;
        if (swept && !at1) ++out.lost;
        if (swept && !at0) ++out.gained;
        std::size_t j = 0;
        while (j < d && x[j] == hi[j]) x[j] = lo[j], ++j;
        if (j == d) break;
        ++x[j];
    }
    return out;
}

/// #((x c + P) ∩ Z^d) for each sample x.
inline std::vector<Integer> scan_scaled_translate(const LatticePolytope& p, const RatVector& c,
                                                  const std::vector<Rational>& xs) {
    TranslatedCounter<Integer> counter(p);
    std::vector<Integer> out;
    for (const auto& x : xs) out.push_back(counter.count(scaled(c, x), 1));
    return out;
}

} // namespace ehrkit
