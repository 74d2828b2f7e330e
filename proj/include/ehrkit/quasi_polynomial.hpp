#pragma once

#include <cstddef>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "ehrkit/errors.hpp"
#include "ehrkit/polynomial.hpp"

namespace ehrkit {

/// A quasi-polynomial with period rho: the value at t is f_k(t) for t ≡ k (mod rho).
/// Constituents are indexed by residue 1..rho; residue 0 is stored as residue rho.
class QuasiPolynomial {
public:
    QuasiPolynomial() : constituents_{Polynomial()} {}
    explicit QuasiPolynomial(std::vector<Polynomial> constituents) : constituents_(std::move(constituents)) {
        if (constituents_.empty()) throw Error("a quasi-polynomial needs period >= 1");
    }

    std::size_t period() const { return constituents_.size(); }

    /// Constituent for residue k, taken mod the period (0 selects the rho-th).
    const Polynomial& constituent(std::size_t k) const {
        std::size_t r = k % period();
        return constituents_[(r == 0 ? period() : r) - 1];
    }

    const std::vector<Polynomial>& constituents() const { return constituents_; }

    Rational operator()(std::size_t t) const { return constituent(t)(Rational(static_cast<unsigned long>(t))); }

    friend bool operator==(const QuasiPolynomial&, const QuasiPolynomial&) = default;

private:
    std::vector<Polynomial> constituents_;
};

inline Rational evaluate(const QuasiPolynomial& q, std::size_t t) {
    if (t == 0) throw Error("quasi-polynomials are evaluated at positive integers");
    return q(t);
}

/// Same function, written with period k * rho.
inline QuasiPolynomial inflate_period(const QuasiPolynomial& q, std::size_t k) {
    if (k == 0) throw Error("period multiplier must be positive");
    std::vector<Polynomial> c;
    c.reserve(q.period() * k);
    for (std::size_t r = 1; r <= q.period() * k; ++r) c.push_back(q.constituent(r));
    return QuasiPolynomial(std::move(c));
}

/// Reduction to the smallest period: the first divisor rho0 of rho such that
/// f_k depends only on k mod rho0.
inline QuasiPolynomial minimal_period(const QuasiPolynomial& q) {
    const std::size_t rho = q.period();
    for (std::size_t d = 1; d <= rho; ++d) {
        if (rho % d != 0) continue;
        bool ok = true;
        for (std::size_t k = 1; k <= rho && ok; ++k) ok = q.constituent(k) == q.constituent(k % d);
        if (!ok) continue;
        std::vector<Polynomial> c;
        for (std::size_t k = 1; k <= d; ++k) c.push_back(q.constituent(k));
        return QuasiPolynomial(std::move(c));
    }
    return q;
}

/// A pair of residues whose constituents are required equal but differ.
struct ResiduePair {
    std::size_t first;
    std::size_t second;
};

/// First k with f_k != f_{rho-k}, if any.
inline std::optional<ResiduePair> symmetry_violation(const QuasiPolynomial& q) {
    const std::size_t rho = q.period();
    for (std::size_t k = 1; k < rho; ++k)
        if (q.constituent(k) != q.constituent(rho - k)) return ResiduePair{k, rho - k};
    return std::nullopt;
}

/// First (k, l) with gcd(rho, k) = gcd(rho, l) but f_k != f_l; k is the
/// smallest residue of its gcd class.
inline std::optional<ResiduePair> gcd_violation(const QuasiPolynomial& q) {
    const std::size_t rho = q.period();
    std::vector<std::size_t> representative(rho + 1, 0);
    for (std::size_t k = 1; k <= rho; ++k) {
        std::size_t g = std::gcd(rho, k);
        if (representative[g] == 0) {
            representative[g] = k;
            continue;
        }
        if (q.constituent(k) != q.constituent(representative[g])) return ResiduePair{representative[g], k};
    }
    return std::nullopt;
}

inline bool is_symmetric(const QuasiPolynomial& q) { return !symmetry_violation(q); }
inline bool has_gcd_property(const QuasiPolynomial& q) { return !gcd_violation(q); }

/// GCD-property of q re-expressed with period k * rho. Always equals
/// has_gcd_property(q); exposed so the period independence can be exercised.
inline bool gcd_property_period_stability(const QuasiPolynomial& q, std::size_t k) {
    return has_gcd_property(inflate_period(q, k));
}

} // namespace ehrkit
