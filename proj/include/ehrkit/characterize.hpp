#pragma once

// Searches for translation vectors c that make the Ehrhart quasi-polynomial of
// c + P asymmetric or break the GCD-property, and the classifier built on them.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ehrkit/errors.hpp"
#include "ehrkit/lattice_count.hpp"
#include "ehrkit/parallel.hpp"
#include "ehrkit/polytope.hpp"
#include "ehrkit/quasi_polynomial.hpp"
#include "ehrkit/rational.hpp"

namespace ehrkit {

enum class WitnessKind { asymmetry, gcd_violation };

inline const char* to_string(WitnessKind k) { return k == WitnessKind::asymmetry ? "asymmetry" : "gcd_violation"; }

/// Outcome of a witness search. When found, constituents first_residue and
/// second_residue of the quasi-polynomial of translate + P differ although the
/// property of `kind` requires them equal.
struct WitnessReport {
    WitnessKind kind = WitnessKind::asymmetry;
    bool found = false;
    RatVector translate;
    std::size_t period = 0;
    std::size_t first_residue = 0;
    std::size_t second_residue = 0;
    Polynomial first;
    Polynomial second;
    std::size_t attempts = 0;
    std::size_t budget = 0;
};

struct SearchOptions {
    std::size_t budget = 10000;
    std::uint64_t seed = 0;
    std::size_t jobs = 1;
};

namespace detail {

// Candidate translations in a fixed order, produced level by level (level q
// holds vectors of denominator q). Proof-guided candidates of a level come
// before the grid of that level.
class CandidateStream {
public:
    CandidateStream(std::size_t d, std::vector<IntVector> directions, bool odd_only)
        : d_(d), directions_(std::move(directions)), odd_only_(odd_only) {}

    /// Appends up to n new candidates; false once nothing more can be produced.
    bool next_batch(std::size_t n, std::vector<RatVector>& out) {
        while (out.size() < n) {
            if (level_.empty() && !advance_level()) return !out.empty();
            out.push_back(std::move(level_.back()));
            level_.pop_back();
        }
        return true;
    }

private:
    bool advance_level() {
        if (d_ == 0) return false;
        q_ += odd_only_ ? 2 : 1;
        const Integer q = static_cast<unsigned long>(q_);
        std::vector<RatVector> batch;
        std::set<RatVector> seen;
        auto push = [&](RatVector c) {
            c = fractional_part(c);
            if (den(c) != q) return;
            if (seen.insert(c).second) batch.push_back(std::move(c));
        };
        // Scalings x * c0 with den(x) = q.
        for (const auto& c0 : directions_)
            for (std::size_t j = 1; j < q_; ++j) {
                if (std::gcd(j, q_) != 1) continue;
                push(scaled(to_rational(c0), make_rational(static_cast<unsigned long>(j), q)));
            }
        // Grid (1/q) Z^d ∩ [0,1)^d.
        std::vector<std::size_t> num(d_, 0);
        for (;;) {
            RatVector c(d_);
            for (std::size_t i = 0; i < d_; ++i) c[i] = make_rational(static_cast<unsigned long>(num[i]), q);
            push(std::move(c));
            std::size_t i = d_;
            while (i-- > 0) {
                if (++num[i] < q_) break;
                num[i] = 0;
                if (i == 0) goto done;
            }
        }
    done:
        level_.assign(batch.rbegin(), batch.rend());
        return true;
    }

    std::size_t d_;
    std::vector<IntVector> directions_;
    bool odd_only_;
    std::size_t q_ = 1;
    std::vector<RatVector> level_;
};

// Whether L_(P,a) and L_(P,b) differ as polynomials: compared at t = 1..dim+1,
// which determines a polynomial of degree <= dim. t = 1 is tried first.
inline bool enumerators_differ(const TranslatedCounter<Integer>& counter, const RatVector& a, const RatVector& b) {
    for (std::size_t t = 1; t <= counter.dim() + 1; ++t)
        if (counter.count(a, t) != counter.count(b, t)) return true;
    return false;
}

inline std::vector<IntVector> sign_directions(std::size_t d) {
    // Nonzero vectors of {-1,0,1}^d with first nonzero entry positive.
    std::vector<IntVector> out;
    if (d > 6) {
        for (std::size_t i = 0; i < d; ++i) {
            IntVector e(d);
            e[i] = 1;
            out.push_back(e);
        }
        return out;
    }
    std::size_t total = 1;
    for (std::size_t i = 0; i < d; ++i) total *= 3;
    for (std::size_t code = 1; code < total; ++code) {
        IntVector v(d);
        std::size_t x = code;
        for (std::size_t i = 0; i < d; ++i, x /= 3) v[i] = static_cast<long>(x % 3) - 1;
        if (primitive(v) == v && !is_zero(v)) {
            auto first = std::find_if(v.begin(), v.end(), [](const Integer& z) { return z != 0; });
            if (*first > 0) out.push_back(v);
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const IntVector& a, const IntVector& b) {
        auto weight = [](const IntVector& v) { return std::count_if(v.begin(), v.end(), [](auto& z) { return z != 0; }); };
        return weight(a) < weight(b);
    });
    return out;
}

inline std::vector<IntVector> random_directions(std::size_t d, std::uint64_t seed, std::size_t n) {
    std::vector<IntVector> out;
    if (seed == 0 || d == 0) return out;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> entry(-2, 2);
    while (out.size() < n) {
        IntVector v(d);
        for (auto& x : v) x = entry(rng);
        if (!is_zero(v)) out.push_back(primitive(v));
    }
    return out;
}

// Runs the candidate stream in batches; each batch is evaluated in parallel and
// the first accepted candidate in stream order wins.
inline std::optional<std::pair<RatVector, std::size_t>> search(CandidateStream& stream, const SearchOptions& opt,
                                                               const std::function<bool(const RatVector&)>& accept,
                                                               std::size_t& attempts) {
    attempts = 0;
    const std::size_t batch_size = std::max<std::size_t>(16, 16 * opt.jobs);
    while (attempts < opt.budget) {
        std::vector<RatVector> batch;
        if (!stream.next_batch(std::min(batch_size, opt.budget - attempts), batch)) break;
        std::vector<char> ok(batch.size(), 0);
        parallel_for(batch.size(), opt.jobs, [&](std::size_t i) { ok[i] = accept(batch[i]) ? 1 : 0; });
        for (std::size_t i = 0; i < batch.size(); ++i)
            if (ok[i]) {
                attempts += i + 1;
                return std::make_pair(batch[i], attempts);
            }
        attempts += batch.size();
    }
    return std::nullopt;
}

} // namespace detail

/// Searches c with L_(P,c) != L_(P,-c); then constituents 1 and rho-1 of the
/// quasi-polynomial of c + P differ.
inline WitnessReport asymmetry_witness(const LatticePolytope& p, const SearchOptions& opt = {}) {
    WitnessReport r;
    r.kind = WitnessKind::asymmetry;
    r.budget = opt.budget;
    TranslatedCounter<Integer> counter(p);
    std::vector<IntVector> dirs;
    if (p.dim() >= 1)
        for (const auto& v : minkowski_facet_check(p)) dirs.push_back(p.inequalities()[v.facet].normal);
    for (auto& v : detail::random_directions(p.ambient_dim(), opt.seed, 4)) dirs.push_back(v);
    detail::CandidateStream stream(p.ambient_dim(), dirs, false);
    auto hit = detail::search(stream, opt, [&](const RatVector& c) {
        return detail::enumerators_differ(counter, c, -c);
    }, r.attempts);
    if (!hit) return r;
    r.found = true;
    r.translate = hit->first;
    r.period = den(r.translate).get_ui();
    r.first_residue = 1;
    r.second_residue = r.period - 1;
    r.first = translated_enumerator(counter, r.translate);
    r.second = translated_enumerator(counter, fractional_part(-r.translate));
    return r;
}

/// Searches c of odd denominator with L_(P,c) != L_(P,2c); then constituents
/// 1 and 2 of the quasi-polynomial of c + P differ while gcd(rho,1) = gcd(rho,2).
inline WitnessReport gcd_violation_witness(const LatticePolytope& p, const SearchOptions& opt = {}) {
    WitnessReport r;
    r.kind = WitnessKind::gcd_violation;
    r.budget = opt.budget;
    TranslatedCounter<Integer> counter(p);
    std::vector<IntVector> dirs = detail::sign_directions(p.ambient_dim());
    for (const auto& in : p.inequalities()) dirs.push_back(in.normal);
    for (auto& v : detail::random_directions(p.ambient_dim(), opt.seed, 4)) dirs.push_back(v);
    detail::CandidateStream stream(p.ambient_dim(), dirs, true);
    auto hit = detail::search(stream, opt, [&](const RatVector& c) {
        return detail::enumerators_differ(counter, c, fractional_part(scaled(c, Rational(2))));
    }, r.attempts);
    if (!hit) return r;
    r.found = true;
    r.translate = hit->first;
    r.period = den(r.translate).get_ui();
    r.first_residue = 1;
    r.second_residue = 2;
    r.first = translated_enumerator(counter, r.translate);
    r.second = translated_enumerator(counter, fractional_part(scaled(r.translate, Rational(2))));
    return r;
}

/// Throws BudgetExhausted for a report without a witness.
inline const WitnessReport& require_witness(const WitnessReport& r) {
    if (!r.found)
        throw BudgetExhausted(std::string("no ") + to_string(r.kind) + " witness within " + std::to_string(r.budget) +
                              " candidates");
    return r;
}

/// Re-checks a witness by direct counting of t (c + P) for t ≡ residue (mod rho),
/// interpolated per residue class, and by the residue class condition.
inline bool verify_witness(const LatticePolytope& p, const WitnessReport& r) {
    if (!r.found || r.translate.size() != p.ambient_dim()) return false;
    const Integer rho_z = den(r.translate);
    if (!rho_z.fits_ulong_p() || rho_z.get_ui() != r.period) return false;
    const std::size_t rho = r.period, k = r.first_residue, l = r.second_residue;
    if (k == 0 || l == 0 || k > rho || l > rho) return false;
    if (r.kind == WitnessKind::asymmetry && (k + l) % rho != 0) return false;
    if (r.kind == WitnessKind::gcd_violation && std::gcd(rho, k) != std::gcd(rho, l)) return false;
    TranslatedCounter<Integer> counter(p);
    auto constituent = [&](std::size_t residue) {
        std::vector<std::pair<Rational, Rational>> samples;
        for (std::size_t j = 0; j <= p.dim() + 1; ++j) {
            unsigned long t = residue + j * rho;
            samples.emplace_back(Rational(t), Rational(counter.count(scaled(r.translate, Rational(t)), t)));
        }
        return interpolate(samples);
    };
    Polynomial fk = constituent(k), fl = constituent(l);
    return fk == r.first && fl == r.second && fk != fl;
}

struct ClassifyOptions {
    bool witness = false;
    SearchOptions search;
};

struct ClassifyReport {
    bool centrally_symmetric = false;
    std::optional<RatVector> center;  // c with P = c - P
    std::vector<FacetViolation> facet_violations;
    bool zonotope = false;
    std::optional<Face> asymmetric_face;
    std::optional<WitnessReport> asymmetry;
    std::optional<WitnessReport> gcd_violation;
};

/// Central symmetry (with its facet certificate), zonotope recognition and,
/// on request, witness searches for the properties the geometry rules out.
inline ClassifyReport classify(const LatticePolytope& p, const ClassifyOptions& opt = {}) {
    ClassifyReport r;
    r.center = is_centrally_symmetric(p);
    r.centrally_symmetric = r.center.has_value();
    if (p.dim() >= 1) r.facet_violations = minkowski_facet_check(p);
    auto z = is_zonotope(p);
    r.zonotope = z.is_zonotope;
    r.asymmetric_face = z.asymmetric_face;
    if (opt.witness) {
        if (!r.centrally_symmetric) r.asymmetry = asymmetry_witness(p, opt.search);
        if (!r.zonotope) r.gcd_violation = gcd_violation_witness(p, opt.search);
    }
    return r;
}

} // namespace ehrkit
