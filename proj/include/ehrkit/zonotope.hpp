#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "ehrkit/errors.hpp"
#include "ehrkit/lattice_count.hpp"
#include "ehrkit/matrix.hpp"
#include "ehrkit/normal_form.hpp"
#include "ehrkit/parallel.hpp"
#include "ehrkit/polytope.hpp"
#include "ehrkit/quasi_polynomial.hpp"
#include "ehrkit/rational.hpp"

namespace ehrkit {

/// c + Z(U): the Minkowski sum of the segments [0, u] for u in U, translated by c.
/// U is a multiset of nonzero integer vectors.
struct ZonotopeSpec {
    std::size_t ambient_dim = 0;
    std::vector<IntVector> generators;
    RatVector translate;

    ZonotopeSpec(std::size_t d, std::vector<IntVector> gens, RatVector c)
        : ambient_dim(d), generators(std::move(gens)), translate(std::move(c)) {
        if (translate.empty()) translate.assign(d, Rational(0));
        if (translate.size() != d) throw DimensionMismatch("translation vector length differs from the ambient dimension");
        for (const auto& u : generators) {
            if (u.size() != d) throw DimensionMismatch("generator length differs from the ambient dimension");
            if (is_zero(u)) throw Error("zonotope generators must be nonzero");
        }
    }
};

inline constexpr std::size_t max_zonotope_generators = 20;

/// Calls visit(indices) for every linearly independent sub-multiset of the
/// generators, the empty set included. Extension is pruned by rank.
inline void for_each_independent_subset(const std::vector<IntVector>& gens, std::size_t d,
                                        const std::function<void(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> chosen;
    std::vector<IntVector> vecs;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        visit(chosen);
        if (chosen.size() == d) return;
        for (std::size_t j = start; j < gens.size(); ++j) {
            vecs.push_back(gens[j]);
            if (rank_of(vecs, d) == vecs.size()) {
                chosen.push_back(j);
                rec(j + 1);
                chosen.pop_back();
            }
            vecs.pop_back();
        }
    };
    rec(0);
}

/// Ehrhart quasi-polynomial of c + Z(U) with period den(c), as the sum over
/// linearly independent W ⊆ U of [ (kc + span W) ∩ Z^d ≠ ∅ ] · relvol(Z(W)) · t^|W|.
inline QuasiPolynomial abm_quasi(const ZonotopeSpec& z, std::size_t jobs = 1) {
    const std::size_t d = z.ambient_dim;
    const Integer rho_z = den(z.translate);
    if (!rho_z.fits_ulong_p()) throw Error("period too large");
    const std::size_t rho = rho_z.get_ui();

    struct Term {
        std::size_t size;
        Integer volume;
        AffineLatticeTest meets;
    };
    std::vector<Term> terms;
    for_each_independent_subset(z.generators, d, [&](const std::vector<std::size_t>& idx) {
        std::vector<IntVector> cols;
        for (auto i : idx) cols.push_back(z.generators[i]);
        IntMatrix w = IntMatrix::from_columns(d, cols);
        Integer vol = idx.empty() ? Integer(1) : gcd_maximal_minors(w);
        terms.push_back({idx.size(), vol, AffineLatticeTest(w)});
    });

    std::vector<Polynomial> constituents(rho);
    detail::parallel_for(rho, jobs, [&](std::size_t i) {
        RatVector kc = scaled(z.translate, Rational(static_cast<unsigned long>(i + 1)));
        std::vector<Rational> coeffs(d + 1);
        for (const auto& term : terms)
            if (term.meets.nonempty(kc)) coeffs[term.size] += term.volume;
        constituents[i] = Polynomial(std::move(coeffs));
    });
    return QuasiPolynomial(std::move(constituents));
}

/// The lattice zonotope Z(U) as a vertex-described polytope together with the
/// translation c. Vertices come from iterated Minkowski sums pruned by hulls.
inline AlmostIntegralPolytope zonotope_vertices(const ZonotopeSpec& z) {
    if (z.generators.size() > max_zonotope_generators)
        throw TooManyGenerators("at most " + std::to_string(max_zonotope_generators) + " generators are supported");
    std::vector<IntVector> pts{IntVector(z.ambient_dim)};
    for (const auto& u : z.generators) {
        std::vector<IntVector> next = pts;
        for (const auto& p : pts) next.push_back(p + u);
        pts = LatticePolytope(next).vertices();
    }
    return AlmostIntegralPolytope(LatticePolytope(pts), z.translate);
}

struct PointBoundCheck {
    Integer translated_count;  // #((c + Z) ∩ Z^d)
    Integer base_count;        // #(Z ∩ Z^d)
    bool translate_integral = false;
    /// translated <= base, with equality exactly when c is integral.
    bool holds = false;
};

inline PointBoundCheck zonotope_point_bound_check(const ZonotopeSpec& z) {
    auto p = zonotope_vertices(z);
    TranslatedCounter<Integer> counter(p.base);
    PointBoundCheck r;
    r.translated_count = counter.count(z.translate, 1);
    r.base_count = counter.count(RatVector(z.ambient_dim), 1);
    r.translate_integral = is_integral(z.translate);
    r.holds = r.translated_count <= r.base_count && ((r.translated_count == r.base_count) == r.translate_integral);
    return r;
}

} // namespace ehrkit
