#pragma once

// Named polytope families with their recorded quantities.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ehrkit/errors.hpp"
#include "ehrkit/lattice_count.hpp"
#include "ehrkit/polynomial.hpp"
#include "ehrkit/polytope.hpp"
#include "ehrkit/rational.hpp"
#include "ehrkit/zonotope.hpp"

namespace ehrkit {

/// {x >= 0 : sum_i m_i x_i <= 1}, described by its weights m.
struct WeightedSimplex {
    std::vector<std::size_t> weights;
};

/// Where a recorded value comes from: printed in the literature, a closed
/// form evaluated at the parameters, or a printed value that direct counting
/// contradicts (the entry then holds the counted value and the printed one).
enum class Provenance { published, closed_form, disputed };

inline const char* to_string(Provenance p) {
    switch (p) {
    case Provenance::published: return "published";
    case Provenance::closed_form: return "closed_form";
    case Provenance::disputed: return "disputed";
    }
    return "";
}

struct ExpectedConstituent {
    std::vector<std::size_t> residues;  // 1..rho, rho standing for residue 0
    Polynomial value;
    Provenance provenance = Provenance::published;
    std::optional<Polynomial> printed;  // set for disputed entries
};

struct ExpectedValue {
    std::string key;
    std::string value;
    Provenance provenance = Provenance::published;
};

struct Expected {
    std::optional<std::size_t> minimal_period;
    std::optional<bool> symmetric;
    std::optional<bool> gcd_property;
    std::vector<ExpectedConstituent> constituents;
    std::vector<ExpectedValue> values;
};

using CorpusObject = std::variant<AlmostIntegralPolytope, RationalPolytope, ZonotopeSpec, WeightedSimplex>;

struct CorpusEntry {
    std::string name;
    std::map<std::string, std::string> params;
    CorpusObject object;
    Expected expected;
};

/// Parameters accepted by each corpus name; all optional unless marked.
inline const std::map<std::string, std::string>& corpus_names() {
    static const std::map<std::string, std::string> names = {
        {"cube", "unit cube [0,1]^d; params: d (default 3)"},
        {"cross_polytope", "conv{+-e_i}; params: d (default 3)"},
        {"pentagon_s3", "conv{(1,0),(0,1),(0,2),(1,3),(2,1)} + (3/4,3/4)"},
        {"p1_ninth_cube", "(1/9)[0,1]^3"},
        {"p2_shifted_octahedron", "conv{+-e_i} + (5/9,5/9,2/3)"},
        {"p3_shifted_cube", "[0,1]^3 + (1/9,2/9,1/3)"},
        {"counterexample_pn", "conv{0,ne1,ne2,n(e1+e2),e3,ne2+e3,(1-n)e3} + (k/n)e3; params: n (required, > 7), k (0 <= k < n, default 0)"},
        {"alcove", "weighted simplex of a root system; params: type in E6,E7,E8,F4,G2 (required)"},
    };
    return names;
}

namespace detail {

inline Polynomial poly(std::initializer_list<const char*> coeffs) {
    std::vector<Rational> v;
    for (auto c : coeffs) v.push_back(parse_rational(c));
    return Polynomial(std::move(v));
}

inline long int_param(const std::map<std::string, std::string>& params, const std::string& key,
                      std::optional<long> fallback) {
    auto it = params.find(key);
    if (it == params.end()) {
        if (!fallback) throw BadParams("missing parameter '" + key + "'");
        return *fallback;
    }
    Rational r;
    try {
        r = parse_rational(it->second);
    } catch (const ParseError&) {
        throw BadParams("parameter '" + key + "' must be an integer");
    }
    if (!is_integral(r) || !r.get_num().fits_slong_p()) throw BadParams("parameter '" + key + "' must be an integer");
    return r.get_num().get_si();
}

inline void reject_unknown(const std::map<std::string, std::string>& params, std::initializer_list<const char*> allowed) {
    for (const auto& [k, v] : params) {
        bool ok = false;
        for (auto a : allowed) ok = ok || k == a;
        if (!ok) throw BadParams("unknown parameter '" + k + "'");
    }
}

inline LatticePolytope cube_polytope(std::size_t d) {
    std::vector<IntVector> pts;
    for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
        IntVector p(d);
        for (std::size_t i = 0; i < d; ++i) p[i] = static_cast<long>((mask >> i) & 1U);
        pts.push_back(p);
    }
    return LatticePolytope(pts);
}

inline LatticePolytope cross_polytope_of(std::size_t d) {
    std::vector<IntVector> pts;
    for (std::size_t i = 0; i < d; ++i)
        for (long s : {1L, -1L}) {
            IntVector p(d);
            p[i] = s;
            pts.push_back(p);
        }
    return LatticePolytope(pts);
}

inline std::size_t dimension_param(const std::map<std::string, std::string>& params) {
    long d = int_param(params, "d", 3);
    if (d < 1 || d > 12) throw BadParams("dimension d must lie in 1..12");
    return static_cast<std::size_t>(d);
}

} // namespace detail

/// P_n = conv{0, n e1, n e2, n(e1+e2), e3, n e2 + e3, (1-n) e3}.
inline LatticePolytope counterexample_polytope(long n) {
    auto v = [](long a, long b, long c) { return IntVector{Integer(a), Integer(b), Integer(c)}; };
    return LatticePolytope({v(0, 0, 0), v(n, 0, 0), v(0, n, 0), v(n, n, 0), v(0, 0, 1), v(0, n, 1), v(0, 0, 1 - n)});
}

/// |P_n ∩ Z^3| by direct counting.
inline Integer counterexample_base_count(long n) {
    if (n <= 7) throw BadParams("counterexample_pn needs n > 7");
    return count_points(counterexample_polytope(n), RatVector(3), 1);
}

/// |(c_k + P_n) ∩ Z^3| - |P_n ∩ Z^3| with c_k = (k/n) e3, by direct counting.
inline Integer counterexample_alpha(long n, long k) {
    if (n <= 7) throw BadParams("counterexample_pn needs n > 7");
    if (k <= 0 || k >= n) throw BadParams("counterexample_pn needs 0 < k < n");
    TranslatedCounter<Integer> counter(counterexample_polytope(n));
    RatVector ck{Rational(0), Rational(0), make_rational(k, n)};
    return counter.count(ck, 1) - counter.count(RatVector(3), 1);
}

/// The alcove weights for a root system type.
inline std::vector<std::size_t> alcove_weights(const std::string& type) {
    static const std::map<std::string, std::vector<std::size_t>> table = {
        {"E6", {1, 1, 2, 2, 2, 3}},       {"E7", {1, 2, 2, 2, 3, 3, 4}}, {"E8", {2, 2, 3, 3, 4, 4, 5, 6}},
        {"F4", {2, 2, 3, 4}},             {"G2", {2, 3}},
    };
    auto it = table.find(type);
    if (it == table.end()) throw BadParams("unknown alcove type '" + type + "'");
    return it->second;
}

inline CorpusEntry build_corpus(const std::string& name, const std::map<std::string, std::string>& params = {}) {
    using detail::poly;
    CorpusEntry e{name, params, WeightedSimplex{}, {}};
    if (name == "cube") {
        detail::reject_unknown(params, {"d"});
        std::size_t d = detail::dimension_param(params);
        e.object = AlmostIntegralPolytope(detail::cube_polytope(d), RatVector(d));
        e.expected.minimal_period = 1;
        e.expected.symmetric = e.expected.gcd_property = true;
    } else if (name == "cross_polytope") {
        detail::reject_unknown(params, {"d"});
        std::size_t d = detail::dimension_param(params);
        e.object = AlmostIntegralPolytope(detail::cross_polytope_of(d), RatVector(d));
        e.expected.minimal_period = 1;
        e.expected.symmetric = e.expected.gcd_property = true;
    } else if (name == "pentagon_s3") {
        detail::reject_unknown(params, {});
        auto v = [](long a, long b) { return IntVector{Integer(a), Integer(b)}; };
        LatticePolytope p({v(1, 0), v(0, 1), v(0, 2), v(1, 3), v(2, 1)});
        e.object = AlmostIntegralPolytope(p, {Rational(3, 4), Rational(3, 4)});
        e.expected.constituents.push_back({{1}, poly({"0", "3/2", "7/2"}), Provenance::published, std::nullopt});
        const char* rows[][4] = {{"translated", "0", "5", "17"},
                                 {"plain", "1", "7", "20"},
                                 {"lost", "1", "4", "7"},
                                 {"new", "0", "2", "4"}};
        for (auto& row : rows)
            for (int t = 0; t <= 2; ++t)
                e.expected.values.push_back({std::string(row[0]) + "(" + std::to_string(t) + ")", row[t + 1],
                                             Provenance::published});
        e.expected.values.push_back({"translated_enumerator", "7/2*t^2 + 3/2*t", Provenance::published});
        e.expected.values.push_back({"plain_enumerator", "7/2*t^2 + 5/2*t + 1", Provenance::published});
        e.expected.values.push_back({"lost_polynomial", "3*t + 1", Provenance::published});
        e.expected.values.push_back({"new_polynomial", "2*t", Provenance::published});
    } else if (name == "p1_ninth_cube") {
        detail::reject_unknown(params, {});
        std::vector<RatVector> v;
        for (int mask = 0; mask < 8; ++mask)
            v.push_back({make_rational(mask & 1, 9), make_rational((mask >> 1) & 1, 9), make_rational((mask >> 2) & 1, 9)});
        e.object = RationalPolytope(v);
        e.expected.minimal_period = 9;
        e.expected.symmetric = false;
        e.expected.gcd_property = false;
        for (std::size_t k = 1; k <= 9; ++k) {
            Polynomial base({make_rational(9 - static_cast<long>(k % 9), 9), make_rational(1, 9)});
            e.expected.constituents.push_back({{k}, base * base * base, Provenance::published, std::nullopt});
        }
    } else if (name == "p2_shifted_octahedron") {
        detail::reject_unknown(params, {});
        e.object = AlmostIntegralPolytope(detail::cross_polytope_of(3), {Rational(5, 9), Rational(5, 9), Rational(2, 3)});
        e.expected.minimal_period = 9;
        e.expected.symmetric = true;
        e.expected.gcd_property = false;
        e.expected.constituents = {
            {{1, 8}, poly({"0", "-4/3", "0", "4/3"}), Provenance::published, std::nullopt},
            {{2, 7}, poly({"0", "2/3", "0", "4/3"}), Provenance::published, std::nullopt},
            {{3, 6}, poly({"0", "2/3", "1", "4/3"}), Provenance::published, std::nullopt},
            {{4, 5}, poly({"0", "-1/3", "0", "4/3"}), Provenance::published, std::nullopt},
            {{9}, poly({"1", "8/3", "2", "4/3"}), Provenance::published, std::nullopt},
        };
    } else if (name == "p3_shifted_cube") {
        detail::reject_unknown(params, {});
        e.object = AlmostIntegralPolytope(detail::cube_polytope(3), {Rational(1, 9), Rational(2, 9), Rational(1, 3)});
        e.expected.minimal_period = 9;
        e.expected.symmetric = true;
        e.expected.gcd_property = true;
        e.expected.constituents = {
            {{1, 2, 4, 5, 7, 8}, poly({"0", "0", "0", "1"}), Provenance::published, std::nullopt},
            // Counting (1/3,2/3,1) + [0,3]^3 gives 36 points, i.e. t^3 + t^2 at t = 3.
            {{3, 6}, poly({"0", "0", "1", "1"}), Provenance::disputed, poly({"0", "1", "0", "1"})},
            {{9}, poly({"1", "3", "3", "1"}), Provenance::published, std::nullopt},
        };
    } else if (name == "counterexample_pn") {
        detail::reject_unknown(params, {"n", "k"});
        long n = detail::int_param(params, "n", std::nullopt);
        if (n <= 7) throw BadParams("counterexample_pn needs n > 7");
        if (n > 100000) throw BadParams("counterexample_pn needs n <= 100000");
        long k = detail::int_param(params, "k", 0);
        if (k < 0 || k >= n) throw BadParams("counterexample_pn needs 0 <= k < n");
        e.object = AlmostIntegralPolytope(counterexample_polytope(n), {Rational(0), Rational(0), make_rational(k, n)});
        Integer base = (2 * Integer(n) * n * n + 3 * Integer(n) * n + 19 * Integer(n) + 12) / 6;
        e.expected.values.push_back({"base_count", to_string(base), Provenance::closed_form});
        if (k > 0)
            e.expected.values.push_back(
                {"alpha", to_string(Integer(k * (n + 1) - k * k - 2 * n - 1)), Provenance::closed_form});
    } else if (name == "alcove") {
        detail::reject_unknown(params, {"type"});
        auto it = params.find("type");
        if (it == params.end()) throw BadParams("missing parameter 'type'");
        e.object = WeightedSimplex{alcove_weights(it->second)};
        static const std::map<std::string, std::size_t> periods = {
            {"E6", 6}, {"E7", 12}, {"E8", 60}, {"F4", 12}, {"G2", 6}};
        e.expected.minimal_period = periods.at(it->second);
        e.expected.gcd_property = true;
        e.expected.symmetric = true;
    } else {
        throw UnknownName("unknown corpus name '" + name + "'");
    }
    return e;
}

} // namespace ehrkit
