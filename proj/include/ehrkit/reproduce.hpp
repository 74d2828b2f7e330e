#pragma once

// Recomputes the published worked examples and compares them with the
// printed values.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ehrkit/corpus.hpp"
#include "ehrkit/lattice_count.hpp"
#include "ehrkit/quasi_polynomial.hpp"
#include "ehrkit/serialize.hpp"

namespace ehrkit {

enum class CheckStatus { pass, fail, disputed };

inline const char* to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::disputed: return "disputed";
    }
    return "";
}

struct Check {
    std::string group;
    std::string name;
    std::string expected;
    std::string computed;
    CheckStatus status = CheckStatus::pass;
    std::string note;
};

struct ReproduceReport {
    std::vector<Check> checks;

    /// True iff no check failed; disputed checks do not count against it.
    bool ok() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::fail) return false;
        return true;
    }
};

inline const std::vector<std::string>& reproduce_groups() {
    static const std::vector<std::string> groups = {"pentagon", "example12", "octahedron5", "scan", "counterexample",
                                                    "alcoves"};
    return groups;
}

namespace detail {

class CheckList {
public:
    CheckList(std::string group, std::vector<Check>& out) : group_(std::move(group)), out_(out) {}

    void equal(const std::string& name, const std::string& expected, const std::string& computed) {
        out_.push_back({group_, name, expected, computed, expected == computed ? CheckStatus::pass : CheckStatus::fail, ""});
    }
    void equal(const std::string& name, const Polynomial& expected, const Polynomial& computed) {
        equal(name, expected.to_string(), computed.to_string());
    }
    void equal(const std::string& name, const Integer& expected, const Integer& computed) {
        equal(name, to_string(expected), to_string(computed));
    }
    void equal(const std::string& name, bool expected, bool computed) {
        equal(name, std::string(expected ? "true" : "false"), std::string(computed ? "true" : "false"));
    }
    void add(Check c) {
        c.group = group_;
        out_.push_back(std::move(c));
    }

private:
    std::string group_;
    std::vector<Check>& out_;
};

inline std::string residues_label(const std::vector<std::size_t>& rs, std::size_t rho) {
    std::string s = "f_";
    for (std::size_t i = 0; i < rs.size(); ++i) s += (i ? "," : "") + std::to_string(rs[i] % rho);
    return s;
}

// Compares every recorded constituent of a corpus entry with the computed one.
inline void check_constituents(CheckList& cl, const std::string& label, const CorpusEntry& e, const QuasiPolynomial& f,
                               const std::function<Polynomial(std::size_t)>& oracle = {}) {
    for (const auto& c : e.expected.constituents)
        for (auto k : c.residues) {
            std::string name = label + " " + residues_label({k}, f.period());
            if (c.provenance != Provenance::disputed) {
                cl.equal(name, c.value, f.constituent(k));
                continue;
            }
            // The printed value is contradicted by counting; the check passes
            // when the computation agrees with an independent count, and is
            // reported as disputed against the printed value.
            Polynomial counted = oracle ? oracle(k) : c.value;
            Check ch{"", name, c.printed->to_string(), f.constituent(k).to_string(), CheckStatus::disputed,
                     "direct count gives " + counted.to_string()};
            if (f.constituent(k) != counted) ch.status = CheckStatus::fail;
            cl.add(ch);
        }
}

inline void reproduce_pentagon(std::vector<Check>& out) {
    CheckList cl("pentagon", out);
    auto e = build_corpus("pentagon_s3");
    const auto& a = std::get<AlmostIntegralPolytope>(e.object);
    TranslatedCounter<Integer> counter(a.base);
    RatVector zero(2);
    std::vector<std::pair<Rational, Rational>> lost_samples, new_samples;
    for (long t = 0; t <= 2; ++t) {
        auto ln = lost_new_counts(a.base, a.translate, t);
        std::string ts = "(" + std::to_string(t) + ")";
        auto want = [&](const std::string& key) {
            for (const auto& v : e.expected.values)
                if (v.key == key + ts) return v.value;
            return std::string("?");
        };
        cl.equal("L_(P,c)" + ts, want("translated"), to_string(counter.count(a.translate, t)));
        cl.equal("L_P" + ts, want("plain"), to_string(counter.count(zero, t)));
        cl.equal("lost" + ts, want("lost"), to_string(ln.lost));
        cl.equal("new" + ts, want("new"), to_string(ln.gained));
    }
    for (long t = 0; t <= 3; ++t) {
        auto ln = lost_new_counts(a.base, a.translate, t);
        lost_samples.emplace_back(Rational(t), Rational(ln.lost));
        new_samples.emplace_back(Rational(t), Rational(ln.gained));
    }
    cl.equal("L_(P,c)(t)", poly({"0", "3/2", "7/2"}), translated_enumerator(counter, a.translate));
    cl.equal("L_P(t)", poly({"1", "5/2", "7/2"}), translated_enumerator(counter, zero));
    cl.equal("lost(t)", poly({"1", "3"}), interpolate(lost_samples));
    cl.equal("new(t)", poly({"0", "2"}), interpolate(new_samples));
}

inline void reproduce_example12(std::vector<Check>& out, std::size_t jobs) {
    CheckList cl("example12", out);
    auto p1 = build_corpus("p1_ninth_cube");
    auto f1 = ehrhart_quasi_rational(std::get<RationalPolytope>(p1.object), jobs);
    check_constituents(cl, "P1", p1, f1);
    cl.equal("P1 minimal period", std::string("9"), std::to_string(minimal_period(f1).period()));

    auto p2 = build_corpus("p2_shifted_octahedron");
    auto f2 = ehrhart_quasi(std::get<AlmostIntegralPolytope>(p2.object), jobs);
    check_constituents(cl, "P2", p2, f2);
    cl.equal("P2 minimal period", std::string("9"), std::to_string(minimal_period(f2).period()));
    cl.equal("P2 symmetric", true, is_symmetric(f2));
    cl.equal("P2 GCD-property", false, has_gcd_property(f2));

    auto p3 = build_corpus("p3_shifted_cube");
    const auto& a3 = std::get<AlmostIntegralPolytope>(p3.object);
    auto f3 = ehrhart_quasi(a3, jobs);
    // Independent route for disputed residues: count t(c + P) for t ≡ k (mod 9).
    auto oracle = [&](std::size_t k) {
        TranslatedCounter<Integer> counter(a3.base);
        std::vector<std::pair<Rational, Rational>> samples;
        for (std::size_t j = 0; j <= 4; ++j) {
            unsigned long t = k + 9 * j;
            samples.emplace_back(Rational(t), Rational(counter.count(scaled(a3.translate, Rational(t)), t)));
        }
        return interpolate(samples);
    };
    check_constituents(cl, "P3", p3, f3, oracle);
    cl.equal("P3 minimal period", std::string("9"), std::to_string(minimal_period(f3).period()));
    cl.equal("P3 GCD-property", true, has_gcd_property(f3));
}

inline void reproduce_octahedron5(std::vector<Check>& out, std::size_t jobs) {
    CheckList cl("octahedron5", out);
    auto oct = build_corpus("cross_polytope", {{"d", "3"}});
    AlmostIntegralPolytope a(std::get<AlmostIntegralPolytope>(oct.object).base,
                             {Rational(1, 5), Rational(1, 5), Rational(1, 5)});
    auto f = ehrhart_quasi(a, jobs);
    cl.equal("period", std::string("5"), std::to_string(f.period()));
    const Polynomial f0 = poly({"1", "8/3", "2", "4/3"});
    const Polynomial f14 = poly({"0", "-1/3", "0", "4/3"});
    const Polynomial f23 = poly({"0", "-4/3", "0", "4/3"});
    cl.equal("f_0", f0, f.constituent(5));
    cl.equal("f_1", f14, f.constituent(1));
    cl.equal("f_4", f14, f.constituent(4));
    cl.equal("f_2", f23, f.constituent(2));
    cl.equal("f_3", f23, f.constituent(3));
    cl.equal("GCD-property", false, has_gcd_property(f));
}

inline void reproduce_scan(std::vector<Check>& out) {
    CheckList cl("scan", out);
    auto square = std::get<AlmostIntegralPolytope>(build_corpus("cube", {{"d", "2"}}).object).base;
    RatVector c{Rational(1, 2), Rational(1, 4)};
    // 4 on 4Z, 2 on 2 + 4Z, 1 elsewhere.
    std::vector<Rational> xs;
    for (int i = 0; i <= 16; ++i) xs.push_back(make_rational(i, 2));
    auto counts = scan_scaled_translate(square, c, xs);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const Rational& x = xs[i];
        long want = 1;
        if (is_integral(x) && x.get_num() % 4 == 0) want = 4;
        else if (is_integral(x) && x.get_num() % 4 == 2) want = 2;
        cl.equal("square x=" + to_string(x), Integer(want), counts[i]);
    }
    auto oct = std::get<AlmostIntegralPolytope>(build_corpus("cross_polytope", {{"d", "3"}}).object).base;
    auto o = scan_scaled_translate(oct, {Rational(1, 3), Rational(1, 3), Rational(1, 3)},
                                   {Rational(0), Rational(1, 2), Rational(3, 2)});
    cl.equal("octahedron x=0", Integer(7), o[0]);
    cl.equal("octahedron x=1/2", Integer(1), o[1]);
    cl.equal("octahedron x=3/2", Integer(0), o[2]);
}

inline void reproduce_counterexample(std::vector<Check>& out) {
    CheckList cl("counterexample", out);
    for (long n = 8; n <= 12; ++n) {
        Integer closed = (2 * Integer(n) * n * n + 3 * Integer(n) * n + 19 * Integer(n) + 12) / 6;
        std::string tag = "n=" + std::to_string(n);
        cl.equal("|P_n ∩ Z^3| " + tag, closed, counterexample_base_count(n));
        Integer best;
        long best_k = 0;
        for (long k = 1; k < n; ++k) {
            Integer alpha = counterexample_alpha(n, k);
            cl.equal("alpha " + tag + " k=" + std::to_string(k), Integer(k * (n + 1) - k * k - 2 * n - 1), alpha);
            if (best_k == 0 || alpha > best) best = alpha, best_k = k;
        }
        if (n % 2 == 1) {
            cl.equal("argmax alpha " + tag, std::to_string((n + 1) / 2), std::to_string(best_k));
            cl.equal("max alpha " + tag, Integer((n * n - 6 * n - 3) / 4), best);
        }
    }
}

inline void reproduce_alcoves(std::vector<Check>& out, std::size_t jobs) {
    CheckList cl("alcoves", out);
    for (const char* type : {"E6", "E7", "E8", "F4", "G2"}) {
        auto e = build_corpus("alcove", {{"type", type}});
        auto f = weighted_simplex_quasi(std::get<WeightedSimplex>(e.object).weights, jobs);
        std::string want = "period " + std::to_string(*e.expected.minimal_period) + ", GCD-property true";
        std::string got = "period " + std::to_string(minimal_period(f).period()) + ", GCD-property " +
                          (has_gcd_property(f) ? "true" : "false");
        cl.equal(type, want, got);
    }
}

} // namespace detail

/// Runs every group, or just `only`. Throws BadParams for an unknown group.
inline ReproduceReport reproduce(const std::optional<std::string>& only = std::nullopt, std::size_t jobs = 1) {
    if (only) {
        bool known = false;
        for (const auto& g : reproduce_groups()) known = known || g == *only;
        if (!known) throw BadParams("unknown reproduction group '" + *only + "'");
    }
    ReproduceReport r;
    auto want = [&](const char* g) { return !only || *only == g; };
    if (want("pentagon")) detail::reproduce_pentagon(r.checks);
    if (want("example12")) detail::reproduce_example12(r.checks, jobs);
    if (want("octahedron5")) detail::reproduce_octahedron5(r.checks, jobs);
    if (want("scan")) detail::reproduce_scan(r.checks);
    if (want("counterexample")) detail::reproduce_counterexample(r.checks);
    if (want("alcoves")) detail::reproduce_alcoves(r.checks, jobs);
    return r;
}

inline Json to_json(const ReproduceReport& r) {
    Json checks = Json::array();
    std::size_t counts[3] = {0, 0, 0};
    for (const auto& c : r.checks) {
        Json j{{"group", c.group}, {"name", c.name}, {"expected", c.expected}, {"computed", c.computed},
               {"status", to_string(c.status)}};
        if (!c.note.empty()) j["note"] = c.note;
        checks.push_back(j);
        ++counts[static_cast<int>(c.status)];
    }
    return Json{{"checks", checks},
                {"summary", {{"pass", counts[0]}, {"fail", counts[1]}, {"disputed", counts[2]}, {"ok", r.ok()}}}};
}

} // namespace ehrkit
