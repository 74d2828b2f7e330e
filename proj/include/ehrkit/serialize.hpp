#pragma once

// JSON reading and writing. Rationals travel as strings ("7/2", "-4/3", "3");
// objects use sorted keys so equal values give identical text.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ehrkit/characterize.hpp"
#include "ehrkit/corpus.hpp"
#include "ehrkit/errors.hpp"
#include "ehrkit/polynomial.hpp"
#include "ehrkit/quasi_polynomial.hpp"
#include "ehrkit/rational.hpp"

namespace ehrkit {

using Json = nlohmann::json;

inline Json to_json(const Rational& q) { return to_string(q); }
inline Json to_json(const Integer& z) { return to_string(z); }

inline Json to_json(const RatVector& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

inline Json to_json(const IntVector& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

/// Ascending coefficient list; the zero polynomial is [].
inline Json to_json(const Polynomial& p) {
    Json a = Json::array();
    for (const auto& c : p.coefficients()) a.push_back(to_json(c));
    return a;
}

/// {"period": rho, "constituents": [f_1, ..., f_rho]}.
inline Json to_json(const QuasiPolynomial& q) {
    Json c = Json::array();
    for (const auto& f : q.constituents()) c.push_back(to_json(f));
    return Json{{"period", q.period()}, {"constituents", c}};
}

inline Json to_json(const WitnessReport& r) {
    Json j{{"kind", to_string(r.kind)}, {"found", r.found}, {"attempts", r.attempts}, {"budget", r.budget}};
    if (r.found) {
        j["translate"] = to_json(r.translate);
        j["period"] = r.period;
        j["residues"] = Json::array({r.first_residue, r.second_residue});
        j["constituents"] = Json::array({to_json(r.first), to_json(r.second)});
    }
    return j;
}

inline Json to_json(const ClassifyReport& r) {
    Json j{{"centrally_symmetric", r.centrally_symmetric}, {"zonotope", r.zonotope}};
    if (r.center) j["center"] = to_json(scaled(*r.center, Rational(1, 2)));
    Json v = Json::array();
    for (const auto& f : r.facet_violations) {
        Json e{{"facet", f.facet}, {"volume", to_json(f.volume)}};
        if (f.partner) {
            e["partner"] = *f.partner;
            e["partner_volume"] = to_json(f.partner_volume);
        } else {
            e["partner"] = nullptr;
        }
        v.push_back(e);
    }
    j["facet_violations"] = v;
    if (r.asymmetric_face) j["asymmetric_2face"] = r.asymmetric_face->vertex_indices;
    if (r.asymmetry) j["asymmetry_witness"] = to_json(*r.asymmetry);
    if (r.gcd_violation) j["gcd_witness"] = to_json(*r.gcd_violation);
    return j;
}

inline Json to_json(const Expected& e) {
    Json j = Json::object();
    if (e.minimal_period) j["minimal_period"] = *e.minimal_period;
    if (e.symmetric) j["symmetric"] = *e.symmetric;
    if (e.gcd_property) j["gcd_property"] = *e.gcd_property;
    if (!e.constituents.empty()) {
        Json cs = Json::array();
        for (const auto& c : e.constituents) {
            Json x{{"residues", c.residues}, {"value", to_json(c.value)}, {"provenance", to_string(c.provenance)}};
            if (c.printed) x["printed"] = to_json(*c.printed);
            cs.push_back(x);
        }
        j["constituents"] = cs;
    }
    for (const auto& v : e.values) j["values"][v.key] = Json{{"value", v.value}, {"provenance", to_string(v.provenance)}};
    return j;
}

inline Json to_json(const CorpusEntry& e) {
    Json j{{"name", e.name}, {"params", e.params}, {"expected", to_json(e.expected)}};
    std::visit(
        [&](const auto& o) {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, AlmostIntegralPolytope>) {
                Json verts = Json::array();
                for (const auto& v : o.base.vertices()) verts.push_back(to_json(v));
                j["vertices"] = verts;
                j["translate"] = to_json(o.translate);
            } else if constexpr (std::is_same_v<T, RationalPolytope>) {
                Json verts = Json::array();
                for (const auto& v : o.vertices()) verts.push_back(to_json(v));
                j["vertices"] = verts;
            } else if constexpr (std::is_same_v<T, ZonotopeSpec>) {
                Json gens = Json::array();
                for (const auto& g : o.generators) gens.push_back(to_json(g));
                j["generators"] = gens;
                j["translate"] = to_json(o.translate);
            } else {
                j["weights"] = o.weights;
            }
        },
        e.object);
    return j;
}

/// Pretty-printed canonical text with a trailing newline.
inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Input documents

/// One of: vertices (+ translate), generators (+ translate), or a corpus name
/// with parameters.
struct InputDocument {
    std::optional<std::vector<RatVector>> vertices;
    std::optional<std::vector<IntVector>> generators;
    std::optional<RatVector> translate;
    std::optional<CorpusEntry> corpus;
};

inline Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
    if (j.is_number_unsigned()) return Rational(Integer(std::to_string(j.get<unsigned long long>())));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw ParseError("expected a rational number as string or integer, got " + j.dump());
}

inline RatVector rational_vector_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("expected an array of rationals, got " + j.dump());
    RatVector v;
    for (const auto& x : j) v.push_back(rational_from_json(x));
    return v;
}

inline IntVector integer_vector_from_json(const Json& j) {
    IntVector v;
    for (const auto& q : rational_vector_from_json(j)) {
        if (!is_integral(q)) throw ParseError("expected integer entries, got " + to_string(q));
        v.push_back(q.get_num());
    }
    return v;
}

inline std::string param_to_string(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    if (j.is_number_unsigned()) return std::to_string(j.get<unsigned long long>());
    throw ParseError("corpus parameters must be strings or integers");
}

inline InputDocument parse_input(const Json& j) {
    if (!j.is_object()) throw ParseError("input document must be a JSON object");
    InputDocument doc;
    int kinds = j.contains("vertices") + j.contains("generators") + j.contains("corpus");
    if (kinds != 1) throw ParseError("input needs exactly one of 'vertices', 'generators', 'corpus'");
    for (const auto& [key, value] : j.items())
        if (key != "vertices" && key != "generators" && key != "corpus" && key != "translate" && key != "params")
            throw ParseError("unknown input field '" + key + "'");
    auto consistent = [](std::size_t d, std::size_t n, const char* what) {
        if (n != d) throw DimensionMismatch(std::string(what) + " length " + std::to_string(n) +
                                            " differs from dimension " + std::to_string(d));
    };
    std::optional<std::size_t> dim;
    if (j.contains("vertices")) {
        const auto& vs = j.at("vertices");
        if (!vs.is_array() || vs.empty()) throw ParseError("'vertices' must be a non-empty array");
        doc.vertices.emplace();
        for (const auto& v : vs) {
            doc.vertices->push_back(rational_vector_from_json(v));
            if (!dim) dim = doc.vertices->back().size();
            consistent(*dim, doc.vertices->back().size(), "vertex");
        }
        if (*dim == 0) throw ParseError("vertices must have at least one coordinate");
    }
    if (j.contains("generators")) {
        const auto& gs = j.at("generators");
        if (!gs.is_array()) throw ParseError("'generators' must be an array");
        doc.generators.emplace();
        for (const auto& g : gs) {
            doc.generators->push_back(integer_vector_from_json(g));
            if (!dim) dim = doc.generators->back().size();
            consistent(*dim, doc.generators->back().size(), "generator");
        }
    }
    if (j.contains("translate")) {
        doc.translate = rational_vector_from_json(j.at("translate"));
        if (!dim) dim = doc.translate->size();
        consistent(*dim, doc.translate->size(), "translate");
    }
    if (j.contains("corpus")) {
        if (j.contains("translate")) throw ParseError("corpus inputs take no 'translate'");
        if (!j.at("corpus").is_string()) throw ParseError("'corpus' must be a name");
        std::map<std::string, std::string> params;
        if (j.contains("params")) {
            if (!j.at("params").is_object()) throw ParseError("'params' must be an object");
            for (const auto& [k, v] : j.at("params").items()) params[k] = param_to_string(v);
        }
        doc.corpus = build_corpus(j.at("corpus").get<std::string>(), params);
    } else if (j.contains("params")) {
        throw ParseError("'params' is only valid with 'corpus'");
    }
    if (doc.generators && !dim) throw ParseError("a zonotope without generators needs a 'translate'");
    return doc;
}

inline InputDocument parse_input(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return parse_input(j);
}

} // namespace ehrkit
