// ehrkit: command-line front end for lattice point counting and Ehrhart
// quasi-polynomials of almost integral polytopes.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ehrkit/characterize.hpp"
#include "ehrkit/corpus.hpp"
#include "ehrkit/lattice_count.hpp"
#include "ehrkit/quasi_polynomial.hpp"
#include "ehrkit/reproduce.hpp"
#include "ehrkit/serialize.hpp"
#include "ehrkit/zonotope.hpp"

using namespace ehrkit;

namespace {

enum Exit { ok = 0, failure = 1, parse_error = 2, dimension_error = 3, unsupported = 4, budget_exhausted = 5 };

struct Common {
    std::string input = "-";
    std::string output = "-";
    std::size_t jobs = 1;
};

std::size_t default_jobs() {
    if (const char* env = std::getenv("EHRKIT_JOBS")) {
        try {
            long n = std::stol(env);
            if (n >= 1) return static_cast<std::size_t>(n);
        } catch (const std::exception&) {
        }
    }
    return 1;
}

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file '" + path + "'");
    return {std::istreambuf_iterator<char>(in), {}};
}

void write_output(const std::string& path, const Json& j) {
    if (path == "-") {
        std::cout << dump(j);
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error("cannot write output file '" + path + "'");
    out << dump(j);
}

// The polytope families an input document can describe.
struct Described {
    std::optional<AlmostIntegralPolytope> almost_integral;
    std::optional<RationalPolytope> rational;  // c + P with rational vertices
    std::optional<ZonotopeSpec> zonotope;
    std::optional<WeightedSimplex> simplex;
};

Described describe(const InputDocument& doc) {
    Described d;
    if (doc.corpus) {
        std::visit(
            [&](const auto& o) {
                using T = std::decay_t<decltype(o)>;
                if constexpr (std::is_same_v<T, AlmostIntegralPolytope>) d.almost_integral = o;
                else if constexpr (std::is_same_v<T, RationalPolytope>) d.rational = o;
                else if constexpr (std::is_same_v<T, ZonotopeSpec>) d.zonotope = o;
                else d.simplex = o;
            },
            doc.corpus->object);
        return d;
    }
    if (doc.generators) {
        std::size_t dim = doc.generators->empty() ? doc.translate->size() : doc.generators->front().size();
        d.zonotope = ZonotopeSpec(dim, *doc.generators, doc.translate.value_or(RatVector{}));
        return d;
    }
    const auto& verts = *doc.vertices;
    RatVector c = doc.translate.value_or(RatVector(verts.front().size()));
    bool integral = true;
    for (const auto& v : verts) integral = integral && is_integral(v);
    if (integral) {
        std::vector<IntVector> pts;
        for (const auto& v : verts) pts.push_back(detail::as_integer(v));
        d.almost_integral = AlmostIntegralPolytope(LatticePolytope(pts), c);
    } else {
        std::vector<RatVector> pts;
        for (const auto& v : verts) pts.push_back(v + c);
        d.rational = RationalPolytope(pts);
    }
    return d;
}

InputDocument load(const Common& common) { return parse_input(read_input(common.input)); }

QuasiPolynomial quasi_of(const Described& d, std::size_t jobs) {
    if (d.almost_integral) return ehrhart_quasi(*d.almost_integral, jobs);
    if (d.zonotope) return abm_quasi(*d.zonotope, jobs);
    if (d.simplex) return weighted_simplex_quasi(d.simplex->weights, jobs);
    if (d.rational) return ehrhart_quasi_rational(*d.rational, jobs);
    throw UnsupportedInput("no quasi-polynomial route for this input");
}

LatticePolytope lattice_polytope_of(const Described& d) {
    if (d.almost_integral) return d.almost_integral->base;
    if (d.zonotope) return zonotope_vertices(*d.zonotope).base;
    throw UnsupportedInput("this command needs a lattice polytope (integral vertices or generators)");
}

std::vector<Rational> parse_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw ParseError("empty entry in list '" + text + "'");
        out.push_back(parse_rational(item.substr(b, e - b + 1)));
    }
    if (out.empty()) throw ParseError("empty list");
    return out;
}

int run_count(const Common& common, const std::string& dilate) {
    Rational t = parse_rational(dilate);
    if (!is_integral(t) || t < 0) throw ParseError("--dilate must be a non-negative integer");
    Described d = describe(load(common));
    Integer n;
    if (d.almost_integral) n = count_points(d.almost_integral->base, d.almost_integral->translate, t.get_num());
    else if (d.rational) n = count_points(*d.rational, RatVector(d.rational->ambient_dim()), t.get_num());
    else if (d.zonotope) {
        auto p = zonotope_vertices(*d.zonotope);
        n = count_points(p.base, p.translate, t.get_num());
    } else {
        if (!t.get_num().fits_ulong_p()) throw UnsupportedInput("dilation too large for the simplex table");
        n = count_weighted_simplex(d.simplex->weights, t.get_num().get_ui());
    }
    write_output(common.output, Json{{"count", to_string(n)}});
    return ok;
}

int run_ehrhart(const Common& common, bool minimal, bool generators_only) {
    Described d = describe(load(common));
    if (generators_only && !d.zonotope) throw UnsupportedInput("the zonotope command takes a generator list");
    auto q = quasi_of(d, common.jobs);
    if (minimal) q = minimal_period(q);
    write_output(common.output, to_json(q));
    return ok;
}

int run_check(const Common& common, const std::string& property) {
    auto q = quasi_of(describe(load(common)), common.jobs);
    auto violation = property == "sym" ? symmetry_violation(q) : gcd_violation(q);
    Json j{{"property", property}, {"holds", !violation.has_value()}, {"period", q.period()}};
    if (violation)
        j["evidence"] = Json{{"residues", Json::array({violation->first, violation->second})},
                             {"constituents", Json::array({to_json(q.constituent(violation->first)),
                                                           to_json(q.constituent(violation->second))})}};
    write_output(common.output, j);
    return ok;
}

int run_classify(const Common& common, bool witness, std::size_t budget, std::uint64_t seed, bool require) {
    auto p = lattice_polytope_of(describe(load(common)));
    ClassifyOptions opt;
    opt.witness = witness;
    opt.search.budget = budget;
    opt.search.seed = seed;
    opt.search.jobs = common.jobs;
    auto report = classify(p, opt);
    Json j = to_json(report);
    for (const auto* w : {&report.asymmetry, &report.gcd_violation})
        if (*w && (*w)->found) j[(*w)->kind == WitnessKind::asymmetry ? "asymmetry_witness" : "gcd_witness"]["verified"] =
            verify_witness(p, **w);
    write_output(common.output, j);
    if (require)
        for (const auto* w : {&report.asymmetry, &report.gcd_violation})
            if (*w) require_witness(**w);
    return ok;
}

int run_scan(const Common& common, const std::string& xs_text) {
    auto xs = parse_list(xs_text);
    Described d = describe(load(common));
    if (!d.almost_integral) throw UnsupportedInput("scan needs integral vertices and a translate direction");
    auto counts = scan_scaled_translate(d.almost_integral->base, d.almost_integral->translate, xs);
    Json rows = Json::array();
    for (std::size_t i = 0; i < xs.size(); ++i) rows.push_back(Json{{"x", to_json(xs[i])}, {"count", to_json(counts[i])}});
    write_output(common.output, Json{{"direction", to_json(d.almost_integral->translate)}, {"samples", rows}});
    return ok;
}

int run_corpus_list(const Common& common) {
    Json j = Json::object();
    for (const auto& [name, help] : corpus_names()) j[name] = help;
    write_output(common.output, j);
    return ok;
}

int run_corpus_build(const Common& common, const std::string& name, const std::vector<std::string>& params) {
    std::map<std::string, std::string> p;
    for (const auto& kv : params) {
        auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) throw ParseError("parameters are written key=value, got '" + kv + "'");
        p[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    write_output(common.output, to_json(build_corpus(name, p)));
    return ok;
}

int run_reproduce(const Common& common, const std::string& only) {
    auto report = reproduce(only.empty() ? std::nullopt : std::optional<std::string>(only), common.jobs);
    write_output(common.output, to_json(report));
    for (const auto& c : report.checks)
        std::cerr << to_string(c.status) << "  [" << c.group << "] " << c.name << ": expected " << c.expected
                  << ", computed " << c.computed << (c.note.empty() ? "" : " (" + c.note + ")") << "\n";
    return report.ok() ? ok : failure;
}

void add_common(CLI::App* cmd, Common& common, bool with_input = true) {
    if (with_input) cmd->add_option("-i,--input", common.input, "input JSON document ('-' for stdin)");
    cmd->add_option("-o,--output", common.output, "output path ('-' for stdout)");
    cmd->add_option("-j,--jobs", common.jobs, "worker threads (default: EHRKIT_JOBS or 1)")->check(CLI::PositiveNumber);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lattice point counts and Ehrhart quasi-polynomials of almost integral polytopes"};
    app.require_subcommand(1);
    Common common;
    common.jobs = default_jobs();

    auto* count = app.add_subcommand("count", "number of lattice points in c + tP");
    std::string dilate = "1";
    add_common(count, common);
    count->add_option("-t,--dilate", dilate, "dilation factor t >= 0");

    auto* ehrhart = app.add_subcommand("ehrhart", "Ehrhart quasi-polynomial");
    bool minimal = false;
    add_common(ehrhart, common);
    ehrhart->add_flag("--minimal", minimal, "reduce to the minimal period");

    auto* zonotope = app.add_subcommand("zonotope", "Ehrhart quasi-polynomial of a generator list");
    add_common(zonotope, common);
    zonotope->add_flag("--minimal", minimal, "reduce to the minimal period");

    auto* check = app.add_subcommand("check", "symmetry or GCD-property of the quasi-polynomial");
    std::string property;
    add_common(check, common);
    check->add_option("-p,--property", property, "sym or gcd")->required()->check(CLI::IsMember({"sym", "gcd"}));

    auto* cls = app.add_subcommand("classify", "central symmetry, zonotope test and witness searches");
    bool witness = false, require = false;
    std::size_t budget = 10000;
    std::uint64_t seed = 0;
    add_common(cls, common);
    cls->add_flag("--witness", witness, "search translation vectors that witness the verdicts");
    cls->add_option("--budget", budget, "candidate vectors per search")->check(CLI::PositiveNumber);
    cls->add_option("--seed", seed, "seed for extra random search directions (0: none)");
    cls->add_flag("--require-witness", require, "exit 5 when a search exhausts its budget");

    auto* scan = app.add_subcommand("scan", "#((x c + P) ∩ Z^d) for sample values x");
    std::string xs;
    add_common(scan, common);
    scan->add_option("--xs", xs, "comma-separated rationals")->required();

    auto* corpus = app.add_subcommand("corpus", "named polytope families");
    corpus->require_subcommand(1);
    auto* corpus_list = corpus->add_subcommand("list", "list corpus names");
    add_common(corpus_list, common, false);
    auto* corpus_build = corpus->add_subcommand("build", "build a corpus entry");
    std::string corpus_name;
    std::vector<std::string> corpus_params;
    add_common(corpus_build, common, false);
    corpus_build->add_option("name", corpus_name, "corpus name")->required();
    corpus_build->add_option("--param", corpus_params, "key=value (repeatable)");

    auto* repro = app.add_subcommand("reproduce", "recompute the published worked examples");
    std::string only;
    add_common(repro, common, false);
    std::vector<std::string> groups = reproduce_groups();
    repro->add_option("--only", only, "run one group")->check(CLI::IsMember(groups));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return parse_error;
    }

    try {
        if (*count) return run_count(common, dilate);
        if (*ehrhart) return run_ehrhart(common, minimal, false);
        if (*zonotope) return run_ehrhart(common, minimal, true);
        if (*check) return run_check(common, property);
        if (*cls) return run_classify(common, witness, budget, seed, require);
        if (*scan) return run_scan(common, xs);
        if (*corpus_list) return run_corpus_list(common);
        if (*corpus_build) return run_corpus_build(common, corpus_name, corpus_params);
        if (*repro) return run_reproduce(common, only);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return parse_error;
    } catch (const UnknownName& e) {
        std::cerr << "error: " << e.what() << "\n";
        return parse_error;
    } catch (const BadParams& e) {
        std::cerr << "error: " << e.what() << "\n";
        return parse_error;
    } catch (const DimensionMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return dimension_error;
    } catch (const UnsupportedInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return unsupported;
    } catch (const BudgetExhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        return budget_exhausted;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return failure;
    }
    return failure;
}
