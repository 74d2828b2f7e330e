#include <gtest/gtest.h>

#include "ehrkit/corpus.hpp"
#include "ehrkit/zonotope.hpp"
#include "test_util.hpp"

using namespace ehrkit;
using namespace ehrkit::testing;

namespace {

// Quasi-polynomial of any corpus object, through the matching module.
QuasiPolynomial quasi_of(const CorpusObject& o) {
    if (auto* a = std::get_if<AlmostIntegralPolytope>(&o)) return ehrhart_quasi(*a);
    if (auto* r = std::get_if<RationalPolytope>(&o)) return ehrhart_quasi_rational(*r);
    if (auto* w = std::get_if<WeightedSimplex>(&o)) return weighted_simplex_quasi(w->weights);
    return abm_quasi(std::get<ZonotopeSpec>(o));
}

void check_expected(const CorpusEntry& e) {
    auto f = quasi_of(e.object);
    if (e.expected.minimal_period) {
        EXPECT_EQ(minimal_period(f).period(), *e.expected.minimal_period) << e.name;
    }
    if (e.expected.symmetric) {
        EXPECT_EQ(is_symmetric(f), *e.expected.symmetric) << e.name;
    }
    if (e.expected.gcd_property) {
        EXPECT_EQ(has_gcd_property(f), *e.expected.gcd_property) << e.name;
    }
    for (const auto& c : e.expected.constituents)
        for (auto k : c.residues) {
            EXPECT_EQ(f.constituent(k), c.value) << e.name << " residue " << k;
            if (c.provenance == Provenance::disputed) {
                ASSERT_TRUE(c.printed.has_value());
                EXPECT_NE(f.constituent(k), *c.printed);
            }
        }
}

} // namespace

TEST(Corpus, EveryNameRederives) {
    for (const auto& [name, help] : corpus_names()) {
        if (name == "counterexample_pn") {
            check_expected(build_corpus(name, {{"n", "8"}, {"k", "3"}}));
        } else if (name == "alcove") {
            for (auto t : {"G2", "F4", "E6"}) check_expected(build_corpus(name, {{"type", t}}));
        } else {
            check_expected(build_corpus(name));
        }
    }
}

TEST(Corpus, CounterexampleShape) {
    auto e = build_corpus("counterexample_pn", {{"n", "8"}});
    const auto& p = std::get<AlmostIntegralPolytope>(e.object);
    // The origin of the seven listed points lies on the segment from e3 to (1-n)e3.
    EXPECT_EQ(p.base.vertices().size(), 6u);
    EXPECT_FALSE(std::binary_search(p.base.vertices().begin(), p.base.vertices().end(), iv({0, 0, 0})));
    EXPECT_TRUE(std::binary_search(p.base.vertices().begin(), p.base.vertices().end(), iv({0, 0, -7})));
    ASSERT_EQ(e.expected.values.size(), 1u);
    EXPECT_EQ(e.expected.values[0].value, "230");
    EXPECT_EQ(e.expected.values[0].provenance, Provenance::closed_form);
}

TEST(Corpus, CounterexampleCounts) {
    EXPECT_EQ(counterexample_base_count(8), 230);
    EXPECT_EQ(counterexample_base_count(9), 314);
    EXPECT_EQ(counterexample_base_count(10), 417);
    EXPECT_EQ(counterexample_alpha(8, 3), 1);
    EXPECT_EQ(counterexample_alpha(9, 5), 6);
    EXPECT_EQ(counterexample_alpha(8, 1), -9);
    EXPECT_THROW(counterexample_alpha(8, 8), BadParams);
    EXPECT_THROW(counterexample_base_count(7), BadParams);
}

TEST(Corpus, Errors) {
    EXPECT_THROW(build_corpus("dodecahedron"), UnknownName);
    EXPECT_THROW(build_corpus("counterexample_pn", {{"n", "7"}}), BadParams);
    EXPECT_THROW(build_corpus("counterexample_pn", {}), BadParams);
    EXPECT_THROW(build_corpus("counterexample_pn", {{"n", "9"}, {"k", "9"}}), BadParams);
    EXPECT_THROW(build_corpus("alcove", {{"type", "A2"}}), BadParams);
    EXPECT_THROW(build_corpus("cube", {{"d", "x"}}), BadParams);
    EXPECT_THROW(build_corpus("cube", {{"size", "2"}}), BadParams);
}

TEST(Corpus, AlcoveWeights) {
    auto g2 = build_corpus("alcove", {{"type", "G2"}});
    EXPECT_EQ(std::get<WeightedSimplex>(g2.object).weights, (std::vector<std::size_t>{2, 3}));
    EXPECT_EQ(g2.expected.minimal_period, 6u);
    EXPECT_EQ(evaluate(weighted_simplex_quasi({2, 3}), 7), 8);
}

TEST(Corpus, AlcoveAgreesWithVertexCounting) {
    for (auto type : {"G2", "F4"}) {
        auto w = alcove_weights(type);
        std::vector<RatVector> verts{RatVector(w.size())};
        for (std::size_t i = 0; i < w.size(); ++i) {
            RatVector v(w.size());
            v[i] = make_rational(1, w[i]);
            verts.push_back(v);
        }
        TranslatedCounter<Rational> counter{RationalPolytope(verts)};
        for (std::size_t t = 0; t <= 12; ++t)
            EXPECT_EQ(count_weighted_simplex(w, t), counter.count(RatVector(w.size()), t)) << type << " t=" << t;
    }
}

TEST(Corpus, CubeAndCrossPolytope) {
    auto cube = build_corpus("cube", {{"d", "2"}});
    EXPECT_EQ(std::get<AlmostIntegralPolytope>(cube.object).base.vertices().size(), 4u);
    auto cross = build_corpus("cross_polytope", {{"d", "4"}});
    EXPECT_EQ(std::get<AlmostIntegralPolytope>(cross.object).base.vertices().size(), 8u);
}
