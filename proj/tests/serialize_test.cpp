#include <gtest/gtest.h>

#include "ehrkit/serialize.hpp"
#include "test_util.hpp"

using namespace ehrkit;
using namespace ehrkit::testing;

TEST(Serialize, QuasiPolynomialShape) {
    QuasiPolynomial f({Polynomial({q("0"), q("-4/3"), q("0"), q("4/3")}), Polynomial::constant(1)});
    Json j = to_json(f);
    EXPECT_EQ(j["period"], 2);
    EXPECT_EQ(j["constituents"][0], Json::array({"0", "-4/3", "0", "4/3"}));
    EXPECT_EQ(j["constituents"][1], Json::array({"1"}));
    EXPECT_EQ(to_json(Polynomial()), Json::array());
}

TEST(Serialize, KeysSortedAndStable) {
    Json a{{"zeta", 1}, {"alpha", 2}};
    EXPECT_EQ(dump(a), "{\n  \"alpha\": 2,\n  \"zeta\": 1\n}\n");
    auto e = build_corpus("p2_shifted_octahedron");
    EXPECT_EQ(dump(to_json(e)), dump(to_json(build_corpus("p2_shifted_octahedron"))));
}

TEST(Serialize, RationalsReduced) {
    EXPECT_EQ(to_json(parse_rational("6/4")), "3/2");
    EXPECT_EQ(to_json(parse_rational("-4/2")), "-2");
}

TEST(Serialize, ParseVertices) {
    auto doc = parse_input(std::string(R"({"vertices": [[1, 0], ["0", "1"]], "translate": ["3/4", 0]})"));
    ASSERT_TRUE(doc.vertices);
    EXPECT_EQ(doc.vertices->at(1), rv({"0", "1"}));
    EXPECT_EQ(*doc.translate, rv({"3/4", "0"}));
}

TEST(Serialize, ParseGeneratorsAndCorpus) {
    auto z = parse_input(std::string(R"({"generators": [[1, 0], [1, 1]]})"));
    ASSERT_TRUE(z.generators);
    EXPECT_EQ(z.generators->size(), 2u);
    auto c = parse_input(std::string(R"({"corpus": "counterexample_pn", "params": {"n": 9, "k": "5"}})"));
    ASSERT_TRUE(c.corpus);
    EXPECT_EQ(c.corpus->params.at("n"), "9");
}

TEST(Serialize, Errors) {
    EXPECT_THROW(parse_input(std::string("{")), ParseError);
    EXPECT_THROW(parse_input(std::string(R"({"vertices": [["1/0", 1]]})")), ParseError);
    EXPECT_THROW(parse_input(std::string(R"({"vertices": [[0.5, 1]]})")), ParseError);
    EXPECT_THROW(parse_input(std::string(R"({"vertices": [[1, 2]], "generators": [[1, 0]]})")), ParseError);
    EXPECT_THROW(parse_input(std::string(R"({"vertices": [[1, 2]], "color": 3})")), ParseError);
    EXPECT_THROW(parse_input(std::string(R"({"generators": [["1/2", 0]]})")), ParseError);
    EXPECT_THROW(parse_input(std::string(R"({"vertices": [[1, 2], [1, 2, 3]]})")), DimensionMismatch);
    EXPECT_THROW(parse_input(std::string(R"({"vertices": [[1, 2]], "translate": ["1/2"]})")), DimensionMismatch);
    EXPECT_THROW(parse_input(std::string(R"({"corpus": "nothing"})")), UnknownName);
    EXPECT_THROW(parse_input(std::string(R"({"corpus": "counterexample_pn", "params": {"n": 3}})")), BadParams);
}

TEST(Serialize, WitnessReport) {
    WitnessReport r;
    r.kind = WitnessKind::gcd_violation;
    r.found = true;
    r.translate = rv({"1/5", "1/5", "1/5"});
    r.period = 5;
    r.first_residue = 1;
    r.second_residue = 2;
    r.first = Polynomial({q("0"), q("-1/3"), q("0"), q("4/3")});
    r.second = Polynomial({q("0"), q("-4/3"), q("0"), q("4/3")});
    r.attempts = 7;
    Json j = to_json(r);
    EXPECT_EQ(j["kind"], "gcd_violation");
    EXPECT_EQ(j["residues"], Json::array({1, 2}));
    EXPECT_EQ(j["translate"][0], "1/5");
}
