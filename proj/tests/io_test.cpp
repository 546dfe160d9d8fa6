#include <gtest/gtest.h>

#include "flatlat/io.hpp"
#include "json.hpp"
#include "support/test_support.hpp"

using namespace flatlat;
using nlohmann::json;

TEST(Parse, PinchedLatticeFromCovers) {
  const auto doc = parse(
      "lattice\nelements B 1 2 3 m T\ncover B 1\ncover B 2\ncover B 3\ncover 1 m\ncover 2 m\ncover m T\ncover 3 T\n");
  ASSERT_EQ(doc.kind(), DocumentKind::kLattice);
  const auto& l = std::get<FiniteLattice>(doc.body);
  EXPECT_EQ(l.size(), 6u);
  EXPECT_EQ(l.label(l.bottom()), "B");
  EXPECT_EQ(l.label(l.top()), "T");
  EXPECT_EQ(cover_pairs(l).size(), 7u);
}

TEST(Parse, FourPointComplex) {
  const auto doc = parse("complex\nvertices 1 2 3 4\nfacet 1 2 3\nfacet 1 2 4\nfacet 3 4\n");
  ASSERT_EQ(doc.kind(), DocumentKind::kComplex);
  EXPECT_EQ(std::get<SimplicialComplex>(doc.body), testing_support::fourpoint());
}

TEST(Parse, TrivialLattice) {
  const auto doc = parse("lattice\nelements a\n");
  EXPECT_EQ(std::get<FiniteLattice>(doc.body).size(), 1u);
}

TEST(Parse, CommentsBlankLinesAndVersionHeader) {
  const auto doc = parse("# leading comment\n\nformat 1\ngraph # trailing\nvertices a b\n\nedge a b # yes\n");
  const auto& g = std::get<SimpleGraph>(doc.body);
  EXPECT_TRUE(g.adjacent(0, 1));
}

TEST(Parse, BareFacetIsEmptyFace) {
  const auto doc = parse("complex\nvertices v\nfacet\n");
  EXPECT_EQ(std::get<SimplicialComplex>(doc.body).facets(), std::vector<IndexSet>{IndexSet{}});
}

TEST(Parse, SyntaxErrorsCarryPosition) {
  struct Case {
    const char* text;
    std::size_t line, column;
  };
  const Case cases[] = {
      {"lattice\nelements a b\nbogus a\n", 3, 1},
      {"poset\nelements a\n", 1, 1},
      {"lattice extra\nelements a\n", 1, 9},
      {"lattice\ncover a b\n", 2, 1},
      {"lattice\nelements a\nelements b\n", 3, 1},
      {"lattice\nelements a b\ncover a\n", 3, 1},
      {"format 2\nlattice\nelements a\n", 1, 8},
      {"graph\nvertices a b\nedge a a\n", 3, 8},
      {"lattice\nelements a a\n", 2, 12},
      {"", 1, 1},
      {"lattice\n", 2, 1},
  };
  for (const auto& c : cases) {
    try {
      parse(c.text);
      ADD_FAILURE() << "accepted: " << c.text;
    } catch (const SyntaxError& e) {
      EXPECT_EQ(e.line(), c.line) << c.text;
      EXPECT_EQ(e.column(), c.column) << c.text;
    }
  }
}

TEST(Parse, ValidationErrorsAreForwarded) {
  try {
    parse("lattice\nelements a b\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotALattice);
  }
  try {
    parse("complex\nvertices a\nfacet b\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownVertex);
  }
}

TEST(Print, RoundTripsEveryFixture) {
  for (const auto& ext : {".lat", ".cx", ".gr"}) {
    for (const auto& name : testing_support::fixtures_with_extension(ext)) {
      const auto doc = parse(testing_support::read_fixture(name));
      const auto again = parse(print(doc));
      EXPECT_EQ(doc.body, again.body) << name;
      EXPECT_EQ(print(doc), print(again)) << name;
    }
  }
}

TEST(Print, RoundTripsEnumeratedLattices) {
  for (const auto& l : enumerate_lattices(6)) {
    EXPECT_EQ(std::get<FiniteLattice>(parse(print(l)).body), l);
  }
}

TEST(Dot, TwoElementLattice) {
  const auto dot = emit_dot_hasse(chain_lattice(2));
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  EXPECT_NE(dot.find("rank=min; n0;"), std::string::npos);
  std::size_t edges = 0;
  for (std::size_t p = dot.find("->"); p != std::string::npos; p = dot.find("->", p + 1)) ++edges;
  EXPECT_EQ(edges, 1u);
}

TEST(Dot, PinchedLatticeEdgeCount) {
  const auto dot = emit_dot_hasse(testing_support::pinched6());
  std::size_t edges = 0, nodes = 0;
  for (std::size_t p = dot.find("->"); p != std::string::npos; p = dot.find("->", p + 1)) ++edges;
  for (std::size_t p = dot.find("[label="); p != std::string::npos; p = dot.find("[label=", p + 1)) ++nodes;
  EXPECT_EQ(edges, 7u);
  EXPECT_EQ(nodes, 6u);
}

TEST(Dot, FlatsLatticeOfFourPointComplex) {
  const auto l = flats_lattice(testing_support::fourpoint());
  const auto dot = emit_dot_hasse(l);
  for (const char* edge : {"\"{}\"", "\"{1,2}\"", "\"{1,2,3,4}\""}) EXPECT_NE(dot.find(edge), std::string::npos);
  std::size_t edges = 0;
  for (std::size_t p = dot.find("->"); p != std::string::npos; p = dot.find("->", p + 1)) ++edges;
  EXPECT_EQ(edges, 9u);
}

TEST(Dot, EscapesQuotes) {
  const auto l = validate_lattice({{true, true}, {false, true}}, {"a\"b", "c"});
  EXPECT_NE(emit_dot_hasse(l).find("a\\\"b"), std::string::npos);
}

TEST(Json, NonAtomisticReport) {
  const auto l = chain_lattice(3);
  const auto j = json::parse(emit_json(is_realizable(l), l));
  EXPECT_EQ(j["atomistic"], false);
  EXPECT_EQ(j["realizable"], false);
  EXPECT_EQ(j["method"], "not-atomistic");
  EXPECT_EQ(j["non_atomistic_element"], "2");
}

TEST(Json, FieldOrderIsStable) {
  const auto l = testing_support::pinched6();
  const auto text = emit_json(is_realizable(l), l);
  const char* keys[] = {"\"atomistic\"", "\"realizable\"", "\"method\"", "\"lattice_size\"", "\"height\"",
                        "\"atom_count\"", "\"flats_count\"", "\"non_atomistic_element\"", "\"supercliques\""};
  std::size_t last = 0;
  for (const char* k : keys) {
    const auto at = text.find(k);
    ASSERT_NE(at, std::string::npos) << k;
    EXPECT_GT(at, last) << k;
    last = at;
  }
}

TEST(Json, RepresentableReport) {
  RepresentabilityReport r;
  EXPECT_EQ(json::parse(emit_json(r, testing_support::fourpoint())), json::parse(R"({"boolean_representable": true})"));
}

TEST(Json, SupercliqueReport) {
  const auto g = gamma_graph(testing_support::pinched6());
  const auto j = json::parse(emit_json_supercliques(g, find_supercliques(g)));
  EXPECT_EQ(j, json::parse(R"({"supercliques": [["1","3"],["2","3"]]})"));
}

TEST(Json, RealizabilityListsSupercliquesAsLabels) {
  const auto l = testing_support::pinched6();
  const auto j = json::parse(emit_json(is_realizable(l, MethodChoice::kHeightThree), l));
  EXPECT_EQ(j["supercliques"], json::parse(R"([["1","3"],["2","3"]])"));
  EXPECT_EQ(j["method"], "height3");
}

TEST(Json, FlatsAndClassificationParse) {
  const auto c = testing_support::fourpoint();
  const auto family = all_flats(c);
  const auto j = json::parse(emit_json(family));
  EXPECT_EQ(j["count"], 7);
  EXPECT_EQ(j["flats"][5], json::parse(R"(["1","2"])"));
  const auto l = family.lattice();
  const auto k = json::parse(emit_json(classify(l), l));
  EXPECT_EQ(k["semimodular"], false);
  EXPECT_EQ(k["semimodular_violation"].size(), 5u);
}

TEST(Matrix, TextLayout) {
  const auto l = chain_lattice(2);
  EXPECT_EQ(emit_matrix(boolean_matrix(l), l), "# rows: 0 1\n# columns: 1\n1\n0\n");
}
