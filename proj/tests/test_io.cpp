#include <gtest/gtest.h>

#include "helpers.hpp"
#include "qsurf/io.hpp"

using namespace qsurf;
using namespace qsurf::test;

TEST(SpecJson, RoundTripsFixtures) {
  for (const std::string& name : fixture_names()) {
    const QuasiSurfaceSpec spec = fixture_spec(name);
    const QuasiSurfaceSpec back = parse_spec(spec_to_json(spec).dump());
    EXPECT_EQ(spec_to_json(back), spec_to_json(spec)) << name;
    EXPECT_EQ(build(back).rank(), build(spec).rank());
  }
}

TEST(SpecJson, ShippedFixtureFilesMatch) {
  for (const std::string& name : fixture_names()) {
    const QuasiSurfaceSpec spec = load_spec_file(std::string(QSURF_FIXTURE_DIR) + "/" + name + ".json");
    EXPECT_EQ(spec_to_json(spec), spec_to_json(fixture_spec(name))) << name;
  }
}

TEST(SpecJson, ParseErrorsCarryPositions) {
  try {
    parse_spec("{\"disks\": [}");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("byte"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_spec("{}"), ParseError);
  EXPECT_THROW(parse_spec("{\"disks\": 3}"), ParseError);
  EXPECT_THROW(parse_spec("[1, 2]"), ParseError);
  EXPECT_THROW(load_spec_file("/nonexistent/spec.json"), std::exception);
}

TEST(SpecJson, ValidationErrorsAreSeparate) {
  const std::string text = R"({"disks":[{"gates":[]}],"graph":{"vertices":["v"],"edges":[]},"gluing":{},"basepoint":"v"})";
  const QuasiSurfaceSpec spec = parse_spec(text);
  EXPECT_THROW(build(spec), ValidationError);
}

TEST(LoopExpression, WordsAndLists) {
  EXPECT_EQ(parse_loop_expression("g2 g1"), L("g1 g2"));
  EXPECT_EQ(parse_loop_expression(R"([[2, "g1 g2"], [-1, "g2 g1"], [3, "g3"]])"), L("g1 g2") + L("g3", 3));
  EXPECT_EQ(parse_loop_expression(R"([["123456789012345678901234567890", "g1"]])"),
            loop_element(W("g1"), Integer("123456789012345678901234567890")));
  EXPECT_EQ(parse_loop_expression(""), L(""));
  EXPECT_THROW(parse_loop_expression("g1 h2"), ParseError);
  EXPECT_THROW(parse_loop_expression("[[1]]"), ParseError);
  EXPECT_THROW(parse_loop_expression("[[1, \"g1\""), ParseError);
}

TEST(LoopExpression, SerializationIsCanonical) {
  const LoopCombination x = L("g2 g1", 3) + L("g1", -1);
  EXPECT_EQ(to_json(x).dump(), R"([[-1,"g1"],[3,"g1 g2"]])");
  EXPECT_EQ(to_json(LoopCombination{}).dump(), "[]");
  EXPECT_EQ(to_json(Integer("123456789012345678901234567890")).dump(), "\"123456789012345678901234567890\"");
  EXPECT_EQ(parse_loop_expression(to_json(x).dump()), x);
}

TEST(FoxDerivativeJson, Parses) {
  const FoxDerivative d = parse_fox_derivative(parse_json(R"({"g1": [[1, ""]], "g2": [[2, "g1"]]})"), 2);
  EXPECT_EQ(d.images[0], R(""));
  EXPECT_EQ(d.images[1], R("g1", 2));
  EXPECT_EQ(parse_fox_derivative(to_json(d), 2).images, d.images);
  EXPECT_THROW(parse_fox_derivative(parse_json(R"({"g3": []})"), 2), ParseError);
}

TEST(RepresentationJson, ParsesRationals) {
  const RepresentationPoint rho = parse_representation(parse_json(R"({"g1": [["1/2", 0], [0, "2"]]})"), 1);
  EXPECT_EQ(rho.dimension(), 2);
  EXPECT_EQ(rho.image(0)(0, 0), Rational(1, 2));
  EXPECT_EQ(representation_to_json(rho).dump(), R"({"g1":[["1/2","0"],["0","2"]]})");
  EXPECT_THROW(parse_representation(parse_json(R"({"g1": [[1]]})"), 2), ParseError);
  EXPECT_THROW(parse_representation(parse_json(R"({"g1": [[1, 2]]})"), 1), ParseError);
  EXPECT_THROW(parse_representation(parse_json(R"({"g1": [["x"]]})"), 1), std::exception);
  try {
    parse_representation(parse_json(R"({"g1": [[0]]})"), 1);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("singular"), std::string::npos);
  }
}

TEST(DiagramJson, RoundTrips) {
  std::mt19937_64 rng(71);
  for (const std::string& name : fixture_names()) {
    const QuasiSurface qs = fixture(name);
    for (int i = 0; i < 20; ++i) {
      const LaneDiagram d = word_to_diagram(qs, random_class(rng, qs.rank(), 6));
      EXPECT_EQ(parse_diagram(qs, parse_json(diagram_to_json(qs, d).dump())), d);
    }
  }
  const QuasiSurface qs = fixture("QT2");
  EXPECT_THROW(diagram_to_word(qs, parse_diagram(qs, parse_json(R"({"loops":[{"segments":[{"arc":{"disk":2,"lane":1,"depth":1,"forward":true}}]}]})"))),
               DiagramError);
  EXPECT_THROW(parse_diagram(qs, parse_json(R"({"loops":[{"segments":[{"path":["nope"]}]}]})")), std::exception);
}
