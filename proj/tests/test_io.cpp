#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "surfcut/error.hpp"
#include "surfcut/generators.hpp"
#include "surfcut/io.hpp"

using namespace surfcut;

namespace {

std::string read_file(const std::string& name) {
  std::ifstream in(std::string(SURFCUT_TEST_DATA) + "/" + name);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int error_line(std::string_view text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

std::string error_text(std::string_view text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST(Parse, MinimalInstanceRoundTrips) {
  const std::string text =
      "multicut 1\nvertices 2\nedge e 0 1 5\nrotation 0 +e\nrotation 1 -e\nterminals 0 1\npair 0 1\n";
  const EmbeddedGraph g = parse_instance(text);
  EXPECT_EQ(g.vertex_count, 2);
  ASSERT_EQ(g.edge_count(), 1);
  EXPECT_EQ(g.edges[0].weight, 5);
  EXPECT_EQ(write_instance(g), text);
  SolveReport report;
  report.result.edges = {0};
  report.result.weight = 5;
  EXPECT_NE(render_result(g, report, OutputFormat::kJson).find("\"weight\": 5"), std::string::npos);
  EXPECT_NE(render_result(g, report, OutputFormat::kDot).find("color=red"), std::string::npos);
}

TEST(Parse, DartListedTwice) {
  const std::string text =
      "multicut 1\nvertices 2\nedge e 0 1 5\nrotation 0 +e +e\nrotation 1 -e\n";
  EXPECT_EQ(error_line(text), 4);
  EXPECT_NE(error_text(text).find("'+e' listed twice"), std::string::npos);
}

TEST(Parse, NamesTheBadField) {
  EXPECT_NE(error_text("multicut 1\nvertices 2\nedge e 0 1 x\n").find("edge weight"), std::string::npos);
  EXPECT_NE(error_text("multicut 1\nvertices 2\nedge e 0 7 1\n").find("edge v"), std::string::npos);
  EXPECT_NE(error_text("multicut 1\nvertices 1\nwhat 3\n").find("unknown field"), std::string::npos);
  EXPECT_NE(error_text("vertices 1\n").find("header"), std::string::npos);
  EXPECT_NE(error_text("multicut 1\nvertices 2\nedge e 0 1 1\nrotation 0 -e\n").find("does not end"),
            std::string::npos);
  EXPECT_NE(error_text("multicut 1\nvertices 2\nedge e 0 1 1\nrotation 0 +e\n").find("no rotation"),
            std::string::npos);
  EXPECT_NE(error_text("multicut 1\nvertices 1\nterminals 0\npair 0 0\n").find("pair"), std::string::npos);
}

TEST(Parse, JsonEncodingMatchesText) {
  const std::string json = R"({"version": 1, "vertices": 2,
    "edges": [{"name": "e", "u": 0, "v": 1, "weight": 5}],
    "rotation": [["+e"], ["-e"]], "terminals": [0, 1], "pairs": [[0, 1]]})";
  const EmbeddedGraph g = parse_instance(json);
  EXPECT_EQ(write_instance(g),
            "multicut 1\nvertices 2\nedge e 0 1 5\nrotation 0 +e\nrotation 1 -e\nterminals 0 1\npair 0 1\n");
  EXPECT_EQ(error_line("{\n\"version\": 1,\n  oops }"), 3);
}

TEST(Parse, GeneratedInstancesRoundTrip) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 40; ++i) {
    InstanceParams p;
    const EmbeddedGraph g = i % 2 ? random_torus_instance(rng, p) : random_planar_instance(rng, p);
    const std::string text = write_instance(g);
    EXPECT_EQ(write_instance(parse_instance(text)), text);
  }
}

TEST(Golden, CorpusOutputsAreStable) {
  for (const std::string name : {"triangle", "planar", "torus", "multiway"}) {
    const EmbeddedGraph g = parse_instance(read_file(name + ".txt"));
    SolverConfig config;
    config.oracle = true;
    const SolveReport report = solve_multicut(g, config);
    ASSERT_TRUE(report.oracle_weight.has_value());
    EXPECT_EQ(*report.oracle_weight, report.result.weight) << name;
    EXPECT_EQ(render_result(g, report, OutputFormat::kJson), read_file(name + ".golden.json")) << name;
  }
}
