#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "surfcut/error.hpp"
#include "surfcut/generators.hpp"
#include "surfcut/io.hpp"
#include "surfcut/solver.hpp"

using namespace surfcut;

TEST(Solver, Triangle) {
  EmbeddedGraph g = fixtures::triangle(1, 2, 3);
  g.terminals = {0, 1};
  g.pairs = {{0, 1}};
  const auto r = solve_multicut(g);
  EXPECT_EQ(r.result.weight, 3);
  EXPECT_EQ(r.result.edges, (std::vector<int>{0, 1}));
}

TEST(Solver, NoPairs) {
  EmbeddedGraph g = fixtures::cube();
  g.terminals = {0, 5};
  const auto r = solve_multicut(g);
  EXPECT_EQ(r.result.weight, 0);
  EXPECT_TRUE(r.result.edges.empty());
}

TEST(Solver, GridWithTwoPairs) {
  std::mt19937_64 rng(21);
  EmbeddedGraph g = grid_graph(4, 4, rng, 1, 1);
  g.terminals = {0, 3, 12, 15};
  g.pairs = {{0, 15}, {3, 12}};
  const auto r = solve_multicut(g);
  EXPECT_EQ(r.result.weight, brute_force_multicut(g, 24).weight);
}

TEST(Solver, ParallelRunsAgreeWithSerial) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 12; ++i) {
    InstanceParams p;
    p.terminals = 3 + i % 2;
    const EmbeddedGraph g = i % 3 ? random_planar_instance(rng, p) : random_torus_instance(rng, p);
    SolverConfig serial;
    SolverConfig parallel;
    parallel.jobs = 4;
    const auto a = solve_multicut(g, serial);
    const auto b = solve_multicut(g, parallel);
    EXPECT_EQ(a.result.weight, b.result.weight);
    EXPECT_EQ(a.result.edges, b.result.edges);
    EXPECT_EQ(render_result(g, a, OutputFormat::kJson), render_result(g, b, OutputFormat::kJson));
  }
}

TEST(Solver, NaiveModeAgrees) {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 10; ++i) {
    InstanceParams p;
    p.max_edges = 10;
    const EmbeddedGraph g = random_planar_instance(rng, p);
    SolverConfig naive;
    naive.dp = DpMode::kNaive;
    EXPECT_EQ(solve_multicut(g, naive).result.weight, solve_multicut(g).result.weight);
  }
}

TEST(Solver, EscalationKeepsTheOptimum) {
  std::mt19937_64 rng(35);
  InstanceParams p;
  p.terminals = 3;
  const EmbeddedGraph g = random_planar_instance(rng, p);
  SolverConfig config;
  config.escalate = true;
  config.oracle = true;
  const auto r = solve_multicut(g, config);
  EXPECT_EQ(r.result.weight, *r.oracle_weight);
  EXPECT_TRUE(r.warnings.empty());
}

TEST(Solver, TightBoundsTripTheGuard) {
  EmbeddedGraph g = fixtures::cube();
  g.terminals = {0, 2, 5, 7};
  g.pairs = {{0, 2}, {5, 7}, {0, 7}};
  SolverConfig config;
  config.c_points = 1;
  config.c_cross = 1;
  try {
    const auto r = solve_multicut(g, config);
    EXPECT_GE(r.result.weight, brute_force_multicut(g).weight);
  } catch (const ResourceError&) {
    SUCCEED();
  }
}

TEST(Solver, RejectsBadMultipliers) {
  EmbeddedGraph g = fixtures::triangle(1, 1, 1);
  g.terminals = {0, 1};
  g.pairs = {{0, 1}};
  SolverConfig config;
  config.c_tree = 0;
  EXPECT_THROW(solve_multicut(g, config), InputError);
}
