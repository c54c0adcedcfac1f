// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>

#include "disk_case.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "surfcut/dp.hpp"
#include "surfcut/error.hpp"
#include "surfcut/generators.hpp"
#include "surfcut/oracle.hpp"
#include "surfcut/solver.hpp"

using namespace surfcut;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Tally {
  int runs = 0;
  int violations = 0;
};

Tally safety;

// Solves, timing the call and checking the returned set independently.
SolveReport run(const EmbeddedGraph& g, double* elapsed, const SolverConfig& config = {}) {
  const auto start = Clock::now();
  SolveReport r = solve_multicut(g, config);
  *elapsed = seconds_since(start);
  ++safety.runs;
  if (!is_multicut(g, g.pairs, r.result.edges)) ++safety.violations;
  return r;
}

std::map<int, std::string> lines;

bool report(int id, bool pass, const std::string& detail) {
  lines[id] = std::string(pass ? "PASS" : "FAIL") + "  " + detail;
  std::fprintf(stderr, "criterion %d done\n", id);
  return pass;
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

bool oracle_equivalence(int id, const char* what, int count, double limit, std::uint64_t seed,
                        const std::function<EmbeddedGraph(std::mt19937_64&)>& make,
                        const std::function<bool(const EmbeddedGraph&)>& admissible) {
  std::mt19937_64 rng(seed);
  int agree = 0, slow = 0, rejected = 0;
  double worst = 0;
  for (int i = 0; i < count; ++i) {
    const EmbeddedGraph g = make(rng);
    if (!admissible(g)) {
      ++rejected;
      continue;
    }
    double t = 0;
    const auto r = run(g, &t);
    worst = std::max(worst, t);
    slow += t > limit;
    agree += r.result.weight == brute_force_multicut(g).weight;
  }
  return report(id, agree == count && slow == 0 && rejected == 0,
                std::string(what) + fmt(": %.0f/%.0f exact, slowest %.3fs", agree, count, worst) +
                    (rejected ? fmt(", %.0f outside the instance class", rejected) : ""));
}

bool criterion_t2() {
  std::mt19937_64 rng(303);
  int agree = 0, total = 0, slow = 0;
  double worst = 0;
  for (int rows = 2; rows <= 8; ++rows) {
    for (int cols = rows; cols <= 8; ++cols) {
      for (int rep = 0; rep < 2; ++rep) {
        EmbeddedGraph g = grid_graph(rows, cols, rng, 1, 10);
        assign_terminals(g, rng, 2, 1, true);
        double t = 0;
        const auto r = run(g, &t);
        worst = std::max(worst, t);
        slow += t > 30;
        agree += r.result.weight == max_flow_min_cut(g, g.pairs[0].first, g.pairs[0].second);
        ++total;
      }
    }
  }
  return report(3, agree == total && slow == 0,
                fmt("t=2 grids up to 8x8: %.0f/%.0f equal max flow, slowest %.3fs", agree, total, worst));
}

bool criterion_fuzz() {
  std::mt19937_64 rng(505);
  int guarded = 0;
  for (int i = 0; i < 300; ++i) {
    InstanceParams p;
    p.max_edges = std::uniform_int_distribution<int>(3, 16)(rng);
    p.terminals = std::uniform_int_distribution<int>(1, 4)(rng);
    p.max_weight = std::uniform_int_distribution<int>(0, 10)(rng);
    p.min_weight = std::min<int>(p.max_weight, std::uniform_int_distribution<int>(0, 2)(rng));
    p.all_pairs = i % 5 == 0;
    const EmbeddedGraph g = i % 3 == 0 ? random_torus_instance(rng, p) : random_planar_instance(rng, p);
    SolverConfig config;
    config.c_points = std::uniform_int_distribution<int>(1, 3)(rng);
    config.c_cross = std::uniform_int_distribution<int>(1, 2)(rng);
    config.jobs = 1 + i % 3;
    config.max_partitions = 1'000'000;
    double t = 0;
    try {
      run(g, &t, config);
    } catch (const ResourceError&) {
      ++guarded;
    }
  }
  return report(5, safety.violations == 0,
                fmt("%.0f solver runs (incl. 300 fuzzed, %.0f stopped by guards), %.0f multicut violations",
                    safety.runs, guarded, safety.violations));
}

bool criterion_round_trip() {
  std::mt19937_64 rng(606);
  int equal = 0;
  for (int i = 0; i < 100; ++i) {
    InstanceParams p;
    p.max_edges = 12;
    p.terminals = 2 + i % 3;
    const EmbeddedGraph g = i % 2 ? random_torus_instance(rng, p) : random_planar_instance(rng, p);
    const auto best = brute_force_multicut(g);
    equal += dual_of_multicut(g, trace_faces(g), best.edges).length == best.weight;
  }
  return report(6, equal == 100, fmt("dual length equals the optimum on %.0f/100 brute-force optima", equal));
}

bool criterion_dp() {
  std::mt19937_64 rng(707);
  int pairs = 0, equal = 0, four = 0;
  for (int round = 0; pairs < 60; ++round) {
    InstanceParams p;
    p.max_edges = round % 2 ? 9 : 12;
    p.terminals = 2 + round % 3;
    const EmbeddedGraph g = round % 2 ? random_torus_instance(rng, p) : random_planar_instance(rng, p);
    const auto c = fixtures::disk_case(g);
    if (c.disk.schema.face_count > 200) continue;
    DiskMetric metric(c.disk.schema);
    const Bounds b = Bounds::from_constants(2, 12, 2, 2, c.f.genus, static_cast<int>(g.terminals.size()));
    std::vector<Topology> tops;
    enumerate_valid_topologies(c.disk.schema, b, g.pairs, [&](const Topology& t) {
      if (tops.size() < 8) tops.push_back(t);
    });
    for (const auto& top : tops) {
      const auto graph = abstract_graph(top, c.disk.schema);
      if (graph.vertex_count > 4 || (graph.vertex_count == 4 && c.disk.schema.face_count > 25)) continue;
      const auto fast = solve_topology(graph, path_decomposition(graph), c.disk, metric);
      const auto slow = naive_solve_topology(graph, c.disk, metric);
      equal += fast.weight == slow.weight;
      four += graph.vertex_count == 4;
      ++pairs;
    }
  }
  return report(7, equal == pairs && pairs >= 50,
                fmt("dynamic program equals naive placement on %.0f/%.0f pairs (%.0f with 4 vertices)", equal,
                    pairs, four));
}

bool criterion_homotopy() {
  std::mt19937_64 rng(808);
  int queries = 0, good = 0;
  for (int round = 0; queries < 500; ++round) {
    InstanceParams p;
    p.max_edges = round % 2 ? 10 : 14;
    p.terminals = 2 + round % 3;
    const EmbeddedGraph g = round % 2 ? random_torus_instance(rng, p) : random_planar_instance(rng, p);
    const auto c = fixtures::disk_case(g);
    const auto& schema = c.disk.schema;
    if (schema.kedge_count() == 0) continue;
    const int F = schema.face_count;
    for (int q = 0; q < 20 && queries < 500; ++q, ++queries) {
      CrossingSequence seq;
      const int len = std::uniform_int_distribution<int>(0, 3)(rng);
      while (static_cast<int>(seq.size()) < len) {
        SequenceEntry e{std::uniform_int_distribution<int>(0, schema.kedge_count() - 1)(rng),
                        std::uniform_int_distribution<int>(0, 1)(rng)};
        if (!schema.glue[e.kedge][e.copy].empty()) seq.push_back(e);
      }
      const int src = std::uniform_int_distribution<int>(0, F - 1)(rng);
      const int dst = std::uniform_int_distribution<int>(0, F - 1)(rng);
      const auto path = shortest_homotopic_path(build_lifted_space(schema, c.disk.overlay, seq), src, dst);
      const auto expected = oracles::lifted_search(schema, seq, src, dst);
      good += path.projected == seq && path.weight == expected.first && path.crossings == expected.second;
    }
  }
  return report(8, good == queries,
                fmt("%.0f/%.0f lifted-space queries exact with verbatim projected sequences", good, queries));
}

bool criterion_structure() {
  std::mt19937_64 rng(909);
  int maps = 0, euler_ok = 0, disks = 0, disk_ok = 0;
  for (int i = 0; i < 120; ++i) {
    InstanceParams p;
    p.terminals = 1 + i % 4;
    const EmbeddedGraph g = i % 2 ? random_torus_instance(rng, p) : random_planar_instance(rng, p);
    const FaceStructure f = trace_faces(g);
    const int chi = g.vertex_count - g.edge_count() + static_cast<int>(f.faces.size());
    const GMap map = to_gmap(g);
    const EmbeddedGraph star = dual_graph(g, f);
    const FaceStructure sf = trace_faces(star);
    const int star_chi = star.vertex_count - star.edge_count() + static_cast<int>(sf.faces.size());
    euler_ok += chi == 2 - f.genus && euler_characteristic(map) == chi && star_chi == chi;
    maps += 1;
    const CutGraph k = build_cut_graph(g, f);
    try {
      const CutDisk disk = cut_to_disk(g, f, k);
      const Overlay& ov = disk.overlay;
      euler_ok += euler_characteristic(ov.map) == chi;
      maps += 1;
      disk_ok += reglue_matches(disk);
    } catch (const TopologyError&) {
    }
    ++disks;
  }
  // (g=0, t=2) stream against the restricted-growth-string enumerator
  EmbeddedGraph cube = fixtures::cube();
  cube.terminals = {0, 6};
  cube.pairs = {{0, 6}};
  const auto c = fixtures::disk_case(cube);
  bool streams_ok = true;
  std::int64_t streamed = 0;
  for (int points = 1; points <= 4; ++points) {
    const Bounds b = Bounds::from_constants(2, 12, 2, points, 0, 2);
    std::set<std::pair<std::vector<int>, std::vector<std::pair<int, int>>>> seen;
    std::int64_t total = 0;
    bool distinct = true;
    enumerate_topologies(c.disk.schema, b, [&](const Topology& t) {
      auto e = t.edges;
      for (auto& [x, y] : e)
        if (x > y) std::swap(x, y);
      std::sort(e.begin(), e.end());
      distinct &= seen.insert({t.count, e}).second;
      ++total;
    });
    streams_ok &= distinct && total == oracles::two_side_topology_count(c.disk.schema, b);
    streamed += total;
  }
  return report(9, euler_ok == maps && disk_ok == disks && streams_ok,
                fmt("Euler formula on %.0f/%.0f maps, one disk face on %.0f/",
                    euler_ok, maps, disk_ok) +
                    fmt("%.0f cut graphs, (g=0,t=2) streams match the independent count (%.0f topologies)",
                        disks, static_cast<double>(streamed)));
}

bool criterion_scaling() {
  // k x k grids have 2k(k-1) edges; k = 5, 10, 19 give 40, 180, 684.
  const int sizes[] = {5, 10, 19};
  double mean[3] = {0, 0, 0};
  int edges[3];
  for (int s = 0; s < 3; ++s) {
    const int k = sizes[s];
    edges[s] = 2 * k * (k - 1);
    std::mt19937_64 rng(1000 + k);
    const int reps = 3;
    for (int rep = 0; rep < reps; ++rep) {
      EmbeddedGraph g = grid_graph(k, k, rng, 1, 10);
      g.terminals = {0, k - 1, k * k - 1};
      g.pairs = {{0, k - 1}, {0, k * k - 1}, {k - 1, k * k - 1}};
      double t = 0;
      run(g, &t);
      mean[s] += t / reps;
    }
  }
  const double e1 = std::log(mean[1] / mean[0]) / std::log(static_cast<double>(edges[1]) / edges[0]);
  const double e2 = std::log(mean[2] / mean[1]) / std::log(static_cast<double>(edges[2]) / edges[1]);
  const double exponent = std::max(e1, e2);
  constexpr double kEnvelope = 4.0;
  return report(10, exponent <= kEnvelope,
                fmt("(g=0,t=3) grids with 40/180/684 edges: mean %.4fs / %.4fs / ", mean[0], mean[1]) +
                    fmt("%.4fs; exponent estimates %.2f and %.2f", mean[2], e1, e2) +
                    fmt(" (envelope n^%.0f)", kEnvelope));
}

}  // namespace

int main() {
  bool all = true;
  all &= oracle_equivalence(
      1, "planar, |E|<=14, t<=4, |R|<=3", 200, 60, 101,
      [](std::mt19937_64& rng) {
        InstanceParams p;
        p.max_edges = 14;
        p.terminals = std::uniform_int_distribution<int>(2, 4)(rng);
        p.max_pairs = 3;
        return random_planar_instance(rng, p);
      },
      [](const EmbeddedGraph& g) { return trace_faces(g).genus == 0 && g.edge_count() <= 14; });
  all &= oracle_equivalence(
      2, "Euler genus 2, |E|<=10, t<=3", 50, 120, 202,
      [](std::mt19937_64& rng) {
        InstanceParams p;
        p.max_edges = 10;
        p.terminals = std::uniform_int_distribution<int>(2, 3)(rng);
        return random_torus_instance(rng, p);
      },
      [](const EmbeddedGraph& g) { return trace_faces(g).genus == 2 && g.edge_count() <= 10; });
  all &= criterion_t2();
  all &= oracle_equivalence(
      4, "multiway cut, 3 terminals, all pairs", 50, 60, 404,
      [](std::mt19937_64& rng) {
        InstanceParams p;
        p.max_edges = 14;
        p.terminals = 3;
        p.all_pairs = true;
        return random_planar_instance(rng, p);
      },
      [](const EmbeddedGraph& g) { return g.pairs.size() == 3 && trace_faces(g).genus == 0; });
  const bool scaling = criterion_scaling();
  const bool round_trip = criterion_round_trip();
  const bool dp = criterion_dp();
  const bool homotopy = criterion_homotopy();
  const bool structure = criterion_structure();
  all &= criterion_fuzz();
  all &= round_trip && dp && homotopy && structure && scaling;
  for (const auto& [id, line] : lines) std::printf("criterion %2d %s\n", id, line.c_str());
  return all ? 0 : 1;
}
