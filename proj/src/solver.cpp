#include "surfcut/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <thread>

#include "surfcut/dp.hpp"
#include "surfcut/error.hpp"
#include "surfcut/topology.hpp"

namespace surfcut {

namespace {

struct Candidate {
  Weight weight = kInfinity;
  std::int64_t index = -1;
  TopologySolution solution;
};

class Search {
 public:
  Search(const CutDisk& disk, const SolverConfig& config, SolveStats& stats)
      : disk_(disk), config_(config), stats_(stats), metric_(disk.schema) {}

  void add(const Topology& top) {
    pending_.push_back(top);
    if (static_cast<int>(pending_.size()) >= std::max(1, config_.chunk)) flush();
  }

  void flush() {
    if (pending_.empty()) return;
    const std::int64_t first = next_index_;
    std::vector<Candidate> results(pending_.size());
    std::vector<std::exception_ptr> errors(pending_.size());
    std::vector<int> widths(pending_.size(), 0);
    DpOptions options;
    options.cutoff = best_.weight;
    std::atomic<std::size_t> cursor{0};
    auto work = [&] {
      for (std::size_t i; (i = cursor++) < pending_.size();) {
        try {
          const auto graph = abstract_graph(pending_[i], disk_.schema);
          TopologySolution sol;
          if (config_.dp == DpMode::kNaive) {
            sol = naive_solve_topology(graph, disk_, metric_);
          } else {
            const auto pd = path_decomposition(graph);
            widths[i] = pd.width;
            sol = solve_topology(graph, pd, disk_, metric_, options);
          }
          results[i].weight = sol.weight;
          results[i].index = first + static_cast<std::int64_t>(i);
          results[i].solution = std::move(sol);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    };
    const int jobs = std::max(1, std::min<int>(config_.jobs, static_cast<int>(pending_.size())));
    if (jobs == 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (int j = 0; j < jobs; ++j) pool.emplace_back(work);
      for (auto& t : pool) t.join();
    }
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
    for (std::size_t i = 0; i < results.size(); ++i) {
      auto& r = results[i];
      stats_.max_width = std::max(stats_.max_width, widths[i]);
      stats_.dp_states += r.solution.states;
      if (r.weight >= kInfinity) {
        ++stats_.pruned;
        continue;
      }
      ++stats_.solved;
      if (r.weight < best_.weight) best_ = std::move(r);
    }
    next_index_ += static_cast<std::int64_t>(pending_.size());
    pending_.clear();
  }

  const Candidate& best() const { return best_; }

 private:
  const CutDisk& disk_;
  const SolverConfig& config_;
  SolveStats& stats_;
  DiskMetric metric_;
  std::vector<Topology> pending_;
  std::int64_t next_index_ = 0;
  Candidate best_;
};

Weight weight_of(const EmbeddedGraph& graph, const std::vector<int>& edges) {
  Weight w = 0;
  for (int e : edges) w += graph.edges[e].weight;
  return w;
}

SolveReport solve_once(const EmbeddedGraph& graph, const SolverConfig& config) {
  SolveReport report;
  auto& stats = report.stats;
  stats.terminals = static_cast<int>(graph.terminals.size());
  if (graph.pairs.empty()) return report;

  const FaceStructure faces = trace_faces(graph);
  stats.genus = faces.genus;
  const CutGraph cut = build_cut_graph(graph, faces);
  const CutDisk disk = cut_to_disk(graph, faces, cut);
  stats.cut_edges = disk.schema.kedge_count();
  stats.disk_faces = disk.schema.face_count;
  const Bounds bounds = Bounds::from_constants(config.c_tree, config.c_cross, config.c_vert,
                                               config.c_points, faces.genus, stats.terminals);
  stats.bound_tree = bounds.tree;
  stats.bound_cross = bounds.cross;
  stats.bound_vert = bounds.vert;
  stats.bound_points = bounds.points;
  stats.topology_cap = topology_cap(disk.schema, bounds);

  Search search(disk, config, stats);
  EnumerationStats enumeration;
  enumeration.partition_budget = config.max_partitions;
  enumerate_valid_topologies(disk.schema, bounds, graph.pairs,
                             [&](const Topology& top) { search.add(top); }, &enumeration);
  search.flush();
  stats.partitions = enumeration.partitions;
  stats.valid = enumeration.valid;
  stats.minimal = enumeration.minimal;
  stats.enumerated = enumeration.enumerated;
  if (static_cast<double>(enumeration.enumerated) > stats.topology_cap)
    report.warnings.push_back("enumerated topologies exceed the computed cap");

  const Candidate& best = search.best();
  if (best.index < 0) throw ResourceError("no valid topology within the bounds; raise the multipliers");
  stats.best_topology = best.index;

  std::vector<int> crossings(graph.edge_count(), 0);
  for (int e : best.solution.gedges) ++crossings[e];
  auto& result = report.result;
  for (int e = 0; e < graph.edge_count(); ++e)
    if (crossings[e] > 0) result.edges.push_back(e);
  result.weight = weight_of(graph, result.edges);
  result.certificate = MulticutResult::Certificate{best.index, crossings};
  if (!is_multicut(graph, graph.pairs, result.edges))
    throw InternalError("edges crossed by the drawn dual do not form a multicut");
  return report;
}

}  // namespace

SolveReport solve_multicut(const EmbeddedGraph& graph, const SolverConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  validate(graph);
  SolveReport report = solve_once(graph, config);
  if (config.escalate && !graph.pairs.empty()) {
    SolverConfig wider = config;
    wider.c_tree *= 2;
    wider.c_cross *= 2;
    wider.c_vert *= 2;
    wider.c_points *= 2;
    SolveReport second = solve_once(graph, wider);
    if (second.result.weight < report.result.weight) {
      second.warnings.push_back("doubling the bound multipliers improved the optimum from " +
                                std::to_string(report.result.weight) + " to " +
                                std::to_string(second.result.weight));
      report = std::move(second);
    }
  }
  if (config.oracle && !graph.pairs.empty()) {
    if (graph.edge_count() <= 22) {
      report.oracle_weight = brute_force_multicut(graph).weight;
    } else if (graph.pairs.size() == 1) {
      report.oracle_weight = max_flow_min_cut(graph, graph.pairs[0].first, graph.pairs[0].second);
    } else {
      report.warnings.push_back("instance too large for the oracles");
    }
    if (report.oracle_weight && *report.oracle_weight != report.result.weight)
      report.warnings.push_back("oracle optimum " + std::to_string(*report.oracle_weight) +
                                " differs from the solver's " + std::to_string(report.result.weight));
  }
  report.stats.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace surfcut
