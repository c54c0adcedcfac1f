#pragma once

#include <string>
#include <string_view>

#include "surfcut/embed.hpp"
#include "surfcut/solver.hpp"

namespace surfcut {

/// Reads the line-oriented text format or its JSON encoding (detected by a
/// leading '{'). Throws ParseError naming the offending field.
///
///   multicut 1
///   vertices 3
///   edge ab 0 1 4        # name u v weight [sign]
///   rotation 0 +ab -ca   # +name is the dart at u, -name the dart at v
///   terminals 0 1
///   pair 0 1
EmbeddedGraph parse_instance(std::string_view text);

/// Text form accepted by parse_instance.
std::string write_instance(const EmbeddedGraph& graph);

enum class OutputFormat { kJson, kDot };

/// JSON record of weight, edges and statistics, or DOT of G with the cut
/// edges drawn bold red. Wall time is left out unless requested so that
/// repeated runs print identical bytes.
std::string render_result(const EmbeddedGraph& graph, const SolveReport& report,
                          OutputFormat format, bool with_time = false);

}  // namespace surfcut
