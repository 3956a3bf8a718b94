#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "surfbasis/bitvec.hpp"
#include "surfbasis/embedding.hpp"
#include "surfbasis/support.hpp"

namespace surfbasis {

struct BasisCycle {
  std::vector<EdgeId> edges;  ///< sorted edge ids of the input graph
  Weight weight = 0;
  bool forced = false;  ///< emitted by the sparsifier
};

struct BasisResult {
  std::vector<BasisCycle> cycles;
  Weight total_weight = 0;
  /// The graph the basis refers to: the input with its boundary normalised
  /// (same vertex and edge ids as the input).
  EmbeddedGraph graph;
  std::vector<std::pair<std::string, double>> timings;  ///< seconds per phase
  std::map<std::string, long> counters;
  SupportStats support;
};

struct BasisOptions {
  SupportOptions support;
  unsigned threads = 1;
};

/// Marks the last face as boundary when the input has none (edgeless
/// graphs are returned unchanged).
EmbeddedGraph puncture_if_closed(const EmbeddedGraph& g);

Weight cycle_weight(const EmbeddedGraph& g, const std::vector<EdgeId>& edges);

}  // namespace surfbasis
