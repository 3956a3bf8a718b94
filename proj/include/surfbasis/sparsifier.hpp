#pragma once

#include <vector>

#include "surfbasis/embedding.hpp"

namespace surfbasis {

enum class SparsifyTerminal { None, Point, SpherePath, ProjectiveLoop, BareLoop };

struct SparsifyOutcome {
  /// Graph left after removing degree-1 and degree-2 faces.
  EmbeddedGraph residual;
  /// Original edge id of each residual edge.
  std::vector<EdgeId> edge_map;
  /// Cycles that belong to every minimum cycle basis, in original edge ids.
  std::vector<std::vector<EdgeId>> forced_mcb;
  /// Cycles that belong to every minimum homology basis.
  std::vector<std::vector<EdgeId>> forced_mhb;
  SparsifyTerminal terminal = SparsifyTerminal::None;
};

/// Repeatedly removes a loop bounding a non-boundary face of degree 1, or
/// the heavier of the two edges of a non-boundary face of degree 2 (after
/// recording the lighter path plus that edge as a forced cycle), until no
/// such face remains or the graph is down to a single edge.
SparsifyOutcome sparsify(const EmbeddedGraph& g);

/// Deletes edge e, keeping boundary faces marked. The faces on the two sides
/// of e merge. Edge ids above e shift down by one.
EmbeddedGraph remove_edge(const EmbeddedGraph& g, EdgeId e);

}  // namespace surfbasis
