#pragma once

#include <vector>

#include "surfbasis/bitvec.hpp"
#include "surfbasis/embedding.hpp"

namespace surfbasis {

// Brute-force reference implementations. They share nothing with the
// signature machinery: independence is tested on edge vectors and homology
// is decided by face boundaries or cocycles.

struct CycleSpaceEnumeration {
  std::size_t dimension = 0;
  /// Every element of the cycle space as an edge-incidence vector, the
  /// empty set first.
  std::vector<BitVec> elements;
};

/// All 2^(m-n+1) XOR combinations of the fundamental cycles of a BFS tree.
/// Throws InputError when the dimension exceeds `max_dimension`.
CycleSpaceEnumeration enumerate_cycle_space(const EmbeddedGraph& g, std::size_t max_dimension = 20);

struct OracleBasis {
  std::vector<std::vector<EdgeId>> cycles;  ///< empty when only the weight is known
  Weight total_weight = 0;
};

/// Greedy over the enumerated cycle space, keeping elements that raise the
/// rank of the edge vectors.
OracleBasis greedy_mcb(const EmbeddedGraph& g);

/// Greedy over the enumerated cycle space, keeping elements that raise the
/// rank modulo face boundaries. Falls back to greedy_mhb_by_classes when the
/// cycle space is too large to enumerate.
OracleBasis greedy_mhb(const EmbeddedGraph& g);
OracleBasis greedy_mhb_by_enumeration(const EmbeddedGraph& g);

/// Cheapest closed walk of each non-zero homology class, found by shortest
/// paths in the 2^β-sheeted homology cover, then greedy over the classes.
/// Returns the weight only. Throws InputError for β > 12.
OracleBasis greedy_mhb_by_classes(const EmbeddedGraph& g);

/// β cocycles (edge vectors vanishing on every face boundary) independent
/// modulo vertex coboundaries. Pairing a cycle with them labels its class.
std::vector<BitVec> cocycle_basis(const EmbeddedGraph& g);
BitVec homology_label(const std::vector<BitVec>& cocycles, const std::vector<EdgeId>& edges);

/// Edge vector of an edge list (length m).
BitVec edge_vector(const EmbeddedGraph& g, const std::vector<EdgeId>& edges);
std::vector<EdgeId> edge_list(const BitVec& v);

}  // namespace surfbasis
