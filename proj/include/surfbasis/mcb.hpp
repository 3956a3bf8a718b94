#pragma once

#include <vector>

#include "surfbasis/basis.hpp"
#include "surfbasis/shortest_paths.hpp"
#include "surfbasis/signatures.hpp"

namespace surfbasis {

struct HortonCycle {
  VertexId root = 0;
  EdgeId edge = kNone;  ///< the non-tree edge uv
  std::vector<EdgeId> edges;
};

/// For every root x and every edge uv outside the shortest-path tree of x,
/// the cycle formed by the two tree paths and uv, if it is simple.
std::vector<HortonCycle> horton_candidates(const EmbeddedGraph& g, const AllPairs& paths);

struct IsometricCycle {
  std::vector<EdgeId> edges;  ///< sorted
  PathKey key;
  BitVec signature;
  BitVec homology;
};

struct IsometricCycleSet {
  /// Sorted by key, so the index is the global rank used for tie-breaking.
  std::vector<IsometricCycle> cycles;
  /// Cycle indices per homology class, classes ordered by signature.
  std::vector<std::vector<std::size_t>> classes;
  std::size_t candidates = 0;
};

/// True if the cycle contains the shortest path between any two of its vertices.
bool is_isometric(const EmbeddedGraph& g, const AllPairs& paths, const std::vector<EdgeId>& edges);

IsometricCycleSet isometric_cycles(const EmbeddedGraph& g, const std::vector<HortonCycle>& candidates,
                                   const AllPairs& paths, const SignatureSystem& sigs);

/// Nesting tree of the cycles of one homology class. Node 0 is the root and
/// holds the faces outside every cycle region (including the outer face);
/// every other node corresponds to one cycle. For a non-trivial class the
/// regions are measured against the representative cycle, which gets no
/// node of its own.
struct RegionTree {
  bool trivial = true;
  BitVec homology;
  std::size_t representative = static_cast<std::size_t>(-1);  ///< cycle index, non-trivial only
  struct Node {
    std::size_t cycle = static_cast<std::size_t>(-1);
    std::size_t parent = static_cast<std::size_t>(-1);
    std::vector<FaceId> faces;  ///< F(v)
  };
  std::vector<Node> nodes;  ///< parents precede children
};

/// Requires exactly one boundary face (the outer face). Throws InternalError
/// if two cycles of a class cross.
std::vector<RegionTree> build_region_trees(const EmbeddedGraph& g, const IsometricCycleSet& set);

/// Cheapest isometric cycle (by key) whose signature has odd product with
/// S. Returns its index; throws InternalError if there is none.
std::size_t select_min_cycle(const BitVec& support, const std::vector<RegionTree>& trees,
                             const IsometricCycleSet& set, const SignatureSystem& sigs);

/// Minimum cycle basis of an orientable embedding. The graph is normalised
/// to one boundary face first (a closed surface gets its last face
/// punctured, extra boundary faces are filled). Throws UnsupportedError on
/// a non-orientable input.
BasisResult minimum_cycle_basis(const EmbeddedGraph& g, const BasisOptions& options = {});

}  // namespace surfbasis
