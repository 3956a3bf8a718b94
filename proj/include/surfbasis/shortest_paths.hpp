#pragma once

#include <vector>

#include "surfbasis/bitvec.hpp"
#include "surfbasis/embedding.hpp"

namespace surfbasis {

/// Total order on edge sets: by weight, then by the edge set read as a
/// binary number with higher edge ids more significant. Equivalent to
/// adding an infinitesimal 2^id to each edge weight, so shortest paths and
/// minimum cycles become unique.
struct PathKey {
  Weight weight = 0;
  BitVec edges;

  int compare(const PathKey& other) const;
  bool operator<(const PathKey& other) const { return compare(other) < 0; }
};

PathKey path_key(const EmbeddedGraph& g, const std::vector<EdgeId>& edges);

struct ShortestPathTree {
  VertexId root = 0;
  std::vector<Weight> dist;
  std::vector<EdgeId> parent_edge;  ///< kNone at the root and at unreachable vertices
  std::vector<VertexId> parent;
  std::vector<int> depth;

  /// Edges of the tree path from the root to v, in order from the root.
  std::vector<EdgeId> path_to(VertexId v) const;
  /// Vertices of the tree path from the root to v, root first.
  std::vector<VertexId> vertices_to(VertexId v) const;
};

/// Dijkstra from `root` under the PathKey order, so the tree is the unique
/// shortest-path tree of the perturbed weights.
ShortestPathTree shortest_path_tree(const EmbeddedGraph& g, VertexId root);

/// Plain Dijkstra on weights alone (ties by vertex id order in the heap).
ShortestPathTree plain_shortest_path_tree(const EmbeddedGraph& g, VertexId root);

/// One perturbed shortest-path tree per root.
class AllPairs {
 public:
  AllPairs() = default;
  explicit AllPairs(std::vector<ShortestPathTree> trees) : trees_(std::move(trees)) {}

  std::size_t n() const { return trees_.size(); }
  Weight dist(VertexId u, VertexId v) const { return trees_[static_cast<std::size_t>(u)].dist[static_cast<std::size_t>(v)]; }
  /// The shortest u,v-path, edges ordered from u.
  std::vector<EdgeId> path(VertexId u, VertexId v) const { return tree(u).path_to(v); }
  const ShortestPathTree& tree(VertexId root) const { return trees_[static_cast<std::size_t>(root)]; }

 private:
  std::vector<ShortestPathTree> trees_;
};

AllPairs all_pairs_shortest(const EmbeddedGraph& g, unsigned threads = 1);

}  // namespace surfbasis
