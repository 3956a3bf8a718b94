#pragma once

#include <vector>

#include "surfbasis/basis.hpp"
#include "surfbasis/signatures.hpp"

namespace surfbasis {

/// Two-sheeted cover of G in which crossing edge e switches sheets iff
/// <S,[e]_h> = 1. Vertex (v,z) has id v + z n; edge (e,z) has id e + z m
/// and runs from (u,z) to (v, z xor parity(e)).
class DoubleCover {
 public:
  DoubleCover(const EmbeddedGraph& g, const SignatureSystem& sigs, const BitVec& support);

  const EmbeddedGraph& graph() const { return cover_; }
  std::size_t base_n() const { return n_; }
  std::size_t base_m() const { return m_; }
  bool parity(EdgeId e) const { return parity_[static_cast<std::size_t>(e)]; }

  VertexId lift_vertex(VertexId v, int sheet) const { return v + static_cast<VertexId>(sheet * static_cast<int>(n_)); }
  EdgeId lift_edge(EdgeId e, int sheet) const { return e + static_cast<EdgeId>(sheet * static_cast<int>(m_)); }
  VertexId project_vertex(VertexId x) const { return static_cast<VertexId>(static_cast<std::size_t>(x) % n_); }
  EdgeId project_edge(EdgeId e) const { return static_cast<EdgeId>(static_cast<std::size_t>(e) % m_); }
  int sheet(VertexId x) const { return static_cast<std::size_t>(x) >= n_ ? 1 : 0; }

  /// Lift of a walk given as base darts, starting on `sheet`; returns the
  /// cover darts.
  std::vector<DartId> lift_walk(const std::vector<DartId>& walk, int sheet) const;

 private:
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<bool> parity_;
  EmbeddedGraph cover_;
};

/// Shortest paths (as vertex sequences from a common root) such that every
/// cycle that is not null-homologous shares a vertex with one of them.
struct ShortestPathSystem {
  VertexId root = 0;
  std::vector<std::vector<VertexId>> paths;
  std::vector<std::vector<EdgeId>> path_edges;
};

/// Built from a shortest-path tree rooted at `root`: the tree paths to both
/// ends of every leftover edge of the tree-coforest decomposition, plus a
/// path to each boundary face when there are several.
ShortestPathSystem shortest_path_system(const EmbeddedGraph& g, VertexId root = 0);

/// Cheapest cycle γ with <S,[γ]_h> = 1, found as the shortest path from
/// (s,0) to (s,1) in the double cover over all vertices s on the path
/// system. Throws InputError when S is zero.
std::vector<EdgeId> select_min_homology_cycle(const EmbeddedGraph& g, const SignatureSystem& sigs,
                                              const ShortestPathSystem& system, const BitVec& support,
                                              unsigned threads = 1);

/// Minimum homology basis; works on orientable and non-orientable surfaces.
/// A closed surface gets its last face punctured first.
BasisResult minimum_homology_basis(const EmbeddedGraph& g, const BasisOptions& options = {});

/// Splits an even subgraph into edge-disjoint simple cycles.
std::vector<std::vector<EdgeId>> decompose_even_subgraph(const EmbeddedGraph& g, const std::vector<EdgeId>& edges);

}  // namespace surfbasis
