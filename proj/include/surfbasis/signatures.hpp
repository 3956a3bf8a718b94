#pragma once

#include <vector>

#include "surfbasis/bitvec.hpp"
#include "surfbasis/embedding.hpp"

namespace surfbasis {

enum class EdgeRole : char { Tree, Coforest, Leftover };

/// Partition of the edges into a spanning tree T, a dual forest C with one
/// component per boundary face, and the leftover edges L.
struct TreeCoforest {
  VertexId root = 0;
  std::vector<EdgeRole> role;
  std::vector<EdgeId> tree;
  std::vector<EdgeId> coforest;
  std::vector<EdgeId> leftover;
};

/// Builds the decomposition with a BFS tree from `root`, or with the given
/// spanning tree edges. Throws InputError when there is no boundary face.
TreeCoforest tree_coforest(const EmbeddedGraph& g, VertexId root = 0);
TreeCoforest tree_coforest(const EmbeddedGraph& g, VertexId root, const std::vector<EdgeId>& tree_edges);

/// Co-paths p_1..p_D (D = m - n + 1) and the edge signatures derived from
/// them: bit i of [e] is set iff e lies on p_i. The first β co-paths run
/// through the leftover edges, the rest from each non-boundary face (in
/// index order) to the boundary of its dual tree.
class SignatureSystem {
 public:
  SignatureSystem(const EmbeddedGraph& g, TreeCoforest decomposition);

  std::size_t dimension() const { return dimension_; }
  std::size_t beta() const { return beta_; }
  const TreeCoforest& decomposition() const { return dec_; }
  const std::vector<std::vector<EdgeId>>& copaths() const { return copaths_; }
  /// Face f_i for i >= β (index i - β into this list).
  const std::vector<FaceId>& face_order() const { return face_order_; }
  /// Signature bit of face f, or -1 for a boundary face.
  int face_bit(FaceId f) const { return face_bit_[static_cast<std::size_t>(f)]; }

  const BitVec& edge_signature(EdgeId e) const { return edge_sig_[static_cast<std::size_t>(e)]; }
  const BitVec& edge_homology(EdgeId e) const { return edge_hom_[static_cast<std::size_t>(e)]; }

  BitVec cycle_signature(const std::vector<EdgeId>& edges) const;
  BitVec homology_signature(const std::vector<EdgeId>& edges) const;

  /// The leftover edge e_i together with its tree path, i < β.
  std::vector<EdgeId> fundamental_cycle(std::size_t i) const;
  /// Even subgraph with signature w (sorted edge ids).
  std::vector<EdgeId> reconstruct_cycle(const BitVec& w) const;

  /// Tree path between two vertices.
  std::vector<EdgeId> tree_path(VertexId a, VertexId b) const;

 private:
  const EmbeddedGraph* g_;
  TreeCoforest dec_;
  std::size_t dimension_ = 0;
  std::size_t beta_ = 0;
  std::vector<VertexId> tree_parent_;
  std::vector<EdgeId> tree_parent_edge_;
  std::vector<int> tree_depth_;
  std::vector<std::vector<EdgeId>> copaths_;
  std::vector<FaceId> face_order_;
  std::vector<int> face_bit_;
  std::vector<BitVec> edge_sig_;
  std::vector<BitVec> edge_hom_;
};

/// True iff the edge set is the boundary of a set of non-boundary faces
/// (with b = 0, of any set of faces). Decided by 2-colouring the dual, so it
/// does not depend on signatures.
bool is_null_homologous(const EmbeddedGraph& g, const std::vector<EdgeId>& edges);

}  // namespace surfbasis
