#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace surfbasis {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;
using DartId = std::int32_t;
using FaceId = std::int32_t;
using Weight = double;

inline constexpr std::int32_t kNone = -1;

// Every edge e owns two darts (edge ends). The tail dart 2e sits at the
// edge's first endpoint u and is written "e-" in instance files; the head
// dart 2e+1 sits at v and is written "e+". Following a dart means walking
// the edge away from the vertex the dart sits at.
constexpr DartId tail_dart(EdgeId e) { return 2 * e; }
constexpr DartId head_dart(EdgeId e) { return 2 * e + 1; }
constexpr EdgeId edge_of(DartId d) { return d / 2; }
constexpr DartId reverse(DartId d) { return d ^ 1; }
constexpr bool is_head(DartId d) { return (d & 1) != 0; }

struct EdgeRecord {
  VertexId u = 0;
  VertexId v = 0;
  Weight weight = 1;
  bool sig = false;   ///< orientation signature bit
  std::string label;  ///< stable external identifier
};

/// Everything needed to (re)build an embedding.
struct EmbeddingDescription {
  std::size_t vertex_count = 0;
  std::vector<EdgeRecord> edges;
  /// Cyclic order of darts around each vertex.
  std::vector<std::vector<DartId>> rotation;
  /// One dart per boundary component; the boundary is the face traced from it.
  std::vector<DartId> boundary_darts;
};

/// A face as the closed sequence of darts followed while walking around it.
struct FaceWalk {
  std::vector<DartId> darts;
  bool boundary = false;
};

struct TopoStats {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t faces = 0;     ///< ℓ, including boundary faces
  std::size_t boundary = 0;  ///< b
  /// n - m + ℓ: Euler characteristic of the closed surface obtained by
  /// filling every boundary face.
  long euler_char = 0;
  /// euler_char - b: Euler characteristic of the bordered surface.
  long surface_euler_char = 0;
  long genus = 0;
  bool orientable = true;
  /// Rank of the first Z2 homology of the bordered surface.
  long beta = 0;
};

struct DualGraph {
  std::size_t vertex_count = 0;      ///< one per face, boundary faces included
  std::vector<bool> boundary_vertex;
  /// Indexed by primal edge id: the faces on the two sides of that edge.
  std::vector<std::pair<FaceId, FaceId>> edge_ends;
  /// Dual edges (primal edge ids) incident to each dual vertex; a dual loop
  /// is listed twice.
  std::vector<std::vector<EdgeId>> incident;
};

/// Cellular embedding of an undirected multigraph given by a rotation system
/// and orientation signature. Immutable once built.
class EmbeddedGraph {
 public:
  EmbeddedGraph() = default;

  /// Validates the description and traces faces. Throws InputError on a
  /// disconnected graph, a misplaced or duplicated dart, a negative weight,
  /// or two boundary markers on one face.
  static EmbeddedGraph build(EmbeddingDescription desc);

  /// As build(), but accepts a disconnected graph and repeated boundary
  /// markers (used for cut-open graphs and covers).
  static EmbeddedGraph build_relaxed(EmbeddingDescription desc);

  std::size_t n() const { return desc_.vertex_count; }
  std::size_t m() const { return desc_.edges.size(); }
  std::size_t num_faces() const { return faces_.size(); }
  std::size_t num_boundary() const { return boundary_faces_.size(); }

  const EdgeRecord& edge(EdgeId e) const { return desc_.edges[static_cast<std::size_t>(e)]; }
  Weight weight(EdgeId e) const { return edge(e).weight; }
  bool sig(EdgeId e) const { return edge(e).sig; }
  /// Vertex that dart d sits at.
  VertexId dart_vertex(DartId d) const { return is_head(d) ? edge(edge_of(d)).v : edge(edge_of(d)).u; }
  /// Vertex reached by following dart d.
  VertexId dart_target(DartId d) const { return dart_vertex(reverse(d)); }
  VertexId other_end(EdgeId e, VertexId x) const { return edge(e).u == x ? edge(e).v : edge(e).u; }
  DartId next_around(DartId d) const { return next_[static_cast<std::size_t>(d)]; }
  DartId prev_around(DartId d) const { return prev_[static_cast<std::size_t>(d)]; }
  const std::vector<DartId>& rotation(VertexId v) const { return desc_.rotation[static_cast<std::size_t>(v)]; }
  std::size_t degree(VertexId v) const { return rotation(v).size(); }

  const std::vector<FaceWalk>& faces() const { return faces_; }
  const FaceWalk& face(FaceId f) const { return faces_[static_cast<std::size_t>(f)]; }
  bool is_boundary(FaceId f) const { return face(f).boundary; }
  const std::vector<FaceId>& boundary_faces() const { return boundary_faces_; }
  /// Face containing the corner between d and next_around(d).
  FaceId corner_face(DartId d) const { return corner_face_[static_cast<std::size_t>(d)]; }
  /// Faces on the two sides of edge e (equal when both sides are one face).
  std::pair<FaceId, FaceId> edge_faces(EdgeId e) const { return edge_faces_[static_cast<std::size_t>(e)]; }
  /// Edges that appear an odd number of times on the walk of f, sorted.
  std::vector<EdgeId> face_boundary_edges(FaceId f) const;
  /// A dart whose traced face is f.
  DartId face_marker(FaceId f) const;

  const EmbeddingDescription& description() const { return desc_; }

  bool connected() const;
  /// Component label per vertex, labels 0..k-1 in order of first vertex.
  std::vector<std::size_t> component_labels(std::size_t* count = nullptr) const;

 private:
  static EmbeddedGraph build_impl(EmbeddingDescription desc, bool strict);
  void trace_faces();

  EmbeddingDescription desc_;
  std::vector<DartId> next_;
  std::vector<DartId> prev_;
  std::vector<FaceWalk> faces_;
  std::vector<FaceId> corner_face_;
  std::vector<std::pair<FaceId, FaceId>> edge_faces_;
  std::vector<FaceId> boundary_faces_;
};

/// Euler characteristic, orientability, genus and homology rank. Requires a
/// connected graph.
TopoStats topo_stats(const EmbeddedGraph& g);

/// Decides orientability by 2-colouring vertices along a spanning tree,
/// where crossing an edge flips the colour iff its signature is 1. The
/// optional root picks a different spanning tree.
bool is_orientable(const EmbeddedGraph& g, VertexId root = 0);

DualGraph dual(const EmbeddedGraph& g);

/// Returns a copy with every boundary flag removed.
EmbeddingDescription without_boundary(const EmbeddedGraph& g);

/// Returns a copy where face f is additionally marked as boundary.
EmbeddedGraph puncture(const EmbeddedGraph& g, FaceId f);

/// Builds an embedding keeping only the listed boundary faces as boundary.
EmbeddedGraph with_boundary(const EmbeddedGraph& g, const std::vector<FaceId>& boundary);

struct CutResult {
  /// The cut-open graph; disconnected when the path separates.
  EmbeddedGraph graph;
  std::vector<VertexId> vertex_origin;
  std::vector<EdgeId> edge_origin;
  /// Original face of each face in `graph`, kNone for the new boundaries.
  std::vector<FaceId> face_origin;
  std::vector<FaceId> new_boundary_faces;
  std::size_t component_count = 0;
};

/// Cuts the surface along a walk given as a dart sequence. The walk is either
/// closed (ends where it starts) or a simple path. Throws InputError if the
/// darts do not chain, repeat an edge, revisit a vertex on an open path, or
/// cross themselves.
CutResult cut_along(const EmbeddedGraph& g, const std::vector<DartId>& walk);

/// Orders the edges of a simple cycle into a closed dart walk. Throws
/// InputError if the edges do not form a single simple cycle.
std::vector<DartId> cycle_walk(const EmbeddedGraph& g, const std::vector<EdgeId>& edges);

/// True if the edge set is one simple cycle (connected, every degree 2).
bool is_simple_cycle(const EmbeddedGraph& g, const std::vector<EdgeId>& edges);

/// True if every vertex has even degree in the edge set.
bool is_even_subgraph(const EmbeddedGraph& g, const std::vector<EdgeId>& edges);

}  // namespace surfbasis
