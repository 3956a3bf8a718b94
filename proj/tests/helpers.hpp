#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <random>
#include <string>
#include <vector>

#include "surfbasis/bitvec.hpp"
#include "surfbasis/embedding.hpp"
#include "surfbasis/generators.hpp"
#include "surfbasis/gf2_matrix.hpp"
#include "surfbasis/instance_io.hpp"
#include "surfbasis/oracle.hpp"

namespace testing {

using namespace surfbasis;

inline std::string fixture_path(const std::string& name) { return std::string(SURFBASIS_FIXTURE_DIR) + "/" + name; }

inline EmbeddedGraph fixture(const std::string& name) {
  return EmbeddedGraph::build(read_instance_file(fixture_path(name)));
}

inline EmbeddedGraph build(const EmbeddingDescription& d) { return EmbeddedGraph::build(d); }

inline EdgeId edge_named(const EmbeddedGraph& g, const std::string& label) {
  for (std::size_t e = 0; e < g.m(); ++e) {
    if (g.edge(static_cast<EdgeId>(e)).label == label) return static_cast<EdgeId>(e);
  }
  return kNone;
}

inline std::vector<EdgeId> edges_named(const EmbeddedGraph& g, std::initializer_list<const char*> labels) {
  std::vector<EdgeId> out;
  for (const char* l : labels) out.push_back(edge_named(g, l));
  std::sort(out.begin(), out.end());
  return out;
}

inline Weight total(const EmbeddedGraph& g, const std::vector<EdgeId>& edges) {
  Weight w = 0;
  for (EdgeId e : edges) w += g.weight(e);
  return w;
}

// Hand-rolled generators for property tests.

inline BitVec random_bits(std::mt19937_64& rng, std::size_t n) {
  BitVec v(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rng() & 1U) v.set(i);
  }
  return v;
}

inline BitVec random_nonzero(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    BitVec v = random_bits(rng, n);
    if (v.any()) return v;
  }
}

/// Random orientable instance with m - n + 1 = dim, one boundary face.
inline EmbeddingDescription random_instance(std::uint64_t seed, std::size_t n, std::size_t dim, bool orientable = true) {
  auto d = random_rotation(n, n - 1 + dim, seed, orientable);
  auto g = EmbeddedGraph::build(d);
  return g.num_boundary() > 0 ? d : with_punctured_last_face(d);
}

/// Single-source distances by a plain label-correcting pass (Bellman-Ford),
/// independent of the library's Dijkstra.
inline std::vector<Weight> bellman_ford(const EmbeddedGraph& g, VertexId s) {
  std::vector<Weight> dist(g.n(), std::numeric_limits<Weight>::infinity());
  dist[static_cast<std::size_t>(s)] = 0;
  for (std::size_t round = 0; round < g.n(); ++round) {
    bool changed = false;
    for (std::size_t e = 0; e < g.m(); ++e) {
      const auto& r = g.edge(static_cast<EdgeId>(e));
      auto u = static_cast<std::size_t>(r.u);
      auto v = static_cast<std::size_t>(r.v);
      if (dist[u] + r.weight < dist[v]) dist[v] = dist[u] + r.weight, changed = true;
      if (dist[v] + r.weight < dist[u]) dist[u] = dist[v] + r.weight, changed = true;
    }
    if (!changed) break;
  }
  return dist;
}

/// Faces-subset test for homology, by brute force over subsets of the
/// non-boundary faces (tiny instances only).
inline bool bounds_faces_brute(const EmbeddedGraph& g, const std::vector<EdgeId>& edges) {
  std::vector<BitVec> rows;
  for (std::size_t f = 0; f < g.num_faces(); ++f) {
    if (g.num_boundary() > 0 && g.is_boundary(static_cast<FaceId>(f))) continue;
    rows.push_back(edge_vector(g, g.face_boundary_edges(static_cast<FaceId>(f))));
  }
  BitVec target = edge_vector(g, edges);
  for (std::size_t mask = 0; mask < (std::size_t{1} << rows.size()); ++mask) {
    BitVec acc(g.m());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if ((mask >> i) & 1U) acc ^= rows[i];
    }
    if (acc == target) return true;
  }
  return false;
}

}  // namespace testing
