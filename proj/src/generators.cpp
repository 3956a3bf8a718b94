#include "surfbasis/generators.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>

#include "surfbasis/errors.hpp"

namespace surfbasis {

namespace {

struct Corner {
  VertexId vertex;
  DartId in;   // end the face arrives through
  DartId out;  // end the face leaves through
};

VertexId end_vertex(const std::vector<EdgeRecord>& edges, DartId d) {
  const auto& e = edges[static_cast<std::size_t>(edge_of(d))];
  return is_head(d) ? e.v : e.u;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::uint64_t below(std::uint64_t k) { return gen_() % k; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace

EmbeddingDescription glue_polygons(std::size_t vertex_count, std::vector<EdgeRecord> edges,
                                   const std::vector<std::vector<DartId>>& faces,
                                   const std::vector<std::size_t>& boundary) {
  const std::size_t m = edges.size();
  std::vector<Corner> corners;
  std::vector<std::vector<std::size_t>> face_corners(faces.size());
  // Each dart end is touched by exactly two corners.
  std::vector<std::vector<std::size_t>> touching(2 * m);
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const auto& walk = faces[f];
    if (walk.empty()) throw InputError("glue_polygons: empty face");
    for (std::size_t i = 0; i < walk.size(); ++i) {
      DartId in = reverse(walk[i]);
      DartId out = walk[(i + 1) % walk.size()];
      VertexId v = end_vertex(edges, in);
      if (end_vertex(edges, out) != v) throw InputError("glue_polygons: face " + std::to_string(f) + " is not closed");
      face_corners[f].push_back(corners.size());
      touching[static_cast<std::size_t>(in)].push_back(corners.size());
      touching[static_cast<std::size_t>(out)].push_back(corners.size());
      corners.push_back({v, in, out});
    }
  }
  for (std::size_t d = 0; d < 2 * m; ++d) {
    if (touching[d].size() != 2) throw InputError("glue_polygons: an edge is not used by exactly two face sides");
  }

  // Follow the corners around each vertex: consecutive ends give the
  // rotation, and whether a face turns forward or backward through a corner
  // gives its turn bit.
  EmbeddingDescription desc;
  desc.vertex_count = vertex_count;
  desc.rotation.assign(vertex_count, {});
  std::vector<bool> placed(2 * m, false);
  std::vector<int> turn(corners.size(), -1);
  std::vector<DartId> corner_id(corners.size(), kNone);
  for (std::size_t x0 = 0; x0 < 2 * m; ++x0) {
    if (placed[x0]) continue;
    auto& rot = desc.rotation[static_cast<std::size_t>(end_vertex(edges, static_cast<DartId>(x0)))];
    if (!rot.empty()) throw InputError("glue_polygons: corners around a vertex do not form a single cycle");
    DartId x = static_cast<DartId>(x0);
    std::size_t slot = 0;
    while (!placed[static_cast<std::size_t>(x)]) {
      placed[static_cast<std::size_t>(x)] = true;
      rot.push_back(x);
      std::size_t c = touching[static_cast<std::size_t>(x)][slot];
      const Corner& k = corners[c];
      turn[c] = k.in == x ? 0 : 1;
      corner_id[c] = x;
      DartId y = k.in == x ? k.out : k.in;
      // Leave y through its other corner.
      const auto& ty = touching[static_cast<std::size_t>(y)];
      slot = ty[0] == c ? 1 : 0;
      x = y;
    }
  }
  std::vector<int> sig(m, -1);
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const auto& fc = face_corners[f];
    for (std::size_t i = 0; i < fc.size(); ++i) {
      std::size_t next = fc[(i + 1) % fc.size()];
      EdgeId e = edge_of(faces[f][(i + 1) % fc.size()]);
      int s = turn[fc[i]] ^ turn[next];
      if (sig[static_cast<std::size_t>(e)] != -1 && sig[static_cast<std::size_t>(e)] != s) {
        throw InputError("glue_polygons: inconsistent gluing along edge " + edges[static_cast<std::size_t>(e)].label);
      }
      sig[static_cast<std::size_t>(e)] = s;
    }
  }

  // Switch vertices (reverse the rotation, flip the incident signatures) so
  // that a BFS tree carries signature 0; orientable gluings end up all 0.
  std::vector<int> flip(vertex_count, -1);
  std::vector<std::vector<EdgeId>> incident(vertex_count);
  for (std::size_t e = 0; e < m; ++e) {
    incident[static_cast<std::size_t>(edges[e].u)].push_back(static_cast<EdgeId>(e));
    incident[static_cast<std::size_t>(edges[e].v)].push_back(static_cast<EdgeId>(e));
  }
  for (std::size_t s = 0; s < vertex_count; ++s) {
    if (flip[s] != -1) continue;
    flip[s] = 0;
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (EdgeId e : incident[x]) {
        const auto& rec = edges[static_cast<std::size_t>(e)];
        auto y = static_cast<std::size_t>(rec.u == static_cast<VertexId>(x) ? rec.v : rec.u);
        if (flip[y] != -1) continue;
        flip[y] = flip[x] ^ sig[static_cast<std::size_t>(e)];
        stack.push_back(y);
      }
    }
  }
  for (std::size_t e = 0; e < m; ++e) {
    int s = sig[e] ^ flip[static_cast<std::size_t>(edges[e].u)] ^ flip[static_cast<std::size_t>(edges[e].v)];
    edges[e].sig = s == 1;
  }
  desc.edges = std::move(edges);

  std::vector<DartId> next(2 * m);
  for (const auto& rot : desc.rotation) {
    for (std::size_t i = 0; i < rot.size(); ++i) next[static_cast<std::size_t>(rot[i])] = rot[(i + 1) % rot.size()];
  }
  for (std::size_t f : boundary) {
    if (f >= faces.size()) throw InputError("glue_polygons: boundary face out of range");
    DartId c = corner_id[face_corners[f][0]];
    // Reversing a rotation turns the wedge after c into the wedge after next(c).
    desc.boundary_darts.push_back(flip[static_cast<std::size_t>(corners[face_corners[f][0]].vertex)] ? c
                                                                                                      : next[static_cast<std::size_t>(c)]);
  }
  for (std::size_t v = 0; v < vertex_count; ++v) {
    if (flip[v]) std::reverse(desc.rotation[v].begin(), desc.rotation[v].end());
  }

  EmbeddedGraph check = EmbeddedGraph::build(desc);
  if (check.num_faces() != faces.size()) throw InternalError("glue_polygons: traced faces differ from the polygons");
  return desc;
}

EmbeddingDescription glue_vertex_polygons(std::size_t vertex_count, const std::vector<std::vector<VertexId>>& faces,
                                          const std::vector<std::size_t>& boundary) {
  std::vector<EdgeRecord> edges;
  std::map<std::pair<VertexId, VertexId>, EdgeId> by_ends;
  std::vector<std::vector<DartId>> walks;
  for (const auto& cyc : faces) {
    std::vector<DartId> walk;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      VertexId a = cyc[i], b = cyc[(i + 1) % cyc.size()];
      auto key = std::minmax(a, b);
      auto it = by_ends.find(key);
      if (it == by_ends.end()) {
        EdgeId id = static_cast<EdgeId>(edges.size());
        edges.push_back({a, b, 1, false, "e" + std::to_string(id)});
        it = by_ends.emplace(key, id).first;
      }
      walk.push_back(edges[static_cast<std::size_t>(it->second)].u == a ? tail_dart(it->second)
                                                                          : head_dart(it->second));
    }
    walks.push_back(std::move(walk));
  }
  return glue_polygons(vertex_count, std::move(edges), walks, boundary);
}

EmbeddingDescription theta_instance() {
  EmbeddingDescription d;
  d.vertex_count = 2;
  d.edges = {{0, 1, 1, false, "a"}, {0, 1, 2, false, "b"}, {0, 1, 3, false, "c"}};
  d.rotation = {{tail_dart(0), tail_dart(1), tail_dart(2)}, {head_dart(2), head_dart(1), head_dart(0)}};
  d.boundary_darts = {tail_dart(0)};
  return d;
}

EmbeddingDescription torus1_instance() {
  EmbeddingDescription d;
  d.vertex_count = 1;
  d.edges = {{0, 0, 1, false, "x"}, {0, 0, 1, false, "y"}};
  d.rotation = {{tail_dart(0), tail_dart(1), head_dart(0), head_dart(1)}};
  return d;
}

EmbeddingDescription k4_sphere_instance() {
  return glue_vertex_polygons(4, {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}}, {3});
}

EmbeddingDescription projective_loop_instance() {
  EmbeddingDescription d;
  d.vertex_count = 1;
  d.edges = {{0, 0, 1, true, "p"}};
  d.rotation = {{tail_dart(0), head_dart(0)}};
  return d;
}

namespace {

// Grid edges: right (i,j)->(i,j+1) and down (i,j)->(i+1,j) with ids 2k and 2k+1.
EmbeddingDescription grid_with_wrap(std::size_t n, bool flip) {
  if (n == 0) throw InputError("grid size must be positive");
  const auto N = static_cast<VertexId>(n);
  auto id = [N](VertexId i, VertexId j) { return ((i % N + N) % N) * N + ((j % N + N) % N); };
  auto right = [&](VertexId i, VertexId j) { return static_cast<EdgeId>(2 * id(i, j)); };
  auto down = [&](VertexId i, VertexId j) { return static_cast<EdgeId>(2 * id(i, j) + 1); };
  std::vector<EdgeRecord> edges;
  for (VertexId i = 0; i < N; ++i) {
    for (VertexId j = 0; j < N; ++j) {
      std::string tag = std::to_string(i) + "_" + std::to_string(j);
      edges.push_back({id(i, j), id(i, j + 1), 1, false, "r" + tag});
      VertexId below = (flip && i == N - 1) ? id(0, N - j) : id(i + 1, j);
      edges.push_back({id(i, j), below, 1, false, "d" + tag});
    }
  }
  std::vector<std::vector<DartId>> faces;
  for (VertexId i = 0; i < N; ++i) {
    for (VertexId j = 0; j < N; ++j) {
      DartId bottom = (flip && i == N - 1) ? tail_dart(right(0, N - j - 1)) : head_dart(right(i + 1, j));
      faces.push_back({tail_dart(right(i, j)), tail_dart(down(i, j + 1)), bottom, head_dart(down(i, j))});
    }
  }
  return glue_polygons(n * n, std::move(edges), faces);
}

}  // namespace

EmbeddingDescription torus_grid(std::size_t n) { return grid_with_wrap(n, false); }

EmbeddingDescription klein_grid(std::size_t n) { return grid_with_wrap(n, true); }

EmbeddingDescription projective_grid(std::size_t n) {
  if (n < 3) throw InputError("projective grid needs N >= 3");
  const auto N = static_cast<VertexId>(n);
  std::map<std::pair<VertexId, VertexId>, VertexId> ids;
  auto canon = [N](VertexId i, VertexId j) {
    bool rim = i == 0 || j == 0 || i == N || j == N;
    std::pair<VertexId, VertexId> p{i, j}, q{N - i, N - j};
    return rim ? std::min(p, q) : p;
  };
  for (VertexId i = 0; i <= N; ++i) {
    for (VertexId j = 0; j <= N; ++j) {
      auto key = canon(i, j);
      if (ids.count(key) == 0) ids.emplace(key, static_cast<VertexId>(ids.size()));
    }
  }
  auto v = [&](VertexId i, VertexId j) { return ids.at(canon(i, j)); };
  std::vector<std::vector<VertexId>> faces;
  for (VertexId i = 0; i < N; ++i) {
    for (VertexId j = 0; j < N; ++j) faces.push_back({v(i, j), v(i, j + 1), v(i + 1, j + 1), v(i + 1, j)});
  }
  return glue_vertex_polygons(ids.size(), faces);
}

EmbeddingDescription double_torus_grid(std::size_t n) {
  if (n < 3) throw InputError("double torus grid needs N >= 3");
  const auto N = static_cast<VertexId>(n);
  auto wrap = [N](VertexId x) { return ((x % N) + N) % N; };
  auto a = [&](VertexId i, VertexId j) { return wrap(i) * N + wrap(j); };
  // The removed square's corners of the second copy meet the first copy's in reverse order.
  std::map<std::pair<VertexId, VertexId>, VertexId> shared = {
      {{0, 0}, a(0, 0)}, {{0, 1}, a(1, 0)}, {{1, 1}, a(1, 1)}, {{1, 0}, a(0, 1)}};
  std::vector<VertexId> b_id(n * n);
  VertexId next = N * N;
  for (VertexId i = 0; i < N; ++i) {
    for (VertexId j = 0; j < N; ++j) {
      auto it = shared.find({i, j});
      b_id[static_cast<std::size_t>(i * N + j)] = it != shared.end() ? it->second : next++;
    }
  }
  auto b = [&](VertexId i, VertexId j) { return b_id[static_cast<std::size_t>(wrap(i) * N + wrap(j))]; };
  std::vector<std::vector<VertexId>> faces;
  for (VertexId i = 0; i < N; ++i) {
    for (VertexId j = 0; j < N; ++j) {
      if (i == 0 && j == 0) continue;
      faces.push_back({a(i, j), a(i, j + 1), a(i + 1, j + 1), a(i + 1, j)});
    }
  }
  for (VertexId i = 0; i < N; ++i) {
    for (VertexId j = 0; j < N; ++j) {
      if (i == 0 && j == 0) continue;
      faces.push_back({b(i, j), b(i, j + 1), b(i + 1, j + 1), b(i + 1, j)});
    }
  }
  return glue_vertex_polygons(static_cast<std::size_t>(next), faces);
}

EmbeddingDescription random_rotation(std::size_t n, std::size_t m, std::uint64_t seed, bool orientable) {
  if (n == 0) throw InputError("random_rotation: need at least one vertex");
  if (m + 1 < n) throw InputError("random_rotation: m must be at least n - 1");
  Rng rng(seed);
  EmbeddingDescription d;
  d.vertex_count = n;
  for (std::size_t k = 0; k < m; ++k) {
    VertexId u, v;
    if (k + 1 < n) {
      v = static_cast<VertexId>(k + 1);
      u = static_cast<VertexId>(rng.below(k + 1));
    } else {
      u = static_cast<VertexId>(rng.below(n));
      v = static_cast<VertexId>(rng.below(n));
    }
    EdgeRecord rec{u, v, static_cast<Weight>(1 + rng.below(9)), false, "e" + std::to_string(k)};
    if (!orientable) rec.sig = rng.below(2) == 1;
    d.edges.push_back(rec);
  }
  d.rotation.assign(n, {});
  for (std::size_t e = 0; e < m; ++e) {
    d.rotation[static_cast<std::size_t>(d.edges[e].u)].push_back(tail_dart(static_cast<EdgeId>(e)));
    d.rotation[static_cast<std::size_t>(d.edges[e].v)].push_back(head_dart(static_cast<EdgeId>(e)));
  }
  for (auto& rot : d.rotation) {
    for (std::size_t i = rot.size(); i > 1; --i) std::swap(rot[i - 1], rot[rng.below(i)]);
  }
  return d;
}

EmbeddingDescription inject_degenerate_faces(EmbeddingDescription desc, std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  auto insert_after = [](std::vector<DartId>& rot, DartId anchor, DartId d) {
    rot.insert(std::find(rot.begin(), rot.end(), anchor) + 1, d);
  };
  auto insert_before = [](std::vector<DartId>& rot, DartId anchor, DartId d) {
    rot.insert(std::find(rot.begin(), rot.end(), anchor), d);
  };
  for (std::size_t k = 0; k < count; ++k) {
    const auto id = static_cast<EdgeId>(desc.edges.size());
    const auto weight = static_cast<Weight>(1 + rng.below(9));
    std::string label = "j" + std::to_string(id);
    if (desc.edges.empty() || rng.below(2) == 0) {
      // A loop whose two ends are adjacent bounds a face of degree 1.
      auto v = static_cast<VertexId>(rng.below(desc.vertex_count));
      auto& rot = desc.rotation[static_cast<std::size_t>(v)];
      std::size_t pos = rng.below(rot.size() + 1);
      rot.insert(rot.begin() + static_cast<long>(pos), {tail_dart(id), head_dart(id)});
      desc.edges.push_back({v, v, weight, false, label});
    } else {
      // A parallel copy hugging an existing edge closes a face of degree 2.
      auto e = static_cast<EdgeId>(rng.below(desc.edges.size()));
      EdgeRecord rec = desc.edges[static_cast<std::size_t>(e)];
      rec.weight = weight;
      rec.label = label;
      desc.edges.push_back(rec);
      insert_after(desc.rotation[static_cast<std::size_t>(rec.u)], tail_dart(e), tail_dart(id));
      auto& rot_v = desc.rotation[static_cast<std::size_t>(rec.v)];
      if (rec.sig) {
        insert_after(rot_v, head_dart(e), head_dart(id));
      } else {
        insert_before(rot_v, head_dart(e), head_dart(id));
      }
    }
  }
  return desc;
}

EmbeddingDescription randomize_weights(EmbeddingDescription desc, std::uint64_t seed, int lo, int hi) {
  if (hi < lo) throw InputError("randomize_weights: empty range");
  Rng rng(seed);
  for (auto& e : desc.edges) e.weight = static_cast<Weight>(lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(hi - lo + 1))));
  return desc;
}

EmbeddingDescription with_punctured_last_face(const EmbeddingDescription& desc) {
  EmbeddedGraph g = EmbeddedGraph::build(desc);
  auto last = static_cast<FaceId>(g.num_faces() - 1);
  if (g.is_boundary(last)) return g.description();
  return puncture(g, last).description();
}

}  // namespace surfbasis
