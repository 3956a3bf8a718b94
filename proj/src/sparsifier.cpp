#include "surfbasis/sparsifier.hpp"

#include <algorithm>

#include "surfbasis/errors.hpp"
#include "surfbasis/shortest_paths.hpp"

namespace surfbasis {

EmbeddedGraph remove_edge(const EmbeddedGraph& g, EdgeId e) {
  auto shift = [e](DartId d) { return edge_of(d) > e ? d - 2 : d; };
  auto of_e = [e](DartId d) { return edge_of(d) == e; };
  EmbeddingDescription desc;
  desc.vertex_count = g.n();
  for (std::size_t k = 0; k < g.m(); ++k) {
    if (static_cast<EdgeId>(k) != e) desc.edges.push_back(g.edge(static_cast<EdgeId>(k)));
  }
  desc.rotation.resize(g.n());
  for (std::size_t v = 0; v < g.n(); ++v) {
    for (DartId d : g.rotation(static_cast<VertexId>(v))) {
      if (!of_e(d)) desc.rotation[v].push_back(shift(d));
    }
  }
  // A corner of each boundary face survives as the corner after the nearest
  // dart not belonging to e.
  for (FaceId f : g.boundary_faces()) {
    DartId c = g.prev_around(g.face_marker(f));
    for (int guard = 0; of_e(c) && guard < 3; ++guard) c = g.prev_around(c);
    if (of_e(c)) continue;  // nothing left at this vertex
    DartId after = g.next_around(c);
    while (of_e(after)) after = g.next_around(after);
    desc.boundary_darts.push_back(shift(after));
  }
  return EmbeddedGraph::build(std::move(desc));
}

namespace {

bool heavier(const EmbeddedGraph& g, EdgeId a, EdgeId b) {
  if (g.weight(a) != g.weight(b)) return g.weight(a) > g.weight(b);
  return a > b;
}

}  // namespace

SparsifyOutcome sparsify(const EmbeddedGraph& g) {
  SparsifyOutcome out;
  EmbeddedGraph cur = g;
  std::vector<EdgeId> map(g.m());
  for (std::size_t e = 0; e < g.m(); ++e) map[e] = static_cast<EdgeId>(e);

  auto original = [&](std::vector<EdgeId> edges) {
    for (auto& e : edges) e = map[static_cast<std::size_t>(e)];
    std::sort(edges.begin(), edges.end());
    return edges;
  };
  auto drop = [&](EdgeId e) {
    cur = remove_edge(cur, e);
    map.erase(map.begin() + e);
  };

  for (;;) {
    if (cur.m() == 0) {
      if (out.terminal == SparsifyTerminal::None) out.terminal = SparsifyTerminal::Point;
      break;
    }
    if (cur.m() == 1) {
      const EdgeRecord& rec = cur.edge(0);
      if (rec.u != rec.v) {
        out.terminal = SparsifyTerminal::SpherePath;
        break;
      }
      out.forced_mcb.push_back(original({0}));
      if (rec.sig) {
        out.forced_mhb.push_back(original({0}));
        out.terminal = SparsifyTerminal::ProjectiveLoop;
      } else {
        out.terminal = SparsifyTerminal::BareLoop;
      }
      drop(0);
      break;
    }
    FaceId target = kNone;
    for (std::size_t f = 0; f < cur.num_faces(); ++f) {
      std::size_t deg = cur.face(static_cast<FaceId>(f)).darts.size();
      if (!cur.is_boundary(static_cast<FaceId>(f)) && deg >= 1 && deg <= 2) {
        target = static_cast<FaceId>(f);
        break;
      }
    }
    if (target == kNone) break;
    const auto& walk = cur.face(target).darts;
    if (walk.size() == 1) {
      EdgeId loop = edge_of(walk[0]);
      out.forced_mcb.push_back(original({loop}));
      drop(loop);
      continue;
    }
    EdgeId a = edge_of(walk[0]), b = edge_of(walk[1]);
    if (a == b) throw InternalError("sparsify: degree-2 face on a single edge in a graph with several edges");
    EdgeId heavy = heavier(cur, a, b) ? a : b;
    const EdgeRecord& rec = cur.edge(heavy);
    std::vector<EdgeId> cycle;
    if (rec.u != rec.v) cycle = shortest_path_tree(cur, rec.u).path_to(rec.v);
    cycle.push_back(heavy);
    out.forced_mcb.push_back(original(cycle));
    drop(heavy);
  }
  out.residual = std::move(cur);
  out.edge_map = std::move(map);
  return out;
}

}  // namespace surfbasis
