#include "surfbasis/embedding.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <string>

#include "surfbasis/errors.hpp"

namespace surfbasis {

namespace {

std::string dart_name(const EmbeddingDescription& d, DartId dart) {
  const auto& e = d.edges[static_cast<std::size_t>(edge_of(dart))];
  return (e.label.empty() ? std::to_string(edge_of(dart)) : e.label) + (is_head(dart) ? "+" : "-");
}

}  // namespace

EmbeddedGraph EmbeddedGraph::build(EmbeddingDescription desc) { return build_impl(std::move(desc), true); }

EmbeddedGraph EmbeddedGraph::build_relaxed(EmbeddingDescription desc) {
  return build_impl(std::move(desc), false);
}

EmbeddedGraph EmbeddedGraph::build_impl(EmbeddingDescription desc, bool strict) {
  const std::size_t n = desc.vertex_count;
  const std::size_t m = desc.edges.size();
  if (n == 0) throw InputError("embedding has no vertices");
  if (desc.rotation.size() < n) desc.rotation.resize(n);
  if (desc.rotation.size() > n) throw InputError("rotation given for a vertex that does not exist");

  for (std::size_t e = 0; e < m; ++e) {
    const auto& rec = desc.edges[e];
    if (rec.u < 0 || rec.v < 0 || static_cast<std::size_t>(rec.u) >= n || static_cast<std::size_t>(rec.v) >= n) {
      throw InputError("edge " + rec.label + " has an endpoint out of range");
    }
    if (!(rec.weight >= 0)) throw InputError("edge " + rec.label + " has a negative weight");
  }

  EmbeddedGraph g;
  g.next_.assign(2 * m, kNone);
  g.prev_.assign(2 * m, kNone);
  for (std::size_t v = 0; v < n; ++v) {
    const auto& rot = desc.rotation[v];
    for (std::size_t i = 0; i < rot.size(); ++i) {
      DartId d = rot[i];
      if (d < 0 || static_cast<std::size_t>(d) >= 2 * m) {
        throw InputError("rotation of vertex " + std::to_string(v) + " names a dart that does not exist");
      }
      const auto& rec = desc.edges[static_cast<std::size_t>(edge_of(d))];
      VertexId at = is_head(d) ? rec.v : rec.u;
      if (static_cast<std::size_t>(at) != v) {
        throw InputError("dart " + dart_name(desc, d) + " listed in the rotation of vertex " + std::to_string(v) +
                         " but it sits at vertex " + std::to_string(at));
      }
      if (g.next_[static_cast<std::size_t>(d)] != kNone) {
        throw InputError("dart " + dart_name(desc, d) + " appears twice in the rotation system");
      }
      DartId nxt = rot[(i + 1) % rot.size()];
      g.next_[static_cast<std::size_t>(d)] = nxt;
    }
  }
  for (std::size_t d = 0; d < 2 * m; ++d) {
    if (g.next_[d] == kNone) {
      throw InputError("dart " + dart_name(desc, static_cast<DartId>(d)) + " is missing from the rotation system");
    }
  }
  for (std::size_t d = 0; d < 2 * m; ++d) g.prev_[static_cast<std::size_t>(g.next_[d])] = static_cast<DartId>(d);

  g.desc_ = std::move(desc);
  if (strict && !g.connected()) throw InputError("graph is not connected");
  g.trace_faces();

  // Boundary markers.
  std::vector<bool> is_bnd(g.faces_.size(), false);
  for (DartId d : g.desc_.boundary_darts) {
    if (d < 0 || static_cast<std::size_t>(d) >= 2 * m) throw InputError("boundary marker names a dart that does not exist");
    FaceId f = g.corner_face(g.prev_around(d));
    if (is_bnd[static_cast<std::size_t>(f)] && strict) {
      throw InputError("two boundary markers trace the same face (dart " + dart_name(g.desc_, d) + ")");
    }
    is_bnd[static_cast<std::size_t>(f)] = true;
  }
  for (std::size_t f = 0; f < g.faces_.size(); ++f) {
    g.faces_[f].boundary = is_bnd[f];
    if (is_bnd[f]) g.boundary_faces_.push_back(static_cast<FaceId>(f));
  }
  // Keep one marker per boundary face so the description round-trips.
  std::vector<DartId> markers;
  for (FaceId f : g.boundary_faces_) markers.push_back(g.face_marker(f));
  g.desc_.boundary_darts = std::move(markers);
  return g;
}

void EmbeddedGraph::trace_faces() {
  const std::size_t m = desc_.edges.size();
  corner_face_.assign(2 * m, kNone);
  edge_faces_.assign(m, {kNone, kNone});
  faces_.clear();
  if (m == 0) {
    // A lone vertex on the sphere: one face with an empty walk.
    faces_.push_back(FaceWalk{});
    return;
  }
  // A corner c is the wedge between dart c and next_around(c). The walk
  // state is (dart about to be followed, orientation bit z); crossing an
  // edge with signature 1 flips z, and z selects whether the walk turns to
  // the next or the previous dart at the vertex it reaches.
  for (std::size_t c0 = 0; c0 < 2 * m; ++c0) {
    if (corner_face_[c0] != kNone) continue;
    const FaceId f = static_cast<FaceId>(faces_.size());
    FaceWalk walk;
    const DartId start = next_[c0];
    DartId d = start;
    bool z = false;
    do {
      walk.darts.push_back(d);
      auto& sides = edge_faces_[static_cast<std::size_t>(edge_of(d))];
      (sides.first == kNone ? sides.first : sides.second) = f;
      DartId r = reverse(d);
      z ^= desc_.edges[static_cast<std::size_t>(edge_of(d))].sig;
      DartId corner = z ? prev_[static_cast<std::size_t>(r)] : r;
      if (corner_face_[static_cast<std::size_t>(corner)] != kNone) {
        throw InputError("rotation system and signatures do not describe a surface (corner traced twice)");
      }
      corner_face_[static_cast<std::size_t>(corner)] = f;
      d = z ? prev_[static_cast<std::size_t>(r)] : next_[static_cast<std::size_t>(r)];
    } while (d != start || z);
    faces_.push_back(std::move(walk));
  }
}

std::vector<EdgeId> EmbeddedGraph::face_boundary_edges(FaceId f) const {
  std::vector<EdgeId> edges;
  for (DartId d : face(f).darts) edges.push_back(edge_of(d));
  std::sort(edges.begin(), edges.end());
  std::vector<EdgeId> odd;
  for (std::size_t i = 0; i < edges.size();) {
    std::size_t j = i;
    while (j < edges.size() && edges[j] == edges[i]) ++j;
    if ((j - i) % 2 == 1) odd.push_back(edges[i]);
    i = j;
  }
  return odd;
}

DartId EmbeddedGraph::face_marker(FaceId f) const {
  for (std::size_t c = 0; c < corner_face_.size(); ++c) {
    if (corner_face_[c] == f) return next_[c];
  }
  throw InputError("face " + std::to_string(f) + " has no corner");
}

bool EmbeddedGraph::connected() const {
  std::size_t count = 0;
  component_labels(&count);
  return count <= 1;
}

std::vector<std::size_t> EmbeddedGraph::component_labels(std::size_t* count) const {
  const std::size_t n = desc_.vertex_count;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : desc_.edges) {
    std::size_t a = find(static_cast<std::size_t>(e.u));
    std::size_t b = find(static_cast<std::size_t>(e.v));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> label(n);
  std::vector<std::size_t> root_label(n, static_cast<std::size_t>(-1));
  std::size_t next = 0;
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t r = find(v);
    if (root_label[r] == static_cast<std::size_t>(-1)) root_label[r] = next++;
    label[v] = root_label[r];
  }
  if (count != nullptr) *count = next;
  return label;
}

bool is_orientable(const EmbeddedGraph& g, VertexId root) {
  const std::size_t n = g.n();
  std::vector<int> colour(n, -1);
  std::vector<std::vector<EdgeId>> incident(n);
  for (std::size_t e = 0; e < g.m(); ++e) {
    incident[static_cast<std::size_t>(g.edge(static_cast<EdgeId>(e)).u)].push_back(static_cast<EdgeId>(e));
    incident[static_cast<std::size_t>(g.edge(static_cast<EdgeId>(e)).v)].push_back(static_cast<EdgeId>(e));
  }
  std::queue<VertexId> queue;
  colour[static_cast<std::size_t>(root)] = 0;
  queue.push(root);
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop();
    for (EdgeId e : incident[static_cast<std::size_t>(x)]) {
      VertexId y = g.other_end(e, x);
      int want = colour[static_cast<std::size_t>(x)] ^ static_cast<int>(g.sig(e));
      if (colour[static_cast<std::size_t>(y)] == -1) {
        colour[static_cast<std::size_t>(y)] = want;
        queue.push(y);
      } else if (colour[static_cast<std::size_t>(y)] != want) {
        return false;
      }
    }
  }
  return true;
}

TopoStats topo_stats(const EmbeddedGraph& g) {
  if (!g.connected()) throw InputError("topo_stats requires a connected graph");
  TopoStats s;
  s.n = g.n();
  s.m = g.m();
  s.faces = g.num_faces();
  s.boundary = g.num_boundary();
  s.euler_char = static_cast<long>(s.n) - static_cast<long>(s.m) + static_cast<long>(s.faces);
  s.surface_euler_char = s.euler_char - static_cast<long>(s.boundary);
  s.orientable = is_orientable(g);
  long deficit = 2 - s.euler_char;
  if (deficit < 0 || (s.orientable && deficit % 2 != 0)) {
    throw InternalError("impossible Euler characteristic " + std::to_string(s.euler_char));
  }
  s.genus = s.orientable ? deficit / 2 : deficit;
  long extra = std::max<long>(static_cast<long>(s.boundary) - 1, 0);
  s.beta = (s.orientable ? 2 * s.genus : s.genus) + extra;
  return s;
}

DualGraph dual(const EmbeddedGraph& g) {
  DualGraph d;
  d.vertex_count = g.num_faces();
  d.boundary_vertex.assign(d.vertex_count, false);
  for (FaceId f : g.boundary_faces()) d.boundary_vertex[static_cast<std::size_t>(f)] = true;
  d.incident.resize(d.vertex_count);
  d.edge_ends.resize(g.m());
  for (std::size_t e = 0; e < g.m(); ++e) {
    auto ends = g.edge_faces(static_cast<EdgeId>(e));
    d.edge_ends[e] = ends;
    d.incident[static_cast<std::size_t>(ends.first)].push_back(static_cast<EdgeId>(e));
    d.incident[static_cast<std::size_t>(ends.second)].push_back(static_cast<EdgeId>(e));
  }
  return d;
}

EmbeddingDescription without_boundary(const EmbeddedGraph& g) {
  EmbeddingDescription desc = g.description();
  desc.boundary_darts.clear();
  return desc;
}

EmbeddedGraph puncture(const EmbeddedGraph& g, FaceId f) {
  if (g.is_boundary(f)) throw InputError("face " + std::to_string(f) + " is already a boundary");
  EmbeddingDescription desc = g.description();
  desc.boundary_darts.push_back(g.face_marker(f));
  return EmbeddedGraph::build_relaxed(std::move(desc));
}

EmbeddedGraph with_boundary(const EmbeddedGraph& g, const std::vector<FaceId>& boundary) {
  EmbeddingDescription desc = g.description();
  desc.boundary_darts.clear();
  for (FaceId f : boundary) desc.boundary_darts.push_back(g.face_marker(f));
  return EmbeddedGraph::build_relaxed(std::move(desc));
}

bool is_even_subgraph(const EmbeddedGraph& g, const std::vector<EdgeId>& edges) {
  std::vector<int> deg(g.n(), 0);
  for (EdgeId e : edges) {
    deg[static_cast<std::size_t>(g.edge(e).u)] ^= 1;
    deg[static_cast<std::size_t>(g.edge(e).v)] ^= 1;
  }
  return std::all_of(deg.begin(), deg.end(), [](int x) { return x == 0; });
}

std::vector<DartId> cycle_walk(const EmbeddedGraph& g, const std::vector<EdgeId>& edges) {
  if (edges.empty()) throw InputError("cycle_walk: empty edge set");
  std::map<VertexId, std::vector<DartId>> out;  // darts of cycle edges at each vertex
  std::set<EdgeId> seen;
  for (EdgeId e : edges) {
    if (!seen.insert(e).second) throw InputError("cycle_walk: repeated edge");
    out[g.edge(e).u].push_back(tail_dart(e));
    out[g.edge(e).v].push_back(head_dart(e));
  }
  for (const auto& [v, ds] : out) {
    if (ds.size() != 2) throw InputError("cycle_walk: vertex " + std::to_string(v) + " does not have degree 2");
  }
  std::vector<DartId> walk;
  DartId d = tail_dart(edges.front());
  const VertexId start = g.dart_vertex(d);
  do {
    walk.push_back(d);
    VertexId x = g.dart_target(d);
    const auto& ds = out[x];
    DartId arrived = reverse(d);
    d = ds[0] == arrived ? ds[1] : ds[0];
    if (walk.size() > edges.size()) throw InputError("cycle_walk: not a single cycle");
  } while (!(g.dart_vertex(d) == start && d == walk.front()));
  if (walk.size() != edges.size()) throw InputError("cycle_walk: edges form more than one cycle");
  return walk;
}

bool is_simple_cycle(const EmbeddedGraph& g, const std::vector<EdgeId>& edges) {
  try {
    cycle_walk(g, edges);
    return true;
  } catch (const InputError&) {
    return false;
  }
}

// ---------------------------------------------------------------------------
// Cutting

namespace {

struct WalkInfo {
  bool closed = false;
  std::vector<bool> on_walk_edge;
  std::vector<bool> on_walk_vertex;
};

WalkInfo validate_walk(const EmbeddedGraph& g, const std::vector<DartId>& walk) {
  if (walk.empty()) throw InputError("cut_along: empty path");
  WalkInfo info;
  info.on_walk_edge.assign(g.m(), false);
  info.on_walk_vertex.assign(g.n(), false);
  for (std::size_t i = 0; i < walk.size(); ++i) {
    DartId d = walk[i];
    if (d < 0 || static_cast<std::size_t>(d) >= 2 * g.m()) throw InputError("cut_along: path is not in the graph");
    if (info.on_walk_edge[static_cast<std::size_t>(edge_of(d))]) throw InputError("cut_along: path repeats an edge");
    info.on_walk_edge[static_cast<std::size_t>(edge_of(d))] = true;
    if (i + 1 < walk.size() && g.dart_target(d) != g.dart_vertex(walk[i + 1])) {
      throw InputError("cut_along: path is not in the graph (darts do not chain)");
    }
  }
  info.closed = g.dart_target(walk.back()) == g.dart_vertex(walk.front());
  std::vector<int> visits(g.n(), 0);
  for (DartId d : walk) ++visits[static_cast<std::size_t>(g.dart_vertex(d))];
  if (!info.closed) ++visits[static_cast<std::size_t>(g.dart_target(walk.back()))];
  for (std::size_t v = 0; v < g.n(); ++v) {
    if (visits[v] > 0) info.on_walk_vertex[v] = true;
    if (!info.closed && visits[v] > 1) throw InputError("cut_along: open path is not simple");
  }
  return info;
}

// One entry of a new vertex's rotation, remembering where it came from.
struct RotEntry {
  DartId new_dart;
  DartId old_dart;
  bool starts_gap;  // copy placed after a cut dart
  bool ends_gap;    // copy placed before a cut dart
};

}  // namespace

CutResult cut_along(const EmbeddedGraph& g, const std::vector<DartId>& walk) {
  const WalkInfo info = validate_walk(g, walk);
  const std::size_t n = g.n();
  const std::size_t m = g.m();

  // Passes through each vertex, as (incoming dart, outgoing dart) at that vertex.
  std::vector<std::vector<std::pair<DartId, DartId>>> passes(n);
  const std::size_t k = walk.size();
  const std::size_t pass_count = info.closed ? k : k - 1;
  for (std::size_t i = 0; i < pass_count; ++i) {
    DartId in = reverse(walk[i]);
    DartId out = walk[(i + 1) % k];
    passes[static_cast<std::size_t>(g.dart_vertex(out))].push_back({in, out});
  }

  // New edge ids: uncut edges keep their order; a cut edge becomes copies X and Y.
  // X lies in the gap after the tail dart, Y in the gap before it.
  std::vector<EdgeId> new_id(m, kNone), copy_x(m, kNone), copy_y(m, kNone);
  EmbeddingDescription out;
  std::vector<EdgeId> edge_origin;
  for (std::size_t e = 0; e < m; ++e) {
    const auto& rec = g.edge(static_cast<EdgeId>(e));
    if (!info.on_walk_edge[e]) {
      new_id[e] = static_cast<EdgeId>(out.edges.size());
      out.edges.push_back(rec);
      edge_origin.push_back(static_cast<EdgeId>(e));
    } else {
      copy_x[e] = static_cast<EdgeId>(out.edges.size());
      out.edges.push_back(rec);
      out.edges.back().label = rec.label + "_x";
      edge_origin.push_back(static_cast<EdgeId>(e));
      copy_y[e] = static_cast<EdgeId>(out.edges.size());
      out.edges.push_back(rec);
      out.edges.back().label = rec.label + "_y";
      edge_origin.push_back(static_cast<EdgeId>(e));
    }
  }
  // Copy dart lying in the gap before/after cut dart d at d's vertex.
  auto copy_dart = [&](DartId d, bool after) -> DartId {
    EdgeId e = edge_of(d);
    bool sig = g.sig(e);
    EdgeId c;
    if (!is_head(d)) {
      c = after ? copy_x[static_cast<std::size_t>(e)] : copy_y[static_cast<std::size_t>(e)];
      return tail_dart(c);
    }
    // At the head end the sides swap unless the signature flips them back.
    bool is_x = after ? sig : !sig;
    c = is_x ? copy_x[static_cast<std::size_t>(e)] : copy_y[static_cast<std::size_t>(e)];
    return head_dart(c);
  };
  auto carry = [&](DartId d) -> DartId {
    EdgeId e = new_id[static_cast<std::size_t>(edge_of(d))];
    return is_head(d) ? head_dart(e) : tail_dart(e);
  };

  std::vector<VertexId> vertex_origin;
  std::vector<std::vector<RotEntry>> rot_entries;
  for (std::size_t v = 0; v < n; ++v) {
    const auto& rot = g.rotation(static_cast<VertexId>(v));
    if (!info.on_walk_vertex[v]) {
      vertex_origin.push_back(static_cast<VertexId>(v));
      std::vector<RotEntry> entries;
      for (DartId d : rot) entries.push_back({carry(d), d, false, false});
      rot_entries.push_back(std::move(entries));
      continue;
    }
    // Cut darts at v in rotation order; gap s runs from cut dart s to s+1.
    std::vector<std::size_t> cut_pos;
    std::vector<int> cut_index(rot.size(), -1);
    for (std::size_t i = 0; i < rot.size(); ++i) {
      if (info.on_walk_edge[static_cast<std::size_t>(edge_of(rot[i]))]) {
        cut_index[i] = static_cast<int>(cut_pos.size());
        cut_pos.push_back(i);
      }
    }
    const std::size_t q = cut_pos.size();
    auto index_of = [&](DartId d) {
      for (std::size_t i = 0; i < rot.size(); ++i) {
        if (rot[i] == d) return cut_index[i];
      }
      throw InternalError("cut_along: pass dart not at its vertex");
    };
    std::vector<std::pair<int, int>> chords;
    for (auto [in, out_d] : passes[v]) {
      int a = index_of(in), b = index_of(out_d);
      chords.push_back({std::min(a, b), std::max(a, b)});
    }
    for (std::size_t i = 0; i < chords.size(); ++i) {
      for (std::size_t j = i + 1; j < chords.size(); ++j) {
        auto [a, b] = chords[i];
        auto [c, d] = chords[j];
        bool c_in = a < c && c < b;
        bool d_in = a < d && d < b;
        if (c_in != d_in) throw InputError("cut_along: path crosses itself at vertex " + std::to_string(v));
      }
    }
    // Gaps on the same side of every chord stay together.
    std::map<std::vector<bool>, std::size_t> region_of_key;
    std::vector<std::size_t> gap_region(q);
    std::vector<VertexId> region_vertex;
    for (std::size_t s = 0; s < q; ++s) {
      std::vector<bool> key;
      for (auto [a, b] : chords) key.push_back(static_cast<int>(s) >= a && static_cast<int>(s) < b);
      auto [it, inserted] = region_of_key.emplace(key, region_vertex.size());
      if (inserted) {
        region_vertex.push_back(static_cast<VertexId>(rot_entries.size()));
        vertex_origin.push_back(static_cast<VertexId>(v));
        rot_entries.emplace_back();
      }
      gap_region[s] = it->second;
    }
    if (region_vertex.size() != chords.size() + 1) {
      throw InternalError("cut_along: unexpected number of vertex copies");
    }
    // Walk the rotation from the first cut dart, routing entries to regions.
    const std::size_t first = cut_pos.front();
    std::size_t gap = 0;
    for (std::size_t step = 0; step < rot.size(); ++step) {
      std::size_t i = (first + step) % rot.size();
      DartId d = rot[i];
      if (cut_index[i] >= 0) {
        gap = static_cast<std::size_t>(cut_index[i]);
        std::size_t before = (gap + q - 1) % q;
        rot_entries[static_cast<std::size_t>(region_vertex[gap_region[before]])].push_back(
            {copy_dart(d, false), d, false, true});
        rot_entries[static_cast<std::size_t>(region_vertex[gap_region[gap]])].push_back(
            {copy_dart(d, true), d, true, false});
      } else {
        rot_entries[static_cast<std::size_t>(region_vertex[gap_region[gap]])].push_back({carry(d), d, false, false});
      }
    }
  }

  out.vertex_count = rot_entries.size();
  // Endpoints of new edges come from where their darts landed.
  std::vector<DartId> old_corner_of_new(2 * out.edges.size(), kNone);
  std::vector<DartId> new_corner_of_old(2 * m, kNone);
  std::vector<DartId> fresh_corners;
  out.rotation.resize(rot_entries.size());
  for (std::size_t nv = 0; nv < rot_entries.size(); ++nv) {
    const auto& entries = rot_entries[nv];
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const RotEntry& a = entries[i];
      const RotEntry& b = entries[(i + 1) % entries.size()];
      out.rotation[nv].push_back(a.new_dart);
      auto& rec = out.edges[static_cast<std::size_t>(edge_of(a.new_dart))];
      (is_head(a.new_dart) ? rec.v : rec.u) = static_cast<VertexId>(nv);
      if (a.ends_gap && b.starts_gap) {
        fresh_corners.push_back(a.new_dart);
      } else {
        old_corner_of_new[static_cast<std::size_t>(a.new_dart)] = a.old_dart;
        new_corner_of_old[static_cast<std::size_t>(a.old_dart)] = a.new_dart;
      }
    }
  }

  // Old boundaries stay boundaries; every fresh corner lies on a new boundary.
  // Markers are corner ids here and are turned into darts after building.
  std::vector<DartId> marker_corners;
  for (FaceId f : g.boundary_faces()) {
    DartId c = g.prev_around(g.face_marker(f));
    marker_corners.push_back(new_corner_of_old[static_cast<std::size_t>(c)]);
  }
  marker_corners.insert(marker_corners.end(), fresh_corners.begin(), fresh_corners.end());

  EmbeddedGraph provisional = EmbeddedGraph::build_relaxed(out);
  EmbeddingDescription marked = provisional.description();
  for (DartId c : marker_corners) marked.boundary_darts.push_back(provisional.next_around(c));

  CutResult result;
  result.graph = EmbeddedGraph::build_relaxed(std::move(marked));
  result.vertex_origin = std::move(vertex_origin);
  result.edge_origin = std::move(edge_origin);
  result.face_origin.assign(result.graph.num_faces(), kNone);
  for (std::size_t c = 0; c < old_corner_of_new.size(); ++c) {
    if (old_corner_of_new[c] == kNone) continue;
    FaceId nf = result.graph.corner_face(static_cast<DartId>(c));
    result.face_origin[static_cast<std::size_t>(nf)] = g.corner_face(old_corner_of_new[c]);
  }
  std::set<FaceId> fresh_faces;
  for (DartId c : fresh_corners) fresh_faces.insert(result.graph.corner_face(c));
  for (FaceId f : fresh_faces) {
    if (result.face_origin[static_cast<std::size_t>(f)] != kNone) {
      throw InternalError("cut_along: a new boundary face shares a corner with an old face");
    }
    result.new_boundary_faces.push_back(f);
  }
  result.graph.component_labels(&result.component_count);
  return result;
}

}  // namespace surfbasis
