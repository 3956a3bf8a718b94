#include "surfbasis/mhb.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <map>
#include <queue>
#include <set>

#include "surfbasis/errors.hpp"
#include "surfbasis/parallel.hpp"
#include "surfbasis/shortest_paths.hpp"
#include "surfbasis/sparsifier.hpp"

namespace surfbasis {

DoubleCover::DoubleCover(const EmbeddedGraph& g, const SignatureSystem& sigs, const BitVec& support)
    : n_(g.n()), m_(g.m()), parity_(g.m()) {
  if (support.size() != sigs.beta()) throw InputError("DoubleCover: support vector has the wrong length");
  for (std::size_t e = 0; e < m_; ++e) parity_[e] = dot(support, sigs.edge_homology(static_cast<EdgeId>(e)));
  EmbeddingDescription desc;
  desc.vertex_count = 2 * n_;
  desc.edges.resize(2 * m_);
  for (int z = 0; z < 2; ++z) {
    for (std::size_t e = 0; e < m_; ++e) {
      EdgeRecord rec = g.edge(static_cast<EdgeId>(e));
      rec.u = lift_vertex(rec.u, z);
      rec.v = lift_vertex(rec.v, z ^ (parity_[e] ? 1 : 0));
      if (!rec.label.empty()) rec.label += z == 0 ? "_0" : "_1";
      desc.edges[static_cast<std::size_t>(lift_edge(static_cast<EdgeId>(e), z))] = rec;
    }
  }
  // A dart at (v,z): the tail of (e,z), or the head of (e, z xor parity).
  auto lift_dart = [&](DartId d, int z) {
    EdgeId e = edge_of(d);
    if (!is_head(d)) return tail_dart(lift_edge(e, z));
    return head_dart(lift_edge(e, z ^ (parity_[static_cast<std::size_t>(e)] ? 1 : 0)));
  };
  desc.rotation.resize(2 * n_);
  for (int z = 0; z < 2; ++z) {
    for (std::size_t v = 0; v < n_; ++v) {
      auto& rot = desc.rotation[static_cast<std::size_t>(lift_vertex(static_cast<VertexId>(v), z))];
      for (DartId d : g.rotation(static_cast<VertexId>(v))) rot.push_back(lift_dart(d, z));
    }
  }
  for (FaceId f : g.boundary_faces()) {
    DartId marker = g.face_marker(f);
    desc.boundary_darts.push_back(lift_dart(marker, 0));
    desc.boundary_darts.push_back(lift_dart(marker, 1));
  }
  cover_ = EmbeddedGraph::build_relaxed(std::move(desc));
}

std::vector<DartId> DoubleCover::lift_walk(const std::vector<DartId>& walk, int sheet) const {
  std::vector<DartId> out;
  int z = sheet;
  for (DartId d : walk) {
    EdgeId e = edge_of(d);
    int p = parity_[static_cast<std::size_t>(e)] ? 1 : 0;
    if (!is_head(d)) {
      out.push_back(tail_dart(lift_edge(e, z)));
    } else {
      out.push_back(head_dart(lift_edge(e, z ^ p)));
    }
    z ^= p;
  }
  return out;
}

ShortestPathSystem shortest_path_system(const EmbeddedGraph& g, VertexId root) {
  ShortestPathSystem sys;
  sys.root = root;
  ShortestPathTree spt = plain_shortest_path_tree(g, root);
  std::vector<EdgeId> tree;
  for (std::size_t v = 0; v < g.n(); ++v) {
    if (spt.parent_edge[v] != kNone) tree.push_back(spt.parent_edge[v]);
  }
  TreeCoforest dec = tree_coforest(g, root, tree);
  std::set<VertexId> ends;
  for (EdgeId e : dec.leftover) {
    ends.insert(g.edge(e).u);
    ends.insert(g.edge(e).v);
  }
  if (g.num_boundary() >= 2) {
    for (FaceId f : g.boundary_faces()) ends.insert(g.dart_vertex(g.face(f).darts.front()));
  }
  for (VertexId v : ends) {
    sys.paths.push_back(spt.vertices_to(v));
    sys.path_edges.push_back(spt.path_to(v));
  }
  return sys;
}

std::vector<std::vector<EdgeId>> decompose_even_subgraph(const EmbeddedGraph& g, const std::vector<EdgeId>& edges) {
  std::map<VertexId, std::vector<EdgeId>> remaining;
  for (EdgeId e : edges) {
    remaining[g.edge(e).u].push_back(e);
    if (g.edge(e).v != g.edge(e).u) remaining[g.edge(e).v].push_back(e);
  }
  std::vector<bool> used(g.m(), false);
  auto take = [&](VertexId x) -> EdgeId {
    auto& list = remaining[x];
    while (!list.empty() && used[static_cast<std::size_t>(list.back())]) list.pop_back();
    if (list.empty()) return kNone;
    EdgeId e = list.back();
    list.pop_back();
    used[static_cast<std::size_t>(e)] = true;
    return e;
  };
  std::vector<std::vector<EdgeId>> cycles;
  for (auto& [start, unused] : remaining) {
    (void)unused;
    // Walk until a vertex repeats, then split off the closed part.
    std::vector<VertexId> stack_v{start};
    std::vector<EdgeId> stack_e;
    std::map<VertexId, std::size_t> pos{{start, 0}};
    for (;;) {
      VertexId x = stack_v.back();
      EdgeId e = take(x);
      if (e == kNone) {
        if (stack_v.size() != 1) throw InputError("decompose_even_subgraph: edge set is not even");
        break;
      }
      VertexId y = g.other_end(e, x);
      auto it = pos.find(y);
      if (it == pos.end()) {
        pos[y] = stack_v.size();
        stack_v.push_back(y);
        stack_e.push_back(e);
        continue;
      }
      std::vector<EdgeId> cyc(stack_e.begin() + static_cast<long>(it->second), stack_e.end());
      cyc.push_back(e);
      std::sort(cyc.begin(), cyc.end());
      cycles.push_back(std::move(cyc));
      for (std::size_t k = it->second + 1; k < stack_v.size(); ++k) pos.erase(stack_v[k]);
      stack_v.resize(it->second + 1);
      stack_e.resize(it->second);
    }
  }
  return cycles;
}

namespace {

struct Candidate {
  Weight weight = std::numeric_limits<Weight>::infinity();
  std::vector<EdgeId> edges;
  bool operator<(const Candidate& o) const {
    if (weight != o.weight) return weight < o.weight;
    return edges < o.edges;
  }
};

Candidate shortest_odd_cycle_through(const EmbeddedGraph& g, const DoubleCover& cover, VertexId s,
                                     const std::vector<VertexId>& sigma, const std::vector<EdgeId>& sigma_edges) {
  const EmbeddedGraph& h = cover.graph();
  const VertexId source = cover.lift_vertex(s, 0), target = cover.lift_vertex(s, 1);
  std::vector<Weight> dist(h.n(), std::numeric_limits<Weight>::infinity());
  std::vector<EdgeId> parent_edge(h.n(), kNone);
  std::vector<VertexId> parent(h.n(), kNone);
  using Item = std::pair<Weight, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[static_cast<std::size_t>(source)] = 0;
  heap.push({0, source});
  // Subpaths of a shortest path are shortest, so the lift of sigma through
  // (s,0) starts with exact distances.
  auto at = std::find(sigma.begin(), sigma.end(), s);
  if (at != sigma.end()) {
    std::size_t i = static_cast<std::size_t>(at - sigma.begin());
    for (int dir : {+1, -1}) {
      VertexId prev = source;
      Weight acc = 0;
      int z = 0;
      for (std::size_t j = i; dir > 0 ? j + 1 < sigma.size() : j > 0; j = dir > 0 ? j + 1 : j - 1) {
        EdgeId e = dir > 0 ? sigma_edges[j] : sigma_edges[j - 1];
        VertexId next = dir > 0 ? sigma[j + 1] : sigma[j - 1];
        int from_z = z;
        z ^= cover.parity(e) ? 1 : 0;
        acc += g.weight(e);
        VertexId lifted = cover.lift_vertex(next, z);
        if (acc < dist[static_cast<std::size_t>(lifted)]) {
          dist[static_cast<std::size_t>(lifted)] = acc;
          parent[static_cast<std::size_t>(lifted)] = prev;
          // Leaving from u uses (e, from_z); leaving from v uses the copy whose head is at (v, from_z).
          EdgeId lifted_edge = g.edge(e).u == sigma[j] ? cover.lift_edge(e, from_z) : cover.lift_edge(e, z);
          parent_edge[static_cast<std::size_t>(lifted)] = lifted_edge;
          heap.push({acc, lifted});
        }
        prev = lifted;
      }
    }
  }
  std::vector<bool> done(h.n(), false);
  while (!heap.empty()) {
    auto [w, x] = heap.top();
    heap.pop();
    if (done[static_cast<std::size_t>(x)] || w != dist[static_cast<std::size_t>(x)]) continue;
    done[static_cast<std::size_t>(x)] = true;
    if (x == target) break;
    for (DartId d : h.rotation(x)) {
      VertexId y = h.dart_target(d);
      Weight nd = w + h.weight(edge_of(d));
      if (nd < dist[static_cast<std::size_t>(y)]) {
        dist[static_cast<std::size_t>(y)] = nd;
        parent[static_cast<std::size_t>(y)] = x;
        parent_edge[static_cast<std::size_t>(y)] = edge_of(d);
        heap.push({nd, y});
      }
    }
  }
  Candidate best;
  if (!done[static_cast<std::size_t>(target)]) return best;
  // Project the path and keep the cheapest odd cycle of the closed walk.
  std::vector<bool> odd_use(g.m(), false);
  for (VertexId x = target; x != source; x = parent[static_cast<std::size_t>(x)]) {
    EdgeId e = cover.project_edge(parent_edge[static_cast<std::size_t>(x)]);
    odd_use[static_cast<std::size_t>(e)] = !odd_use[static_cast<std::size_t>(e)];
  }
  std::vector<EdgeId> closed;
  for (std::size_t e = 0; e < g.m(); ++e) {
    if (odd_use[e]) closed.push_back(static_cast<EdgeId>(e));
  }
  for (auto& cyc : decompose_even_subgraph(g, closed)) {
    bool odd = false;
    for (EdgeId e : cyc) odd ^= cover.parity(e);
    if (!odd) continue;
    Candidate c{cycle_weight(g, cyc), std::move(cyc)};
    if (c < best) best = std::move(c);
  }
  return best;
}

}  // namespace

std::vector<EdgeId> select_min_homology_cycle(const EmbeddedGraph& g, const SignatureSystem& sigs,
                                              const ShortestPathSystem& system, const BitVec& support,
                                              unsigned threads) {
  if (support.none()) throw InputError("select_min_homology_cycle: support vector is zero");
  DoubleCover cover(g, sigs, support);
  // Each vertex of the path system once, with a path that contains it.
  std::map<VertexId, std::size_t> owner;
  for (std::size_t p = 0; p < system.paths.size(); ++p) {
    for (VertexId v : system.paths[p]) owner.emplace(v, p);
  }
  std::vector<std::pair<VertexId, std::size_t>> sources(owner.begin(), owner.end());
  std::vector<Candidate> found(sources.size());
  parallel_for(sources.size(), threads, [&](std::size_t i) {
    auto [s, p] = sources[i];
    found[i] = shortest_odd_cycle_through(g, cover, s, system.paths[p], system.path_edges[p]);
  });
  Candidate best;
  for (auto& c : found) {
    if (c < best) best = std::move(c);
  }
  if (best.edges.empty()) throw InternalError("select_min_homology_cycle: no odd cycle meets the path system");
  return best.edges;
}

BasisResult minimum_homology_basis(const EmbeddedGraph& input, const BasisOptions& options) {
  using Clock = std::chrono::steady_clock;
  auto since = [](Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); };
  BasisResult result;
  auto t0 = Clock::now();
  EmbeddedGraph g = puncture_if_closed(input);
  result.graph = g;

  SparsifyOutcome sp = sparsify(g);
  for (const auto& c : sp.forced_mhb) result.cycles.push_back({c, cycle_weight(g, c), true});
  result.counters["forced"] = static_cast<long>(sp.forced_mhb.size());
  result.timings.push_back({"sparsify", since(t0)});

  const EmbeddedGraph& r = sp.residual;
  if (r.m() > 0 && r.num_boundary() > 0) {
    auto t1 = Clock::now();
    SignatureSystem sigs(r, tree_coforest(r));
    ShortestPathSystem system = shortest_path_system(r);
    result.counters["beta"] = static_cast<long>(sigs.beta());
    result.counters["path_system_paths"] = static_cast<long>(system.paths.size());
    result.timings.push_back({"setup", since(t1)});

    auto t2 = Clock::now();
    std::vector<std::vector<EdgeId>> chosen;
    auto select = [&](const BitVec& s, std::size_t) {
      chosen.push_back(select_min_homology_cycle(r, sigs, system, s, options.threads));
      return sigs.homology_signature(chosen.back());
    };
    support_recursion(sigs.beta(), select, options.support, &result.support);
    for (const auto& cyc : chosen) {
      std::vector<EdgeId> edges;
      for (EdgeId e : cyc) edges.push_back(sp.edge_map[static_cast<std::size_t>(e)]);
      std::sort(edges.begin(), edges.end());
      result.cycles.push_back({edges, cycle_weight(g, edges), false});
    }
    result.timings.push_back({"selection", since(t2)});
  }
  for (const auto& c : result.cycles) result.total_weight += c.weight;
  result.timings.push_back({"total", since(t0)});
  return result;
}

}  // namespace surfbasis
