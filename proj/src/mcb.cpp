#include "surfbasis/mcb.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <queue>
#include <unordered_map>

#include "surfbasis/errors.hpp"
#include "surfbasis/sparsifier.hpp"

namespace surfbasis {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

}  // namespace

std::vector<HortonCycle> horton_candidates(const EmbeddedGraph& g, const AllPairs& paths) {
  std::vector<HortonCycle> out;
  const std::size_t n = g.n();
  std::vector<VertexId> branch(n);
  std::vector<VertexId> order(n);
  for (std::size_t x = 0; x < n; ++x) {
    const ShortestPathTree& t = paths.tree(static_cast<VertexId>(x));
    // First vertex after the root on each tree path, assigned top-down.
    for (std::size_t v = 0; v < n; ++v) order[v] = static_cast<VertexId>(v);
    std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
      return t.depth[static_cast<std::size_t>(a)] < t.depth[static_cast<std::size_t>(b)];
    });
    for (VertexId v : order) {
      VertexId p = t.parent[static_cast<std::size_t>(v)];
      branch[static_cast<std::size_t>(v)] =
          p == kNone ? v : (p == static_cast<VertexId>(x) ? v : branch[static_cast<std::size_t>(p)]);
    }
    for (std::size_t e = 0; e < g.m(); ++e) {
      const EdgeRecord& rec = g.edge(static_cast<EdgeId>(e));
      auto eid = static_cast<EdgeId>(e);
      if (t.parent_edge[static_cast<std::size_t>(rec.u)] == eid || t.parent_edge[static_cast<std::size_t>(rec.v)] == eid) {
        continue;
      }
      const auto X = static_cast<VertexId>(x);
      bool simple;
      if (rec.u == rec.v) {
        simple = rec.u == X;
      } else {
        simple = rec.u == X || rec.v == X || branch[static_cast<std::size_t>(rec.u)] != branch[static_cast<std::size_t>(rec.v)];
      }
      if (!simple) continue;
      HortonCycle c;
      c.root = X;
      c.edge = eid;
      c.edges = t.path_to(rec.u);
      auto second = t.path_to(rec.v);
      c.edges.insert(c.edges.end(), second.begin(), second.end());
      c.edges.push_back(eid);
      out.push_back(std::move(c));
    }
  }
  return out;
}

bool is_isometric(const EmbeddedGraph& g, const AllPairs& paths, const std::vector<EdgeId>& edges) {
  std::vector<bool> on_cycle(g.m(), false);
  std::vector<VertexId> verts;
  for (EdgeId e : edges) {
    on_cycle[static_cast<std::size_t>(e)] = true;
    verts.push_back(g.edge(e).u);
    verts.push_back(g.edge(e).v);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  // The cycle holds every shortest x,y-path iff, in the tree rooted at each
  // x on the cycle, every other cycle vertex hangs from a cycle edge.
  for (VertexId x : verts) {
    const ShortestPathTree& t = paths.tree(x);
    for (VertexId y : verts) {
      if (y == x) continue;
      EdgeId pe = t.parent_edge[static_cast<std::size_t>(y)];
      if (pe == kNone || !on_cycle[static_cast<std::size_t>(pe)]) return false;
    }
  }
  return true;
}

IsometricCycleSet isometric_cycles(const EmbeddedGraph& g, const std::vector<HortonCycle>& candidates,
                                   const AllPairs& paths, const SignatureSystem& sigs) {
  IsometricCycleSet set;
  set.candidates = candidates.size();
  std::unordered_map<BitVec, bool, BitVecHash> seen;
  for (const HortonCycle& h : candidates) {
    std::vector<EdgeId> edges = h.edges;
    std::sort(edges.begin(), edges.end());
    PathKey key = path_key(g, edges);
    auto [it, inserted] = seen.emplace(key.edges, false);
    if (!inserted) continue;
    if (!is_isometric(g, paths, edges)) continue;
    it->second = true;
    IsometricCycle c;
    c.signature = sigs.cycle_signature(edges);
    c.homology = sigs.homology_signature(edges);
    c.edges = std::move(edges);
    c.key = std::move(key);
    set.cycles.push_back(std::move(c));
  }
  std::sort(set.cycles.begin(), set.cycles.end(),
            [](const IsometricCycle& a, const IsometricCycle& b) { return a.key < b.key; });
  std::map<std::string, std::vector<std::size_t>> by_class;
  for (std::size_t i = 0; i < set.cycles.size(); ++i) by_class[set.cycles[i].homology.to_string()].push_back(i);
  for (auto& [k, members] : by_class) set.classes.push_back(std::move(members));
  return set;
}

namespace {

// Faces cut off from the outer face by an even edge set.
std::vector<FaceId> inner_side(const DualGraph& dg, FaceId outer, const std::vector<bool>& cut) {
  std::vector<bool> reached(dg.vertex_count, false);
  std::queue<FaceId> queue;
  reached[static_cast<std::size_t>(outer)] = true;
  queue.push(outer);
  while (!queue.empty()) {
    FaceId f = queue.front();
    queue.pop();
    for (EdgeId e : dg.incident[static_cast<std::size_t>(f)]) {
      if (cut[static_cast<std::size_t>(e)]) continue;
      auto [a, b] = dg.edge_ends[static_cast<std::size_t>(e)];
      FaceId h = a == f ? b : a;
      if (!reached[static_cast<std::size_t>(h)]) {
        reached[static_cast<std::size_t>(h)] = true;
        queue.push(h);
      }
    }
  }
  std::vector<FaceId> inside;
  for (std::size_t f = 0; f < dg.vertex_count; ++f) {
    if (!reached[f]) inside.push_back(static_cast<FaceId>(f));
  }
  return inside;
}

std::vector<FaceId> region(const EmbeddedGraph& g, const DualGraph& dg, FaceId outer, const std::vector<EdgeId>& a,
                           const std::vector<EdgeId>* b) {
  std::vector<bool> cut(g.m(), false);
  for (EdgeId e : a) cut[static_cast<std::size_t>(e)] = !cut[static_cast<std::size_t>(e)];
  if (b != nullptr) {
    for (EdgeId e : *b) cut[static_cast<std::size_t>(e)] = !cut[static_cast<std::size_t>(e)];
  }
  return inner_side(dg, outer, cut);
}

}  // namespace

std::vector<RegionTree> build_region_trees(const EmbeddedGraph& g, const IsometricCycleSet& set) {
  if (g.num_boundary() != 1) throw InputError("build_region_trees needs exactly one boundary face");
  const FaceId outer = g.boundary_faces().front();
  const DualGraph dg = dual(g);
  std::vector<RegionTree> trees;
  for (const auto& members : set.classes) {
    RegionTree tree;
    tree.homology = set.cycles[members.front()].homology;
    tree.trivial = tree.homology.none();
    std::vector<std::pair<std::size_t, std::vector<FaceId>>> sets;
    if (tree.trivial) {
      for (std::size_t c : members) sets.push_back({c, region(g, dg, outer, set.cycles[c].edges, nullptr)});
    } else {
      // Measured from an arbitrary member the regions split into two
      // chains; re-measuring from the member with the largest region
      // leaves a single chain.
      const auto& first = set.cycles[members.front()].edges;
      std::size_t rep = members.front(), best = 0;
      for (std::size_t c : members) {
        std::size_t size = region(g, dg, outer, set.cycles[c].edges, &first).size();
        if (size > best) {
          best = size;
          rep = c;
        }
      }
      tree.representative = rep;
      for (std::size_t c : members) {
        if (c != rep) sets.push_back({c, region(g, dg, outer, set.cycles[c].edges, &set.cycles[rep].edges)});
      }
    }
    std::stable_sort(sets.begin(), sets.end(),
                     [](const auto& a, const auto& b) { return a.second.size() > b.second.size(); });
    tree.nodes.push_back({});
    std::vector<std::size_t> owner(dg.vertex_count, 0);
    for (auto& [c, faces] : sets) {
      if (faces.empty()) throw InternalError("build_region_trees: cycle encloses no face");
      std::size_t parent = owner[static_cast<std::size_t>(faces.front())];
      for (FaceId f : faces) {
        if (owner[static_cast<std::size_t>(f)] != parent) {
          throw InternalError("build_region_trees: two cycles of one homology class cross");
        }
      }
      std::size_t id = tree.nodes.size();
      for (FaceId f : faces) owner[static_cast<std::size_t>(f)] = id;
      tree.nodes.push_back({c, parent, {}});
    }
    for (std::size_t f = 0; f < dg.vertex_count; ++f) tree.nodes[owner[f]].faces.push_back(static_cast<FaceId>(f));
    trees.push_back(std::move(tree));
  }
  return trees;
}

std::size_t select_min_cycle(const BitVec& support, const std::vector<RegionTree>& trees,
                             const IsometricCycleSet& set, const SignatureSystem& sigs) {
  constexpr std::size_t kNoCycle = static_cast<std::size_t>(-1);
  std::size_t best = kNoCycle;
  std::vector<char> val;
  for (const RegionTree& tree : trees) {
    // <S,[γ]> is the parity of S over the faces inside γ's region, offset by
    // the representative's product for a non-trivial class.
    bool offset = false;
    if (!tree.trivial) {
      offset = dot(support, set.cycles[tree.representative].signature);
      if (offset && tree.representative < best) best = tree.representative;
    }
    val.assign(tree.nodes.size(), 0);
    for (std::size_t v = tree.nodes.size(); v-- > 1;) {
      const auto& node = tree.nodes[v];
      char parity = val[v];
      for (FaceId f : node.faces) {
        int bit = sigs.face_bit(f);
        if (bit >= 0 && support.get(static_cast<std::size_t>(bit))) parity ^= 1;
      }
      val[v] = parity;
      val[node.parent] ^= parity;
      if ((parity != 0) != offset && node.cycle < best) best = node.cycle;
    }
  }
  if (best == kNoCycle) throw InternalError("select_min_cycle: no isometric cycle has odd product with the support vector");
  return best;
}

BasisResult minimum_cycle_basis(const EmbeddedGraph& input, const BasisOptions& options) {
  BasisResult result;
  auto t0 = Clock::now();
  if (!is_orientable(input)) {
    throw UnsupportedError("minimum cycle basis requires an orientable embedding");
  }
  EmbeddedGraph g = input.num_boundary() == 0   ? puncture_if_closed(input)
                    : input.num_boundary() == 1 ? input
                                                : with_boundary(input, {input.boundary_faces().front()});
  result.graph = g;

  SparsifyOutcome sp = sparsify(g);
  for (const auto& c : sp.forced_mcb) result.cycles.push_back({c, cycle_weight(g, c), true});
  result.timings.push_back({"sparsify", seconds_since(t0)});
  result.counters["forced"] = static_cast<long>(sp.forced_mcb.size());

  const EmbeddedGraph& r = sp.residual;
  const std::size_t dim = r.m() + 1 - r.n();
  result.counters["residual_dimension"] = static_cast<long>(dim);
  if (dim > 0) {
    auto t1 = Clock::now();
    SignatureSystem sigs(r, tree_coforest(r));
    AllPairs paths = all_pairs_shortest(r, options.threads);
    result.timings.push_back({"shortest_paths", seconds_since(t1)});

    auto t2 = Clock::now();
    auto candidates = horton_candidates(r, paths);
    IsometricCycleSet set = isometric_cycles(r, candidates, paths, sigs);
    result.counters["horton_candidates"] = static_cast<long>(set.candidates);
    result.counters["isometric_cycles"] = static_cast<long>(set.cycles.size());
    result.counters["homology_classes"] = static_cast<long>(set.classes.size());
    result.timings.push_back({"isometric_cycles", seconds_since(t2)});

    auto t3 = Clock::now();
    auto trees = build_region_trees(r, set);
    result.timings.push_back({"region_trees", seconds_since(t3)});

    auto t4 = Clock::now();
    std::vector<std::size_t> chosen;
    auto select = [&](const BitVec& s, std::size_t) {
      std::size_t c = select_min_cycle(s, trees, set, sigs);
      chosen.push_back(c);
      return set.cycles[c].signature;
    };
    support_recursion(dim, select, options.support, &result.support);
    for (std::size_t c : chosen) {
      std::vector<EdgeId> edges;
      for (EdgeId e : set.cycles[c].edges) edges.push_back(sp.edge_map[static_cast<std::size_t>(e)]);
      std::sort(edges.begin(), edges.end());
      result.cycles.push_back({edges, cycle_weight(g, edges), false});
    }
    result.timings.push_back({"selection", seconds_since(t4)});
  }
  for (const auto& c : result.cycles) result.total_weight += c.weight;
  result.timings.push_back({"total", seconds_since(t0)});
  return result;
}

}  // namespace surfbasis
