#include "surfbasis/shortest_paths.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "surfbasis/parallel.hpp"

namespace surfbasis {

int PathKey::compare(const PathKey& other) const {
  if (weight < other.weight) return -1;
  if (other.weight < weight) return 1;
  return edges.compare_numeric(other.edges);
}

PathKey path_key(const EmbeddedGraph& g, const std::vector<EdgeId>& edges) {
  PathKey key{0, BitVec(g.m())};
  for (EdgeId e : edges) {
    key.weight += g.weight(e);
    key.edges.flip(static_cast<std::size_t>(e));
  }
  return key;
}

std::vector<EdgeId> ShortestPathTree::path_to(VertexId v) const {
  std::vector<EdgeId> out;
  for (VertexId x = v; parent_edge[static_cast<std::size_t>(x)] != kNone; x = parent[static_cast<std::size_t>(x)]) {
    out.push_back(parent_edge[static_cast<std::size_t>(x)]);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<VertexId> ShortestPathTree::vertices_to(VertexId v) const {
  std::vector<VertexId> out{v};
  for (VertexId x = v; parent_edge[static_cast<std::size_t>(x)] != kNone;) {
    x = parent[static_cast<std::size_t>(x)];
    out.push_back(x);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

namespace {

ShortestPathTree empty_tree(const EmbeddedGraph& g, VertexId root) {
  ShortestPathTree t;
  t.root = root;
  t.dist.assign(g.n(), std::numeric_limits<Weight>::infinity());
  t.parent_edge.assign(g.n(), kNone);
  t.parent.assign(g.n(), kNone);
  t.depth.assign(g.n(), 0);
  t.dist[static_cast<std::size_t>(root)] = 0;
  return t;
}

}  // namespace

ShortestPathTree shortest_path_tree(const EmbeddedGraph& g, VertexId root) {
  ShortestPathTree t = empty_tree(g, root);
  const std::size_t n = g.n();
  std::vector<BitVec> key(n);
  std::vector<bool> done(n, false);
  key[static_cast<std::size_t>(root)] = BitVec(g.m());
  struct Item {
    PathKey key;
    VertexId v;
    bool operator>(const Item& o) const { return o.key < key; }
  };
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  heap.push({{0, key[static_cast<std::size_t>(root)]}, root});
  while (!heap.empty()) {
    Item top = heap.top();
    heap.pop();
    const VertexId x = top.v;
    if (done[static_cast<std::size_t>(x)]) continue;
    done[static_cast<std::size_t>(x)] = true;
    for (DartId d : g.rotation(x)) {
      EdgeId e = edge_of(d);
      VertexId y = g.dart_target(d);
      if (done[static_cast<std::size_t>(y)]) continue;
      PathKey cand{top.key.weight + g.weight(e), top.key.edges};
      cand.edges.set(static_cast<std::size_t>(e));
      auto& dy = t.dist[static_cast<std::size_t>(y)];
      bool better = cand.weight < dy ||
                    (cand.weight == dy && cand.edges.compare_numeric(key[static_cast<std::size_t>(y)]) < 0);
      if (!better) continue;
      dy = cand.weight;
      key[static_cast<std::size_t>(y)] = cand.edges;
      t.parent_edge[static_cast<std::size_t>(y)] = e;
      t.parent[static_cast<std::size_t>(y)] = x;
      heap.push({std::move(cand), y});
    }
  }
  // Depths, walking parents with memoisation.
  std::vector<bool> known(n, false);
  known[static_cast<std::size_t>(root)] = true;
  std::vector<VertexId> stack;
  for (std::size_t v = 0; v < n; ++v) {
    VertexId x = static_cast<VertexId>(v);
    while (!known[static_cast<std::size_t>(x)] && t.parent[static_cast<std::size_t>(x)] != kNone) {
      stack.push_back(x);
      x = t.parent[static_cast<std::size_t>(x)];
    }
    while (!stack.empty()) {
      VertexId y = stack.back();
      stack.pop_back();
      t.depth[static_cast<std::size_t>(y)] = t.depth[static_cast<std::size_t>(t.parent[static_cast<std::size_t>(y)])] + 1;
      known[static_cast<std::size_t>(y)] = true;
    }
  }
  return t;
}

ShortestPathTree plain_shortest_path_tree(const EmbeddedGraph& g, VertexId root) {
  ShortestPathTree t = empty_tree(g, root);
  using Item = std::pair<Weight, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  heap.push({0, root});
  std::vector<bool> done(g.n(), false);
  while (!heap.empty()) {
    auto [w, x] = heap.top();
    heap.pop();
    if (done[static_cast<std::size_t>(x)]) continue;
    done[static_cast<std::size_t>(x)] = true;
    for (DartId d : g.rotation(x)) {
      VertexId y = g.dart_target(d);
      Weight nd = w + g.weight(edge_of(d));
      if (nd < t.dist[static_cast<std::size_t>(y)]) {
        t.dist[static_cast<std::size_t>(y)] = nd;
        t.parent_edge[static_cast<std::size_t>(y)] = edge_of(d);
        t.parent[static_cast<std::size_t>(y)] = x;
        t.depth[static_cast<std::size_t>(y)] = t.depth[static_cast<std::size_t>(x)] + 1;
        heap.push({nd, y});
      }
    }
  }
  return t;
}

AllPairs all_pairs_shortest(const EmbeddedGraph& g, unsigned threads) {
  std::vector<ShortestPathTree> trees(g.n());
  parallel_for(g.n(), threads, [&](std::size_t v) { trees[v] = shortest_path_tree(g, static_cast<VertexId>(v)); });
  return AllPairs(std::move(trees));
}

}  // namespace surfbasis
