#include "surfbasis/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>

#include "surfbasis/errors.hpp"
#include "surfbasis/gf2_matrix.hpp"

namespace surfbasis {

BitVec edge_vector(const EmbeddedGraph& g, const std::vector<EdgeId>& edges) {
  BitVec v(g.m());
  for (EdgeId e : edges) v.flip(static_cast<std::size_t>(e));
  return v;
}

std::vector<EdgeId> edge_list(const BitVec& v) {
  std::vector<EdgeId> out;
  for (std::size_t i : v.ones()) out.push_back(static_cast<EdgeId>(i));
  return out;
}

namespace {

std::vector<BitVec> fundamental_cycles(const EmbeddedGraph& g) {
  std::vector<EdgeId> parent_edge(g.n(), kNone);
  std::vector<VertexId> parent(g.n(), kNone);
  std::vector<bool> seen(g.n(), false), tree(g.m(), false);
  std::queue<VertexId> queue;
  seen[0] = true;
  queue.push(0);
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop();
    for (DartId d : g.rotation(x)) {
      VertexId y = g.dart_target(d);
      if (seen[static_cast<std::size_t>(y)]) continue;
      seen[static_cast<std::size_t>(y)] = true;
      parent[static_cast<std::size_t>(y)] = x;
      parent_edge[static_cast<std::size_t>(y)] = edge_of(d);
      tree[static_cast<std::size_t>(edge_of(d))] = true;
      queue.push(y);
    }
  }
  std::vector<BitVec> out;
  for (std::size_t e = 0; e < g.m(); ++e) {
    if (tree[e]) continue;
    BitVec c(g.m());
    c.set(e);
    for (VertexId x : {g.edge(static_cast<EdgeId>(e)).u, g.edge(static_cast<EdgeId>(e)).v}) {
      for (; parent[static_cast<std::size_t>(x)] != kNone; x = parent[static_cast<std::size_t>(x)]) {
        c.flip(static_cast<std::size_t>(parent_edge[static_cast<std::size_t>(x)]));
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

Weight weight_of(const EmbeddedGraph& g, const BitVec& v) {
  Weight w = 0;
  for (std::size_t e : v.ones()) w += g.weight(static_cast<EdgeId>(e));
  return w;
}

// Elements sorted by weight, then by the edge set as a binary number.
std::vector<std::size_t> by_weight(const EmbeddedGraph& g, const std::vector<BitVec>& elements) {
  std::vector<Weight> w(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) w[i] = weight_of(g, elements[i]);
  std::vector<std::size_t> order(elements.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (w[a] != w[b]) return w[a] < w[b];
    return elements[a].compare_numeric(elements[b]) < 0;
  });
  return order;
}

std::vector<BitVec> face_boundaries(const EmbeddedGraph& g) {
  std::vector<BitVec> rows;
  for (std::size_t f = 0; f < g.num_faces(); ++f) {
    if (g.num_boundary() > 0 && g.is_boundary(static_cast<FaceId>(f))) continue;
    rows.push_back(edge_vector(g, g.face_boundary_edges(static_cast<FaceId>(f))));
  }
  return rows;
}

long beta_of(const EmbeddedGraph& g) { return topo_stats(g).beta; }

}  // namespace

CycleSpaceEnumeration enumerate_cycle_space(const EmbeddedGraph& g, std::size_t max_dimension) {
  auto basis = fundamental_cycles(g);
  if (basis.size() > max_dimension) {
    throw InputError("cycle space of dimension " + std::to_string(basis.size()) + " is too large to enumerate");
  }
  CycleSpaceEnumeration out;
  out.dimension = basis.size();
  const std::size_t count = std::size_t{1} << basis.size();
  out.elements.reserve(count);
  BitVec cur(g.m());
  out.elements.push_back(cur);
  // Gray code: step i flips the basis vector at the lowest set bit of i.
  for (std::size_t i = 1; i < count; ++i) {
    cur ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
    out.elements.push_back(cur);
  }
  return out;
}

OracleBasis greedy_mcb(const EmbeddedGraph& g) {
  auto space = enumerate_cycle_space(g);
  OracleBasis out;
  EchelonBasis basis(g.m());
  for (std::size_t i : by_weight(g, space.elements)) {
    if (out.cycles.size() == space.dimension) break;
    if (space.elements[i].none()) continue;
    if (basis.insert(space.elements[i])) {
      out.cycles.push_back(edge_list(space.elements[i]));
      out.total_weight += weight_of(g, space.elements[i]);
    }
  }
  return out;
}

OracleBasis greedy_mhb_by_enumeration(const EmbeddedGraph& g) {
  auto space = enumerate_cycle_space(g);
  const auto beta = static_cast<std::size_t>(beta_of(g));
  EchelonBasis basis(g.m());
  for (auto& row : face_boundaries(g)) basis.insert(row);
  OracleBasis out;
  for (std::size_t i : by_weight(g, space.elements)) {
    if (out.cycles.size() == beta) break;
    if (space.elements[i].none()) continue;
    if (basis.insert(space.elements[i])) {
      out.cycles.push_back(edge_list(space.elements[i]));
      out.total_weight += weight_of(g, space.elements[i]);
    }
  }
  if (out.cycles.size() != beta) throw InternalError("greedy_mhb: found fewer independent classes than beta");
  return out;
}

std::vector<BitVec> cocycle_basis(const EmbeddedGraph& g) {
  const std::size_t m = g.m();
  // Reduced row echelon form of the face-boundary rows; pivot = first set bit.
  std::vector<BitVec> rows = face_boundaries(g);
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && !rows[p].get(c)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r && rows[i].get(c)) rows[i] ^= rows[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  rows.resize(r);
  std::vector<bool> is_pivot(m, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  std::vector<BitVec> kernel;
  for (std::size_t f = 0; f < m; ++f) {
    if (is_pivot[f]) continue;
    BitVec v(m);
    v.set(f);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].get(f)) v.set(pivot_col[i]);
    }
    kernel.push_back(std::move(v));
  }
  EchelonBasis coboundaries(m);
  for (std::size_t x = 0; x < g.n(); ++x) {
    BitVec d(m);
    for (DartId dart : g.rotation(static_cast<VertexId>(x))) d.flip(static_cast<std::size_t>(edge_of(dart)));
    coboundaries.insert(d);
  }
  std::vector<BitVec> out;
  for (auto& v : kernel) {
    if (coboundaries.insert(v)) out.push_back(v);
  }
  if (static_cast<long>(out.size()) != beta_of(g)) {
    throw InternalError("cocycle_basis: found " + std::to_string(out.size()) + " classes, expected beta");
  }
  return out;
}

BitVec homology_label(const std::vector<BitVec>& cocycles, const std::vector<EdgeId>& edges) {
  BitVec label(cocycles.size());
  for (std::size_t k = 0; k < cocycles.size(); ++k) {
    bool bit = false;
    for (EdgeId e : edges) bit ^= cocycles[k].get(static_cast<std::size_t>(e));
    label.assign(k, bit);
  }
  return label;
}

OracleBasis greedy_mhb_by_classes(const EmbeddedGraph& g) {
  auto cocycles = cocycle_basis(g);
  const std::size_t beta = cocycles.size();
  if (beta > 12) throw InputError("greedy_mhb_by_classes: beta too large");
  OracleBasis out;
  if (beta == 0) return out;
  const std::size_t sheets = std::size_t{1} << beta;
  const std::size_t n = g.n();
  std::vector<std::size_t> label(g.m(), 0);
  for (std::size_t e = 0; e < g.m(); ++e) {
    for (std::size_t k = 0; k < beta; ++k) {
      if (cocycles[k].get(e)) label[e] |= std::size_t{1} << k;
    }
  }
  const Weight inf = std::numeric_limits<Weight>::infinity();
  std::vector<Weight> best(sheets, inf);
  std::vector<Weight> dist(sheets * n);
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), inf);
    using Item = std::pair<Weight, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[s] = 0;
    heap.push({0, s});
    while (!heap.empty()) {
      auto [w, node] = heap.top();
      heap.pop();
      if (w != dist[node]) continue;
      std::size_t h = node / n;
      auto x = static_cast<VertexId>(node % n);
      for (DartId d : g.rotation(x)) {
        EdgeId e = edge_of(d);
        std::size_t next = (h ^ label[static_cast<std::size_t>(e)]) * n + static_cast<std::size_t>(g.dart_target(d));
        Weight nd = w + g.weight(e);
        if (nd < dist[next]) {
          dist[next] = nd;
          heap.push({nd, next});
        }
      }
    }
    for (std::size_t h = 1; h < sheets; ++h) best[h] = std::min(best[h], dist[h * n + s]);
  }
  std::vector<std::size_t> order(sheets - 1);
  std::iota(order.begin(), order.end(), std::size_t{1});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return best[a] < best[b]; });
  EchelonBasis classes(beta);
  std::size_t picked = 0;
  for (std::size_t h : order) {
    if (picked == beta) break;
    BitVec v(beta);
    for (std::size_t k = 0; k < beta; ++k) v.assign(k, (h >> k) & 1U);
    if (classes.insert(v)) {
      out.total_weight += best[h];
      ++picked;
    }
  }
  return out;
}

OracleBasis greedy_mhb(const EmbeddedGraph& g) {
  if (g.m() + 1 - g.n() <= 20) return greedy_mhb_by_enumeration(g);
  return greedy_mhb_by_classes(g);
}

}  // namespace surfbasis
