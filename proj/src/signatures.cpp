#include "surfbasis/signatures.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "surfbasis/errors.hpp"

namespace surfbasis {

namespace {

std::vector<std::vector<EdgeId>> incidence(const EmbeddedGraph& g) {
  std::vector<std::vector<EdgeId>> inc(g.n());
  for (std::size_t e = 0; e < g.m(); ++e) {
    inc[static_cast<std::size_t>(g.edge(static_cast<EdgeId>(e)).u)].push_back(static_cast<EdgeId>(e));
    inc[static_cast<std::size_t>(g.edge(static_cast<EdgeId>(e)).v)].push_back(static_cast<EdgeId>(e));
  }
  return inc;
}

}  // namespace

TreeCoforest tree_coforest(const EmbeddedGraph& g, VertexId root) {
  std::vector<EdgeId> tree;
  std::vector<bool> seen(g.n(), false);
  auto inc = incidence(g);
  std::queue<VertexId> queue;
  seen[static_cast<std::size_t>(root)] = true;
  queue.push(root);
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop();
    for (EdgeId e : inc[static_cast<std::size_t>(x)]) {
      VertexId y = g.other_end(e, x);
      if (seen[static_cast<std::size_t>(y)]) continue;
      seen[static_cast<std::size_t>(y)] = true;
      tree.push_back(e);
      queue.push(y);
    }
  }
  return tree_coforest(g, root, tree);
}

TreeCoforest tree_coforest(const EmbeddedGraph& g, VertexId root, const std::vector<EdgeId>& tree_edges) {
  if (g.num_boundary() == 0) throw InputError("tree_coforest needs at least one boundary face");
  if (tree_edges.size() + 1 != g.n()) throw InputError("tree_coforest: tree has the wrong number of edges");
  TreeCoforest d;
  d.root = root;
  d.role.assign(g.m(), EdgeRole::Leftover);
  for (EdgeId e : tree_edges) d.role[static_cast<std::size_t>(e)] = EdgeRole::Tree;
  d.tree = tree_edges;

  // Grow the dual forest from every boundary face at once.
  DualGraph dg = dual(g);
  std::vector<bool> reached(dg.vertex_count, false);
  std::queue<FaceId> queue;
  for (FaceId f : g.boundary_faces()) {
    reached[static_cast<std::size_t>(f)] = true;
    queue.push(f);
  }
  while (!queue.empty()) {
    FaceId f = queue.front();
    queue.pop();
    for (EdgeId e : dg.incident[static_cast<std::size_t>(f)]) {
      if (d.role[static_cast<std::size_t>(e)] == EdgeRole::Tree) continue;
      auto [a, b] = dg.edge_ends[static_cast<std::size_t>(e)];
      FaceId h = a == f ? b : a;
      if (reached[static_cast<std::size_t>(h)]) continue;
      reached[static_cast<std::size_t>(h)] = true;
      d.role[static_cast<std::size_t>(e)] = EdgeRole::Coforest;
      d.coforest.push_back(e);
      queue.push(h);
    }
  }
  if (std::find(reached.begin(), reached.end(), false) != reached.end()) {
    throw InternalError("tree_coforest: dual forest does not reach every face");
  }
  for (std::size_t e = 0; e < g.m(); ++e) {
    if (d.role[e] == EdgeRole::Leftover) d.leftover.push_back(static_cast<EdgeId>(e));
  }
  auto stats = topo_stats(g);
  if (static_cast<long>(d.leftover.size()) != stats.beta) {
    throw InternalError("tree_coforest: " + std::to_string(d.leftover.size()) + " leftover edges but beta is " +
                        std::to_string(stats.beta));
  }
  return d;
}

SignatureSystem::SignatureSystem(const EmbeddedGraph& g, TreeCoforest decomposition)
    : g_(&g), dec_(std::move(decomposition)) {
  const std::size_t n = g.n(), m = g.m();
  dimension_ = m + 1 - n;
  beta_ = dec_.leftover.size();

  // Rooted spanning tree.
  tree_parent_.assign(n, kNone);
  tree_parent_edge_.assign(n, kNone);
  tree_depth_.assign(n, 0);
  {
    auto inc = incidence(g);
    std::vector<bool> seen(n, false);
    std::queue<VertexId> queue;
    seen[static_cast<std::size_t>(dec_.root)] = true;
    queue.push(dec_.root);
    while (!queue.empty()) {
      VertexId x = queue.front();
      queue.pop();
      for (EdgeId e : inc[static_cast<std::size_t>(x)]) {
        if (dec_.role[static_cast<std::size_t>(e)] != EdgeRole::Tree) continue;
        VertexId y = g.other_end(e, x);
        if (seen[static_cast<std::size_t>(y)]) continue;
        seen[static_cast<std::size_t>(y)] = true;
        tree_parent_[static_cast<std::size_t>(y)] = x;
        tree_parent_edge_[static_cast<std::size_t>(y)] = e;
        tree_depth_[static_cast<std::size_t>(y)] = tree_depth_[static_cast<std::size_t>(x)] + 1;
        queue.push(y);
      }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
      throw InputError("SignatureSystem: tree edges do not span the graph");
    }
  }

  // Rooted dual forest: parent pointers towards the boundary face of each tree.
  DualGraph dg = dual(g);
  std::vector<FaceId> fparent(dg.vertex_count, kNone);
  std::vector<EdgeId> fparent_edge(dg.vertex_count, kNone);
  std::vector<int> fdepth(dg.vertex_count, 0);
  std::vector<FaceId> froot(dg.vertex_count, kNone);
  {
    std::queue<FaceId> queue;
    for (FaceId f : g.boundary_faces()) {
      froot[static_cast<std::size_t>(f)] = f;
      queue.push(f);
    }
    while (!queue.empty()) {
      FaceId f = queue.front();
      queue.pop();
      for (EdgeId e : dg.incident[static_cast<std::size_t>(f)]) {
        if (dec_.role[static_cast<std::size_t>(e)] != EdgeRole::Coforest) continue;
        auto [a, b] = dg.edge_ends[static_cast<std::size_t>(e)];
        FaceId h = a == f ? b : a;
        if (froot[static_cast<std::size_t>(h)] != kNone) continue;
        froot[static_cast<std::size_t>(h)] = froot[static_cast<std::size_t>(f)];
        fparent[static_cast<std::size_t>(h)] = f;
        fparent_edge[static_cast<std::size_t>(h)] = e;
        fdepth[static_cast<std::size_t>(h)] = fdepth[static_cast<std::size_t>(f)] + 1;
        queue.push(h);
      }
    }
  }
  auto to_root = [&](FaceId f, std::vector<EdgeId>& out) {
    for (; fparent[static_cast<std::size_t>(f)] != kNone; f = fparent[static_cast<std::size_t>(f)]) {
      out.push_back(fparent_edge[static_cast<std::size_t>(f)]);
    }
  };

  for (EdgeId e : dec_.leftover) {
    auto [a, b] = dg.edge_ends[static_cast<std::size_t>(e)];
    std::vector<EdgeId> p{e};
    if (froot[static_cast<std::size_t>(a)] == froot[static_cast<std::size_t>(b)]) {
      // Co-cycle: e plus the forest path between its two faces.
      FaceId x = a, y = b;
      while (x != y) {
        if (fdepth[static_cast<std::size_t>(x)] >= fdepth[static_cast<std::size_t>(y)]) {
          p.push_back(fparent_edge[static_cast<std::size_t>(x)]);
          x = fparent[static_cast<std::size_t>(x)];
        } else {
          p.push_back(fparent_edge[static_cast<std::size_t>(y)]);
          y = fparent[static_cast<std::size_t>(y)];
        }
      }
    } else {
      to_root(a, p);
      to_root(b, p);
    }
    copaths_.push_back(std::move(p));
  }
  face_bit_.assign(g.num_faces(), -1);
  for (std::size_t f = 0; f < g.num_faces(); ++f) {
    if (g.is_boundary(static_cast<FaceId>(f))) continue;
    face_bit_[f] = static_cast<int>(copaths_.size());
    face_order_.push_back(static_cast<FaceId>(f));
    std::vector<EdgeId> p;
    to_root(static_cast<FaceId>(f), p);
    copaths_.push_back(std::move(p));
  }
  if (copaths_.size() != dimension_) {
    throw InternalError("SignatureSystem: " + std::to_string(copaths_.size()) + " co-paths for dimension " +
                        std::to_string(dimension_));
  }

  edge_sig_.assign(m, BitVec(dimension_));
  for (std::size_t i = 0; i < copaths_.size(); ++i) {
    for (EdgeId e : copaths_[i]) edge_sig_[static_cast<std::size_t>(e)].flip(i);
  }
  edge_hom_.assign(m, BitVec(beta_));
  for (std::size_t e = 0; e < m; ++e) {
    for (std::size_t i = 0; i < beta_; ++i) edge_hom_[e].assign(i, edge_sig_[e].get(i));
  }
}

BitVec SignatureSystem::cycle_signature(const std::vector<EdgeId>& edges) const {
  BitVec s(dimension_);
  for (EdgeId e : edges) s ^= edge_signature(e);
  return s;
}

BitVec SignatureSystem::homology_signature(const std::vector<EdgeId>& edges) const {
  BitVec s(beta_);
  for (EdgeId e : edges) s ^= edge_homology(e);
  return s;
}

std::vector<EdgeId> SignatureSystem::tree_path(VertexId a, VertexId b) const {
  std::vector<EdgeId> from_a, from_b;
  while (a != b) {
    if (tree_depth_[static_cast<std::size_t>(a)] >= tree_depth_[static_cast<std::size_t>(b)]) {
      from_a.push_back(tree_parent_edge_[static_cast<std::size_t>(a)]);
      a = tree_parent_[static_cast<std::size_t>(a)];
    } else {
      from_b.push_back(tree_parent_edge_[static_cast<std::size_t>(b)]);
      b = tree_parent_[static_cast<std::size_t>(b)];
    }
  }
  from_a.insert(from_a.end(), from_b.rbegin(), from_b.rend());
  return from_a;
}

std::vector<EdgeId> SignatureSystem::fundamental_cycle(std::size_t i) const {
  EdgeId e = dec_.leftover.at(i);
  std::vector<EdgeId> c = tree_path(g_->edge(e).u, g_->edge(e).v);
  c.push_back(e);
  return c;
}

std::vector<EdgeId> SignatureSystem::reconstruct_cycle(const BitVec& w) const {
  if (w.size() != dimension_) throw InputError("reconstruct_cycle: signature has the wrong length");
  BitVec acc(g_->m());
  for (std::size_t i = w.find_first(); i < w.size(); i = w.find_next(i + 1)) {
    if (i < beta_) {
      for (EdgeId e : fundamental_cycle(i)) acc.flip(static_cast<std::size_t>(e));
    } else {
      for (EdgeId e : g_->face_boundary_edges(face_order_[i - beta_])) acc.flip(static_cast<std::size_t>(e));
    }
  }
  std::vector<EdgeId> out;
  for (std::size_t e : acc.ones()) out.push_back(static_cast<EdgeId>(e));
  return out;
}

bool is_null_homologous(const EmbeddedGraph& g, const std::vector<EdgeId>& edges) {
  std::vector<bool> in(g.m(), false);
  for (EdgeId e : edges) in[static_cast<std::size_t>(e)] = !in[static_cast<std::size_t>(e)];
  DualGraph dg = dual(g);
  std::vector<int> colour(dg.vertex_count, -1);
  std::queue<FaceId> queue;
  auto seed = [&](FaceId f) {
    colour[static_cast<std::size_t>(f)] = 0;
    queue.push(f);
  };
  if (g.num_boundary() == 0) {
    seed(0);
  } else {
    for (FaceId f : g.boundary_faces()) seed(f);
  }
  while (!queue.empty()) {
    FaceId f = queue.front();
    queue.pop();
    for (EdgeId e : dg.incident[static_cast<std::size_t>(f)]) {
      auto [a, b] = dg.edge_ends[static_cast<std::size_t>(e)];
      FaceId h = a == f ? b : a;
      int want = colour[static_cast<std::size_t>(f)] ^ (in[static_cast<std::size_t>(e)] ? 1 : 0);
      if (colour[static_cast<std::size_t>(h)] == -1) {
        colour[static_cast<std::size_t>(h)] = want;
        queue.push(h);
      } else if (colour[static_cast<std::size_t>(h)] != want) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace surfbasis
