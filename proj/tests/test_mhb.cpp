#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "surfbasis/basis.hpp"
#include "surfbasis/errors.hpp"
#include "surfbasis/mhb.hpp"
#include "surfbasis/shortest_paths.hpp"

using namespace surfbasis;
using testing::build;
using testing::fixture;

namespace {

EmbeddedGraph punctured(const std::string& name) { return puncture_if_closed(fixture(name)); }

std::vector<EmbeddedGraph> suite() {
  std::vector<EmbeddedGraph> out;
  for (const char* name : {"torus1.txt", "pp1.txt", "grid_t3.txt", "k4s.txt", "theta.txt"}) out.push_back(punctured(name));
  out.push_back(puncture_if_closed(build(klein_grid(3))));
  out.push_back(puncture_if_closed(build(projective_grid(3))));
  out.push_back(puncture_if_closed(build(double_torus_grid(3))));
  out.push_back(with_boundary(build(theta_instance()), {0, 1}));
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    out.push_back(build(testing::random_instance(seed, 5, 5 + seed % 4, seed % 2 == 0)));
  }
  auto g = build(random_rotation(6, 11, 5));
  std::vector<FaceId> two{0, 1};
  if (g.num_faces() >= 2) out.push_back(with_boundary(g, two));
  return out;
}

// Random simple cycle: reconstruct a random signature and keep one component.
std::vector<EdgeId> random_cycle(std::mt19937_64& rng, const EmbeddedGraph& g, const SignatureSystem& sigs) {
  for (;;) {
    auto even = sigs.reconstruct_cycle(testing::random_bits(rng, sigs.dimension()));
    if (even.empty()) continue;
    auto parts = decompose_even_subgraph(g, even);
    return parts[rng() % parts.size()];
  }
}

Weight min_odd_homology(const EmbeddedGraph& g, const SignatureSystem& sigs, const BitVec& s) {
  Weight best = std::numeric_limits<Weight>::infinity();
  for (const auto& c : enumerate_cycle_space(g).elements) {
    auto edges = edge_list(c);
    if (dot(s, sigs.homology_signature(edges))) best = std::min(best, testing::total(g, edges));
  }
  return best;
}

}  // namespace

TEST_CASE("double cover with zero support is two copies") {
  auto g = punctured("grid_t3.txt");
  SignatureSystem sigs(g, tree_coforest(g));
  DoubleCover cover(g, sigs, BitVec(sigs.beta()));
  std::size_t parts = 0;
  cover.graph().component_labels(&parts);
  CHECK(parts == 2);
  CHECK(cover.graph().n() == 2 * g.n());
  CHECK(cover.graph().m() == 2 * g.m());
}

TEST_CASE("double cover of the torus bouquet") {
  auto g = punctured("torus1.txt");
  SignatureSystem sigs(g, tree_coforest(g));
  EdgeId x = testing::edge_named(g, "x");
  EdgeId y = testing::edge_named(g, "y");
  DoubleCover cover(g, sigs, sigs.homology_signature({x}));
  const auto& h = cover.graph();
  CHECK(h.n() == 2);
  CHECK(h.m() == 4);
  CHECK(cover.parity(x));
  CHECK_FALSE(cover.parity(y));
  // x lifts to a 2-cycle through both sheets, y to one loop per sheet.
  for (int z = 0; z < 2; ++z) {
    const auto& lx = h.edge(cover.lift_edge(x, z));
    CHECK(lx.u != lx.v);
    const auto& ly = h.edge(cover.lift_edge(y, z));
    CHECK(ly.u == ly.v);
  }
  CHECK(h.connected());
}

TEST_CASE("double cover of the projective plane") {
  auto g = punctured("pp1.txt");
  SignatureSystem sigs(g, tree_coforest(g));
  DoubleCover cover(g, sigs, BitVec::from_string("1"));
  CHECK(cover.graph().n() == 2);
  CHECK(cover.graph().m() == 2);
  CHECK(topo_stats(cover.graph()).euler_char == 2 * topo_stats(g).euler_char);
  CHECK(cover.graph().connected());
}

TEST_CASE("double cover counts and Euler characteristic") {
  std::mt19937_64 rng(21);
  for (const auto& g : suite()) {
    SignatureSystem sigs(g, tree_coforest(g));
    if (sigs.beta() == 0) continue;
    for (int t = 0; t < 5; ++t) {
      auto s = testing::random_nonzero(rng, sigs.beta());
      DoubleCover cover(g, sigs, s);
      const auto& h = cover.graph();
      CHECK(h.n() == 2 * g.n());
      CHECK(h.m() == 2 * g.m());
      std::size_t b = g.num_boundary();
      CHECK(h.num_boundary() >= b);
      CHECK(h.num_boundary() <= 2 * b);
      CHECK(h.num_faces() - h.num_boundary() == 2 * (g.num_faces() - b));
      auto sg = topo_stats(g);
      auto sh = topo_stats(h);
      CHECK(sh.surface_euler_char == 2 * sg.surface_euler_char);
      if (b <= 1) {
        CHECK(h.num_faces() == 2 * g.num_faces());
        CHECK(sh.euler_char == 2 * sg.euler_char);
      }
      // Faces of the cover project onto faces of the base.
      for (const auto& f : h.faces()) {
        std::vector<EdgeId> proj;
        for (DartId d : f.darts) proj.push_back(cover.project_edge(edge_of(d)));
        CHECK(!proj.empty());
      }
    }
  }
}

TEST_CASE("the cover is connected exactly when some cycle pairs oddly with S") {
  for (const auto& g : suite()) {
    SignatureSystem sigs(g, tree_coforest(g));
    if (sigs.beta() > 4 || sigs.dimension() > 16) continue;
    auto space = enumerate_cycle_space(g);
    for (std::size_t word = 0; word < (std::size_t{1} << sigs.beta()); ++word) {
      BitVec s(sigs.beta());
      for (std::size_t k = 0; k < sigs.beta(); ++k) s.assign(k, (word >> k) & 1U);
      bool odd = false;
      for (const auto& c : space.elements) odd = odd || dot(s, sigs.homology_signature(edge_list(c)));
      CHECK(DoubleCover(g, sigs, s).graph().connected() == odd);
    }
  }
}

TEST_CASE("lifts of cycles end on the sheet given by the pairing") {
  std::mt19937_64 rng(22);
  for (const auto& g : suite()) {
    SignatureSystem sigs(g, tree_coforest(g));
    if (sigs.beta() == 0) continue;
    for (int t = 0; t < 1000; ++t) {
      auto cycle = random_cycle(rng, g, sigs);
      auto s = testing::random_nonzero(rng, sigs.beta());
      DoubleCover cover(g, sigs, s);
      auto walk = cycle_walk(g, cycle);
      VertexId start = g.dart_vertex(walk.front());
      auto lifted = cover.lift_walk(walk, 0);
      REQUIRE(lifted.size() == walk.size());
      VertexId end = cover.graph().dart_target(lifted.back());
      CHECK(cover.project_vertex(end) == start);
      CHECK(cover.sheet(end) == static_cast<int>(dot(s, sigs.homology_signature(cycle))));
      CHECK(cover.graph().dart_vertex(lifted.front()) == cover.lift_vertex(start, 0));
    }
  }
}

TEST_CASE("lifts of shortest paths are shortest") {
  std::mt19937_64 rng(23);
  for (const auto& g : suite()) {
    SignatureSystem sigs(g, tree_coforest(g));
    if (sigs.beta() == 0) continue;
    auto ap = all_pairs_shortest(g);
    for (int t = 0; t < 20; ++t) {
      auto s = testing::random_nonzero(rng, sigs.beta());
      DoubleCover cover(g, sigs, s);
      auto u = static_cast<VertexId>(rng() % g.n());
      auto v = static_cast<VertexId>(rng() % g.n());
      auto path = ap.path(u, v);
      std::vector<DartId> walk;
      VertexId at = u;
      for (EdgeId e : path) {
        DartId d = g.edge(e).u == at ? tail_dart(e) : head_dart(e);
        walk.push_back(d);
        at = g.dart_target(d);
      }
      auto cover_dist = testing::bellman_ford(cover.graph(), cover.lift_vertex(u, 0));
      VertexId end = walk.empty() ? cover.lift_vertex(u, 0) : cover.graph().dart_target(cover.lift_walk(walk, 0).back());
      CHECK(cover.project_vertex(end) == v);
      CHECK(cover_dist[static_cast<std::size_t>(end)] == ap.dist(u, v));
    }
  }
}

TEST_CASE("path systems") {
  auto torus = shortest_path_system(punctured("torus1.txt"));
  CHECK_FALSE(torus.paths.empty());
  for (const auto& p : torus.paths) CHECK(p == std::vector<VertexId>{0});

  auto grid = punctured("grid_t3.txt");
  CHECK(shortest_path_system(grid).paths.size() <= 4);

  CHECK(shortest_path_system(fixture("k4s.txt")).paths.empty());
}

TEST_CASE("path systems meet every essential cycle") {
  for (const auto& g : suite()) {
    if (g.m() + 1 - g.n() > 16) continue;
    auto sys = shortest_path_system(g);
    auto ap = all_pairs_shortest(g);
    std::vector<bool> on(g.n(), false);
    for (std::size_t i = 0; i < sys.paths.size(); ++i) {
      const auto& p = sys.paths[i];
      for (VertexId v : p) on[static_cast<std::size_t>(v)] = true;
      CHECK(testing::total(g, sys.path_edges[i]) == ap.dist(p.front(), p.back()));
    }
    for (const auto& c : enumerate_cycle_space(g).elements) {
      auto edges = edge_list(c);
      if (edges.empty() || is_null_homologous(g, edges)) continue;
      bool meets = false;
      for (EdgeId e : edges) meets = meets || on[static_cast<std::size_t>(g.edge(e).u)] || on[static_cast<std::size_t>(g.edge(e).v)];
      CHECK(meets);
    }
  }
}

TEST_CASE("selection on fixtures") {
  {
    auto g = punctured("torus1.txt");
    SignatureSystem sigs(g, tree_coforest(g));
    auto s = BitVec::from_string("10");
    auto c = select_min_homology_cycle(g, sigs, shortest_path_system(g), s);
    CHECK(testing::total(g, c) == 1);
    CHECK(dot(s, sigs.homology_signature(c)));
    CHECK_THROWS_AS(select_min_homology_cycle(g, sigs, shortest_path_system(g), BitVec(2)), InputError);
  }
  {
    auto g = punctured("grid_t3.txt");
    SignatureSystem sigs(g, tree_coforest(g));
    auto s = BitVec::from_string("01");
    auto c = select_min_homology_cycle(g, sigs, shortest_path_system(g), s);
    CHECK(testing::total(g, c) == 3);
    CHECK(min_odd_homology(g, sigs, s) == 3);
  }
  {
    auto g = punctured("pp1.txt");
    SignatureSystem sigs(g, tree_coforest(g));
    auto c = select_min_homology_cycle(g, sigs, shortest_path_system(g), BitVec::from_string("1"));
    CHECK(c == std::vector<EdgeId>{0});
  }
}

TEST_CASE("selection finds the cheapest cycle pairing oddly with S") {
  std::mt19937_64 rng(24);
  for (const auto& g : suite()) {
    SignatureSystem sigs(g, tree_coforest(g));
    if (sigs.beta() == 0 || sigs.dimension() > 16) continue;
    auto sys = shortest_path_system(g);
    for (int t = 0; t < 6; ++t) {
      auto s = testing::random_nonzero(rng, sigs.beta());
      auto c = select_min_homology_cycle(g, sigs, sys, s, 1 + t % 3);
      CHECK(is_simple_cycle(g, c));
      CHECK(dot(s, sigs.homology_signature(c)));
      CHECK(testing::total(g, c) == min_odd_homology(g, sigs, s));
    }
  }
}

TEST_CASE("fixture homology bases") {
  CHECK(minimum_homology_basis(fixture("k4s.txt")).cycles.empty());
  auto pp = minimum_homology_basis(fixture("pp1.txt"));
  CHECK(pp.cycles.size() == 1);
  CHECK(pp.total_weight == 1);
  CHECK(minimum_homology_basis(fixture("torus1.txt")).total_weight == 2);
  CHECK(minimum_homology_basis(EmbeddedGraph::build(parse_instance("v 1\n"))).cycles.empty());
}

TEST_CASE("torus grids have homology bases of weight 2N") {
  for (std::size_t n = 3; n <= 8; ++n) {
    auto g = build(torus_grid(n));
    auto oracle = greedy_mhb(puncture_if_closed(g)).total_weight;
    CHECK(oracle == 2.0 * static_cast<double>(n));
    auto r = minimum_homology_basis(g);
    CHECK(r.cycles.size() == 2);
    CHECK(r.total_weight == oracle);
  }
}

TEST_CASE("homology bases on random and generated surfaces") {
  for (const auto& g : suite()) {
    for (auto rec : {Recursion::Balanced, Recursion::Simple}) {
      BasisOptions opt;
      opt.support.recursion = rec;
      opt.support.check_invariants = true;
      auto r = minimum_homology_basis(g, opt);
      CHECK(r.total_weight == greedy_mhb(r.graph).total_weight);
      SignatureSystem sigs(r.graph, tree_coforest(r.graph));
      std::vector<BitVec> rows;
      for (const auto& c : r.cycles) {
        CHECK(is_simple_cycle(g, c.edges));
        CHECK_FALSE(is_null_homologous(r.graph, c.edges));
        rows.push_back(sigs.homology_signature(c.edges));
      }
      CHECK(rank(rows) == sigs.beta());
      CHECK(r.cycles.size() == sigs.beta());
    }
  }
}

TEST_CASE("homology bases do not depend on the thread count") {
  auto g = build(double_torus_grid(4));
  auto a = minimum_homology_basis(g);
  BasisOptions opt;
  opt.threads = 4;
  auto b = minimum_homology_basis(g, opt);
  REQUIRE(a.cycles.size() == b.cycles.size());
  for (std::size_t i = 0; i < a.cycles.size(); ++i) CHECK(a.cycles[i].edges == b.cycles[i].edges);
}

TEST_CASE("even subgraphs split into edge-disjoint simple cycles") {
  std::mt19937_64 rng(25);
  for (const auto& g : suite()) {
    SignatureSystem sigs(g, tree_coforest(g));
    for (int t = 0; t < 20; ++t) {
      auto even = sigs.reconstruct_cycle(testing::random_bits(rng, sigs.dimension()));
      auto parts = decompose_even_subgraph(g, even);
      BitVec acc(g.m());
      std::size_t total = 0;
      for (const auto& p : parts) {
        CHECK(is_simple_cycle(g, p));
        acc ^= edge_vector(g, p);
        total += p.size();
      }
      CHECK(acc == edge_vector(g, even));
      CHECK(total == even.size());
    }
  }
}
