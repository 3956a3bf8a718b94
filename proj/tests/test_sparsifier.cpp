#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "surfbasis/basis.hpp"
#include "surfbasis/mcb.hpp"
#include "surfbasis/mhb.hpp"
#include "surfbasis/shortest_paths.hpp"
#include "surfbasis/sparsifier.hpp"

using namespace surfbasis;
using testing::build;
using testing::fixture;

namespace {

EmbeddedGraph parse(const std::string& text) { return EmbeddedGraph::build(parse_instance(text)); }

// Torus bouquet plus a weight-5 loop whose two ends are adjacent in the
// rotation, so it bounds a face of degree 1.
const char* kTorusWithLoop =
    "v 1\n"
    "e x 0 0 1 0\n"
    "e y 0 0 1 0\n"
    "e l 0 0 5 0\n"
    "rot 0 x- y- x+ y+ l- l+\n";

}  // namespace

TEST_CASE("all pairs on theta") {
  auto g = fixture("theta.txt");
  auto ap = all_pairs_shortest(g);
  CHECK(ap.dist(0, 1) == 1);
  CHECK(ap.path(0, 1) == std::vector<EdgeId>{testing::edge_named(g, "a")});
  CHECK(ap.dist(1, 1) == 0);
  CHECK(ap.path(1, 1).empty());
}

TEST_CASE("all pairs on the 3x3 torus grid") {
  auto g = fixture("grid_t3.txt");
  auto ap = all_pairs_shortest(g);
  // (0,0) to (2,2) wraps around in both directions.
  CHECK(testing::bellman_ford(g, 0)[8] == 2);
  CHECK(ap.dist(0, 8) == 2);
}

TEST_CASE("shortest paths agree with Bellman-Ford and are realised by their paths") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = build(random_rotation(7, 14, seed));
    auto ap = all_pairs_shortest(g, 1 + seed % 3);
    for (std::size_t u = 0; u < g.n(); ++u) {
      auto bf = testing::bellman_ford(g, static_cast<VertexId>(u));
      for (std::size_t v = 0; v < g.n(); ++v) {
        CHECK(ap.dist(static_cast<VertexId>(u), static_cast<VertexId>(v)) == bf[v]);
        auto p = ap.path(static_cast<VertexId>(u), static_cast<VertexId>(v));
        CHECK(testing::total(g, p) == bf[v]);
        VertexId at = static_cast<VertexId>(u);
        for (EdgeId e : p) at = g.other_end(e, at);
        CHECK(at == static_cast<VertexId>(v));
      }
    }
  }
}

TEST_CASE("perturbed shortest paths are symmetric") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto g = build(random_rotation(6, 12, seed));
    // Unit weights make ties common.
    auto d = g.description();
    for (auto& e : d.edges) e.weight = 1;
    auto h = build(d);
    auto ap = all_pairs_shortest(h);
    for (std::size_t u = 0; u < h.n(); ++u) {
      for (std::size_t v = 0; v < h.n(); ++v) {
        auto a = ap.path(static_cast<VertexId>(u), static_cast<VertexId>(v));
        auto b = ap.path(static_cast<VertexId>(v), static_cast<VertexId>(u));
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        CHECK(a == b);
      }
    }
  }
}

TEST_CASE("theta sparsifies to a sphere path") {
  auto g = fixture("theta.txt");
  auto out = sparsify(g);
  REQUIRE(out.forced_mcb.size() == 2);
  CHECK(out.forced_mcb[0] == testing::edges_named(g, {"a", "b"}));
  CHECK(out.forced_mcb[1] == testing::edges_named(g, {"a", "c"}));
  CHECK(out.forced_mhb.empty());
  CHECK(out.terminal == SparsifyTerminal::SpherePath);
  CHECK(testing::total(g, out.forced_mcb[0]) + testing::total(g, out.forced_mcb[1]) == 7);
}

TEST_CASE("a loop around a degree-1 face is forced into the cycle basis only") {
  auto g = parse(kTorusWithLoop);
  REQUIRE(g.num_faces() == 2);
  auto out = sparsify(g);
  REQUIRE(out.forced_mcb.size() == 1);
  CHECK(out.forced_mcb[0] == std::vector<EdgeId>{testing::edge_named(g, "l")});
  CHECK(out.forced_mhb.empty());
  CHECK(minimum_homology_basis(g).total_weight == 2);
  CHECK(minimum_cycle_basis(g).total_weight == 7);
}

TEST_CASE("already sparse input is left alone") {
  auto g = fixture("k4s.txt");
  auto out = sparsify(g);
  CHECK(out.forced_mcb.empty());
  CHECK(out.forced_mhb.empty());
  CHECK(out.terminal == SparsifyTerminal::None);
  CHECK(out.residual.m() == g.m());
}

TEST_CASE("terminal cases") {
  auto pp = sparsify(fixture("pp1.txt"));
  CHECK(pp.terminal == SparsifyTerminal::ProjectiveLoop);
  CHECK(pp.forced_mcb == std::vector<std::vector<EdgeId>>{{0}});
  CHECK(pp.forced_mhb == std::vector<std::vector<EdgeId>>{{0}});

  auto bare = sparsify(parse("v 1\ne l 0 0 2 0\nrot 0 l- l+\n"));
  CHECK(bare.terminal == SparsifyTerminal::BareLoop);
  CHECK(bare.forced_mcb == std::vector<std::vector<EdgeId>>{{0}});
  CHECK(bare.forced_mhb.empty());

  auto path = sparsify(parse("v 2\ne a 0 1 1 0\nrot 0 a-\nrot 1 a+\nbnd a-\n"));
  CHECK(path.terminal == SparsifyTerminal::SpherePath);
  CHECK(path.forced_mcb.empty());

  auto point = sparsify(parse("v 1\n"));
  CHECK(point.forced_mcb.empty());
}

TEST_CASE("residuals have no small inner faces and respect the Euler bound") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto base = random_rotation(5 + seed % 4, 9 + seed % 5, seed, seed % 3 != 0);
    auto g = build(inject_degenerate_faces(base, 2 + seed % 6, seed));
    auto out = sparsify(g);
    CHECK(out.edge_map.size() == out.residual.m());

    std::set<std::vector<EdgeId>> distinct(out.forced_mcb.begin(), out.forced_mcb.end());
    CHECK(distinct.size() == out.forced_mcb.size());
    for (const auto& c : out.forced_mcb) CHECK(is_simple_cycle(g, c));
    for (const auto& c : out.forced_mhb) {
      CHECK(std::find(out.forced_mcb.begin(), out.forced_mcb.end(), c) != out.forced_mcb.end());
    }
    for (std::size_t e = 0; e < out.residual.m(); ++e) {
      const auto& r = out.residual.edge(static_cast<EdgeId>(e));
      const auto& o = g.edge(out.edge_map[e]);
      CHECK(r.weight == o.weight);
      CHECK(r.label == o.label);
    }
    if (out.terminal != SparsifyTerminal::None) continue;
    for (std::size_t f = 0; f < out.residual.num_faces(); ++f) {
      if (out.residual.is_boundary(static_cast<FaceId>(f))) continue;
      CHECK(out.residual.face(static_cast<FaceId>(f)).darts.size() >= 3);
    }
    auto s = topo_stats(out.residual);
    // 3 (faces - b) <= 2m once every inner face has degree >= 3.
    CHECK(static_cast<long>(s.m) <= 3 * (static_cast<long>(s.n) - s.euler_char) + 2 * static_cast<long>(s.boundary));
    CHECK(s.euler_char == topo_stats(g).euler_char);
    CHECK(s.orientable == topo_stats(g).orientable);
  }
}

TEST_CASE("forced cycles plus the residual basis match the oracle") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    auto base = random_rotation(5, 9, seed);
    auto g = build(inject_degenerate_faces(base, 4, seed + 100));
    auto mcb = minimum_cycle_basis(g);
    CHECK(mcb.total_weight == greedy_mcb(g).total_weight);
    auto mhb = minimum_homology_basis(g);
    CHECK(mhb.total_weight == greedy_mhb(mhb.graph).total_weight);
  }
}

TEST_CASE("remove_edge merges the two faces") {
  auto g = fixture("k4s.txt");
  auto h = remove_edge(g, 0);
  CHECK(h.m() == 5);
  CHECK(h.num_faces() == 3);
  CHECK(h.num_boundary() == 1);
  CHECK(h.edge(0).label == g.edge(1).label);
}
