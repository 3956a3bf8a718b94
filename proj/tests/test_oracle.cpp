#include <doctest.h>

#include <random>
#include <set>

#include "helpers.hpp"
#include "surfbasis/basis.hpp"
#include "surfbasis/errors.hpp"
#include "surfbasis/signatures.hpp"

using namespace surfbasis;
using testing::build;
using testing::fixture;

namespace {

EmbeddingDescription permute_edges(const EmbeddingDescription& d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<EdgeId> perm(d.edges.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<EdgeId>(i);
  std::shuffle(perm.begin(), perm.end(), rng);  // perm[old] = new
  EmbeddingDescription out = d;
  for (std::size_t e = 0; e < d.edges.size(); ++e) out.edges[static_cast<std::size_t>(perm[e])] = d.edges[e];
  auto map = [&](DartId x) { return 2 * perm[static_cast<std::size_t>(edge_of(x))] + (x & 1); };
  for (auto& rot : out.rotation) {
    for (auto& x : rot) x = map(x);
  }
  for (auto& x : out.boundary_darts) x = map(x);
  return out;
}

}  // namespace

TEST_CASE("cycle space of a tree") {
  auto g = EmbeddedGraph::build(parse_instance("v 2\ne a 0 1 1 0\nrot 0 a-\nrot 1 a+\n"));
  auto space = enumerate_cycle_space(g);
  CHECK(space.dimension == 0);
  REQUIRE(space.elements.size() == 1);
  CHECK(space.elements[0].none());
}

TEST_CASE("cycle space of theta") {
  auto g = fixture("theta.txt");
  auto space = enumerate_cycle_space(g);
  std::set<std::vector<EdgeId>> got;
  for (const auto& c : space.elements) got.insert(edge_list(c));
  std::set<std::vector<EdgeId>> want{{}, testing::edges_named(g, {"a", "b"}), testing::edges_named(g, {"a", "c"}),
                                     testing::edges_named(g, {"b", "c"})};
  CHECK(got == want);
}

TEST_CASE("cycle space of the tetrahedron") {
  auto space = enumerate_cycle_space(fixture("k4s.txt"));
  CHECK(space.elements.size() == 8);
}

TEST_CASE("enumeration is complete and closed under xor") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    auto g = build(random_rotation(4 + seed % 4, 6 + seed % 5, seed, seed % 2 == 0));
    auto space = enumerate_cycle_space(g);
    CHECK(space.elements.size() == (std::size_t{1} << (g.m() + 1 - g.n())));
    std::set<std::string> keys;
    for (const auto& c : space.elements) {
      CHECK(is_even_subgraph(g, edge_list(c)));
      keys.insert(c.to_string());
    }
    CHECK(keys.size() == space.elements.size());
    std::mt19937_64 rng(seed);
    for (int t = 0; t < 50; ++t) {
      const auto& a = space.elements[rng() % space.elements.size()];
      const auto& b = space.elements[rng() % space.elements.size()];
      CHECK(keys.count((a ^ b).to_string()) == 1);
    }
  }
  CHECK_THROWS_AS(enumerate_cycle_space(build(torus_grid(5))), InputError);
}

TEST_CASE("greedy cycle bases of the fixtures") {
  CHECK(greedy_mcb(fixture("theta.txt")).total_weight == 7);
  auto k4 = greedy_mcb(fixture("k4s.txt"));
  CHECK(k4.total_weight == 9);
  CHECK(k4.cycles.size() == 3);
  CHECK(greedy_mcb(fixture("torus1.txt")).total_weight == 2);
}

TEST_CASE("greedy homology bases of the fixtures") {
  auto k4 = greedy_mhb(fixture("k4s.txt"));
  CHECK(k4.cycles.empty());
  CHECK(k4.total_weight == 0);
  CHECK(greedy_mhb(fixture("torus1.txt")).total_weight == 2);
  CHECK(greedy_mhb(fixture("pp1.txt")).total_weight == 1);
}

TEST_CASE("oracle cycle basis weight ignores edge numbering") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    auto d = random_rotation(5 + seed % 3, 9 + seed % 4, seed);
    auto w = greedy_mcb(build(d)).total_weight;
    for (std::uint64_t p = 1; p <= 3; ++p) CHECK(greedy_mcb(build(permute_edges(d, seed * 7 + p))).total_weight == w);
  }
}

TEST_CASE("class minima agree with enumeration") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto d = random_rotation(4 + seed % 5, 7 + seed % 6, seed, seed % 3 != 0);
    auto g = seed % 2 ? build(d) : puncture_if_closed(build(d));
    CHECK(greedy_mhb_by_classes(g).total_weight == greedy_mhb_by_enumeration(g).total_weight);
  }
  for (auto d : {torus_grid(3), klein_grid(3), projective_grid(3), double_torus_grid(3)}) {
    auto g = puncture_if_closed(build(d));
    CHECK(greedy_mhb_by_classes(g).total_weight == greedy_mhb_by_enumeration(g).total_weight);
  }
}

TEST_CASE("cocycle labels detect null-homologous cycles") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = build(random_rotation(5, 9 + seed % 3, seed, seed % 2 == 0));
    if (seed % 3 == 0) g = puncture_if_closed(g);
    auto cocycles = cocycle_basis(g);
    CHECK(static_cast<long>(cocycles.size()) == topo_stats(g).beta);
    for (const auto& c : enumerate_cycle_space(g).elements) {
      auto edges = edge_list(c);
      CHECK(homology_label(cocycles, edges).none() == testing::bounds_faces_brute(g, edges));
    }
  }
}

TEST_CASE("greedy homology basis cycles are independent modulo faces") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto g = puncture_if_closed(build(random_rotation(5, 10, seed, seed % 2 == 0)));
    auto basis = greedy_mhb_by_enumeration(g);
    auto cocycles = cocycle_basis(g);
    std::vector<BitVec> labels;
    for (const auto& c : basis.cycles) labels.push_back(homology_label(cocycles, c));
    CHECK(rank(labels) == cocycles.size());
  }
}
