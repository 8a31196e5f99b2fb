#include <doctest.h>

#include <random>

#include "covlab/constructions.hpp"
#include "covlab/cover.hpp"
#include "covlab/error.hpp"

using namespace covlab;

namespace {

Hypergraph random_uniform(std::mt19937& rng, int n, int r, int m) {
  std::vector<VertexSet> edges;
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
  while (static_cast<int>(edges.size()) < m) {
    std::shuffle(pool.begin(), pool.end(), rng);
    VertexSet e;
    for (int i = 0; i < r; ++i) e.set(pool[static_cast<std::size_t>(i)]);
    if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
  }
  return Hypergraph(n, edges);
}

}  // namespace

TEST_CASE("named covering numbers") {
  CHECK(covering_number(tetrahedron()).tau == 2);
  CHECK(covering_number(fano_plane()).tau == 3);
  CHECK(covering_number(fano_complement()).tau == 3);
  CHECK(covering_number(paley_biplane()).tau == 4);
  CHECK(covering_number(kummer()).tau == 4);
  CHECK(covering_number(complete_subsets(7, 4)).tau == 4);
  CHECK(covering_number(complete_subsets(8, 5)).tau == 4);
}

TEST_CASE("solver matches the oracle on random instances") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 6 + trial % 7;
    const int r = 2 + trial % 3;
    const int m = 3 + trial % 9;
    const Hypergraph h = random_uniform(rng, n, r, m);
    const TauResult fast = covering_number(h);
    const TauResult slow = covering_number_oracle(h);
    REQUIRE(fast.tau == slow.tau);
    CHECK(is_cover(h, fast.witness.vertices));
    CHECK(fast.witness.size() == fast.tau);
    CHECK(fast.exhaustive);
  }
}

TEST_CASE("decision mode agrees with the exact value") {
  const Hypergraph h = paley_biplane();
  CHECK_FALSE(find_cover(h, 3).has_value());
  const auto cover = find_cover(h, 4);
  REQUIRE(cover.has_value());
  CHECK(is_cover(h, cover->vertices));
  CHECK(cover->size() <= 4);
}

TEST_CASE("witnesses are deterministic") {
  const Hypergraph h = projective_plane(3).incidence;
  const TauResult a = covering_number(h);
  const TauResult b = covering_number(h);
  CHECK(a.witness.vertices == b.witness.vertices);
}

TEST_CASE("greedy bounds") {
  CHECK(greedy_tau_upper(7, 3) == 3);
  CHECK(greedy_tau_upper(4, 4) == 1);
  for (const Hypergraph& h : {fano_plane(), paley_biplane(), kummer()}) {
    const CoverCertificate c = greedy_pair_cover(h);
    CHECK(is_cover(h, c.vertices));
  }
  CHECK_THROWS_AS(max_degree_cap(3, 5, 5, false), Error);
}

TEST_CASE("min-degree cover on 2-intersecting families") {
  const Hypergraph h = three_hares(ThreeHares::Base);
  // Vertex 0 lies in one edge; r-1 = 4 bounds its degree.
  const CoverCertificate c = mindeg_cover(h, 0);
  CHECK(is_cover(h, c.vertices));
  CHECK(c.size() <= 3);
  CHECK_THROWS_AS(mindeg_cover(fano_plane(), 0), Error);
}
