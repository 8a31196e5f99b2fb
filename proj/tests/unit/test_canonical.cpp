#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "covlab/canonical.hpp"
#include "covlab/catalog.hpp"
#include "covlab/constructions.hpp"

using namespace covlab;

namespace {

std::vector<int> shuffled(int n, std::mt19937& rng) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

bool is_automorphism(const Hypergraph& h, const std::vector<int>& g) { return h.relabeled(g) == h; }

}  // namespace

TEST_CASE("forms are invariant under relabeling") {
  std::mt19937 rng(11);
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    const Hypergraph h = catalog(name).hypergraph;
    const CanonicalForm f = canonical_form(h);
    for (int trial = 0; trial < 5; ++trial) {
      CHECK(canonical_form(h.relabeled(shuffled(h.num_vertices(), rng))) == f);
    }
  }
}

TEST_CASE("forms separate non-isomorphic hypergraphs") {
  // Fano with one line swapped for a triangle is no longer a plane.
  const Hypergraph fano = fano_plane();
  VertexSet triangle;
  for (int v = 0; v < 7 && triangle.count() < 3; ++v) {
    VertexSet t = triangle;
    t.set(v);
    bool on_line = false;
    for (const auto& e : fano.edges()) on_line = on_line || (t.count() == 3 && t == e);
    if (!on_line) triangle = t;
  }
  REQUIRE(triangle.count() == 3);
  const Hypergraph other = fano.without_edge(0).with_edge(triangle);
  CHECK_FALSE(are_isomorphic(fano, other));
  CHECK_FALSE(are_isomorphic(paley_biplane(), complete_subsets(11, 5)));
  CHECK(are_isomorphic(cross_grid(2, 2), tetrahedron()));
}

TEST_CASE("representatives are fixed points") {
  for (const Hypergraph& h : {kummer(), paley_biplane(), oval_lines(3)}) {
    const Hypergraph rep = canonical_representative(h);
    CHECK(are_isomorphic(rep, h));
    CHECK(canonical_representative(rep) == rep);
  }
}

TEST_CASE("automorphism generators") {
  // |Aut PG(2,2)| = 168: every generator is an automorphism and the edge
  // orbits collapse to one.
  const Hypergraph fano = fano_plane();
  const CanonicalLabeling lab = canonical_labeling(fano);
  CHECK_FALSE(lab.generators.empty());
  for (const auto& g : lab.generators) CHECK(is_automorphism(fano, g));
  const auto orbits = edge_orbits(fano, lab.generators);
  CHECK(std::all_of(orbits.begin(), orbits.end(), [](int o) { return o == 0; }));

  // Edge colors restrict the group.
  std::vector<int> colors(7, 0);
  colors[0] = 1;
  const CanonicalLabeling colored = canonical_labeling(fano, colors);
  const auto colored_orbits = edge_orbits(fano, colored.generators);
  CHECK(colored_orbits[0] == 0);
  CHECK(std::count(colored_orbits.begin(), colored_orbits.end(), 0) == 1);
}

TEST_CASE("dedup is idempotent and order independent") {
  std::mt19937 rng(3);
  std::vector<Hypergraph> pool;
  for (const Hypergraph& h : {fano_plane(), fano_complement(), tetrahedron(), kummer()}) {
    for (int i = 0; i < 3; ++i) pool.push_back(h.relabeled(shuffled(h.num_vertices(), rng)));
  }
  const auto once = dedup(pool);
  CHECK(once.size() == 4);
  CHECK(dedup(once) == once);
  std::reverse(pool.begin(), pool.end());
  CHECK(dedup(pool) == once);
  // Shards merged in any grouping give the same list.
  std::vector<Hypergraph> left(pool.begin(), pool.begin() + 5);
  std::vector<Hypergraph> right(pool.begin() + 5, pool.end());
  auto merged = dedup(left);
  for (const auto& h : dedup(right)) merged.push_back(h);
  CHECK(dedup(merged) == once);
}
