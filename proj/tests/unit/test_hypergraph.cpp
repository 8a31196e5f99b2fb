#include <doctest.h>

#include "covlab/error.hpp"
#include "covlab/hypergraph.hpp"

using namespace covlab;

TEST_CASE("vertex sets span both words") {
  VertexSet s{0, 63, 64, 127};
  CHECK(s.count() == 4);
  CHECK(s.first() == 0);
  CHECK(s.last() == 127);
  CHECK(s.to_vector() == std::vector<int>{0, 63, 64, 127});
  CHECK(VertexSet::prefix(70).count() == 70);
  CHECK(VertexSet::prefix(128).count() == 128);
  CHECK(s.intersection_size(VertexSet{63, 64, 5}) == 2);
}

TEST_CASE("construction validates edges") {
  CHECK_THROWS_AS(Hypergraph(3, std::vector<std::vector<int>>{{0, 3}}), Error);
  CHECK_THROWS_AS(Hypergraph(3, std::vector<std::vector<int>>{{}}), Error);
  CHECK_THROWS_AS(Hypergraph(3, std::vector<std::vector<int>>{{0, 1}, {1, 0}}), Error);
  CHECK_THROWS_AS(Hypergraph(129, std::vector<std::vector<int>>{{0}}), Error);
  try {
    Hypergraph(3, std::vector<std::vector<int>>{{0, 1}, {1, 0}});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DuplicateEdge);
  }
}

TEST_CASE("equality ignores edge order") {
  const Hypergraph a(4, std::vector<std::vector<int>>{{0, 1}, {2, 3}});
  const Hypergraph b(4, std::vector<std::vector<int>>{{2, 3}, {0, 1}});
  CHECK(a == b);
  CHECK_FALSE(a == Hypergraph(5, std::vector<std::vector<int>>{{0, 1}, {2, 3}}));
}

TEST_CASE("degrees, dual and relabeling") {
  const Hypergraph h(4, std::vector<std::vector<int>>{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}});
  CHECK(h.degrees() == std::vector<int>{3, 2, 2, 2});
  const Hypergraph d = h.dual();
  CHECK(d.num_vertices() == 3);
  CHECK(d.num_edges() == 4);
  CHECK(d.dual() == h);
  const std::vector<int> perm{3, 2, 1, 0};
  CHECK(h.relabeled(perm).degrees() == std::vector<int>{2, 2, 2, 3});
  CHECK(h.without_edge(0).num_edges() == 2);
  CHECK(h.without_edge(0).with_edge(VertexSet{0, 1, 2}) == h);
}

TEST_CASE("uniformity and intersection levels") {
  const Hypergraph tet(4, std::vector<std::vector<int>>{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  CHECK(is_uniform(tet, 3));
  CHECK(uniformity(tet) == 3);
  CHECK(is_t_intersecting(tet, 2));
  CHECK_FALSE(is_t_intersecting(tet, 3));
  const IntersectionProfile p = intersection_profile(tet);
  CHECK(p.sizes.size() == 6);
  CHECK(p.t_min == 2);
  CHECK(p.t_max == 2);
  CHECK(uniformity(Hypergraph(3, std::vector<std::vector<int>>{{0}, {1, 2}})) == 0);
}

TEST_CASE("pair counting and the degree lemma") {
  // Four 2-intersecting triples: sum d(d-1) = 4*3*2 = 24 >= 2*4*3.
  const std::vector<int> tet_degrees{3, 3, 3, 3};
  CHECK(pair_count_feasible(tet_degrees, 4, 2));
  const std::vector<int> thin{1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1};
  CHECK_FALSE(pair_count_feasible(thin, 4, 1));
  CHECK(degree_force_bound(5, 1) == 1);
  CHECK(degree_force_bound(5, 8) == 4);
  CHECK(degree_force_bound(5, 9) == 5);
}
