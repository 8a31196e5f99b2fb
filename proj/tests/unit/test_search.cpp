#include <doctest.h>

#include "covlab/canonical.hpp"
#include "covlab/catalog.hpp"
#include "covlab/constructions.hpp"
#include "covlab/cover.hpp"
#include "covlab/descent.hpp"
#include "covlab/error.hpp"
#include "covlab/search.hpp"
#include "covlab/verification.hpp"

using namespace covlab;

namespace {

SearchSpec make_spec(int r, int t, int n, int m, int lo = 1, int hi = 0) {
  SearchSpec s;
  s.r = r;
  s.t = t;
  s.n = n;
  s.m = m;
  s.min_degree = lo;
  s.max_degree = hi;
  return s;
}

}  // namespace

TEST_CASE("SearchSpec validation") {
  CHECK_THROWS_AS(make_spec(4, 1, 3, 2).validate(), Error);
  CHECK_THROWS_AS(make_spec(3, 1, 6, 2, 3, 2).validate(), Error);
  try {
    make_spec(3, 1, 200, 2).validate();
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CapacityExceeded);
  }
  CHECK(min_vertex_bound(5, 12, 4) == 15);
  CHECK(min_vertex_bound(5, 13, 4) == 17);
  CHECK(min_vertex_bound(4, 9, 4) == 9);
}

TEST_CASE("pair count bound") {
  const std::vector<int> zero(4, 0);
  // 8 incidences on 4 vertices with cap 3: best is 3,3,2,0 -> 6+6+2.
  CHECK(max_pair_count(zero, 3, 8) == 14);
  CHECK(max_pair_count(zero, 3, 13) == -1);
}

TEST_CASE("generation matches brute force on small cases") {
  for (int n = 3; n <= 6; ++n) {
    for (int m = 1; m <= 5; ++m) {
      CAPTURE(n);
      CAPTURE(m);
      const SearchSpec spec = make_spec(3, 1, n, m);
      const SearchReport report = generate(spec, {true, 1});
      const auto naive = naive_class_keys(spec);
      REQUIRE(report.class_count == naive.size());
      std::vector<std::vector<VertexSet>> keys;
      for (const auto& h : report.representatives) keys.push_back(brute_force_key(h));
      std::sort(keys.begin(), keys.end());
      CHECK(keys == naive);
    }
  }
}

TEST_CASE("representatives are sound") {
  SearchSpec spec = make_spec(4, 2, 7, 7, 2, 5);
  const SearchReport report = generate(spec, {true, 1});
  CHECK(report.class_count == report.representatives.size());
  for (const auto& h : report.representatives) {
    CHECK(is_uniform(h, 4));
    CHECK(is_t_intersecting(h, 2));
    const DegreeProfile p = degree_profile(h);
    CHECK(p.min_degree >= 2);
    CHECK(p.max_degree <= 5);
  }
  CHECK(dedup(report.representatives).size() == report.representatives.size());
}

TEST_CASE("thread count does not change the report") {
  SearchSpec spec = make_spec(4, 1, 10, 9, 2, 4);
  spec.target_tau = 4;
  const SearchReport one = generate(spec, {true, 1});
  const SearchReport two = generate(spec, {true, 2});
  CHECK(one.class_count == 3295);
  CHECK(one.class_count == two.class_count);
  CHECK(one.nodes == two.nodes);
  CHECK(one.representatives == two.representatives);
  CHECK(one.extremal == two.extremal);
}

TEST_CASE("q(4) extremal class") {
  SearchSpec spec = make_spec(4, 1, 11, 9, 2, max_degree_cap(9, 4, 4, false));
  spec.target_tau = 4;
  const SearchReport report = generate(spec, {false, 1});
  CHECK(report.class_count == 1592);
  REQUIRE(report.extremal_count == 1);
  CHECK(are_isomorphic(report.extremal.front(), catalog("q4_unique").hypergraph));
}

TEST_CASE("5-uniform 2-intersecting, 10 vertices, 12 edges") {
  const SearchReport report = generate(make_spec(5, 2, 10, 12, 5, 6), {true, 1});
  CHECK(report.class_count == 1);
}

TEST_CASE("2-intersecting classification") {
  const ClassificationReport three = verify_classification(3, {true, 1});
  REQUIRE(three.classes.size() == 1);
  CHECK(are_isomorphic(three.classes.front(), complete_subsets(4, 3)));
  const ClassificationReport four = verify_classification(4, {true, 1});
  REQUIRE(four.classes.size() == 2);
  const bool found_k64 = are_isomorphic(four.classes[0], complete_subsets(6, 4)) ||
                         are_isomorphic(four.classes[1], complete_subsets(6, 4));
  const bool found_fano = are_isomorphic(four.classes[0], fano_complement()) ||
                          are_isomorphic(four.classes[1], fano_complement());
  CHECK(found_k64);
  CHECK(found_fano);
}

TEST_CASE("descent in small planes") {
  const DescentResult d2 = descend(2);
  CHECK(d2.complete);
  CHECK(d2.m == 6);
  const DescentResult d3 = descend(3);
  CHECK(d3.m == 10);
  const DescentResult d4 = descend(4);
  CHECK(d4.m == 14);
  for (const auto& level : d4.levels) {
    for (const auto& h : level.extremal) {
      CHECK(degree_profile(h).min_degree >= 2);
      CHECK(!find_cover(h, 4));
    }
  }
  CHECK_THROWS_AS(descend(6), Error);
}

TEST_CASE("descent frontier modes agree on m") {
  DescentOptions narrow;
  narrow.extremal_frontier = true;
  const DescentResult a = descend(4, narrow);
  const DescentResult b = descend(4);
  CHECK(a.m == b.m);
  CHECK(a.levels.back().class_count <= b.levels.back().class_count);
}

TEST_CASE("descent resumes from a checkpoint") {
  const DescentResult full = descend(4);
  DescentOptions first;
  first.min_edges = 17;
  const DescentResult head = descend(4, first);
  REQUIRE(head.levels.back().edge_count == 17);
  LevelDump dump;
  dump.level = 17;
  dump.q = 4;
  dump.classes = head.levels.back().frontier;
  DescentOptions resume;
  resume.resume = dump;
  const DescentResult tail = descend(4, resume);
  CHECK(tail.m == full.m);
  CHECK(tail.levels.back().class_count == full.levels.back().class_count);
}
