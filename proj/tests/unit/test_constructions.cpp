#include <doctest.h>

#include "covlab/canonical.hpp"
#include "covlab/catalog.hpp"
#include "covlab/constructions.hpp"
#include "covlab/cover.hpp"
#include "covlab/error.hpp"
#include "covlab/field.hpp"
#include "covlab/io.hpp"

using namespace covlab;

TEST_CASE("finite fields") {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    CAPTURE(q);
    const FiniteField f(q);
    CHECK(f.order() == q);
    for (int a = 1; a < q; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
    for (int a = 0; a < q; ++a) CHECK(f.add(a, f.neg(a)) == 0);
  }
  CHECK(FiniteField(4).characteristic() == 2);
  CHECK(FiniteField(9).characteristic() == 3);
  CHECK_FALSE(is_supported_field_order(6));
  CHECK_THROWS_AS(FiniteField(6), Error);
}

TEST_CASE("projective planes") {
  for (int q : {2, 3, 4, 5, 7}) {
    CAPTURE(q);
    const ProjectivePlane p = projective_plane(q);
    const int n = q * q + q + 1;
    CHECK(p.incidence.num_vertices() == n);
    CHECK(p.incidence.num_edges() == n);
    CHECK(is_uniform(p.incidence, q + 1));
    const IntersectionProfile lines = intersection_profile(p.incidence);
    CHECK(lines.t_min == 1);
    CHECK(lines.t_max == 1);
    const IntersectionProfile points = intersection_profile(p.incidence.dual());
    CHECK(points.t_min == 1);
    CHECK(points.t_max == 1);
  }
  CHECK(covering_number(projective_plane(2).incidence).tau == 3);
  try {
    projective_plane(6);
    FAIL("order 6 accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedOrder);
  }
}

TEST_CASE("named configurations") {
  CHECK(are_isomorphic(projective_plane(2).incidence, fano_plane()));
  CHECK(is_uniform(fano_complement(), 4));
  CHECK(is_t_intersecting(fano_complement(), 2));
  // Rows are vertices, columns are edges.
  const Hypergraph published = parse_incidence(
      "1000111\n1011001\n1101010\n1110100\n0110011\n0101101\n0011110\n");
  CHECK(are_isomorphic(published, fano_complement()));

  const Hypergraph c = cross_grid(3, 3);
  CHECK(c.num_vertices() == 9);
  CHECK(is_uniform(c, 5));
  CHECK(is_t_intersecting(c, 2));
  CHECK(is_uniform(cross_grid(2, 4), 5));
  CHECK(is_uniform(kummer(), 6));
  CHECK(is_t_intersecting(kummer(), 2));
  CHECK(is_uniform(paley_biplane(), 5));
  CHECK(is_t_intersecting(paley_biplane(), 2));
  CHECK(complete_subsets(8, 5).num_edges() == 56);

  const Hypergraph hares = three_hares(ThreeHares::Extended);
  CHECK(hares.num_edges() == 6);
  CHECK(is_t_intersecting(hares, 2));
  const DegreeProfile p = degree_profile(hares);
  CHECK(p.min_degree == 3);
  CHECK(p.max_degree == 3);
}

TEST_CASE("oval lines") {
  for (int q : {3, 4, 5}) {
    CAPTURE(q);
    const Hypergraph h = oval_lines(q);
    CHECK(h.num_edges() == (q + 1) * (q + 2) / 2);
    CHECK(covering_number(h).tau == q + 1);
  }
}

TEST_CASE("AG(2,3) based configuration has a 4-cover") {
  const Hypergraph h = ag23_dual();
  CHECK(h.num_edges() == 12);
  CHECK(is_t_intersecting(h, 1));
  CHECK(covering_number(h).tau <= 4);
}

TEST_CASE("catalog entries are verified on load") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    const CatalogEntry e = catalog(name);
    CHECK(e.hypergraph.num_vertices() == e.expected.n);
    CHECK(e.hypergraph.num_edges() == e.expected.m);
  }
  CHECK_THROWS_AS(catalog("no_such_thing"), Error);
  const CatalogEntry m6 = catalog("m6_unique");
  CHECK(m6.hypergraph.num_vertices() == 31);
  CHECK(m6.hypergraph.num_edges() == 18);
  CHECK(embed_in_plane(m6.hypergraph, projective_plane(5)).has_value());
  CHECK(embed_in_plane(catalog("m5_example").hypergraph, projective_plane(4)).has_value());
}
