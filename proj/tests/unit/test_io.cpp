#include <doctest.h>

#include "covlab/canonical.hpp"
#include "covlab/catalog.hpp"
#include "covlab/constructions.hpp"
#include "covlab/error.hpp"
#include "covlab/io.hpp"

using namespace covlab;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("incidence round trip") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    const Hypergraph h = catalog(name).hypergraph;
    CHECK(parse_incidence(serialize_incidence(h)) == h);
  }
}

TEST_CASE("block round trip") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    const Hypergraph h = catalog(name).hypergraph;
    CHECK(canonical_form(parse_blocks(serialize_blocks(h)).hypergraph) == canonical_form(h));
  }
}

TEST_CASE("blocks keep dense labels and compact sparse ones") {
  const BlockList tet = parse_blocks("0 1 2\n0 1 3\n0 2 3\n1 2 3\n");
  CHECK_FALSE(tet.compacted);
  CHECK(are_isomorphic(tet.hypergraph, tetrahedron()));

  const BlockList sparse = parse_blocks("# sparse\n10 20 30\n10 20 40\n");
  CHECK(sparse.compacted);
  CHECK(sparse.name == "sparse");
  CHECK(sparse.hypergraph.num_vertices() == 4);
  CHECK(sparse.original_label == std::vector<long long>{10, 20, 30, 40});
  CHECK(sparse.vertex_for_label(40) == 3);
  CHECK(sparse.vertex_for_label(5) == -1);
}

TEST_CASE("malformed input") {
  CHECK(code_of([] { parse_incidence("101\n10\n"); }) == ErrorCode::RaggedMatrix);
  CHECK(code_of([] { parse_incidence("102\n"); }) == ErrorCode::NonBinaryCharacter);
  CHECK(code_of([] { parse_blocks("0 1\n\n1 2\n"); }) == ErrorCode::EmptyBlock);
  CHECK(code_of([] { parse_blocks("0 1\n1 0\n"); }) == ErrorCode::DuplicateEdge);
}

TEST_CASE("format detection") {
  CHECK(detect_format("0110\n1011\n") == InputFormat::Incidence);
  CHECK(detect_format("0 1 2\n1 2 3\n") == InputFormat::Blocks);
}

TEST_CASE("level dumps") {
  const std::vector<Hypergraph> classes{fano_plane(), oval_lines(3)};
  const LevelDump d = parse_level_dump(serialize_level_dump(10, 3, classes));
  CHECK(d.level == 10);
  CHECK(d.q == 3);
  REQUIRE(d.classes.size() == 2);
  CHECK(d.classes[0] == classes[0]);
  CHECK(d.classes[1] == classes[1]);
}
