#include "covlab/catalog.hpp"

#include <functional>
#include <string>

#include "covlab/constructions.hpp"
#include "covlab/cover.hpp"
#include "covlab/error.hpp"
#include "covlab/io.hpp"

namespace covlab {

namespace {

constexpr std::string_view kQ4Unique =
    "111000001\n"
    "100110000\n"
    "100011000\n"
    "100000111\n"
    "010100100\n"
    "010010011\n"
    "010001100\n"
    "001100010\n"
    "001010100\n"
    "001001010\n"
    "000101001\n";

constexpr std::string_view kQ5B1 =
    "1111000000000\n"
    "1100000000110\n"
    "1010100100000\n"
    "1000010001001\n"
    "1000001110000\n"
    "0101101000000\n"
    "0100010100010\n"
    "0100000011001\n"
    "0011010010000\n"
    "0010001001010\n"
    "0010001000101\n"
    "0001000101010\n"
    "0001000100101\n"
    "0000111000000\n"
    "0000100010011\n"
    "0000100001100\n"
    "0000010010100\n";

constexpr std::string_view kM5Example =
    "11000000000000\n"
    "00110000000000\n"
    "00001100000000\n"
    "00000011110000\n"
    "00000000001111\n"
    "00000010001000\n"
    "00100001000100\n"
    "00001000100010\n"
    "00010100010001\n"
    "00000000100001\n"
    "00100000010010\n"
    "00000110000100\n"
    "00011001001000\n"
    "10001000010100\n"
    "10100100101000\n"
    "10000001000001\n"
    "10010010000010\n"
    "01000101000010\n"
    "01101010000001\n"
    "01000000011000\n"
    "01010000100100\n";

constexpr std::string_view kM6Unique =
    "111000000000000000\n"
    "000110000000000000\n"
    "000001110000000000\n"
    "000000001110000000\n"
    "000000000001111100\n"
    "000000000000000011\n"
    "000001001001000000\n"
    "000100000100100010\n"
    "000010000010010000\n"
    "000000100000001001\n"
    "000000010000000100\n"
    "100000100000100000\n"
    "100101000000010000\n"
    "100010001000000101\n"
    "100000010011000010\n"
    "100000000100001000\n"
    "010000010100010001\n"
    "010100100010000100\n"
    "010011000000001010\n"
    "010000001000100000\n"
    "010000000001000000\n"
    "000000000010001000\n"
    "000100000001000001\n"
    "000010010000100000\n"
    "000001000100000100\n"
    "000000101000010010\n"
    "001000000000000110\n"
    "001100011000001000\n"
    "001010100101000000\n"
    "001000000000010000\n"
    "001001000010100001\n";

struct Recipe {
  std::string_view name;
  std::string_view description;
  std::function<Hypergraph()> build;
  ExpectedProperties expected;
};

const std::vector<Recipe>& recipes() {
  static const std::vector<Recipe> table = {
      {"q4_unique", "the unique 4-uniform intersecting hypergraph with 9 edges and covering number 4",
       [] { return parse_incidence(kQ4Unique); }, {11, 9, 4, 1, 4}},
      {"q5_B1", "a 5-uniform intersecting hypergraph with 13 edges and covering number 5",
       [] { return parse_incidence(kQ5B1); }, {17, 13, 5, 1, 5}},
      {"m5_example", "14 lines of PG(2,4) not coverable by 4 points",
       [] { return parse_incidence(kM5Example); }, {21, 14, 5, 1, 5}},
      {"m6_unique", "the unique 18 lines of PG(2,5) not coverable by 5 points",
       [] { return parse_incidence(kM6Unique); }, {31, 18, 6, 1, 6}},
      {"tetrahedron", "biplane of order 1: faces of the tetrahedron", [] { return tetrahedron(); }, {4, 4, 3, 2, 2}},
      {"fano", "PG(2,2)", [] { return fano_plane(); }, {7, 7, 3, 1, 3}},
      {"fano_complement", "biplane of order 2: complements of the Fano lines", [] { return fano_complement(); },
       {7, 7, 4, 2, 3}},
      {"paley", "biplane of order 3 from the quadratic residues mod 11", [] { return paley_biplane(); },
       {11, 11, 5, 2, 4}},
      {"kummer", "biplane of order 4 on the 4x4 grid", [] { return kummer(); }, {16, 16, 6, 2, 4}},
      {"three_hares", "three 5-edges through a common vertex", [] { return three_hares(ThreeHares::Base); },
       {10, 3, 5, 2, 1}},
      {"three_hares_extended", "the 3-regular 2-intersecting 5-uniform hypergraph on 10 vertices",
       [] { return three_hares(ThreeHares::Extended); }, {10, 6, 5, 2, 3}},
      {"three_hares_chain", "three 5-edges in a cycle on 9 vertices", [] { return three_hares(ThreeHares::Chain); },
       {9, 3, 5, 2, 2}},
      {"complete_4_3", "all 3-subsets of a 4-set", [] { return complete_subsets(4, 3); }, {4, 4, 3, 2, 2}},
      {"complete_6_4", "all 4-subsets of a 6-set", [] { return complete_subsets(6, 4); }, {6, 15, 4, 2, 3}},
      {"complete_7_4", "all 4-subsets of a 7-set", [] { return complete_subsets(7, 4); }, {7, 35, 4, 1, 4}},
      {"complete_8_5", "all 5-subsets of an 8-set", [] { return complete_subsets(8, 5); }, {8, 56, 5, 2, 4}},
      {"ag23_dual", "AG(2,3) lines, parallel pairs joined by an extra vertex", [] { return ag23_dual(); },
       {21, 12, 5, 1, 4}},
      {"pg2_3", "PG(2,3)", [] { return projective_plane(3).incidence; }, {13, 13, 4, 1, 4}},
      {"pg2_4", "PG(2,4)", [] { return projective_plane(4).incidence; }, {21, 21, 5, 1, 5}},
      {"pg2_5", "PG(2,5)", [] { return projective_plane(5).incidence; }, {31, 31, 6, 1, 6}},
      {"oval_3", "lines of PG(2,3) meeting a conic", [] { return oval_lines(3); }, {13, 10, 4, 1, 4}},
      {"oval_4", "lines of PG(2,4) meeting a conic", [] { return oval_lines(4); }, {21, 15, 5, 1, 5}},
      {"oval_5", "lines of PG(2,5) meeting a conic", [] { return oval_lines(5); }, {31, 21, 6, 1, 6}},
      {"cross_2x4", "crosses of the 2x4 grid", [] { return cross_grid(2, 4); }, {8, 8, 5, 2, 2}},
      {"cross_3x3", "crosses of the 3x3 grid", [] { return cross_grid(3, 3); }, {9, 9, 5, 2, 3}},
      {"cross_4x4", "crosses of the 4x4 grid", [] { return cross_grid(4, 4); }, {16, 16, 7, 2, 4}},
  };
  return table;
}

}  // namespace

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& r : recipes()) names.emplace_back(r.name);
  return names;
}

std::string_view published_matrix(std::string_view name) {
  if (name == "q4_unique") return kQ4Unique;
  if (name == "q5_B1") return kQ5B1;
  if (name == "m5_example") return kM5Example;
  if (name == "m6_unique") return kM6Unique;
  throw Error(ErrorCode::UnknownName, "no published matrix named '" + std::string(name) + "'");
}

CatalogEntry catalog(std::string_view name) {
  for (const auto& r : recipes()) {
    if (r.name != name) continue;
    CatalogEntry entry{std::string(r.name), std::string(r.description), r.build(), r.expected};
    const Hypergraph& h = entry.hypergraph;
    const ExpectedProperties actual{h.num_vertices(), h.num_edges(), uniformity(h), intersection_profile(h).t_min,
                                    covering_number(h).tau};
    const ExpectedProperties& want = entry.expected;
    if (actual.n != want.n || actual.m != want.m || actual.r != want.r || actual.t != want.t || actual.tau != want.tau) {
      throw Error(ErrorCode::CatalogMismatch,
                  entry.name + ": got n=" + std::to_string(actual.n) + " m=" + std::to_string(actual.m) +
                      " r=" + std::to_string(actual.r) + " t=" + std::to_string(actual.t) +
                      " tau=" + std::to_string(actual.tau));
    }
    return entry;
  }
  throw Error(ErrorCode::UnknownName, "no catalog entry named '" + std::string(name) + "'");
}

}  // namespace covlab
