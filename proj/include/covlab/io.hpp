#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "covlab/hypergraph.hpp"

namespace covlab {

// Incidence matrix text: one line of '0'/'1' per vertex, one column per edge.
// Blank lines and trailing whitespace are ignored.
Hypergraph parse_incidence(std::string_view text);
std::string serialize_incidence(const Hypergraph& h);

struct BlockList {
  std::string name;
  Hypergraph hypergraph;
  // original_label[v] is the label vertex v carried in the input.
  std::vector<long long> original_label;
  bool compacted = false;

  // Vertex index for an input label, or -1.
  int vertex_for_label(long long label) const;
};

// One block per line, whitespace-separated non-negative integers. Leading
// lines starting with '#' (or a first line that is not numeric) name the
// design. Labels already forming 0..n-1 are kept; anything else is compacted
// to 0..n-1 in ascending label order.
BlockList parse_blocks(std::string_view text);
std::string serialize_blocks(const Hypergraph& h);

enum class InputFormat { Auto, Incidence, Blocks };
// Incidence when every content line is a 0/1 string, otherwise blocks.
InputFormat detect_format(std::string_view text);

std::string read_file(const std::string& path);

// Descent checkpoints: "level=<m> q=<q>" then one incidence matrix per
// class, blocks separated by a blank line.
std::string serialize_level_dump(int level, int q, const std::vector<Hypergraph>& classes);
struct LevelDump {
  int level = 0;
  int q = 0;
  std::vector<Hypergraph> classes;
};
LevelDump parse_level_dump(std::string_view text);

}  // namespace covlab
