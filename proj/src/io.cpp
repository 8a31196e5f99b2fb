#include "covlab/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "covlab/error.hpp"

namespace covlab {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  // A terminating newline does not open another line.
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

}  // namespace

Hypergraph parse_incidence(std::string_view text) {
  std::vector<std::string_view> rows;
  for (std::string_view line : split_lines(text)) {
    line = trim(line);
    if (line.empty()) continue;
    rows.push_back(line);
  }
  if (rows.empty()) return Hypergraph(0, std::vector<VertexSet>{});
  const std::size_t width = rows.front().size();
  if (rows.size() > static_cast<std::size_t>(kMaxVertices)) {
    throw Error(ErrorCode::CapacityExceeded, std::to_string(rows.size()) + " rows exceed 128 vertices");
  }
  std::vector<VertexSet> edges(width);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != width) {
      throw Error(ErrorCode::RaggedMatrix, "row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                                               " columns, expected " + std::to_string(width));
    }
    for (std::size_t j = 0; j < width; ++j) {
      const char c = rows[i][j];
      if (c == '1') {
        edges[j].set(static_cast<int>(i));
      } else if (c != '0') {
        throw Error(ErrorCode::NonBinaryCharacter,
                    "row " + std::to_string(i + 1) + " column " + std::to_string(j + 1) + " holds '" + std::string(1, c) + "'");
      }
    }
  }
  return Hypergraph(static_cast<int>(rows.size()), std::move(edges));
}

std::string serialize_incidence(const Hypergraph& h) {
  std::string out;
  out.reserve(static_cast<std::size_t>(h.num_vertices() * (h.num_edges() + 1)));
  for (int v = 0; v < h.num_vertices(); ++v) {
    for (const auto& e : h.edges()) out.push_back(e.test(v) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

int BlockList::vertex_for_label(long long label) const {
  const auto it = std::find(original_label.begin(), original_label.end(), label);
  return it == original_label.end() ? -1 : static_cast<int>(it - original_label.begin());
}

BlockList parse_blocks(std::string_view text) {
  BlockList result;
  std::vector<std::vector<long long>> blocks;
  bool seen_block = false;
  const auto lines = split_lines(text);
  if (lines.empty()) throw Error(ErrorCode::EmptyBlock, "no blocks in input");
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string_view line = trim(lines[i]);
    if (!seen_block && !line.empty() && line.front() == '#') {
      if (result.name.empty()) result.name = std::string(trim(line.substr(1)));
      continue;
    }
    if (line.empty()) throw Error(ErrorCode::EmptyBlock, "line " + std::to_string(i + 1) + " is empty");
    std::vector<long long> block;
    bool numeric = true;
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == ',')) ++pos;
      if (pos >= line.size()) break;
      std::size_t end = pos;
      while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != ',') ++end;
      long long value = 0;
      const auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + end, value);
      if (ec != std::errc() || ptr != line.data() + end || value < 0) {
        numeric = false;
        break;
      }
      block.push_back(value);
      pos = end;
    }
    if (!numeric) {
      if (!seen_block && result.name.empty()) {
        result.name = std::string(line);
        continue;
      }
      throw Error(ErrorCode::ParseError, "line " + std::to_string(i + 1) + " is not a list of non-negative integers");
    }
    seen_block = true;
    blocks.push_back(std::move(block));
  }
  if (blocks.empty()) throw Error(ErrorCode::EmptyBlock, "no blocks in input");

  std::map<long long, int> labels;
  for (const auto& b : blocks) {
    for (long long v : b) labels.emplace(v, 0);
  }
  int next = 0;
  for (auto& [label, index] : labels) index = next++;
  result.compacted = !(labels.begin()->first == 0 && labels.rbegin()->first == static_cast<long long>(labels.size()) - 1);
  for (const auto& [label, index] : labels) result.original_label.push_back(label);
  if (labels.size() > static_cast<std::size_t>(kMaxVertices)) {
    throw Error(ErrorCode::CapacityExceeded, std::to_string(labels.size()) + " distinct points exceed 128");
  }
  std::vector<VertexSet> edges;
  for (const auto& b : blocks) {
    VertexSet e;
    for (long long v : b) e.set(labels.at(v));
    edges.push_back(e);
  }
  result.hypergraph = Hypergraph(static_cast<int>(labels.size()), std::move(edges));
  return result;
}

std::string serialize_blocks(const Hypergraph& h) {
  std::ostringstream out;
  for (const auto& e : h.edges()) {
    bool first = true;
    e.for_each([&](int v) {
      if (!first) out << ' ';
      out << v;
      first = false;
    });
    out << '\n';
  }
  return out.str();
}

InputFormat detect_format(std::string_view text) {
  bool any = false;
  for (std::string_view line : split_lines(text)) {
    line = trim(line);
    if (line.empty()) continue;
    if (line.find_first_not_of("01") != std::string_view::npos) return InputFormat::Blocks;
    any = true;
  }
  return any ? InputFormat::Incidence : InputFormat::Blocks;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string serialize_level_dump(int level, int q, const std::vector<Hypergraph>& classes) {
  std::string out = "level=" + std::to_string(level) + " q=" + std::to_string(q) + "\n";
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (i > 0) out += '\n';
    out += serialize_incidence(classes[i]);
  }
  return out;
}

LevelDump parse_level_dump(std::string_view text) {
  LevelDump dump;
  const auto lines = split_lines(text);
  if (lines.empty() || std::sscanf(std::string(lines.front()).c_str(), "level=%d q=%d", &dump.level, &dump.q) != 2) {
    throw Error(ErrorCode::ParseError, "missing 'level=<m> q=<q>' header");
  }
  std::string block;
  auto flush = [&]() {
    if (!block.empty()) dump.classes.push_back(parse_incidence(block));
    block.clear();
  };
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (trim(lines[i]).empty()) {
      flush();
    } else {
      block.append(lines[i]);
      block.push_back('\n');
    }
  }
  flush();
  return dump;
}

}  // namespace covlab
