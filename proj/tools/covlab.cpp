// covlab: covering numbers and isomorph-free search for intersecting hypergraphs.

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "covlab/catalog.hpp"
#include "covlab/cover.hpp"
#include "covlab/descent.hpp"
#include "covlab/error.hpp"
#include "covlab/io.hpp"
#include "covlab/search.hpp"
#include "covlab/verification.hpp"

using namespace covlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;

struct Loaded {
  Hypergraph h;
  std::vector<long long> labels;  // labels[v] = input label of vertex v
  bool compacted = false;
};

// A path, or "catalog:<name>" for a built-in object.
Loaded load(const std::string& source, const std::string& format) {
  Loaded out;
  std::string text;
  if (source.rfind("catalog:", 0) == 0) {
    out.h = catalog(source.substr(8)).hypergraph;
  } else {
    text = read_file(source);
    InputFormat f = InputFormat::Auto;
    if (format == "incidence") f = InputFormat::Incidence;
    if (format == "blocks") f = InputFormat::Blocks;
    if (f == InputFormat::Auto) f = detect_format(text);
    if (f == InputFormat::Incidence) {
      out.h = parse_incidence(text);
    } else {
      BlockList b = parse_blocks(text);
      out.h = b.hypergraph;
      out.labels = b.original_label;
      out.compacted = b.compacted;
    }
  }
  if (out.labels.empty()) {
    for (int v = 0; v < out.h.num_vertices(); ++v) out.labels.push_back(v);
  }
  return out;
}

void print_label_map(const Loaded& in) {
  if (!in.compacted) return;
  std::cout << "labels compacted (vertex<-label):";
  for (std::size_t v = 0; v < in.labels.size(); ++v) std::cout << ' ' << v << "<-" << in.labels[v];
  std::cout << '\n';
}

std::string join_labels(const Loaded& in, const VertexSet& s) {
  std::string out;
  s.for_each([&](int v) {
    if (!out.empty()) out += ',';
    out += std::to_string(in.labels[static_cast<std::size_t>(v)]);
  });
  return out;
}

std::vector<long long> parse_list(const std::string& text) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || ptr != item.data() + item.size()) throw Error(ErrorCode::ParseError, "bad vertex '" + item + "'");
    out.push_back(value);
  }
  return out;
}

// "9" or "9..13".
std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  auto number = [&](const std::string& s) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw Error(ErrorCode::ParseError, "bad number '" + s + "'");
    return value;
  };
  if (dots == std::string::npos) {
    const int v = number(text);
    return {v, v};
  }
  return {number(text.substr(0, dots)), number(text.substr(dots + 2))};
}

int cmd_tau(const std::string& file, const std::string& format) {
  const Loaded in = load(file, format);
  print_label_map(in);
  const TauResult result = covering_number(in.h);
  std::cout << "tau=" << result.tau << '\n';
  std::cout << "witness=" << join_labels(in, result.witness.vertices) << '\n';
  std::cout << "exhaustive=" << (result.exhaustive ? "yes" : "no") << '\n';
  return kExitOk;
}

int cmd_check_cover(const std::string& file, const std::string& list, const std::string& format) {
  const Loaded in = load(file, format);
  print_label_map(in);
  VertexSet s;
  for (long long label : parse_list(list)) {
    const auto it = std::find(in.labels.begin(), in.labels.end(), label);
    if (it == in.labels.end()) throw Error(ErrorCode::VertexOutOfRange, "label " + std::to_string(label) + " does not occur");
    s.set(static_cast<int>(it - in.labels.begin()));
  }
  for (int j = 0; j < in.h.num_edges(); ++j) {
    if (!in.h.edge(j).intersects(s)) {
      std::cout << "not a cover: edge " << j << " is missed\n";
      return kExitMismatch;
    }
  }
  std::cout << "valid " << s.count() << "-cover\n";
  return kExitOk;
}

struct GenArgs {
  int r = 0;
  int t = 1;
  std::string n;
  std::string m;
  int min_degree = 1;
  int max_degree = 0;
  int target_tau = -1;
  int threads = 0;
  bool print = false;
};

int cmd_gen(const GenArgs& a, bool tsv) {
  const auto [n_lo, n_hi] = parse_range(a.n);
  const auto [m_lo, m_hi] = parse_range(a.m);
  if (n_lo > n_hi || m_lo > m_hi) throw Error(ErrorCode::InvalidSpec, "empty range");
  std::vector<std::vector<SearchReport>> table;
  for (int n = n_lo; n <= n_hi; ++n) {
    table.emplace_back();
    for (int m = m_lo; m <= m_hi; ++m) {
      SearchSpec spec;
      spec.r = a.r;
      spec.t = a.t;
      spec.n = n;
      spec.m = m;
      spec.min_degree = a.min_degree;
      spec.max_degree = a.max_degree;
      if (a.target_tau >= 0) spec.target_tau = a.target_tau;
      SearchOptions options;
      options.threads = a.threads;
      options.keep_representatives = a.print;
      SearchReport report = generate(spec, options);
      if (!tsv) {
        std::printf("%s classes=%zu", spec.describe().c_str(), report.class_count);
        if (spec.target_tau) std::printf(" extremal=%zu", report.extremal_count);
        std::printf(" time=%.2fs\n", report.wall_seconds);
        if (a.print) {
          for (const auto& h : report.representatives) std::cout << '\n' << serialize_incidence(h);
          if (!report.representatives.empty()) std::cout << '\n';
        } else {
          for (const auto& h : report.extremal) std::cout << "extremal:\n" << serialize_incidence(h);
        }
      }
      table.back().push_back(std::move(report));
    }
  }
  if (tsv) {
    std::cout << "n\\e";
    for (int m = m_lo; m <= m_hi; ++m) std::cout << '\t' << m;
    std::cout << '\n';
    for (int n = n_lo; n <= n_hi; ++n) {
      std::cout << n;
      for (const auto& report : table[static_cast<std::size_t>(n - n_lo)]) {
        std::cout << '\t' << report.class_count;
        if (report.spec.target_tau) std::cout << '/' << report.extremal_count;
      }
      std::cout << '\n';
    }
  }
  return kExitOk;
}

struct DescendArgs {
  int q = 0;
  int min_edges = 1;
  bool unbounded = false;
  bool extremal_frontier = false;
  std::string checkpoint;
  std::string resume;
  int threads = 0;
};

int cmd_descend(const DescendArgs& a, bool tsv) {
  DescentOptions options;
  options.min_edges = a.min_edges;
  options.unbounded = a.unbounded;
  options.extremal_frontier = a.extremal_frontier;
  options.checkpoint_dir = a.checkpoint;
  options.threads = a.threads;
  if (!a.resume.empty()) options.resume = parse_level_dump(read_file(a.resume));
  const DescentResult result = descend(a.q, options);
  if (tsv) std::cout << "edges\tclasses\textremal\n";
  for (const auto& level : result.levels) {
    if (tsv) {
      std::cout << level.edge_count << '\t' << level.class_count << '\t' << level.extremal_count << '\n';
    } else {
      std::printf("edges=%d classes=%zu extremal=%zu%s\n", level.edge_count, level.class_count, level.extremal_count,
                  level.resumed ? " (resumed)" : "");
    }
  }
  if (!result.complete) std::cout << "stopped before a level without extremal classes\n";
  if (result.m) {
    std::cout << "m(" << a.q + 1 << ")" << (result.complete ? "=" : "<=") << *result.m << '\n';
  }
  return kExitOk;
}

int cmd_catalog(const std::string& name, bool list, const std::string& format) {
  if (list || name.empty()) {
    for (const auto& n : catalog_names()) {
      const CatalogEntry e = catalog(n);
      std::printf("%-22s n=%-3d m=%-3d r=%d t=%d tau=%d  %s\n", n.c_str(), e.expected.n, e.expected.m, e.expected.r,
                  e.expected.t, e.expected.tau, e.description.c_str());
    }
    return kExitOk;
  }
  const CatalogEntry e = catalog(name);
  if (format == "blocks") {
    std::cout << "# " << e.name << '\n' << serialize_blocks(e.hypergraph);
  } else {
    std::cout << serialize_incidence(e.hypergraph);
  }
  return kExitOk;
}

int cmd_verify(bool long_mode, const std::string& biplanes, int only, int threads, bool tsv) {
  VerifyOptions options;
  options.long_mode = long_mode;
  options.biplane_dir = biplanes;
  options.threads = threads;
  auto print = [&](const CriterionResult& r) {
    if (tsv) {
      std::printf("%d\t%s\t%.1f\t%s\t%s\n", r.id, to_string(r.outcome).c_str(), r.seconds, r.title.c_str(), r.detail.c_str());
    } else {
      std::printf("[%s] %2d %s (%.1fs): %s\n", to_string(r.outcome).c_str(), r.id, r.title.c_str(), r.seconds, r.detail.c_str());
    }
    std::fflush(stdout);
  };
  std::vector<CriterionResult> results;
  if (only > 0) {
    results.push_back(run_criterion(only, options));
    print(results.back());
  } else {
    options.on_result = print;
    results = verify_all(options);
  }
  const bool failed = std::any_of(results.begin(), results.end(), [](const auto& r) { return r.outcome == Outcome::Fail; });
  return failed ? kExitMismatch : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Covering numbers and isomorph-free search for intersecting hypergraphs"};
  app.require_subcommand(1);
  std::string output_format = "text";
  app.add_option("--format", output_format, "Output style for tables")->check(CLI::IsMember({"text", "tsv"}));

  std::string input_format = "auto";
  auto add_input_format = [&](CLI::App* sub) {
    sub->add_option("--input", input_format, "Input file format")->check(CLI::IsMember({"auto", "incidence", "blocks"}));
  };

  std::string file;
  auto* tau = app.add_subcommand("tau", "Exact covering number and a minimum cover");
  tau->add_option("file", file, "Incidence matrix or block list, or catalog:<name>")->required();
  add_input_format(tau);

  std::string cover_list;
  auto* check = app.add_subcommand("check-cover", "Check that a vertex list covers every edge");
  check->add_option("file", file, "Incidence matrix or block list, or catalog:<name>")->required();
  check->add_option("vertices", cover_list, "Comma-separated vertex labels")->required();
  add_input_format(check);

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Enumerate r-uniform t-intersecting hypergraphs up to isomorphism");
  gen->add_option("r", gen_args.r)->required();
  gen->add_option("t", gen_args.t)->required();
  gen->add_option("n", gen_args.n, "Vertex count or range a..b")->required();
  gen->add_option("m", gen_args.m, "Edge count or range a..b")->required();
  gen->add_option("--min-deg", gen_args.min_degree);
  gen->add_option("--max-deg", gen_args.max_degree, "0 means no cap");
  gen->add_option("--target-tau", gen_args.target_tau);
  gen->add_option("--threads", gen_args.threads);
  gen->add_flag("--print", gen_args.print, "Print every class as an incidence matrix");

  DescendArgs descend_args;
  auto* desc = app.add_subcommand("descend", "Edge-deletion descent from PG(2,q)");
  desc->add_option("q", descend_args.q)->required();
  desc->add_option("--min-edges", descend_args.min_edges);
  desc->add_flag("--unbounded", descend_args.unbounded, "Lift the deletion limit for q=7");
  desc->add_flag("--extremal-frontier", descend_args.extremal_frontier, "Expand only classes with covering number q+1");
  desc->add_option("--checkpoint", descend_args.checkpoint, "Directory for level dumps");
  desc->add_option("--resume", descend_args.resume, "Level dump to restart from");
  desc->add_option("--threads", descend_args.threads);

  std::string catalog_name;
  bool catalog_list = false;
  std::string catalog_format = "incidence";
  auto* cat = app.add_subcommand("catalog", "Print a built-in hypergraph");
  cat->add_option("name", catalog_name);
  cat->add_flag("--list", catalog_list);
  cat->add_option("--as", catalog_format)->check(CLI::IsMember({"incidence", "blocks"}));

  bool long_mode = false;
  std::string biplanes;
  int only = 0;
  int verify_threads = 0;
  auto* verify = app.add_subcommand("verify-paper", "Run the acceptance checks");
  verify->add_flag("--long", long_mode, "Include the multi-hour checks");
  verify->add_option("--biplanes", biplanes, "Directory with biplane block lists");
  verify->add_option("--only", only, "Run a single criterion")->check(CLI::Range(1, kCriterionCount));
  verify->add_option("--threads", verify_threads);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  const bool tsv = output_format == "tsv";
  try {
    if (*tau) return cmd_tau(file, input_format);
    if (*check) return cmd_check_cover(file, cover_list, input_format);
    if (*gen) return cmd_gen(gen_args, tsv);
    if (*desc) return cmd_descend(descend_args, tsv);
    if (*cat) return cmd_catalog(catalog_name, catalog_list, catalog_format);
    if (*verify) return cmd_verify(long_mode, biplanes, only, verify_threads, tsv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
