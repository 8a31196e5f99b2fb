#include "covlab/descent.hpp"

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <thread>

#include "covlab/canonical.hpp"
#include "covlab/constructions.hpp"
#include "covlab/cover.hpp"
#include "covlab/error.hpp"
#include "covlab/search.hpp"

namespace covlab {

namespace {

template <typename Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> cursor{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&]() {
      for (std::size_t i = cursor++; i < count; i = cursor++) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

bool min_degree_at_least_two(const Hypergraph& h) {
  for (int d : h.degrees()) {
    if (d < 2) return false;
  }
  return true;
}

void write_checkpoint(const std::string& dir, int q, const DescentLevel& level) {
  std::filesystem::create_directories(dir);
  const auto path = std::filesystem::path(dir) / ("level_" + std::to_string(level.edge_count) + ".txt");
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path.string());
  out << serialize_level_dump(level.edge_count, q, level.frontier);
}

}  // namespace

DescentResult descend(int q, const DescentOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const ProjectivePlane plane = projective_plane(q);
  if (options.min_edges < 1) throw Error(ErrorCode::InvalidSpec, "min_edges must be at least 1");
  const int threads = resolve_threads(options.threads);
  const int lines = plane.incidence.num_edges();
  int floor = options.min_edges;
  if (q == 7 && !options.unbounded) floor = std::max(floor, lines - kDefaultDeletionLimit);

  DescentResult result;
  result.q = q;
  DescentLevel top;
  if (options.resume) {
    if (options.resume->q != q) throw Error(ErrorCode::InvalidSpec, "checkpoint is for q=" + std::to_string(options.resume->q));
    top.edge_count = options.resume->level;
    top.frontier = options.resume->classes;
    top.resumed = true;
  } else {
    top.edge_count = lines;
    top.frontier = {canonical_representative(plane.incidence)};
  }
  top.class_count = top.frontier.size();
  for (const auto& h : top.frontier) {
    if (!find_cover(h, q)) top.extremal.push_back(h);
  }
  top.extremal_count = top.extremal.size();
  result.levels.push_back(top);
  if (!top.extremal.empty()) result.m = top.edge_count;

  while (!result.levels.back().extremal.empty() && result.levels.back().edge_count > floor) {
    const auto& frontier = result.levels.back().frontier;
    // One deletion per edge orbit of each frontier member.
    std::vector<std::vector<std::pair<CanonicalForm, Hypergraph>>> children(frontier.size());
    parallel_for(frontier.size(), threads, [&](std::size_t i) {
      const Hypergraph& h = frontier[i];
      const auto orbits = edge_orbits(h, canonical_labeling(h).generators);
      for (int e = 0; e < h.num_edges(); ++e) {
        if (orbits[e] != e) continue;
        Hypergraph child = h.without_edge(e);
        if (!min_degree_at_least_two(child)) continue;
        const CanonicalLabeling lab = canonical_labeling(child);
        children[i].emplace_back(lab.form, Hypergraph(child.num_vertices(), child.relabeled(lab.labeling).sorted_edges()));
      }
    });
    std::map<CanonicalForm, Hypergraph> classes;
    for (auto& list : children) {
      for (auto& [form, h] : list) classes.emplace(std::move(form), std::move(h));
    }
    std::vector<const Hypergraph*> ordered;
    for (const auto& [form, h] : classes) ordered.push_back(&h);
    std::vector<char> extremal(ordered.size(), 0);
    parallel_for(ordered.size(), threads, [&](std::size_t i) { extremal[i] = !find_cover(*ordered[i], q).has_value(); });

    DescentLevel level;
    level.edge_count = result.levels.back().edge_count - 1;
    level.class_count = ordered.size();
    for (std::size_t i = 0; i < ordered.size(); ++i) {
      if (extremal[i]) level.extremal.push_back(*ordered[i]);
      if (extremal[i] || !options.extremal_frontier) level.frontier.push_back(*ordered[i]);
    }
    level.extremal_count = level.extremal.size();
    if (!options.checkpoint_dir.empty()) write_checkpoint(options.checkpoint_dir, q, level);
    if (level.extremal_count > 0) result.m = level.edge_count;
    result.levels.back().frontier.clear();
    result.levels.back().frontier.shrink_to_fit();
    result.levels.push_back(std::move(level));
  }
  result.complete = result.levels.back().extremal.empty();
  result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace covlab
