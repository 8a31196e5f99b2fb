#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "covlab/canonical.hpp"
#include "covlab/hypergraph.hpp"

namespace covlab {

// Constraints for exhaustive generation. n is exact: every vertex must reach
// min_degree (>= 1), so no vertex is isolated.
struct SearchSpec {
  int r = 0;
  int t = 1;
  int n = 0;
  int m = 0;
  int min_degree = 1;
  int max_degree = 0;  // 0 means m
  std::optional<int> target_tau;

  int effective_max_degree() const { return max_degree == 0 ? m : max_degree; }
  // Throws InvalidSpec or CapacityExceeded.
  void validate() const;
  // Hand-shake window n*min_degree <= m*r <= n*max_degree.
  bool handshake_consistent() const;
  std::string describe() const;
};

struct SearchOptions {
  // Without this only extremal classes are stored; the rest are counted.
  bool keep_representatives = true;
  // Worker threads; 0 picks hardware concurrency capped by
  // COVERING_LAB_THREADS.
  int threads = 0;
};

struct SearchReport {
  SearchSpec spec;
  std::size_t class_count = 0;
  std::size_t extremal_count = 0;
  // Canonical representatives in canonical-key order (when kept).
  std::vector<Hypergraph> representatives;
  // Extremal representatives are always kept.
  std::vector<Hypergraph> extremal;
  std::size_t nodes = 0;
  double wall_seconds = 0.0;
};

// Isomorph-free generation by canonical augmentation: edges are added one at
// a time and a child is kept only when the added edge lies in the orbit of
// the child's canonical deletion edge.
SearchReport generate(const SearchSpec& spec, const SearchOptions& options = {});

// Smallest n with n*max_degree >= m*r.
int min_vertex_bound(int r, int m, int max_degree);

// Largest sum of d(d-1) over degree sequences with lower[v] <= d_v <= cap and
// sum d_v = total, or -1 if no such sequence exists.
long long max_pair_count(std::span<const int> lower, int cap, int total);

struct ClassificationReport {
  int r = 0;
  int max_edges = 0;
  // Extremal classes (2-intersecting, r-uniform, tau = r-1), by key.
  std::vector<Hypergraph> classes;
  // For each class: no further edge (new vertices allowed) keeps it
  // 2-intersecting.
  std::vector<bool> maximal;
  std::vector<SearchReport> runs;
};

// All 2-intersecting r-uniform hypergraphs with covering number r-1, r in {3,4}.
ClassificationReport verify_classification(int r, const SearchOptions& options = {});

int resolve_threads(int requested);

}  // namespace covlab
