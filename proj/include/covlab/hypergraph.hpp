#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "covlab/vertex_set.hpp"

namespace covlab {

inline constexpr int kMaxVertices = VertexSet::kCapacity;
inline constexpr int kMaxEdges = 512;

// A simple hypergraph on the vertex labels 0..n-1. Edges keep the order they
// were given in; that order is presentational only, so equality compares the
// edge sets. Instances are immutable once built.
class Hypergraph {
 public:
  Hypergraph() = default;

  // Throws Error{VertexOutOfRange, EmptyEdge, DuplicateEdge, CapacityExceeded}.
  Hypergraph(int n, std::vector<VertexSet> edges);
  Hypergraph(int n, const std::vector<std::vector<int>>& edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  std::span<const VertexSet> edges() const { return edges_; }
  const VertexSet& edge(int i) const { return edges_[static_cast<std::size_t>(i)]; }
  bool has_edge(const VertexSet& e) const;

  std::vector<int> degrees() const;
  std::vector<std::vector<int>> edge_lists() const;

  // Edge set with edges in ascending numeric order; used for labeled equality.
  std::vector<VertexSet> sorted_edges() const;

  Hypergraph without_edge(int index) const;
  Hypergraph with_edge(const VertexSet& e) const;
  // Relabels vertex v as perm[v]; perm must be a permutation of 0..n-1.
  Hypergraph relabeled(std::span<const int> perm) const;
  // The incidence structure with the roles of vertices and edges swapped.
  Hypergraph dual() const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b);

 private:
  int n_ = 0;
  std::vector<VertexSet> edges_;
};

// Shorthand for the list-of-lists constructor.
inline Hypergraph make_hypergraph(int n, const std::vector<std::vector<int>>& edges) {
  return Hypergraph(n, edges);
}

struct DegreeProfile {
  std::vector<int> degrees;
  int min_degree = 0;
  int max_degree = 0;
};

struct IntersectionProfile {
  // sizes[k] for the k-th unordered pair (i < j) in row-major order.
  std::vector<int> sizes;
  int t_min = 0;
  int t_max = 0;
};

bool is_uniform(const Hypergraph& h, int r);
// Uniformity of h, or 0 when edge sizes differ (or there are no edges).
int uniformity(const Hypergraph& h);
bool is_t_intersecting(const Hypergraph& h, int t);

DegreeProfile degree_profile(const Hypergraph& h);
IntersectionProfile intersection_profile(const Hypergraph& h);

// Double counting of ordered intersecting edge pairs: a t-intersecting family
// with m edges and the given degrees needs sum d(d-1) >= t*m*(m-1).
bool pair_count_feasible(std::span<const int> degrees, int m, int t);
bool pair_count_feasible(const DegreeProfile& profile, int m, int t);

// Lower bound on the maximum degree of any 2-intersecting r-uniform
// hypergraph with m edges: k+2 for the largest k >= 0 with k*r/2 + 1 < m.
// Returns 1 when m == 1 (no such k).
int degree_force_bound(int r, int m);

}  // namespace covlab
