#include "covlab/hypergraph.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "covlab/error.hpp"

namespace covlab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::EmptyEdge: return "EmptyEdge";
    case ErrorCode::CapacityExceeded: return "CapacityExceeded";
    case ErrorCode::InfeasibleParameters: return "InfeasibleParameters";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::RaggedMatrix: return "RaggedMatrix";
    case ErrorCode::NonBinaryCharacter: return "NonBinaryCharacter";
    case ErrorCode::EmptyBlock: return "EmptyBlock";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::CatalogMismatch: return "CatalogMismatch";
  }
  return "Unknown";
}

Hypergraph::Hypergraph(int n, std::vector<VertexSet> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0 || n > kMaxVertices) {
    throw Error(ErrorCode::CapacityExceeded, "vertex count " + std::to_string(n) + " outside [0, 128]");
  }
  if (edges_.size() > static_cast<std::size_t>(kMaxEdges)) {
    throw Error(ErrorCode::CapacityExceeded, "edge count " + std::to_string(edges_.size()) + " exceeds 512");
  }
  const VertexSet universe = VertexSet::prefix(n);
  std::unordered_set<VertexSet, VertexSetHash> seen;
  seen.reserve(edges_.size() * 2);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const VertexSet& e = edges_[i];
    if (e.empty()) throw Error(ErrorCode::EmptyEdge, "edge " + std::to_string(i) + " is empty");
    if (!e.is_subset_of(universe)) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge " + std::to_string(i) + " uses vertex " + std::to_string(e.last()) +
                      " but n = " + std::to_string(n));
    }
    if (!seen.insert(e).second) {
      throw Error(ErrorCode::DuplicateEdge, "edge " + std::to_string(i) + " repeats an earlier edge");
    }
  }
}

namespace {

std::vector<VertexSet> to_sets(int n, const std::vector<std::vector<int>>& edges) {
  std::vector<VertexSet> sets;
  sets.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    VertexSet s;
    for (int v : edges[i]) {
      if (v < 0 || v >= n || v >= kMaxVertices) {
        throw Error(ErrorCode::VertexOutOfRange,
                    "edge " + std::to_string(i) + " uses vertex " + std::to_string(v) + " but n = " + std::to_string(n));
      }
      s.set(v);
    }
    sets.push_back(s);
  }
  return sets;
}

}  // namespace

Hypergraph::Hypergraph(int n, const std::vector<std::vector<int>>& edges) : Hypergraph(n, to_sets(n, edges)) {}

bool Hypergraph::has_edge(const VertexSet& e) const {
  return std::find(edges_.begin(), edges_.end(), e) != edges_.end();
}

std::vector<int> Hypergraph::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(n_), 0);
  for (const auto& e : edges_) e.for_each([&](int v) { ++deg[static_cast<std::size_t>(v)]; });
  return deg;
}

std::vector<std::vector<int>> Hypergraph::edge_lists() const {
  std::vector<std::vector<int>> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back(e.to_vector());
  return out;
}

std::vector<VertexSet> Hypergraph::sorted_edges() const {
  std::vector<VertexSet> s = edges_;
  std::sort(s.begin(), s.end());
  return s;
}

Hypergraph Hypergraph::without_edge(int index) const {
  Hypergraph h = *this;
  h.edges_.erase(h.edges_.begin() + index);
  return h;
}

Hypergraph Hypergraph::with_edge(const VertexSet& e) const {
  std::vector<VertexSet> edges = edges_;
  edges.push_back(e);
  return Hypergraph(n_, std::move(edges));
}

Hypergraph Hypergraph::relabeled(std::span<const int> perm) const {
  Hypergraph h;
  h.n_ = n_;
  h.edges_.reserve(edges_.size());
  for (const auto& e : edges_) {
    VertexSet image;
    e.for_each([&](int v) { image.set(perm[static_cast<std::size_t>(v)]); });
    h.edges_.push_back(image);
  }
  return h;
}

Hypergraph Hypergraph::dual() const {
  std::vector<std::vector<int>> edges(static_cast<std::size_t>(n_));
  for (int j = 0; j < num_edges(); ++j) {
    edges_[static_cast<std::size_t>(j)].for_each([&](int v) { edges[static_cast<std::size_t>(v)].push_back(j); });
  }
  return Hypergraph(num_edges(), edges);
}

bool operator==(const Hypergraph& a, const Hypergraph& b) {
  return a.n_ == b.n_ && a.edges_.size() == b.edges_.size() && a.sorted_edges() == b.sorted_edges();
}

bool is_uniform(const Hypergraph& h, int r) {
  return std::all_of(h.edges().begin(), h.edges().end(), [r](const VertexSet& e) { return e.count() == r; });
}

int uniformity(const Hypergraph& h) {
  if (h.num_edges() == 0) return 0;
  const int r = h.edge(0).count();
  return is_uniform(h, r) ? r : 0;
}

bool is_t_intersecting(const Hypergraph& h, int t) {
  const auto edges = h.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (edges[i].intersection_size(edges[j]) < t) return false;
    }
  }
  return true;
}

DegreeProfile degree_profile(const Hypergraph& h) {
  DegreeProfile p;
  p.degrees = h.degrees();
  if (!p.degrees.empty()) {
    auto [lo, hi] = std::minmax_element(p.degrees.begin(), p.degrees.end());
    p.min_degree = *lo;
    p.max_degree = *hi;
  }
  return p;
}

IntersectionProfile intersection_profile(const Hypergraph& h) {
  IntersectionProfile p;
  const auto edges = h.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) p.sizes.push_back(edges[i].intersection_size(edges[j]));
  }
  if (!p.sizes.empty()) {
    auto [lo, hi] = std::minmax_element(p.sizes.begin(), p.sizes.end());
    p.t_min = *lo;
    p.t_max = *hi;
  }
  return p;
}

bool pair_count_feasible(std::span<const int> degrees, int m, int t) {
  long long pairs = 0;
  for (int d : degrees) pairs += static_cast<long long>(d) * (d - 1);
  return pairs >= static_cast<long long>(t) * m * (m - 1);
}

bool pair_count_feasible(const DegreeProfile& profile, int m, int t) {
  return pair_count_feasible(std::span<const int>(profile.degrees), m, t);
}

int degree_force_bound(int r, int m) {
  // k*r/2 + 1 < m  <=>  k*r + 2 < 2m
  if (2 >= 2 * m) return 1;
  const int k = (2 * m - 3) / r;
  return k + 2;
}

}  // namespace covlab
