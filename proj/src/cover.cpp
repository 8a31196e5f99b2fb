#include "covlab/cover.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <string>

#include "covlab/error.hpp"

namespace covlab {

bool is_cover(const Hypergraph& h, const VertexSet& s) {
  return std::all_of(h.edges().begin(), h.edges().end(), [&](const VertexSet& e) { return e.intersects(s); });
}

namespace {

// Bitset over edge indices (m <= 512).
struct EdgeMask {
  std::array<std::uint64_t, kMaxEdges / 64> w{};

  void set(int i) { w[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63); }
  bool test(int i) const { return (w[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1U; }
};

class BranchAndBound {
 public:
  explicit BranchAndBound(const Hypergraph& h)
      : n_(h.num_vertices()), m_(h.num_edges()), words_((m_ + 63) / 64), edges_(h.edges().begin(), h.edges().end()) {
    incidence_.resize(static_cast<std::size_t>(n_));
    for (int j = 0; j < m_; ++j) {
      edges_[static_cast<std::size_t>(j)].for_each([&](int v) { incidence_[static_cast<std::size_t>(v)].set(j); });
    }
  }

  std::optional<CoverCertificate> find(int k) {
    EdgeMask all;
    for (int j = 0; j < m_; ++j) all.set(j);
    VertexSet chosen;
    if (search(all, VertexSet::prefix(n_), k, chosen)) return CoverCertificate{chosen};
    return std::nullopt;
  }

 private:
  int count(const EdgeMask& a) const {
    int c = 0;
    for (int i = 0; i < words_; ++i) c += std::popcount(a.w[static_cast<std::size_t>(i)]);
    return c;
  }
  int count_and(const EdgeMask& a, const EdgeMask& b) const {
    int c = 0;
    for (int i = 0; i < words_; ++i) c += std::popcount(a.w[static_cast<std::size_t>(i)] & b.w[static_cast<std::size_t>(i)]);
    return c;
  }
  EdgeMask and_not(const EdgeMask& a, const EdgeMask& b) const {
    EdgeMask r;
    for (int i = 0; i < words_; ++i) r.w[static_cast<std::size_t>(i)] = a.w[static_cast<std::size_t>(i)] & ~b.w[static_cast<std::size_t>(i)];
    return r;
  }

  bool search(const EdgeMask& uncovered, VertexSet allowed, int budget, VertexSet& chosen) {
    const int remaining = count(uncovered);
    if (remaining == 0) return true;
    if (budget == 0) return false;

    // Branch on the uncovered edge with the fewest admissible vertices; also
    // build a greedy packing of pairwise disjoint residual edges (each needs
    // its own cover vertex).
    int branch_edge = -1;
    int branch_size = kMaxVertices + 1;
    int packing = 0;
    VertexSet packed;
    for (int j = 0; j < m_; ++j) {
      if (!uncovered.test(j)) continue;
      const VertexSet residual = edges_[static_cast<std::size_t>(j)] & allowed;
      const int c = residual.count();
      if (c == 0) return false;
      if (c < branch_size) {
        branch_size = c;
        branch_edge = j;
      }
      if (!residual.intersects(packed)) {
        ++packing;
        packed |= residual;
      }
    }
    if (packing > budget) return false;

    // The budget largest residual degrees must reach the uncovered count.
    std::array<int, kMaxVertices> residual_degree{};
    int top_count = 0;
    std::array<int, kMaxVertices> top{};
    allowed.for_each([&](int v) {
      const int d = count_and(incidence_[static_cast<std::size_t>(v)], uncovered);
      residual_degree[static_cast<std::size_t>(v)] = d;
      if (d > 0) top[static_cast<std::size_t>(top_count++)] = d;
    });
    const int take = std::min(budget, top_count);
    std::partial_sort(top.begin(), top.begin() + take, top.begin() + top_count, std::greater<>());
    int reach = 0;
    for (int i = 0; i < take; ++i) reach += top[static_cast<std::size_t>(i)];
    if (reach < remaining) return false;

    std::vector<int> order = (edges_[static_cast<std::size_t>(branch_edge)] & allowed).to_vector();
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return residual_degree[static_cast<std::size_t>(a)] > residual_degree[static_cast<std::size_t>(b)];
    });
    for (int v : order) {
      chosen.set(v);
      allowed.reset(v);
      if (search(and_not(uncovered, incidence_[static_cast<std::size_t>(v)]), allowed, budget - 1, chosen)) return true;
      chosen.reset(v);
    }
    return false;
  }

  int n_;
  int m_;
  int words_;
  std::vector<VertexSet> edges_;
  std::vector<EdgeMask> incidence_;
};

}  // namespace

std::optional<CoverCertificate> find_cover(const Hypergraph& h, int k) {
  if (k < 0) return std::nullopt;
  if (h.num_edges() == 0) return CoverCertificate{};
  return BranchAndBound(h).find(k);
}

CoverCertificate greedy_pair_cover(const Hypergraph& h) {
  std::vector<VertexSet> uncovered(h.edges().begin(), h.edges().end());
  VertexSet cover;
  auto best_vertex = [&](const VertexSet& pool) {
    int best = -1;
    int best_deg = -1;
    pool.for_each([&](int v) {
      int d = 0;
      for (const auto& e : uncovered) d += e.test(v) ? 1 : 0;
      if (d > best_deg) {
        best_deg = d;
        best = v;
      }
    });
    return best;
  };
  auto take = [&](int v) {
    cover.set(v);
    std::erase_if(uncovered, [v](const VertexSet& e) { return e.test(v); });
  };
  if (!uncovered.empty()) take(best_vertex(VertexSet::prefix(h.num_vertices())));
  while (!uncovered.empty()) {
    if (uncovered.size() >= 2 && uncovered[0].intersects(uncovered[1])) {
      take(best_vertex(uncovered[0] & uncovered[1]));
    } else {
      take(best_vertex(uncovered[0]));
    }
  }
  return CoverCertificate{cover};
}

TauResult covering_number(const Hypergraph& h) {
  TauResult result;
  result.exhaustive = true;
  if (h.num_edges() == 0) return result;
  BranchAndBound solver(h);
  CoverCertificate best = greedy_pair_cover(h);
  while (best.size() > 0) {
    auto smaller = solver.find(best.size() - 1);
    if (!smaller) break;
    best = *smaller;
  }
  result.tau = best.size();
  result.witness = best;
  return result;
}

TauResult covering_number_oracle(const Hypergraph& h) {
  TauResult result;
  result.exhaustive = true;
  const int n = h.num_vertices();
  const auto lists = h.edge_lists();
  if (lists.empty()) return result;

  std::vector<char> member(static_cast<std::size_t>(n), 0);
  auto covers = [&]() {
    for (const auto& e : lists) {
      bool hit = false;
      for (int v : e) {
        if (member[static_cast<std::size_t>(v)] != 0) {
          hit = true;
          break;
        }
      }
      if (!hit) return false;
    }
    return true;
  };

  for (int k = 1; k <= n; ++k) {
    // Lexicographic enumeration of k-subsets of {0..n-1}.
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
      std::fill(member.begin(), member.end(), 0);
      for (int v : idx) member[static_cast<std::size_t>(v)] = 1;
      if (covers()) {
        result.tau = k;
        for (int v : idx) result.witness.vertices.set(v);
        return result;
      }
      int i = k - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return result;
}

int greedy_tau_upper(int e, int delta) { return 1 + (e - delta + 1) / 2; }

int max_degree_cap(int e, int r, int target, bool two_intersecting) {
  const int expected = two_intersecting ? r - 1 : r;
  if (target != expected || e < 1) {
    throw Error(ErrorCode::PreconditionViolated,
                "target " + std::to_string(target) + " must equal " + std::to_string(expected) + " with e >= 1");
  }
  // Two or more pairwise intersecting edges force a vertex of degree >= 2.
  const int lowest = e >= 2 ? 2 : 1;
  for (int delta = e; delta >= lowest; --delta) {
    if (greedy_tau_upper(e, delta) >= target) return delta;
  }
  throw Error(ErrorCode::InfeasibleParameters,
              "no maximum degree >= " + std::to_string(lowest) + " allows covering number " + std::to_string(target) +
                  " with " + std::to_string(e) + " edges");
}

CoverCertificate mindeg_cover(const Hypergraph& h, int v) {
  const int r = uniformity(h);
  if (r == 0 || !is_t_intersecting(h, 2)) {
    throw Error(ErrorCode::PreconditionViolated, "hypergraph must be uniform and 2-intersecting");
  }
  if (v < 0 || v >= h.num_vertices()) throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v));
  std::vector<int> through;
  for (int j = 0; j < h.num_edges(); ++j) {
    if (h.edge(j).test(v)) through.push_back(j);
  }
  if (through.empty() || static_cast<int>(through.size()) > r - 1) {
    throw Error(ErrorCode::PreconditionViolated,
                "vertex " + std::to_string(v) + " has degree " + std::to_string(through.size()) + ", need 1.." +
                    std::to_string(r - 1));
  }
  const VertexSet& base = h.edge(through.front());
  VertexSet excluded{v};
  for (std::size_t i = 1; i < through.size(); ++i) {
    VertexSet shared = base & h.edge(through[i]);
    shared.reset(v);
    excluded.set(shared.first());
  }
  const int x = (base - excluded).first();
  VertexSet cover = base;
  cover.reset(v);
  cover.reset(x);
  return CoverCertificate{cover};
}

}  // namespace covlab
