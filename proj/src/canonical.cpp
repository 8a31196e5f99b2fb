#include "covlab/canonical.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <numeric>
#include <unordered_map>
#include <utility>

namespace covlab {

std::size_t CanonicalFormHash::operator()(const CanonicalForm& f) const noexcept {
  std::uint64_t h = static_cast<std::uint64_t>(f.n) * 1315423911ULL + static_cast<std::uint64_t>(f.m);
  for (std::uint64_t w : f.words) h = (h ^ w) * 0x100000001B3ULL + (h >> 29);
  return static_cast<std::size_t>(h);
}

namespace {

inline std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
  return h * 0xBF58476D1CE4E5B9ULL;
}

struct NodeInvariant {
  std::uint64_t hash = 0;
  int open_vertex_cells = 0;
  friend auto operator<=>(const NodeInvariant&, const NodeInvariant&) = default;
};

// Ordered partition of the Levi graph nodes: vertices occupy positions
// [0, n), edges [n, n+m).
struct Partition {
  std::vector<int> lab;       // position -> node
  std::vector<int> cell_of;   // node -> start position of its cell
  std::vector<int> cell_end;  // start position -> end position (exclusive)
};

class Canonizer {
 public:
  // Buffers are kept between calls; reset() prepares a new input.
  void reset(const Hypergraph& h, std::span<const int> colors) {
    n_ = h.num_vertices();
    m_ = h.num_edges();
    total_ = n_ + m_;
    edges_.assign(h.edges().begin(), h.edges().end());
    cur_inv_.clear();
    seq_.clear();
    have_best_ = false;
    best_inv_.clear();
    best_cert_.clear();
    best_order_.clear();
    best_seq_.clear();
    generators_.clear();
    colors_.assign(colors.begin(), colors.end());
    if (colors_.empty()) colors_.assign(static_cast<std::size_t>(m_), 0);
    // Levi graph adjacency in compressed rows.
    adj_start_.assign(static_cast<std::size_t>(total_ + 1), 0);
    for (int j = 0; j < m_; ++j) {
      edges_[static_cast<std::size_t>(j)].for_each([&](int v) {
        ++adj_start_[static_cast<std::size_t>(v) + 1];
        ++adj_start_[static_cast<std::size_t>(n_ + j) + 1];
      });
    }
    for (int i = 0; i < total_; ++i) adj_start_[static_cast<std::size_t>(i) + 1] += adj_start_[static_cast<std::size_t>(i)];
    adj_.resize(static_cast<std::size_t>(adj_start_.back()));
    auto& fill = pos_;
    fill.assign(adj_start_.begin(), adj_start_.end() - 1);
    for (int j = 0; j < m_; ++j) {
      edges_[static_cast<std::size_t>(j)].for_each([&](int v) {
        adj_[static_cast<std::size_t>(fill[static_cast<std::size_t>(v)]++)] = n_ + j;
        adj_[static_cast<std::size_t>(fill[static_cast<std::size_t>(n_ + j)]++)] = v;
      });
    }
    counts_.assign(static_cast<std::size_t>(total_), 0);
    in_queue_.assign(static_cast<std::size_t>(total_ + 1), 0);
    uncolored_ = std::all_of(colors_.begin(), colors_.end(), [](int c) { return c == 0; });
  }

  CanonicalLabeling run() {
    Partition p;
    p.lab.resize(static_cast<std::size_t>(total_));
    p.cell_of.resize(static_cast<std::size_t>(total_));
    p.cell_end.assign(static_cast<std::size_t>(total_ + 1), 0);
    std::iota(p.lab.begin(), p.lab.begin() + n_, 0);
    std::vector<int> edge_order(static_cast<std::size_t>(m_));
    std::iota(edge_order.begin(), edge_order.end(), 0);
    std::stable_sort(edge_order.begin(), edge_order.end(), [&](int a, int b) {
      return colors_[static_cast<std::size_t>(a)] < colors_[static_cast<std::size_t>(b)];
    });
    for (int j = 0; j < m_; ++j) p.lab[static_cast<std::size_t>(n_ + j)] = n_ + edge_order[static_cast<std::size_t>(j)];

    std::vector<int> starts;
    if (n_ > 0) {
      starts.push_back(0);
      p.cell_end[0] = n_;
      for (int v = 0; v < n_; ++v) p.cell_of[static_cast<std::size_t>(v)] = 0;
    }
    std::uint64_t color_hash = 0;
    for (int i = 0; i < m_;) {
      int k = i;
      const int c = colors_[static_cast<std::size_t>(edge_order[static_cast<std::size_t>(i)])];
      while (k < m_ && colors_[static_cast<std::size_t>(edge_order[static_cast<std::size_t>(k)])] == c) ++k;
      const int s = n_ + i;
      starts.push_back(s);
      p.cell_end[static_cast<std::size_t>(s)] = n_ + k;
      for (int t = i; t < k; ++t) p.cell_of[static_cast<std::size_t>(n_ + edge_order[static_cast<std::size_t>(t)])] = s;
      color_hash = mix(color_hash, static_cast<std::uint64_t>(c) * 1000003ULL + static_cast<std::uint64_t>(k - i));
      i = k;
    }

    // Depth never exceeds n; sizing up front keeps references stable.
    pool_.resize(static_cast<std::size_t>(n_) + 1);
    NodeInvariant inv = refine(p, starts);
    inv.hash = mix(inv.hash, color_hash);
    cur_inv_.assign(1, inv);
    search(p, 0);

    CanonicalLabeling out;
    out.labeling.assign(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) out.labeling[static_cast<std::size_t>(best_order_[static_cast<std::size_t>(i)])] = i;
    out.form.n = n_;
    out.form.m = m_;
    out.form.words = std::move(best_cert_);
    out.generators = std::move(generators_);
    return out;
  }

 private:
  static constexpr int kNoJump = INT_MAX;

  // Equitable refinement driven by a FIFO of splitter cells. All decisions
  // depend on positions only, so the result and its invariant are
  // isomorphism-invariant.
  NodeInvariant refine(Partition& p, std::span<const int> initial) {
    std::uint64_t hash = 0;
    auto& queue = queue_;
    auto& touched_nodes = touched_nodes_;
    auto& touched_cells = touched_cells_;
    queue.assign(initial.begin(), initial.end());
    for (int s : queue) in_queue_[static_cast<std::size_t>(s)] = 1;
    std::size_t head = 0;
    while (head < queue.size()) {
      const int w = queue[head++];
      in_queue_[static_cast<std::size_t>(w)] = 0;
      const int we = p.cell_end[static_cast<std::size_t>(w)];
      touched_nodes.clear();
      for (int i = w; i < we; ++i) {
        const int x = p.lab[static_cast<std::size_t>(i)];
        for (int a = adj_start_[static_cast<std::size_t>(x)]; a < adj_start_[static_cast<std::size_t>(x) + 1]; ++a) {
          const int y = adj_[static_cast<std::size_t>(a)];
          if (counts_[static_cast<std::size_t>(y)]++ == 0) touched_nodes.push_back(y);
        }
      }
      touched_cells.clear();
      for (int y : touched_nodes) touched_cells.push_back(p.cell_of[static_cast<std::size_t>(y)]);
      std::sort(touched_cells.begin(), touched_cells.end());
      touched_cells.erase(std::unique(touched_cells.begin(), touched_cells.end()), touched_cells.end());

      hash = mix(hash, static_cast<std::uint64_t>(w));
      for (int s : touched_cells) {
        const int e = p.cell_end[static_cast<std::size_t>(s)];
        auto first = p.lab.begin() + s;
        auto last = p.lab.begin() + e;
        if (e - s == 1) {
          hash = mix(hash, static_cast<std::uint64_t>(s) * 131ULL +
                               static_cast<std::uint64_t>(counts_[static_cast<std::size_t>(*first)]));
          continue;
        }
        std::sort(first, last, [&](int a, int b) {
          return counts_[static_cast<std::size_t>(a)] < counts_[static_cast<std::size_t>(b)];
        });
        const bool was_queued = in_queue_[static_cast<std::size_t>(s)] != 0;
        int a = s;
        int fragments = 0;
        while (a < e) {
          const int c = counts_[static_cast<std::size_t>(p.lab[static_cast<std::size_t>(a)])];
          int b = a + 1;
          while (b < e && counts_[static_cast<std::size_t>(p.lab[static_cast<std::size_t>(b)])] == c) ++b;
          p.cell_end[static_cast<std::size_t>(a)] = b;
          for (int i = a; i < b; ++i) p.cell_of[static_cast<std::size_t>(p.lab[static_cast<std::size_t>(i)])] = a;
          hash = mix(hash, (static_cast<std::uint64_t>(a) << 32) ^ (static_cast<std::uint64_t>(b - a) << 16) ^
                               static_cast<std::uint64_t>(c));
          ++fragments;
          a = b;
        }
        if (fragments > 1) {
          for (int f = s; f < e; f = p.cell_end[static_cast<std::size_t>(f)]) {
            if (f == s && was_queued) continue;
            if (in_queue_[static_cast<std::size_t>(f)] == 0) {
              in_queue_[static_cast<std::size_t>(f)] = 1;
              queue.push_back(f);
            }
          }
        }
      }
      for (int y : touched_nodes) counts_[static_cast<std::size_t>(y)] = 0;
    }
    NodeInvariant inv;
    int cells = 0;
    for (int s = 0; s < total_; s = p.cell_end[static_cast<std::size_t>(s)]) {
      ++cells;
      if (s < n_ && p.cell_end[static_cast<std::size_t>(s)] - s > 1) ++inv.open_vertex_cells;
    }
    inv.hash = mix(hash, static_cast<std::uint64_t>(cells));
    return inv;
  }

  static void individualize(Partition& p, int node) {
    const int s = p.cell_of[static_cast<std::size_t>(node)];
    const int e = p.cell_end[static_cast<std::size_t>(s)];
    auto it = std::find(p.lab.begin() + s, p.lab.begin() + e, node);
    std::iter_swap(p.lab.begin() + s, it);
    p.cell_end[static_cast<std::size_t>(s)] = s + 1;
    p.cell_end[static_cast<std::size_t>(s + 1)] = e;
    for (int i = s + 1; i < e; ++i) p.cell_of[static_cast<std::size_t>(p.lab[static_cast<std::size_t>(i)])] = s + 1;
  }

  std::vector<std::uint64_t> certificate(const Partition& p) {
    auto& pos = pos_;
    pos.resize(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) pos[static_cast<std::size_t>(p.lab[static_cast<std::size_t>(i)])] = i;
    auto& relabeled = relabeled_;
    relabeled.clear();
    for (int j = 0; j < m_; ++j) {
      VertexSet image;
      edges_[static_cast<std::size_t>(j)].for_each([&](int v) { image.set(pos[static_cast<std::size_t>(v)]); });
      relabeled.emplace_back(colors_[static_cast<std::size_t>(j)], image);
    }
    std::sort(relabeled.begin(), relabeled.end());
    std::vector<std::uint64_t> words;
    words.reserve(relabeled.size() * 3);
    for (const auto& [c, s] : relabeled) {
      if (!uncolored_) words.push_back(static_cast<std::uint64_t>(c));
      words.push_back(s.high_word());
      words.push_back(s.low_word());
    }
    return words;
  }

  // -1, 0, 1 comparing the current invariant path prefix [0, len) with the best.
  int compare_prefix(std::size_t len) const {
    const std::size_t common = std::min(len, best_inv_.size());
    for (std::size_t i = 0; i < common; ++i) {
      if (cur_inv_[i] < best_inv_[i]) return -1;
      if (best_inv_[i] < cur_inv_[i]) return 1;
    }
    if (len > best_inv_.size()) return 1;
    return 0;
  }

  int leaf(const Partition& p) {
    std::vector<std::uint64_t> cert = certificate(p);
    std::vector<int> order(p.lab.begin(), p.lab.begin() + n_);
    if (!have_best_) {
      have_best_ = true;
      best_inv_ = cur_inv_;
      best_cert_ = std::move(cert);
      best_order_ = std::move(order);
      best_seq_ = seq_;
      return kNoJump;
    }
    int cmp = compare_prefix(cur_inv_.size());
    if (cmp == 0 && cur_inv_.size() != best_inv_.size()) cmp = 1;
    if (cmp == 0) cmp = cert < best_cert_ ? -1 : (best_cert_ < cert ? 1 : 0);
    if (cmp < 0) {
      best_inv_ = cur_inv_;
      best_cert_ = std::move(cert);
      best_order_ = std::move(order);
      best_seq_ = seq_;
      return kNoJump;
    }
    if (cmp > 0) return kNoJump;

    // Equal certificates: best_order -> order is an automorphism.
    std::vector<int> gamma(static_cast<std::size_t>(n_));
    bool identity = true;
    for (int i = 0; i < n_; ++i) {
      gamma[static_cast<std::size_t>(best_order_[static_cast<std::size_t>(i)])] = order[static_cast<std::size_t>(i)];
      identity = identity && best_order_[static_cast<std::size_t>(i)] == order[static_cast<std::size_t>(i)];
    }
    if (identity) return kNoJump;
    generators_.push_back(gamma);

    // If gamma maps the best path onto the current one up to the first
    // divergence, the current subtree at that level is the image of an
    // already explored one.
    std::size_t d = 0;
    while (d < seq_.size() && d < best_seq_.size() && seq_[d] == best_seq_[d]) ++d;
    if (d >= seq_.size() || d >= best_seq_.size()) return kNoJump;
    for (std::size_t i = 0; i <= d; ++i) {
      if (gamma[static_cast<std::size_t>(best_seq_[i])] != seq_[i]) return kNoJump;
    }
    return static_cast<int>(d);
  }

  static int find(std::vector<int>& uf, int x) {
    while (uf[static_cast<std::size_t>(x)] != x) {
      uf[static_cast<std::size_t>(x)] = uf[static_cast<std::size_t>(uf[static_cast<std::size_t>(x)])];
      x = uf[static_cast<std::size_t>(x)];
    }
    return x;
  }

  // Orbits of the subgroup generated by known automorphisms that fix the
  // current individualized sequence pointwise.
  void stabilizer_orbits(std::vector<int>& uf) const {
    uf.resize(static_cast<std::size_t>(n_));
    std::iota(uf.begin(), uf.end(), 0);
    for (const auto& g : generators_) {
      bool fixes = true;
      for (int x : seq_) fixes = fixes && g[static_cast<std::size_t>(x)] == x;
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        const int a = find(uf, v);
        const int b = find(uf, g[static_cast<std::size_t>(v)]);
        if (a != b) uf[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
  }

  int search(const Partition& p, int depth) {
    if (have_best_ && compare_prefix(static_cast<std::size_t>(depth) + 1) > 0) return kNoJump;
    if (cur_inv_[static_cast<std::size_t>(depth)].open_vertex_cells == 0) return leaf(p);

    int target = -1;
    for (int s = 0; s < n_; s = p.cell_end[static_cast<std::size_t>(s)]) {
      if (p.cell_end[static_cast<std::size_t>(s)] - s > 1) {
        target = s;
        break;
      }
    }
    std::vector<int> cell(p.lab.begin() + target, p.lab.begin() + p.cell_end[static_cast<std::size_t>(target)]);
    std::sort(cell.begin(), cell.end());

    std::vector<int> explored;
    std::vector<int> uf;
    std::size_t orbit_gens = static_cast<std::size_t>(-1);
    for (int x : cell) {
      if (!explored.empty() && !generators_.empty()) {
        if (orbit_gens != generators_.size()) {
          stabilizer_orbits(uf);
          orbit_gens = generators_.size();
        }
        const int rx = find(uf, x);
        if (std::any_of(explored.begin(), explored.end(), [&](int y) { return find(uf, y) == rx; })) continue;
      }
      Partition& child = pool_[static_cast<std::size_t>(depth)];
      child.lab = p.lab;
      child.cell_of = p.cell_of;
      child.cell_end = p.cell_end;
      individualize(child, x);
      const int singleton = child.cell_of[static_cast<std::size_t>(x)];
      NodeInvariant inv = refine(child, std::span<const int>(&singleton, 1));
      inv.hash = mix(inv.hash, static_cast<std::uint64_t>(singleton));
      cur_inv_.resize(static_cast<std::size_t>(depth) + 1);
      cur_inv_.push_back(inv);
      seq_.push_back(x);
      const int jump = search(child, depth + 1);
      seq_.pop_back();
      explored.push_back(x);
      if (jump < depth) return jump;
    }
    return kNoJump;
  }

  int n_ = 0;
  int m_ = 0;
  int total_ = 0;
  std::vector<VertexSet> edges_;
  std::vector<int> colors_;
  bool uncolored_ = true;
  std::vector<int> adj_start_;
  std::vector<int> adj_;
  std::vector<int> queue_;
  std::vector<int> touched_nodes_;
  std::vector<int> touched_cells_;
  std::vector<int> pos_;
  std::vector<std::pair<int, VertexSet>> relabeled_;
  // Partitions reused across siblings, one per search depth.
  std::vector<Partition> pool_;
  std::vector<int> counts_;
  std::vector<char> in_queue_;

  std::vector<NodeInvariant> cur_inv_;
  std::vector<int> seq_;
  bool have_best_ = false;
  std::vector<NodeInvariant> best_inv_;
  std::vector<std::uint64_t> best_cert_;
  std::vector<int> best_order_;
  std::vector<int> best_seq_;
  std::vector<std::vector<int>> generators_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Hypergraph& h, std::span<const int> edge_colors) {
  thread_local Canonizer canonizer;
  canonizer.reset(h, edge_colors);
  return canonizer.run();
}

CanonicalForm canonical_form(const Hypergraph& h) { return canonical_labeling(h).form; }

Hypergraph canonical_representative(const Hypergraph& h) {
  const CanonicalLabeling cl = canonical_labeling(h);
  std::vector<VertexSet> edges = h.relabeled(cl.labeling).sorted_edges();
  return Hypergraph(h.num_vertices(), std::move(edges));
}

bool are_isomorphic(const Hypergraph& a, const Hypergraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  return canonical_form(a) == canonical_form(b);
}

std::vector<Hypergraph> dedup(std::span<const Hypergraph> hypergraphs) {
  std::map<CanonicalForm, Hypergraph> classes;
  for (const auto& h : hypergraphs) {
    const CanonicalLabeling cl = canonical_labeling(h);
    if (classes.contains(cl.form)) continue;
    classes.emplace(cl.form, Hypergraph(h.num_vertices(), h.relabeled(cl.labeling).sorted_edges()));
  }
  std::vector<Hypergraph> out;
  out.reserve(classes.size());
  for (auto& [form, rep] : classes) out.push_back(std::move(rep));
  return out;
}

std::vector<int> edge_orbits(const Hypergraph& h, std::span<const std::vector<int>> generators) {
  const int m = h.num_edges();
  std::unordered_map<VertexSet, int, VertexSetHash> index;
  for (int j = 0; j < m; ++j) index.emplace(h.edge(j), j);
  std::vector<int> uf(static_cast<std::size_t>(m));
  std::iota(uf.begin(), uf.end(), 0);
  auto root = [&](int x) {
    while (uf[static_cast<std::size_t>(x)] != x) x = uf[static_cast<std::size_t>(x)];
    return x;
  };
  for (const auto& g : generators) {
    for (int j = 0; j < m; ++j) {
      VertexSet image;
      h.edge(j).for_each([&](int v) { image.set(g[static_cast<std::size_t>(v)]); });
      const int a = root(j);
      const int b = root(index.at(image));
      if (a != b) uf[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  }
  std::vector<int> orbit(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) orbit[static_cast<std::size_t>(j)] = root(j);
  return orbit;
}

}  // namespace covlab
