#include "covlab/search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <thread>

#include "covlab/constructions.hpp"
#include "covlab/cover.hpp"
#include "covlab/error.hpp"

namespace covlab {

namespace {

constexpr std::uint64_t kMaxCandidates = 1u << 22;
// Exact completion lookahead: only for small candidate pools (adjacency
// bitsets are quadratic) and a few remaining edges.
constexpr std::size_t kLookaheadCandidates = 4096;
constexpr int kLookaheadDepth = 5;

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t b = 1;
  for (int i = 1; i <= k; ++i) {
    b = b * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    if (b > (1ull << 40)) return b;
  }
  return b;
}

struct Found {
  CanonicalForm form;
  Hypergraph representative;
  bool extremal = false;
};

// Leaves reached by one task. Without representatives only extremal classes
// are stored; the rest are just counted.
struct Sink {
  std::vector<Found> kept;
  std::size_t count = 0;
};

struct Node {
  std::vector<VertexSet> edges;
  std::vector<int> degrees;
  std::vector<int> compatible;  // candidate indices, ascending
  std::vector<std::vector<int>> generators;
  bool generators_known = false;
};

using EdgeKey = std::array<long long, 3>;

struct Scratch {
  std::vector<int> degrees;
  std::vector<int> lower;
  std::vector<int> reach;
  std::vector<int> compatible;
  std::vector<VertexSet> edges;
  std::vector<EdgeKey> keys;
};

class Generator {
 public:
  Generator(const SearchSpec& spec, bool keep)
      : spec_(spec),
        keep_(keep),
        cap_(spec.effective_max_degree()),
        // The degree sum is m*r, so no vertex ends below m*r - (n-1)*cap.
        floor_(std::max(spec.min_degree, spec.m * spec.r - (spec.n - 1) * spec.effective_max_degree())) {
    binom_.assign(static_cast<std::size_t>(spec.n + 1), std::vector<std::uint64_t>(static_cast<std::size_t>(spec.r + 1), 0));
    for (int a = 0; a <= spec.n; ++a) {
      for (int i = 0; i <= spec.r; ++i) binom_[a][i] = binomial(a, i);
    }
    candidates_.resize(binomial(spec.n, spec.r));
    std::vector<int> combo(static_cast<std::size_t>(spec.r));
    std::iota(combo.begin(), combo.end(), 0);
    while (true) {
      const VertexSet s = VertexSet::from_vector(combo);
      candidates_[rank(s)] = s;
      int i = spec.r - 1;
      while (i >= 0 && combo[i] == spec.n - spec.r + i) --i;
      if (i < 0) break;
      ++combo[i];
      for (int j = i + 1; j < spec.r; ++j) combo[j] = combo[j - 1] + 1;
    }
    if (candidates_.size() <= kLookaheadCandidates) {
      const std::size_t count = candidates_.size();
      words_ = static_cast<int>((count + 63) / 64);
      adj_.assign(count * static_cast<std::size_t>(words_), 0);
      contains_.assign(static_cast<std::size_t>(spec.n) * static_cast<std::size_t>(words_), 0);
      for (std::size_t a = 0; a < count; ++a) {
        candidates_[a].for_each([&](int v) { contains_[static_cast<std::size_t>(v) * words_ + a / 64] |= 1ull << (a % 64); });
        for (std::size_t b = 0; b < count; ++b) {
          if (a != b && candidates_[a].intersection_size(candidates_[b]) >= spec.t) {
            adj_[a * static_cast<std::size_t>(words_) + b / 64] |= 1ull << (b % 64);
          }
        }
      }
    }
  }

  // Colex rank of an r-subset.
  std::size_t rank(const VertexSet& s) const {
    std::uint64_t rk = 0;
    int i = 0;
    s.for_each([&](int v) { rk += binom_[v][++i]; });
    return static_cast<std::size_t>(rk);
  }

  Node root() const {
    Node node;
    node.degrees.assign(static_cast<std::size_t>(spec_.n), 0);
    node.compatible.resize(candidates_.size());
    std::iota(node.compatible.begin(), node.compatible.end(), 0);
    // The empty hypergraph on n vertices: the full symmetric group.
    for (int i = 0; i + 1 < spec_.n; ++i) {
      std::vector<int> swap(static_cast<std::size_t>(spec_.n));
      std::iota(swap.begin(), swap.end(), 0);
      std::swap(swap[i], swap[i + 1]);
      node.generators.push_back(std::move(swap));
    }
    node.generators_known = true;
    return node;
  }

  // Children of `node` that pass the augmentation test, in candidate order.
  // Leaves (m edges) are appended to `found` instead.
  template <typename Visit>
  void expand(Node& node, Sink& found, std::size_t& nodes, Visit&& visit) const {
    if (!node.generators_known) {
      std::vector<EdgeKey> keys(node.edges.size());
      for (std::size_t i = 0; i < keys.size(); ++i) keys[i] = edge_key(node.edges, node.degrees, static_cast<int>(i));
      const auto colors = key_colors(keys);
      node.generators = canonical_labeling(Hypergraph(spec_.n, node.edges), colors).generators;
      node.generators_known = true;
    }
    const auto& compat = node.compatible;
    std::vector<int> parent(compat.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& g : node.generators) {
      for (std::size_t i = 0; i < compat.size(); ++i) {
        VertexSet image;
        candidates_[compat[i]].for_each([&](int v) { image.set(g[v]); });
        const int target = static_cast<int>(rank(image));
        const auto it = std::lower_bound(compat.begin(), compat.end(), target);
        const int j = static_cast<int>(it - compat.begin());
        int a = find(static_cast<int>(i));
        int b = find(j);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        parent[b] = a;
      }
    }
    for (std::size_t i = 0; i < compat.size(); ++i) {
      if (find(static_cast<int>(i)) != static_cast<int>(i)) continue;
      Node child;
      if (!make_child(node, compat[i], child)) continue;
      ++nodes;
      if (static_cast<int>(child.edges.size()) == spec_.m) {
        finish(child, found);
      } else {
        visit(child);
      }
    }
  }

  void run(Node& node, Sink& found, std::size_t& nodes) const {
    expand(node, found, nodes, [&](Node& child) { run(child, found, nodes); });
  }

 private:
  bool make_child(const Node& node, int index, Node& child) const {
    thread_local Scratch scratch;
    const VertexSet c = candidates_[index];
    const int m = spec_.m;
    const int k = static_cast<int>(node.edges.size()) + 1;
    const int remaining = m - k;

    auto& degrees = scratch.degrees;
    degrees.assign(node.degrees.begin(), node.degrees.end());
    c.for_each([&](int v) { ++degrees[v]; });
    long long deficit = 0;
    for (int d : degrees) {
      const int need = std::max(0, floor_ - d);
      if (need > remaining) return false;
      deficit += need;
    }
    if (deficit > static_cast<long long>(remaining) * spec_.r) return false;

    auto& edges = scratch.edges;
    edges.assign(node.edges.begin(), node.edges.end());
    edges.push_back(c);
    auto& keys = scratch.keys;
    if (!last_edge_has_top_key(edges, degrees, keys)) return false;

    auto& compat = scratch.compatible;
    compat.clear();
    if (remaining > 0) {
      VertexSet saturated;
      for (int v = 0; v < spec_.n; ++v) {
        if (degrees[v] >= cap_) saturated.set(v);
      }
      for (int j : node.compatible) {
        if (j == index) continue;
        const VertexSet& e = candidates_[j];
        if (e.intersection_size(c) < spec_.t || e.intersects(saturated)) continue;
        compat.push_back(j);
      }
      if (static_cast<int>(compat.size()) < remaining) return false;

      // room[v]: how many more edges can still contain v. Every remaining
      // edge meets each present edge in at least t vertices, and a candidate
      // needs t hits from each of the other remaining edges.
      auto& room = scratch.reach;
      const int hits = spec_.t * remaining;
      for (int pass = 0; pass < 2; ++pass) {
        room.assign(static_cast<std::size_t>(spec_.n), 0);
        for (int j : compat) candidates_[j].for_each([&](int v) { ++room[v]; });
        for (int v = 0; v < spec_.n; ++v) {
          room[v] = std::min({cap_ - degrees[v], remaining, room[v]});
          if (degrees[v] + room[v] < floor_) return false;
        }
        for (const auto& e : edges) {
          int sum = 0;
          e.for_each([&](int v) { sum += room[v]; });
          if (sum < hits) return false;
        }
        std::size_t kept = 0;
        for (int j : compat) {
          int sum = 0;
          candidates_[j].for_each([&](int v) { sum += room[v] - 1; });
          if (sum >= hits - spec_.t) compat[kept++] = j;
        }
        if (kept == compat.size()) break;
        compat.resize(kept);
        if (static_cast<int>(compat.size()) < remaining) return false;
      }

      auto& lower = scratch.lower;
      lower.assign(degrees.begin(), degrees.end());
      for (int& d : lower) d = std::max(d, floor_);
      if (max_pair_count(lower, cap_, m * spec_.r) < static_cast<long long>(spec_.t) * m * (m - 1)) return false;
      if (words_ > 0 && remaining <= kLookaheadDepth && !completable(compat, degrees, remaining)) return false;
    }
    child.edges = edges;
    child.degrees = degrees;
    child.compatible = compat;
    return canonical_parent_test(child, keys);
  }

  // Whether `left` pairwise compatible candidates from `compat` bring every
  // degree into [floor_, cap_]. Depends only on the isomorphism class.
  bool completable(const std::vector<int>& compat, const std::vector<int>& degrees, int left) const {
    thread_local std::vector<std::uint64_t> pool;
    thread_local std::vector<int> deg;
    pool.assign(static_cast<std::size_t>(words_) * static_cast<std::size_t>(left + 1), 0);
    for (int j : compat) pool[static_cast<std::size_t>(j) / 64] |= 1ull << (j % 64);
    deg.assign(degrees.begin(), degrees.end());
    return complete(pool.data(), deg.data(), left);
  }

  bool complete(std::uint64_t* bits, int* deg, int left) const {
    const int w = words_;
    if (left == 0) {
      for (int v = 0; v < spec_.n; ++v) {
        if (deg[v] < floor_) return false;
      }
      return true;
    }
    auto count = [&](const std::uint64_t* a) {
      int c = 0;
      for (int i = 0; i < w; ++i) c += std::popcount(a[i]);
      return c;
    };
    auto count_and = [&](const std::uint64_t* a, const std::uint64_t* b) {
      int c = 0;
      for (int i = 0; i < w; ++i) c += std::popcount(a[i] & b[i]);
      return c;
    };
    // A vertex needing an edge from every remaining pick forces the pool.
    long long total = 0;
    int branch = -1;
    int branch_avail = 0;
    for (int v = 0; v < spec_.n; ++v) {
      const int need = floor_ - deg[v];
      if (need <= 0) continue;
      if (need > left) return false;
      const std::uint64_t* mask = &contains_[static_cast<std::size_t>(v) * w];
      if (need == left) {
        for (int i = 0; i < w; ++i) bits[i] &= mask[i];
      }
      total += need;
    }
    if (total > static_cast<long long>(left) * spec_.r || count(bits) < left) return false;
    for (int v = 0; v < spec_.n; ++v) {
      const int need = floor_ - deg[v];
      if (need <= 0) continue;
      const int avail = count_and(bits, &contains_[static_cast<std::size_t>(v) * w]);
      if (avail < need) return false;
      if (branch < 0 || avail < branch_avail) {
        branch = v;
        branch_avail = avail;
      }
    }
    // Some pick must contain `branch`; try each such candidate, excluding it
    // from later branches once refuted.
    std::uint64_t* next = bits + w;
    for (int i = 0; i < w; ++i) {
      std::uint64_t choices = bits[i];
      if (branch >= 0) choices &= contains_[static_cast<std::size_t>(branch) * w + i];
      while (choices != 0) {
        const int j = i * 64 + std::countr_zero(choices);
        choices &= choices - 1;
        bits[i] &= ~(1ull << (j % 64));
        const std::uint64_t* adj = &adj_[static_cast<std::size_t>(j) * w];
        for (int x = 0; x < w; ++x) next[x] = bits[x] & adj[x];
        const VertexSet& c = candidates_[j];
        c.for_each([&](int v) {
          if (++deg[v] >= cap_) {
            const std::uint64_t* mask = &contains_[static_cast<std::size_t>(v) * w];
            for (int x = 0; x < w; ++x) next[x] &= ~mask[x];
          }
        });
        const bool ok = complete(next, deg, left - 1);
        c.for_each([&](int v) { --deg[v]; });
        if (ok) return true;
        if (count(bits) < left) return false;
      }
    }
    return false;
  }

  // Edge invariant: (sum of degrees, sum of squared degrees, sum of squared
  // intersection sizes). The canonical deletion edge maximizes it.
  static EdgeKey edge_key(const std::vector<VertexSet>& edges, const std::vector<int>& degrees, int i) {
    EdgeKey key{0, 0, 0};
    edges[i].for_each([&](int v) {
      key[0] += degrees[v];
      key[1] += static_cast<long long>(degrees[v]) * degrees[v];
    });
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (static_cast<int>(j) == i) continue;
      const long long s = edges[i].intersection_size(edges[j]);
      key[2] += s * s;
    }
    return key;
  }

  static bool last_edge_has_top_key(const std::vector<VertexSet>& edges, const std::vector<int>& degrees,
                                    std::vector<EdgeKey>& keys) {
    const int k = static_cast<int>(edges.size());
    keys.resize(static_cast<std::size_t>(k));
    keys[k - 1] = edge_key(edges, degrees, k - 1);
    for (int i = 0; i + 1 < k; ++i) {
      keys[i] = edge_key(edges, degrees, i);
      if (keys[i] > keys[k - 1]) return false;
    }
    return true;
  }

  static std::vector<int> key_colors(const std::vector<EdgeKey>& keys) {
    std::vector<EdgeKey> distinct(keys);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<int> colors(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i) {
      colors[i] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), keys[i]) - distinct.begin());
    }
    return colors;
  }

  // Accept iff the last edge is in the Aut orbit of the canonical deletion
  // edge: among the edges of top key, the one with the largest canonical image.
  bool canonical_parent_test(Node& child, const std::vector<EdgeKey>& keys) const {
    const auto& edges = child.edges;
    const int k = static_cast<int>(edges.size());
    const EdgeKey top = keys.back();
    if (std::count(keys.begin(), keys.end(), top) == 1) return true;

    // Keys are isomorphism invariants, so coloring edges by them leaves the
    // automorphism group unchanged and speeds up refinement.
    const Hypergraph h(spec_.n, edges);
    const auto colors = key_colors(keys);
    CanonicalLabeling lab = canonical_labeling(h, colors);
    int best = -1;
    VertexSet best_image;
    for (int i = 0; i < k; ++i) {
      if (keys[i] != top) continue;
      VertexSet image;
      edges[i].for_each([&](int v) { image.set(lab.labeling[v]); });
      if (best < 0 || image > best_image) {
        best = i;
        best_image = image;
      }
    }
    child.generators = std::move(lab.generators);
    child.generators_known = true;
    if (best == k - 1) return true;
    const auto orbit = edge_orbits(h, child.generators);
    return orbit[best] == orbit[k - 1];
  }

  void finish(const Node& leaf, Sink& sink) const {
    const Hypergraph h(spec_.n, leaf.edges);
    bool extremal = false;
    if (spec_.target_tau) {
      const int target = *spec_.target_tau;
      extremal = (target == 0 || !find_cover(h, target - 1)) && find_cover(h, target).has_value();
    }
    ++sink.count;
    if (!keep_ && !extremal) return;
    const CanonicalLabeling lab = canonical_labeling(h);
    Found f{lab.form, h.relabeled(lab.labeling), extremal};
    f.representative = Hypergraph(spec_.n, f.representative.sorted_edges());
    sink.kept.push_back(std::move(f));
  }

  SearchSpec spec_;
  bool keep_;
  int cap_;
  int floor_;
  std::vector<std::vector<std::uint64_t>> binom_;
  std::vector<VertexSet> candidates_;
  int words_ = 0;
  std::vector<std::uint64_t> adj_;       // candidate -> t-intersecting candidates
  std::vector<std::uint64_t> contains_;  // vertex -> candidates containing it
};

}  // namespace

void SearchSpec::validate() const {
  auto bad = [&](const std::string& why) { throw Error(ErrorCode::InvalidSpec, describe() + ": " + why); };
  if (r < 1) bad("r must be positive");
  if (n < 1 || m < 1) bad("n and m must be positive");
  if (n > kMaxVertices) throw Error(ErrorCode::CapacityExceeded, describe() + ": n exceeds 128");
  if (m > kMaxEdges) throw Error(ErrorCode::CapacityExceeded, describe() + ": m exceeds 512");
  if (r > n) bad("r exceeds n");
  if (t < 0 || t > r) bad("t must lie in [0, r]");
  if (min_degree < 1) bad("min_degree must be at least 1");
  if (max_degree < 0 || effective_max_degree() < min_degree) bad("empty degree window");
  if (target_tau && (*target_tau < 0 || *target_tau > n)) bad("target tau out of range");
  if (binomial(n, r) > kMaxCandidates) throw Error(ErrorCode::CapacityExceeded, describe() + ": too many candidate edges");
}

bool SearchSpec::handshake_consistent() const {
  const long long incidences = static_cast<long long>(m) * r;
  return static_cast<long long>(n) * min_degree <= incidences &&
         incidences <= static_cast<long long>(n) * effective_max_degree();
}

std::string SearchSpec::describe() const {
  std::string s = "r=" + std::to_string(r) + " t=" + std::to_string(t) + " n=" + std::to_string(n) +
                  " m=" + std::to_string(m) + " deg=[" + std::to_string(min_degree) + "," +
                  std::to_string(effective_max_degree()) + "]";
  if (target_tau) s += " tau=" + std::to_string(*target_tau);
  return s;
}

int min_vertex_bound(int r, int m, int max_degree) {
  if (max_degree <= 0) throw Error(ErrorCode::InvalidSpec, "max_degree must be positive");
  return (m * r + max_degree - 1) / max_degree;
}

long long max_pair_count(std::span<const int> lower, int cap, int total) {
  if (cap < 0) return -1;
  long long sum = 0;
  long long room = 0;
  std::vector<long long> count(static_cast<std::size_t>(cap) + 1, 0);
  for (int d : lower) {
    if (d > cap || d < 0) return -1;
    sum += d;
    room += cap - d;
    ++count[d];
  }
  long long extra = total - sum;
  if (extra < 0 || extra > room) return -1;
  // d(d-1) is convex: pile the spare incidences onto the largest degrees.
  long long pairs = 0;
  for (int d = cap; d >= 0; --d) {
    for (long long c = count[d]; c > 0; --c) {
      const long long add = std::min<long long>(extra, cap - d);
      extra -= add;
      const long long f = d + add;
      pairs += f * (f - 1);
      if (extra == 0) {
        for (int e = d; e >= 0; --e) pairs += (e == d ? c - 1 : count[e]) * e * (e - 1);
        return pairs;
      }
    }
  }
  return pairs;
}

int resolve_threads(int requested) {
  int threads = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  if (const char* env = std::getenv("COVERING_LAB_THREADS")) {
    const int limit = std::atoi(env);
    if (limit >= 1) threads = std::min(threads, limit);
  }
  return threads;
}

SearchReport generate(const SearchSpec& spec, const SearchOptions& options) {
  spec.validate();
  const auto start = std::chrono::steady_clock::now();
  SearchReport report;
  report.spec = spec;
  if (!spec.handshake_consistent() || binomial(spec.n, spec.r) < static_cast<std::uint64_t>(spec.m)) {
    return report;
  }

  const Generator gen(spec, options.keep_representatives);
  Sink found;
  const int threads = resolve_threads(options.threads);
  if (threads == 1) {
    Node root = gen.root();
    gen.run(root, found, report.nodes);
  } else {
    // Split the tree at a fixed depth; tasks are merged in task order, so the
    // result does not depend on the thread count.
    const int split = std::min(spec.m - 1, 3);
    std::vector<Node> frontier{gen.root()};
    for (int depth = 0; depth < split; ++depth) {
      std::vector<Node> next;
      for (Node& node : frontier) {
        gen.expand(node, found, report.nodes, [&](Node& child) { next.push_back(std::move(child)); });
      }
      frontier = std::move(next);
    }
    std::vector<Sink> results(frontier.size());
    std::vector<std::size_t> counts(frontier.size(), 0);
    std::atomic<std::size_t> cursor{0};
    auto worker = [&]() {
      for (std::size_t i = cursor++; i < frontier.size(); i = cursor++) {
        gen.run(frontier[i], results[i], counts[i]);
      }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (std::size_t i = 0; i < results.size(); ++i) {
      report.nodes += counts[i];
      found.count += results[i].count;
      for (auto& f : results[i].kept) found.kept.push_back(std::move(f));
    }
  }

  std::sort(found.kept.begin(), found.kept.end(), [](const Found& a, const Found& b) { return a.form < b.form; });
  report.class_count = found.count;
  for (auto& f : found.kept) {
    if (f.extremal) {
      ++report.extremal_count;
      report.extremal.push_back(f.representative);
    }
    if (options.keep_representatives) report.representatives.push_back(std::move(f.representative));
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

ClassificationReport verify_classification(int r, const SearchOptions& options) {
  if (r != 3 && r != 4) throw Error(ErrorCode::InvalidSpec, "classification supports r = 3 and r = 4");
  ClassificationReport report;
  report.r = r;
  // tau-critical r-uniform families with tau = r-1 have at most C(2r-2, r) edges.
  report.max_edges = static_cast<int>(binomial(2 * r - 2, r));
  std::vector<std::pair<CanonicalForm, Hypergraph>> classes;
  for (int m = 1; m <= report.max_edges; ++m) {
    int cap = 0;
    try {
      cap = max_degree_cap(m, r, r - 1, true);
    } catch (const Error&) {
      continue;
    }
    // Minimum degree r forces n <= m.
    for (int n = std::max(r, min_vertex_bound(r, m, cap)); n <= m; ++n) {
      SearchSpec spec;
      spec.r = r;
      spec.t = 2;
      spec.n = n;
      spec.m = m;
      spec.min_degree = r;
      spec.max_degree = cap;
      spec.target_tau = r - 1;
      SearchReport run = generate(spec, options);
      for (const auto& h : run.extremal) classes.emplace_back(canonical_form(h), h);
      run.representatives.clear();
      report.runs.push_back(std::move(run));
    }
  }
  std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [form, h] : classes) {
    bool extendable = false;
    // A new edge keeps e old vertices and adds r-e fresh ones; with e >= 2
    // fixed, which fresh vertices are used does not matter.
    const int n = h.num_vertices();
    for (int keep = 2; keep <= std::min(r, n) && !extendable; ++keep) {
      if (n + (r - keep) > kMaxVertices) continue;
      std::vector<int> combo(static_cast<std::size_t>(keep));
      std::iota(combo.begin(), combo.end(), 0);
      while (!extendable) {
        VertexSet e = VertexSet::from_vector(combo);
        for (int f = 0; f < r - keep; ++f) e.set(n + f);
        bool ok = !h.has_edge(e);
        for (const auto& old : h.edges()) {
          if (!ok) break;
          ok = old.intersection_size(e) >= 2;
        }
        extendable = ok;
        int i = keep - 1;
        while (i >= 0 && combo[i] == n - keep + i) --i;
        if (i < 0) break;
        ++combo[i];
        for (int j = i + 1; j < keep; ++j) combo[j] = combo[j - 1] + 1;
      }
    }
    report.classes.push_back(std::move(h));
    report.maximal.push_back(!extendable);
  }
  return report;
}

}  // namespace covlab
