#include "covlab/constructions.hpp"

#include <algorithm>
#include <string>

#include "covlab/error.hpp"
#include "covlab/field.hpp"

namespace covlab {

namespace {

std::vector<Coordinates> normalized_triples(const FiniteField& f) {
  const int q = f.order();
  std::vector<Coordinates> out;
  for (int x = 0; x < q; ++x) {
    for (int y = 0; y < q; ++y) {
      for (int z = 0; z < q; ++z) {
        const int lead = x != 0 ? x : (y != 0 ? y : z);
        if (lead == 1) out.push_back({x, y, z});
      }
    }
  }
  return out;
}

void verify_plane_axioms(const ProjectivePlane& plane) {
  const Hypergraph& h = plane.incidence;
  const int n = h.num_vertices();
  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::UnsupportedOrder, "PG(2," + std::to_string(plane.q) + ") construction broke: " + what);
  };
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      int through = 0;
      for (const auto& line : h.edges()) through += (line.test(a) && line.test(b)) ? 1 : 0;
      if (through != 1) fail("point pair on " + std::to_string(through) + " lines");
    }
  }
  if (!is_t_intersecting(h, 1) || intersection_profile(h).t_max != 1) fail("two lines not meeting in one point");
}

}  // namespace

ProjectivePlane projective_plane(int q) {
  if (q != 2 && q != 3 && q != 4 && q != 5 && q != 7) {
    throw Error(ErrorCode::UnsupportedOrder, "PG(2," + std::to_string(q) + ") is not available (orders 2,3,4,5,7)");
  }
  const FiniteField f(q);
  ProjectivePlane plane;
  plane.q = q;
  plane.points = normalized_triples(f);
  plane.line_coordinates = plane.points;
  std::vector<VertexSet> lines;
  for (const auto& l : plane.line_coordinates) {
    VertexSet line;
    for (std::size_t i = 0; i < plane.points.size(); ++i) {
      const auto& p = plane.points[i];
      const int dot = f.add(f.add(f.mul(l[0], p[0]), f.mul(l[1], p[1])), f.mul(l[2], p[2]));
      if (dot == 0) line.set(static_cast<int>(i));
    }
    lines.push_back(line);
  }
  plane.incidence = Hypergraph(static_cast<int>(plane.points.size()), std::move(lines));
  verify_plane_axioms(plane);
  return plane;
}

Hypergraph complete_subsets(int n, int r) {
  if (r < 1 || r > n || n > 24) {
    throw Error(ErrorCode::InvalidSpec, "complete_subsets needs 1 <= r <= n <= 24");
  }
  std::vector<VertexSet> edges;
  std::vector<int> idx(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    if (edges.size() == static_cast<std::size_t>(kMaxEdges)) {
      throw Error(ErrorCode::CapacityExceeded, "more than 512 subsets of size " + std::to_string(r));
    }
    edges.push_back(VertexSet::from_vector(idx));
    int i = r - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - r + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return Hypergraph(n, std::move(edges));
}

Hypergraph cross_grid(int rows, int cols) {
  if (rows < 2 || cols < 2 || rows * cols > kMaxVertices) {
    throw Error(ErrorCode::InvalidSpec, "cross_grid needs rows, cols >= 2 and rows*cols <= 128");
  }
  std::vector<VertexSet> edges;
  for (int a = 0; a < rows; ++a) {
    for (int b = 0; b < cols; ++b) {
      VertexSet cross;
      for (int j = 0; j < cols; ++j) cross.set(a * cols + j);
      for (int i = 0; i < rows; ++i) cross.set(i * cols + b);
      edges.push_back(cross);
    }
  }
  return Hypergraph(rows * cols, std::move(edges));
}

Hypergraph kummer() {
  std::vector<VertexSet> edges;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      VertexSet e;
      for (int k = 0; k < 4; ++k) {
        if (k != b) e.set(a * 4 + k);
        if (k != a) e.set(k * 4 + b);
      }
      edges.push_back(e);
    }
  }
  return Hypergraph(16, std::move(edges));
}

Hypergraph paley_biplane() {
  constexpr std::array<int, 5> residues{1, 3, 4, 5, 9};
  std::vector<VertexSet> edges;
  for (int shift = 0; shift < 11; ++shift) {
    VertexSet block;
    for (int d : residues) block.set((d + shift) % 11);
    edges.push_back(block);
  }
  return Hypergraph(11, std::move(edges));
}

Hypergraph three_hares(ThreeHares variant) {
  // 1-based labels as usually drawn; shifted to 0-based below.
  std::vector<std::vector<int>> edges;
  int n = 10;
  switch (variant) {
    case ThreeHares::Chain:
      n = 9;
      edges = {{1, 2, 3, 4, 5}, {4, 5, 6, 7, 8}, {7, 8, 9, 1, 2}};
      break;
    case ThreeHares::Extended:
      edges = {{9, 1, 2, 5, 6}, {3, 4, 5, 8, 9}, {2, 3, 6, 7, 8}};
      [[fallthrough]];
    case ThreeHares::Base:
      edges.insert(edges.begin(), {{1, 2, 3, 4, 10}, {4, 5, 6, 7, 10}, {7, 8, 9, 1, 10}});
      break;
  }
  for (auto& e : edges) {
    for (int& v : e) --v;
  }
  return Hypergraph(n, edges);
}

Hypergraph tetrahedron() { return complete_subsets(4, 3); }

Hypergraph fano_plane() { return projective_plane(2).incidence; }

Hypergraph fano_complement() {
  const Hypergraph fano = fano_plane();
  std::vector<VertexSet> edges;
  for (const auto& line : fano.edges()) edges.push_back(VertexSet::prefix(7) - line);
  return Hypergraph(7, std::move(edges));
}

Hypergraph oval_lines(int q) {
  if (q != 2 && q != 3 && q != 4 && q != 5 && q != 7) {
    throw Error(ErrorCode::UnsupportedOrder, "oval construction needs q in {2,3,4,5,7}");
  }
  const ProjectivePlane plane = projective_plane(q);
  const FiniteField f(q);
  VertexSet conic;
  for (int s = 0; s < q; ++s) {
    const Coordinates c{1, s, f.mul(s, s)};
    conic.set(static_cast<int>(std::find(plane.points.begin(), plane.points.end(), c) - plane.points.begin()));
  }
  conic.set(static_cast<int>(std::find(plane.points.begin(), plane.points.end(), Coordinates{0, 0, 1}) -
                             plane.points.begin()));
  std::vector<VertexSet> lines;
  for (const auto& line : plane.incidence.edges()) {
    if (line.intersects(conic)) lines.push_back(line);
  }
  return Hypergraph(plane.incidence.num_vertices(), std::move(lines));
}

Hypergraph ag23_dual() {
  constexpr std::array<std::array<int, 2>, 4> directions{{{0, 1}, {1, 0}, {1, 1}, {1, 2}}};
  std::vector<VertexSet> edges;
  int extra = 9;
  for (const auto& d : directions) {
    // The three parallel lines of this class, as point sets.
    std::vector<VertexSet> lines;
    for (int start = 0; start < 9 && lines.size() < 3; ++start) {
      VertexSet line;
      for (int t = 0; t < 3; ++t) {
        const int x = (start / 3 + t * d[0]) % 3;
        const int y = (start % 3 + t * d[1]) % 3;
        line.set(3 * x + y);
      }
      if (std::find(lines.begin(), lines.end(), line) == lines.end()) lines.push_back(line);
    }
    // One shared extra vertex per pair of parallel lines.
    for (int a = 0; a < 3; ++a) {
      for (int b = a + 1; b < 3; ++b) {
        lines[static_cast<std::size_t>(a)].set(extra);
        lines[static_cast<std::size_t>(b)].set(extra);
        ++extra;
      }
    }
    edges.insert(edges.end(), lines.begin(), lines.end());
  }
  return Hypergraph(21, std::move(edges));
}

namespace {

class PlaneEmbedder {
 public:
  PlaneEmbedder(const Hypergraph& h, const ProjectivePlane& plane)
      : h_(h), n_(h.num_vertices()), points_(plane.incidence.num_vertices()) {
    const auto& lines = plane.incidence.edges();
    line_sets_.assign(lines.begin(), lines.end());
    through_.assign(static_cast<std::size_t>(points_ * points_), -1);
    for (int l = 0; l < static_cast<int>(lines.size()); ++l) {
      const auto members = lines[static_cast<std::size_t>(l)].to_vector();
      for (int a : members) {
        for (int b : members) through_[static_cast<std::size_t>(a * points_ + b)] = l;
      }
    }
    incident_.resize(static_cast<std::size_t>(n_));
    for (int j = 0; j < h.num_edges(); ++j) {
      h.edge(j).for_each([&](int v) { incident_[static_cast<std::size_t>(v)].push_back(j); });
    }
    // Order vertices so that each new one shares as many edges as possible
    // with those already placed.
    std::vector<int> score(static_cast<std::size_t>(n_), 0);
    std::vector<char> placed(static_cast<std::size_t>(n_), 0);
    for (int step = 0; step < n_; ++step) {
      int best = -1;
      for (int v = 0; v < n_; ++v) {
        if (placed[static_cast<std::size_t>(v)] != 0) continue;
        if (best < 0 || score[static_cast<std::size_t>(v)] > score[static_cast<std::size_t>(best)]) best = v;
      }
      placed[static_cast<std::size_t>(best)] = 1;
      order_.push_back(best);
      for (int j : incident_[static_cast<std::size_t>(best)]) {
        h.edge(j).for_each([&](int u) { ++score[static_cast<std::size_t>(u)]; });
      }
    }
  }

  std::optional<std::vector<int>> run() {
    if (n_ > points_) return std::nullopt;
    image_.assign(static_cast<std::size_t>(n_), -1);
    used_.assign(static_cast<std::size_t>(points_), 0);
    edge_line_.assign(static_cast<std::size_t>(h_.num_edges()), -1);
    anchor_.assign(static_cast<std::size_t>(h_.num_edges()), -1);
    if (extend(0)) return image_;
    return std::nullopt;
  }

 private:
  bool extend(int step) {
    if (step == n_) return true;
    const int v = order_[static_cast<std::size_t>(step)];
    // PGL(3,q) is 2-transitive on points: the first two images are free.
    const int limit = step < 2 ? step + 1 : points_;
    for (int p = 0; p < limit; ++p) {
      if (used_[static_cast<std::size_t>(p)] != 0) continue;
      std::vector<std::pair<int, int>> undo;  // (edge, previous line) or anchors
      bool ok = true;
      for (int j : incident_[static_cast<std::size_t>(v)]) {
        const auto ju = static_cast<std::size_t>(j);
        if (edge_line_[ju] >= 0) {
          if (!line_sets_[static_cast<std::size_t>(edge_line_[ju])].test(p)) {
            ok = false;
            break;
          }
        } else if (anchor_[ju] >= 0) {
          edge_line_[ju] = through_[static_cast<std::size_t>(anchor_[ju] * points_ + p)];
          undo.emplace_back(j, 0);
        } else {
          anchor_[ju] = p;
          undo.emplace_back(j, 1);
        }
      }
      if (ok) {
        used_[static_cast<std::size_t>(p)] = 1;
        image_[static_cast<std::size_t>(v)] = p;
        if (extend(step + 1)) return true;
        used_[static_cast<std::size_t>(p)] = 0;
        image_[static_cast<std::size_t>(v)] = -1;
      }
      for (auto [j, kind] : undo) {
        if (kind == 0) {
          edge_line_[static_cast<std::size_t>(j)] = -1;
        } else {
          anchor_[static_cast<std::size_t>(j)] = -1;
        }
      }
    }
    return false;
  }

  const Hypergraph& h_;
  int n_;
  int points_;
  std::vector<VertexSet> line_sets_;
  std::vector<int> through_;
  std::vector<std::vector<int>> incident_;
  std::vector<int> order_;
  std::vector<int> image_;
  std::vector<char> used_;
  std::vector<int> edge_line_;
  std::vector<int> anchor_;
};

}  // namespace

std::optional<std::vector<int>> embed_in_plane(const Hypergraph& h, const ProjectivePlane& plane) {
  return PlaneEmbedder(h, plane).run();
}

}  // namespace covlab
