#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "covlab/hypergraph.hpp"

namespace covlab {

// Isomorphism-class key. Two hypergraphs get equal keys iff some vertex
// bijection maps one edge set onto the other. `words` is the edge set of the
// canonically relabeled hypergraph, sorted, two 64-bit words per edge (high
// word first), preceded by the edge color when colors were supplied.
struct CanonicalForm {
  int n = 0;
  int m = 0;
  std::vector<std::uint64_t> words;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const noexcept;
};

struct CanonicalLabeling {
  CanonicalForm form;
  // labeling[v] is the canonical label of vertex v.
  std::vector<int> labeling;
  // Vertex permutations generating the automorphism group (identity omitted).
  std::vector<std::vector<int>> generators;
};

// Individualization-refinement over the Levi graph. Vertices and edges are
// kept on separate sides; edge_colors (optional, one per edge) must be
// preserved by the isomorphisms considered.
CanonicalLabeling canonical_labeling(const Hypergraph& h, std::span<const int> edge_colors = {});

CanonicalForm canonical_form(const Hypergraph& h);

// The hypergraph relabeled canonically, edges in ascending order.
Hypergraph canonical_representative(const Hypergraph& h);

bool are_isomorphic(const Hypergraph& a, const Hypergraph& b);

// One canonical representative per isomorphism class, ordered by key.
std::vector<Hypergraph> dedup(std::span<const Hypergraph> hypergraphs);

// Orbit id (smallest member index) for each edge of h under the group
// generated by `generators`.
std::vector<int> edge_orbits(const Hypergraph& h, std::span<const std::vector<int>> generators);

}  // namespace covlab
