#pragma once

#include <optional>
#include <vector>

#include "covlab/hypergraph.hpp"

namespace covlab {

struct CoverCertificate {
  VertexSet vertices;
  int size() const { return vertices.count(); }
};

struct TauResult {
  int tau = 0;
  CoverCertificate witness;
  // Set when every vertex set of size tau-1 has been refuted.
  bool exhaustive = false;
};

bool is_cover(const Hypergraph& h, const VertexSet& s);

// Exact covering number by branch and bound. The witness is deterministic.
TauResult covering_number(const Hypergraph& h);

// Decision mode: a cover with at most k vertices, or nullopt if none exists.
std::optional<CoverCertificate> find_cover(const Hypergraph& h, int k);

// Reference implementation: tries every vertex subset in increasing size.
// Exponential; meant for cross-checking on small instances.
TauResult covering_number_oracle(const Hypergraph& h);

// 1 + ceil((e - delta) / 2): one maximum-degree vertex plus one vertex per pair
// of remaining (pairwise intersecting) edges.
int greedy_tau_upper(int e, int delta);

// Largest maximum degree that still allows covering number `target` under the
// greedy bound. `two_intersecting` selects target r-1 instead of r. Throws
// InfeasibleParameters when no degree qualifies.
int max_degree_cap(int e, int r, int target, bool two_intersecting);

// The cover of size <= r-2 built from a vertex of degree <= r-1 in a
// 2-intersecting r-uniform hypergraph. Throws PreconditionViolated otherwise.
CoverCertificate mindeg_cover(const Hypergraph& h, int v);

// Greedy cover for an intersecting hypergraph: a maximum-degree vertex, then
// one common vertex for each further pair of uncovered edges.
CoverCertificate greedy_pair_cover(const Hypergraph& h);

}  // namespace covlab
