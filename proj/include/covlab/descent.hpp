#pragma once

#include <optional>
#include <string>
#include <vector>

#include "covlab/hypergraph.hpp"
#include "covlab/io.hpp"

namespace covlab {

struct DescentOptions {
  // Stop once a level with this many edges has been processed.
  int min_edges = 1;
  // PG(2,7) is cut off after kDefaultDeletionLimit deletions unless set.
  bool unbounded = false;
  int threads = 0;
  // Expand only classes with covering number q+1. Gives the same m (a
  // superset of a q+1 family is one too) but smaller class counts.
  bool extremal_frontier = false;
  // When non-empty, each level's frontier is written to
  // <checkpoint_dir>/level_<m>.txt.
  std::string checkpoint_dir;
  // Restart from a dumped level instead of the full plane.
  std::optional<LevelDump> resume;
};

inline constexpr int kDefaultDeletionLimit = 13;

struct DescentLevel {
  int edge_count = 0;
  // Non-isomorphic one-edge deletions with minimum degree >= 2.
  std::size_t class_count = 0;
  // Those with covering number q+1.
  std::size_t extremal_count = 0;
  std::vector<Hypergraph> extremal;
  // Classes expanded to build the next level. Released once that level exists.
  std::vector<Hypergraph> frontier;
  bool resumed = false;
};

struct DescentResult {
  int q = 0;
  std::vector<DescentLevel> levels;
  // Smallest edge count with an extremal class; exact only when the descent
  // ended on a level without extremal members.
  std::optional<int> m;
  bool complete = false;
  double wall_seconds = 0.0;
};

// Deletes lines of PG(2,q) one at a time, keeping isomorphism classes with
// minimum degree >= 2, until a level has no class with covering number q+1.
DescentResult descend(int q, const DescentOptions& options = {});

}  // namespace covlab
