#pragma once

#include <functional>
#include <string>
#include <vector>

#include "covlab/canonical.hpp"
#include "covlab/hypergraph.hpp"
#include "covlab/search.hpp"

namespace covlab {

enum class Outcome { Pass, Fail, Skip };
std::string to_string(Outcome outcome);

struct CriterionResult {
  int id = 0;
  std::string title;
  Outcome outcome = Outcome::Skip;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyOptions {
  // Runs the slow checks (criterion 7, the m=15,16 rows of criterion 5).
  bool long_mode = false;
  // Directory with biplane block-list files (B9A, B9B, ...). Falls back to
  // the COVERING_LAB_BIPLANES environment variable.
  std::string biplane_dir;
  int threads = 0;
  // Called after each criterion finishes.
  std::function<void(const CriterionResult&)> on_result;
};

inline constexpr int kCriterionCount = 10;

CriterionResult run_criterion(int id, const VerifyOptions& options);
std::vector<CriterionResult> verify_all(const VerifyOptions& options);

// Brute-force isomorphism key: the lexicographically smallest sorted edge
// list over all n! relabelings. Only for n <= 8.
std::vector<VertexSet> brute_force_key(const Hypergraph& h);

// Every class matching spec (degree window and t-intersection), found by
// enumerating all m-subsets of r-sets and grouping by brute_force_key.
// Returned keys are sorted.
std::vector<std::vector<VertexSet>> naive_class_keys(const SearchSpec& spec);

}  // namespace covlab
