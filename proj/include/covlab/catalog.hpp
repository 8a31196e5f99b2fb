#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "covlab/hypergraph.hpp"

namespace covlab {

struct ExpectedProperties {
  int n = 0;
  int m = 0;
  int r = 0;    // uniformity
  int t = 0;    // minimum pairwise intersection
  int tau = 0;  // covering number
};

struct CatalogEntry {
  std::string name;
  std::string description;
  Hypergraph hypergraph;
  ExpectedProperties expected;
};

// Names accepted by catalog(), in listing order.
std::vector<std::string> catalog_names();

// Builds (or parses) the named object and re-verifies every expected property
// with the solver. Throws UnknownName, or CatalogMismatch if a check fails.
CatalogEntry catalog(std::string_view name);

// The published incidence matrices, verbatim (rows = vertices).
std::string_view published_matrix(std::string_view name);

}  // namespace covlab
