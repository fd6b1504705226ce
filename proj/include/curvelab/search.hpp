#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "curvelab/curve.hpp"

namespace curvelab {

struct SearchConfig {
  int p = 2;
  int s = 1;
  int d = 3;
  bool exhaustive = true;
  long long samples = 0;  // random mode sample count
  uint64_t seed = 0;
  bool require_fnc = false;
  bool require_singular = false;  // a rational singular point exists
  long long limit = -1;           // cap on reported matches, -1 = unlimited
  int workers = 1;
};

struct SearchResult {
  std::vector<std::string> found;  // canonical polynomial texts, scan order
  long long scanned = 0;           // candidates after canonicalization
  long long matched = 0;
};

// Enumerates (or samples) canonical degree-d forms (first nonzero coefficient
// in graded-lex monomial order equals 1), applies cheap rejections (p-th
// powers, coordinate-line factors, the degree range forced by require_fnc),
// then filters. Deterministic for a fixed config, independent of workers.
SearchResult search_curves(const SearchConfig& cfg);

}  // namespace curvelab
