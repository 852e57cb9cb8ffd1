#pragma once

#include <cstddef>

namespace ferrers {

// Vertex-count caps for the exponential oracles. These are configuration:
// the CLI lets --cap-vertices or FB_CAP_VERTICES override both.
struct OracleLimits {
  // Brute-force colorings and the boolean-complex census.
  std::size_t exhaustive_vertices = 8;
  // Generic edge recursion and the edge-elimination polynomial.
  std::size_t recursion_vertices = 12;

  // Defaults, with FB_CAP_VERTICES (if set to a positive integer) applied
  // to both caps.
  static OracleLimits from_environment();

  static OracleLimits uniform(std::size_t cap) { return {cap, cap}; }
};

}  // namespace ferrers
