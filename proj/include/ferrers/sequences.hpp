#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ferrers/bigint.hpp"

namespace ferrers {

// Legendre-Stirling number d(i, j), 1 <= j <= i, from the closed form
//   d(i,j) = sum_{l=1}^{j} (-1)^{l+j} (2l+1) (l^2+l)^i / ((l+j+1)! (j-l)!)
// evaluated in exact rationals.
BigInt legendre_stirling(std::uint64_t i, std::uint64_t j);

// The same number read off the staircase triangle:
//   (-1)^{i+j} c_{sigma_i}(i, j) / (j! (j-1)!).
BigInt legendre_stirling_via_triangle(std::uint64_t i, std::uint64_t j);

// Rows 1..rows of the Legendre-Stirling triangle; row i has i entries.
std::vector<std::vector<BigInt>> legendre_stirling_rows(std::uint64_t rows);

// Median Genocchi number g(r) = G(r, 1), where
//   G(1, x) = 1,  G(r, x) = (x+1)^2 G(r-1, x+1) - x(x+1) G(r-1, x).
BigInt genocchi2(std::uint64_t r);

// sum_{j=1}^r sum_{l=1}^j (-1)^{r+l} (2l+1)(l^2+l)^r j! j! / ((l+j+1)! (j-l)!)
BigInt beta_staircase_closed(std::uint64_t r);

// (g(r), sum_{j=1}^r (-1)^{r+j} (j!)^2 d(r,j)), computed independently.
std::pair<BigInt, BigInt> genocchi_ls_identity(std::uint64_t r);

// Stirling numbers of the second kind, 0 <= k <= n.
BigInt stirling2(std::uint64_t n, std::uint64_t k);

// beta(K_{r,k}) = sum_{j=1}^r (-1)^{r-j} j! S(r+1, j+1) j^k.
BigInt beta_complete_bipartite(std::uint64_t r, std::uint64_t k);

struct SeriesComparison {
  std::vector<BigInt> series;    // [x^1..x^order] of x^j / prod_{i=1}^j (1 - i^d (i+1) x)
  std::vector<BigInt> triangle;  // c-hat(i, j) for i = 1..order from sigma_{order,d}
};

// c-hat(i,j) = (-1)^{i+j} c_{sigma_{r,d}}(i,j) / (j! ((j-1)!)^d).
// Throws NonIntegerResult if a rescaled entry is not integral.
SeriesComparison chat_gf_check(std::uint64_t j, std::uint64_t d,
                               std::uint64_t order);

}  // namespace ferrers
