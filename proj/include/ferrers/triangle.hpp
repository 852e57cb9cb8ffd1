#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ferrers/bigint.hpp"
#include "ferrers/shapes.hpp"

namespace ferrers {

// c_lambda(i, 0..i). Entries outside that range are zero.
using CoefficientRow = std::vector<BigInt>;

struct Triangle {
  Shape shape;
  std::vector<CoefficientRow> rows;  // rows[i - 1] holds row i
};

enum class Kernel { serial, parallel };

// Row 1 of every triangle: (-1, 1).
CoefficientRow first_row();

// Row i from row i-1 with exponent d = lambda_{i-1} - lambda_i:
//   c(i, j) = j (j-1)^d c(i-1, j-1) - (j+1) j^d c(i-1, j),  0^0 = 1.
// The serial kernel is the reference the OpenMP kernel is tested against.
CoefficientRow next_row_serial(std::span<const BigInt> prev, std::uint64_t d);
CoefficientRow next_row_parallel(std::span<const BigInt> prev, std::uint64_t d);
CoefficientRow next_row(std::span<const BigInt> prev, std::uint64_t d,
                        Kernel kernel = Kernel::parallel);

Triangle coefficient_triangle(const Shape& s, Kernel kernel = Kernel::parallel);

// Only the final row c_lambda(r, .); keeps O(r) integers alive.
CoefficientRow last_row(const Shape& s, Kernel kernel = Kernel::parallel);

// sum_j row[j] * j^exponent with 0^0 = 1.
BigInt power_sum(std::span<const BigInt> row, std::uint64_t exponent);

// The boolean number of the Ferrers graph of s, computed on s as given.
BigInt beta_triangle(const Shape& s, Kernel kernel = Kernel::parallel);

// Same value, but runs the triangle on whichever of s and its transpose has
// fewer rows. Shapes with a zero row have beta = 0 and are not transposed.
BigInt beta_ferrers(const Shape& s, Kernel kernel = Kernel::parallel);

struct CostReport {
  std::uint64_t multiplications = 0;
  std::uint64_t predicted = 0;
};

// f(lambda) = 2 * sum_{i=2}^r (i+1)(d_i+1); zero for a single row.
std::uint64_t predicted_cost(const Shape& s);

struct GammaResult {
  CoefficientRow row;
  CostReport cost;
};

// The row-by-row algorithm with powers taken by iterated multiplication,
// counting every big-integer multiplication. A term a * b^e * c costs
// e + 1 multiplications (b^e takes e - 1 when e >= 1, then two more; when
// e = 0 it is just a * c).
GammaResult instrumented_gamma(const Shape& s);

}  // namespace ferrers
