#include "ferrers/triangle.hpp"

#include <algorithm>
#include <cstddef>

namespace ferrers {

namespace {

// Rows shorter than this are not worth a parallel region.
constexpr std::ptrdiff_t kParallelThreshold = 64;

std::uint64_t step(const Shape& s, std::size_t i) {
  return static_cast<std::uint64_t>(s.row(i - 1) - s.row(i));
}

// j^d for j = 0..count-1.
void fill_powers(std::vector<BigInt>& powers, std::uint64_t d) {
  for (std::size_t j = 0; j < powers.size(); ++j) {
    mpz_ui_pow_ui(powers[j].get_mpz_t(), j, d);
  }
}

void row_entry(BigInt& out, std::span<const BigInt> prev,
               std::span<const BigInt> powers, std::size_t j, BigInt& scratch) {
  // (j+1) j^d c(i-1, j), with c(i-1, i) = 0
  if (j < prev.size()) {
    mpz_mul(scratch.get_mpz_t(), powers[j].get_mpz_t(), prev[j].get_mpz_t());
    mpz_mul_ui(scratch.get_mpz_t(), scratch.get_mpz_t(), j + 1);
    mpz_neg(out.get_mpz_t(), scratch.get_mpz_t());
  } else {
    out = 0;
  }
  // j (j-1)^d c(i-1, j-1), with c(i-1, -1) = 0
  if (j >= 1) {
    mpz_mul(scratch.get_mpz_t(), powers[j - 1].get_mpz_t(),
            prev[j - 1].get_mpz_t());
    mpz_addmul_ui(out.get_mpz_t(), scratch.get_mpz_t(), j);
  }
}

}  // namespace

CoefficientRow first_row() { return {BigInt(-1), BigInt(1)}; }

CoefficientRow next_row_serial(std::span<const BigInt> prev, std::uint64_t d) {
  const std::size_t width = prev.size() + 1;
  std::vector<BigInt> powers(width);
  fill_powers(powers, d);
  CoefficientRow row(width);
  BigInt scratch;
  for (std::size_t j = 0; j < width; ++j) {
    row_entry(row[j], prev, powers, j, scratch);
  }
  return row;
}

CoefficientRow next_row_parallel(std::span<const BigInt> prev,
                                 std::uint64_t d) {
  const auto width = static_cast<std::ptrdiff_t>(prev.size() + 1);
  std::vector<BigInt> powers(static_cast<std::size_t>(width));
  CoefficientRow row(static_cast<std::size_t>(width));

#pragma omp parallel if (width >= kParallelThreshold)
  {
#pragma omp for schedule(static)
    for (std::ptrdiff_t j = 0; j < width; ++j) {
      mpz_ui_pow_ui(powers[static_cast<std::size_t>(j)].get_mpz_t(),
                    static_cast<unsigned long>(j), d);
    }
    BigInt scratch;
    // Entry cost grows with j, so hand out small chunks.
#pragma omp for schedule(dynamic, 8)
    for (std::ptrdiff_t j = 0; j < width; ++j) {
      const auto jj = static_cast<std::size_t>(j);
      row_entry(row[jj], prev, powers, jj, scratch);
    }
  }
  return row;
}

CoefficientRow next_row(std::span<const BigInt> prev, std::uint64_t d,
                        Kernel kernel) {
  return kernel == Kernel::serial ? next_row_serial(prev, d)
                                  : next_row_parallel(prev, d);
}

Triangle coefficient_triangle(const Shape& s, Kernel kernel) {
  Triangle t{s, {}};
  t.rows.reserve(s.row_count());
  t.rows.push_back(first_row());
  for (std::size_t i = 2; i <= s.row_count(); ++i) {
    t.rows.push_back(next_row(t.rows.back(), step(s, i), kernel));
  }
  return t;
}

CoefficientRow last_row(const Shape& s, Kernel kernel) {
  CoefficientRow row = first_row();
  for (std::size_t i = 2; i <= s.row_count(); ++i) {
    row = next_row(row, step(s, i), kernel);
  }
  return row;
}

BigInt power_sum(std::span<const BigInt> row, std::uint64_t exponent) {
  BigInt total = 0;
  BigInt term;
  for (std::size_t j = 0; j < row.size(); ++j) {
    mpz_ui_pow_ui(term.get_mpz_t(), j, exponent);
    mpz_addmul(total.get_mpz_t(), term.get_mpz_t(), row[j].get_mpz_t());
  }
  return total;
}

BigInt beta_triangle(const Shape& s, Kernel kernel) {
  return power_sum(last_row(s, kernel), static_cast<std::uint64_t>(s.last()));
}

BigInt beta_ferrers(const Shape& s, Kernel kernel) {
  if (s.has_zero_row()) return 0;
  if (static_cast<Shape::Length>(s.row_count()) > s.first()) {
    return beta_triangle(transpose(s), kernel);
  }
  return beta_triangle(s, kernel);
}

std::uint64_t predicted_cost(const Shape& s) {
  std::uint64_t total = 0;
  for (std::size_t i = 2; i <= s.row_count(); ++i) {
    total += 2 * (i + 1) * (step(s, i) + 1);
  }
  return total;
}

GammaResult instrumented_gamma(const Shape& s) {
  GammaResult result{first_row(), {0, predicted_cost(s)}};
  auto& count = result.cost.multiplications;

  // a * b^e * c, powers by iterated multiplication.
  auto term = [&count](unsigned long a, unsigned long b, std::uint64_t e,
                       const BigInt& c) {
    BigInt value;
    if (e == 0) {
      value = c * a;
      ++count;
      return value;
    }
    BigInt base_power = b;
    for (std::uint64_t k = 1; k < e; ++k) {
      base_power *= b;
      ++count;
    }
    value = base_power * a;
    value *= c;
    count += 2;
    return value;
  };

  const BigInt zero = 0;
  for (std::size_t i = 2; i <= s.row_count(); ++i) {
    const auto d = step(s, i);
    const auto& prev = result.row;
    CoefficientRow row(i + 1);
    for (std::size_t j = 0; j <= i; ++j) {
      // Padding with c_{-1} = c_{i} = 0 as the algorithm does; the
      // multiplications are still performed and counted.
      const BigInt& left = j >= 1 ? prev[j - 1] : zero;
      const BigInt& right = j < prev.size() ? prev[j] : zero;
      const auto jm1 = j >= 1 ? j - 1 : 0;
      // For j = 0 the left term is 0 * (-1)^d * c_{-1} = 0; using base 0
      // keeps the arithmetic unsigned without changing the count.
      row[j] = term(j, jm1, d, left) - term(j + 1, j, d, right);
    }
    result.row = std::move(row);
  }
  return result;
}

}  // namespace ferrers
