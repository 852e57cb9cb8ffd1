#include "ferrers/sequences.hpp"

#include <stdexcept>

#include "ferrers/errors.hpp"
#include "ferrers/triangle.hpp"

namespace ferrers {

namespace {

void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

long sign(std::uint64_t exponent) { return exponent % 2 == 0 ? 1 : -1; }

ExactRational ratio(const BigInt& numerator, const BigInt& denominator) {
  ExactRational q(numerator, denominator);
  q.canonicalize();
  return q;
}

// d(i, j) as an exact rational, before the integrality check.
ExactRational legendre_stirling_sum(std::uint64_t i, std::uint64_t j) {
  ExactRational total = 0;
  for (std::uint64_t l = 1; l <= j; ++l) {
    BigInt numerator = power(l * l + l, i) * (2 * l + 1) * sign(l + j);
    BigInt denominator = factorial(l + j + 1) * factorial(j - l);
    total += ratio(numerator, denominator);
  }
  return total;
}

BigInt exact_quotient(const BigInt& numerator, const BigInt& denominator) {
  return to_integer(ratio(numerator, denominator));
}

}  // namespace

BigInt legendre_stirling(std::uint64_t i, std::uint64_t j) {
  require(j >= 1 && j <= i, "legendre_stirling needs 1 <= j <= i");
  return to_integer(legendre_stirling_sum(i, j));
}

BigInt legendre_stirling_via_triangle(std::uint64_t i, std::uint64_t j) {
  require(j >= 1 && j <= i, "legendre_stirling_via_triangle needs 1 <= j <= i");
  const auto row = last_row(staircase(static_cast<std::int64_t>(i)));
  return exact_quotient(row[j] * sign(i + j), factorial(j) * factorial(j - 1));
}

std::vector<std::vector<BigInt>> legendre_stirling_rows(std::uint64_t rows) {
  // d(i,j) = d(i-1,j-1) + j(j+1) d(i-1,j), d(1,1) = 1.
  std::vector<std::vector<BigInt>> out;
  for (std::uint64_t i = 1; i <= rows; ++i) {
    std::vector<BigInt> row(i);
    for (std::uint64_t j = 1; j <= i; ++j) {
      if (i == 1) {
        row[0] = 1;
        continue;
      }
      const auto& prev = out.back();
      BigInt value = j >= 2 ? prev[j - 2] : BigInt(0);
      if (j <= i - 1) value += prev[j - 1] * (j * (j + 1));
      row[j - 1] = value;
    }
    out.push_back(std::move(row));
  }
  return out;
}

BigInt genocchi2(std::uint64_t r) {
  require(r >= 1, "genocchi2 needs r >= 1");
  // level[x - 1] = G(level, x) for x = 1..r - level + 1.
  std::vector<BigInt> level(r, BigInt(1));
  for (std::uint64_t depth = 2; depth <= r; ++depth) {
    const std::uint64_t width = r - depth + 1;
    std::vector<BigInt> next(width);
    for (std::uint64_t x = 1; x <= width; ++x) {
      next[x - 1] = level[x] * ((x + 1) * (x + 1)) - level[x - 1] * (x * (x + 1));
    }
    level = std::move(next);
  }
  return level[0];
}

BigInt beta_staircase_closed(std::uint64_t r) {
  require(r >= 1, "beta_staircase_closed needs r >= 1");
  ExactRational total = 0;
  for (std::uint64_t j = 1; j <= r; ++j) {
    const BigInt jj = factorial(j) * factorial(j);
    for (std::uint64_t l = 1; l <= j; ++l) {
      BigInt numerator = power(l * l + l, r) * (2 * l + 1) * jj * sign(r + l);
      BigInt denominator = factorial(l + j + 1) * factorial(j - l);
      total += ratio(numerator, denominator);
    }
  }
  return to_integer(total);
}

std::pair<BigInt, BigInt> genocchi_ls_identity(std::uint64_t r) {
  require(r >= 1, "genocchi_ls_identity needs r >= 1");
  BigInt rhs = 0;
  for (std::uint64_t j = 1; j <= r; ++j) {
    const BigInt f = factorial(j);
    rhs += f * f * legendre_stirling(r, j) * sign(r + j);
  }
  return {genocchi2(r), rhs};
}

BigInt stirling2(std::uint64_t n, std::uint64_t k) {
  require(k <= n, "stirling2 needs 0 <= k <= n");
  // row[m] = S(level, m)
  std::vector<BigInt> row(k + 1, BigInt(0));
  row[0] = 1;
  for (std::uint64_t level = 1; level <= n; ++level) {
    for (std::uint64_t m = std::min(level, k); m >= 1; --m) {
      row[m] = row[m - 1] + row[m] * m;
    }
    row[0] = 0;
  }
  return row[k];
}

BigInt beta_complete_bipartite(std::uint64_t r, std::uint64_t k) {
  require(r >= 1 && k >= 1, "beta_complete_bipartite needs r, k >= 1");
  BigInt total = 0;
  for (std::uint64_t j = 1; j <= r; ++j) {
    total += factorial(j) * stirling2(r + 1, j + 1) * power(j, k) * sign(r - j);
  }
  return total;
}

SeriesComparison chat_gf_check(std::uint64_t j, std::uint64_t d,
                               std::uint64_t order) {
  require(j >= 1 && d >= 1 && order >= j,
          "chat_gf_check needs j >= 1, d >= 1, order >= j");
  SeriesComparison out;

  // 1/Q(x) with Q(x) = prod_{i=1}^j (1 - i^d (i+1) x), via the linear
  // recurrence a_n = -sum_{k>=1} q_k a_{n-k}.
  std::vector<BigInt> q{BigInt(1)};
  for (std::uint64_t i = 1; i <= j; ++i) {
    const BigInt root = power(i, d) * (i + 1);
    std::vector<BigInt> next(q.size() + 1, BigInt(0));
    for (std::size_t k = 0; k < q.size(); ++k) {
      next[k] += q[k];
      next[k + 1] -= q[k] * root;
    }
    q = std::move(next);
  }
  std::vector<BigInt> inverse(order + 1, BigInt(0));
  inverse[0] = 1;
  for (std::uint64_t n = 1; n <= order; ++n) {
    BigInt value = 0;
    for (std::uint64_t k = 1; k < q.size() && k <= n; ++k) {
      value -= q[k] * inverse[n - k];
    }
    inverse[n] = value;
  }
  for (std::uint64_t m = 1; m <= order; ++m) {
    out.series.push_back(m >= j ? inverse[m - j] : BigInt(0));
  }

  const auto t = coefficient_triangle(
      staircase(static_cast<std::int64_t>(order), static_cast<std::int64_t>(d)));
  BigInt scale = factorial(j);
  const BigInt jm1 = factorial(j - 1);
  for (std::uint64_t k = 0; k < d; ++k) scale *= jm1;
  for (std::uint64_t i = 1; i <= order; ++i) {
    const auto& row = t.rows[i - 1];
    const BigInt c = j < row.size() ? row[j] : BigInt(0);
    out.triangle.push_back(exact_quotient(c * sign(i + j), scale));
  }
  return out;
}

}  // namespace ferrers
