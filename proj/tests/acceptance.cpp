// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Tolerances are pinned below.

#include <algorithm>
#include <chrono>
#include <exception>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ferrers/complex.hpp"
#include "ferrers/errors.hpp"
#include "ferrers/graph_invariants.hpp"
#include "ferrers/polynomial.hpp"
#include "ferrers/recursion.hpp"
#include "ferrers/sequences.hpp"
#include "ferrers/triangle.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace {

using namespace ferrers;
using Clock = std::chrono::steady_clock;

// Pinned tolerances.
constexpr double kTableBudgetMs = 1.0;
constexpr double kSweepBudgetSeconds = 300.0;
constexpr double kLargeShapeBudgetSeconds = 5.0;
constexpr double kCostSlopeBound = 8.0;  // C in n^2/4 + C n
constexpr std::size_t kDefaultRecursionCap = 12;
constexpr std::size_t kSweepCells = 9;
// A 9-cell shape plus an empty row has at most 11 vertices.
constexpr std::size_t kSweepRankCap = 11;

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

TrivariatePolynomial x() { return TrivariatePolynomial::x(); }
TrivariatePolynomial y() { return TrivariatePolynomial::y(); }
TrivariatePolynomial z() { return TrivariatePolynomial::z(); }

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void table_fidelity(Verdict& v) {
  const Shape lambda({7, 7, 7, 6, 4, 4, 2});
  const auto sigma = staircase(7);
  double best_ms = 1e300;
  for (int rep = 0; rep < 25; ++rep) {
    const auto start = Clock::now();
    const auto t1 = coefficient_triangle(lambda);
    const auto t2 = coefficient_triangle(sigma);
    best_ms = std::min(best_ms, seconds_since(start) * 1e3);
    if (rep > 0) continue;
    std::size_t entries = 0;
    for (std::size_t i = 0; i < 7; ++i) {
      v.require(t1.rows[i] == row_of(fixtures::kTable1[i]), "Table 1 row " + std::to_string(i + 1));
      v.require(t2.rows[i] == row_of(fixtures::kTable2[i]), "Table 2 row " + std::to_string(i + 1));
      entries += fixtures::kTable1[i].size();
    }
    v.detail << entries << " entries per table; ";
  }
  v.require(best_ms < kTableBudgetMs, "runtime budget");
  v.detail << "best of 25: " << best_ms << " ms (< " << kTableBudgetMs << " ms)";
}

void oracle_equivalence(Verdict& v) {
  const auto start = Clock::now();
  std::vector<Shape> shapes;
  for (const auto& s : enumerate_partitions(kSweepCells)) {
    shapes.push_back(s);
    auto rows = s.rows();
    rows.push_back(0);
    shapes.emplace_back(std::move(rows));
  }
  for (const auto& s : shapes) {
    const auto g = ferrers_graph(s);
    const auto beta = beta_triangle(s);
    const auto label = s.to_string();
    v.require(beta_row_recursion(s) == beta, "row recursion on " + label);
    v.require(beta_edge_recursion(g) == beta, "edge recursion on " + label);
    v.require(beta_via_xi(g) == beta, "xi on " + label);
    v.require(beta_via_rank(g, kSweepRankCap) == beta, "rank census on " + label);
  }
  const double elapsed = seconds_since(start);
  v.require(elapsed < kSweepBudgetSeconds, "sweep time budget");
  v.detail << shapes.size() << " shapes (<= " << kSweepCells << " cells, with zero-row variants), "
           << elapsed << " s (< " << kSweepBudgetSeconds << " s)";
}

void staircase_genocchi(Verdict& v) {
  // Row sums of beta over the staircase table, r = 1..5.
  const std::vector<long> pinned = {1, 2, 8, 56, 608};
  for (std::uint64_t r = 1; r <= 10; ++r) {
    const auto b = beta_triangle(staircase(static_cast<std::int64_t>(r)));
    const auto tag = "r=" + std::to_string(r);
    v.require(b == genocchi2(r), "genocchi2 " + tag);
    v.require(b == beta_staircase_closed(r), "closed form " + tag);
    if (r <= pinned.size()) v.require(b == pinned[r - 1], "fixture " + tag);
  }
  v.detail << "r = 1..10, beta(sigma_10) = " << to_decimal(genocchi2(10));
}

void legendre_stirling_check(Verdict& v) {
  std::size_t pairs = 0;
  for (std::uint64_t i = 1; i <= 10; ++i) {
    for (std::uint64_t j = 1; j <= i; ++j, ++pairs) {
      v.require(legendre_stirling(i, j) == legendre_stirling_via_triangle(i, j),
                "d(" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
  for (std::uint64_t r = 1; r <= 12; ++r) {
    const auto [lhs, rhs] = genocchi_ls_identity(r);
    v.require(lhs == rhs, "identity r=" + std::to_string(r));
  }
  v.detail << pairs << " Legendre-Stirling pairs, identity for r = 1..12";
}

void complete_bipartite(Verdict& v) {
  for (std::uint64_t r = 1; r <= 8; ++r) {
    for (std::uint64_t k = 1; k <= 8; ++k) {
      v.require(beta_complete_bipartite(r, k) ==
                    beta_triangle(rectangle(static_cast<std::int64_t>(r),
                                            static_cast<std::int64_t>(k))),
                "K" + std::to_string(r) + "," + std::to_string(k));
    }
  }
  v.require(beta_complete_bipartite(2, 2) == 5, "beta(K22) = 5");
  v.require(beta_via_rank(ferrers_graph(rectangle(2, 2))) == 5, "rank census of K22");
  v.detail << "r, k = 1..8; beta(K22) = 5";
}

void complexity(Verdict& v) {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::int64_t> cells(1, 200);
  double fitted = -1e300;
  for (int k = 0; k < 1000; ++k) {
    const auto s = random_partition(cells(rng), rng);
    const auto gamma = instrumented_gamma(s);
    v.require(gamma.cost.multiplications == gamma.cost.predicted &&
                  gamma.cost.predicted == predicted_cost(s),
              "instrumented = formula on " + s.to_string());
    const auto normal =
        static_cast<Shape::Length>(s.row_count()) > s.first() ? transpose(s) : s;
    const auto n = static_cast<double>(normal.cell_count());
    const auto f = static_cast<double>(instrumented_gamma(normal).cost.multiplications);
    fitted = std::max(fitted, (f - n * n / 4.0) / n);
  }
  v.require(fitted <= kCostSlopeBound, "fitted C within bound");
  v.detail << "1000 shapes <= 200 cells; fitted C = " << fitted << " (<= " << kCostSlopeBound
           << ")";
}

void performance_gap(Verdict& v) {
  // Near-square staircase with exactly 10,000 cells, and a random shape in
  // the r <= lambda_1 orientation the cost analysis assumes.
  std::vector<Shape::Length> rows;
  for (Shape::Length i = 140; i >= 1; --i) rows.push_back(i);
  for (std::size_t i = 0; i < 130; ++i) ++rows[i];
  const Shape square(rows);
  std::mt19937_64 rng(7);
  const auto random = transpose(random_partition(10000, rng));

  double worst = 0;
  for (const auto& s : {square, random}) {
    v.require(s.cell_count() == 10000, "cell count");
    v.require(static_cast<Shape::Length>(s.row_count()) <= s.first(), "orientation");
    const auto start = Clock::now();
    const auto beta = beta_triangle(s);
    worst = std::max(worst, seconds_since(start));
    v.require(beta > 0, "beta positive");
  }
  v.require(worst < kLargeShapeBudgetSeconds, "large shape time budget");

  v.require(OracleLimits{}.recursion_vertices == kDefaultRecursionCap, "default cap");
  bool capped = false;
  try {
    beta_edge_recursion(path_graph(kDefaultRecursionCap + 1));
  } catch (const GraphTooLarge&) {
    capped = true;
  }
  v.require(capped, "edge recursion refuses 13 vertices");
  v.require(beta_edge_recursion(path_graph(kDefaultRecursionCap)) > 0, "12 vertices accepted");
  v.detail << "10,000 cells (rows " << square.row_count() << " and " << random.row_count()
           << "): " << worst << " s (< " << kLargeShapeBudgetSeconds
           << " s); edge recursion capped at " << kDefaultRecursionCap << " vertices";
}

void polynomial_identities(Verdict& v) {
  const auto graphs = testing::graph_universe(6);
  std::size_t doubled_checks = 0;
  std::size_t count_checks = 0;
  for (const auto& g : graphs) {
    const auto xi = xi_polynomial(g);
    const auto at_minus_one = xi.substitute_y(-1);
    for (const auto& e : g.edges()) {
      auto edges = g.to_multigraph().edges();
      edges.push_back(e);
      const MultiGraph doubled(g.vertex_count(), edges);
      v.require(xi_polynomial(doubled).substitute_y(-1) == at_minus_one, "parallel edge");
      ++doubled_checks;
    }
    for (long xv = 0; xv <= 3; ++xv) {
      for (long yv = 0; yv <= xv; ++yv) {
        v.require(bichromatic_via_xi(g, xv, yv) == bivariate_chromatic_count(g, xv, yv),
                  "bichromatic count");
        ++count_checks;
      }
    }
  }
  for (std::size_t n = 0; n <= 8; ++n) {
    TrivariatePolynomial xn(1);
    for (std::size_t k = 0; k < n; ++k) xn *= x();
    v.require(xi_polynomial(SimpleGraph::edgeless(n)) == xn, "edgeless xi");
  }
  v.require(xi_polynomial(complete_graph(2)) == x() * x() + x() * y() + z(), "xi(K2)");
  v.detail << graphs.size() << " graphs (<= 6 vertices, up to isomorphism); "
           << doubled_checks << " doubled-edge checks, " << count_checks
           << " bichromatic evaluations";
}

void generating_functions(Verdict& v) {
  for (std::uint64_t j = 1; j <= 5; ++j) {
    for (std::uint64_t d = 1; d <= 3; ++d) {
      const auto tag = "j=" + std::to_string(j) + " d=" + std::to_string(d);
      try {
        const auto c = chat_gf_check(j, d, 10);
        v.require(c.series.size() == 10 && c.series == c.triangle, tag);
      } catch (const NonIntegerResult&) {
        v.require(false, "non-integral rescaled entry at " + tag);
      }
    }
  }
  v.detail << "j = 1..5, d = 1..3, order 10, all entries integral";
}

void structural_properties(Verdict& v) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::int64_t> cells(1, 100);
  std::size_t rows_checked = 0;
  for (int k = 0; k < 10000; ++k) {
    const auto s = random_partition(cells(rng), rng);
    const auto t = coefficient_triangle(s);
    for (std::size_t i = 1; i <= s.row_count(); ++i, ++rows_checked) {
      const auto& row = t.rows[i - 1];
      BigInt sum = 0;
      for (const auto& c : row) sum += c;
      v.require(sum == 0, "row sum on " + s.to_string());
      if (s.row(i) < s.first()) v.require(row[0] == 0, "leading zero on " + s.to_string());
      for (std::size_t j = 1; j + 1 < row.size(); ++j) {
        v.require(sgn(row[j]) * sgn(row[j + 1]) < 0, "sign alternation on " + s.to_string());
      }
    }
  }
  v.detail << "10000 shapes <= 100 cells, " << rows_checked << " rows";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Verdict&)>>> criteria = {
      {"table fidelity", table_fidelity},
      {"oracle equivalence", oracle_equivalence},
      {"staircase / Genocchi", staircase_genocchi},
      {"Legendre-Stirling", legendre_stirling_check},
      {"complete bipartite", complete_bipartite},
      {"complexity reproduction", complexity},
      {"performance gap", performance_gap},
      {"polynomial identities", polynomial_identities},
      {"generating functions", generating_functions},
      {"triangle structure", structural_properties},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Verdict v;
    try {
      criteria[k].second(v);
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    failed += v.pass ? 0 : 1;
    std::cout << (v.pass ? "PASS" : "FAIL") << "  " << (k + 1) << ". " << criteria[k].first
              << ": " << v.detail.str() << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
