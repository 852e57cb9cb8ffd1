#include <array>
#include <string>
#include <utility>
#include <vector>

#include "commands.hpp"
#include "ferrers/complex.hpp"
#include "ferrers/graph_invariants.hpp"
#include "ferrers/recursion.hpp"
#include "ferrers/sequences.hpp"
#include "ferrers/triangle.hpp"

namespace ferrers::cli {

namespace {

// skip: over an oracle cap; not_applicable: the property says nothing.
enum class Outcome { pass, fail, skip, not_applicable };

enum Property : std::size_t {
  kRow,
  kEdge,
  kXi,
  kRank,
  kZeroIff,
  kCost,
  kStructure,
  kTranspose,
  kShapePropertyCount,
};

constexpr std::array<const char*, kShapePropertyCount> kShapePropertyNames{
    "triangle = row recursion",
    "triangle = edge recursion",
    "triangle = xi evaluation",
    "triangle = rank census",
    "beta = 0 iff zero row",
    "instrumented cost = predicted cost",
    "triangle rows: zero sum, leading zero, alternating signs",
    "beta(shape) = beta(transpose)",
};

struct Tally {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t skipped = 0;
  std::vector<std::string> failures;

  explicit Tally(std::string n) : name(std::move(n)) {}

  void record(Outcome o, const std::string& what) {
    if (o == Outcome::not_applicable) return;
    if (o == Outcome::skip) {
      ++skipped;
      return;
    }
    ++checked;
    if (o == Outcome::fail) failures.push_back(what);
  }
};

Outcome compare(const BigInt& a, const BigInt& b) {
  return a == b ? Outcome::pass : Outcome::fail;
}

bool triangle_structure_holds(const Shape& s) {
  const auto t = coefficient_triangle(s, Kernel::serial);
  for (std::size_t i = 1; i <= s.row_count(); ++i) {
    const auto& row = t.rows[i - 1];
    BigInt sum = 0;
    for (const auto& c : row) sum += c;
    if (sum != 0) return false;
    if (s.row(i) < s.first() && row[0] != 0) return false;
    for (std::size_t j = 1; j + 1 < row.size(); ++j) {
      if (row[j] != 0 && row[j + 1] != 0 && sgn(row[j]) == sgn(row[j + 1])) {
        return false;
      }
    }
  }
  return true;
}

std::array<Outcome, kShapePropertyCount> check_shape(const Shape& s,
                                                     const OracleLimits& limits) {
  std::array<Outcome, kShapePropertyCount> result{};
  result.fill(Outcome::skip);
  result[kTranspose] = Outcome::not_applicable;
  const auto beta = beta_triangle(s, Kernel::serial);
  const auto g = ferrers_graph(s);
  const auto n = g.vertex_count();

  result[kRow] = compare(beta, beta_row_recursion(s));
  if (n <= limits.recursion_vertices) {
    result[kEdge] = compare(beta, beta_edge_recursion(g, EdgeOrder::min_degree,
                                                      limits.recursion_vertices));
    result[kXi] = compare(beta, beta_via_xi(g, limits.recursion_vertices));
  }
  if (n <= limits.exhaustive_vertices) {
    result[kRank] = compare(beta, beta_via_rank(g, limits.exhaustive_vertices));
  }
  result[kZeroIff] = (beta == 0) == s.has_zero_row() ? Outcome::pass : Outcome::fail;
  const auto gamma = instrumented_gamma(s);
  result[kCost] = gamma.cost.multiplications == gamma.cost.predicted &&
                          gamma.row == last_row(s, Kernel::serial)
                      ? Outcome::pass
                      : Outcome::fail;
  result[kStructure] = triangle_structure_holds(s) ? Outcome::pass : Outcome::fail;
  if (!s.has_zero_row()) {
    result[kTranspose] = compare(beta, beta_triangle(transpose(s), Kernel::serial));
  }
  return result;
}

void print(std::ostream& out, const Tally& t) {
  if (t.checked > 0 || t.skipped == 0) {
    out << (t.failures.empty() ? "PASS" : "FAIL") << "  " << t.name << "  (" << t.checked
        << " checked)\n";
  }
  if (t.skipped > 0) {
    out << "SKIP  " << t.name << "  (" << t.skipped << " over the vertex cap)\n";
  }
  for (std::size_t k = 0; k < t.failures.size() && k < 5; ++k) {
    out << "      counterexample: " << t.failures[k] << "\n";
  }
}

}  // namespace

int cmd_verify(std::int64_t cells, const OracleLimits& limits,
               std::ostream& out, std::ostream& err) {
  if (cells < 0) {
    err << "verify: --cells must be nonnegative\n";
    return kInputError;
  }
  if (cells > kMaxVerifyCells) {
    err << "verify: --cells " << cells << " exceeds the cap of "
        << kMaxVerifyCells << "\n";
    return kCapExceeded;
  }

  std::vector<Shape> shapes;
  for (const auto& s : enumerate_partitions(cells)) {
    shapes.push_back(s);
    auto rows = s.rows();
    rows.push_back(0);
    shapes.emplace_back(std::move(rows));
  }

  // Shapes are independent; results land in their own slot so the report
  // order does not depend on scheduling.
  std::vector<std::array<Outcome, kShapePropertyCount>> results(shapes.size());
  const auto count = static_cast<std::ptrdiff_t>(shapes.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    results[idx] = check_shape(shapes[idx], limits);
  }

  std::vector<Tally> tallies;
  for (const auto* name : kShapePropertyNames) tallies.emplace_back(name);
  for (std::size_t k = 0; k < shapes.size(); ++k) {
    for (std::size_t p = 0; p < kShapePropertyCount; ++p) {
      tallies[p].record(results[k][p], shapes[k].to_string());
    }
  }

  Tally staircase_tally{"staircase: triangle = genocchi2 = closed form (r <= 10)"};
  for (std::uint64_t r = 1; r <= 10; ++r) {
    const auto g = genocchi2(r);
    const bool ok = g == beta_triangle(staircase(static_cast<std::int64_t>(r))) &&
                    g == beta_staircase_closed(r);
    staircase_tally.record(ok ? Outcome::pass : Outcome::fail, "r=" + std::to_string(r));
  }
  tallies.push_back(staircase_tally);

  Tally ls_tally{"Legendre-Stirling: closed form = staircase triangle (i <= 10)"};
  for (std::uint64_t i = 1; i <= 10; ++i) {
    for (std::uint64_t j = 1; j <= i; ++j) {
      ls_tally.record(compare(legendre_stirling(i, j), legendre_stirling_via_triangle(i, j)),
                      "d(" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
  tallies.push_back(ls_tally);

  Tally identity_tally{"Genocchi = weighted Legendre-Stirling sum (r <= 12)"};
  for (std::uint64_t r = 1; r <= 12; ++r) {
    const auto [lhs, rhs] = genocchi_ls_identity(r);
    identity_tally.record(compare(lhs, rhs), "r=" + std::to_string(r));
  }
  tallies.push_back(identity_tally);

  Tally bipartite_tally{"complete bipartite closed form = triangle (r, k <= 8)"};
  for (std::int64_t r = 1; r <= 8; ++r) {
    for (std::int64_t k = 1; k <= 8; ++k) {
      bipartite_tally.record(
          compare(beta_complete_bipartite(static_cast<std::uint64_t>(r),
                                          static_cast<std::uint64_t>(k)),
                  beta_triangle(rectangle(r, k))),
          "K" + std::to_string(r) + "," + std::to_string(k));
    }
  }
  tallies.push_back(bipartite_tally);

  Tally gf_tally{"column generating functions (j <= 5, d <= 3, order 10)"};
  for (std::uint64_t j = 1; j <= 5; ++j) {
    for (std::uint64_t d = 1; d <= 3; ++d) {
      const auto c = chat_gf_check(j, d, 10);
      gf_tally.record(c.series == c.triangle ? Outcome::pass : Outcome::fail,
                      "j=" + std::to_string(j) + " d=" + std::to_string(d));
    }
  }
  tallies.push_back(gf_tally);

  bool failed = false;
  out << "verify: " << shapes.size() << " shapes with at most " << cells
      << " cells (each also with a zero row)\n";
  for (const auto& t : tallies) {
    print(out, t);
    failed = failed || !t.failures.empty();
  }
  return failed ? kVerificationFailed : kOk;
}

}  // namespace ferrers::cli
