#include <chrono>
#include <random>

#include "commands.hpp"
#include "ferrers/graph_invariants.hpp"
#include "ferrers/triangle.hpp"

namespace ferrers::cli {

namespace {

double millis_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

// r <= lambda_1 orientation; shapes with a zero row are left alone.
Shape short_side(const Shape& s) {
  if (!s.has_zero_row() && static_cast<Shape::Length>(s.row_count()) > s.first()) {
    return transpose(s);
  }
  return s;
}

}  // namespace

int cmd_bench(const BenchRequest& request, std::ostream& out, std::ostream& err) {
  std::vector<std::pair<std::string, Shape>> cases;
  for (const auto& s : request.shapes) {
    auto label = s.to_string();
    if (label.size() > 40) label = "shape#" + std::to_string(cases.size() + 1);
    cases.emplace_back(label, s);
  }
  std::mt19937_64 rng(request.seed);
  for (std::uint64_t k = 0; k < request.random_count; ++k) {
    cases.emplace_back("random#" + std::to_string(k + 1),
                       random_partition(request.random_cells, rng));
  }
  if (cases.empty()) {
    err << "bench: nothing to measure (use --shape or --random)\n";
    return kInputError;
  }

  // Data columns first; the two timing columns are last so golden-file
  // comparisons can cut them off.
  out << "shape\tn\tr\tlambda1\tcost_as_given\tcost_short_side\tinstrumented"
         "\tn2_over_4_plus_8n\tmatch\ttriangle_ms\tedge_ms\n";
  bool mismatch = false;
  for (const auto& [label, s] : cases) {
    const auto n = static_cast<std::uint64_t>(s.cell_count());
    const auto normal = short_side(s);
    const auto gamma = instrumented_gamma(normal);
    const bool match = gamma.cost.multiplications == gamma.cost.predicted;
    mismatch = mismatch || !match;

    auto start = std::chrono::steady_clock::now();
    const auto beta = beta_triangle(normal);
    const double triangle_ms = millis_since(start);

    std::string edge_ms = "INFEASIBLE";
    const auto g = ferrers_graph(s);
    if (g.vertex_count() <= request.limits.recursion_vertices) {
      start = std::chrono::steady_clock::now();
      const auto edge_beta = beta_edge_recursion(g, EdgeOrder::min_degree,
                                                 request.limits.recursion_vertices);
      edge_ms = std::to_string(millis_since(start));
      if (edge_beta != beta) {
        err << "bench: edge recursion disagrees on " << label << "\n";
        mismatch = true;
      }
    }

    out << label << '\t' << n << '\t' << s.row_count() << '\t' << s.first() << '\t'
        << predicted_cost(s) << '\t' << gamma.cost.predicted << '\t'
        << gamma.cost.multiplications << '\t' << (n * n) / 4 + 8 * n << '\t'
        << (match ? "yes" : "NO") << '\t' << triangle_ms << '\t' << edge_ms << '\n';
  }
  return mismatch ? kVerificationFailed : kOk;
}

}  // namespace ferrers::cli
