#pragma once

#include "ferrers/bigint.hpp"
#include "ferrers/graphs.hpp"
#include "ferrers/limits.hpp"
#include "ferrers/polynomial.hpp"

namespace ferrers {

// Pivot rule for the generic edge recursion. Every rule gives the same
// value; having two makes that checkable.
enum class EdgeOrder {
  min_degree,  // an edge at a minimum-degree vertex
  first_edge,  // the lexicographically first edge
};

// beta(G) = beta(G-e) + beta(G/e) + beta(G-[e]), beta(empty) = 1, and 0 as
// soon as an isolated vertex appears. Exponential; no memoization. Throws
// GraphTooLarge above max_vertices (and above 64 regardless).
BigInt beta_edge_recursion(
    const SimpleGraph& g, EdgeOrder order = EdgeOrder::min_degree,
    std::size_t max_vertices = OracleLimits{}.recursion_vertices);

// xi(G) = xi(G-e) + y xi(G|e) + z xi(G-[e]), multiplicative over disjoint
// unions, xi(single vertex) = x, xi(empty) = 1. A loop at v expands as
// (1+y) xi(G-loop) + z xi(G-v). Parallel edges are pivoted on first.
// Throws GraphTooLarge above max_vertices.
TrivariatePolynomial xi_polynomial(
    const MultiGraph& g,
    std::size_t max_vertices = OracleLimits{}.recursion_vertices);
TrivariatePolynomial xi_polynomial(
    const SimpleGraph& g,
    std::size_t max_vertices = OracleLimits{}.recursion_vertices);

// (-1)^|G| xi(G; 0, -1, 1).
BigInt beta_via_xi(const SimpleGraph& g,
                   std::size_t max_vertices = OracleLimits{}.recursion_vertices);

// Colorings with x colors of which the first y are proper (no edge may
// join two vertices of the same proper color). Exhaustive; requires
// 0 <= y <= x. Throws GraphTooLarge above max_vertices.
BigInt bivariate_chromatic_count(
    const SimpleGraph& g, long x, long y,
    std::size_t max_vertices = OracleLimits{}.exhaustive_vertices);

// xi(G; x, -1, x - y). Any integers, including the (0, -1) evaluation.
BigInt bichromatic_via_xi(
    const SimpleGraph& g, long x, long y,
    std::size_t max_vertices = OracleLimits{}.recursion_vertices);

}  // namespace ferrers
