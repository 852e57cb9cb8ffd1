#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include "ferrers/shapes.hpp"

namespace ferrers {

using Vertex = std::uint32_t;

// Unordered pair, stored with u <= v. u == v is a loop.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool is_loop() const noexcept { return u == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Vertices 0..n-1 and an edge multiset kept sorted. Loops are admitted
// because contracting one copy of a parallel pair turns the others into
// loops.
class MultiGraph {
 public:
  MultiGraph() = default;
  MultiGraph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t multiplicity(Edge e) const;
  bool has_loops() const noexcept;

  friend bool operator==(const MultiGraph&, const MultiGraph&) = default;
  friend auto operator<=>(const MultiGraph&, const MultiGraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

// No loops, no parallel edges. Throws std::invalid_argument otherwise.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  SimpleGraph(std::size_t vertex_count, std::vector<Edge> edges);

  static SimpleGraph edgeless(std::size_t vertex_count) {
    return SimpleGraph(vertex_count, {});
  }

  std::size_t vertex_count() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool has_edge(Edge e) const;
  std::size_t degree(Vertex v) const;
  bool has_isolated_vertex() const;

  MultiGraph to_multigraph() const { return MultiGraph(n_, edges_); }

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;
  friend auto operator<=>(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

// Vertices x_1..x_r are 0..r-1, y_1..y_{lambda_1} are r..r+lambda_1-1.
SimpleGraph ferrers_graph(const Shape& s);

SimpleGraph complete_graph(std::size_t n);
SimpleGraph path_graph(std::size_t n);
SimpleGraph cycle_graph(std::size_t n);

// The four edge operations. All throw EdgeNotPresent when e is missing.
// Removing or merging vertices renumbers the survivors in order; a
// contraction keeps the smaller endpoint's slot for the merged vertex.
SimpleGraph delete_edge(const SimpleGraph& g, Edge e);
MultiGraph delete_edge(const MultiGraph& g, Edge e);

// G contracted along one copy of e, keeping multiplicities; the other
// copies of e become loops.
MultiGraph contract_edge(const MultiGraph& g, Edge e);
MultiGraph contract_edge(const SimpleGraph& g, Edge e);

// Contraction followed by dropping loops and redundant parallel edges.
SimpleGraph simple_contract_edge(const SimpleGraph& g, Edge e);

// Removes both endpoints of e and everything incident to them.
SimpleGraph extract_edge(const SimpleGraph& g, Edge e);
MultiGraph extract_edge(const MultiGraph& g, Edge e);

// Edge-list text: first line "n m", then m lines "u v" (0-based).
// Throws ParseError on malformed input, loops or repeated edges.
SimpleGraph parse_edge_list(std::istream& in);
std::string to_edge_list(const SimpleGraph& g);

}  // namespace ferrers
