#include "ferrers/graphs.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ferrers/errors.hpp"

namespace ferrers {

namespace {

void check_range(std::size_t n, const std::vector<Edge>& edges) {
  for (const auto& e : edges) {
    if (e.v >= n) {
      throw std::invalid_argument("edge endpoint " + std::to_string(e.v) +
                                  " out of range");
    }
  }
}

std::string describe(Edge e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

// Drops the vertices flagged in `removed` together with their edges and
// renumbers the rest in order.
std::pair<std::size_t, std::vector<Edge>> remove_vertices(
    std::size_t n, const std::vector<Edge>& edges,
    const std::vector<bool>& removed) {
  std::vector<Vertex> index(n, 0);
  Vertex next = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (!removed[v]) index[v] = next++;
  }
  std::vector<Edge> kept;
  kept.reserve(edges.size());
  for (const auto& e : edges) {
    if (!removed[e.u] && !removed[e.v]) kept.emplace_back(index[e.u], index[e.v]);
  }
  return {next, std::move(kept)};
}

// Merge e.v into e.u and drop one copy of e.
std::pair<std::size_t, std::vector<Edge>> contract_raw(
    std::size_t n, std::vector<Edge> edges, Edge e) {
  auto it = std::find(edges.begin(), edges.end(), e);
  if (it == edges.end()) throw EdgeNotPresent("no edge " + describe(e));
  edges.erase(it);
  const Vertex keep = e.u;
  const Vertex gone = e.v;
  std::vector<Edge> moved;
  moved.reserve(edges.size());
  for (const auto& f : edges) {
    moved.emplace_back(f.u == gone ? keep : f.u, f.v == gone ? keep : f.v);
  }
  std::vector<bool> removed(n, false);
  removed[gone] = true;
  return remove_vertices(n, moved, removed);
}

std::pair<std::size_t, std::vector<Edge>> extract_raw(
    std::size_t n, const std::vector<Edge>& edges, Edge e) {
  if (std::find(edges.begin(), edges.end(), e) == edges.end()) {
    throw EdgeNotPresent("no edge " + describe(e));
  }
  std::vector<bool> removed(n, false);
  removed[e.u] = true;
  removed[e.v] = true;
  return remove_vertices(n, edges, removed);
}

}  // namespace

MultiGraph::MultiGraph(std::size_t vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
  check_range(n_, edges_);
  std::sort(edges_.begin(), edges_.end());
}

std::size_t MultiGraph::multiplicity(Edge e) const {
  auto [lo, hi] = std::equal_range(edges_.begin(), edges_.end(), e);
  return static_cast<std::size_t>(hi - lo);
}

bool MultiGraph::has_loops() const noexcept {
  return std::any_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.is_loop(); });
}

SimpleGraph::SimpleGraph(std::size_t vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
  check_range(n_, edges_);
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].is_loop()) {
      throw std::invalid_argument("simple graph with loop " + describe(edges_[i]));
    }
    if (i > 0 && edges_[i] == edges_[i - 1]) {
      throw std::invalid_argument("simple graph with repeated edge " +
                                  describe(edges_[i]));
    }
  }
}

bool SimpleGraph::has_edge(Edge e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::size_t SimpleGraph::degree(Vertex v) const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(),
                    [v](const Edge& e) { return e.u == v || e.v == v; }));
}

bool SimpleGraph::has_isolated_vertex() const {
  std::vector<bool> touched(n_, false);
  for (const auto& e : edges_) touched[e.u] = touched[e.v] = true;
  return std::find(touched.begin(), touched.end(), false) != touched.end();
}

SimpleGraph ferrers_graph(const Shape& s) {
  const auto r = static_cast<Vertex>(s.row_count());
  const auto columns = static_cast<Vertex>(s.first());
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(s.cell_count()));
  for (Vertex i = 0; i < r; ++i) {
    const auto len = static_cast<Vertex>(s.row(i + 1));
    for (Vertex j = 0; j < len; ++j) edges.emplace_back(i, r + j);
  }
  return SimpleGraph(r + columns, std::move(edges));
}

SimpleGraph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return SimpleGraph(n, std::move(edges));
}

SimpleGraph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return SimpleGraph(n, std::move(edges));
}

SimpleGraph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  edges.emplace_back(0, static_cast<Vertex>(n - 1));
  return SimpleGraph(n, std::move(edges));
}

SimpleGraph delete_edge(const SimpleGraph& g, Edge e) {
  auto edges = g.edges();
  auto it = std::find(edges.begin(), edges.end(), e);
  if (it == edges.end()) throw EdgeNotPresent("no edge " + describe(e));
  edges.erase(it);
  return SimpleGraph(g.vertex_count(), std::move(edges));
}

MultiGraph delete_edge(const MultiGraph& g, Edge e) {
  auto edges = g.edges();
  auto it = std::find(edges.begin(), edges.end(), e);
  if (it == edges.end()) throw EdgeNotPresent("no edge " + describe(e));
  edges.erase(it);
  return MultiGraph(g.vertex_count(), std::move(edges));
}

MultiGraph contract_edge(const MultiGraph& g, Edge e) {
  auto [n, edges] = contract_raw(g.vertex_count(), g.edges(), e);
  return MultiGraph(n, std::move(edges));
}

MultiGraph contract_edge(const SimpleGraph& g, Edge e) {
  return contract_edge(g.to_multigraph(), e);
}

SimpleGraph simple_contract_edge(const SimpleGraph& g, Edge e) {
  auto [n, edges] = contract_raw(g.vertex_count(), g.edges(), e);
  std::erase_if(edges, [](const Edge& f) { return f.is_loop(); });
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return SimpleGraph(n, std::move(edges));
}

SimpleGraph extract_edge(const SimpleGraph& g, Edge e) {
  auto [n, edges] = extract_raw(g.vertex_count(), g.edges(), e);
  return SimpleGraph(n, std::move(edges));
}

MultiGraph extract_edge(const MultiGraph& g, Edge e) {
  auto [n, edges] = extract_raw(g.vertex_count(), g.edges(), e);
  return MultiGraph(n, std::move(edges));
}

SimpleGraph parse_edge_list(std::istream& in) {
  std::string line;
  auto next_line = [&in, &line]() -> bool {
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  auto read_pair = [&line](const char* what) {
    std::istringstream fields(line);
    long long a = 0;
    long long b = 0;
    std::string rest;
    if (!(fields >> a >> b) || (fields >> rest) || a < 0 || b < 0) {
      throw ParseError(std::string("malformed ") + what + " line \"" + line + "\"");
    }
    return std::pair<std::size_t, std::size_t>(static_cast<std::size_t>(a),
                                               static_cast<std::size_t>(b));
  };

  if (!next_line()) throw ParseError("empty edge list");
  const auto [n, m] = read_pair("header");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    if (!next_line()) {
      throw ParseError("expected " + std::to_string(m) + " edges, got " +
                       std::to_string(k));
    }
    const auto [u, v] = read_pair("edge");
    if (u >= n || v >= n) throw ParseError("vertex out of range in \"" + line + "\"");
    if (u == v) throw ParseError("loop in \"" + line + "\"");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (next_line()) throw ParseError("trailing content \"" + line + "\"");
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw ParseError("repeated edge in edge list");
  }
  return SimpleGraph(n, std::move(edges));
}

std::string to_edge_list(const SimpleGraph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " +
                    std::to_string(g.edges().size()) + "\n";
  for (const auto& e : g.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

}  // namespace ferrers
