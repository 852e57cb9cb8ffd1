#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "ferrers/errors.hpp"
#include "ferrers/graph_invariants.hpp"

namespace ferrers {

namespace {

using Poly = TrivariatePolynomial;

std::vector<bool> flags(std::size_t n, std::initializer_list<Vertex> set) {
  std::vector<bool> out(n, false);
  for (const auto v : set) out[v] = true;
  return out;
}

MultiGraph without_vertices(const MultiGraph& g, const std::vector<bool>& drop) {
  std::vector<Vertex> index(g.vertex_count(), 0);
  Vertex next = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (!drop[v]) index[v] = next++;
  }
  std::vector<Edge> kept;
  for (const auto& e : g.edges()) {
    if (!drop[e.u] && !drop[e.v]) kept.emplace_back(index[e.u], index[e.v]);
  }
  return MultiGraph(next, std::move(kept));
}

Poly x_power(std::size_t k) {
  return Poly::term(1, {static_cast<std::uint32_t>(k), 0, 0});
}

class XiEngine {
 public:
  Poly operator()(const MultiGraph& g) {
    if (g.vertex_count() == 0) return 1;
    if (auto it = memo_.find(g); it != memo_.end()) return it->second;
    Poly value = expand(g);
    memo_.emplace(g, value);
    return value;
  }

 private:
  Poly expand(const MultiGraph& g) {
    const auto n = g.vertex_count();
    const auto& edges = g.edges();

    std::vector<std::size_t> degree(n, 0);
    for (const auto& e : edges) {
      ++degree[e.u];
      ++degree[e.v];
    }
    std::vector<bool> isolated(n, false);
    std::size_t isolated_count = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (degree[v] == 0) {
        isolated[v] = true;
        ++isolated_count;
      }
    }
    if (isolated_count > 0) {
      return x_power(isolated_count) * (*this)(without_vertices(g, isolated));
    }

    if (auto parts = components(g); parts.size() > 1) {
      Poly product = 1;
      for (const auto& part : parts) product *= (*this)(part);
      return product;
    }

    const Poly y = Poly::y();
    const Poly z = Poly::z();

    for (const auto& e : edges) {
      if (e.is_loop()) {
        return (Poly(1) + y) * (*this)(delete_edge(g, e)) +
               z * (*this)(without_vertices(g, flags(n, {e.u})));
      }
    }

    // Highest multiplicity first, then the edge with the smallest endpoint
    // degree sum.
    Edge pivot = edges.front();
    std::size_t best_mult = 0;
    std::size_t best_degree = 0;
    for (std::size_t i = 0; i < edges.size();) {
      std::size_t j = i;
      while (j < edges.size() && edges[j] == edges[i]) ++j;
      const auto mult = j - i;
      const auto deg = degree[edges[i].u] + degree[edges[i].v];
      if (mult > best_mult || (mult == best_mult && deg < best_degree)) {
        pivot = edges[i];
        best_mult = mult;
        best_degree = deg;
      }
      i = j;
    }

    return (*this)(delete_edge(g, pivot)) +
           y * (*this)(contract_edge(g, pivot)) +
           z * (*this)(extract_edge(g, pivot));
  }

  static std::vector<MultiGraph> components(const MultiGraph& g) {
    const auto n = g.vertex_count();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](std::size_t v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (const auto& e : g.edges()) parent[find(e.u)] = find(e.v);

    std::map<std::size_t, std::vector<Vertex>> groups;
    for (std::size_t v = 0; v < n; ++v) {
      groups[find(v)].push_back(static_cast<Vertex>(v));
    }
    std::vector<MultiGraph> out;
    if (groups.size() == 1) {
      out.push_back(g);
      return out;
    }
    for (const auto& [root, members] : groups) {
      std::vector<bool> drop(n, true);
      for (const auto v : members) drop[v] = false;
      out.push_back(without_vertices(g, drop));
    }
    return out;
  }

  std::map<MultiGraph, Poly> memo_;
};

void check_cap(std::size_t n, std::size_t max_vertices) {
  if (n > max_vertices) {
    throw GraphTooLarge("edge-elimination polynomial is capped at " +
                        std::to_string(max_vertices) + " vertices, got " +
                        std::to_string(n));
  }
}

}  // namespace

TrivariatePolynomial xi_polynomial(const MultiGraph& g,
                                   std::size_t max_vertices) {
  check_cap(g.vertex_count(), max_vertices);
  XiEngine engine;
  return engine(g);
}

TrivariatePolynomial xi_polynomial(const SimpleGraph& g,
                                   std::size_t max_vertices) {
  return xi_polynomial(g.to_multigraph(), max_vertices);
}

BigInt beta_via_xi(const SimpleGraph& g, std::size_t max_vertices) {
  BigInt value = xi_polynomial(g, max_vertices).evaluate(0, -1, 1);
  if (g.vertex_count() % 2 == 1) value = -value;
  return value;
}

BigInt bichromatic_via_xi(const SimpleGraph& g, long x, long y,
                          std::size_t max_vertices) {
  return xi_polynomial(g, max_vertices).evaluate(x, -1, x - y);
}

}  // namespace ferrers
