#include <bit>
#include <cstdint>
#include <limits>
#include <vector>

#include "ferrers/errors.hpp"
#include "ferrers/graph_invariants.hpp"

namespace ferrers {

namespace {

constexpr std::size_t kMaxBitVertices = 64;

using Mask = std::uint64_t;

constexpr Mask bit(unsigned v) { return Mask{1} << v; }

// A frame is alive-mask followed by one adjacency mask per original vertex.
// Dead vertices keep stale masks; only alive ones are read.
class FrameStack {
 public:
  explicit FrameStack(std::size_t n) : stride_(n + 1) {}

  Mask* push() {
    data_.resize(data_.size() + stride_);
    return data_.data() + data_.size() - stride_;
  }
  void pop_into(std::vector<Mask>& frame) {
    const auto* top = data_.data() + data_.size() - stride_;
    frame.assign(top, top + stride_);
    data_.resize(data_.size() - stride_);
  }
  bool empty() const noexcept { return data_.empty(); }

 private:
  std::size_t stride_;
  std::vector<Mask> data_;
};

}  // namespace

BigInt beta_edge_recursion(const SimpleGraph& g, EdgeOrder order,
                           std::size_t max_vertices) {
  const auto n = g.vertex_count();
  if (n > max_vertices || n > kMaxBitVertices) {
    throw GraphTooLarge("edge recursion is capped at " +
                        std::to_string(max_vertices) + " vertices, got " +
                        std::to_string(n));
  }
  if (n == 0) return 1;

  FrameStack stack(n);
  {
    Mask* root = stack.push();
    root[0] = n == 64 ? ~Mask{0} : bit(static_cast<unsigned>(n)) - 1;
    for (std::size_t v = 0; v < n; ++v) root[v + 1] = 0;
    for (const auto& e : g.edges()) {
      root[e.u + 1] |= bit(e.v);
      root[e.v + 1] |= bit(e.u);
    }
  }

  BigInt total = 0;
  std::uint64_t leaves = 0;
  std::vector<Mask> frame;
  while (!stack.empty()) {
    stack.pop_into(frame);
    const Mask alive = frame[0];
    Mask* adj = frame.data() + 1;
    if (alive == 0) {
      if (++leaves == std::numeric_limits<std::uint64_t>::max()) {
        total += BigInt(static_cast<unsigned long>(leaves));
        leaves = 0;
      }
      continue;
    }

    bool isolated = false;
    unsigned pivot = 64;
    int best_degree = std::numeric_limits<int>::max();
    for (Mask rest = alive; rest != 0; rest &= rest - 1) {
      const auto v = static_cast<unsigned>(std::countr_zero(rest));
      const int degree = std::popcount(adj[v]);
      if (degree == 0) {
        isolated = true;
        break;
      }
      if (order == EdgeOrder::first_edge) {
        if (pivot == 64) pivot = v;
      } else if (degree < best_degree) {
        best_degree = degree;
        pivot = v;
      }
    }
    if (isolated) continue;

    const unsigned u = pivot;
    const auto w = static_cast<unsigned>(std::countr_zero(adj[u]));
    const Mask pair = bit(u) | bit(w);

    // G - e
    Mask* del = stack.push();
    std::copy(frame.begin(), frame.end(), del);
    del[u + 1] &= ~bit(w);
    del[w + 1] &= ~bit(u);

    // G - [e]
    Mask* ext = stack.push();
    ext[0] = alive & ~pair;
    for (Mask rest = ext[0]; rest != 0; rest &= rest - 1) {
      const auto v = static_cast<unsigned>(std::countr_zero(rest));
      ext[v + 1] = adj[v] & ~pair;
    }

    // G / e: w merges into u
    Mask* con = stack.push();
    con[0] = alive & ~bit(w);
    for (Mask rest = con[0]; rest != 0; rest &= rest - 1) {
      const auto v = static_cast<unsigned>(std::countr_zero(rest));
      Mask a = adj[v];
      if (a & bit(w)) a = (a & ~bit(w)) | bit(u);
      con[v + 1] = a;
    }
    con[u + 1] = (adj[u] | adj[w]) & ~pair;
  }
  total += BigInt(static_cast<unsigned long>(leaves));
  return total;
}

BigInt bivariate_chromatic_count(const SimpleGraph& g, long x, long y,
                                 std::size_t max_vertices) {
  if (y < 0 || y > x) {
    throw std::invalid_argument("bivariate chromatic count needs 0 <= y <= x");
  }
  const auto n = g.vertex_count();
  if (n > max_vertices) {
    throw GraphTooLarge("exhaustive coloring is capped at " +
                        std::to_string(max_vertices) + " vertices, got " +
                        std::to_string(n));
  }
  if (n == 0) return 1;
  if (x == 0) return 0;

  // Earlier neighbours of each vertex, for the proper-color check.
  std::vector<std::vector<Vertex>> earlier(n);
  for (const auto& e : g.edges()) earlier[e.v].push_back(e.u);

  std::vector<long> color(n, -1);
  BigInt count = 0;
  std::uint64_t local = 0;
  std::size_t v = 0;
  while (true) {
    ++color[v];
    if (color[v] == x) {
      color[v] = -1;
      if (v == 0) break;
      --v;
      continue;
    }
    bool ok = true;
    if (color[v] < y) {
      for (const auto u : earlier[v]) {
        if (color[u] == color[v]) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    if (v + 1 == n) {
      ++local;
    } else {
      ++v;
    }
  }
  count += BigInt(static_cast<unsigned long>(local));
  return count;
}

}  // namespace ferrers
