#include "ferrers/complex.hpp"

#include <algorithm>
#include <stdexcept>

#include "ferrers/errors.hpp"

namespace ferrers {

namespace {

// Counts fit in 64 bits only while n! does.
constexpr std::size_t kMaxCensusVertices = 20;

using Mask = std::uint64_t;

std::vector<Mask> adjacency(const SimpleGraph& g) {
  std::vector<Mask> adj(g.vertex_count(), 0);
  for (const auto& e : g.edges()) {
    adj[e.u] |= Mask{1} << e.v;
    adj[e.v] |= Mask{1} << e.u;
  }
  return adj;
}

void check_cap(const SimpleGraph& g, std::size_t max_vertices) {
  const auto n = g.vertex_count();
  if (n > max_vertices || n > kMaxCensusVertices) {
    throw GraphTooLarge("boolean complex census is capped at " +
                        std::to_string(std::min(max_vertices, kMaxCensusVertices)) +
                        " vertices, got " + std::to_string(n));
  }
}

// A word is a lexicographic normal form iff it has no factor b u a with
// a < b where a commutes with b and with every letter of u. Normal forms
// are closed under prefixes, so it is enough to check the new last letter.
bool extends_normal_form(std::span<const Vertex> word, Vertex a,
                         std::span<const Mask> adj) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const Vertex b = *it;
    if (adj[a] & (Mask{1} << b)) return true;
    if (b > a) return false;
  }
  return true;
}

// Depth-first walk over normal forms starting with `word`. Calls
// visit(word) at every node, including the start.
template <typename Visit>
void walk(std::vector<Vertex>& word, Mask used, std::size_t n,
          std::span<const Mask> adj, std::size_t max_length, Visit& visit) {
  visit(word);
  if (word.size() == max_length) return;
  for (Vertex a = 0; a < n; ++a) {
    if (used & (Mask{1} << a)) continue;
    if (!extends_normal_form(word, a, adj)) continue;
    word.push_back(a);
    walk(word, used | (Mask{1} << a), n, adj, max_length, visit);
    word.pop_back();
  }
}

}  // namespace

BigInt RankVector::evaluate(long t) const {
  BigInt total = 0;
  BigInt power = 1;
  for (const auto c : counts) {
    total += power * BigInt(static_cast<unsigned long>(c));
    power *= t;
  }
  return total;
}

std::vector<Vertex> canonical_word(const SimpleGraph& g,
                                   std::span<const Vertex> word) {
  const auto adj = adjacency(g);
  std::vector<Vertex> rest(word.begin(), word.end());
  std::vector<Vertex> out;
  out.reserve(rest.size());
  while (!rest.empty()) {
    std::size_t best = rest.size();
    Mask blockers = 0;  // union of neighbourhoods of letters passed so far
    for (std::size_t p = 0; p < rest.size(); ++p) {
      const Vertex a = rest[p];
      const bool free = (blockers & (Mask{1} << a)) == 0;
      if (free && (best == rest.size() || a < rest[best])) best = p;
      blockers |= adj[a] | (Mask{1} << a);
    }
    out.push_back(rest[best]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

std::vector<WordClass> word_classes(const SimpleGraph& g, std::size_t length,
                                    std::size_t max_vertices) {
  check_cap(g, max_vertices);
  const auto n = g.vertex_count();
  if (length > n) throw std::invalid_argument("word length exceeds vertex count");
  const auto adj = adjacency(g);

  std::vector<WordClass> out;
  auto collect = [&out, length](const std::vector<Vertex>& word) {
    if (word.size() != length) return;
    Mask support = 0;
    for (const auto v : word) support |= Mask{1} << v;
    out.push_back({word, support});
  };
  std::vector<Vertex> word;
  word.reserve(n);
  walk(word, 0, n, adj, length, collect);
  std::sort(out.begin(), out.end());
  return out;
}

RankVector rank_vector(const SimpleGraph& g, std::size_t max_vertices) {
  check_cap(g, max_vertices);
  const auto n = g.vertex_count();
  const auto adj = adjacency(g);

  // One shard per first letter; merged in letter order.
  std::vector<std::vector<std::uint64_t>> shard(
      n, std::vector<std::uint64_t>(n + 1, 0));
  const auto letters = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t first = 0; first < letters; ++first) {
    auto& counts = shard[static_cast<std::size_t>(first)];
    auto tally = [&counts](const std::vector<Vertex>& word) {
      ++counts[word.size()];
    };
    std::vector<Vertex> word{static_cast<Vertex>(first)};
    word.reserve(n);
    walk(word, Mask{1} << first, n, adj, n, tally);
  }

  RankVector rv{std::vector<std::uint64_t>(n + 1, 0)};
  rv.counts[0] = 1;
  for (const auto& counts : shard) {
    for (std::size_t k = 1; k <= n; ++k) rv.counts[k] += counts[k];
  }
  return rv;
}

BigInt beta_via_rank(const SimpleGraph& g, std::size_t max_vertices) {
  BigInt value = rank_vector(g, max_vertices).evaluate(-1);
  if (g.vertex_count() % 2 == 1) value = -value;
  return value;
}

}  // namespace ferrers
