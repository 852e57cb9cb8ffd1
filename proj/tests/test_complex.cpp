#include <doctest.h>

#include <set>

#include "ferrers/complex.hpp"
#include "ferrers/errors.hpp"
#include "ferrers/graph_invariants.hpp"
#include "ferrers/triangle.hpp"
#include "support/oracles.hpp"

using namespace ferrers;

namespace {

using Word = std::vector<Vertex>;

std::vector<Word> representatives(const std::vector<WordClass>& classes) {
  std::vector<Word> out;
  for (const auto& c : classes) out.push_back(c.word);
  return out;
}

}  // namespace

TEST_CASE("word classes") {
  const auto k2 = complete_graph(2);
  CHECK(representatives(word_classes(k2, 2)) == std::vector<Word>{{0, 1}, {1, 0}});
  const auto d2 = SimpleGraph::edgeless(2);
  CHECK(representatives(word_classes(d2, 2)) == std::vector<Word>{{0, 1}});
  for (const auto& g : {k2, d2, path_graph(4)}) {
    CHECK(representatives(word_classes(g, 0)) == std::vector<Word>{{}});
  }
  const auto classes = word_classes(path_graph(3), 2);
  for (const auto& c : classes) {
    CHECK(c.support == ((std::uint64_t{1} << c.word[0]) | (std::uint64_t{1} << c.word[1])));
  }
  CHECK_THROWS_AS(word_classes(SimpleGraph::edgeless(9), 1), GraphTooLarge);
}

TEST_CASE("canonical word is the lexicographically least class member") {
  // b z a with a commuting with both, b-z adjacent: the adjacent-swap
  // fixed point is not the least word.
  const SimpleGraph g(3, {{1, 2}});  // a = 0, z = 1, b = 2
  CHECK(canonical_word(g, Word{2, 1, 0}) == Word{0, 2, 1});
  CHECK(canonical_word(complete_graph(3), Word{2, 0, 1}) == Word{2, 0, 1});
  CHECK(canonical_word(SimpleGraph::edgeless(3), Word{2, 0, 1}) == Word{0, 1, 2});

  // Every word's canonical form is the minimum over its swap-closure, and
  // the enumerated classes are exactly the canonical forms.
  for (const auto& graph : testing::graph_universe(4)) {
    const auto n = graph.vertex_count();
    for (std::size_t k = 0; k <= n; ++k) {
      const auto classes = representatives(word_classes(graph, k));
      std::set<Word> canon;
      Word letters(n);
      for (Vertex v = 0; v < n; ++v) letters[v] = v;
      std::vector<bool> choose(n, false);
      std::fill(choose.begin(), choose.begin() + static_cast<std::ptrdiff_t>(k), true);
      do {
        Word w;
        for (Vertex v = 0; v < n; ++v) {
          if (choose[v]) w.push_back(v);
        }
        do {
          const auto c = canonical_word(graph, w);
          CHECK(c <= w);
          canon.insert(c);
        } while (std::next_permutation(w.begin(), w.end()));
      } while (std::prev_permutation(choose.begin(), choose.end()));
      CHECK(classes == std::vector<Word>(canon.begin(), canon.end()));
    }
  }
}

TEST_CASE("rank vector") {
  CHECK(rank_vector(complete_graph(2)).counts == std::vector<std::uint64_t>{1, 2, 2});
  CHECK(rank_vector(SimpleGraph::edgeless(2)).counts == std::vector<std::uint64_t>{1, 2, 1});
  CHECK(rank_vector(SimpleGraph::edgeless(1)).counts == std::vector<std::uint64_t>{1, 1});
  CHECK(rank_vector(SimpleGraph()).counts == std::vector<std::uint64_t>{1});
}

TEST_CASE("rank vector matches the union-find census") {
  for (const auto& g : testing::graph_universe(6)) {
    const auto rv = rank_vector(g);
    CHECK(rv.counts == testing::rank_counts_by_swaps(g));
    CHECK(rv.counts[0] == 1);
    CHECK(rv.counts.size() == g.vertex_count() + 1);
    if (g.vertex_count() > 0) CHECK(rv.counts[1] == g.vertex_count());
  }
}

TEST_CASE("beta via rank") {
  CHECK(beta_via_rank(complete_graph(2)) == 1);
  CHECK(beta_via_rank(SimpleGraph::edgeless(2)) == 0);
  CHECK(beta_via_rank(ferrers_graph(Shape{2, 1})) == 2);
  CHECK(beta_via_rank(ferrers_graph(Shape{2, 2})) == 5);
}

TEST_CASE("rank oracle agrees with the edge recursion on small graphs") {
  for (const auto& g : testing::graph_universe(7)) {
    CHECK(beta_via_rank(g) == beta_edge_recursion(g));
  }
}

TEST_CASE("rank oracle agrees with the triangle on Ferrers shapes") {
  for (const auto& s : enumerate_partitions(9)) {
    CAPTURE(s.to_string());
    const auto g = ferrers_graph(s);
    CHECK(beta_via_rank(g, 16) == beta_triangle(s));
  }
}
