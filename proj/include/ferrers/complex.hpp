#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "ferrers/bigint.hpp"
#include "ferrers/graphs.hpp"
#include "ferrers/limits.hpp"

namespace ferrers {

// An element of the boolean poset: a class of injective words in which
// letters that are not adjacent in the graph commute. `word` is the
// lexicographically least member.
struct WordClass {
  std::vector<Vertex> word;
  std::uint64_t support = 0;  // bit v set iff v occurs

  friend bool operator==(const WordClass&, const WordClass&) = default;
  friend auto operator<=>(const WordClass&, const WordClass&) = default;
};

// counts[k] = number of classes of length k, k = 0..|G|.
struct RankVector {
  std::vector<std::uint64_t> counts;

  // R(t) at an integer point.
  BigInt evaluate(long t) const;
  friend bool operator==(const RankVector&, const RankVector&) = default;
};

// Lexicographically least word equivalent to `word`: repeatedly take the
// smallest letter that commutes with every letter still in front of it.
std::vector<Vertex> canonical_word(const SimpleGraph& g,
                                   std::span<const Vertex> word);

// One class per element of rank `length`, sorted by representative.
// Throws GraphTooLarge above max_vertices.
std::vector<WordClass> word_classes(
    const SimpleGraph& g, std::size_t length,
    std::size_t max_vertices = OracleLimits{}.exhaustive_vertices);

RankVector rank_vector(
    const SimpleGraph& g,
    std::size_t max_vertices = OracleLimits{}.exhaustive_vertices);

// (-1)^|G| R(-1).
BigInt beta_via_rank(
    const SimpleGraph& g,
    std::size_t max_vertices = OracleLimits{}.exhaustive_vertices);

}  // namespace ferrers
