#include <doctest.h>

#include <random>
#include <set>

#include "ferrers/errors.hpp"
#include "ferrers/shapes.hpp"
#include "support/oracles.hpp"

using namespace ferrers;

TEST_CASE("parse_shape") {
  CHECK(parse_shape("7,7,7,6,4,4,2") == Shape{7, 7, 7, 6, 4, 4, 2});
  CHECK(parse_shape("3") == Shape{3});
  CHECK(parse_shape(" 4, 4 ,2 ") == Shape{4, 4, 2});
  CHECK(parse_shape("3,0") == Shape{3, 0});
  CHECK_THROWS_AS(parse_shape("2,3"), NotAPartition);
  CHECK_THROWS_AS(parse_shape("2,-1"), NotAPartition);
  CHECK_THROWS_AS(parse_shape(""), ParseError);
  CHECK_THROWS_AS(parse_shape("3,,1"), ParseError);
  CHECK_THROWS_AS(parse_shape("3,a"), ParseError);
  CHECK_THROWS_AS(parse_shape("3,1.5"), ParseError);
  CHECK_THROWS_AS(parse_shape("+3"), ParseError);
}

TEST_CASE("to_string round trips") {
  const Shape s{7, 7, 7, 6, 4, 4, 2};
  CHECK(parse_shape(s.to_string()) == s);
}

TEST_CASE("transpose") {
  CHECK(transpose(Shape{4, 4, 2}) == Shape{3, 3, 2, 2});
  CHECK(transpose(Shape{1}) == Shape{1});
  CHECK(transpose(Shape{5}) == Shape{1, 1, 1, 1, 1});
  CHECK(transpose(Shape{3, 1, 0}) == Shape{2, 1, 1});
  CHECK_THROWS_AS(transpose(Shape{0, 0}), EmptyShape);
}

TEST_CASE("drop_last_row") {
  CHECK(drop_last_row(Shape{7, 7, 7, 6, 4, 4, 2}) == Shape{7, 7, 7, 6, 4, 4});
  CHECK(drop_last_row(Shape{3, 0}) == Shape{3});
  CHECK_THROWS_AS(drop_last_row(Shape{1}), TooFewRows);
}

TEST_CASE("shift") {
  CHECK(shift(Shape{4, 4, 2}, 1) == Shape{5, 5, 3});
  CHECK(shift(Shape{4, 4, 2}, -2) == Shape{2, 2, 0});
  CHECK_THROWS_AS(shift(Shape{4, 4, 2}, -3), ShiftTooNegative);
}

TEST_CASE("staircase and rectangle") {
  CHECK(staircase(3, 1) == Shape{3, 2, 1});
  CHECK(staircase(3, 2) == Shape{6, 4, 2});
  CHECK(staircase(1, 5) == Shape{5});
  CHECK(rectangle(2, 2) == Shape{2, 2});
  CHECK(rectangle(1, 4) == Shape{4});
  CHECK(rectangle(3, 1) == Shape{1, 1, 1});
  CHECK_THROWS_AS(staircase(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(rectangle(1, 0), std::invalid_argument);
}

TEST_CASE("enumerate_shapes matches the composition-filtering oracle") {
  CHECK(enumerate_shapes(3, false) ==
        std::vector<Shape>{Shape{1}, Shape{2}, Shape{1, 1}, Shape{3},
                           Shape{2, 1}, Shape{1, 1, 1}});
  CHECK(enumerate_shapes(0, false).empty());

  for (unsigned n = 1; n <= 12; ++n) {
    std::set<std::vector<std::int64_t>> mine;
    for (const auto& s : enumerate_partitions(n)) {
      if (s.cell_count() == n) mine.insert(s.rows());
    }
    const auto expected = testing::partitions_by_filtering(n);
    CHECK(mine == std::set<std::vector<std::int64_t>>(expected.begin(), expected.end()));
  }
}

TEST_CASE("enumerate_shapes with zero rows") {
  const auto shapes = enumerate_shapes(2, true, 2);
  const std::set<Shape> seen(shapes.begin(), shapes.end());
  CHECK(seen.size() == shapes.size());
  CHECK(seen.count(Shape{1, 0}) == 1);
  CHECK(seen.count(Shape{2, 0}) == 1);
  CHECK(seen.count(Shape{1, 1}) == 1);
  CHECK(seen.count(Shape{0}) == 1);
  CHECK(seen.count(Shape{0, 0}) == 1);
  for (const auto& s : shapes) CHECK(s.row_count() <= 2);
}

TEST_CASE("shape invariants on the small universe") {
  for (const auto& s : enumerate_partitions(10)) {
    CAPTURE(s.to_string());
    CHECK(transpose(transpose(s)) == s);
    CHECK(transpose(s).cell_count() == s.cell_count());
    const auto r = static_cast<std::int64_t>(s.row_count());
    for (std::int64_t t = -s.last(); t <= 2; ++t) {
      CHECK(shift(s, t).cell_count() == s.cell_count() + t * r);
      if (s.row_count() > 1) {
        CHECK(drop_last_row(shift(s, t)) == shift(drop_last_row(s), t));
      }
    }
  }
  for (std::int64_t r = 1; r <= 6; ++r) {
    for (std::int64_t d = 1; d <= 4; ++d) {
      CHECK(staircase(r, d).cell_count() == d * r * (r + 1) / 2);
    }
  }
}

TEST_CASE("random_partition") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::int64_t n = 1 + trial % 50;
    const auto s = random_partition(n, rng);
    CHECK(s.cell_count() == n);
    CHECK(!s.has_zero_row());
  }
}
