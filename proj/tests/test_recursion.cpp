#include <doctest.h>

#include "ferrers/recursion.hpp"
#include "ferrers/triangle.hpp"

using namespace ferrers;

TEST_CASE("beta_row_recursion base cases") {
  for (std::int64_t k = 1; k <= 5; ++k) CHECK(beta_row_recursion(Shape{k}) == 1);
  CHECK(beta_row_recursion(Shape{1, 1}) == 1);
  CHECK(beta_row_recursion(Shape{2, 2}) == 5);
  CHECK(beta_row_recursion(Shape{3, 2, 1}) == 8);
  CHECK(beta_row_recursion(Shape{0}) == 0);
  CHECK(beta_row_recursion(Shape{4, 0}) == 0);
}

TEST_CASE("row recursion agrees with the triangle") {
  for (const auto& s : enumerate_shapes(10, true, 6)) {
    CAPTURE(s.to_string());
    const auto beta = beta_row_recursion(s);
    CHECK(beta == beta_triangle(s));
    // beta = 0 exactly when there is a zero row
    CHECK((beta == 0) == s.has_zero_row());
    if (!s.has_zero_row()) CHECK(beta >= 1);
  }
  for (std::int64_t r = 1; r <= 8; ++r) {
    CHECK(beta_row_recursion(staircase(r)) == beta_triangle(staircase(r)));
  }
}

TEST_CASE("row recursion handles deep shapes without recursing") {
  const Shape tall(std::vector<Shape::Length>(3000, 1));
  CHECK(beta_row_recursion(tall) == 1);  // a star on the column side
  const Shape two_columns(std::vector<Shape::Length>(60, 2));
  CHECK(beta_row_recursion(two_columns) == beta_triangle(transpose(two_columns)));
}

TEST_CASE("memo table normalisation keeps one trailing zero row") {
  CHECK(MemoTable::normalize(Shape{3, 1, 0, 0, 0}) == MemoTable::Key{3, 1, 0});
  CHECK(MemoTable::normalize(Shape{3, 1}) == MemoTable::Key{3, 1});
  MemoTable memo;
  CHECK(beta_row_recursion(Shape{4, 3, 3, 1}, memo) == beta_triangle(Shape{4, 3, 3, 1}));
  CHECK(memo.size() > 0);
  // Every memoised value is the beta of its key.
  CHECK(*memo.find({4, 3, 3, 1}) == beta_triangle(Shape{4, 3, 3, 1}));
}
