#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace ferrers {

// A Ferrers shape with an explicit number of rows. Rows are weakly
// decreasing and nonnegative; zero rows are allowed and significant
// (each one is an isolated vertex of the Ferrers graph).
class Shape {
 public:
  using Length = std::int64_t;

  // Throws NotAPartition unless rows is nonempty, nonnegative and weakly
  // decreasing.
  explicit Shape(std::vector<Length> rows);
  Shape(std::initializer_list<Length> rows);

  const std::vector<Length>& rows() const noexcept { return rows_; }
  std::size_t row_count() const noexcept { return rows_.size(); }

  // 1-based, matching the usual lambda_i indexing.
  Length row(std::size_t i) const { return rows_.at(i - 1); }
  Length first() const noexcept { return rows_.front(); }
  Length last() const noexcept { return rows_.back(); }

  Length cell_count() const noexcept;
  bool has_zero_row() const noexcept { return rows_.back() == 0; }

  // Comma-separated row lengths, e.g. "7,7,7,6,4,4,2".
  std::string to_string() const;

  friend bool operator==(const Shape&, const Shape&) = default;
  friend auto operator<=>(const Shape&, const Shape&) = default;

 private:
  std::vector<Length> rows_;
};

// Accepts "7,7,7,6,4,4,2"; whitespace around tokens is ignored.
// Throws ParseError on malformed tokens and NotAPartition on negative or
// increasing entries.
Shape parse_shape(std::string_view text);

// Conjugate partition. Zero rows are dropped first; throws EmptyShape if
// nothing remains.
Shape transpose(const Shape& s);

// Throws TooFewRows when the shape has a single row.
Shape drop_last_row(const Shape& s);

// Adds t to every row (t < 0 removes full-height columns). Throws
// ShiftTooNegative when t < -lambda_r.
Shape shift(const Shape& s, Shape::Length t);

// (rd, (r-1)d, ..., d).
Shape staircase(std::int64_t r, std::int64_t d = 1);

// r rows of length k; its Ferrers graph is K_{r,k}.
Shape rectangle(std::int64_t r, std::int64_t k);

// All partitions (no zero rows) with 1..n_max cells, ordered by cell count
// and then reverse-lexicographically within a cell count.
std::vector<Shape> enumerate_partitions(std::int64_t n_max);

// enumerate_partitions, plus (when allow_zero_rows) every such partition
// padded with zero rows up to max_rows rows, plus the all-zero shapes with
// 1..max_rows rows. max_rows < 0 selects the default n_max + 1.
std::vector<Shape> enumerate_shapes(std::int64_t n_max, bool allow_zero_rows,
                                    std::int64_t max_rows = -1);

// A random partition of exactly `cells` cells (cells >= 1): a uniform random
// composition sorted into weakly decreasing order.
Shape random_partition(std::int64_t cells, std::mt19937_64& rng);

}  // namespace ferrers
