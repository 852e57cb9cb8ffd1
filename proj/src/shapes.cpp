#include "ferrers/shapes.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "ferrers/errors.hpp"

namespace ferrers {

namespace {

void validate(const std::vector<Shape::Length>& rows) {
  if (rows.empty()) {
    throw NotAPartition("a shape needs at least one row");
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] < 0) {
      throw NotAPartition("negative row length " + std::to_string(rows[i]));
    }
    if (i > 0 && rows[i] > rows[i - 1]) {
      throw NotAPartition("row lengths must be weakly decreasing");
    }
  }
}

std::string_view trim(std::string_view s) {
  auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// Partitions of exactly n with parts <= max_part, largest parts first.
void partitions_of(Shape::Length n, Shape::Length max_part,
                   std::vector<Shape::Length>& prefix,
                   std::vector<Shape>& out) {
  if (n == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (Shape::Length part = std::min(n, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_of(n - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

Shape::Shape(std::vector<Length> rows) : rows_(std::move(rows)) {
  validate(rows_);
}

Shape::Shape(std::initializer_list<Length> rows)
    : Shape(std::vector<Length>(rows)) {}

Shape::Length Shape::cell_count() const noexcept {
  return std::accumulate(rows_.begin(), rows_.end(), Length{0});
}

std::string Shape::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(rows_[i]);
  }
  return out;
}

Shape parse_shape(std::string_view text) {
  std::vector<Shape::Length> rows;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto token = trim(text.substr(
        start, comma == std::string_view::npos ? std::string_view::npos
                                               : comma - start));
    if (token.empty()) {
      throw ParseError("empty entry in shape \"" + std::string(text) + "\"");
    }
    Shape::Length value = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    // from_chars rejects a leading '+', which is what we want.
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
      throw ParseError("malformed entry \"" + std::string(token) + "\"");
    }
    rows.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Shape(std::move(rows));
}

Shape transpose(const Shape& s) {
  const auto columns = s.first();
  if (columns == 0) {
    throw EmptyShape("the transpose of an all-zero shape has no rows");
  }
  std::vector<Shape::Length> conj(static_cast<std::size_t>(columns), 0);
  for (const auto len : s.rows()) {
    for (Shape::Length j = 0; j < len; ++j) ++conj[static_cast<std::size_t>(j)];
  }
  return Shape(std::move(conj));
}

Shape drop_last_row(const Shape& s) {
  if (s.row_count() < 2) {
    throw TooFewRows("cannot drop the only row of " + s.to_string());
  }
  std::vector<Shape::Length> rows(s.rows().begin(), s.rows().end() - 1);
  return Shape(std::move(rows));
}

Shape shift(const Shape& s, Shape::Length t) {
  if (t < -s.last()) {
    throw ShiftTooNegative("shift by " + std::to_string(t) + " below row " +
                           std::to_string(s.last()));
  }
  std::vector<Shape::Length> rows = s.rows();
  for (auto& len : rows) len += t;
  return Shape(std::move(rows));
}

Shape staircase(std::int64_t r, std::int64_t d) {
  if (r < 1 || d < 1) {
    throw std::invalid_argument("staircase needs r >= 1 and d >= 1");
  }
  std::vector<Shape::Length> rows;
  rows.reserve(static_cast<std::size_t>(r));
  for (std::int64_t i = r; i >= 1; --i) rows.push_back(i * d);
  return Shape(std::move(rows));
}

Shape rectangle(std::int64_t r, std::int64_t k) {
  if (r < 1 || k < 1) {
    throw std::invalid_argument("rectangle needs r >= 1 and k >= 1");
  }
  return Shape(std::vector<Shape::Length>(static_cast<std::size_t>(r), k));
}

std::vector<Shape> enumerate_partitions(std::int64_t n_max) {
  std::vector<Shape> out;
  std::vector<Shape::Length> prefix;
  for (std::int64_t n = 1; n <= n_max; ++n) partitions_of(n, n, prefix, out);
  return out;
}

std::vector<Shape> enumerate_shapes(std::int64_t n_max, bool allow_zero_rows,
                                    std::int64_t max_rows) {
  auto out = enumerate_partitions(n_max);
  if (!allow_zero_rows || n_max < 0) return out;
  if (max_rows < 0) max_rows = n_max + 1;
  const auto limit = static_cast<std::size_t>(max_rows);

  const auto base_count = out.size();
  for (std::size_t b = 0; b < base_count; ++b) {
    auto rows = out[b].rows();
    while (rows.size() < limit) {
      rows.push_back(0);
      out.emplace_back(rows);
    }
  }
  for (std::size_t r = 1; r <= limit; ++r) {
    out.emplace_back(std::vector<Shape::Length>(r, 0));
  }
  return out;
}

Shape random_partition(std::int64_t cells, std::mt19937_64& rng) {
  if (cells < 1) throw std::invalid_argument("random_partition needs cells >= 1");
  // Each of the cells-1 gaps between unit cells is a cut with probability 1/2.
  std::bernoulli_distribution cut(0.5);
  std::vector<Shape::Length> parts;
  Shape::Length current = 1;
  for (std::int64_t gap = 1; gap < cells; ++gap) {
    if (cut(rng)) {
      parts.push_back(current);
      current = 1;
    } else {
      ++current;
    }
  }
  parts.push_back(current);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Shape(std::move(parts));
}

}  // namespace ferrers
