#pragma once

#include <map>
#include <vector>

#include "ferrers/bigint.hpp"
#include "ferrers/shapes.hpp"

namespace ferrers {

// Memo for the bottom-row recursion. Keys are row vectors with at most one
// trailing zero row kept (all zero-row shapes have beta = 0). Confined to a
// single computation; not safe to share between threads.
class MemoTable {
 public:
  using Key = std::vector<Shape::Length>;

  static Key normalize(const Shape& s);

  const BigInt* find(const Key& key) const;
  void insert(Key key, BigInt value);
  std::size_t size() const noexcept { return values_.size(); }

 private:
  std::map<Key, BigInt> values_;
};

// beta(lambda) = 1 for a single row, otherwise
//   lambda_r * beta(lambda^) + sum_{l=1}^{lambda_r} C(lambda_r+1, l+1) beta(lambda^[-l])
// where lambda^ drops the bottom row. Any zero row gives 0 immediately.
// Evaluated with an explicit stack, so deep shapes do not recurse.
BigInt beta_row_recursion(const Shape& s);
BigInt beta_row_recursion(const Shape& s, MemoTable& memo);

}  // namespace ferrers
