#include "ferrers/recursion.hpp"

#include <utility>

namespace ferrers {

namespace {

using Key = MemoTable::Key;

bool has_zero(const Key& rows) { return !rows.empty() && rows.back() == 0; }

// The subshapes lambda^ and lambda^[-l] for l = 1..lambda_r, in that order.
std::vector<Key> children(const Key& rows) {
  const auto bottom = rows.back();
  Key hat(rows.begin(), rows.end() - 1);
  std::vector<Key> out;
  out.reserve(static_cast<std::size_t>(bottom) + 1);
  out.push_back(hat);
  for (Shape::Length l = 1; l <= bottom; ++l) {
    Key shifted = hat;
    for (auto& len : shifted) len -= l;
    out.push_back(std::move(shifted));
  }
  return out;
}

BigInt lookup(const MemoTable& memo, const Key& key) {
  if (has_zero(key)) return 0;
  return *memo.find(key);
}

BigInt combine(const Key& rows, const MemoTable& memo) {
  const auto bottom = rows.back();
  const auto kids = children(rows);
  BigInt total = lookup(memo, kids[0]);
  total *= static_cast<unsigned long>(bottom);
  // C(m, k) for m = lambda_r + 1, stepping k from 2 upward.
  const auto m = static_cast<unsigned long>(bottom + 1);
  BigInt binom = m;  // C(m, 1)
  for (Shape::Length l = 1; l <= bottom; ++l) {
    const auto k = static_cast<unsigned long>(l);  // C(m, k) -> C(m, k+1)
    binom *= m - k;
    mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), k + 1);
    mpz_addmul(total.get_mpz_t(), binom.get_mpz_t(),
               lookup(memo, kids[static_cast<std::size_t>(l)]).get_mpz_t());
  }
  return total;
}

}  // namespace

MemoTable::Key MemoTable::normalize(const Shape& s) {
  Key rows = s.rows();
  while (rows.size() > 1 && rows[rows.size() - 1] == 0 &&
         rows[rows.size() - 2] == 0) {
    rows.pop_back();
  }
  return rows;
}

const BigInt* MemoTable::find(const Key& key) const {
  auto it = values_.find(key);
  return it == values_.end() ? nullptr : &it->second;
}

void MemoTable::insert(Key key, BigInt value) {
  values_.insert_or_assign(std::move(key), std::move(value));
}

BigInt beta_row_recursion(const Shape& s) {
  MemoTable memo;
  return beta_row_recursion(s, memo);
}

BigInt beta_row_recursion(const Shape& s, MemoTable& memo) {
  const auto root = MemoTable::normalize(s);
  if (has_zero(root)) return 0;

  struct Frame {
    Key rows;
    bool expanded;
  };
  std::vector<Frame> stack;
  stack.push_back({root, false});
  while (!stack.empty()) {
    Frame frame = std::move(stack.back());
    stack.pop_back();
    if (memo.find(frame.rows) != nullptr) continue;
    if (frame.rows.size() == 1) {
      memo.insert(frame.rows, 1);
      continue;
    }
    if (frame.expanded) {
      auto value = combine(frame.rows, memo);
      memo.insert(std::move(frame.rows), std::move(value));
      continue;
    }
    auto kids = children(frame.rows);
    stack.push_back({frame.rows, true});
    for (auto& kid : kids) {
      if (!has_zero(kid) && memo.find(kid) == nullptr) {
        stack.push_back({std::move(kid), false});
      }
    }
  }
  return *memo.find(root);
}

}  // namespace ferrers
