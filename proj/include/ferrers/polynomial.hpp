#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "ferrers/bigint.hpp"

namespace ferrers {

struct Monomial {
  std::uint32_t x = 0;
  std::uint32_t y = 0;
  std::uint32_t z = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Exact polynomial in x, y, z with integer coefficients. Zero
// coefficients are never stored, so equality is structural.
class TrivariatePolynomial {
 public:
  TrivariatePolynomial() = default;
  TrivariatePolynomial(long constant);  // NOLINT: integers promote naturally

  static TrivariatePolynomial term(BigInt coefficient, Monomial m);
  static TrivariatePolynomial x() { return term(1, {1, 0, 0}); }
  static TrivariatePolynomial y() { return term(1, {0, 1, 0}); }
  static TrivariatePolynomial z() { return term(1, {0, 0, 1}); }

  const std::map<Monomial, BigInt>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  BigInt coefficient(Monomial m) const;

  TrivariatePolynomial& operator+=(const TrivariatePolynomial& other);
  TrivariatePolynomial& operator-=(const TrivariatePolynomial& other);
  TrivariatePolynomial& operator*=(const TrivariatePolynomial& other);
  friend TrivariatePolynomial operator+(TrivariatePolynomial a,
                                        const TrivariatePolynomial& b) {
    return a += b;
  }
  friend TrivariatePolynomial operator-(TrivariatePolynomial a,
                                        const TrivariatePolynomial& b) {
    return a -= b;
  }
  friend TrivariatePolynomial operator*(const TrivariatePolynomial& a,
                                        const TrivariatePolynomial& b) {
    TrivariatePolynomial out = a;
    return out *= b;
  }
  friend bool operator==(const TrivariatePolynomial&,
                         const TrivariatePolynomial&) = default;

  BigInt evaluate(const BigInt& x, const BigInt& y, const BigInt& z) const;

  // Fixes y to a value, leaving a polynomial in x and z.
  TrivariatePolynomial substitute_y(const BigInt& y) const;

  // e.g. "x^2 + x*y + z"; terms in descending monomial order.
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const BigInt& c);

  std::map<Monomial, BigInt> terms_;
};

}  // namespace ferrers
