#include "ferrers/bigint.hpp"

#include "ferrers/errors.hpp"

namespace ferrers {

BigInt to_integer(const ExactRational& value) {
  ExactRational reduced = value;
  reduced.canonicalize();
  if (reduced.get_den() != 1) {
    throw NonIntegerResult("expected an integer, got " + reduced.get_str());
  }
  return reduced.get_num();
}

BigInt factorial(unsigned long n) {
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

// 0^0 = 1, which is also GMP's convention.
BigInt power(unsigned long base, unsigned long exponent) {
  BigInt result;
  mpz_ui_pow_ui(result.get_mpz_t(), base, exponent);
  return result;
}

}  // namespace ferrers
