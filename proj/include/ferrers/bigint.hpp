#pragma once

#include <gmpxx.h>

#include <string>

namespace ferrers {

using BigInt = mpz_class;
using ExactRational = mpq_class;

inline std::string to_decimal(const BigInt& value) { return value.get_str(10); }

// Exact conversion; throws NonIntegerResult when the denominator is not 1.
BigInt to_integer(const ExactRational& value);

BigInt factorial(unsigned long n);

BigInt power(unsigned long base, unsigned long exponent);

}  // namespace ferrers
