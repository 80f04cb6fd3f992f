#pragma once

#include <boost/multiprecision/gmp.hpp>

namespace lporient {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Exact binomial coefficient; choose(n, k) = 0 for k > n, choose(0, 0) = 1.
BigInt binomial(unsigned long n, unsigned long k);

/// (2d - 1)!! = number of perfect matchings of a 2d-element set.
BigInt double_factorial_odd(int d);

}  // namespace lporient
