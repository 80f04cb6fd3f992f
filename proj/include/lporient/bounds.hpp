#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include "lporient/numeric.hpp"

namespace lporient {

/// Working precision for bound arithmetic: 50 decimal digits (~166 bits).
/// Results are commentary on bounds, not certificates; all comparisons the
/// acceptance gate makes clear their margins by far more than one ulp.
using HighFloat =
    boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<50>>;

HighFloat log2_of(const HighFloat& x);

/// Exponent of the upper bound on LP-orientations of the n-cube:
/// log2( choose(s, k) majorized by s^k, times (c*2n)^k ) with s = 2n*2^n
/// polynomials of degree <= 2n and k = 2n(n+1) parameters, i.e.
/// k*log2(2n*2^n) + k*log2(c*2n). The O(.) constant is the explicit
/// parameter c.
HighFloat cube_lp_bound_log2(int n, const Rational& c);

/// Exponent of the general bound for a d-polytope with e edges and f facets:
/// log2(choose(2e, f(d+1))) + f(d+1)*log2(f). The binomial is exact; when
/// f(d+1) > 2e it vanishes and is reported as 0 with a flag.
struct GeneralBound {
  HighFloat log2_value;
  bool degenerate_binomial = false;
};

GeneralBound general_lp_bound_log2(long long e, long long f, int d);

struct BoundReport {
  int n = 0;
  BigInt lower_log2;      // family exponent choose(n-1, floor(n/2)), exact
  HighFloat upper_log2;   // cube bound exponent
  Rational c;
};

BoundReport bound_report(int n, const Rational& c);

class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Least n at which the family exponent exceeds the bound exponent. Scans
/// upward to n_cap and throws CapExceededError if no crossing appears.
BoundReport crossover(const Rational& c, int n_cap = 10000);

}  // namespace lporient
