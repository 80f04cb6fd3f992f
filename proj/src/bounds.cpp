#include "lporient/bounds.hpp"

#include <stdexcept>

namespace lporient {

HighFloat log2_of(const HighFloat& x) {
  static const HighFloat ln2 = log(HighFloat(2));
  return log(x) / ln2;
}

HighFloat cube_lp_bound_log2(int n, const Rational& c) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (c <= 0) throw std::invalid_argument("c must be positive");
  HighFloat k = HighFloat(2 * n) * (n + 1);
  HighFloat log2_s = log2_of(HighFloat(2 * n)) + n;  // log2(2n * 2^n)
  HighFloat log2_c2n = log2_of(HighFloat(c) * (2 * n));
  return k * (log2_s + log2_c2n);
}

GeneralBound general_lp_bound_log2(long long e, long long f, int d) {
  if (e < 1 || f < 1 || d < 1)
    throw std::invalid_argument("e, f, d must be positive");
  GeneralBound out;
  long long fd1 = f * (d + 1);
  HighFloat binom_term;
  if (fd1 > 2 * e) {
    out.degenerate_binomial = true;
    binom_term = 0;  // choose(2e, f(d+1)) = 0; report log2(1)
  } else {
    BigInt b = binomial(static_cast<unsigned long>(2 * e),
                        static_cast<unsigned long>(fd1));
    binom_term = log2_of(HighFloat(b));
  }
  out.log2_value = binom_term + HighFloat(fd1) * log2_of(HighFloat(f));
  return out;
}

BoundReport bound_report(int n, const Rational& c) {
  BoundReport r;
  r.n = n;
  r.lower_log2 = binomial(static_cast<unsigned long>(n - 1),
                          static_cast<unsigned long>(n / 2));
  r.upper_log2 = cube_lp_bound_log2(n, c);
  r.c = c;
  return r;
}

BoundReport crossover(const Rational& c, int n_cap) {
  for (int n = 1; n <= n_cap; ++n) {
    BoundReport r = bound_report(n, c);
    if (HighFloat(r.lower_log2) > r.upper_log2) return r;
  }
  throw CapExceededError("no crossover up to n = " + std::to_string(n_cap));
}

}  // namespace lporient
