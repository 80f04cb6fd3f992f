#include "lporient/numeric.hpp"

#include <stdexcept>

namespace lporient {

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  if (k > n) return 0;
  mpz_bin_uiui(r.backend().data(), n, k);
  return r;
}

BigInt double_factorial_odd(int d) {
  if (d < 0) throw std::invalid_argument("negative argument");
  BigInt r = 1;
  for (int j = 1; j <= 2 * d - 1; j += 2) r *= j;
  return r;
}

}  // namespace lporient
