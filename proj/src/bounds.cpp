#include "bigrr/bounds.hpp"

#include <cmath>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "bigrr/errors.hpp"

namespace bigrr {

namespace {

using Float = boost::multiprecision::cpp_bin_float_100;

// sign(n/8 - log2(5) - log2(n) log2(n/2)), the sign of the bound.
int exponent_sign(long long n) {
  const long double x = static_cast<long double>(n);
  const long double d = x / 8 - std::log2(5.0L) - std::log2(x) * std::log2(x / 2);
  if (std::fabs(d) > 1e-9L) return d > 0 ? 1 : -1;
  const Float fx(n);
  const Float ln2 = log(Float(2));
  const Float fd = fx / 8 - log(Float(5)) / ln2 - (log(fx) / ln2) * (log(fx / 2) / ln2);
  return fd > 0 ? 1 : (fd < 0 ? -1 : 0);
}

int exact_log2(long long n) {
  if (n <= 0 || (n & (n - 1)) != 0) return -1;
  int k = 0;
  while ((1LL << k) < n) ++k;
  return k;
}

}  // namespace

BoundValue drr_lower_bound(long long n) {
  if (n < 2 || n % 2 != 0) fail(ErrorKind::InvalidSpec, "bound needs an even order n >= 2");
  BoundValue b;
  b.n = n;
  b.sign = exponent_sign(n);
  const int k = exact_log2(n);
  if (k >= 3) {
    const long long e = 3 * n / 8 + static_cast<long long>(k) * (k - 1);
    if (n / 2 <= kExactBoundMaxExponent && e <= kExactBoundMaxExponent) {
      b.exact_value = (BigInt(1) << static_cast<unsigned>(n / 2)) - (BigInt(5) << static_cast<unsigned>(e));
      const int s = b.exact_value->sign();
      if (s != b.sign) fail(ErrorKind::VerificationFailure, "bound sign disagrees with its exact value");
    }
  }
  return b;
}

long long bound_crossover(long long horizon) {
  if (horizon % 2 != 0) --horizon;
  if (horizon < 2 || exponent_sign(horizon) <= 0) return horizon + 2;
  long long n = horizon;
  while (n - 2 >= 2 && exponent_sign(n - 2) > 0) n -= 2;
  return n;
}

}  // namespace bigrr
