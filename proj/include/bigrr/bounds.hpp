#pragma once

#include <optional>

#include "bigrr/group_aut.hpp"

namespace bigrr {

/// 2^{n/2} - 5 * 2^{3n/8 + log2(n) log2(n/2)}, the lower bound on the number
/// of bipartite DRR connection sets when M is abelian of index 2 in a group of
/// order n.
struct BoundValue {
  long long n = 0;
  int sign = 0;  // -1, 0 or +1
  /// Present when the exponent is an integer (n a power of two, n >= 8) and
  /// small enough to expand.
  std::optional<BigInt> exact_value;
};

inline constexpr long long kExactBoundMaxExponent = 1 << 16;
inline constexpr long long kCrossoverHorizon = 1000000;

/// Throws InvalidSpec unless n >= 2 is even.
BoundValue drr_lower_bound(long long n);

/// Smallest even n with drr_lower_bound(m).sign > 0 for every even m in
/// [n, horizon].
long long bound_crossover(long long horizon = kCrossoverHorizon);

}  // namespace bigrr
