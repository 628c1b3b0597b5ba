#pragma once

#include <optional>
#include <vector>

#include "bigrr/cayley.hpp"
#include "bigrr/digraph.hpp"
#include "bigrr/group_aut.hpp"

namespace bigrr {

/// Largest digraph accepted by the automorphism search.
inline constexpr int kGraphAutCap = 128;

/// Ordered list of disjoint non-empty cells covering [0, n).
struct OrderedPartition {
  std::vector<std::vector<int>> cells;

  static OrderedPartition unit(int n);
  bool is_discrete(int n) const noexcept { return static_cast<int>(cells.size()) == n; }
  friend bool operator==(const OrderedPartition&, const OrderedPartition&) = default;
};

/// Coarsest equitable refinement of `p`. Cells split in place; fragments are
/// ordered by their (out-count, in-count) against the splitting cell.
OrderedPartition color_refine(const Digraph& g, const OrderedPartition& p);

struct AutReport {
  BigInt group_order = 0;       // 0 when not computed
  BigInt stabilizer_order = 1;  // |Aut_v|
  /// Some non-identity automorphism fixing v, when one exists.
  std::optional<std::vector<int>> witness;
};

/// |Aut_v| by individualization-refinement. Throws SizeExceeded past
/// kGraphAutCap vertices.
AutReport stabilizer_order(const Digraph& g, int v);
AutReport stabilizer_order(const CayleyDigraph& g, int v);

/// |v^Aut| * |Aut_v| for v = 0; fills both orders.
AutReport automorphism_report(const Digraph& g);
BigInt automorphism_group_order(const Digraph& g);
BigInt automorphism_group_order(const CayleyDigraph& g);

/// True iff Aut_v is trivial; stops at the first non-identity automorphism.
bool has_trivial_stabilizer(const Digraph& g, int v);

/// True iff Cay(R, S) is a DRR, i.e. the stabilizer of the identity vertex is
/// trivial.
bool is_regular_representation(const FiniteGroup& r, const Subgroup& m, const ConnectionSet& s);

}  // namespace bigrr
