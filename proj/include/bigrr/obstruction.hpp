#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "bigrr/group.hpp"
#include "bigrr/group_aut.hpp"

namespace bigrr {

/// The three sufficient conditions for a non-identity automorphism that fixes
/// or inverts every element outside M.
///
///   Cond1: M is abelian and R is not generalized dihedral on M.
///   Cond2: M has an abelian subgroup Z of index 2 and some a outside M has
///          a^2 != 1, a^2 in Z and central in R, and inverts Z.
///   Cond3: |M : Z(M)| = 4 and some a outside M of order 4 has
///          [M, M] = <a^2>, inverts Z(M), and o(am) != 2 for some m in M \ Z(M).
enum class Condition { None, Cond1, Cond2, Cond3 };

std::string_view to_string(Condition c);

struct ObstructionWitness {
  Condition condition = Condition::None;
  std::optional<Subgroup> z;
  std::optional<Element> a;
  std::optional<Element> m;
  /// Every condition that holds, in order; the first is `condition`.
  std::vector<Condition> also_holding;
};

bool check_condition_1(const FiniteGroup& r, const Subgroup& m);
/// Scans abelian index-2 subgroups Z of M (by member list) and a outside M
/// (ascending id); m in the witness is the smallest id in M \ Z.
std::optional<ObstructionWitness> check_condition_2(const FiniteGroup& r, const Subgroup& m);
/// Scans a outside M of order 4 (ascending id); m is the smallest id of
/// M \ Z(M) with o(am) != 2.
std::optional<ObstructionWitness> check_condition_3(const FiniteGroup& r, const Subgroup& m);

/// First condition that holds, in the order 1, 2, 3.
ObstructionWitness obstruction_status(const FiniteGroup& r, const Subgroup& m);

/// phi(x) = a^{-1} x^{-1} a on M and x^{-1} outside M, where a is the smallest
/// id outside M. Throws ConditionNotMet unless Cond1 holds and IdentityResult
/// when phi is the identity.
GroupAutomorphism build_automorphism_cond1(const FiniteGroup& r, const Subgroup& m);
/// Identity on Z and Zam, inversion on Za, x -> a^2 x on Zm.
GroupAutomorphism build_automorphism_cond2(const FiniteGroup& r, const Subgroup& m,
                                           const ObstructionWitness& w);
/// x -> a^{-1} x^{-1} a^{-1} on M \ Z(M), identity on Z(M) and Z(M)a,
/// inversion on the rest of R \ M.
GroupAutomorphism build_automorphism_cond3(const FiniteGroup& r, const Subgroup& m,
                                           const ObstructionWitness& w);
/// Dispatches on w.condition.
GroupAutomorphism build_obstruction_automorphism(const FiniteGroup& r, const Subgroup& m,
                                                 const ObstructionWitness& w);

/// True iff obstruction_status is not None exactly when
/// find_half_inverting_automorphism finds a map.
bool obstruction_agrees_with_search(const FiniteGroup& r, const Subgroup& m);

/// True iff x^phi is x or x^{-1} for every x outside `m`.
bool fixes_or_inverts_complement(const FiniteGroup& r, const Subgroup& m,
                                 const GroupAutomorphism& phi);

}  // namespace bigrr
