#include "bigrr/obstruction.hpp"

#include "bigrr/errors.hpp"

namespace bigrr {

namespace {

void require_index2(const Subgroup& m) {
  if (m.index() != 2) fail(ErrorKind::InvalidSpec, "subgroup must have index 2");
}

bool inverts(const FiniteGroup& r, Element a, const Subgroup& z) {
  for (Element x : z.members())
    if (r.conj(x, a) != r.inv(x)) return false;
  return true;
}

bool is_central(const FiniteGroup& r, Element x) {
  for (int y = 0; y < r.order(); ++y)
    if (r.mul(x, y) != r.mul(y, x)) return false;
  return true;
}

bool is_subset(const Subgroup& small, const Subgroup& big) {
  for (Element x : small.members())
    if (!big.contains(x)) return false;
  return true;
}

// The Cond2 clauses for a given (Z, a).
bool cond2_holds(const FiniteGroup& r, const Subgroup& m, const Subgroup& z, Element a) {
  if (m.contains(a)) return false;
  const Element a2 = r.mul(a, a);
  return a2 != 0 && z.contains(a2) && is_central(r, a2) && inverts(r, a, z);
}

// The Cond3 clauses for a given a, except the o(am) != 2 one.
bool cond3_holds(const FiniteGroup& r, const Subgroup& m, const Subgroup& zm, const Subgroup& derived,
                 Element a) {
  if (m.contains(a) || r.order_of(a) != 4) return false;
  const Element a2 = r.mul(a, a);
  return derived == subgroup_generated(r, std::vector<Element>{a2}) && inverts(r, a, zm);
}

std::optional<Element> cond3_m(const FiniteGroup& r, const Subgroup& m, const Subgroup& zm, Element a) {
  for (Element x : m.members())
    if (!zm.contains(x) && r.order_of(r.mul(a, x)) != 2) return x;
  return std::nullopt;
}

GroupAutomorphism verified(const FiniteGroup& r, const Subgroup& m, std::vector<Element> image,
                           const char* what) {
  GroupAutomorphism phi(r, std::move(image));
  if (phi.is_identity()) fail(ErrorKind::VerificationFailure, std::string(what) + " map is the identity");
  if (!fixes_or_inverts_complement(r, m, phi))
    fail(ErrorKind::VerificationFailure, std::string(what) + " map moves an element outside M");
  return phi;
}

}  // namespace

std::string_view to_string(Condition c) {
  switch (c) {
    case Condition::None: return "none";
    case Condition::Cond1: return "cond1";
    case Condition::Cond2: return "cond2";
    case Condition::Cond3: return "cond3";
  }
  return "?";
}

bool fixes_or_inverts_complement(const FiniteGroup& r, const Subgroup& m,
                                 const GroupAutomorphism& phi) {
  for (Element x : m.complement())
    if (phi(x) != x && phi(x) != r.inv(x)) return false;
  return true;
}

bool check_condition_1(const FiniteGroup& r, const Subgroup& m) {
  require_index2(m);
  return is_abelian(r, m) && !is_generalized_dihedral_on(r, m);
}

std::optional<ObstructionWitness> check_condition_2(const FiniteGroup& r, const Subgroup& m) {
  require_index2(m);
  const auto outside = m.complement();
  for (const Subgroup& z : index2_subgroups_of(r, m)) {
    if (!is_abelian(r, z)) continue;
    for (Element a : outside) {
      if (!cond2_holds(r, m, z, a)) continue;
      ObstructionWitness w;
      w.condition = Condition::Cond2;
      w.a = a;
      for (Element x : m.members())
        if (!z.contains(x)) {
          w.m = x;
          break;
        }
      w.z = z;
      return w;
    }
  }
  return std::nullopt;
}

std::optional<ObstructionWitness> check_condition_3(const FiniteGroup& r, const Subgroup& m) {
  require_index2(m);
  const Subgroup zm = center_of(r, m);
  if (m.order() != 4 * zm.order()) return std::nullopt;
  const Subgroup derived = derived_subgroup_of(r, m);
  for (Element a : m.complement()) {
    if (!cond3_holds(r, m, zm, derived, a)) continue;
    const auto x = cond3_m(r, m, zm, a);
    if (!x) continue;
    ObstructionWitness w;
    w.condition = Condition::Cond3;
    w.z = zm;
    w.a = a;
    w.m = *x;
    return w;
  }
  return std::nullopt;
}

ObstructionWitness obstruction_status(const FiniteGroup& r, const Subgroup& m) {
  const bool c1 = check_condition_1(r, m);
  auto c2 = check_condition_2(r, m);
  auto c3 = check_condition_3(r, m);
  ObstructionWitness w;
  if (c1) {
    w.condition = Condition::Cond1;
    w.a = m.complement().front();
  } else if (c2) {
    w = *c2;
  } else if (c3) {
    w = *c3;
  }
  if (c1) w.also_holding.push_back(Condition::Cond1);
  if (c2) w.also_holding.push_back(Condition::Cond2);
  if (c3) w.also_holding.push_back(Condition::Cond3);
  return w;
}

GroupAutomorphism build_automorphism_cond1(const FiniteGroup& r, const Subgroup& m) {
  require_index2(m);
  if (!is_abelian(r, m)) fail(ErrorKind::ConditionNotMet, "M is not abelian");
  const Element a = m.complement().front();
  std::vector<Element> image(static_cast<std::size_t>(r.order()));
  for (int x = 0; x < r.order(); ++x)
    image[x] = m.contains(x) ? r.conj(r.inv(x), a) : r.inv(x);
  bool identity = true;
  for (int x = 0; x < r.order(); ++x)
    if (image[x] != x) identity = false;
  if (identity) fail(ErrorKind::IdentityResult, "R is generalized dihedral on M; the map is the identity");
  if (!check_condition_1(r, m)) fail(ErrorKind::ConditionNotMet, "condition 1 does not hold");
  return verified(r, m, std::move(image), "cond1");
}

GroupAutomorphism build_automorphism_cond2(const FiniteGroup& r, const Subgroup& m,
                                           const ObstructionWitness& w) {
  require_index2(m);
  if (!w.z || !w.a || !w.m) fail(ErrorKind::ConditionNotMet, "cond2 witness needs Z, a and m");
  const Subgroup& z = *w.z;
  const Element a = *w.a, mm = *w.m;
  if (z.order() * 2 != m.order() || !is_subset(z, m) || !is_abelian(r, z))
    fail(ErrorKind::ConditionNotMet, "Z is not an abelian index-2 subgroup of M");
  if (!cond2_holds(r, m, z, a)) fail(ErrorKind::ConditionNotMet, "a does not satisfy condition 2");
  if (!m.contains(mm) || z.contains(mm)) fail(ErrorKind::ConditionNotMet, "m must lie in M \\ Z");

  const Element a2 = r.mul(a, a);
  const Element am = r.mul(a, mm);
  std::vector<Element> image(static_cast<std::size_t>(r.order()), -1);
  for (Element x : z.members()) {
    image[x] = x;
    image[r.mul(x, am)] = r.mul(x, am);
    const Element xa = r.mul(x, a);
    image[xa] = r.inv(xa);
    const Element xm = r.mul(x, mm);
    image[xm] = r.mul(a2, xm);
  }
  for (Element y : image)
    if (y == -1) fail(ErrorKind::VerificationFailure, "cond2 cosets do not cover R");
  return verified(r, m, std::move(image), "cond2");
}

GroupAutomorphism build_automorphism_cond3(const FiniteGroup& r, const Subgroup& m,
                                           const ObstructionWitness& w) {
  require_index2(m);
  if (!w.a) fail(ErrorKind::ConditionNotMet, "cond3 witness needs a");
  const Element a = *w.a;
  const Subgroup zm = center_of(r, m);
  if (m.order() != 4 * zm.order()) fail(ErrorKind::ConditionNotMet, "|M : Z(M)| is not 4");
  if (!cond3_holds(r, m, zm, derived_subgroup_of(r, m), a))
    fail(ErrorKind::ConditionNotMet, "a does not satisfy condition 3");
  if (w.m ? (!m.contains(*w.m) || zm.contains(*w.m) || r.order_of(r.mul(a, *w.m)) == 2)
          : !cond3_m(r, m, zm, a))
    fail(ErrorKind::ConditionNotMet, "no m in M \\ Z(M) with o(am) != 2");

  const Element ainv = r.inv(a);
  std::vector<std::uint8_t> in_za(static_cast<std::size_t>(r.order()), 0);
  for (Element x : zm.members()) in_za[r.mul(x, a)] = 1;
  std::vector<Element> image(static_cast<std::size_t>(r.order()));
  for (int x = 0; x < r.order(); ++x) {
    if (zm.contains(x) || in_za[x])
      image[x] = x;
    else if (m.contains(x))
      image[x] = r.mul(r.mul(ainv, r.inv(x)), ainv);
    else
      image[x] = r.inv(x);
  }
  return verified(r, m, std::move(image), "cond3");
}

GroupAutomorphism build_obstruction_automorphism(const FiniteGroup& r, const Subgroup& m,
                                                 const ObstructionWitness& w) {
  switch (w.condition) {
    case Condition::Cond1: return build_automorphism_cond1(r, m);
    case Condition::Cond2: return build_automorphism_cond2(r, m, w);
    case Condition::Cond3: return build_automorphism_cond3(r, m, w);
    case Condition::None: break;
  }
  fail(ErrorKind::ConditionNotMet, "no obstruction condition holds");
}

bool obstruction_agrees_with_search(const FiniteGroup& r, const Subgroup& m) {
  const bool obstructed = obstruction_status(r, m).condition != Condition::None;
  return obstructed == find_half_inverting_automorphism(r, m).has_value();
}

}  // namespace bigrr
