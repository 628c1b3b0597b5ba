#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bigrr/group.hpp"

namespace bigrr {

using BigInt = boost::multiprecision::cpp_int;

/// Largest group order accepted by the automorphism enumerators.
inline constexpr int kAutomorphismCap = 64;

/// A bijection of element ids verified to be a group automorphism.
class GroupAutomorphism {
 public:
  /// Runs the full n^2 homomorphism check; throws VerificationFailure when
  /// `image` is not an automorphism of `g`.
  GroupAutomorphism(const FiniteGroup& g, std::vector<Element> image);

  Element operator()(Element x) const noexcept { return image_[x]; }
  std::span<const Element> image() const noexcept { return image_; }
  int degree() const noexcept { return static_cast<int>(image_.size()); }

  bool is_identity() const noexcept;
  /// C_R(phi) = {g : g^phi = g}.
  std::vector<Element> fixed_points() const;
  /// C_R^-(phi) = {g : g^phi = g^{-1}}.
  std::vector<Element> inverted_points(const FiniteGroup& g) const;
  /// True iff the subgroup is mapped onto itself.
  bool preserves(const Subgroup& h) const;

  friend bool operator==(const GroupAutomorphism& a, const GroupAutomorphism& b) {
    return a.image_ == b.image_;
  }

 private:
  std::vector<Element> image_;
};

/// True iff `image` is a bijective homomorphism of `g` onto itself.
bool is_automorphism(const FiniteGroup& g, std::span<const Element> image);

/// Greedy generating sequence: each entry is the smallest id outside the
/// subgroup generated by the previous ones.
std::vector<Element> generating_sequence(const FiniteGroup& g);

/// `allowed(x, y)` says whether x may be mapped to y. Applied to every element
/// as soon as its image is determined, which prunes the backtracking.
using ImageFilter = std::function<bool(Element, Element)>;
/// Return false to stop the enumeration.
using AutomorphismVisitor = std::function<bool(std::span<const Element>)>;

/// Enumerates the automorphisms accepted by `allowed` (all of them when it is
/// empty) by backtracking over images of generating_sequence(g), candidates in
/// ascending id. Throws CapExceeded when |g| > kAutomorphismCap.
void for_each_automorphism(const FiniteGroup& g, const ImageFilter& allowed,
                           const AutomorphismVisitor& visit);

std::vector<GroupAutomorphism> automorphism_group(const FiniteGroup& g);

/// A non-identity automorphism with x^phi in {x, x^{-1}} for every x outside
/// `m`, or nothing. Exhaustive.
std::optional<GroupAutomorphism> find_half_inverting_automorphism(const FiniteGroup& r,
                                                                  const Subgroup& m);

/// Number of <phi>-orbits on the complement of `m`. Throws NotInvariant unless
/// m^phi = m.
int complement_orbit_count(const GroupAutomorphism& phi, const Subgroup& m);
/// 2^l with l = complement_orbit_count(phi, m).
BigInt invariant_subset_count(const GroupAutomorphism& phi, const Subgroup& m);

}  // namespace bigrr
