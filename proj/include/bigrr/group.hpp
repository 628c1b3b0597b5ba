#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bigrr {

/// Element ids run over [0, order) and id 0 is always the identity.
using Element = int;

/// A finite group given by its full multiplication table.
///
/// Construction validates the table: identity at id 0, every row and column a
/// permutation, and associativity (every triple up to kFullAssociativityCheck
/// elements, kSampledTriples pseudo-random triples above that). Instances are
/// immutable afterwards.
class FiniteGroup {
 public:
  static constexpr int kMaxOrder = 4096;
  static constexpr int kFullAssociativityCheck = 256;
  static constexpr int kSampledTriples = 10000;

  /// `table` is row-major: table[i * order + j] = i * j. `generators` is the
  /// standard generating sequence of the constructor that produced the
  /// table, if any; words in textual specs refer to it as a, b, c, ...
  FiniteGroup(int order, std::vector<Element> table, std::string name = {},
              std::vector<Element> generators = {});

  int order() const noexcept { return order_; }

  Element mul(Element a, Element b) const noexcept {
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }
  Element inv(Element a) const noexcept { return inverse_[a]; }
  Element pow(Element a, long long k) const;
  /// g^x = x^{-1} g x.
  Element conj(Element g, Element x) const noexcept { return mul(mul(inv(x), g), x); }
  /// [g, h] = g^{-1} h^{-1} g h.
  Element commutator(Element g, Element h) const noexcept {
    return mul(mul(inv(g), inv(h)), mul(g, h));
  }
  int order_of(Element g) const noexcept { return orders_[g]; }

  bool is_abelian() const;

  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  std::span<const Element> generators() const noexcept { return generators_; }

 private:
  int order_;
  std::vector<std::uint16_t> table_;
  std::vector<std::uint16_t> inverse_;
  std::vector<int> orders_;
  std::string name_;
  std::vector<Element> generators_;
};

/// A subgroup of some parent group, stored as its sorted member list plus a
/// membership mask over the parent's element ids. It does not keep a
/// reference to the parent; callers pass the parent alongside.
class Subgroup {
 public:
  /// Validates that `members` contains the identity and is closed under the
  /// parent's multiplication; throws ValidationError otherwise.
  Subgroup(const FiniteGroup& parent, std::vector<Element> members);

  std::span<const Element> members() const noexcept { return members_; }
  int order() const noexcept { return static_cast<int>(members_.size()); }
  int parent_order() const noexcept { return static_cast<int>(mask_.size()); }
  int index() const noexcept { return parent_order() / order(); }
  bool contains(Element g) const noexcept { return mask_[g] != 0; }

  /// Parent elements outside the subgroup, ascending.
  std::vector<Element> complement() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.members_ == b.members_;
  }
  friend bool operator<(const Subgroup& a, const Subgroup& b) {
    return a.members_ < b.members_;
  }

 private:
  std::vector<Element> members_;
  std::vector<std::uint8_t> mask_;
};

/// Parses the text or JSON Cayley-table format. JSON is selected when
/// `json` is true (the CLI decides by file extension).
FiniteGroup parse_cayley_table(std::string_view text, bool json = false);
FiniteGroup load_cayley_table(const std::string& path);
/// Text form accepted by parse_cayley_table.
std::string format_cayley_table(const FiniteGroup& g);

int element_order(const FiniteGroup& g, Element x);
Subgroup whole_group(const FiniteGroup& g);
Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup center(const FiniteGroup& g);
Subgroup derived_subgroup(const FiniteGroup& g);
Subgroup subgroup_generated(const FiniteGroup& g, std::span<const Element> gens);
/// Centre of the subgroup `h` viewed as a group in its own right.
Subgroup center_of(const FiniteGroup& g, const Subgroup& h);
/// Commutator subgroup of `h`.
Subgroup derived_subgroup_of(const FiniteGroup& g, const Subgroup& h);
bool is_abelian(const FiniteGroup& g, const Subgroup& h);

/// Index-2 subgroups, sorted by member list. They are the preimages of the
/// hyperplanes of g / <commutators, squares>.
std::vector<Subgroup> index2_subgroups(const FiniteGroup& g);
/// Index-2 subgroups of `h` (as subgroups of the parent), sorted.
std::vector<Subgroup> index2_subgroups_of(const FiniteGroup& g, const Subgroup& h);

/// True iff `m` is abelian and some involution outside `m` inverts every
/// element of `m`. Requires |g : m| = 2.
bool is_generalized_dihedral_on(const FiniteGroup& g, const Subgroup& m);

/// Extends gens[i] -> images[i] to a homomorphism src -> dst, checking the
/// relation on every edge h -> h * gens[i] of the Cayley graph of src.
/// Returns an empty vector when the assignment does not extend. `gens` must
/// generate src.
std::vector<Element> extend_homomorphism(const FiniteGroup& src, std::span<const Element> gens,
                                         std::span<const Element> images, const FiniteGroup& dst);

/// Relabels `h` as a standalone group. The second member maps the new ids
/// back to parent ids (embedding[0] = 0).
std::pair<FiniteGroup, std::vector<Element>> subgroup_as_group(const FiniteGroup& g,
                                                               const Subgroup& h);

}  // namespace bigrr
