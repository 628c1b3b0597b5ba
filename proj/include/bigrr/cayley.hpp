#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bigrr/digraph.hpp"
#include "bigrr/group.hpp"

namespace bigrr {

/// A subset S of R \ M, kept as a sorted element list and a membership mask.
class ConnectionSet {
 public:
  /// Throws InvalidSpec if an element is out of range or lies in `m`.
  ConnectionSet(const FiniteGroup& r, const Subgroup& m, std::vector<Element> elements);

  std::span<const Element> elements() const noexcept { return elements_; }
  int size() const noexcept { return static_cast<int>(elements_.size()); }
  bool contains(Element g) const noexcept { return mask_[g] != 0; }

  friend bool operator==(const ConnectionSet& a, const ConnectionSet& b) {
    return a.elements_ == b.elements_;
  }

 private:
  std::vector<Element> elements_;
  std::vector<std::uint8_t> mask_;
};

/// Cay(R, S) with the two-colouring 0 on M, 1 on R \ M.
struct CayleyDigraph {
  Digraph graph;
  std::vector<int> parts;
};

/// Arc (g, h) iff g h^{-1} in S, so out(g) = { s^{-1} g : s in S }.
CayleyDigraph build_cayley_digraph(const FiniteGroup& r, const Subgroup& m, const ConnectionSet& s);
Digraph cayley_digraph(const FiniteGroup& r, std::span<const Element> s);

/// <S> = R, i.e. the underlying graph of Cay(R, S) is connected.
bool generates_whole_group(const FiniteGroup& r, std::span<const Element> s);
bool is_inverse_closed(const FiniteGroup& r, std::span<const Element> s);

}  // namespace bigrr
