#include "bigrr/cayley.hpp"

#include <algorithm>

#include "bigrr/errors.hpp"

namespace bigrr {

ConnectionSet::ConnectionSet(const FiniteGroup& r, const Subgroup& m, std::vector<Element> elements)
    : elements_(std::move(elements)), mask_(static_cast<std::size_t>(r.order()), 0) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  for (Element s : elements_) {
    if (s < 0 || s >= r.order()) fail(ErrorKind::InvalidSpec, "connection set element out of range");
    if (m.contains(s))
      fail(ErrorKind::InvalidSpec, "connection set element " + std::to_string(s) + " lies in M");
    mask_[s] = 1;
  }
}

Digraph cayley_digraph(const FiniteGroup& r, std::span<const Element> s) {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(r.order()));
  for (int g = 0; g < r.order(); ++g) {
    out[g].reserve(s.size());
    for (Element x : s) out[g].push_back(r.mul(r.inv(x), g));
  }
  return Digraph(std::move(out));
}

CayleyDigraph build_cayley_digraph(const FiniteGroup& r, const Subgroup& m, const ConnectionSet& s) {
  CayleyDigraph c{cayley_digraph(r, s.elements()), std::vector<int>(static_cast<std::size_t>(r.order()))};
  for (int g = 0; g < r.order(); ++g) c.parts[g] = m.contains(g) ? 0 : 1;
  return c;
}

bool generates_whole_group(const FiniteGroup& r, std::span<const Element> s) {
  return subgroup_generated(r, s).order() == r.order();
}

bool is_inverse_closed(const FiniteGroup& r, std::span<const Element> s) {
  std::vector<std::uint8_t> in(static_cast<std::size_t>(r.order()), 0);
  for (Element x : s) in[x] = 1;
  for (Element x : s)
    if (!in[r.inv(x)]) return false;
  return true;
}

}  // namespace bigrr
