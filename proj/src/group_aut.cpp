#include "bigrr/group_aut.hpp"

#include <algorithm>

#include "bigrr/errors.hpp"

namespace bigrr {

bool is_automorphism(const FiniteGroup& g, std::span<const Element> image) {
  const int n = g.order();
  if (static_cast<int>(image.size()) != n) return false;
  std::vector<std::uint8_t> hit(static_cast<std::size_t>(n), 0);
  for (Element y : image) {
    if (y < 0 || y >= n || hit[y]) return false;
    hit[y] = 1;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (image[g.mul(a, b)] != g.mul(image[a], image[b])) return false;
  return true;
}

GroupAutomorphism::GroupAutomorphism(const FiniteGroup& g, std::vector<Element> image)
    : image_(std::move(image)) {
  if (!is_automorphism(g, image_))
    fail(ErrorKind::VerificationFailure, "map is not an automorphism of " + g.name());
}

bool GroupAutomorphism::is_identity() const noexcept {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != static_cast<Element>(i)) return false;
  return true;
}

std::vector<Element> GroupAutomorphism::fixed_points() const {
  std::vector<Element> out;
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] == static_cast<Element>(i)) out.push_back(static_cast<Element>(i));
  return out;
}

std::vector<Element> GroupAutomorphism::inverted_points(const FiniteGroup& g) const {
  std::vector<Element> out;
  for (int i = 0; i < degree(); ++i)
    if (image_[i] == g.inv(i)) out.push_back(i);
  return out;
}

bool GroupAutomorphism::preserves(const Subgroup& h) const {
  for (Element x : h.members())
    if (!h.contains(image_[x])) return false;
  return true;
}

std::vector<Element> generating_sequence(const FiniteGroup& g) {
  std::vector<Element> seq;
  std::vector<std::uint8_t> in(static_cast<std::size_t>(g.order()), 0);
  in[0] = 1;
  for (int x = 0; x < g.order(); ++x) {
    if (in[x]) continue;
    seq.push_back(x);
    const Subgroup h = subgroup_generated(g, seq);
    for (Element y : h.members()) in[y] = 1;
  }
  return seq;
}

namespace {

class AutomorphismSearch {
 public:
  AutomorphismSearch(const FiniteGroup& g, const ImageFilter& allowed, const AutomorphismVisitor& visit)
      : g_(g), allowed_(allowed), visit_(visit), gens_(generating_sequence(g)) {}

  void run() {
    map_.assign(static_cast<std::size_t>(g_.order()), -1);
    map_[0] = 0;
    if (allowed_ && !allowed_(0, 0)) return;
    images_.clear();
    descend(0);
  }

 private:
  // Extends the map from <gens_[0..depth)> to <gens_[0..depth]>. Newly
  // assigned elements go to `added` (also on failure, so the caller can undo).
  bool extend(std::size_t depth, std::vector<Element>& added) {
    std::vector<std::uint8_t> used(static_cast<std::size_t>(g_.order()), 0);
    std::vector<Element> queue;
    for (int x = 0; x < g_.order(); ++x)
      if (map_[x] != -1) {
        used[map_[x]] = 1;
        queue.push_back(x);
      }
    // Right-multiplication closure over all generators so far.
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const Element h = queue[i];
      for (std::size_t k = 0; k <= depth; ++k) {
        const Element next = g_.mul(h, gens_[k]);
        const Element value = g_.mul(map_[h], images_[k]);
        if (map_[next] == -1) {
          if (used[value] || (allowed_ && !allowed_(next, value))) return false;
          used[value] = 1;
          map_[next] = value;
          added.push_back(next);
          queue.push_back(next);
        } else if (map_[next] != value) {
          return false;
        }
      }
    }
    return true;
  }

  bool descend(std::size_t depth) {
    if (depth == gens_.size()) return visit_(map_);
    const Element target = gens_[depth];
    for (int c = 0; c < g_.order(); ++c) {
      if (g_.order_of(c) != g_.order_of(target)) continue;
      images_.push_back(c);
      std::vector<Element> added;
      const bool ok = extend(depth, added);
      bool keep_going = true;
      if (ok) keep_going = descend(depth + 1);
      for (Element x : added) map_[x] = -1;
      images_.pop_back();
      if (!keep_going) return false;
    }
    return true;
  }

  const FiniteGroup& g_;
  const ImageFilter& allowed_;
  const AutomorphismVisitor& visit_;
  std::vector<Element> gens_;
  std::vector<Element> images_;
  std::vector<Element> map_;
};

}  // namespace

void for_each_automorphism(const FiniteGroup& g, const ImageFilter& allowed,
                           const AutomorphismVisitor& visit) {
  if (g.order() > kAutomorphismCap)
    fail(ErrorKind::CapExceeded, "automorphism enumeration is capped at order " +
                                     std::to_string(kAutomorphismCap) + " (got " +
                                     std::to_string(g.order()) + ")");
  AutomorphismSearch(g, allowed, visit).run();
}

std::vector<GroupAutomorphism> automorphism_group(const FiniteGroup& g) {
  std::vector<GroupAutomorphism> out;
  for_each_automorphism(g, {}, [&](std::span<const Element> image) {
    out.emplace_back(g, std::vector<Element>(image.begin(), image.end()));
    return true;
  });
  return out;
}

std::optional<GroupAutomorphism> find_half_inverting_automorphism(const FiniteGroup& r,
                                                                  const Subgroup& m) {
  if (m.index() != 2) fail(ErrorKind::InvalidSpec, "subgroup must have index 2");
  const ImageFilter allowed = [&](Element x, Element y) {
    if (m.contains(x)) return m.contains(y);
    return y == x || y == r.inv(x);
  };
  std::optional<GroupAutomorphism> found;
  for_each_automorphism(r, allowed, [&](std::span<const Element> image) {
    for (std::size_t i = 0; i < image.size(); ++i)
      if (image[i] != static_cast<Element>(i)) {
        found.emplace(r, std::vector<Element>(image.begin(), image.end()));
        return false;
      }
    return true;
  });
  return found;
}

int complement_orbit_count(const GroupAutomorphism& phi, const Subgroup& m) {
  if (!phi.preserves(m)) fail(ErrorKind::NotInvariant, "automorphism does not preserve the subgroup");
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(phi.degree()), 0);
  int orbits = 0;
  for (Element x : m.complement()) {
    if (seen[x]) continue;
    ++orbits;
    for (Element y = x; !seen[y]; y = phi(y)) seen[y] = 1;
  }
  return orbits;
}

BigInt invariant_subset_count(const GroupAutomorphism& phi, const Subgroup& m) {
  return BigInt(1) << complement_orbit_count(phi, m);
}

}  // namespace bigrr
