#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bigrr {

/// Simple digraph on vertices [0, n): sorted out- and in-neighbour lists plus
/// a bit matrix for constant-time arc queries.
class Digraph {
 public:
  Digraph() = default;
  /// `out[v]` lists the heads of arcs leaving v; duplicates are dropped.
  explicit Digraph(std::vector<std::vector<int>> out);
  static Digraph from_arcs(int n, std::span<const std::pair<int, int>> arcs);

  int size() const noexcept { return n_; }
  std::span<const int> out(int v) const noexcept { return out_[v]; }
  std::span<const int> in(int v) const noexcept { return in_[v]; }
  bool has_arc(int u, int v) const noexcept {
    return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1U;
  }
  long long arc_count() const noexcept { return arcs_; }

  /// True iff every arc has its reverse.
  bool is_symmetric() const;
  /// True iff `perm` (a vertex bijection) maps arcs onto arcs.
  bool is_automorphism(std::span<const int> perm) const;

  /// One line per vertex, `v: h1 h2 ...`.
  std::string to_adjacency_text() const;

 private:
  int n_ = 0;
  int words_ = 0;
  long long arcs_ = 0;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
  std::vector<std::uint64_t> bits_;
};

}  // namespace bigrr
