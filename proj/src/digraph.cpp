#include "bigrr/digraph.hpp"

#include <algorithm>
#include <sstream>

#include "bigrr/errors.hpp"

namespace bigrr {

Digraph::Digraph(std::vector<std::vector<int>> out)
    : n_(static_cast<int>(out.size())), words_((n_ + 63) / 64), out_(std::move(out)) {
  in_.resize(out_.size());
  bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
  for (int u = 0; u < n_; ++u) {
    auto& row = out_[u];
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    for (int v : row) {
      if (v < 0 || v >= n_) fail(ErrorKind::ValidationError, "arc head out of range");
      in_[v].push_back(u);
      bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    }
    arcs_ += static_cast<long long>(row.size());
  }
}

Digraph Digraph::from_arcs(int n, std::span<const std::pair<int, int>> arcs) {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
  for (auto [u, v] : arcs) {
    if (u < 0 || u >= n) fail(ErrorKind::ValidationError, "arc tail out of range");
    out[u].push_back(v);
  }
  return Digraph(std::move(out));
}

bool Digraph::is_symmetric() const {
  for (int u = 0; u < n_; ++u)
    for (int v : out_[u])
      if (!has_arc(v, u)) return false;
  return true;
}

bool Digraph::is_automorphism(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) return false;
  std::vector<std::uint8_t> hit(static_cast<std::size_t>(n_), 0);
  for (int v : perm) {
    if (v < 0 || v >= n_ || hit[v]) return false;
    hit[v] = 1;
  }
  for (int u = 0; u < n_; ++u)
    for (int v : out_[u])
      if (!has_arc(perm[u], perm[v])) return false;
  return true;
}

std::string Digraph::to_adjacency_text() const {
  std::ostringstream out;
  for (int u = 0; u < n_; ++u) {
    out << u << ":";
    for (int v : out_[u]) out << " " << v;
    out << "\n";
  }
  return out.str();
}

}  // namespace bigrr
