#include "bigrr/graph_aut.hpp"

#include <algorithm>
#include <numeric>

#include "bigrr/errors.hpp"

namespace bigrr {

namespace {

// Cells are identified by their start offset in `elems`.
struct Part {
  std::vector<int> elems;
  std::vector<int> cell_of;   // vertex -> start of its cell
  std::vector<int> cell_end;  // start -> one past its end, -1 off starts
  int cells = 0;

  int size() const noexcept { return static_cast<int>(elems.size()); }
  bool discrete() const noexcept { return cells == size(); }
};

Part to_part(const OrderedPartition& p, int n) {
  Part q;
  q.cell_of.assign(static_cast<std::size_t>(n), -1);
  q.cell_end.assign(static_cast<std::size_t>(n), -1);
  for (const auto& cell : p.cells) {
    if (cell.empty()) fail(ErrorKind::ValidationError, "partition has an empty cell");
    const int start = q.size();
    for (int v : cell) {
      if (v < 0 || v >= n || q.cell_of[v] != -1)
        fail(ErrorKind::ValidationError, "partition cells must be disjoint vertex sets");
      q.cell_of[v] = start;
      q.elems.push_back(v);
    }
    q.cell_end[start] = q.size();
    ++q.cells;
  }
  if (q.size() != n) fail(ErrorKind::ValidationError, "partition does not cover every vertex");
  return q;
}

OrderedPartition from_part(const Part& q) {
  OrderedPartition p;
  for (int s = 0; s < q.size(); s = q.cell_end[s])
    p.cells.emplace_back(q.elems.begin() + s, q.elems.begin() + q.cell_end[s]);
  return p;
}

// Splitter-queue refinement. Each queued cell W splits every cell by the
// pair (arcs into W, arcs from W); fragments are ordered by that pair. A
// cell that was not queued requeues all fragments but its first largest one.
class Refiner {
 public:
  explicit Refiner(const Digraph& g)
      : g_(g),
        key_(static_cast<std::size_t>(g.size()), 0),
        queued_(static_cast<std::size_t>(g.size()), 0) {}

  void refine(Part& p) {
    const int n = g_.size();
    queue_.clear();
    std::fill(queued_.begin(), queued_.end(), 0);
    for (int s = 0; s < n; s = p.cell_end[s]) push(s);
    for (std::size_t head = 0; head < queue_.size() && !p.discrete(); ++head) {
      const int w = queue_[head];
      queued_[w] = 0;
      splitter_.assign(p.elems.begin() + w, p.elems.begin() + p.cell_end[w]);
      touched_.clear();
      for (int x : splitter_) {
        for (int u : g_.in(x)) touch(u, std::uint64_t{1} << 32);
        for (int u : g_.out(x)) touch(u, 1);
      }
      cells_.clear();
      for (int u : touched_) cells_.push_back(p.cell_of[u]);
      std::sort(cells_.begin(), cells_.end());
      cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
      for (int c : cells_) split_cell(p, c);
      for (int u : touched_) key_[u] = 0;
    }
  }

 private:
  void push(int s) {
    if (!queued_[s]) {
      queued_[s] = 1;
      queue_.push_back(s);
    }
  }

  void touch(int u, std::uint64_t amount) {
    if (key_[u] == 0) touched_.push_back(u);
    key_[u] += amount;
  }

  void split_cell(Part& p, int s) {
    const int e = p.cell_end[s];
    if (e - s == 1) return;
    auto first = p.elems.begin() + s, last = p.elems.begin() + e;
    std::sort(first, last, [&](int a, int b) { return key_[a] != key_[b] ? key_[a] < key_[b] : a < b; });
    if (key_[p.elems[s]] == key_[p.elems[e - 1]]) return;
    const bool was_queued = queued_[s] != 0;
    frags_.clear();
    int start = s;
    for (int i = s + 1; i <= e; ++i) {
      if (i < e && key_[p.elems[i - 1]] == key_[p.elems[i]]) continue;
      p.cell_end[start] = i;
      for (int j = start; j < i; ++j) p.cell_of[p.elems[j]] = start;
      if (start != s) ++p.cells;
      frags_.push_back(start);
      start = i;
    }
    int skip = -1;
    if (!was_queued) {
      int best = 0;
      for (int f : frags_)
        if (p.cell_end[f] - f > best) {
          best = p.cell_end[f] - f;
          skip = f;
        }
    }
    for (int f : frags_)
      if (f != skip) push(f);
  }

  const Digraph& g_;
  std::vector<std::uint64_t> key_;
  std::vector<std::uint8_t> queued_;
  std::vector<int> queue_;
  std::vector<int> splitter_;
  std::vector<int> touched_;
  std::vector<int> cells_;
  std::vector<int> frags_;
};

void individualize(Part& p, int v) {
  const int s = p.cell_of[v];
  const int e = p.cell_end[s];
  if (e - s == 1) return;
  const auto pos = std::find(p.elems.begin() + s, p.elems.begin() + e, v);
  std::iter_swap(p.elems.begin() + s, pos);
  p.cell_end[s] = s + 1;
  p.cell_end[s + 1] = e;
  for (int i = s + 1; i < e; ++i) p.cell_of[p.elems[i]] = s + 1;
  ++p.cells;
}

// First smallest non-singleton cell.
int target_cell(const Part& p) {
  int best = -1, best_size = 0;
  for (int s = 0; s < p.size(); s = p.cell_end[s]) {
    const int size = p.cell_end[s] - s;
    if (size > 1 && (best == -1 || size < best_size)) {
      best = s;
      best_size = size;
    }
  }
  return best;
}

std::vector<int> sorted_cell(const Part& p, int s) {
  std::vector<int> cell(p.elems.begin() + s, p.elems.begin() + p.cell_end[s]);
  std::sort(cell.begin(), cell.end());
  return cell;
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

// Individualization-refinement tree. The first path individualizes `v` at
// level 0 (in whatever cell holds it), then the smallest id of the target
// cell at every later level.
class AutSearch {
 public:
  AutSearch(const Digraph& g, int v) : g_(g), n_(g.size()), refiner_(g) {
    if (n_ > kGraphAutCap)
      fail(ErrorKind::SizeExceeded, "automorphism search is capped at " + std::to_string(kGraphAutCap) +
                                        " vertices (got " + std::to_string(n_) + ")");
    if (v < 0 || v >= n_) fail(ErrorKind::ValidationError, "vertex out of range");
    Part root = to_part(OrderedPartition::unit(n_), n_);
    refiner_.refine(root);
    path_.push_back(root);
    targets_.push_back(root.cell_of[v]);
    choices_.push_back(v);
    while (true) {
      Part child = path_.back();
      individualize(child, choices_.back());
      refiner_.refine(child);
      path_.push_back(child);
      if (child.discrete()) break;
      const int t = target_cell(child);
      targets_.push_back(t);
      choices_.push_back(sorted_cell(child, t).front());
    }
    leaf_ = path_.back().elems;
  }

  // Orbit sizes per level, processed bottom-up down to `lowest` (entries
  // below `lowest` stay 1). Empty when `stop_at_first` hit a non-identity
  // automorphism.
  std::vector<int> run(std::size_t lowest, bool stop_at_first, std::optional<std::vector<int>>& witness) {
    UnionFind orbits(n_);
    std::vector<int> sizes(choices_.size(), 1);
    for (std::size_t level = choices_.size(); level-- > lowest;) {
      const Part& p = path_[level];
      const int u = choices_[level];
      const auto cell = sorted_cell(p, targets_[level]);
      for (int w : cell) {
        if (orbits.find(w) == orbits.find(u)) continue;
        Part child = p;
        individualize(child, w);
        refiner_.refine(child);
        auto gamma = find_leaf(child, level + 1);
        if (!gamma) continue;
        if (level >= 1 && !witness) witness = *gamma;
        if (stop_at_first) return {};
        for (int x = 0; x < n_; ++x) orbits.unite(x, (*gamma)[x]);
      }
      for (int w : cell)
        if (w != u && orbits.find(w) == orbits.find(u)) ++sizes[level];
    }
    return sizes;
  }

 private:
  std::optional<std::vector<int>> find_leaf(const Part& p, std::size_t depth) {
    if (p.cell_end != path_[depth].cell_end) return std::nullopt;
    if (p.discrete()) {
      std::vector<int> gamma(static_cast<std::size_t>(n_));
      for (int i = 0; i < n_; ++i) gamma[leaf_[i]] = p.elems[i];
      if (g_.is_automorphism(gamma)) return gamma;
      return std::nullopt;
    }
    for (int x : sorted_cell(p, targets_[depth])) {
      Part child = p;
      individualize(child, x);
      refiner_.refine(child);
      if (auto gamma = find_leaf(child, depth + 1)) return gamma;
    }
    return std::nullopt;
  }

  const Digraph& g_;
  int n_;
  Refiner refiner_;
  std::vector<Part> path_;
  std::vector<int> targets_;
  std::vector<int> choices_;
  std::vector<int> leaf_;
};

}  // namespace

OrderedPartition OrderedPartition::unit(int n) {
  OrderedPartition p;
  if (n > 0) {
    p.cells.emplace_back(static_cast<std::size_t>(n));
    std::iota(p.cells[0].begin(), p.cells[0].end(), 0);
  }
  return p;
}

OrderedPartition color_refine(const Digraph& g, const OrderedPartition& p) {
  Part q = to_part(p, g.size());
  Refiner(g).refine(q);
  return from_part(q);
}

AutReport stabilizer_order(const Digraph& g, int v) {
  AutReport report;
  const auto sizes = AutSearch(g, v).run(1, false, report.witness);
  for (std::size_t level = 1; level < sizes.size(); ++level) report.stabilizer_order *= sizes[level];
  return report;
}

AutReport stabilizer_order(const CayleyDigraph& g, int v) { return stabilizer_order(g.graph, v); }

AutReport automorphism_report(const Digraph& g) {
  AutReport report;
  if (g.size() == 0) {
    report.group_order = 1;
    return report;
  }
  const auto sizes = AutSearch(g, 0).run(0, false, report.witness);
  for (std::size_t level = 1; level < sizes.size(); ++level) report.stabilizer_order *= sizes[level];
  report.group_order = report.stabilizer_order * sizes[0];
  return report;
}

BigInt automorphism_group_order(const Digraph& g) { return automorphism_report(g).group_order; }

BigInt automorphism_group_order(const CayleyDigraph& g) { return automorphism_group_order(g.graph); }

bool has_trivial_stabilizer(const Digraph& g, int v) {
  std::optional<std::vector<int>> witness;
  return !AutSearch(g, v).run(1, true, witness).empty();
}

bool is_regular_representation(const FiniteGroup& r, const Subgroup& m, const ConnectionSet& s) {
  return has_trivial_stabilizer(build_cayley_digraph(r, m, s).graph, 0);
}

}  // namespace bigrr
