#include "bigrr/group.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "bigrr/errors.hpp"

namespace bigrr {

namespace {

std::string describe(int i, int j) {
  return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

}  // namespace

FiniteGroup::FiniteGroup(int order, std::vector<Element> table, std::string name,
                         std::vector<Element> generators)
    : order_(order), name_(std::move(name)), generators_(std::move(generators)) {
  if (order < 1) fail(ErrorKind::ValidationError, "group order must be positive");
  if (order > kMaxOrder)
    fail(ErrorKind::CapExceeded,
         "group order " + std::to_string(order) + " exceeds cap " + std::to_string(kMaxOrder));
  const auto n = static_cast<std::size_t>(order);
  if (table.size() != n * n)
    fail(ErrorKind::ValidationError, "table must have order*order entries");
  for (Element x : table)
    if (x < 0 || x >= order) fail(ErrorKind::ValidationError, "table entry out of range");
  for (Element g : generators_)
    if (g < 0 || g >= order) fail(ErrorKind::ValidationError, "generator out of range");

  table_.assign(table.begin(), table.end());

  for (int j = 0; j < order; ++j) {
    if (mul(0, j) != j || mul(j, 0) != j)
      fail(ErrorKind::ValidationError, "element 0 is not the identity at " + describe(0, j));
  }

  // Latin square: every row and every column is a permutation.
  std::vector<int> seen(n, -1);
  for (int i = 0; i < order; ++i) {
    for (int j = 0; j < order; ++j) {
      Element x = mul(i, j);
      if (seen[x] == i) fail(ErrorKind::ValidationError, "row " + std::to_string(i) + " is not bijective");
      seen[x] = i;
    }
  }
  std::fill(seen.begin(), seen.end(), -1);
  for (int j = 0; j < order; ++j) {
    for (int i = 0; i < order; ++i) {
      Element x = mul(i, j);
      if (seen[x] == j) fail(ErrorKind::ValidationError, "column " + std::to_string(j) + " is not bijective");
      seen[x] = j;
    }
  }

  if (order <= kFullAssociativityCheck) {
    for (int a = 0; a < order; ++a)
      for (int b = 0; b < order; ++b) {
        const Element ab = mul(a, b);
        for (int c = 0; c < order; ++c)
          if (mul(ab, c) != mul(a, mul(b, c)))
            fail(ErrorKind::ValidationError,
                 "not associative at (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                     std::to_string(c) + ")");
      }
  } else {
    std::mt19937_64 rng(0x5eed'a550'c1a7'1e5ULL);
    std::uniform_int_distribution<int> pick(0, order - 1);
    for (int t = 0; t < kSampledTriples; ++t) {
      const Element a = pick(rng), b = pick(rng), c = pick(rng);
      if (mul(mul(a, b), c) != mul(a, mul(b, c)))
        fail(ErrorKind::ValidationError, "not associative (sampled triple)");
    }
  }

  inverse_.resize(n);
  for (int i = 0; i < order; ++i) {
    for (int j = 0; j < order; ++j)
      if (mul(i, j) == 0) {
        inverse_[i] = static_cast<std::uint16_t>(j);
        break;
      }
    if (mul(inverse_[i], i) != 0)
      fail(ErrorKind::ValidationError, "left and right inverses differ for " + std::to_string(i));
  }

  orders_.resize(n);
  for (int g = 0; g < order; ++g) {
    int k = 1;
    Element x = g;
    while (x != 0) {
      x = mul(x, g);
      ++k;
    }
    orders_[g] = (g == 0) ? 1 : k;
  }
}

Element FiniteGroup::pow(Element a, long long k) const {
  Element base = k < 0 ? inv(a) : a;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1
                               : static_cast<unsigned long long>(k);
  e %= static_cast<unsigned long long>(orders_[a]);
  Element result = 0;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

Subgroup::Subgroup(const FiniteGroup& parent, std::vector<Element> members)
    : members_(std::move(members)), mask_(static_cast<std::size_t>(parent.order()), 0) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (Element g : members_) {
    if (g < 0 || g >= parent.order()) fail(ErrorKind::ValidationError, "subgroup member out of range");
    mask_[g] = 1;
  }
  if (members_.empty() || members_.front() != 0)
    fail(ErrorKind::ValidationError, "subgroup must contain the identity");
  for (Element a : members_)
    for (Element b : members_)
      if (!mask_[parent.mul(a, b)])
        fail(ErrorKind::ValidationError, "subgroup not closed under multiplication");
}

std::vector<Element> Subgroup::complement() const {
  std::vector<Element> out;
  out.reserve(mask_.size() - members_.size());
  for (std::size_t g = 0; g < mask_.size(); ++g)
    if (!mask_[g]) out.push_back(static_cast<Element>(g));
  return out;
}

FiniteGroup parse_cayley_table(std::string_view text, bool json) {
  if (json) {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorKind::ParseError, e.what());
    }
    if (!doc.is_object() || !doc.contains("order") || !doc.contains("table"))
      fail(ErrorKind::ParseError, "JSON table needs fields 'order' and 'table'");
    try {
      const int n = doc.at("order").get<int>();
      if (n < 1 || n > FiniteGroup::kMaxOrder)
        fail(ErrorKind::ParseError, "order out of range");
      const auto& rows = doc.at("table");
      if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        fail(ErrorKind::ParseError, "table must have 'order' rows");
      std::vector<Element> table;
      table.reserve(static_cast<std::size_t>(n) * n);
      for (const auto& row : rows) {
        if (!row.is_array() || static_cast<int>(row.size()) != n)
          fail(ErrorKind::ParseError, "every row must have 'order' entries");
        for (const auto& x : row) table.push_back(x.get<int>());
      }
      std::string name = doc.contains("name") ? doc.at("name").get<std::string>() : "";
      return FiniteGroup(n, std::move(table), std::move(name));
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorKind::ParseError, e.what());
    }
  }

  std::istringstream in{std::string(text)};
  std::string line;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      if (line[first] == '#') continue;
      return true;
    }
    return false;
  };

  if (!next_line()) fail(ErrorKind::ParseError, "empty input");
  std::istringstream header(line);
  std::string keyword;
  int n = 0;
  if (!(header >> keyword >> n) || keyword != "order")
    fail(ErrorKind::ParseError, "first line must be 'order <n>'");
  if (n < 1 || n > FiniteGroup::kMaxOrder) fail(ErrorKind::ParseError, "order out of range");

  std::string name;
  std::vector<Element> table;
  table.reserve(static_cast<std::size_t>(n) * n);
  int rows = 0;
  while (next_line()) {
    std::istringstream ls(line);
    std::string first;
    ls >> first;
    if (rows == 0 && first == "name") {
      std::getline(ls >> std::ws, name);
      while (!name.empty() && (name.back() == '\r' || name.back() == ' ')) name.pop_back();
      continue;
    }
    if (rows == n) fail(ErrorKind::ParseError, "more than 'order' rows");
    std::istringstream row(line);
    std::string token;
    int count = 0;
    while (row >> token) {
      int value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size())
        fail(ErrorKind::ParseError, "bad table entry '" + token + "'");
      table.push_back(value);
      ++count;
    }
    if (count != n)
      fail(ErrorKind::ParseError, "row " + std::to_string(rows) + " has " +
                                      std::to_string(count) + " entries, expected " +
                                      std::to_string(n));
    ++rows;
  }
  if (rows != n) fail(ErrorKind::ParseError, "expected " + std::to_string(n) + " rows");
  return FiniteGroup(n, std::move(table), std::move(name));
}

FiniteGroup load_cayley_table(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) fail(ErrorKind::ParseError, "cannot open " + path);
  std::stringstream buffer;
  buffer << file.rdbuf();
  const bool json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
  return parse_cayley_table(buffer.str(), json);
}

std::string format_cayley_table(const FiniteGroup& g) {
  std::ostringstream out;
  out << "order " << g.order() << "\n";
  if (!g.name().empty()) out << "name " << g.name() << "\n";
  for (int i = 0; i < g.order(); ++i) {
    for (int j = 0; j < g.order(); ++j) out << (j ? " " : "") << g.mul(i, j);
    out << "\n";
  }
  return out.str();
}

int element_order(const FiniteGroup& g, Element x) { return g.order_of(x); }

Subgroup whole_group(const FiniteGroup& g) {
  std::vector<Element> all(static_cast<std::size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i) all[i] = i;
  return Subgroup(g, std::move(all));
}

Subgroup trivial_subgroup(const FiniteGroup& g) { return Subgroup(g, {0}); }

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const Element> gens) {
  std::vector<std::uint8_t> in(static_cast<std::size_t>(g.order()), 0);
  std::vector<Element> members{0};
  in[0] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Element s : gens) {
      const Element y = g.mul(members[i], s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  }
  return Subgroup(g, std::move(members));
}

Subgroup center_of(const FiniteGroup& g, const Subgroup& h) {
  std::vector<Element> out;
  for (Element x : h.members()) {
    bool central = true;
    for (Element y : h.members())
      if (g.mul(x, y) != g.mul(y, x)) {
        central = false;
        break;
      }
    if (central) out.push_back(x);
  }
  return Subgroup(g, std::move(out));
}

Subgroup center(const FiniteGroup& g) { return center_of(g, whole_group(g)); }

Subgroup derived_subgroup_of(const FiniteGroup& g, const Subgroup& h) {
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<Element> commutators;
  for (Element x : h.members())
    for (Element y : h.members()) {
      const Element c = g.commutator(x, y);
      if (!seen[c]) {
        seen[c] = 1;
        commutators.push_back(c);
      }
    }
  return subgroup_generated(g, commutators);
}

Subgroup derived_subgroup(const FiniteGroup& g) { return derived_subgroup_of(g, whole_group(g)); }

bool is_abelian(const FiniteGroup& g, const Subgroup& h) {
  for (Element x : h.members())
    for (Element y : h.members())
      if (g.mul(x, y) != g.mul(y, x)) return false;
  return true;
}

std::vector<Subgroup> index2_subgroups(const FiniteGroup& g) {
  const int n = g.order();
  if (n % 2 != 0) return {};

  // N = <commutators, squares>; g/N is elementary abelian of rank r.
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(n), 0);
  std::vector<Element> gens;
  auto add = [&](Element x) {
    if (!seen[x]) {
      seen[x] = 1;
      gens.push_back(x);
    }
  };
  for (int x = 0; x < n; ++x) {
    add(g.mul(x, x));
    for (int y = x + 1; y < n; ++y) add(g.commutator(x, y));
  }
  const Subgroup frattini = subgroup_generated(g, gens);
  if (frattini.order() == n) return {};

  // Coset representative = smallest id in the coset x N.
  std::vector<Element> coset_rep(static_cast<std::size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    if (coset_rep[x] != -1) continue;
    for (Element m : frattini.members()) coset_rep[g.mul(x, m)] = x;
  }

  // Greedy basis of the quotient; vec[rep] is the coordinate mask of a coset.
  std::vector<std::int64_t> vec(static_cast<std::size_t>(n), -1);
  std::vector<Element> span_reps{0};
  vec[0] = 0;
  int rank = 0;
  for (int x = 0; x < n; ++x) {
    if (vec[coset_rep[x]] != -1) continue;
    const std::size_t old = span_reps.size();
    for (std::size_t i = 0; i < old; ++i) {
      const Element rep = coset_rep[g.mul(span_reps[i], x)];
      vec[rep] = vec[span_reps[i]] | (std::int64_t{1} << rank);
      span_reps.push_back(rep);
    }
    ++rank;
  }

  std::vector<Subgroup> out;
  for (std::int64_t f = 1; f < (std::int64_t{1} << rank); ++f) {
    std::vector<Element> members;
    for (int x = 0; x < n; ++x)
      if ((__builtin_popcountll(static_cast<unsigned long long>(vec[coset_rep[x]] & f)) & 1) == 0)
        members.push_back(x);
    out.emplace_back(g, std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<FiniteGroup, std::vector<Element>> subgroup_as_group(const FiniteGroup& g,
                                                               const Subgroup& h) {
  const auto members = h.members();
  const int k = h.order();
  std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
  for (int i = 0; i < k; ++i) local[members[i]] = i;
  std::vector<Element> table(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) table[static_cast<std::size_t>(i) * k + j] = local[g.mul(members[i], members[j])];
  std::vector<Element> embedding(members.begin(), members.end());
  return {FiniteGroup(k, std::move(table)), std::move(embedding)};
}

std::vector<Subgroup> index2_subgroups_of(const FiniteGroup& g, const Subgroup& h) {
  auto [sub, embedding] = subgroup_as_group(g, h);
  std::vector<Subgroup> out;
  for (const Subgroup& s : index2_subgroups(sub)) {
    std::vector<Element> members;
    for (Element x : s.members()) members.push_back(embedding[x]);
    out.emplace_back(g, std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_generalized_dihedral_on(const FiniteGroup& g, const Subgroup& m) {
  if (m.index() != 2) fail(ErrorKind::InvalidSpec, "subgroup must have index 2");
  if (!is_abelian(g, m)) return false;
  for (Element x : m.complement()) {
    if (g.order_of(x) != 2) continue;
    bool inverts = true;
    for (Element y : m.members())
      if (g.conj(y, x) != g.inv(y)) {
        inverts = false;
        break;
      }
    if (inverts) return true;
  }
  return false;
}

std::vector<Element> extend_homomorphism(const FiniteGroup& src, std::span<const Element> gens,
                                         std::span<const Element> images, const FiniteGroup& dst) {
  if (gens.size() != images.size()) fail(ErrorKind::InvalidSpec, "generator/image count mismatch");
  std::vector<Element> map(static_cast<std::size_t>(src.order()), -1);
  std::vector<Element> queue{0};
  map[0] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Element h = queue[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const Element next = src.mul(h, gens[k]);
      const Element value = dst.mul(map[h], images[k]);
      if (map[next] == -1) {
        map[next] = value;
        queue.push_back(next);
      } else if (map[next] != value) {
        return {};
      }
    }
  }
  if (static_cast<int>(queue.size()) != src.order())
    fail(ErrorKind::InvalidSpec, "generators do not generate the group");
  return map;
}

}  // namespace bigrr
