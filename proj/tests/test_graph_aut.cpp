#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "bigrr/catalog.hpp"
#include "bigrr/errors.hpp"
#include "bigrr/graph_aut.hpp"
#include "bigrr/group_spec.hpp"
#include "oracles.hpp"

using namespace bigrr;

namespace {

FiniteGroup make(const char* spec) { return build_group(parse_group_spec(spec)); }

Digraph cycle(int n, bool both) {
  std::vector<std::pair<int, int>> arcs;
  for (int i = 0; i < n; ++i) {
    arcs.emplace_back(i, (i + 1) % n);
    if (both) arcs.emplace_back((i + 1) % n, i);
  }
  return Digraph::from_arcs(n, arcs);
}

Digraph random_digraph(std::mt19937_64& rng) {
  const int n = 1 + static_cast<int>(rng() % 8);
  const int density = 1 + static_cast<int>(rng() % 4);  // arcs with probability density/5
  std::vector<std::pair<int, int>> arcs;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && static_cast<int>(rng() % 5) < density) arcs.emplace_back(u, v);
  return Digraph::from_arcs(n, arcs);
}

bool refines(const OrderedPartition& fine, const OrderedPartition& coarse, int n) {
  std::vector<int> cell(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < coarse.cells.size(); ++i)
    for (int v : coarse.cells[i]) cell[v] = static_cast<int>(i);
  for (const auto& c : fine.cells)
    for (int v : c)
      if (cell[v] != cell[c.front()]) return false;
  return true;
}

}  // namespace

TEST_CASE("colour refinement examples") {
  const Digraph c4 = cycle(4, false);
  CHECK(color_refine(c4, OrderedPartition::unit(4)) == OrderedPartition::unit(4));
  const std::vector<std::pair<int, int>> path{{0, 1}, {1, 2}};
  const auto p = color_refine(Digraph::from_arcs(3, path), OrderedPartition::unit(3));
  CHECK(p.is_discrete(3));
  OrderedPartition discrete;
  for (int v : {2, 0, 3, 1}) discrete.cells.push_back({v});
  CHECK(color_refine(c4, discrete) == discrete);
}

TEST_CASE("colour refinement is idempotent and never coarsens") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const Digraph d = random_digraph(rng);
    const auto p = color_refine(d, OrderedPartition::unit(d.size()));
    CHECK(color_refine(d, p) == p);
    CHECK(refines(p, OrderedPartition::unit(d.size()), d.size()));
  }
}

TEST_CASE("stabilizer examples") {
  for (int v = 0; v < 4; ++v) {
    CHECK(stabilizer_order(cycle(4, false), v).stabilizer_order == 1);
    CHECK(stabilizer_order(cycle(4, true), v).stabilizer_order == 2);
    CHECK(stabilizer_order(Digraph::from_arcs(4, {}), v).stabilizer_order == 6);
  }
  const auto rep = stabilizer_order(cycle(4, true), 0);
  REQUIRE(rep.witness.has_value());
  CHECK(cycle(4, true).is_automorphism(*rep.witness));
  CHECK((*rep.witness)[0] == 0);
  CHECK_FALSE(stabilizer_order(cycle(4, false), 0).witness.has_value());
}

TEST_CASE("group order examples") {
  const std::vector<std::pair<int, int>> k2{{0, 1}, {1, 0}};
  CHECK(automorphism_group_order(Digraph::from_arcs(2, k2)) == 2);
  CHECK(automorphism_group_order(cycle(4, false)) == 4);
  CHECK(automorphism_group_order(cycle(4, true)) == 8);
  CHECK(automorphism_group_order(Digraph::from_arcs(5, {})) == 120);
  CHECK(automorphism_group_order(Digraph::from_arcs(1, {})) == 1);
}

TEST_CASE("agreement with full permutation scan") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 60; ++i) {
    const Digraph d = random_digraph(rng);
    CAPTURE(d.to_adjacency_text());
    const auto ref = oracle::graph_automorphisms(d);
    const AutReport rep = automorphism_report(d);
    CHECK(rep.group_order == ref.group);
    CHECK(rep.stabilizer_order == ref.stabilizer);
    CHECK(has_trivial_stabilizer(d, 0) == (ref.stabilizer == 1));
  }
}

TEST_CASE("regular representation examples") {
  const FiniteGroup c4 = make("C4");
  const Subgroup m = subgroup_generated(c4, std::vector<Element>{2});
  CHECK(is_regular_representation(c4, m, ConnectionSet(c4, m, {1})));
  CHECK_FALSE(is_regular_representation(c4, m, ConnectionSet(c4, m, {1, 3})));
  CHECK(automorphism_group_order(build_cayley_digraph(c4, m, ConnectionSet(c4, m, {1, 3}))) == 8);
  const FiniteGroup c2 = make("C2");
  const Subgroup one = subgroup_generated(c2, std::vector<Element>{});
  CHECK(is_regular_representation(c2, one, ConnectionSet(c2, one, {1})));
  // The empty set on C2 is also a DRR although it does not generate.
  CHECK(is_regular_representation(c2, one, ConnectionSet(c2, one, {})));
}

TEST_CASE("Cayley digraphs: |Aut| = |R| |Aut_1| and stabilizer against plain backtracking") {
  std::mt19937_64 rng(5);
  for (const CatalogEntry* e : catalog_up_to(32)) {
    const FiniteGroup r = build_catalog_group(*e);
    for (const auto& m : index2_subgroups(r)) {
      CAPTURE(e->label);
      std::vector<Element> s;
      for (Element x : m.complement())
        if (rng() & 1U) s.push_back(x);
      const auto cd = build_cayley_digraph(r, m, ConnectionSet(r, m, s));
      const AutReport rep = automorphism_report(cd.graph);
      CHECK(rep.group_order == rep.stabilizer_order * r.order());
      if (r.order() <= 16) {
        const long long limit = 1 << 20;
        const long long ref = oracle::stabilizer_count(cd.graph, limit);
        if (ref <= limit)
          CHECK(rep.stabilizer_order == ref);
        else
          CHECK(rep.stabilizer_order > limit);
      }
    }
  }
}

TEST_CASE("a regular Cayley digraph on more than two vertices is connected") {
  for (const CatalogEntry* e : catalog_up_to(12)) {
    const FiniteGroup r = build_catalog_group(*e);
    if (r.order() <= 2) continue;
    for (const auto& m : index2_subgroups(r)) {
      const auto out = m.complement();
      for (std::uint32_t mask = 0; mask < (1U << out.size()); ++mask) {
        std::vector<Element> s;
        for (std::size_t i = 0; i < out.size(); ++i)
          if ((mask >> i) & 1U) s.push_back(out[i]);
        if (is_regular_representation(r, m, ConnectionSet(r, m, s))) {
          CAPTURE(e->label);
          CHECK(generates_whole_group(r, s));
        }
      }
    }
  }
}

TEST_CASE("size cap") {
  try {
    stabilizer_order(Digraph::from_arcs(129, {}), 0);
    FAIL("expected SizeExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SizeExceeded);
  }
}
