#include <doctest.h>

#include <algorithm>
#include <vector>

#include "bigrr/catalog.hpp"
#include "bigrr/errors.hpp"
#include "bigrr/group.hpp"
#include "bigrr/group_spec.hpp"
#include "oracles.hpp"

using namespace bigrr;

namespace {

FiniteGroup make(const char* spec) { return build_group(parse_group_spec(spec)); }

std::vector<Element> members(const Subgroup& h) { return {h.members().begin(), h.members().end()}; }

int count_of_order(const FiniteGroup& g, int k) {
  int c = 0;
  for (int x = 0; x < g.order(); ++x) c += g.order_of(x) == k;
  return c;
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::Usage;
}

}  // namespace

TEST_CASE("cyclic group of order 4") {
  const FiniteGroup g = make("C(4)");
  CHECK(g.order() == 4);
  CHECK(count_of_order(g, 4) == 2);
  CHECK(element_order(g, 1) == 4);
  CHECK(element_order(g, 0) == 1);
  CHECK(g.is_abelian());
}

TEST_CASE("generalized dihedral on C3 is D3") {
  const FiniteGroup g = make("Dih(C3)");
  CHECK(g.order() == 6);
  CHECK_FALSE(g.is_abelian());
  CHECK(count_of_order(g, 2) == 3);
  CHECK(count_of_order(g, 3) == 2);
}

TEST_CASE("dicyclic(2) is Q8") {
  const FiniteGroup g = make("Dic(2)");
  CHECK(g.order() == 8);
  CHECK(count_of_order(g, 2) == 1);
  CHECK(count_of_order(g, 4) == 6);
  Element inv = -1;
  for (int x = 0; x < 8; ++x)
    if (g.order_of(x) == 2) inv = x;
  CHECK(element_order(g, inv) == 2);
  CHECK(members(center(g)) == std::vector<Element>{0, inv});
  CHECK(members(derived_subgroup(g)) == std::vector<Element>{0, inv});
}

TEST_CASE("shorthand specs match long forms") {
  CHECK(make("C6").order() == 6);
  CHECK(make("Dic3").order() == 12);
  CHECK(make("Ab(2,2,2)").order() == 8);
  CHECK(make("Prod(C(2),Dih(C3))").order() == 12);
}

TEST_CASE("parse_cayley_table") {
  const FiniteGroup c2 = parse_cayley_table("order 2\n0 1\n1 0\n");
  CHECK(c2.order() == 2);
  const FiniteGroup v4 = parse_cayley_table("order 4\n0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 0\n");
  CHECK(count_of_order(v4, 2) == 3);
  CHECK(kind_of([] { parse_cayley_table("order 4\n0 1 2 3\n1 1 3 2\n2 3 0 1\n3 2 1 0\n"); }) ==
        ErrorKind::ValidationError);
  CHECK(kind_of([] { parse_cayley_table("order 2\n0 1\n1"); }) == ErrorKind::ParseError);
}

TEST_CASE("JSON table round trip") {
  const FiniteGroup q8 = make("Dic(2)");
  const FiniteGroup back = parse_cayley_table(format_cayley_table(q8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) CHECK(back.mul(a, b) == q8.mul(a, b));
  const FiniteGroup j = parse_cayley_table(R"({"order": 2, "table": [[0,1],[1,0]]})", true);
  CHECK(j.order() == 2);
}

TEST_CASE("non-associative table is rejected") {
  // Latin square with identity 0 that is not a group (order 5 loop).
  const char* loop = "order 5\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n";
  CHECK(kind_of([&] { parse_cayley_table(loop); }) == ErrorKind::ValidationError);
}

TEST_CASE("centre and derived subgroup of D4") {
  const FiniteGroup d4 = make("Dih(C4)");
  CHECK(center(d4).order() == 2);
  CHECK(members(center(d4)) == oracle::center(d4));
  CHECK(members(derived_subgroup(d4)) == members(center(d4)));
  CHECK(derived_subgroup(make("Ab(2,4)")).order() == 1);
  CHECK(center(make("C4")).order() == 4);
}

TEST_CASE("subgroup_generated") {
  const FiniteGroup c4 = make("C4");
  const std::vector<Element> sq{c4.mul(1, 1)};
  CHECK(subgroup_generated(c4, sq).order() == 2);
  const std::vector<Element> x{1};
  CHECK(subgroup_generated(c4, x).order() == 4);
  const FiniteGroup q8 = make("Dic(2)");
  const auto gens = q8.generators();
  CHECK(subgroup_generated(q8, std::vector<Element>(gens.begin(), gens.end())).order() == 8);
}

TEST_CASE("index-2 subgroup examples") {
  CHECK(index2_subgroups(make("C4")).size() == 1);
  CHECK(index2_subgroups(make("Ab(2,2)")).size() == 3);
  const FiniteGroup q8 = make("Dic(2)");
  const auto subs = index2_subgroups(q8);
  REQUIRE(subs.size() == 3);
  for (const auto& m : subs) {
    CHECK(m.order() == 4);
    CHECK(std::any_of(m.members().begin(), m.members().end(), [&](Element x) { return q8.order_of(x) == 4; }));
  }
  CHECK(index2_subgroups(make("C5")).empty());
}

TEST_CASE("index-2 subgroups agree with subset scan up to order 24") {
  for (const CatalogEntry* e : catalog_up_to(24)) {
    CAPTURE(e->label);
    const FiniteGroup g = build_catalog_group(*e);
    std::vector<std::vector<Element>> fast;
    for (const auto& m : index2_subgroups(g)) fast.push_back(members(m));
    CHECK(fast == oracle::index2_subgroups(g));
  }
}

TEST_CASE("centre, derived subgroup and orders agree with brute force") {
  for (const CatalogEntry* e : catalog_up_to(32)) {
    CAPTURE(e->label);
    const FiniteGroup g = build_catalog_group(*e);
    CHECK(g.order() == e->order);
    CHECK(members(center(g)) == oracle::center(g));
    CHECK(members(derived_subgroup(g)) == oracle::derived(g));
    for (int x = 0; x < g.order(); ++x) CHECK(g.order_of(x) == oracle::order_of(g, x));
  }
}

TEST_CASE("is_generalized_dihedral_on") {
  const FiniteGroup d4 = make("Dih(C4)");
  const std::vector<Element> x{1};
  CHECK(is_generalized_dihedral_on(d4, subgroup_generated(d4, x)));
  const FiniteGroup c4 = make("C4");
  CHECK_FALSE(is_generalized_dihedral_on(c4, index2_subgroups(c4)[0]));
  const FiniteGroup e8 = make("Ab(2,2,2)");
  for (const auto& m : index2_subgroups(e8)) CHECK(is_generalized_dihedral_on(e8, m));
}

TEST_CASE("Subgroup validates closure") {
  const FiniteGroup c4 = make("C4");
  CHECK(kind_of([&] { Subgroup(c4, {0, 1}); }) == ErrorKind::ValidationError);
  CHECK(kind_of([&] { Subgroup(c4, {1, 2}); }) == ErrorKind::ValidationError);
  const Subgroup h(c4, {0, 2});
  CHECK(h.index() == 2);
  CHECK(h.complement() == std::vector<Element>{1, 3});
}

TEST_CASE("spec parser errors") {
  CHECK(kind_of([] { parse_group_spec("Foo(3)"); }) == ErrorKind::InvalidSpec);
  CHECK(kind_of([] { parse_group_spec("C(3"); }) == ErrorKind::InvalidSpec);
  CHECK(kind_of([] { make("C(0)"); }) == ErrorKind::InvalidSpec);
  CHECK(kind_of([] { make("Dih(Dic(2))"); }) == ErrorKind::InvalidSpec);
  CHECK(kind_of([] { make("C(5000)"); }) == ErrorKind::InvalidSpec);
  // a -> a^2 is not an automorphism of C4.
  CHECK(kind_of([] { make("Sdp(C(4),C(2),[a^2])"); }) == ErrorKind::InvalidSpec);
  // a -> a^-1 has order 2, so it cannot be the image of a generator of C3.
  CHECK(kind_of([] { make("Sdp(C(5),C(3),[a^-1])"); }) == ErrorKind::InvalidSpec);
}

TEST_CASE("semidirect product builds SD16") {
  const FiniteGroup g = make("Sdp(C(8),C(2),[a^3])");
  CHECK(g.order() == 16);
  CHECK(center(g).order() == 2);
  CHECK(count_of_order(g, 2) == 5);
}

TEST_CASE("words") {
  const FiniteGroup d4 = make("Dih(C4)");
  const auto gens = d4.generators();
  CHECK(evaluate_word(d4, gens, "1") == 0);
  CHECK(evaluate_word(d4, gens, "a^-1") == d4.inv(gens[0]));
  CHECK(evaluate_word(d4, gens, "a*b") == d4.mul(gens[0], gens[1]));
  for (int x = 0; x < d4.order(); ++x) CHECK(evaluate_word(d4, gens, element_word(d4, x)) == x);
}

TEST_CASE("subgroup_as_group") {
  const FiniteGroup q8 = make("Dic(2)");
  const auto [h, embed] = subgroup_as_group(q8, index2_subgroups(q8)[0]);
  CHECK(h.order() == 4);
  CHECK(h.is_abelian());
  CHECK(embed[0] == 0);
}

TEST_CASE("every catalog entry builds with its order") {
  for (const auto& e : catalog()) {
    CAPTURE(e.label);
    CHECK(build_catalog_group(e).order() == e.order);
  }
  CHECK(find_catalog_entry("SD16") == find_catalog_entry("16#8"));
  CHECK(find_catalog_entry("nope") == nullptr);
}
