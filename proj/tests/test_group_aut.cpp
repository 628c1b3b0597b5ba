#include <doctest.h>

#include <algorithm>
#include <vector>

#include "bigrr/catalog.hpp"
#include "bigrr/errors.hpp"
#include "bigrr/group_aut.hpp"
#include "bigrr/group_spec.hpp"
#include "oracles.hpp"

using namespace bigrr;

namespace {

FiniteGroup make(const char* spec) { return build_group(parse_group_spec(spec)); }

GroupAutomorphism inversion(const FiniteGroup& g) {
  std::vector<Element> img(static_cast<std::size_t>(g.order()));
  for (int x = 0; x < g.order(); ++x) img[x] = g.inv(x);
  return GroupAutomorphism(g, img);
}

GroupAutomorphism identity(const FiniteGroup& g) {
  std::vector<Element> img(static_cast<std::size_t>(g.order()));
  for (int x = 0; x < g.order(); ++x) img[x] = x;
  return GroupAutomorphism(g, img);
}

Subgroup squares_of_cyclic(const FiniteGroup& g) {
  std::vector<Element> h;
  for (int x = 0; x < g.order(); ++x) h.push_back(g.mul(x, x));
  std::sort(h.begin(), h.end());
  h.erase(std::unique(h.begin(), h.end()), h.end());
  return Subgroup(g, h);
}

// Brute-force half-inverting test over the automorphism list.
bool oracle_half_inverting(const FiniteGroup& g, const Subgroup& m) {
  for (const auto& p : oracle::automorphisms(g)) {
    bool identity = true, ok = true;
    for (int x = 0; x < g.order(); ++x) {
      identity = identity && p[x] == x;
      if (!m.contains(x)) ok = ok && (p[x] == x || p[x] == g.inv(x));
    }
    if (ok && !identity) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("automorphism group sizes") {
  CHECK(automorphism_group(make("C4")).size() == 2);
  CHECK(automorphism_group(make("Dih(C3)")).size() == 6);
  CHECK(automorphism_group(make("Dic(2)")).size() == 24);
  CHECK(automorphism_group(make("Dih(C4)")).size() == 8);
  CHECK(automorphism_group(make("Ab(2,2,2)")).size() == 168);
  CHECK(automorphism_group(make("C(1)")).size() == 1);
}

TEST_CASE("automorphisms agree with bijection scan up to order 9") {
  for (const char* spec : {"C2", "C4", "Ab(2,2)", "C6", "Dih(C3)", "C8", "Ab(4,2)", "Dih(C4)", "Dic(2)",
                           "Ab(2,2,2)", "C(9)", "Ab(3,3)"}) {
    CAPTURE(spec);
    const FiniteGroup g = make(spec);
    std::vector<std::vector<Element>> fast;
    for (const auto& a : automorphism_group(g)) fast.emplace_back(a.image().begin(), a.image().end());
    std::sort(fast.begin(), fast.end());
    CHECK(fast == oracle::automorphisms(g));
  }
}

TEST_CASE("GroupAutomorphism rejects non-automorphisms") {
  const FiniteGroup c4 = make("C4");
  CHECK_THROWS_AS(GroupAutomorphism(c4, {0, 2, 1, 3}), Error);
  CHECK_THROWS_AS(GroupAutomorphism(c4, {0, 1, 2}), Error);
  CHECK(is_automorphism(c4, std::vector<Element>{0, 3, 2, 1}));
  CHECK_FALSE(is_automorphism(c4, std::vector<Element>{0, 0, 2, 2}));
}

TEST_CASE("automorphism accessors") {
  const FiniteGroup c4 = make("C4");
  const auto inv = inversion(c4);
  CHECK_FALSE(inv.is_identity());
  CHECK(identity(c4).is_identity());
  CHECK(inv.fixed_points() == std::vector<Element>{0, 2});
  CHECK(inv.inverted_points(c4).size() == 4);
  CHECK(inv.preserves(squares_of_cyclic(c4)));
}

TEST_CASE("half-inverting automorphism examples") {
  const FiniteGroup c4 = make("C4");
  const auto phi = find_half_inverting_automorphism(c4, squares_of_cyclic(c4));
  REQUIRE(phi.has_value());
  CHECK(*phi == inversion(c4));

  const FiniteGroup d4 = make("Dih(C4)");
  const std::vector<Element> x{d4.generators()[0]};
  CHECK_FALSE(find_half_inverting_automorphism(d4, subgroup_generated(d4, x)).has_value());

  const FiniteGroup q8 = make("Dic(2)");
  const std::vector<Element> i{q8.generators()[0]};
  CHECK(find_half_inverting_automorphism(q8, subgroup_generated(q8, i)).has_value());
}

TEST_CASE("half-inverting search agrees with brute force up to order 8") {
  for (const CatalogEntry* e : catalog_up_to(8)) {
    const FiniteGroup g = build_catalog_group(*e);
    for (const auto& m : index2_subgroups(g)) {
      CAPTURE(e->label);
      const auto phi = find_half_inverting_automorphism(g, m);
      CHECK(phi.has_value() == oracle_half_inverting(g, m));
    }
  }
}

TEST_CASE("orbit counts and invariant subsets") {
  const FiniteGroup c4 = make("C4");
  const Subgroup m4 = squares_of_cyclic(c4);
  CHECK(complement_orbit_count(identity(c4), m4) == 2);
  CHECK(complement_orbit_count(inversion(c4), m4) == 1);
  CHECK(invariant_subset_count(inversion(c4), m4) == 2);
  CHECK(invariant_subset_count(identity(c4), m4) == 4);

  const FiniteGroup c8 = make("C8");
  const Subgroup m8 = squares_of_cyclic(c8);
  CHECK(complement_orbit_count(inversion(c8), m8) == 2);
  CHECK(invariant_subset_count(inversion(c8), m8) == 4);
}

TEST_CASE("orbit count needs an invariant subgroup") {
  const FiniteGroup v = make("Ab(2,2)");
  // Swap the two generators; the subgroup <a> is not preserved.
  const Element a = v.generators()[0], b = v.generators()[1];
  std::vector<Element> img{0, 0, 0, 0};
  img[a] = b;
  img[b] = a;
  img[v.mul(a, b)] = v.mul(a, b);
  const GroupAutomorphism swap(v, img);
  const std::vector<Element> gen{a};
  try {
    complement_orbit_count(swap, subgroup_generated(v, gen));
    FAIL("expected NotInvariant");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotInvariant);
  }
}

TEST_CASE("enumeration cap") {
  const FiniteGroup g = make("C(66)");
  try {
    automorphism_group(g);
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CapExceeded);
    CHECK(e.is_cap());
  }
}

TEST_CASE("generating sequence generates") {
  for (const CatalogEntry* e : catalog_up_to(32)) {
    const FiniteGroup g = build_catalog_group(*e);
    const auto gens = generating_sequence(g);
    CHECK(subgroup_generated(g, gens).order() == g.order());
  }
}

TEST_CASE("visitor can stop early") {
  int seen = 0;
  for_each_automorphism(make("Ab(2,2,2)"), {}, [&](std::span<const Element>) { return ++seen < 5; });
  CHECK(seen == 5);
}
