#include <doctest.h>

#include <cmath>
#include <set>
#include <vector>

#include "bigrr/bounds.hpp"
#include "bigrr/catalog.hpp"
#include "bigrr/errors.hpp"
#include "bigrr/group_spec.hpp"
#include "bigrr/search.hpp"
#include "oracles.hpp"

using namespace bigrr;

namespace {

FiniteGroup make(const char* spec) { return build_group(parse_group_spec(spec)); }

Subgroup gen(const FiniteGroup& g, std::vector<Element> xs) { return subgroup_generated(g, xs); }

std::vector<Element> elems(const ConnectionSet& s) { return {s.elements().begin(), s.elements().end()}; }

}  // namespace

TEST_CASE("random connection sets") {
  const FiniteGroup c2 = make("C2");
  const Subgroup one = gen(c2, {});
  std::set<std::vector<Element>> seen;
  for (std::uint64_t t = 0; t < 64; ++t) {
    auto rng = trial_rng(9, 0, t);
    seen.insert(elems(random_connection_set(c2, one, rng, false)));
  }
  CHECK(seen == std::set<std::vector<Element>>{{}, {1}});

  const FiniteGroup c4 = make("C4");
  const Subgroup m = gen(c4, {2});
  seen.clear();
  for (std::uint64_t t = 0; t < 64; ++t) {
    auto rng = trial_rng(9, 0, t);
    seen.insert(elems(random_connection_set(c4, m, rng, true)));
  }
  CHECK(seen == std::set<std::vector<Element>>{{}, {1, 3}});

  auto r1 = trial_rng(42, 3, 5), r2 = trial_rng(42, 3, 5);
  const FiniteGroup d5 = make("Dih(C5)");
  const Subgroup x = gen(d5, {1});
  CHECK(elems(random_connection_set(d5, x, r1, false)) == elems(random_connection_set(d5, x, r2, false)));
  auto r3 = trial_rng(42, 4, 5);
  CHECK(r3() != trial_rng(42, 3, 5)());
}

TEST_CASE("inverse pair classes") {
  const FiniteGroup c8 = make("C8");
  const auto classes = inverse_pair_classes(c8, gen(c8, {2}));
  CHECK(classes == std::vector<std::vector<Element>>{{1, 7}, {3, 5}});
  const FiniteGroup d4 = make("Dih(C4)");
  CHECK(inverse_pair_classes(d4, gen(d4, {1})).size() == 4);
}

TEST_CASE("search examples") {
  const FiniteGroup c4 = make("C4");
  const Subgroup m = gen(c4, {2});
  SearchOptions opt;
  opt.seed = 1;
  const auto rep = search_representation(c4, m, Mode::Drr, opt);
  CHECK(rep.status == SearchStatus::Found);
  REQUIRE(rep.found_set.has_value());
  CHECK(rep.found_set->size() == 1);
  CHECK(rep.trials <= 20);

  const FiniteGroup q8 = make("Dic(2)");
  const auto grr = search_representation(q8, gen(q8, {1}), Mode::Grr, opt);
  CHECK(grr.status == SearchStatus::Obstructed);
  REQUIRE(grr.witness.has_value());
  CHECK(grr.witness->condition == Condition::Cond1);

  const FiniteGroup v4 = make("Ab(2,2)");
  opt.max_trials = 2000;
  const auto none = search_representation(v4, index2_subgroups(v4)[0], Mode::Drr, opt);
  CHECK(none.status == SearchStatus::Unresolved);
  CHECK(none.trials == 2000);
}

TEST_CASE("search is independent of the worker count") {
  const FiniteGroup g = make("Dih(C6)");
  for (const auto& m : index2_subgroups(g)) {
    SearchOptions opt;
    opt.seed = 77;
    opt.max_trials = 3000;
    const auto a = search_representation(g, m, Mode::Drr, opt);
    opt.workers = 4;
    const auto b = search_representation(g, m, Mode::Drr, opt);
    CHECK(a.status == b.status);
    CHECK(a.trials == b.trials);
    CHECK(a.found_set == b.found_set);
  }
}

TEST_CASE("exhaustive examples") {
  const FiniteGroup c4 = make("C4");
  const auto c = exhaustive_count(c4, gen(c4, {2}), Mode::Drr);
  REQUIRE(c.counts.has_value());
  CHECK(c.counts->scanned == 4);
  CHECK(c.counts->found == 2);
  CHECK(c.status == SearchStatus::Found);

  const FiniteGroup d5 = make("Dih(C5)");
  const auto d = exhaustive_count(d5, gen(d5, {1}), Mode::Drr);
  CHECK(d.counts->scanned == 32);
  CHECK(d.counts->found == 0);
  CHECK(d.status == SearchStatus::ExhaustedNone);

  const FiniteGroup v4 = make("Ab(2,2)");
  for (const auto& m : index2_subgroups(v4)) CHECK(exhaustive_count(v4, m, Mode::Grr).counts->found == 0);
}

TEST_CASE("exhaustive counts agree with brute force") {
  for (const CatalogEntry* e : catalog_up_to(12)) {
    const FiniteGroup r = build_catalog_group(*e);
    for (const auto& m : index2_subgroups(r)) {
      CAPTURE(e->label);
      const std::vector<Element> mem(m.members().begin(), m.members().end());
      CHECK(exhaustive_count(r, m, Mode::Drr).counts->found ==
            static_cast<std::uint64_t>(oracle::representation_count(r, mem, false)));
      CHECK(exhaustive_count(r, m, Mode::Grr).counts->found ==
            static_cast<std::uint64_t>(oracle::representation_count(r, mem, true)));
    }
  }
  for (const char* label : {"16#8", "16#13", "14#1"}) {
    const FiniteGroup r = build_catalog_group(*find_catalog_entry(label));
    const Subgroup m = index2_subgroups(r).back();
    const std::vector<Element> mem(m.members().begin(), m.members().end());
    CAPTURE(label);
    CHECK(exhaustive_count(r, m, Mode::Drr).counts->found ==
          static_cast<std::uint64_t>(oracle::representation_count(r, mem, false)));
  }
}

TEST_CASE("exhaustive scan with several workers") {
  const FiniteGroup r = make("Dih(C6)");
  for (const auto& m : index2_subgroups(r)) {
    const auto a = exhaustive_count(r, m, Mode::Drr, 1);
    const auto b = exhaustive_count(r, m, Mode::Drr, 3);
    CHECK(a.counts->found == b.counts->found);
    CHECK(a.found_set == b.found_set);
  }
}

TEST_CASE("exhaustive space cap") {
  const FiniteGroup r = make("C(50)");
  try {
    exhaustive_count(r, index2_subgroups(r)[0], Mode::Drr);
    FAIL("expected SpaceTooLarge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SpaceTooLarge);
  }
}

TEST_CASE("counting lemma examples") {
  const FiniteGroup c4 = make("C4");
  const auto rep = verify_counting_lemmas(c4, gen(c4, {2}));
  REQUIRE(rep.automorphisms.size() == 1);
  CHECK(rep.automorphisms[0].orbits == 1);
  CHECK(rep.automorphisms[0].invariant_sets == 2);
  CHECK(rep.orbit_bound_holds);
  CHECK(rep.orbit_count_identity_holds);

  const FiniteGroup v4 = make("Ab(2,2)");
  const auto r2 = verify_counting_lemmas(v4, index2_subgroups(v4)[0]);
  // R \ M = {a, b}: the empty set, {a} and {b} do not generate.
  CHECK(r2.disconnected == 3);
  CHECK(r2.disconnected_bound_holds);
}

TEST_CASE("counting identities up to order 16") {
  for (const CatalogEntry* e : catalog_up_to(16)) {
    const FiniteGroup r = build_catalog_group(*e);
    for (const auto& m : index2_subgroups(r)) {
      CAPTURE(e->label);
      const auto rep = verify_counting_lemmas(r, m);
      CHECK(rep.orbit_count_identity_holds);
      CHECK(rep.orbit_bound_holds);
      CHECK(rep.disconnected_bound_holds);
      for (const auto& a : rep.automorphisms) CHECK(a.invariant_sets == (std::uint64_t{1} << a.orbits));
    }
  }
}

TEST_CASE("bound arithmetic") {
  const auto b8 = drr_lower_bound(8);
  CHECK(b8.sign == -1);
  REQUIRE(b8.exact_value.has_value());
  CHECK(*b8.exact_value == BigInt(16) - 5 * BigInt(512));
  CHECK(drr_lower_bound(638).sign == -1);
  CHECK(drr_lower_bound(640).sign == 1);
  CHECK_FALSE(drr_lower_bound(640).exact_value.has_value());
  CHECK(drr_lower_bound(1024).exact_value.has_value());
  CHECK(bound_crossover() == 640);
  CHECK_THROWS_AS(drr_lower_bound(7), Error);
  for (long long n = 4; n <= 2000; n += 2) {
    const long double d = n / 8.0L - std::log2(5.0L) - std::log2(static_cast<long double>(n)) *
                                                         std::log2(n / 2.0L);
    if (std::fabs(d) > 1e-6L) CHECK(drr_lower_bound(n).sign == (d > 0 ? 1 : -1));
  }
}
