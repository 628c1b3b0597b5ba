#include "bigrr/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <thread>

#include "bigrr/errors.hpp"
#include "bigrr/graph_aut.hpp"

namespace bigrr {

namespace {

template <typename Fn>
void run_workers(int workers, Fn&& fn) {
  if (workers <= 1) {
    fn(0);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) threads.emplace_back([&fn, w] { fn(w); });
  for (auto& t : threads) t.join();
}

void require_searchable(const FiniteGroup& r, const Subgroup& m) {
  if (m.index() != 2) fail(ErrorKind::InvalidSpec, "subgroup must have index 2");
  if (r.order() > kSearchCap)
    fail(ErrorKind::SizeExceeded, "search is capped at order " + std::to_string(kSearchCap) + " (got " +
                                      std::to_string(r.order()) + ")");
}

// The free units of the enumeration: single elements, or inverse-pair classes.
std::vector<std::vector<Element>> search_units(const FiniteGroup& r, const Subgroup& m, bool inverse_closed) {
  if (inverse_closed) return inverse_pair_classes(r, m);
  std::vector<std::vector<Element>> units;
  for (Element x : m.complement()) units.push_back({x});
  return units;
}

std::vector<Element> set_of_mask(const std::vector<std::vector<Element>>& units, std::uint64_t mask) {
  std::vector<Element> s;
  for (std::size_t i = 0; i < units.size(); ++i)
    if ((mask >> i) & 1U) s.insert(s.end(), units[i].begin(), units[i].end());
  return s;
}

}  // namespace

std::string_view to_string(Mode m) { return m == Mode::Drr ? "drr" : "grr"; }

std::string_view to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Obstructed: return "obstructed";
    case SearchStatus::Found: return "found";
    case SearchStatus::ExhaustedNone: return "exhausted-none";
    case SearchStatus::Unresolved: return "unresolved";
  }
  return "?";
}

Mode parse_mode(std::string_view text) {
  if (text == "drr" || text == "DRR") return Mode::Drr;
  if (text == "grr" || text == "GRR") return Mode::Grr;
  fail(ErrorKind::Usage, "mode must be drr or grr, got '" + std::string(text) + "'");
}

int default_workers() {
  if (const char* env = std::getenv("BIGRR_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 256) return static_cast<int>(v);
  }
  return 1;
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t pair, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(pair), static_cast<std::uint32_t>(pair >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

std::vector<std::vector<Element>> inverse_pair_classes(const FiniteGroup& r, const Subgroup& m) {
  std::vector<std::vector<Element>> classes;
  for (Element x : m.complement()) {
    const Element y = r.inv(x);
    if (y < x) continue;
    if (y == x)
      classes.push_back({x});
    else
      classes.push_back({x, y});
  }
  return classes;
}

ConnectionSet random_connection_set(const FiniteGroup& r, const Subgroup& m, std::mt19937_64& rng,
                                    bool inverse_closed) {
  std::vector<Element> s;
  for (const auto& unit : search_units(r, m, inverse_closed))
    if (rng() >> 63) s.insert(s.end(), unit.begin(), unit.end());
  return ConnectionSet(r, m, std::move(s));
}

bool is_representation(const FiniteGroup& r, const Subgroup& m, const ConnectionSet& s) {
  if (r.order() > 2 && !generates_whole_group(r, s.elements())) return false;
  return is_regular_representation(r, m, s);
}

SearchReport search_representation(const FiniteGroup& r, const Subgroup& m, Mode mode,
                                   const SearchOptions& options) {
  require_searchable(r, m);
  if (options.max_trials < 1) fail(ErrorKind::Usage, "trials must be at least 1");
  SearchReport report;
  report.group = r.name();
  report.mode = mode;
  report.seed = options.seed;
  if (mode == Mode::Grr) {
    auto w = obstruction_status(r, m);
    if (w.condition != Condition::None) {
      report.status = SearchStatus::Obstructed;
      report.witness = std::move(w);
      return report;
    }
  }

  const bool inverse_closed = mode == Mode::Grr;
  const int workers = std::max(1, options.workers);
  std::atomic<long long> best{std::numeric_limits<long long>::max()};
  run_workers(workers, [&](int w) {
    for (long long t = w; t < options.max_trials; t += workers) {
      if (t > best.load()) return;
      auto rng = trial_rng(options.seed, options.pair_id, static_cast<std::uint64_t>(t));
      const ConnectionSet s = random_connection_set(r, m, rng, inverse_closed);
      if (is_representation(r, m, s)) {
        long long cur = best.load();
        while (t < cur && !best.compare_exchange_weak(cur, t)) {
        }
        return;
      }
    }
  });

  if (best.load() == std::numeric_limits<long long>::max()) {
    report.status = SearchStatus::Unresolved;
    report.trials = options.max_trials;
    return report;
  }
  const long long t = best.load();
  auto rng = trial_rng(options.seed, options.pair_id, static_cast<std::uint64_t>(t));
  const ConnectionSet s = random_connection_set(r, m, rng, inverse_closed);
  if (!is_regular_representation(r, m, s) || (inverse_closed && !is_inverse_closed(r, s.elements())))
    fail(ErrorKind::VerificationFailure, "found set does not re-verify");
  report.status = SearchStatus::Found;
  report.trials = t + 1;
  report.found_set.emplace(s.elements().begin(), s.elements().end());
  return report;
}

SearchReport exhaustive_count(const FiniteGroup& r, const Subgroup& m, Mode mode, int workers) {
  require_searchable(r, m);
  const auto units = search_units(r, m, mode == Mode::Grr);
  if (static_cast<int>(units.size()) > kExhaustiveBits)
    fail(ErrorKind::SpaceTooLarge, "exhaustive scan needs 2^" + std::to_string(units.size()) +
                                       " subsets; the cap is 2^" + std::to_string(kExhaustiveBits));
  const std::uint64_t total = std::uint64_t{1} << units.size();
  constexpr std::uint64_t kBlock = 256;
  workers = std::max(1, workers);

  std::vector<std::uint64_t> found(static_cast<std::size_t>(workers), 0);
  std::vector<std::uint64_t> first(static_cast<std::size_t>(workers), total);
  run_workers(workers, [&](int w) {
    for (std::uint64_t block = static_cast<std::uint64_t>(w) * kBlock; block < total;
         block += static_cast<std::uint64_t>(workers) * kBlock) {
      const std::uint64_t end = std::min(total, block + kBlock);
      for (std::uint64_t mask = block; mask < end; ++mask) {
        const ConnectionSet s(r, m, set_of_mask(units, mask));
        if (!is_representation(r, m, s)) continue;
        ++found[w];
        first[w] = std::min(first[w], mask);
      }
    }
  });

  SearchReport report;
  report.group = r.name();
  report.mode = mode;
  report.counts = SearchCounts{total, 0};
  std::uint64_t first_mask = total;
  for (int w = 0; w < workers; ++w) {
    report.counts->found += found[w];
    first_mask = std::min(first_mask, first[w]);
  }
  report.trials = static_cast<long long>(total);
  if (report.counts->found == 0) {
    report.status = SearchStatus::ExhaustedNone;
  } else {
    report.status = SearchStatus::Found;
    const ConnectionSet s(r, m, set_of_mask(units, first_mask));
    report.found_set.emplace(s.elements().begin(), s.elements().end());
  }
  return report;
}

CountingReport verify_counting_lemmas(const FiniteGroup& r, const Subgroup& m, bool with_automorphisms) {
  if (m.index() != 2) fail(ErrorKind::InvalidSpec, "subgroup must have index 2");
  const auto outside = m.complement();
  const int k = static_cast<int>(outside.size());
  if (k > kExhaustiveBits)
    fail(ErrorKind::SpaceTooLarge, "counting checks enumerate 2^" + std::to_string(k) + " subsets");
  const std::uint64_t total = std::uint64_t{1} << k;
  const int n = r.order();

  CountingReport report;
  std::vector<Element> s;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    s.clear();
    for (int i = 0; i < k; ++i)
      if ((mask >> i) & 1U) s.push_back(outside[i]);
    if (!generates_whole_group(r, s)) ++report.disconnected;
  }
  // count <= n * 2^{n/4}  <=>  count^4 <= n^4 * 2^n
  const BigInt lhs = pow(BigInt(report.disconnected), 4);
  const BigInt rhs = pow(BigInt(n), 4) << n;
  report.disconnected_bound_holds = lhs <= rhs;

  if (!with_automorphisms) return report;
  std::vector<int> position(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < k; ++i) position[outside[i]] = i;
  for (const GroupAutomorphism& phi : automorphism_group(r)) {
    if (phi.is_identity() || !phi.preserves(m)) continue;
    AutomorphismCount c;
    c.image.assign(phi.image().begin(), phi.image().end());
    c.orbits = complement_orbit_count(phi, m);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      std::uint64_t image = 0;
      for (int i = 0; i < k; ++i)
        if ((mask >> i) & 1U) image |= std::uint64_t{1} << position[phi(outside[i])];
      if (image == mask) ++c.invariant_sets;
    }
    if (c.invariant_sets != (std::uint64_t{1} << c.orbits)) report.orbit_count_identity_holds = false;
    if (8 * c.orbits > 3 * n) report.orbit_bound_holds = false;
    report.max_orbits = std::max(report.max_orbits, c.orbits);
    report.automorphisms.push_back(std::move(c));
  }
  return report;
}

}  // namespace bigrr
