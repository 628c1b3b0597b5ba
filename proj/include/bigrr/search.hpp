#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "bigrr/cayley.hpp"
#include "bigrr/group.hpp"
#include "bigrr/group_aut.hpp"
#include "bigrr/obstruction.hpp"

namespace bigrr {

enum class Mode { Drr, Grr };
enum class SearchStatus { Obstructed, Found, ExhaustedNone, Unresolved };

std::string_view to_string(Mode m);
std::string_view to_string(SearchStatus s);
Mode parse_mode(std::string_view text);

inline constexpr int kSearchCap = 128;
/// Largest number of free bits (elements, or inverse-pair classes in GRR
/// mode) an exhaustive scan accepts.
inline constexpr int kExhaustiveBits = 24;
inline constexpr long long kDefaultTrials = 10000;

struct SearchCounts {
  std::uint64_t scanned = 0;
  std::uint64_t found = 0;
};

struct SearchReport {
  std::string group;
  std::string label;
  int subgroup = 0;
  Mode mode = Mode::Drr;
  SearchStatus status = SearchStatus::Unresolved;
  /// Trials drawn: the 1-based index of the successful trial, or max_trials.
  long long trials = 0;
  std::uint64_t seed = 0;
  std::optional<ObstructionWitness> witness;
  /// Random mode: the successful set. Exhaustive mode: the first
  /// representation in enumeration order.
  std::optional<std::vector<Element>> found_set;
  std::optional<SearchCounts> counts;
};

struct SearchOptions {
  long long max_trials = kDefaultTrials;
  std::uint64_t seed = 1;
  /// Stream id of the pair; trial t of pair p uses the stream (seed, p, t).
  std::uint64_t pair_id = 0;
  int workers = 1;
};

/// Generator for trial `trial` of pair `pair` under master seed `seed`.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t pair, std::uint64_t trial);

/// {s, s^{-1}} classes of R \ M, ordered by smallest member.
std::vector<std::vector<Element>> inverse_pair_classes(const FiniteGroup& r, const Subgroup& m);

/// Each element of R \ M (each inverse-pair class when `inverse_closed`) is
/// included when the top bit of the next draw is set.
ConnectionSet random_connection_set(const FiniteGroup& r, const Subgroup& m, std::mt19937_64& rng,
                                    bool inverse_closed);

/// is_regular_representation, short-circuited by the <S> = R test when
/// |R| > 2 (a disconnected Cayley digraph on more than two vertices has
/// more automorphisms than vertices).
bool is_representation(const FiniteGroup& r, const Subgroup& m, const ConnectionSet& s);

/// Random search. In GRR mode an obstructed pair is reported without
/// sampling. Workers only change the running time.
SearchReport search_representation(const FiniteGroup& r, const Subgroup& m, Mode mode,
                                   const SearchOptions& options);

/// Scans every subset of R \ M (every inverse-closed one in GRR mode) in
/// ascending bitmask order. Throws SpaceTooLarge past kExhaustiveBits.
SearchReport exhaustive_count(const FiniteGroup& r, const Subgroup& m, Mode mode, int workers = 1);

struct AutomorphismCount {
  std::vector<Element> image;
  int orbits = 0;                 // l
  std::uint64_t invariant_sets = 0;  // exhaustive count of S with S^phi = S
};

struct CountingReport {
  /// S subset of R \ M with <S> != R, counted exhaustively.
  std::uint64_t disconnected = 0;
  /// disconnected <= 2^{|R|/4 + log2 |R|}, checked exactly.
  bool disconnected_bound_holds = false;
  /// Non-identity automorphisms with M^phi = M.
  std::vector<AutomorphismCount> automorphisms;
  /// Every invariant_sets equals 2^orbits.
  bool orbit_count_identity_holds = true;
  /// Every orbits <= 3|R|/8.
  bool orbit_bound_holds = true;
  int max_orbits = 0;
};

/// Exhaustive checks of the disconnected-subset bound and of the 2^l count of
/// phi-invariant subsets. The automorphism part needs |R| <= kAutomorphismCap;
/// both need |R \ M| <= kExhaustiveBits.
CountingReport verify_counting_lemmas(const FiniteGroup& r, const Subgroup& m, bool with_automorphisms = true);

/// Default worker count: BIGRR_WORKERS when set and positive, else 1.
int default_workers();

}  // namespace bigrr
