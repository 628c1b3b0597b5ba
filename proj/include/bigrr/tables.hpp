#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bigrr/catalog.hpp"
#include "bigrr/obstruction.hpp"
#include "bigrr/search.hpp"

namespace bigrr {

struct Table1Row {
  std::string label;
  std::string selector;
  std::string written;  // the subgroup in presentation notation
};

/// Expected exception rows, read from data/tables.expected.
struct ExpectedTables {
  std::vector<Table1Row> table1;
  /// order -> SmallGroups numbers of groups without a bipartite GRR.
  std::map<int, std::vector<int>> table2;

  const Table1Row* table1_row(std::string_view label) const;
  bool table2_lists(const CatalogEntry& e) const;
};

const ExpectedTables& expected_tables();

/// Indices into index2_subgroups(g) picked by a selector: `any`,
/// `eq(w,...)` or `contains(w,...)`, words in g's standard generators.
std::vector<int> select_subgroups(const FiniteGroup& g, std::string_view selector);

struct TablesOptions {
  int max_order = 18;
  long long trials = kDefaultTrials;
  std::uint64_t seed = 1;
  int workers = 1;
  /// Pairs above this order get randomized evidence instead of an
  /// exhaustive scan.
  int exhaustive_max_order = 32;
  bool table1 = true;
  bool table2 = true;
};

struct PairResult {
  const CatalogEntry* entry = nullptr;
  int subgroup = 0;
  std::vector<Element> members;
  bool table1_listed = false;
  std::optional<SearchReport> drr;
  ObstructionWitness obstruction;
  std::optional<SearchReport> grr;
  std::optional<SearchReport> grr_exhaustive;
};

enum class Evidence { Exhaustive, Randomized };

struct Table1Check {
  std::string label;
  std::string name;
  std::string selector;
  std::string written;
  int pairs = 0;
  Evidence evidence = Evidence::Exhaustive;
  bool confirmed = false;
};

struct Table2Check {
  std::string label;
  std::string name;
  bool listed = false;
  /// Unobstructed subgroup indices with no GRR (exhaustive, or randomized
  /// above the exhaustive order).
  std::vector<int> without_grr;
  Evidence evidence = Evidence::Exhaustive;
  bool agrees = false;
};

struct TablesReport {
  TablesOptions options;
  std::vector<PairResult> pairs;
  std::vector<Table1Check> table1;
  std::vector<Table2Check> table2;
  /// Unlisted pairs (label, subgroup) without a DRR found by random search.
  std::vector<std::pair<std::string, int>> table1_unexpected;
  bool agrees = true;
};

/// Classifies every catalog pair with |R| <= max_order and compares against
/// the expected rows. Table 1 groups above exhaustive_max_order are checked
/// by random search only, which is evidence and not a proof.
TablesReport reproduce_tables(const TablesOptions& options);

std::string_view to_string(Evidence e);

}  // namespace bigrr
