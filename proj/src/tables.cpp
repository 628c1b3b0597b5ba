#include "bigrr/tables.hpp"

#include <algorithm>
#include <sstream>

#include "bigrr/embedded_data.hpp"
#include "bigrr/errors.hpp"
#include "bigrr/group_spec.hpp"

namespace bigrr {

namespace {

ExpectedTables parse_tables(std::string_view text) {
  ExpectedTables t;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto f = split_fields(line);
    if (f[0] == "table1" && f.size() == 4) {
      t.table1.push_back({f[1], f[2], f[3]});
    } else if (f[0] == "table2" && f.size() == 3) {
      auto& numbers = t.table2[std::stoi(f[1])];
      std::istringstream nums(f[2]);
      for (int x; nums >> x;) numbers.push_back(x);
    } else {
      fail(ErrorKind::ParseError, "bad expected-table line: " + line);
    }
  }
  return t;
}

std::vector<std::string> selector_words(std::string_view selector, std::string_view head) {
  selector.remove_prefix(head.size());
  if (selector.size() < 2 || selector.front() != '(' || selector.back() != ')')
    fail(ErrorKind::ParseError, "malformed selector '" + std::string(selector) + "'");
  return split_fields(selector.substr(1, selector.size() - 2), ',');
}

}  // namespace

const Table1Row* ExpectedTables::table1_row(std::string_view label) const {
  for (const auto& row : table1)
    if (row.label == label) return &row;
  return nullptr;
}

bool ExpectedTables::table2_lists(const CatalogEntry& e) const {
  const auto it = table2.find(e.order);
  if (it == table2.end()) return false;
  return std::find(it->second.begin(), it->second.end(), e.number) != it->second.end();
}

const ExpectedTables& expected_tables() {
  static const ExpectedTables tables = parse_tables(embedded::kTablesText);
  return tables;
}

std::string_view to_string(Evidence e) { return e == Evidence::Exhaustive ? "exhaustive" : "randomized"; }

std::vector<int> select_subgroups(const FiniteGroup& g, std::string_view selector) {
  const auto subgroups = index2_subgroups(g);
  std::vector<int> out;
  if (selector == "any") {
    for (std::size_t i = 0; i < subgroups.size(); ++i) out.push_back(static_cast<int>(i));
    return out;
  }
  const bool eq = selector.starts_with("eq");
  if (!eq && !selector.starts_with("contains"))
    fail(ErrorKind::ParseError, "unknown selector '" + std::string(selector) + "'");
  std::vector<Element> elements;
  for (const auto& w : selector_words(selector, eq ? "eq" : "contains"))
    elements.push_back(evaluate_word(g, g.generators(), w));
  const Subgroup generated = subgroup_generated(g, elements);
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    const Subgroup& m = subgroups[i];
    const bool match = eq ? m == generated
                          : std::all_of(elements.begin(), elements.end(), [&](Element x) { return m.contains(x); });
    if (match) out.push_back(static_cast<int>(i));
  }
  return out;
}

TablesReport reproduce_tables(const TablesOptions& options) {
  const ExpectedTables& expected = expected_tables();
  TablesReport report;
  report.options = options;
  SearchOptions search;
  search.max_trials = options.trials;
  search.seed = options.seed;
  search.workers = options.workers;

  for (const CatalogEntry* entry : catalog_up_to(options.max_order)) {
    const FiniteGroup g = build_catalog_group(*entry);
    const auto subgroups = index2_subgroups(g);
    if (subgroups.empty()) continue;
    const bool exhaustive = entry->order <= options.exhaustive_max_order;
    const Table1Row* row = expected.table1_row(entry->label);
    std::vector<int> listed;
    if (row) listed = select_subgroups(g, row->selector);

    Table1Check check1;
    Table2Check check2;
    if (row) check1 = {entry->label, entry->name, row->selector, row->written,
                       static_cast<int>(listed.size()),
                       exhaustive ? Evidence::Exhaustive : Evidence::Randomized, !listed.empty()};
    check2.label = entry->label;
    check2.name = entry->name;
    check2.listed = expected.table2_lists(*entry);
    check2.evidence = exhaustive ? Evidence::Exhaustive : Evidence::Randomized;
    bool every_unobstructed_found = true;

    for (std::size_t i = 0; i < subgroups.size(); ++i) {
      const Subgroup& m = subgroups[i];
      PairResult pair;
      pair.entry = entry;
      pair.subgroup = static_cast<int>(i);
      pair.members.assign(m.members().begin(), m.members().end());
      pair.table1_listed = std::find(listed.begin(), listed.end(), static_cast<int>(i)) != listed.end();
      search.pair_id = i;

      if (options.table1) {
        if (pair.table1_listed && exhaustive) {
          pair.drr = exhaustive_count(g, m, Mode::Drr, options.workers);
          if (pair.drr->counts->found != 0) check1.confirmed = false;
        } else {
          pair.drr = search_representation(g, m, Mode::Drr, search);
          const bool found = pair.drr->status == SearchStatus::Found;
          if (pair.table1_listed && found) check1.confirmed = false;
          if (!pair.table1_listed && !found) report.table1_unexpected.emplace_back(entry->label, static_cast<int>(i));
        }
        pair.drr->label = entry->label;
        pair.drr->subgroup = static_cast<int>(i);
      }

      if (options.table2) {
        pair.obstruction = obstruction_status(g, m);
        if (pair.obstruction.condition == Condition::None) {
          pair.grr = search_representation(g, m, Mode::Grr, search);
          pair.grr->label = entry->label;
          pair.grr->subgroup = static_cast<int>(i);
          if (pair.grr->status != SearchStatus::Found) {
            every_unobstructed_found = false;
            if (exhaustive) {
              pair.grr_exhaustive = exhaustive_count(g, m, Mode::Grr, options.workers);
              pair.grr_exhaustive->label = entry->label;
              pair.grr_exhaustive->subgroup = static_cast<int>(i);
              if (pair.grr_exhaustive->counts->found == 0) check2.without_grr.push_back(static_cast<int>(i));
            } else {
              check2.without_grr.push_back(static_cast<int>(i));
            }
          }
        }
      }
      report.pairs.push_back(std::move(pair));
    }

    if (options.table1 && row) {
      report.table1.push_back(check1);
      if (!check1.confirmed) report.agrees = false;
    }
    if (options.table2) {
      check2.agrees = check2.listed ? !check2.without_grr.empty() : every_unobstructed_found;
      if (!check2.agrees) report.agrees = false;
      report.table2.push_back(std::move(check2));
    }
  }
  if (!report.table1_unexpected.empty()) report.agrees = false;
  return report;
}

}  // namespace bigrr
