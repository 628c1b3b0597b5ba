#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bigrr/group.hpp"

namespace bigrr {

/// One group of the built-in catalog: all groups of even order up to 30, a
/// selection of order 32 and C2^6. `label` is "order#number" in the
/// SmallGroups numbering, kept as a label only.
struct CatalogEntry {
  std::string label;
  std::string name;
  std::string spec;
  int order = 0;
  int number = 0;
};

const std::vector<CatalogEntry>& catalog();
/// Looks up by label ("16#13") or by name ("SD16"); nullptr when absent.
const CatalogEntry* find_catalog_entry(std::string_view key);
std::vector<const CatalogEntry*> catalog_up_to(int max_order);
/// Builds the group and names it after the entry.
FiniteGroup build_catalog_group(const CatalogEntry& entry);

/// Splits "a | b | c" into trimmed fields.
std::vector<std::string> split_fields(std::string_view line, char sep = '|');

}  // namespace bigrr
