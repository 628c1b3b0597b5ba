#pragma once

#include <string>

#include <json.hpp>

#include "bigrr/bounds.hpp"
#include "bigrr/obstruction.hpp"
#include "bigrr/search.hpp"
#include "bigrr/tables.hpp"

namespace bigrr {

using Json = nlohmann::ordered_json;

Json to_json(const ObstructionWitness& w);
Json to_json(const SearchReport& r);
Json to_json(const CountingReport& r);
Json to_json(const BoundValue& b);
Json to_json(const TablesReport& r);
Json subgroup_json(const Subgroup& m, int index);

/// group,label,subgroup,mode,status,trials,seed,found_set
std::string csv_header();
/// found_set is space-separated inside the field.
std::string to_csv_row(const SearchReport& r);

}  // namespace bigrr
