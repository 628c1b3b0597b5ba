#include "bigrr/report_io.hpp"

#include <sstream>

namespace bigrr {

namespace {

Json ids(std::span<const Element> xs) { return Json(std::vector<Element>(xs.begin(), xs.end())); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json to_json(const ObstructionWitness& w) {
  Json j;
  j["condition"] = std::string(to_string(w.condition));
  j["z"] = w.z ? ids(w.z->members()) : Json(nullptr);
  j["a"] = w.a ? Json(*w.a) : Json(nullptr);
  j["m"] = w.m ? Json(*w.m) : Json(nullptr);
  Json holding = Json::array();
  for (Condition c : w.also_holding) holding.push_back(std::string(to_string(c)));
  j["also_holding"] = std::move(holding);
  return j;
}

Json to_json(const SearchReport& r) {
  Json j;
  j["group"] = r.group;
  j["label"] = r.label;
  j["subgroup"] = r.subgroup;
  j["mode"] = std::string(to_string(r.mode));
  j["status"] = std::string(to_string(r.status));
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  j["found_set"] = r.found_set ? ids(*r.found_set) : Json(nullptr);
  if (r.counts)
    j["counts"] = Json{{"scanned", r.counts->scanned}, {"found", r.counts->found}};
  else
    j["counts"] = nullptr;
  return j;
}

Json to_json(const CountingReport& r) {
  Json j;
  j["disconnected"] = r.disconnected;
  j["disconnected_bound_holds"] = r.disconnected_bound_holds;
  j["automorphisms_checked"] = r.automorphisms.size();
  j["orbit_count_identity_holds"] = r.orbit_count_identity_holds;
  j["orbit_bound_holds"] = r.orbit_bound_holds;
  j["max_orbits"] = r.max_orbits;
  return j;
}

Json to_json(const BoundValue& b) {
  Json j;
  j["n"] = b.n;
  j["sign"] = b.sign;
  j["exact_value"] = b.exact_value ? Json(b.exact_value->str()) : Json(nullptr);
  return j;
}

Json subgroup_json(const Subgroup& m, int index) {
  Json j;
  j["index"] = index;
  j["order"] = m.order();
  j["members"] = ids(m.members());
  return j;
}

Json to_json(const TablesReport& r) {
  Json j;
  j["max_order"] = r.options.max_order;
  j["trials"] = r.options.trials;
  j["seed"] = r.options.seed;
  j["agrees"] = r.agrees;
  Json t1 = Json::array();
  for (const auto& c : r.table1)
    t1.push_back(Json{{"label", c.label},
                      {"name", c.name},
                      {"selector", c.selector},
                      {"written", c.written},
                      {"pairs", c.pairs},
                      {"evidence", std::string(to_string(c.evidence))},
                      {"confirmed", c.confirmed}});
  j["table1"] = std::move(t1);
  Json unexpected = Json::array();
  for (const auto& [label, index] : r.table1_unexpected)
    unexpected.push_back(Json{{"label", label}, {"subgroup", index}});
  j["table1_unexpected"] = std::move(unexpected);
  Json t2 = Json::array();
  for (const auto& c : r.table2)
    t2.push_back(Json{{"label", c.label},
                      {"name", c.name},
                      {"listed", c.listed},
                      {"without_grr", c.without_grr},
                      {"evidence", std::string(to_string(c.evidence))},
                      {"agrees", c.agrees}});
  j["table2"] = std::move(t2);
  Json pairs = Json::array();
  for (const auto& p : r.pairs) {
    Json q;
    q["label"] = p.entry->label;
    q["name"] = p.entry->name;
    q["order"] = p.entry->order;
    q["subgroup"] = p.subgroup;
    q["members"] = p.members;
    q["table1_listed"] = p.table1_listed;
    q["drr"] = p.drr ? to_json(*p.drr) : Json(nullptr);
    q["obstruction"] = r.options.table2 ? to_json(p.obstruction) : Json(nullptr);
    q["grr"] = p.grr ? to_json(*p.grr) : Json(nullptr);
    q["grr_exhaustive"] = p.grr_exhaustive ? to_json(*p.grr_exhaustive) : Json(nullptr);
    pairs.push_back(std::move(q));
  }
  j["pairs"] = std::move(pairs);
  return j;
}

std::string csv_header() { return "group,label,subgroup,mode,status,trials,seed,found_set"; }

std::string to_csv_row(const SearchReport& r) {
  std::ostringstream set;
  if (r.found_set)
    for (std::size_t i = 0; i < r.found_set->size(); ++i) set << (i ? " " : "") << (*r.found_set)[i];
  std::ostringstream out;
  out << csv_field(r.group) << "," << csv_field(r.label) << "," << r.subgroup << "," << to_string(r.mode) << ","
      << to_string(r.status) << "," << r.trials << "," << r.seed << "," << set.str();
  return out.str();
}

}  // namespace bigrr
