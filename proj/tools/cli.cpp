#include "cli.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "bigrr/bounds.hpp"
#include "bigrr/catalog.hpp"
#include "bigrr/errors.hpp"
#include "bigrr/group_aut.hpp"
#include "bigrr/group_spec.hpp"
#include "bigrr/obstruction.hpp"
#include "bigrr/report_io.hpp"
#include "bigrr/search.hpp"
#include "bigrr/tables.hpp"

namespace bigrr::cli {

namespace {

struct GroupFlags {
  std::optional<int> cyclic;
  std::optional<std::string> abelian;
  std::optional<int> dihedral;
  std::optional<std::string> gen_dihedral;
  std::optional<int> dicyclic;
  std::optional<std::string> spec;
  std::optional<std::string> table_file;
  std::optional<std::string> catalog;
};

struct Config {
  GroupFlags group;
  std::optional<int> subgroup;
  bool all = false;
  std::string mode = "drr";
  long long trials = kDefaultTrials;
  std::uint64_t seed = 1;
  int workers = 1;
  int max_order = 18;
  int exhaustive_max_order = 32;
  std::string table = "both";
  std::string out;
  std::string format = "json";
  bool print_table = false;
  bool crossover = false;
  long long horizon = kCrossoverHorizon;
  std::vector<long long> n;
  bool no_automorphisms = false;
};

void add_group_flags(CLI::App* app, GroupFlags& g) {
  auto* grp = app->add_option_group("group", "group to work on (exactly one)");
  grp->add_option("--cyclic", g.cyclic, "cyclic group of order N");
  grp->add_option("--abelian", g.abelian, "abelian group, invariants as a comma list, e.g. 4,2");
  grp->add_option("--dihedral", g.dihedral, "dihedral group of order 2N");
  grp->add_option("--gen-dihedral", g.gen_dihedral, "generalized dihedral group on Ab(LIST)");
  grp->add_option("--dicyclic", g.dicyclic, "dicyclic group of order 4N");
  grp->add_option("--spec", g.spec, "group spec, e.g. 'Sdp(C8,C2,[a^3])'");
  grp->add_option("--table-file", g.table_file, "Cayley table file (.json for the JSON form)");
  grp->add_option("--catalog", g.catalog, "catalog label or name, e.g. 16#8 or SD16");
  grp->require_option(1);
}

void add_subgroup_flags(CLI::App* app, Config& c) {
  auto* sub = app->add_option("--subgroup", c.subgroup, "index into the sorted index-2 subgroups");
  auto* all = app->add_flag("--all", c.all, "every index-2 subgroup");
  sub->excludes(all);
}

void add_output_flags(CLI::App* app, Config& c, bool csv) {
  app->add_option("--out", c.out, "write the report to a file instead of stdout");
  if (csv)
    app->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
}

void add_search_flags(CLI::App* app, Config& c, bool random) {
  app->add_option("--mode", c.mode, "drr or grr")->check(CLI::IsMember({"drr", "grr"}));
  if (random) {
    app->add_option("--trials", c.trials, "random connection sets per pair")->check(CLI::PositiveNumber);
    app->add_option("--seed", c.seed, "master seed");
  }
  app->add_option("--workers", c.workers, "worker threads (default: BIGRR_WORKERS or 1)")
      ->check(CLI::Range(1, 256));
}

struct NamedGroup {
  FiniteGroup group;
  std::string label;
};

NamedGroup resolve_group(const GroupFlags& f) {
  auto built = [](const std::string& spec) { return build_group(parse_group_spec(spec)); };
  if (f.catalog) {
    const CatalogEntry* e = find_catalog_entry(*f.catalog);
    if (!e) fail(ErrorKind::Usage, "no catalog group '" + *f.catalog + "'");
    return {build_catalog_group(*e), e->label};
  }
  if (f.cyclic) return {built("C(" + std::to_string(*f.cyclic) + ")"), ""};
  if (f.abelian) return {built("Ab(" + *f.abelian + ")"), ""};
  if (f.dihedral) return {built("Dih(C(" + std::to_string(*f.dihedral) + "))"), ""};
  if (f.gen_dihedral) return {built("Dih(Ab(" + *f.gen_dihedral + "))"), ""};
  if (f.dicyclic) return {built("Dic(" + std::to_string(*f.dicyclic) + ")"), ""};
  if (f.spec) return {built(*f.spec), ""};
  return {load_cayley_table(*f.table_file), ""};
}

std::vector<int> selected_subgroups(const Config& c, int count) {
  if (count == 0) fail(ErrorKind::Usage, "the group has no index-2 subgroup");
  std::vector<int> out;
  if (c.all) {
    for (int i = 0; i < count; ++i) out.push_back(i);
    return out;
  }
  const int k = c.subgroup.value_or(0);
  if (k < 0 || k >= count)
    fail(ErrorKind::Usage, "subgroup index " + std::to_string(k) + " out of range (" + std::to_string(count) +
                               " index-2 subgroups)");
  out.push_back(k);
  return out;
}

// A single object for one subgroup, an array for --all.
Json one_or_many(const Config& c, std::vector<Json> items) {
  if (!c.all && items.size() == 1) return std::move(items.front());
  Json arr = Json::array();
  for (auto& j : items) arr.push_back(std::move(j));
  return arr;
}

Json group_summary(const FiniteGroup& g, const std::string& label) {
  std::map<int, int> census;
  for (int x = 0; x < g.order(); ++x) ++census[g.order_of(x)];
  Json orders = Json::object();
  for (auto [k, v] : census) orders[std::to_string(k)] = v;
  Json j;
  j["name"] = g.name();
  j["label"] = label;
  j["order"] = g.order();
  j["abelian"] = g.is_abelian();
  j["center_order"] = center(g).order();
  j["derived_order"] = derived_subgroup(g).order();
  j["element_orders"] = std::move(orders);
  j["generators"] = std::vector<Element>(g.generators().begin(), g.generators().end());
  j["index2_subgroups"] = index2_subgroups(g).size();
  return j;
}

std::string cmd_group(const Config& c) {
  const auto [g, label] = resolve_group(c.group);
  if (c.print_table) return format_cayley_table(g);
  return group_summary(g, label).dump(2) + "\n";
}

std::string cmd_subgroups(const Config& c) {
  const auto [g, label] = resolve_group(c.group);
  const auto subs = index2_subgroups(g);
  Json arr = Json::array();
  for (std::size_t i = 0; i < subs.size(); ++i) {
    Json j = subgroup_json(subs[i], static_cast<int>(i));
    j["abelian"] = is_abelian(g, subs[i]);
    j["generalized_dihedral"] = is_generalized_dihedral_on(g, subs[i]);
    arr.push_back(std::move(j));
  }
  Json j;
  j["group"] = g.name();
  j["label"] = label;
  j["order"] = g.order();
  j["subgroups"] = std::move(arr);
  return j.dump(2) + "\n";
}

std::string cmd_obstruct(const Config& c) {
  const auto [g, label] = resolve_group(c.group);
  const auto subs = index2_subgroups(g);
  std::vector<Json> items;
  for (int k : selected_subgroups(c, static_cast<int>(subs.size()))) {
    const Subgroup& m = subs[k];
    const ObstructionWitness w = obstruction_status(g, m);
    Json j;
    j["group"] = g.name();
    j["label"] = label;
    j["subgroup"] = k;
    j["members"] = std::vector<Element>(m.members().begin(), m.members().end());
    j["witness"] = to_json(w);
    if (w.condition != Condition::None) {
      const GroupAutomorphism phi = build_obstruction_automorphism(g, m, w);
      j["automorphism"] = std::vector<Element>(phi.image().begin(), phi.image().end());
    } else {
      j["automorphism"] = nullptr;
    }
    if (g.order() <= kAutomorphismCap)
      j["half_inverting_exists"] = find_half_inverting_automorphism(g, m).has_value();
    else
      j["half_inverting_exists"] = nullptr;
    items.push_back(std::move(j));
  }
  return one_or_many(c, std::move(items)).dump(2) + "\n";
}

std::string render_reports(const Config& c, const std::vector<SearchReport>& reports) {
  if (c.format == "csv") {
    std::string s = csv_header() + "\n";
    for (const auto& r : reports) s += to_csv_row(r) + "\n";
    return s;
  }
  std::vector<Json> items;
  for (const auto& r : reports) items.push_back(to_json(r));
  return one_or_many(c, std::move(items)).dump(2) + "\n";
}

std::string cmd_search(const Config& c, bool exhaustive) {
  const auto [g, label] = resolve_group(c.group);
  const auto subs = index2_subgroups(g);
  const Mode mode = parse_mode(c.mode);
  std::vector<SearchReport> reports;
  for (int k : selected_subgroups(c, static_cast<int>(subs.size()))) {
    SearchReport r;
    if (exhaustive) {
      r = exhaustive_count(g, subs[k], mode, c.workers);
    } else {
      SearchOptions o;
      o.max_trials = c.trials;
      o.seed = c.seed;
      o.pair_id = static_cast<std::uint64_t>(k);
      o.workers = c.workers;
      r = search_representation(g, subs[k], mode, o);
    }
    r.label = label;
    r.subgroup = k;
    reports.push_back(std::move(r));
  }
  return render_reports(c, reports);
}

std::string cmd_tables(const Config& c, bool& agrees) {
  TablesOptions o;
  o.max_order = c.max_order;
  o.trials = c.trials;
  o.seed = c.seed;
  o.workers = c.workers;
  o.exhaustive_max_order = c.exhaustive_max_order;
  o.table1 = c.table != "2";
  o.table2 = c.table != "1";
  const TablesReport report = reproduce_tables(o);
  agrees = report.agrees;
  if (c.format == "csv") {
    std::vector<SearchReport> rows;
    for (const auto& p : report.pairs) {
      if (p.drr) rows.push_back(*p.drr);
      if (p.grr) rows.push_back(*p.grr);
      if (p.grr_exhaustive) rows.push_back(*p.grr_exhaustive);
    }
    std::string s = csv_header() + "\n";
    for (const auto& r : rows) s += to_csv_row(r) + "\n";
    return s;
  }
  return to_json(report).dump(2) + "\n";
}

std::string cmd_bounds(const Config& c) {
  if (c.crossover) return Json(bound_crossover(c.horizon)).dump() + "\n";
  if (c.n.empty()) fail(ErrorKind::Usage, "bounds needs --n or --crossover");
  Json arr = Json::array();
  for (long long n : c.n) arr.push_back(to_json(drr_lower_bound(n)));
  return arr.dump(2) + "\n";
}

std::string cmd_verify(const Config& c) {
  const auto [g, label] = resolve_group(c.group);
  const auto subs = index2_subgroups(g);
  std::vector<Json> items;
  for (int k : selected_subgroups(c, static_cast<int>(subs.size()))) {
    Json j;
    j["group"] = g.name();
    j["label"] = label;
    j["subgroup"] = k;
    const CountingReport r = verify_counting_lemmas(g, subs[k], !c.no_automorphisms);
    const Json counts = to_json(r);
    for (const auto& [key, value] : counts.items()) j[key] = value;
    items.push_back(std::move(j));
  }
  return one_or_many(c, std::move(items)).dump(2) + "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bipartite DRR/GRR classification of index-2 subgroup pairs", "bigrr"};
  app.require_subcommand(1);
  Config c;
  c.workers = default_workers();

  auto* group = app.add_subcommand("group", "build, validate and describe a group");
  add_group_flags(group, c.group);
  group->add_flag("--print-table", c.print_table, "print the Cayley table in the text file format");
  add_output_flags(group, c, false);

  auto* subgroups = app.add_subcommand("subgroups", "list the index-2 subgroups");
  add_group_flags(subgroups, c.group);
  add_output_flags(subgroups, c, false);

  auto* obstruct = app.add_subcommand("obstruct", "test the obstruction conditions and build the automorphism");
  add_group_flags(obstruct, c.group);
  add_subgroup_flags(obstruct, c);
  add_output_flags(obstruct, c, false);

  auto* search = app.add_subcommand("search", "random search for a bipartite DRR or GRR");
  add_group_flags(search, c.group);
  add_subgroup_flags(search, c);
  add_search_flags(search, c, true);
  add_output_flags(search, c, true);

  auto* count = app.add_subcommand("count", "exhaustive count of bipartite DRRs or GRRs");
  add_group_flags(count, c.group);
  add_subgroup_flags(count, c);
  add_search_flags(count, c, false);
  add_output_flags(count, c, true);

  auto* tables = app.add_subcommand("tables", "reproduce the DRR and GRR exception tables");
  tables->add_option("--max-order", c.max_order, "largest group order to classify")->check(CLI::Range(1, 128));
  tables->add_option("--exhaustive-max-order", c.exhaustive_max_order,
                     "largest order confirmed by exhaustive scans");
  tables->add_option("--table", c.table, "1, 2 or both")->check(CLI::IsMember({"1", "2", "both"}));
  tables->add_option("--trials", c.trials, "random connection sets per pair")->check(CLI::PositiveNumber);
  tables->add_option("--seed", c.seed, "master seed");
  tables->add_option("--workers", c.workers, "worker threads")->check(CLI::Range(1, 256));
  add_output_flags(tables, c, true);

  auto* bounds = app.add_subcommand("bounds", "evaluate the DRR-count lower bound");
  bounds->add_option("--n", c.n, "even group order (repeatable)");
  bounds->add_flag("--crossover", c.crossover, "smallest order from which the bound stays positive");
  bounds->add_option("--horizon", c.horizon, "scan limit for --crossover");
  add_output_flags(bounds, c, false);

  auto* verify = app.add_subcommand("verify", "exhaustive counting-lemma checks");
  add_group_flags(verify, c.group);
  add_subgroup_flags(verify, c);
  verify->add_flag("--no-automorphisms", c.no_automorphisms, "skip the invariant-subset checks");
  add_output_flags(verify, c, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "bigrr: " << e.what() << "\n";
    return kUsage;
  }

  int status = kOk;
  std::string payload;
  try {
    if (group->parsed()) payload = cmd_group(c);
    else if (subgroups->parsed()) payload = cmd_subgroups(c);
    else if (obstruct->parsed()) payload = cmd_obstruct(c);
    else if (search->parsed()) payload = cmd_search(c, false);
    else if (count->parsed()) payload = cmd_search(c, true);
    else if (tables->parsed()) {
      bool agrees = true;
      payload = cmd_tables(c, agrees);
      if (!agrees) status = kDisagreement;
    } else if (bounds->parsed()) payload = cmd_bounds(c);
    else if (verify->parsed()) payload = cmd_verify(c);
  } catch (const Error& e) {
    err << "bigrr: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return e.is_cap() ? kCap : kUsage;
  }

  if (c.out.empty()) {
    out << payload;
  } else {
    std::ofstream file(c.out, std::ios::binary);
    if (!file) {
      err << "bigrr: cannot write " << c.out << "\n";
      return kUsage;
    }
    file << payload;
  }
  if (status == kDisagreement) err << "bigrr: tables disagree with the expected rows\n";
  return status;
}

}  // namespace bigrr::cli
