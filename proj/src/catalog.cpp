#include "bigrr/catalog.hpp"

#include <cctype>
#include <sstream>

#include "bigrr/embedded_data.hpp"
#include "bigrr/errors.hpp"
#include "bigrr/group_spec.hpp"

namespace bigrr {

std::vector<std::string> split_fields(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = line.find(sep, start);
    std::string_view field = line.substr(start, end == std::string_view::npos ? end : end - start);
    while (!field.empty() && std::isspace(static_cast<unsigned char>(field.front()))) field.remove_prefix(1);
    while (!field.empty() && std::isspace(static_cast<unsigned char>(field.back()))) field.remove_suffix(1);
    out.emplace_back(field);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

namespace {

std::vector<CatalogEntry> parse_catalog(std::string_view text) {
  std::vector<CatalogEntry> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto f = split_fields(line);
    if (f.size() != 3) fail(ErrorKind::ParseError, "catalog line needs three fields: " + line);
    CatalogEntry e;
    e.label = f[0];
    e.name = f[1];
    e.spec = f[2];
    const auto hash = e.label.find('#');
    if (hash == std::string::npos) fail(ErrorKind::ParseError, "catalog label needs order#number: " + line);
    e.order = std::stoi(e.label.substr(0, hash));
    e.number = std::stoi(e.label.substr(hash + 1));
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = parse_catalog(embedded::kCatalogText);
  return entries;
}

const CatalogEntry* find_catalog_entry(std::string_view key) {
  for (const auto& e : catalog())
    if (e.label == key || e.name == key) return &e;
  return nullptr;
}

std::vector<const CatalogEntry*> catalog_up_to(int max_order) {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : catalog())
    if (e.order <= max_order) out.push_back(&e);
  return out;
}

FiniteGroup build_catalog_group(const CatalogEntry& entry) {
  FiniteGroup g = build_group(parse_group_spec(entry.spec));
  if (g.order() != entry.order)
    fail(ErrorKind::VerificationFailure, "catalog entry " + entry.label + " builds a group of order " +
                                             std::to_string(g.order()));
  g.set_name(entry.name);
  return g;
}

}  // namespace bigrr
