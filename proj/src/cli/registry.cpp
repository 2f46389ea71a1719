#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>

#include "cgme/cli.hpp"
#include "cgme/errors.hpp"
#include "json.hpp"

#ifndef CGME_REGISTRY_DEFAULT
#define CGME_REGISTRY_DEFAULT "discrepancies.json"
#endif

namespace cgme {

namespace {
using nlohmann::json;
}

std::string default_registry_path() {
  if (const char* env = std::getenv("CGME_REGISTRY"); env && *env) return env;
  return CGME_REGISTRY_DEFAULT;
}

std::vector<DiscrepancyEntry> load_registry(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open discrepancy registry '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw config_error("registry '" + path + "' is not valid JSON: " + e.what());
  }
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (it.key() != "schema_version" && it.key() != "entries")
      throw config_error("unknown key '" + it.key() + "' in registry");

  std::vector<DiscrepancyEntry> out;
  if (!doc.contains("entries")) return out;
  for (const json& e : doc["entries"]) {
    for (auto it = e.begin(); it != e.end(); ++it) {
      static const std::set<std::string> allowed = {"id", "formulas", "measured_factor",
                                                    "tolerance", "note"};
      if (!allowed.count(it.key()))
        throw config_error("unknown key '" + it.key() + "' in registry entry");
    }
    DiscrepancyEntry d;
    d.id = e.at("id").get<std::string>();
    for (const json& f : e.at("formulas")) d.formulas.push_back(f.get<std::string>());
    d.measured_factor = e.at("measured_factor").get<double>();
    d.tolerance = e.at("tolerance").get<double>();
    if (e.contains("note")) d.note = e["note"].get<std::string>();
    out.push_back(std::move(d));
  }
  return out;
}

const DiscrepancyEntry* find_registry_entry(const std::vector<DiscrepancyEntry>& reg,
                                            const std::string& formula, double factor) {
  for (const auto& e : reg) {
    for (const auto& f : e.formulas) {
      if (f == formula && std::abs(factor - e.measured_factor) <= e.tolerance)
        return &e;
    }
  }
  return nullptr;
}

}  // namespace cgme
