#include "groupcx/catalog.hpp"

#include <algorithm>
#include <unordered_set>

namespace groupcx {

extern const char* kDefaultCatalogJson;  // generated from data/catalog.json

bool CatalogEntry::has_tag(const std::string& t) const {
  return std::find(tags.begin(), tags.end(), t) != tags.end();
}

namespace {

const std::unordered_set<std::string> kKnownTags = {
    "abelian_p", "eppo_expected", "coincidence_expected", "counterexample",
    "slow"};

CatalogScope scope_from_string(const std::string& s) {
  if (s == "full") return CatalogScope::Full;
  if (s == "whiston") return CatalogScope::WhistonOnly;
  if (s == "gk_graph") return CatalogScope::GkGraphOnly;
  throw ValidationError(ValidationError::Kind::BadSpec,
                        "catalog: unknown scope " + s);
}

}  // namespace

std::vector<CatalogEntry> load_catalog(const Json& j) {
  if (!j.is_array())
    throw ValidationError(ValidationError::Kind::BadSpec,
                          "catalog: expected a JSON array");
  std::vector<CatalogEntry> out;
  std::unordered_set<std::string> names;
  for (const auto& item : j) {
    CatalogEntry e;
    e.name = item.at("name").get<std::string>();
    if (!names.insert(e.name).second)
      throw ValidationError(ValidationError::Kind::BadSpec,
                            "catalog: duplicate name " + e.name);
    e.spec = group_spec_from_json(item.at("spec"));
    if (item.contains("tags"))
      e.tags = item.at("tags").get<std::vector<std::string>>();
    for (const auto& t : e.tags)
      if (!kKnownTags.count(t))
        throw ValidationError(ValidationError::Kind::BadSpec,
                              "catalog: unknown tag " + t);
    if (item.contains("scope"))
      e.scope = scope_from_string(item.at("scope").get<std::string>());
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CatalogEntry> load_catalog_text(const std::string& text) {
  return load_catalog(Json::parse(text));
}

const std::vector<CatalogEntry>& default_catalog() {
  static const std::vector<CatalogEntry> catalog =
      load_catalog_text(kDefaultCatalogJson);
  return catalog;
}

const CatalogEntry* find_entry(const std::vector<CatalogEntry>& catalog,
                               const std::string& name) {
  for (const auto& e : catalog)
    if (e.name == name) return &e;
  return nullptr;
}

std::optional<long long> out_of_reach_order(const std::string& name) {
  // named EPPO simple groups whose strong-independence analysis exceeds
  // desk scale; kept here so the caps can answer by name
  if (name == "Sz8") return 29120;
  if (name == "Sz32") return 32537600;
  if (name == "PSL34") return 20160;
  return std::nullopt;
}

GroupSpec resolve_group_spec(const std::string& arg,
                             const std::vector<CatalogEntry>& catalog) {
  if (const CatalogEntry* e = find_entry(catalog, arg)) return e->spec;
  if (arg.find('{') == std::string::npos)
    throw ValidationError(ValidationError::Kind::BadSpec,
                          "unknown group name: " + arg);
  Json j = Json::parse(arg, nullptr, false);
  if (j.is_discarded())
    throw ValidationError(ValidationError::Kind::BadSpec,
                          "group argument is neither a catalog name nor valid "
                          "JSON: " + arg);
  return group_spec_from_json(j);
}

}  // namespace groupcx
