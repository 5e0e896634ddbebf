#pragma once

#include <optional>
#include <string>
#include <vector>

#include "groupcx/group.hpp"
#include "groupcx/json_io.hpp"

namespace groupcx {

/// Which verification checks an entry participates in. The slow tier carries
/// two restricted entries: S5 runs only the Whiston census, PSL(2,7) only the
/// GK and graph checks (its lattice work is out of desk range for the rest).
enum class CatalogScope { Full, WhistonOnly, GkGraphOnly };

struct CatalogEntry {
  std::string name;
  GroupSpec spec;
  std::vector<std::string> tags;  // subset of the known tag set
  CatalogScope scope = CatalogScope::Full;

  bool has_tag(const std::string& t) const;
  bool slow() const { return has_tag("slow"); }
};

/// Parse a catalog file (JSON array of entries). Names must be unique and
/// tags must come from the known set.
std::vector<CatalogEntry> load_catalog(const Json& j);
std::vector<CatalogEntry> load_catalog_text(const std::string& text);

/// The shipped catalog (embedded copy of data/catalog.json).
const std::vector<CatalogEntry>& default_catalog();

const CatalogEntry* find_entry(const std::vector<CatalogEntry>& catalog,
                               const std::string& name);

/// Named groups that no desk-scale build can realize; lookups give their
/// orders so cap errors can be precise instead of "unknown name".
std::optional<long long> out_of_reach_order(const std::string& name);

/// Resolve a --group argument: catalog name first, then inline JSON spec.
GroupSpec resolve_group_spec(const std::string& arg,
                             const std::vector<CatalogEntry>& catalog);

}  // namespace groupcx
