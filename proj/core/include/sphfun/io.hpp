#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sphfun/higherrank.hpp"
#include "sphfun/rankone.hpp"
#include "sphfun/rootdata.hpp"

namespace sphfun {

// Root datum document:
//   {"name"?: str, "rank": int, "simple_roots": [[...]],
//    "positive_indivisible_roots": [[...]],
//    "multiplicities": [{"root_index", "m_alpha", "m_2alpha"}]}
// Roots without a multiplicity record default to (1, 0).
RootDatum parse_root_datum(const std::string& json_text);
RootDatum load_root_datum(const std::string& path);

// One K-type catalog record, as stored. r and s are optional.
struct CatalogEntry {
  std::string name;
  RankOneSpace space;
  double d_alpha = 0;
  double d_2alpha = 0;
  std::optional<int> r;
  std::optional<int> s;

  // The K-type: stored (r, s) are validated against the quadratics, missing
  // ones are solved for. Throws InvalidInput on inconsistent data.
  KTypeRankOne resolve() const;
};

// Catalog document: [{"name", "m_alpha", "m_2alpha", "d_alpha", "d_2alpha",
// "r"?, "s"?}, ...]. Structural problems throw InvalidInput; the quadratics
// are only checked by CatalogEntry::resolve.
std::vector<CatalogEntry> parse_catalog(const std::string& json_text);
std::vector<CatalogEntry> load_catalog(const std::string& path);

// Lookup by name, restricted to entries on `space` when given; throws
// InvalidInput when absent.
const CatalogEntry& find_entry(const std::vector<CatalogEntry>& catalog,
                               const std::string& name,
                               const std::optional<RankOneSpace>& space = {});

// Built-in catalog used when no file is given. Entries are named "s<s>r<r>":
// s = 0..3, r = 0 on H^2..H^5; (r, s) in {(0,0),(0,1),(1,1),(0,2),(1,2)} on
// the complex (2,1) and quaternionic (4,3) hyperbolic planes.
std::vector<CatalogEntry> builtin_catalog();

// Factor table document: {"word": [...], "entries": [{"j", "i", "m_alpha",
// "m_2alpha", "d_alpha", "d_2alpha", "r"?, "s"?}]}.
FactorKTypeTable parse_factor_table(const std::string& json_text);
FactorKTypeTable load_factor_table(const std::string& path);

// Whole file as a string; throws InvalidInput if it cannot be read.
std::string read_text_file(const std::string& path);

}  // namespace sphfun
