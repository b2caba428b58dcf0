#include "sphfun/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "sphfun/errors.hpp"

namespace sphfun {

namespace {

using nlohmann::json;

json parse_json(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string(what) + ": malformed JSON: " + e.what());
  }
}

template <class T>
T field(const json& obj, const char* key, const std::string& ctx) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw InvalidInput(ctx + ": missing field '" + key + "'");
  }
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InvalidInput(ctx + ": field '" + key + "' has the wrong type");
  }
}

template <class T>
std::optional<T> optional_field(const json& obj, const char* key,
                                const std::string& ctx) {
  if (!obj.contains(key) || obj.at(key).is_null()) return std::nullopt;
  return field<T>(obj, key, ctx);
}

std::vector<RealVector> vectors(const json& obj, const char* key,
                                const std::string& ctx) {
  return field<std::vector<RealVector>>(obj, key, ctx);
}

CatalogEntry entry_from_json(const json& rec, const std::string& ctx) {
  CatalogEntry e;
  e.name = rec.contains("name") ? field<std::string>(rec, "name", ctx) : "";
  e.space = RankOneSpace(field<int>(rec, "m_alpha", ctx),
                         field<int>(rec, "m_2alpha", ctx));
  e.d_alpha = field<double>(rec, "d_alpha", ctx);
  e.d_2alpha = field<double>(rec, "d_2alpha", ctx);
  e.r = optional_field<int>(rec, "r", ctx);
  e.s = optional_field<int>(rec, "s", ctx);
  return e;
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

RootDatum parse_root_datum(const std::string& text) {
  const json doc = parse_json(text, "root datum");
  const std::string ctx = "root datum";
  const int rank = field<int>(doc, "rank", ctx);
  auto simple = vectors(doc, "simple_roots", ctx);
  auto positive = vectors(doc, "positive_indivisible_roots", ctx);
  if (rank < 1 || static_cast<std::size_t>(rank) != simple.size()) {
    throw InvalidInput("root datum: rank does not match the simple roots");
  }
  std::vector<Multiplicity> mult(positive.size());
  if (doc.contains("multiplicities")) {
    for (const json& rec : doc.at("multiplicities")) {
      const auto idx = field<std::size_t>(rec, "root_index", ctx);
      if (idx >= positive.size()) {
        throw InvalidInput("root datum: root_index " + std::to_string(idx) +
                           " out of range");
      }
      mult[idx] = {field<int>(rec, "m_alpha", ctx),
                   field<int>(rec, "m_2alpha", ctx)};
    }
  }
  const std::string name =
      doc.contains("name") ? field<std::string>(doc, "name", ctx) : "datum";
  return RootDatum(name, std::move(simple), std::move(positive), std::move(mult));
}

RootDatum load_root_datum(const std::string& path) {
  return parse_root_datum(read_text_file(path));
}

KTypeRankOne CatalogEntry::resolve() const {
  const std::string ctx = "K-type '" + name + "'";
  try {
    if (r && s) {
      KTypeRankOne kt{d_alpha, d_2alpha, *r, *s};
      validate_ktype(space, kt, 1e-9);
      return kt;
    }
    KTypeRankOne kt = make_ktype(space, d_alpha, d_2alpha);
    if (r && *r != kt.r) {
      kt.r = *r;
      validate_ktype(space, kt, 1e-9);
    }
    if (s && *s != kt.s) {
      throw InvalidInput("stored s = " + std::to_string(*s) +
                         " differs from the solved s = " + std::to_string(kt.s));
    }
    return kt;
  } catch (const InvalidInput& e) {
    throw InvalidInput(ctx + ": " + e.what());
  }
}

std::vector<CatalogEntry> parse_catalog(const std::string& text) {
  const json doc = parse_json(text, "K-type catalog");
  if (!doc.is_array()) throw InvalidInput("K-type catalog: expected an array");
  std::vector<CatalogEntry> out;
  for (std::size_t k = 0; k < doc.size(); ++k) {
    out.push_back(
        entry_from_json(doc[k], "K-type catalog record " + std::to_string(k)));
  }
  return out;
}

std::vector<CatalogEntry> load_catalog(const std::string& path) {
  return parse_catalog(read_text_file(path));
}

const CatalogEntry& find_entry(const std::vector<CatalogEntry>& catalog,
                               const std::string& name,
                               const std::optional<RankOneSpace>& space) {
  for (const CatalogEntry& e : catalog) {
    if (e.name == name && (!space || e.space == *space)) return e;
  }
  std::string msg = "K-type '" + name + "' not found in catalog";
  if (space) {
    msg += " for (m_alpha=" + std::to_string(space->m_alpha) +
           ", m_2alpha=" + std::to_string(space->m_2alpha) + ")";
  }
  throw InvalidInput(msg);
}

std::vector<CatalogEntry> builtin_catalog() {
  std::vector<CatalogEntry> out;
  auto add = [&](RankOneSpace sp, int r, int s) {
    const KTypeRankOne kt = ktype_from_rs(sp, r, s);
    out.push_back({"s" + std::to_string(s) + "r" + std::to_string(r), sp,
                   kt.d_alpha, kt.d_2alpha, r, s});
  };
  for (int n = 2; n <= 5; ++n) {
    for (int s = 0; s <= 3; ++s) add(hyperbolic_space(n), 0, s);
  }
  for (RankOneSpace sp : {RankOneSpace(2, 1), RankOneSpace(4, 3)}) {
    for (auto [r, s] : {std::pair{0, 0}, {0, 1}, {1, 1}, {0, 2}, {1, 2}}) {
      add(sp, r, s);
    }
  }
  return out;
}

FactorKTypeTable parse_factor_table(const std::string& text) {
  const json doc = parse_json(text, "factor table");
  const std::string ctx = "factor table";
  WeylElement w{field<std::vector<int>>(doc, "word", ctx)};
  if (!doc.contains("entries") || !doc.at("entries").is_array()) {
    throw InvalidInput("factor table: missing 'entries' array");
  }
  std::map<std::pair<int, int>, FactorEntry> entries;
  for (const json& rec : doc.at("entries")) {
    const int j = field<int>(rec, "j", ctx);
    const int i = field<int>(rec, "i", ctx);
    const std::string where =
        "factor table entry (j=" + std::to_string(j) + ", i=" + std::to_string(i) + ")";
    CatalogEntry e = entry_from_json(rec, where);
    e.name = where;
    if (!entries.emplace(std::pair{j, i}, FactorEntry{e.space, e.resolve()}).second) {
      throw InvalidInput(where + " is duplicated");
    }
  }
  return FactorKTypeTable(std::move(w), std::move(entries));
}

FactorKTypeTable load_factor_table(const std::string& path) {
  return parse_factor_table(read_text_file(path));
}

}  // namespace sphfun
