#pragma once

// Verification suites shared by `sphfun verify` and the acceptance runner.
// Each suite compares a closed form against an independent evaluation and
// reports one row per comparison.

#include <optional>
#include <string>
#include <vector>

#include "sphfun/higherrank.hpp"
#include "sphfun/io.hpp"
#include "sphfun/quadrature.hpp"
#include "sphfun/rankone.hpp"
#include "sphfun/rootdata.hpp"

namespace sphfun::suites {

struct CheckRow {
  std::string label;
  Complex closed;     // closed form / library value
  Complex reference;  // oracle value
  double metric = 0;  // the quantity compared against tol
  double tol = 0;
  bool pass = false;
  std::size_t nodes = 0;
  std::string note;
};

struct SuiteResult {
  std::string name;
  std::string title;
  std::vector<CheckRow> rows;
  double seconds = 0;
  bool pass() const;
  // Largest metric / tol over the rows.
  double worst_ratio() const;
  const CheckRow* worst_row() const;
};

struct SuiteOptions {
  // Empty members mean "suite default".
  std::vector<RankOneSpace> spaces;
  std::vector<Complex> lambdas;           // rank-one spectral parameters
  std::vector<std::string> ktypes;        // catalog names
  std::vector<CatalogEntry> catalog = builtin_catalog();
  std::optional<RootDatum> datum;         // cocycle / det-a override
  std::optional<FactorKTypeTable> table;  // det-a override (needs datum)
  QuadratureSpec spec;
  std::optional<double> abs_tol;  // overrides a suite's default tolerance
  std::optional<double> rel_tol;
  unsigned long long seed = 20240611ULL;
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

// Throws InvalidInput on an unknown suite or unusable options.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts);

// Built-in A2 (m = 1) factor table for the word s1 s2 s1 with two K-types per
// position; data/a2_table.json holds the same table.
FactorKTypeTable default_a2_table();

}  // namespace sphfun::suites
