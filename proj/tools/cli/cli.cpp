#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <set>
#include <sstream>

#include "../suites/suites.hpp"
#include "args.hpp"
#include "sphfun/cfun.hpp"
#include "sphfun/errors.hpp"
#include "sphfun/higherrank.hpp"
#include "sphfun/io.hpp"
#include "sphfun/models.hpp"
#include "sphfun/quadrature.hpp"
#include "sphfun/rankone.hpp"
#include "table.hpp"

namespace sphfun::cli {

namespace {

// Flags shared by every command.
struct Common {
  std::string space;
  std::string datum;
  std::vector<std::string> lambdas;
  std::string lambda_grid;
  std::optional<double> im;
  std::vector<std::string> ts;
  std::string t_grid;
  std::string ktype;
  std::string catalog;
  std::string table;
  std::optional<double> abs_tol;
  std::optional<double> rel_tol;
  std::string format = "csv";
  std::string out;
  std::string scheme;
  std::optional<std::size_t> max_subdivisions;
};

struct Extra {
  std::string methods = "closed";
  int terms = kDefaultSeriesTerms;
  std::string word;
  std::vector<std::string> suites;
  double small_t = 1e-3;
  double simple_tol = kSimpleTolerance;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--space", c.space,
                  "h2, h3, hn:<n>, rank1:<m>,<m2>, a1xa1, a2[:m], b2[:ml,ms], bc2[:ml,ms,m2s]");
  app->add_option("--datum", c.datum, "root datum JSON file (instead of --space)");
  app->add_option("--lambda", c.lambdas, "spectral parameter re,im (rank 2: re,im/re,im); repeatable")
      ->allow_extra_args(false);
  app->add_option("--lambda-grid", c.lambda_grid, "start:stop:count over the real part");
  app->add_option("--im", c.im, "imaginary part for --lambda-grid (default 0)");
  app->add_option("--t", c.ts, "radial parameter t >= 0; repeatable")->allow_extra_args(false);
  app->add_option("--t-grid", c.t_grid, "start:stop:count");
  app->add_option("--ktype", c.ktype, "catalog name, rs:<r>,<s> or d:<d_alpha>,<d_2alpha>");
  app->add_option("--catalog", c.catalog, "K-type catalog JSON file");
  app->add_option("--table", c.table, "factor K-type table JSON file");
  app->add_option("--abs-tol", c.abs_tol, "absolute tolerance");
  app->add_option("--rel-tol", c.rel_tol, "relative tolerance");
  app->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app->add_option("--out", c.out, "output file (default stdout)");
  app->add_option("--scheme", c.scheme, "half-line quadrature: tanh_sinh_halfline or gauss_legendre_composite");
  app->add_option("--max-subdivisions", c.max_subdivisions, "quadrature bisection budget (power of two)");
}

// ---- configuration ------------------------------------------------------

template <class F>
auto config(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InvalidInput& e) {
    throw UsageError(e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::optional<SpaceSelection> resolve_space(const Common& c, bool required) {
  if (!c.space.empty() && !c.datum.empty()) {
    throw UsageError("give either --space or --datum, not both");
  }
  if (!c.datum.empty()) {
    return config([&] { return space_from_datum(load_root_datum(c.datum)); });
  }
  if (!c.space.empty()) return parse_space(c.space);
  if (required) throw UsageError("--space or --datum is required");
  return std::nullopt;
}

RankOneSpace require_rank_one(const SpaceSelection& s, const std::string& cmd) {
  if (!s.rank_one) throw UsageError(cmd + " needs a rank-one space, got '" + s.label + "'");
  return *s.rank_one;
}

std::vector<SpectralParam> resolve_lambdas(const Common& c, std::size_t rank,
                                           bool required = true) {
  std::vector<SpectralParam> out;
  for (const std::string& s : c.lambdas) out.push_back(parse_lambda(s));
  if (!c.lambda_grid.empty()) {
    const double im = c.im.value_or(0.0);
    for (double re : parse_grid(c.lambda_grid, "lambda grid")) {
      out.push_back(SpectralParam{std::vector<Complex>(rank, Complex(re, im))});
    }
  } else if (c.im) {
    throw UsageError("--im only applies to --lambda-grid");
  }
  if (out.empty() && required) throw UsageError("no spectral parameter (--lambda or --lambda-grid)");
  for (const SpectralParam& p : out) {
    if (p.rank() != rank) {
      throw UsageError("lambda '" + format_lambda(p) + "' has " + std::to_string(p.rank()) +
                       " components, the space has rank " + std::to_string(rank));
    }
  }
  return out;
}

std::vector<double> resolve_ts(const Common& c, std::vector<double> defaults) {
  std::vector<double> out;
  for (const std::string& s : c.ts) out.push_back(parse_double(s, "t"));
  if (!c.t_grid.empty()) {
    for (double t : parse_grid(c.t_grid, "t grid")) out.push_back(t);
  }
  if (out.empty()) out = std::move(defaults);
  if (out.empty()) throw UsageError("no t value (--t or --t-grid)");
  for (double t : out) {
    if (t < 0) throw UsageError("t must be non-negative, got " + std::to_string(t));
  }
  return out;
}

std::vector<CatalogEntry> resolve_catalog(const Common& c) {
  if (c.catalog.empty()) return builtin_catalog();
  return config([&] { return load_catalog(c.catalog); });
}

struct NamedKType {
  std::string name;
  KTypeRankOne kt;
};

NamedKType resolve_ktype(const Common& c, const RankOneSpace& sp) {
  if (c.ktype.empty()) return {"trivial", KTypeRankOne::trivial()};
  return config([&]() -> NamedKType {
    const std::string& k = c.ktype;
    if (k.rfind("rs:", 0) == 0) {
      const auto parts = parse_lambda(k.substr(3));  // "r,s" parses like re,im
      const Complex rs = parts.coords.at(0);
      if (parts.rank() != 1 || rs.real() != std::round(rs.real()) ||
          rs.imag() != std::round(rs.imag())) {
        throw UsageError("malformed K-type '" + k + "' (rs:<r>,<s>)");
      }
      return {k, ktype_from_rs(sp, int(rs.real()), int(rs.imag()))};
    }
    if (k.rfind("d:", 0) == 0) {
      const auto parts = parse_lambda(k.substr(2));
      if (parts.rank() != 1) throw UsageError("malformed K-type '" + k + "'");
      const Complex d = parts.coords[0];
      return {k, make_ktype(sp, d.real(), d.imag())};
    }
    return {k, find_entry(resolve_catalog(c), k, sp).resolve()};
  });
}

QuadratureSpec resolve_spec(const Common& c, bool use_tols = true) {
  QuadratureSpec spec;
  if (use_tols && c.abs_tol) spec.abs_tol = *c.abs_tol;
  if (use_tols && c.rel_tol) spec.rel_tol = *c.rel_tol;
  if (!c.scheme.empty()) spec.scheme = config([&] { return parse_scheme(c.scheme); });
  if (c.max_subdivisions) spec.max_subdivisions = *c.max_subdivisions;
  config([&] {
    spec.validate();
    return 0;
  });
  return spec;
}

std::set<std::string> resolve_methods(const std::string& m) {
  std::set<std::string> out;
  std::stringstream ss(m);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item != "closed" && item != "series" && item != "quad") {
      throw UsageError("unknown method '" + item + "' (closed, series, quad)");
    }
    out.insert(item);
  }
  if (!out.count("closed")) throw UsageError("--methods must include closed");
  return out;
}

// ---- evaluation helpers --------------------------------------------------

struct Run {
  std::ostream& err;
  int failures = 0;

  void fail(std::size_t row, const std::string& what) {
    ++failures;
    err << "sphfun: row " << row << ": " << what << '\n';
  }
};

double nan() { return std::nan(""); }

double rel_err(Complex x, Complex ref) {
  const double d = std::abs(x - ref);
  const double s = std::abs(ref);
  return s > 0 ? d / s : d;
}

// ---- commands ------------------------------------------------------------

Table cmd_c_eval(const Common& c, Run& run) {
  const SpaceSelection sel = *resolve_space(c, true);
  const auto lams = resolve_lambdas(c, sel.datum.rank());
  Table t{{"lambda", "c_value_re", "c_value_im", "pole_flag"}, {}};
  for (const SpectralParam& lam : lams) {
    const std::string label = format_lambda(lam);
    try {
      const CFunctionValue v = c_full_flagged(sel.datum, lam);
      t.add_row({label, v.value.real(), v.value.imag(), v.pole_flag});
    } catch (const Error& e) {
      run.fail(t.rows.size() + 1, "lambda=" + label + ": " + e.what());
      t.add_row({label, nan(), nan(), Cell{}});
    }
  }
  return t;
}

Table cmd_csigma_eval(const Common& c, const Extra& x, Run& run) {
  const SpaceSelection sel = *resolve_space(c, true);
  const auto lams = resolve_lambdas(c, sel.datum.rank());
  const auto methods = resolve_methods(x.methods);
  if (methods.count("series")) throw UsageError("csigma-eval supports closed and quad");
  const bool quad = methods.count("quad") > 0;
  Table t{{"lambda", "word", "ktype", "csigma_re", "csigma_im", "pole_flag"}, {}};
  if (quad) {
    for (const char* col : {"csigma_quad_re", "csigma_quad_im", "err_quad", "quad_nodes"}) {
      t.columns.push_back(col);
    }
  }
  if (sel.rank_one) {
    const RankOneSpace sp = *sel.rank_one;
    const NamedKType kt = resolve_ktype(c, sp);
    if (!x.word.empty() && parse_word(x.word) != WeylElement{{1}}) {
      throw UsageError("rank one: the only non-trivial word is 1");
    }
    if (quad && (sp != hyperbolic_space(2) || kt.kt.r != 0)) {
      throw UsageError("quad method: H^2 (h2) with an r = 0 K-type only");
    }
    const QuadratureSpec spec = resolve_spec(c);
    for (const SpectralParam& lam : lams) {
      const Complex Lam = lam.coords[0];
      const std::string label = format_lambda(lam);
      std::vector<Cell> row = {label, std::string("1"), kt.name};
      Complex value(nan(), nan());
      try {
        value = C_sigma_minus(sp, kt.kt, Lam);
        row.insert(row.end(), {value.real(), value.imag(), false});
      } catch (const PoleError&) {
        row.insert(row.end(), {nan(), nan(), true});
      } catch (const Error& e) {
        run.fail(t.rows.size() + 1, "lambda=" + label + ": " + e.what());
        row.insert(row.end(), {nan(), nan(), Cell{}});
      }
      if (quad) {
        try {
          const QuadratureResult q = quad_Csigma_sl2(2 * kt.kt.s, Lam, spec);
          row.insert(row.end(), {q.value.real(), q.value.imag(), rel_err(q.value, value),
                                 static_cast<long long>(q.nodes)});
        } catch (const Error& e) {
          run.fail(t.rows.size() + 1, "lambda=" + label + " (quad): " + e.what());
          row.insert(row.end(), {nan(), nan(), nan(), Cell{}});
        }
      }
      t.add_row(std::move(row));
    }
    return t;
  }
  if (quad) throw UsageError("quad method is only available in rank one");
  if (!c.ktype.empty()) throw UsageError("--ktype applies to rank-one spaces");
  const WeylElement w =
      x.word.empty() ? longest_element(sel.datum) : parse_word(x.word);
  config([&] {
    require_reduced(sel.datum, w);
    return 0;
  });
  for (const SpectralParam& lam : lams) {
    const std::string label = format_lambda(lam);
    try {
      const CFunctionValue v = c_sigma_flagged(sel.datum, w, lam);
      t.add_row({label, format_word(w), std::string("trivial"), v.value.real(),
                 v.value.imag(), v.pole_flag});
    } catch (const Error& e) {
      run.fail(t.rows.size() + 1, "lambda=" + label + ": " + e.what());
      t.add_row({label, format_word(w), std::string("trivial"), nan(), nan(), Cell{}});
    }
  }
  return t;
}

Table cmd_phi_eval(const Common& c, const Extra& x, Run& run) {
  const SpaceSelection sel = *resolve_space(c, true);
  const RankOneSpace sp = require_rank_one(sel, "phi-eval");
  const auto lams = resolve_lambdas(c, 1);
  const auto ts = resolve_ts(c, {});
  const NamedKType kt = resolve_ktype(c, sp);
  const auto methods = resolve_methods(x.methods);
  const bool series = methods.count("series") > 0;
  const bool quad = methods.count("quad") > 0;
  if (series && !(kt.kt == KTypeRankOne::trivial())) {
    throw UsageError("series method: trivial K-type only");
  }
  if (series && x.terms < 1) throw UsageError("--terms must be positive");
  const bool quad_zonal = kt.kt == KTypeRankOne::trivial() && sp.m_2alpha == 0;
  const bool quad_entry = sp == hyperbolic_space(2) && kt.kt.r == 0;
  if (quad && !quad_zonal && !quad_entry) {
    throw UsageError("quad method: trivial K-type on H^n, or an r = 0 K-type on h2");
  }
  const QuadratureSpec spec = resolve_spec(c);
  Table t{{"t", "lambda", "ktype", "phi_closed_re", "phi_closed_im"}, {}};
  if (series) {
    for (const char* col : {"phi_series_re", "phi_series_im", "err_series"}) t.columns.push_back(col);
  }
  if (quad) {
    for (const char* col : {"phi_quad_re", "phi_quad_im", "err_quad", "quad_nodes"}) {
      t.columns.push_back(col);
    }
  }
  for (const SpectralParam& lam : lams) {
    const Complex Lam = lam.coords[0];
    const std::string label = format_lambda(lam);
    for (double tv : ts) {
      const std::string where = "t=" + std::to_string(tv) + " lambda=" + label;
      std::vector<Cell> row = {tv, label, kt.name};
      Complex closed(nan(), nan());
      try {
        closed = phi_tau(sp, kt.kt, Lam, tv);
        row.insert(row.end(), {closed.real(), closed.imag()});
      } catch (const Error& e) {
        run.fail(t.rows.size() + 1, where + ": " + e.what());
        row.insert(row.end(), {nan(), nan()});
      }
      if (series) {
        if (tv <= 0) {
          // The expansion lives on t > 0; no value at the origin.
          row.insert(row.end(), {Cell{}, Cell{}, Cell{}});
        } else {
          try {
            const Complex v = hc_series_eval(sp, Lam, tv, x.terms);
            row.insert(row.end(), {v.real(), v.imag(), rel_err(v, closed)});
          } catch (const Error& e) {
            run.fail(t.rows.size() + 1, where + " (series): " + e.what());
            row.insert(row.end(), {nan(), nan(), nan()});
          }
        }
      }
      if (quad) {
        try {
          QuadratureResult q;
          if (quad_zonal) {
            q = quad_phi_K(sp.dim(), Lam, tv, spec);
          } else {
            q = quad_eisenstein_sl2(2 * kt.kt.s, Lam, tv, spec);
            q.value *= asymptotic_factor(sp, kt.kt);
          }
          row.insert(row.end(), {q.value.real(), q.value.imag(), rel_err(q.value, closed),
                                 static_cast<long long>(q.nodes)});
        } catch (const Error& e) {
          run.fail(t.rows.size() + 1, where + " (quad): " + e.what());
          row.insert(row.end(), {nan(), nan(), nan(), Cell{}});
        }
      }
      t.add_row(std::move(row));
    }
  }
  return t;
}

double min_pole_distance(const RootDatum& d, const SpectralParam& lam) {
  double best = INFINITY;
  for (std::size_t j = 0; j < d.positive_roots().size(); ++j) {
    const DenominatorArgs a = denominator_args(d, lam, j);
    for (Complex z : {a.first, a.second}) {
      const double k = std::min(0.0, std::round(z.real()));
      best = std::min(best, std::abs(z - k));
    }
  }
  return best;
}

Table cmd_simple_check(const Common& c, const Extra& x, Run& run) {
  const SpaceSelection sel = *resolve_space(c, true);
  const auto lams = resolve_lambdas(c, sel.datum.rank());
  if (!(x.simple_tol > 0)) throw UsageError("--simple-tol must be positive");
  Table t{{"lambda", "simple", "min_pole_distance"}, {}};
  for (const SpectralParam& lam : lams) {
    const std::string label = format_lambda(lam);
    try {
      t.add_row({label, is_simple(sel.datum, lam, x.simple_tol),
                 min_pole_distance(sel.datum, lam)});
    } catch (const Error& e) {
      run.fail(t.rows.size() + 1, "lambda=" + label + ": " + e.what());
      t.add_row({label, Cell{}, nan()});
    }
  }
  return t;
}

Table cmd_det_a(const Common& c, const Extra& x, Run& run) {
  const SpaceSelection sel = *resolve_space(c, true);
  const auto lams = resolve_lambdas(c, sel.datum.rank());
  const double tol = c.rel_tol.value_or(1e-10);
  FactorKTypeTable table;
  if (!c.table.empty()) {
    table = config([&] { return load_factor_table(c.table); });
  } else if (sel.rank_one) {
    const NamedKType kt = resolve_ktype(c, *sel.rank_one);
    table = FactorKTypeTable(WeylElement{{1}}, {{{1, 1}, FactorEntry{*sel.rank_one, kt.kt}}});
  } else {
    const WeylElement w = x.word.empty() ? longest_element(sel.datum) : parse_word(x.word);
    table = config([&] { return trivial_table(sel.datum, w, 1); });
  }
  config([&] {
    table.validate(sel.datum);
    require_reduced(sel.datum, table.word());
    return 0;
  });
  Table t{{"lambda", "word", "ell", "det_a_re", "det_a_im", "det_a_factorwise_re",
           "det_a_factorwise_im", "rel_err"},
          {}};
  for (const SpectralParam& lam : lams) {
    const std::string label = format_lambda(lam);
    try {
      const Complex a = det_A(sel.datum, table.word(), lam, table);
      const Complex b = det_A_factorwise(sel.datum, table.word(), lam, table);
      const double e = rel_err(a, b);
      t.add_row({label, format_word(table.word()), static_cast<long long>(table.ell()),
                 a.real(), a.imag(), b.real(), b.imag(), e});
      if (!(e <= tol)) {
        run.fail(t.rows.size(), "lambda=" + label + ": evaluation paths differ by " +
                                    std::to_string(e));
      }
    } catch (const Error& e) {
      run.fail(t.rows.size() + 1, "lambda=" + label + ": " + e.what());
      t.add_row({label, format_word(table.word()), static_cast<long long>(table.ell()),
                 nan(), nan(), nan(), nan(), nan()});
    }
  }
  return t;
}

Table cmd_limits(const Common& c, const Extra& x, Run& run) {
  const SpaceSelection sel = *resolve_space(c, true);
  const RankOneSpace sp = require_rank_one(sel, "limits");
  const auto lams = resolve_lambdas(c, 1);
  const auto ts = resolve_ts(c, {18.0});
  const NamedKType kt = resolve_ktype(c, sp);
  if (!(x.small_t > 0)) throw UsageError("--small-t must be positive");
  Table t{{"lambda", "ktype", "t", "large_t_re", "large_t_im", "large_t_limit_re",
           "large_t_limit_im", "large_t_rel_err", "small_t", "ratio_re", "ratio_im",
           "ratio_limit_re", "ratio_limit_im", "ratio_abs_err"},
          {}};
  for (const SpectralParam& lam : lams) {
    const Complex Lam = lam.coords[0];
    const std::string label = format_lambda(lam);
    for (double tv : ts) {
      try {
        const Complex v = limit_large_t(sp, kt.kt, Lam, tv);
        const Complex target = limit_large_t_value(sp, kt.kt, Lam);
        const Complex ratio = small_t_ratio(sp, kt.kt, Lam, x.small_t);
        const Complex rlim = c_lambda_delta(sp, kt.kt, Lam) / c_lambda_delta(sp, kt.kt, -Lam);
        t.add_row({label, kt.name, tv, v.real(), v.imag(), target.real(), target.imag(),
                   rel_err(v, target), x.small_t, ratio.real(), ratio.imag(), rlim.real(),
                   rlim.imag(), std::abs(ratio - rlim)});
      } catch (const Error& e) {
        run.fail(t.rows.size() + 1, "lambda=" + label + ": " + e.what());
        t.add_row({label, kt.name, tv, nan(), nan(), nan(), nan(), nan(), x.small_t, nan(),
                   nan(), nan(), nan(), nan()});
      }
    }
  }
  return t;
}

Table cmd_verify(const Common& c, const Extra& x, Run& run) {
  std::vector<std::string> names = x.suites.empty() ? std::vector<std::string>{"all"} : x.suites;
  std::vector<std::string> expanded;
  for (const std::string& n : names) {
    if (n == "all") {
      for (const std::string& s : suites::suite_names()) expanded.push_back(s);
    } else if (suites::is_suite(n)) {
      expanded.push_back(n);
    } else {
      throw UsageError("unknown suite '" + n + "'");
    }
  }
  suites::SuiteOptions opts;
  opts.catalog = resolve_catalog(c);
  opts.spec = resolve_spec(c, false);
  opts.abs_tol = c.abs_tol;
  opts.rel_tol = c.rel_tol;
  if (const auto sel = resolve_space(c, false)) {
    if (sel->rank_one) {
      opts.spaces.push_back(*sel->rank_one);
    } else {
      opts.datum = sel->datum;
    }
  }
  if (!c.table.empty()) {
    if (!opts.datum) throw UsageError("--table needs a rank-2 --space or --datum");
    opts.table = config([&] { return load_factor_table(c.table); });
    config([&] {
      opts.table->validate(*opts.datum);
      return 0;
    });
  }
  for (const SpectralParam& p : resolve_lambdas(c, 1, false)) opts.lambdas.push_back(p.coords[0]);
  if (!c.ktype.empty()) opts.ktypes.push_back(c.ktype);

  Table t{{"suite", "label", "closed_re", "closed_im", "reference_re", "reference_im",
           "metric", "tol", "pass", "nodes", "note"},
          {}};
  for (const std::string& name : expanded) {
    suites::SuiteResult r;
    try {
      r = suites::run_suite(name, opts);
    } catch (const Error& e) {
      // A suite that cannot run with these options fails as a whole.
      run.fail(t.rows.size() + 1, name + ": " + e.what());
      t.add_row({name, std::string("(suite)"), nan(), nan(), nan(), nan(), nan(), nan(), false,
                 Cell{}, std::string(e.what())});
      continue;
    }
    for (const suites::CheckRow& row : r.rows) {
      t.add_row({name, row.label, row.closed.real(), row.closed.imag(), row.reference.real(),
                 row.reference.imag(), row.metric, row.tol, row.pass,
                 static_cast<long long>(row.nodes), row.note});
    }
    const bool ok = r.pass();
    if (!ok) ++run.failures;
    const suites::CheckRow* w = r.worst_row();
    run.err << name << ": " << (ok ? "PASS" : "FAIL") << " (" << r.rows.size() << " checks";
    if (w) run.err << ", worst " << w->metric << " vs tol " << w->tol;
    run.err << ")\n";
  }
  return t;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spherical functions, c-functions and their checks", "sphfun"};
  app.require_subcommand(1);
  Common common;
  Extra extra;

  auto* c_eval = app.add_subcommand("c-eval", "Harish-Chandra c-function c(lambda)");
  auto* csigma = app.add_subcommand(
      "csigma-eval", "c_w(lambda) for a Weyl word; C_sigma(-lambda) on V_delta^M in rank one");
  auto* phi = app.add_subcommand("phi-eval", "spherical function phi_{lambda,delta}(a_t)");
  auto* simple = app.add_subcommand("simple-check", "simplicity of lambda");
  auto* verify = app.add_subcommand("verify", "run verification suites");
  auto* det = app.add_subcommand("det-a", "det A(lambda, sigma) on V_delta^M");
  auto* limits = app.add_subcommand("limits", "large-t and small-t limits");
  for (CLI::App* sub : {c_eval, csigma, phi, simple, verify, det, limits}) add_common(sub, common);
  for (CLI::App* sub : {csigma, phi}) {
    sub->add_option("--methods", extra.methods, "comma list of closed, series, quad");
  }
  phi->add_option("--terms", extra.terms, "series truncation N");
  for (CLI::App* sub : {csigma, det}) sub->add_option("--word", extra.word, "Weyl word, e.g. 1,2,1");
  verify->add_option("--suite", extra.suites, "suite name or all; repeatable")->allow_extra_args(false);
  limits->add_option("--small-t", extra.small_t, "t for the small-t ratio (default 1e-3)");
  simple->add_option("--simple-tol", extra.simple_tol, "distance to a pole counted as a pole");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Run run{err};
  Table table;
  try {
    const Format fmt = parse_format(common.format);
    if (*c_eval) table = cmd_c_eval(common, run);
    else if (*csigma) table = cmd_csigma_eval(common, extra, run);
    else if (*phi) table = cmd_phi_eval(common, extra, run);
    else if (*simple) table = cmd_simple_check(common, extra, run);
    else if (*verify) table = cmd_verify(common, extra, run);
    else if (*det) table = cmd_det_a(common, extra, run);
    else table = cmd_limits(common, extra, run);

    if (common.out.empty()) {
      write_table(out, table, fmt);
    } else {
      std::ofstream f(common.out, std::ios::binary);
      if (!f) throw UsageError("cannot write '" + common.out + "'");
      write_table(f, table, fmt);
    }
  } catch (const UsageError& e) {
    err << "sphfun: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidInput& e) {
    err << "sphfun: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "sphfun: " << e.what() << '\n';
    return kExitFailure;
  }
  return run.failures > 0 ? kExitFailure : kExitOk;
}

}  // namespace sphfun::cli
