#include "suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "sphfun/cfun.hpp"
#include "sphfun/complexmath.hpp"
#include "sphfun/errors.hpp"
#include "sphfun/models.hpp"

namespace sphfun::suites {

namespace {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

std::string fmt(Complex z) {
  return "(" + fmt(z.real()) + "," + fmt(z.imag()) + ")";
}

std::string space_name(const RankOneSpace& sp) {
  if (sp.m_2alpha == 0) return "H" + std::to_string(sp.dim());
  return "rank1(" + std::to_string(sp.m_alpha) + "," +
         std::to_string(sp.m_2alpha) + ")";
}

double rel_diff(Complex a, Complex b) {
  const double d = std::abs(a - b);
  const double s = std::abs(b);
  return s > 0 ? d / s : d;
}

// Row helpers. `rel` compares relative differences, `abs` absolute ones.
CheckRow rel_row(std::string label, Complex closed, Complex ref, double tol,
                 std::size_t nodes = 0) {
  CheckRow r{std::move(label), closed, ref, rel_diff(closed, ref), tol, false,
             nodes, ""};
  r.pass = std::isfinite(r.metric) && r.metric <= tol;
  return r;
}

CheckRow abs_row(std::string label, Complex closed, Complex ref, double tol,
                 std::size_t nodes = 0) {
  CheckRow r{std::move(label), closed, ref, std::abs(closed - ref), tol, false,
             nodes, ""};
  r.pass = std::isfinite(r.metric) && r.metric <= tol;
  return r;
}

// |a - b| / max(|b|, 1): relative for large values, absolute near zero.
CheckRow mixed_row(std::string label, Complex closed, Complex ref, double tol,
                   std::size_t nodes = 0) {
  CheckRow r{std::move(label), closed, ref,
             std::abs(closed - ref) / std::max(std::abs(ref), 1.0), tol, false,
             nodes, "mixed abs/rel"};
  r.pass = std::isfinite(r.metric) && r.metric <= tol;
  return r;
}

CheckRow failed_row(std::string label, const std::exception& e, double tol) {
  CheckRow r;
  r.label = std::move(label);
  r.closed = r.reference = Complex(NAN, NAN);
  r.metric = INFINITY;
  r.tol = tol;
  r.pass = false;
  r.note = e.what();
  return r;
}

// Runs `body`, turning a library exception into a failing row.
void guarded(std::vector<CheckRow>& rows, const std::string& label, double tol,
             const std::function<CheckRow()>& body) {
  try {
    rows.push_back(body());
  } catch (const std::exception& e) {
    rows.push_back(failed_row(label, e, tol));
  }
}

double rel_tol_or(const SuiteOptions& o, double d) { return o.rel_tol.value_or(d); }
double abs_tol_or(const SuiteOptions& o, double d) { return o.abs_tol.value_or(d); }

std::vector<RankOneSpace> spaces_or(const SuiteOptions& o,
                                    std::vector<RankOneSpace> d) {
  return o.spaces.empty() ? d : o.spaces;
}

// Spectral parameters with imaginary part in [eta_lo, eta_hi] and real part
// in [xi_lo, xi_hi], unless the caller supplied some.
std::vector<Complex> lambdas_or(const SuiteOptions& o, Rng& rng, int count,
                                double xi_lo, double xi_hi, double eta_lo,
                                double eta_hi) {
  if (!o.lambdas.empty()) return o.lambdas;
  std::vector<Complex> out;
  for (int k = 0; k < count; ++k) {
    const double xi = uniform(rng, xi_lo, xi_hi);
    const double eta = uniform(rng, eta_lo, eta_hi);
    out.emplace_back(xi, eta);
  }
  return out;
}

std::string lam_label(Complex Lam) { return "Lambda=" + fmt(Lam); }

// K-types by name on a space; defaults given as names.
std::vector<std::pair<std::string, KTypeRankOne>> ktypes_for(
    const SuiteOptions& o, const RankOneSpace& sp,
    const std::vector<std::string>& defaults) {
  const auto& names = o.ktypes.empty() ? defaults : o.ktypes;
  std::vector<std::pair<std::string, KTypeRankOne>> out;
  for (const std::string& n : names) {
    out.emplace_back(n, find_entry(o.catalog, n, sp).resolve());
  }
  return out;
}

double distance_to_integers(Complex z) {
  return std::abs(z - std::round(z.real()));
}

// Distance to the nearest non-positive integer.
double distance_to_poles(Complex z) {
  const double k = std::min(0.0, std::round(z.real()));
  return std::abs(z - k);
}

// ---------------------------------------------------------------------------

SuiteResult gamma_suite(const SuiteOptions& o) {
  SuiteResult res{"gamma", "Gamma reflection and duplication", {}, 0};
  Rng rng(o.seed);
  const double tol = rel_tol_or(o, 1e-12);
  int taken = 0;
  while (taken < 1000) {
    const Complex z(uniform(rng, -10, 10), uniform(rng, -10, 10));
    // z, 1 - z and 2z must all stay clear of poles.
    if (distance_to_integers(z) <= 0.1 || distance_to_poles(2.0 * z) <= 0.1) {
      continue;
    }
    ++taken;
    const std::string lbl = "z=" + fmt(z);
    guarded(res.rows, "reflection " + lbl, tol, [&] {
      const Complex lhs = gamma(z) * gamma(1.0 - z);
      const Complex rhs = std::numbers::pi / sin_pi(z);
      return rel_row("reflection " + lbl, lhs, rhs, tol);
    });
    guarded(res.rows, "duplication " + lbl, tol, [&] {
      const Complex lhs = gamma(z) * gamma(z + 0.5);
      const Complex rhs = std::pow(2.0, 1.0 - 2.0 * z) *
                          std::sqrt(std::numbers::pi) * gamma(2.0 * z);
      return rel_row("duplication " + lbl, lhs, rhs, tol);
    });
  }
  return res;
}

SuiteResult gauss_sum_suite(const SuiteOptions& o) {
  SuiteResult res{"gauss-sum", "2F1 at z = 1", {}, 0};
  Rng rng(o.seed + 1);
  const double tol = rel_tol_or(o, 1e-8);
  int taken = 0;
  while (taken < 100) {
    const Complex a(uniform(rng, -1.5, 1.5), uniform(rng, -1, 1));
    const Complex b(uniform(rng, -1.5, 1.5), uniform(rng, -1, 1));
    const Complex delta(uniform(rng, 0.5, 2.5), uniform(rng, -1, 1));
    const Complex c = a + b + delta;
    // Keep clear of Gamma poles and of integer c-a-b, where the z -> 1
    // expansion picks up logarithms.
    if (distance_to_poles(c) <= 0.1 || distance_to_poles(c - a) <= 0.1 ||
        distance_to_poles(c - b) <= 0.1 || distance_to_integers(delta) <= 0.2 ||
        distance_to_poles(a) <= 0.1 || distance_to_poles(b) <= 0.1) {
      continue;
    }
    ++taken;
    const std::string lbl =
        "a=" + fmt(a) + " b=" + fmt(b) + " c=" + fmt(c);
    guarded(res.rows, "gamma-ratio " + lbl, tol, [&] {
      const Complex ratio =
          gamma(c) * gamma(delta) / (gamma(c - a) * gamma(c - b));
      return rel_row("gamma-ratio " + lbl, gauss_2f1_at_one(a, b, c), ratio, tol);
    });
    guarded(res.rows, "series-at-1 " + lbl, tol, [&] {
      return rel_row("series-at-1 " + lbl, gauss_2f1_at_one(a, b, c),
                     oracle::gauss_sum_series_limit(a, b, c), tol);
    });
    guarded(res.rows, "z->1 limit " + lbl, tol, [&] {
      const Complex lim = oracle::z_to_one_limit(
          [&](double w) { return gauss_2f1(a, b, c, Complex(1.0 - w, 0.0)); },
          delta);
      return rel_row("z->1 limit " + lbl, gauss_2f1_at_one(a, b, c), lim, tol);
    });
  }
  return res;
}

SuiteResult c_vs_integral_suite(const SuiteOptions& o) {
  SuiteResult res{"c-vs-integral", "c-function against the N-bar integral", {}, 0};
  Rng rng(o.seed + 2);
  const double tol = rel_tol_or(o, 1e-6);
  const auto lams = lambdas_or(o, rng, 20, -3, 3, -1.5, -0.2);
  for (const RankOneSpace& sp :
       spaces_or(o, {hyperbolic_space(2), hyperbolic_space(3), hyperbolic_space(4)})) {
    if (sp.m_2alpha != 0) {
      throw InvalidInput("c-vs-integral: the N-bar model covers H^n only");
    }
    for (Complex Lam : lams) {
      const std::string lbl = space_name(sp) + " " + lam_label(Lam);
      guarded(res.rows, lbl, tol, [&] {
        const QuadratureResult q = quad_c_Nbar(sp.dim(), Lam, o.spec);
        return rel_row(lbl, c_alpha(Lam, sp.m_alpha, sp.m_2alpha), q.value, tol,
                       q.nodes);
      });
    }
  }
  return res;
}

SuiteResult zonal_suite(const SuiteOptions& o) {
  SuiteResult res{"zonal", "zonal spherical function against the K-integral", {}, 0};
  Rng rng(o.seed + 3);
  const double tol = abs_tol_or(o, 1e-8);
  const auto lams = lambdas_or(o, rng, 10, 0, 3, -1, 1);
  for (const RankOneSpace& sp : spaces_or(o, {hyperbolic_space(2)})) {
    if (sp.m_2alpha != 0) throw InvalidInput("zonal: H^n only");
    for (Complex Lam : lams) {
      for (double t : {0.0, 0.5, 1.0, 2.0, 3.0}) {
        const std::string lbl =
            space_name(sp) + " " + lam_label(Lam) + " t=" + fmt(t);
        guarded(res.rows, lbl, tol, [&] {
          const QuadratureResult q = quad_phi_K(sp.dim(), Lam, t, o.spec);
          return abs_row(lbl, phi_zonal(sp, Lam, t), q.value, tol, q.nodes);
        });
      }
    }
  }
  return res;
}

SuiteResult functional_eq_suite(const SuiteOptions& o) {
  SuiteResult res{"functional-eq", "product formula", {}, 0};
  Rng rng(o.seed + 4);
  const double tol = rel_tol_or(o, 1e-6);
  const auto lams = lambdas_or(o, rng, 5, 0.2, 2.5, -0.5, 0.5);
  const std::vector<std::pair<double, double>> pts = {{0, 1}, {1, 1}, {0.5, 2}};
  for (const RankOneSpace& sp : spaces_or(o, {hyperbolic_space(2)})) {
    if (sp.m_2alpha != 0) throw InvalidInput("functional-eq: H^n only");
    for (Complex Lam : lams) {
      for (auto [t1, t2] : pts) {
        const std::string lbl = space_name(sp) + " zonal " + lam_label(Lam) +
                                " t1=" + fmt(t1) + " t2=" + fmt(t2);
        guarded(res.rows, lbl, tol, [&] {
          const OracleReport r =
              functional_equation_check(sp.dim(), Lam, t1, t2, o.spec);
          return mixed_row(lbl, r.quadrature, r.closed_form, tol, r.nodes_used);
        });
      }
    }
  }
  // Eisenstein-entry variant for chi_2 on the SL(2) model.
  for (Complex Lam : lams) {
    for (auto [t1, t2] : pts) {
      const std::string lbl = "H2 chi_2 entry " + lam_label(Lam) +
                              " t1=" + fmt(t1) + " t2=" + fmt(t2);
      guarded(res.rows, lbl, tol, [&] {
        const OracleReport r = functional_equation_check_entry(2, Lam, t1, t2, o.spec);
        return mixed_row(lbl, r.quadrature, r.closed_form, tol, r.nodes_used);
      });
    }
  }
  return res;
}

SuiteResult series_suite(const SuiteOptions& o) {
  SuiteResult res{"series", "Harish-Chandra series against the closed form", {}, 0};
  Rng rng(o.seed + 5);
  const double tol = rel_tol_or(o, 1e-8);
  const auto lams = lambdas_or(o, rng, 10, 0.2, 3, -1, 1);
  for (const RankOneSpace& sp :
       spaces_or(o, {hyperbolic_space(2), hyperbolic_space(3)})) {
    for (Complex Lam : lams) {
      for (double t : {1.0, 1.5, 2.0, 3.0}) {
        const std::string lbl =
            space_name(sp) + " " + lam_label(Lam) + " t=" + fmt(t);
        guarded(res.rows, lbl, tol, [&] {
          return rel_row(lbl, hc_series_eval(sp, Lam, t, kDefaultSeriesTerms),
                         phi_zonal(sp, Lam, t), tol);
        });
      }
    }
  }
  return res;
}

SuiteResult growth_suite(const SuiteOptions& o) {
  SuiteResult res{"growth", "growth of the series coefficients", {}, 0};
  Rng rng(o.seed + 6);
  const double bound = o.abs_tol.value_or(0.5);
  const auto lams = lambdas_or(o, rng, 10, 0.2, 3, -1, 1);
  for (const RankOneSpace& sp :
       spaces_or(o, {hyperbolic_space(2), hyperbolic_space(3)})) {
    for (Complex Lam : lams) {
      const std::string lbl = space_name(sp) + " " + lam_label(Lam);
      guarded(res.rows, lbl, bound, [&] {
        const SeriesCoefficients sc = hc_series_gammas(sp, Lam, 60);
        double worst = -INFINITY;
        for (int n = 20; n <= 60; ++n) {
          const double a = std::abs(sc.gammas[n]);
          if (a > 0) worst = std::max(worst, std::log(a) / n);
        }
        CheckRow r{lbl, worst, bound, worst, bound, worst < bound, 0,
                   "max log|Gamma_n|/n, 20<=n<=60"};
        return r;
      });
    }
  }
  return res;
}

SuiteResult asymptotic_suite(const SuiteOptions& o) {
  SuiteResult res{"asymptotic", "large-t limit of (2 cosh t)^{-l} phi", {}, 0};
  const double tol = rel_tol_or(o, 1e-5);
  std::vector<Complex> lams = o.lambdas;
  if (lams.empty()) {
    // Convergent side, Im Lambda < 0; the remainder decays like
    // e^{2 Im(Lambda) t}, so |Im Lambda| >= 0.5 keeps t = 18 below 1e-5.
    for (double xi : {0.5, 1.2}) {
      for (double eta : {-0.5, -0.8}) lams.emplace_back(xi, eta);
    }
  }
  std::vector<std::pair<RankOneSpace, std::string>> cases;
  if (o.spaces.empty() && o.ktypes.empty()) {
    cases = {{hyperbolic_space(2), "s2r0"}, {hyperbolic_space(3), "s1r0"}};
  } else {
    for (const RankOneSpace& sp :
         spaces_or(o, {hyperbolic_space(2), hyperbolic_space(3)})) {
      for (const std::string& k :
           o.ktypes.empty() ? std::vector<std::string>{"s1r0"} : o.ktypes) {
        cases.emplace_back(sp, k);
      }
    }
  }
  for (const auto& [sp, kname] : cases) {
    const KTypeRankOne kt = find_entry(o.catalog, kname, sp).resolve();
    for (Complex Lam : lams) {
      const std::string base = space_name(sp) + " " + kname + " " + lam_label(Lam);
      double err10 = NAN, err18 = NAN;
      guarded(res.rows, base + " t=18", tol, [&] {
        const Complex target = limit_large_t_value(sp, kt, Lam);
        const Complex v18 = limit_large_t(sp, kt, Lam, 18.0);
        err10 = rel_diff(limit_large_t(sp, kt, Lam, 10.0), target);
        err18 = rel_diff(v18, target);
        return rel_row(base + " t=18", v18, target, tol);
      });
      CheckRow mono{base + " err(10) > err(18)", err10, err18,
                    err18 / err10, 1.0, err10 > err18, 0,
                    "metric = err(18)/err(10)"};
      if (!std::isfinite(mono.metric)) mono.pass = false;
      res.rows.push_back(mono);
    }
  }
  return res;
}

SuiteResult csigma_suite(const SuiteOptions& o) {
  SuiteResult res{"csigma", "C_sigma(-lambda) against the N-bar integral", {}, 0};
  Rng rng(o.seed + 8);
  const double tol = rel_tol_or(o, 1e-6);
  const auto lams = lambdas_or(o, rng, 10, -3, 3, -1.5, -0.2);
  const RankOneSpace h2 = hyperbolic_space(2);
  for (int n : {0, 2, 4}) {
    const KTypeRankOne kt = character_ktype(n);
    for (Complex Lam : lams) {
      const std::string lbl = "H2 chi_" + std::to_string(n) + " " + lam_label(Lam);
      guarded(res.rows, lbl, tol, [&] {
        const QuadratureResult q = quad_Csigma_sl2(n, Lam, o.spec);
        return rel_row(lbl, C_sigma_minus(h2, kt, Lam), q.value, tol, q.nodes);
      });
    }
  }
  return res;
}

SuiteResult hs_norm_suite(const SuiteOptions& o) {
  SuiteResult res{"hs-norm", "|C_sigma| = |c| for real lambda", {}, 0};
  Rng rng(o.seed + 9);
  const double tol = rel_tol_or(o, 1e-8);
  std::vector<double> lams;
  if (o.lambdas.empty()) {
    for (int k = 0; k < 20; ++k) lams.push_back(uniform(rng, 0.05, 4.0));
  } else {
    for (Complex z : o.lambdas) {
      if (z.imag() != 0.0) throw InvalidInput("hs-norm: lambda must be real");
      lams.push_back(z.real());
    }
  }
  std::vector<std::pair<RankOneSpace, std::vector<std::string>>> cases;
  if (o.spaces.empty()) {
    cases = {{hyperbolic_space(2), {"s1r0", "s2r0"}},
             {RankOneSpace(4, 3), {"s1r0", "s2r1"}}};
  } else {
    for (const RankOneSpace& sp : o.spaces) cases.push_back({sp, {"s1r0", "s2r0"}});
  }
  for (const auto& [sp, defaults] : cases) {
    for (const auto& [kname, kt] : ktypes_for(o, sp, defaults)) {
      for (double Lam : lams) {
        const std::string lbl =
            space_name(sp) + " " + kname + " Lambda=" + fmt(Lam);
        guarded(res.rows, lbl, tol, [&] {
          const OracleReport r = hs_norm_check(sp, kt, Lam);
          return rel_row(lbl, r.quadrature, r.closed_form, tol);
        });
      }
    }
  }
  return res;
}

SpectralParam random_param(Rng& rng, std::size_t rank) {
  SpectralParam p;
  for (std::size_t k = 0; k < rank; ++k) {
    p.coords.emplace_back(uniform(rng, -2, 2), uniform(rng, -1, 1));
  }
  return p;
}

std::string word_str(const WeylElement& w) {
  std::string s = "[";
  for (std::size_t k = 0; k < w.word.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(w.word[k]);
  }
  return s + "]";
}

std::string param_str(const SpectralParam& p) {
  std::string s;
  for (std::size_t k = 0; k < p.coords.size(); ++k) {
    if (k) s += "/";
    s += fmt(p.coords[k]);
  }
  return s;
}

SuiteResult cocycle_suite(const SuiteOptions& o) {
  SuiteResult res{"cocycle", "c_{uv}(lambda) = c_u(v lambda) c_v(lambda)", {}, 0};
  Rng rng(o.seed + 10);
  const double tol = rel_tol_or(o, 1e-10);
  std::vector<RootDatum> data;
  if (o.datum) {
    data.push_back(*o.datum);
  } else {
    data.push_back(datum::a2(1));
    data.push_back(datum::b2(1, 2, 0));
  }
  for (const RootDatum& d : data) {
    const auto group = enumerate_weyl_group(d);
    std::vector<std::pair<WeylElement, WeylElement>> pairs;
    for (const auto& u : group) {
      for (const auto& v : group) {
        if (!u.word.empty() && !v.word.empty() && is_reduced(d, u * v)) {
          pairs.emplace_back(u, v);
        }
      }
    }
    const WeylElement w0 = longest_element(d);
    for (int k = 0; k < 100; ++k) {
      const SpectralParam lam = random_param(rng, d.rank());
      const std::string lbl = d.name() + " lambda=" + param_str(lam);
      for (const auto& [u, v] : pairs) {
        const std::string l2 = lbl + " u=" + word_str(u) + " v=" + word_str(v);
        guarded(res.rows, l2, tol, [&] {
          const Complex lhs = c_sigma(d, u * v, lam);
          const Complex rhs = c_sigma(d, u, weyl_apply(d, v, lam)) * c_sigma(d, v, lam);
          return rel_row(l2, lhs, rhs, tol);
        });
      }
      const double tol0 = rel_tol_or(o, 1e-13);
      guarded(res.rows, lbl + " c_w0 = c", tol0, [&] {
        return rel_row(lbl + " c_w0 = c", c_sigma(d, w0, lam), c_full(d, lam), tol0);
      });
    }
  }
  return res;
}

SuiteResult det_a_suite(const SuiteOptions& o) {
  SuiteResult res{"det-a", "det A(lambda, sigma) on V_delta^M", {}, 0};
  Rng rng(o.seed + 11);
  if (!o.datum || o.datum->rank() == 1) {
    // Rank-one reduction: det A = C_sigma(-lambda).
    const double tol = rel_tol_or(o, 1e-12);
    const auto lams = lambdas_or(o, rng, 10, 0.1, 3, -1, 1);
    std::vector<std::pair<RankOneSpace, std::vector<std::string>>> cases;
    if (o.spaces.empty()) {
      cases = {{hyperbolic_space(2), {"s1r0", "s2r0"}},
               {RankOneSpace(4, 3), {"s1r1", "s2r1"}}};
    } else {
      for (const RankOneSpace& sp : o.spaces) cases.push_back({sp, {"s1r0"}});
    }
    for (const auto& [sp, defaults] : cases) {
      const RootDatum d = datum::rank_one(sp.m_alpha, sp.m_2alpha);
      for (const auto& [kname, kt] : ktypes_for(o, sp, defaults)) {
        const FactorKTypeTable table(WeylElement{{1}}, {{{1, 1}, FactorEntry{sp, kt}}});
        for (Complex Lam : lams) {
          const std::string lbl =
              space_name(sp) + " " + kname + " " + lam_label(Lam);
          guarded(res.rows, lbl, tol, [&] {
            return rel_row(lbl, det_A(d, table.word(), SpectralParam{{Lam}}, table),
                           C_sigma_minus(sp, kt, Lam), tol);
          });
        }
      }
    }
  }
  if (!o.datum || o.datum->rank() > 1) {
    const double tol = rel_tol_or(o, 1e-10);
    const RootDatum d = o.datum ? *o.datum : datum::a2(1);
    const FactorKTypeTable table = o.table ? *o.table : default_a2_table();
    for (int k = 0; k < 10; ++k) {
      const SpectralParam lam = random_param(rng, d.rank());
      const std::string lbl =
          d.name() + " w=" + word_str(table.word()) + " lambda=" + param_str(lam);
      guarded(res.rows, lbl, tol, [&] {
        return rel_row(lbl, det_A(d, table.word(), lam, table),
                       det_A_factorwise(d, table.word(), lam, table), tol);
      });
    }
  }
  return res;
}

SuiteResult simple_suite(const SuiteOptions& o) {
  SuiteResult res{"simple", "simplicity predicate", {}, 0};
  Rng rng(o.seed + 12);
  auto bool_row = [](std::string label, bool got, bool want, std::string note) {
    CheckRow r{std::move(label), got ? 1.0 : 0.0, want ? 1.0 : 0.0,
               got == want ? 0.0 : 1.0, 0.5, got == want, 0, std::move(note)};
    return r;
  };
  const RootDatum h2 = datum::hyperbolic(2);
  res.rows.push_back(bool_row("H2 Lambda=1.5i", is_simple(h2, SpectralParam{{Complex(0, 1.5)}}),
                              false, "1 = simple"));
  for (int k = 0; k < 50; ++k) {
    double xi = 0;
    while (std::abs(xi) < 0.05) xi = uniform(rng, -3, 3);
    const Complex Lam(xi, uniform(rng, -3, 3));
    res.rows.push_back(bool_row("H2 " + lam_label(Lam),
                                is_simple(h2, SpectralParam{{Lam}}), true,
                                "1 = simple"));
  }
  // Multiplicity flips: on a grid of x = i Lambda the flagged set must match
  // x in {-(m/2 + 1) - 2k} u {-(m/2 + m2) - 2k}, and must move when m changes.
  std::map<std::pair<int, int>, std::vector<int>> flagged;
  const std::vector<std::pair<int, int>> mults = {{1, 0}, {2, 0}, {3, 0}, {1, 1}, {2, 1}, {4, 3}};
  for (auto [m, m2] : mults) {
    const RootDatum d = datum::rank_one(m, m2);
    for (int k = -80; k <= 16; ++k) {
      const double x = k / 4.0;
      bool want = true;
      for (double base : {0.5 * m + 1.0, 0.5 * m + m2}) {
        const double j = (-x - base) / 2.0;
        if (j >= -1e-12 && std::abs(j - std::round(j)) < 1e-12) want = false;
      }
      const bool got = is_simple(d, SpectralParam{{Complex(0, -x)}});
      if (!got) flagged[{m, m2}].push_back(k);
      res.rows.push_back(bool_row("m=(" + std::to_string(m) + "," +
                                      std::to_string(m2) + ") iLambda=" + fmt(x),
                                  got, want, "1 = simple"));
    }
  }
  for (std::size_t a = 0; a + 1 < mults.size(); ++a) {
    const auto& fa = flagged[mults[a]];
    const auto& fb = flagged[mults[a + 1]];
    res.rows.push_back(bool_row(
        "flagged set changes between m=(" + std::to_string(mults[a].first) + "," +
            std::to_string(mults[a].second) + ") and m=(" +
            std::to_string(mults[a + 1].first) + "," +
            std::to_string(mults[a + 1].second) + ")",
        fa != fb, true, "1 = sets differ"));
  }
  return res;
}

SuiteResult small_t_suite(const SuiteOptions& o) {
  SuiteResult res{"small-t", "phi_lambda / phi_{-lambda} as t -> 0", {}, 0};
  const double tol = abs_tol_or(o, 1e-4);
  std::vector<Complex> lams = o.lambdas;
  if (lams.empty()) lams = {0.7, Complex(1.3, -0.2), Complex(0.4, 0.3)};
  const RankOneSpace h2 = hyperbolic_space(2);
  for (const RankOneSpace& sp : spaces_or(o, {h2})) {
    for (const auto& [kname, kt] : ktypes_for(o, sp, {"s1r0", "s2r0"})) {
      for (Complex Lam : lams) {
        const std::string lbl =
            space_name(sp) + " " + kname + " " + lam_label(Lam) + " t=1e-3";
        guarded(res.rows, lbl, tol, [&] {
          const Complex target =
              c_lambda_delta(sp, kt, Lam) / c_lambda_delta(sp, kt, -Lam);
          return abs_row(lbl, small_t_ratio(sp, kt, Lam, 1e-3), target, tol);
        });
        const std::string l2 = space_name(sp) + " " + kname + " " +
                               lam_label(Lam) + " t=1e-3 vs 1e-4";
        guarded(res.rows, l2, 1e-3, [&] {
          return abs_row(l2, small_t_ratio(sp, kt, Lam, 1e-3),
                         small_t_ratio(sp, kt, Lam, 1e-4), 1e-3);
        });
      }
    }
  }
  return res;
}

SuiteResult eigen_suite(const SuiteOptions& o) {
  SuiteResult res{"eigen", "radial eigen-equation residual", {}, 0};
  const double tol = rel_tol_or(o, 1e-6);
  std::vector<Complex> lams = o.lambdas;
  if (lams.empty()) lams = {0.8, Complex(1.7, -0.4), Complex(0.3, 0.6)};
  for (const RankOneSpace& sp :
       spaces_or(o, {hyperbolic_space(2), hyperbolic_space(3), RankOneSpace(2, 1)})) {
    for (Complex Lam : lams) {
      const Complex mu = -(Lam * Lam + sp.rho() * sp.rho());
      auto f = [&](double t) { return phi_zonal(sp, Lam, t); };
      std::vector<double> ts;
      for (int k = 0; k < 20; ++k) ts.push_back(0.3 + k * (4.0 - 0.3) / 19.0);
      std::vector<Complex> phi, Lphi;
      double scale = 0;
      const std::string base = space_name(sp) + " " + lam_label(Lam);
      try {
        for (double t : ts) {
          phi.push_back(f(t));
          Lphi.push_back(oracle::radial_laplacian_fd(f, t, sp.m_alpha, sp.m_2alpha));
          scale = std::max(scale, std::abs(phi.back()));
        }
      } catch (const std::exception& e) {
        res.rows.push_back(failed_row(base, e, tol));
        continue;
      }
      Complex num = 0;
      double den = 0;
      for (std::size_t k = 0; k < ts.size(); ++k) {
        const Complex resid = Lphi[k] - mu * phi[k];
        CheckRow r{base + " t=" + fmt(ts[k]), Lphi[k], mu * phi[k],
                   std::abs(resid) / (std::abs(mu) * scale), tol, false, 0,
                   "|L phi - mu phi| / (|mu| max|phi|)"};
        r.pass = std::isfinite(r.metric) && r.metric <= tol;
        res.rows.push_back(r);
        num += std::conj(phi[k]) * Lphi[k];
        den += std::norm(phi[k]);
      }
      res.rows.push_back(rel_row(base + " eigenvalue", num / den, mu, tol));
    }
  }
  return res;
}

SuiteResult catalog_suite(const SuiteOptions& o) {
  SuiteResult res{"catalog", "K-type catalog consistency", {}, 0};
  for (const CatalogEntry& e : o.catalog) {
    const std::string lbl = space_name(e.space) + " " + e.name;
    guarded(res.rows, lbl, 0.5, [&] {
      const KTypeRankOne kt = e.resolve();
      CheckRow r{lbl, double(kt.r), double(kt.s), 0.0, 0.5, true, 0,
                 "closed = r, reference = s"};
      return r;
    });
  }
  return res;
}

using SuiteFn = SuiteResult (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"gamma", gamma_suite},
      {"gauss-sum", gauss_sum_suite},
      {"c-vs-integral", c_vs_integral_suite},
      {"zonal", zonal_suite},
      {"functional-eq", functional_eq_suite},
      {"series", series_suite},
      {"growth", growth_suite},
      {"asymptotic", asymptotic_suite},
      {"csigma", csigma_suite},
      {"hs-norm", hs_norm_suite},
      {"cocycle", cocycle_suite},
      {"det-a", det_a_suite},
      {"simple", simple_suite},
      {"small-t", small_t_suite},
      {"eigen", eigen_suite},
      {"catalog", catalog_suite},
  };
  return r;
}

}  // namespace

bool SuiteResult::pass() const {
  if (rows.empty()) return false;
  return std::all_of(rows.begin(), rows.end(),
                     [](const CheckRow& r) { return r.pass; });
}

double SuiteResult::worst_ratio() const {
  const CheckRow* w = worst_row();
  if (!w) return NAN;
  return w->tol > 0 ? w->metric / w->tol : w->metric;
}

const CheckRow* SuiteResult::worst_row() const {
  const CheckRow* worst = nullptr;
  double wr = -1;
  for (const CheckRow& r : rows) {
    double ratio = r.tol > 0 ? r.metric / r.tol : r.metric;
    if (!r.pass && std::isfinite(ratio)) ratio = std::max(ratio, 1.0);
    if (!std::isfinite(ratio)) ratio = INFINITY;
    if (!worst || ratio > wr) {
      worst = &r;
      wr = ratio;
    }
  }
  return worst;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

// Older spelling of the large-t suite, still accepted on the command line.
static std::string canonical(const std::string& name) {
  return name == "asymptotic-6.7" ? "asymptotic" : name;
}

bool is_suite(const std::string& name) {
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), canonical(name)) != n.end();
}

SuiteResult run_suite(const std::string& raw_name, const SuiteOptions& opts) {
  opts.spec.validate();
  const std::string name = canonical(raw_name);
  for (const auto& [n, fn] : registry()) {
    if (n == name) {
      const auto t0 = std::chrono::steady_clock::now();
      SuiteResult r = fn(opts);
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      return r;
    }
  }
  throw InvalidInput("unknown suite '" + name + "'");
}

FactorKTypeTable default_a2_table() {
  const RankOneSpace sp = hyperbolic_space(2);
  // (j, i) -> s, r = 0 on H^2.
  const int s_of[3][2] = {{1, 2}, {0, 3}, {2, 1}};
  std::map<std::pair<int, int>, FactorEntry> entries;
  for (int j = 1; j <= 3; ++j) {
    for (int i = 1; i <= 2; ++i) {
      entries[{j, i}] = FactorEntry{sp, ktype_from_rs(sp, 0, s_of[j - 1][i - 1])};
    }
  }
  return FactorKTypeTable(WeylElement{{1, 2, 1}}, std::move(entries));
}

}  // namespace sphfun::suites
