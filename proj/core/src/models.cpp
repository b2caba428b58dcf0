#include "sphfun/models.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "sphfun/errors.hpp"

namespace sphfun {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI(0.0, 1.0);

void require_dim(int n) {
  if (n < 2) throw InvalidInput("hyperbolic space H^n needs n >= 2");
}

void require_even(int char_n) {
  if (char_n % 2 != 0) {
    throw InvalidInput("character " + std::to_string(char_n) +
                       " is odd: no M-fixed vector (M = {+-1})");
  }
}

// int_0^pi sin^k theta d theta.
double sine_power_integral(int k) {
  return std::sqrt(kPi) * std::exp(std::lgamma(0.5 * (k + 1)) -
                                   std::lgamma(0.5 * k + 1.0));
}

void require_margin(Complex Lam, const char* fn) {
  const double re = (kI * Lam).real();
  if (!(re > 0.05)) {
    std::ostringstream os;
    os << fn << ": Re(iLambda) = " << re
       << " <= 0.05, the N-bar integral does not converge absolutely";
    throw DomainError(os.str());
  }
}

}  // namespace

void require_unimodular(const Matrix2& g) {
  const double scale =
      std::max(1.0, std::abs(g.a * g.d) + std::abs(g.b * g.c));
  if (!(std::abs(g.det() - 1.0) <= 1e-12 * scale)) {
    std::ostringstream os;
    os.precision(17);
    os << "matrix is not unimodular (det = " << g.det() << ")";
    throw InvalidInput(os.str());
  }
}

Matrix2 rotation(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  return {c, -s, s, c};
}

Matrix2 a_t(double t) { return {std::exp(0.5 * t), 0.0, 0.0, std::exp(-0.5 * t)}; }
Matrix2 n_upper(double x) { return {1.0, x, 0.0, 1.0}; }
Matrix2 n_bar(double x) { return {1.0, 0.0, x, 1.0}; }
Matrix2 m_star() { return {0.0, -1.0, 1.0, 0.0}; }

IwasawaKAN iwasawa(const Matrix2& g) {
  require_unimodular(g);
  IwasawaKAN f;
  const double r2 = g.a * g.a + g.c * g.c;
  f.h = std::log(r2);
  f.theta = std::atan2(g.c, g.a);
  // k^{-1} g = [[e^{h/2}, e^{h/2} x], [0, e^{-h/2}]]
  const double c = std::cos(f.theta), s = std::sin(f.theta);
  const double top_right = c * g.b + s * g.d;
  f.x = top_right / std::sqrt(r2);
  return f;
}

Matrix2 reconstruct(const IwasawaKAN& f) {
  return rotation(f.theta) * a_t(f.h) * n_upper(f.x);
}

double iwasawa_H(const Matrix2& g) {
  require_unimodular(g);
  return std::log(g.a * g.a + g.c * g.c);
}

Complex mobius(const Matrix2& g, Complex z) {
  return (g.a * z + g.b) / (g.c * z + g.d);
}

Complex cayley(Complex z) { return (z - kI) / (z + kI); }

Complex disk_point(const Matrix2& g) { return cayley(mobius(g, kI)); }

Complex boundary_point(const Matrix2& k) {
  // k . oo = a / c; the limit of cayley is 1 when c = 0.
  if (k.c == 0.0) return 1.0;
  return cayley(Complex(k.a / k.c, 0.0));
}

double horocycle_bracket(int n, std::span<const double> x,
                         std::span<const double> b) {
  require_dim(n);
  if (x.size() != static_cast<std::size_t>(n) ||
      b.size() != static_cast<std::size_t>(n)) {
    throw InvalidInput("horocycle_bracket: points must have dimension n");
  }
  double xx = 0, bb = 0, dist2 = 0;
  for (int k = 0; k < n; ++k) {
    xx += x[k] * x[k];
    bb += b[k] * b[k];
    dist2 += (x[k] - b[k]) * (x[k] - b[k]);
  }
  if (!(xx < 1.0)) throw DomainError("horocycle_bracket: |x| must be < 1");
  if (std::abs(bb - 1.0) > 1e-12) {
    throw DomainError("horocycle_bracket: b must lie on the unit sphere");
  }
  if (std::sqrt(dist2) < 1e-14) {
    throw DomainError("horocycle_bracket: x is degenerate at the boundary point");
  }
  return std::log((1.0 - xx) / dist2);
}

OracleReport make_report(Complex closed_form, Complex quadrature,
                         std::size_t nodes) {
  OracleReport r;
  r.closed_form = closed_form;
  r.quadrature = quadrature;
  r.abs_err = std::abs(closed_form - quadrature);
  const double scale = std::abs(closed_form);
  r.rel_err = scale > 0.0 ? r.abs_err / scale : r.abs_err;
  r.nodes_used = nodes;
  return r;
}

QuadratureResult quad_phi_K(int n, Complex Lam, double t,
                            const QuadratureSpec& spec) {
  require_dim(n);
  if (!(t >= 0.0)) throw DomainError("quad_phi_K: t must be >= 0");
  const Complex sigma = kI * Lam + 0.5 * (n - 1);
  std::vector<double> x(n, 0.0), b(n, 0.0);
  x[0] = std::tanh(0.5 * t);
  // Polar angle between b and x; the remaining sphere directions integrate
  // out to the weight sin^{n-2}.
  auto f = [&](double theta) -> Complex {
    b[0] = std::cos(theta);
    b[1] = std::sin(theta);
    const double A = horocycle_bracket(n, x, b);
    return std::exp(sigma * A) * std::pow(std::sin(theta), n - 2);
  };
  QuadratureResult r = integrate_interval(f, 0.0, kPi, spec);
  r.value /= sine_power_integral(n - 2);
  r.error_estimate /= sine_power_integral(n - 2);
  return r;
}

QuadratureResult nbar_integral(int n, Complex s, const QuadratureSpec& spec) {
  require_dim(n);
  if (n == 2) {
    // Even integrand over the line.
    auto f = [&](double x) -> Complex {
      return std::exp(-s * iwasawa_H(n_bar(x)));
    };
    QuadratureResult r = integrate_halfline(f, spec);
    r.value *= 2.0;
    r.error_estimate *= 2.0;
    return r;
  }
  auto f = [&](double r) -> Complex {
    return std::exp(-s * std::log1p(r * r)) * std::pow(r, n - 2);
  };
  return integrate_halfline(f, spec);
}

double nbar_measure_constant(int n, const QuadratureSpec& spec) {
  return nbar_integral(n, Complex(n - 1.0), spec).value.real();
}

QuadratureResult quad_c_Nbar(int n, Complex Lam, const QuadratureSpec& spec) {
  require_dim(n);
  require_margin(Lam, "quad_c_Nbar");
  const Complex s = kI * Lam + 0.5 * (n - 1);
  QuadratureResult r = nbar_integral(n, s, spec);
  const double norm = nbar_measure_constant(n, spec);
  r.value /= norm;
  r.error_estimate /= norm;
  return r;
}

QuadratureResult eisenstein_sl2_at(int char_n, Complex Lam, Complex z,
                                   const QuadratureSpec& spec) {
  require_even(char_n);
  if (!(std::abs(z) < 1.0)) throw DomainError("eisenstein_sl2_at: |z| must be < 1");
  const Complex sigma = kI * Lam + 0.5;
  const double xz[2] = {z.real(), z.imag()};
  // boundary_point(k_theta) = e^{-2 i theta}; the Poisson peak sits at
  // theta0 = -arg(z)/2.
  const double theta0 = std::abs(z) > 0.0 ? -0.5 * std::arg(z) : 0.0;
  auto f = [&](double theta) -> Complex {
    const Complex bp = boundary_point(rotation(theta));
    const double bv[2] = {bp.real(), bp.imag()};
    const double A = horocycle_bracket(2, xz, bv);
    return std::exp(sigma * A + kI * (char_n * theta));
  };
  // dk = d theta / pi on SO(2)/{+-1}.
  QuadratureResult left = integrate_interval(f, theta0 - 0.5 * kPi, theta0, spec);
  QuadratureResult right = integrate_interval(f, theta0, theta0 + 0.5 * kPi, spec);
  return {(left.value + right.value) / kPi,
          (left.error_estimate + right.error_estimate) / kPi,
          left.nodes + right.nodes};
}

QuadratureResult quad_eisenstein_sl2(int char_n, Complex Lam, double t,
                                     const QuadratureSpec& spec) {
  if (!(t >= 0.0)) throw DomainError("quad_eisenstein_sl2: t must be >= 0");
  return eisenstein_sl2_at(char_n, Lam, Complex(std::tanh(0.5 * t), 0.0), spec);
}

KTypeRankOne character_ktype(int char_n) {
  require_even(char_n);
  return ktype_from_rs(hyperbolic_space(2), 0, std::abs(char_n) / 2);
}

Complex eisenstein_sl2_closed_form(int char_n, Complex Lam, double t) {
  const RankOneSpace h2 = hyperbolic_space(2);
  const KTypeRankOne kt = character_ktype(char_n);
  return phi_tau(h2, kt, Lam, t) / asymptotic_factor(h2, kt);
}

QuadratureResult quad_Csigma_sl2(int char_n, Complex Lam,
                                 const QuadratureSpec& spec) {
  require_even(char_n);
  require_margin(Lam, "quad_Csigma_sl2");
  const Complex sigma = kI * Lam + 0.5;
  const Matrix2 ms = m_star();
  auto entry = [&](double x) -> Complex {
    const IwasawaKAN f = iwasawa(n_bar(x));
    const Matrix2 k = rotation(-f.theta) * ms;
    const double angle = std::atan2(k.c, k.a);
    return std::exp(-sigma * f.h + kI * (char_n * angle));
  };
  auto f = [&](double x) -> Complex { return entry(x) + entry(-x); };
  QuadratureResult r = integrate_halfline(f, spec);
  const double norm = nbar_measure_constant(2, spec);
  r.value /= norm;
  r.error_estimate /= norm;
  return r;
}

OracleReport functional_equation_check(int n, Complex Lam, double t1, double t2,
                                       const QuadratureSpec& spec) {
  require_dim(n);
  if (!(t1 >= 0.0 && t2 >= 0.0)) {
    throw DomainError("functional_equation_check: t1, t2 must be >= 0");
  }
  std::size_t nodes = 0;
  const double c12 = std::cosh(t1) * std::cosh(t2);
  const double s12 = std::sinh(t1) * std::sinh(t2);
  // d(o, a_{t1} k a_{t2} o) by the hyperbolic law of cosines.
  auto f = [&](double theta) -> Complex {
    const double ch = c12 + s12 * std::cos(theta);
    const double d = std::acosh(std::max(1.0, ch));
    const QuadratureResult inner = quad_phi_K(n, Lam, d, spec);
    nodes += inner.nodes;
    return inner.value * std::pow(std::sin(theta), n - 2);
  };
  QuadratureResult lhs = integrate_interval(f, 0.0, kPi, spec);
  const Complex left = lhs.value / sine_power_integral(n - 2);
  const QuadratureResult p1 = quad_phi_K(n, Lam, t1, spec);
  const QuadratureResult p2 = quad_phi_K(n, Lam, t2, spec);
  return make_report(p1.value * p2.value, left,
                     nodes + lhs.nodes + p1.nodes + p2.nodes);
}

OracleReport functional_equation_check_entry(int char_n, Complex Lam, double t1,
                                             double t2,
                                             const QuadratureSpec& spec) {
  require_even(char_n);
  if (!(t1 >= 0.0 && t2 >= 0.0)) {
    throw DomainError("functional_equation_check_entry: t1, t2 must be >= 0");
  }
  std::size_t nodes = 0;
  const Matrix2 x = a_t(t1), y = a_t(t2);
  auto f = [&](double theta) -> Complex {
    const Complex z = disk_point(x * rotation(theta) * y);
    const QuadratureResult inner = eisenstein_sl2_at(char_n, Lam, z, spec);
    nodes += inner.nodes;
    return inner.value;
  };
  const QuadratureResult lhs = integrate_interval(f, 0.0, kPi, spec);
  const QuadratureResult phi_x = quad_eisenstein_sl2(char_n, Lam, t1, spec);
  const QuadratureResult phi_y = quad_phi_K(2, Lam, t2, spec);
  return make_report(phi_x.value * phi_y.value, lhs.value / kPi,
                     nodes + lhs.nodes + phi_x.nodes + phi_y.nodes);
}

}  // namespace sphfun
