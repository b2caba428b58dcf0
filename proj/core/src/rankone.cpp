#include "sphfun/rankone.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>

#include "sphfun/cfun.hpp"
#include "sphfun/errors.hpp"

namespace sphfun {

namespace {

constexpr Complex kI(0.0, 1.0);

std::optional<int> integer_root(double x) {
  const double n = std::nearbyint(x);
  if (std::abs(x - n) > kRsTolerance) return std::nullopt;
  return static_cast<int>(n);
}

// Real roots of x^2 + p x + q = 0 (empty if complex).
std::vector<double> real_roots(double p, double q) {
  double disc = p * p - 4.0 * q;
  if (disc < 0.0) {
    if (disc > -1e-9) {
      disc = 0.0;
    } else {
      return {};
    }
  }
  const double sq = std::sqrt(disc);
  return {0.5 * (-p - sq), 0.5 * (-p + sq)};
}

// log cosh t, accurate for large t.
double log_cosh(double t) {
  const double a = std::abs(t);
  return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
}

void check_t(double t, const char* fn) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw DomainError(std::string(fn) + ": t must be finite and >= 0");
  }
}

// Hypergeometric parameters of the closed form.
struct PhiParams {
  Complex a, b, c;
};

PhiParams phi_params(const RankOneSpace& sp, const KTypeRankOne& kt,
                     Complex l) {
  const double r = kt.r, s = kt.s;
  return {0.5 * (s + r - l), 0.5 * (s - r + 1.0 - sp.m_2alpha - l),
          Complex(s + 0.5 * (sp.m_alpha + sp.m_2alpha + 1.0))};
}

// tanh^s t * F(...; tanh^2 t), with 1 - tanh^2 t = sech^2 t passed exactly.
Complex tanh_s_times_F(const RankOneSpace& sp, const KTypeRankOne& kt,
                       Complex l, double t) {
  const PhiParams p = phi_params(sp, kt, l);
  const double th = std::tanh(t);
  const double sech = 1.0 / std::cosh(t);
  const Complex F = gauss_2f1(p.a, p.b, p.c, th * th, sech * sech);
  return std::pow(th, kt.s) * F;
}

}  // namespace

RankOneSpace::RankOneSpace(int m_a, int m_2a) : m_alpha(m_a), m_2alpha(m_2a) {
  if (m_alpha < 1 || m_2alpha < 0) {
    throw InvalidInput("rank-one space: require m_alpha >= 1, m_2alpha >= 0");
  }
}

RankOneSpace hyperbolic_space(int n) {
  if (n < 2) throw InvalidInput("hyperbolic space needs n >= 2");
  return RankOneSpace(n - 1, 0);
}

std::pair<int, int> solve_rs(const RankOneSpace& sp, double d_alpha,
                             double d_2alpha) {
  const double M = sp.m_alpha + sp.m_2alpha;
  std::optional<int> s;
  for (double root : real_roots(M - 1.0, d_alpha + 0.25 * d_2alpha)) {
    if (root < -kRsTolerance) continue;
    if (auto n = integer_root(root)) s = std::max(s.value_or(*n), *n);
  }
  if (!s) {
    std::ostringstream os;
    os << "solve_rs: s(s + " << M - 1 << ") = " << -d_alpha - 0.25 * d_2alpha
       << " has no non-negative integer root";
    throw InvalidInput(os.str());
  }
  std::vector<int> candidates;
  for (double root : real_roots(sp.m_2alpha - 1.0, 0.25 * d_2alpha)) {
    if (auto n = integer_root(root); n && *n <= *s) candidates.push_back(*n);
  }
  if (candidates.empty()) {
    std::ostringstream os;
    os << "solve_rs: r(r + " << sp.m_2alpha - 1 << ") = " << -0.25 * d_2alpha
       << " has no integer root r <= s = " << *s;
    throw InvalidInput(os.str());
  }
  std::sort(candidates.begin(), candidates.end());
  int r = candidates.front();
  for (int c : candidates) {
    if (c >= 0) {
      r = c;
      break;
    }
  }
  return {r, *s};
}

KTypeRankOne make_ktype(const RankOneSpace& sp, double d_alpha,
                        double d_2alpha) {
  const auto [r, s] = solve_rs(sp, d_alpha, d_2alpha);
  return {d_alpha, d_2alpha, r, s};
}

KTypeRankOne ktype_from_rs(const RankOneSpace& sp, int r, int s) {
  if (s < 0 || r > s) throw InvalidInput("K-type: require 0 <= s and r <= s");
  const double d2 = -4.0 * r * (r + sp.m_2alpha - 1.0);
  const double da = -s * (s + sp.m_alpha + sp.m_2alpha - 1.0) - 0.25 * d2;
  KTypeRankOne kt{da, d2, r, s};
  validate_ktype(sp, kt);
  return kt;
}

void validate_ktype(const RankOneSpace& sp, const KTypeRankOne& kt,
                    double tol) {
  if (kt.s < 0) throw InvalidInput("K-type: s must be non-negative");
  if (kt.r > kt.s) throw InvalidInput("K-type: r must not exceed s");
  const double r = kt.r, s = kt.s;
  const double res_r = r * (r + sp.m_2alpha - 1.0) + 0.25 * kt.d_2alpha;
  const double res_s = s * (s + sp.m_alpha + sp.m_2alpha - 1.0) + kt.d_alpha +
                       0.25 * kt.d_2alpha;
  if (std::abs(res_r) > tol || std::abs(res_s) > tol) {
    std::ostringstream os;
    os << "K-type (r=" << kt.r << ", s=" << kt.s << ") does not solve its "
       << "quadratics for (m_alpha=" << sp.m_alpha
       << ", m_2alpha=" << sp.m_2alpha << "): residuals " << res_r << ", "
       << res_s;
    throw InvalidInput(os.str());
  }
}

Complex c_lambda_delta(const RankOneSpace& sp, const KTypeRankOne& kt,
                       Complex Lam) {
  const Complex X = kI * Lam + sp.rho();
  const double r = kt.r, s = kt.s;
  const Complex Y = X + 1.0 - static_cast<double>(sp.m_2alpha);
  try {
    return gamma_ratio({0.5 * (X + s + r), 0.5 * (Y + s - r)},
                       {0.5 * X, 0.5 * Y});
  } catch (const PoleError& e) {
    throw PoleError(std::string("c_lambda_delta: ") + e.what(), e.kind());
  }
}

Complex phi_tau(const RankOneSpace& sp, const KTypeRankOne& kt, Complex Lam,
                double t) {
  check_t(t, "phi_tau");
  if (kt.s > 0 && t == 0.0) return 0.0;
  const Complex l = kI * Lam - sp.rho();
  const Complex cosh_l = std::exp(l * log_cosh(t));
  return c_lambda_delta(sp, kt, Lam) * cosh_l * tanh_s_times_F(sp, kt, l, t);
}

SeriesCoefficients hc_series_gammas(const RankOneSpace& sp, Complex Lam,
                                    int N) {
  if (N < 0) throw InvalidInput("hc_series_gammas: N must be >= 0");
  const Complex x = kI * Lam;
  const Complex mu = x - sp.rho();
  std::vector<double> A(static_cast<std::size_t>(N) + 1, 0.0);
  for (int j = 2; j <= N; j += 2) {
    A[j] = 2.0 * sp.m_alpha + (j % 4 == 0 ? 4.0 * sp.m_2alpha : 0.0);
  }
  SeriesCoefficients out;
  out.lam = Lam;
  out.truncation = N;
  out.gammas.assign(static_cast<std::size_t>(N) + 1, 0.0);
  out.gammas[0] = 1.0;
  for (int n = 2; n <= N; n += 2) {
    const Complex denom = static_cast<double>(n) * (static_cast<double>(n) - 2.0 * x);
    if (std::abs(static_cast<double>(n) - 2.0 * x) < 1e-9) {
      std::ostringstream os;
      os << "hc_series_gammas: resonance at n = " << n << " (iLambda = " << x
         << ")";
      throw ResonanceError(os.str(), n);
    }
    Complex acc = 0.0;
    for (int j = 2; j <= n; j += 2) {
      acc += A[j] * (mu - static_cast<double>(n - j)) * out.gammas[n - j];
    }
    out.gammas[n] = -acc / denom;
  }
  return out;
}

namespace {

// c(w Lambda) e^{(i w Lambda - rho) t} sum_{n<=N} Gamma_n e^{-nt}.
Complex series_branch(const RankOneSpace& sp, Complex Lam, double t, int N) {
  const SeriesCoefficients g = hc_series_gammas(sp, Lam, N);
  Complex sum = 0.0;
  for (int n = N; n >= 0; --n) sum = sum * std::exp(-t) + g.gammas[n];
  const Complex lead = std::exp((kI * Lam - sp.rho()) * t);
  return c_alpha(Lam, sp.m_alpha, sp.m_2alpha) * lead * sum;
}

}  // namespace

Complex hc_series_eval(const RankOneSpace& sp, Complex Lam, double t, int N) {
  if (!(t > 0.0)) throw DomainError("hc_series_eval: t must be > 0");
  return series_branch(sp, Lam, t, N) + series_branch(sp, -Lam, t, N);
}

double hc_series_tail_estimate(const RankOneSpace& sp, Complex Lam, double t,
                               int N) {
  if (!(t > 0.5)) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (Complex L : {Lam, -Lam}) {
    const SeriesCoefficients g = hc_series_gammas(sp, L, N);
    // Odd coefficients vanish; the last non-zero one sets the scale.
    const int last = N % 2 == 0 ? N : N - 1;
    const double lead =
        std::abs(c_alpha(L, sp.m_alpha, sp.m_2alpha) *
                 std::exp((kI * L - sp.rho()) * t));
    const double term = std::abs(g.gammas[last]) * std::exp(-last * t);
    worst = std::max(worst, lead * term / (1.0 - std::exp(-(t - 0.5))));
  }
  return worst;
}

Complex C_e(const RankOneSpace& sp, Complex Lam) {
  return c_alpha(Lam, sp.m_alpha, sp.m_2alpha);
}

Complex C_sigma_minus(const RankOneSpace& sp, const KTypeRankOne& kt,
                      Complex Lam) {
  return c_lambda_delta(sp, kt, -Lam) / c_lambda_delta(sp, kt, Lam) *
         c_alpha(Lam, sp.m_alpha, sp.m_2alpha);
}

double asymptotic_factor(const RankOneSpace& sp, const KTypeRankOne& kt) {
  const double half_n = 0.5 * sp.dim();
  return std::exp(std::lgamma(kt.s + half_n) - std::lgamma(half_n));
}

Complex limit_large_t(const RankOneSpace& sp, const KTypeRankOne& kt,
                      Complex Lam, double t) {
  check_t(t, "limit_large_t");
  const Complex l = kI * Lam - sp.rho();
  // (2 cosh t)^{-l} cosh^l t = 2^{-l}
  const Complex two_pow = std::exp(-l * std::numbers::ln2);
  if (kt.s > 0 && t == 0.0) return 0.0;
  return c_lambda_delta(sp, kt, Lam) * two_pow * tanh_s_times_F(sp, kt, l, t);
}

Complex limit_large_t_value(const RankOneSpace& sp, const KTypeRankOne& kt,
                            Complex Lam) {
  return asymptotic_factor(sp, kt) * c_alpha(Lam, sp.m_alpha, sp.m_2alpha);
}

Complex small_t_ratio(const RankOneSpace& sp, const KTypeRankOne& kt,
                      Complex Lam, double t) {
  if (!(t > 0.0)) throw DomainError("small_t_ratio: t must be > 0");
  const Complex num = phi_tau(sp, kt, Lam, t);
  const Complex den = phi_tau(sp, kt, -Lam, t);
  if (std::abs(den) <= 1e-300 || std::abs(den) <= 1e-14 * std::abs(num)) {
    throw DomainError("small_t_ratio: phi_{-lambda,delta}(a_t) vanishes");
  }
  return num / den;
}

std::pair<Complex, Complex> extract_leading_coefficients(
    const RankOneSpace& sp, const KTypeRankOne& kt, Complex Lam, double t1,
    double t2) {
  if (!(t1 > 0.0 && t2 > 0.0 && t1 != t2)) {
    throw DomainError("extract_leading_coefficients: need distinct t1, t2 > 0");
  }
  // phi(t) e^{rho t} = K1 e^{iLambda t} + K2 e^{-iLambda t}; solve 2x2.
  const Complex x = kI * Lam;
  const Complex y1 = phi_tau(sp, kt, Lam, t1) * std::exp(sp.rho() * t1);
  const Complex y2 = phi_tau(sp, kt, Lam, t2) * std::exp(sp.rho() * t2);
  const Complex a11 = std::exp(x * t1), a12 = std::exp(-x * t1);
  const Complex a21 = std::exp(x * t2), a22 = std::exp(-x * t2);
  const Complex det = a11 * a22 - a12 * a21;
  if (std::abs(det) < 1e-12) {
    throw DomainError("extract_leading_coefficients: singular sample pair");
  }
  return {(y1 * a22 - a12 * y2) / det, (a11 * y2 - a21 * y1) / det};
}

}  // namespace sphfun
