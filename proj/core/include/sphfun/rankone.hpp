#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sphfun/complexmath.hpp"

namespace sphfun {

// Rank-one symmetric space by multiplicities, normalized by alpha(H) = 1.
struct RankOneSpace {
  int m_alpha = 1;
  int m_2alpha = 0;

  RankOneSpace() = default;
  RankOneSpace(int m_alpha, int m_2alpha);

  // rho(H) = m_alpha/2 + m_2alpha.
  double rho() const noexcept { return 0.5 * m_alpha + m_2alpha; }
  // n = dim X = m_alpha + m_2alpha + 1.
  int dim() const noexcept { return m_alpha + m_2alpha + 1; }

  friend bool operator==(const RankOneSpace&, const RankOneSpace&) = default;
};

// Real hyperbolic space H^n.
RankOneSpace hyperbolic_space(int n);

// Rank-one K-type data. (r, s) are integers with r <= s solving
//   r (r + m_2a - 1) = -d_2a / 4,   s (s + m_a + m_2a - 1) = -d_a - d_2a / 4.
struct KTypeRankOne {
  double d_alpha = 0.0;
  double d_2alpha = 0.0;
  int r = 0;
  int s = 0;

  static KTypeRankOne trivial() { return {}; }
  friend bool operator==(const KTypeRankOne&, const KTypeRankOne&) = default;
};

// Integer tolerance for solving the (r, s) quadratics.
inline constexpr double kRsTolerance = 1e-9;

// Selects (r, s): s is the non-negative root; r is an integer root with
// r <= s, non-negative preferred, then the smallest. Throws InvalidInput when
// no admissible integer root exists.
std::pair<int, int> solve_rs(const RankOneSpace& space, double d_alpha,
                             double d_2alpha);

// K-type from (d_alpha, d_2alpha) via solve_rs.
KTypeRankOne make_ktype(const RankOneSpace& space, double d_alpha,
                        double d_2alpha);

// K-type from (r, s), with d_alpha, d_2alpha recomputed from the quadratics.
KTypeRankOne ktype_from_rs(const RankOneSpace& space, int r, int s);

// Residuals of both quadratics; throws InvalidInput above tol or if r > s or
// s < 0.
void validate_ktype(const RankOneSpace& space, const KTypeRankOne& kt,
                    double tol = 1e-12);

// c_{lambda,delta} = G((X+s+r)/2)/G(X/2) * G((X+1-m_2a+s-r)/2)/G((X+1-m_2a)/2),
// X = iLambda + rho(H).
Complex c_lambda_delta(const RankOneSpace& space, const KTypeRankOne& kt,
                       Complex Lam);

// phi_{lambda,delta}(a_t) = c_{lambda,delta} tanh^s t cosh^l t
//   F((s+r-l)/2, (s-r-l+1-m_2a)/2; s + (m_a+m_2a+1)/2; tanh^2 t),
// l = iLambda - rho(H).
Complex phi_tau(const RankOneSpace& space, const KTypeRankOne& kt, Complex Lam,
                double t);

// Zonal spherical function (trivial K-type).
inline Complex phi_zonal(const RankOneSpace& space, Complex Lam, double t) {
  return phi_tau(space, KTypeRankOne::trivial(), Lam, t);
}

struct SeriesCoefficients {
  std::vector<Complex> gammas;  // Gamma_0 .. Gamma_N
  Complex lam;
  int truncation = 0;
};

// Coefficients of phi_lambda(a_t) = sum_w c(w lambda) e^{(i w lambda - rho)t}
// sum_n Gamma_n(w lambda) e^{-nt}, from the recursion
//   n (n - 2 iLambda) Gamma_n = -sum_{j=1}^{n} A_j (mu - n + j) Gamma_{n-j},
// mu = iLambda - rho, A_j = 2 m_a [j even] + 4 m_2a [4 | j].
// Throws ResonanceError when n - 2 iLambda vanishes for an even n <= N.
SeriesCoefficients hc_series_gammas(const RankOneSpace& space, Complex Lam,
                                    int N);

inline constexpr int kDefaultSeriesTerms = 40;

// Two-term Harish-Chandra expansion truncated at N. Requires t > 0.
Complex hc_series_eval(const RankOneSpace& space, Complex Lam, double t,
                       int N = kDefaultSeriesTerms);

// A posteriori tail bound max_w |Gamma_N(w Lambda) e^{-Nt}| / (1 - e^{-(t-1/2)})
// scaled by |c(w Lambda) e^{(i w Lambda - rho)t}|; +inf for t <= 1/2.
double hc_series_tail_estimate(const RankOneSpace& space, Complex Lam,
                               double t, int N = kDefaultSeriesTerms);

// C_e(lambda) = c(lambda).
Complex C_e(const RankOneSpace& space, Complex Lam);

// C_sigma(-lambda) = c_{-lambda,delta} / c_{lambda,delta} * c(lambda).
Complex C_sigma_minus(const RankOneSpace& space, const KTypeRankOne& kt,
                      Complex Lam);

// Gamma(s + n/2) / Gamma(n/2).
double asymptotic_factor(const RankOneSpace& space, const KTypeRankOne& kt);

// (2 cosh t)^{-l} phi_{lambda,delta}(a_t). Tends to
// asymptotic_factor * c(lambda) as t -> oo when Re(iLambda) > 0, i.e.
// Im Lambda < 0; for Im Lambda > 0 the remainder grows like e^{2 Im(Lambda) t}.
Complex limit_large_t(const RankOneSpace& space, const KTypeRankOne& kt,
                      Complex Lam, double t);

// asymptotic_factor * c(lambda).
Complex limit_large_t_value(const RankOneSpace& space, const KTypeRankOne& kt,
                            Complex Lam);

// phi_{lambda,delta}(a_t) / phi_{-lambda,delta}(a_t); DomainError if the
// denominator vanishes.
Complex small_t_ratio(const RankOneSpace& space, const KTypeRankOne& kt,
                      Complex Lam, double t);

// Coefficients (K1, K2) of phi ~ K1 e^{(iLambda - rho)t} + K2 e^{(-iLambda - rho)t}
// recovered from phi_tau at t1 and t2 (both large). For real Lambda these are
// asymptotic_factor * C_e(Lambda) and asymptotic_factor * C_sigma_minus(-Lambda).
std::pair<Complex, Complex> extract_leading_coefficients(
    const RankOneSpace& space, const KTypeRankOne& kt, Complex Lam, double t1,
    double t2);

}  // namespace sphfun
