#pragma once

#include <optional>

#include "sphfun/complexmath.hpp"
#include "sphfun/errors.hpp"
#include "sphfun/rootdata.hpp"

namespace sphfun {

// Result of a c-function evaluation that may have hit a Gamma pole.
struct CFunctionValue {
  Complex value;
  bool pole_flag = false;
  std::optional<PoleKind> pole_kind;
  std::optional<std::size_t> pole_root;
};

inline constexpr double kSimpleTolerance = 1e-9;

// Rank-one factor of the Gindikin-Karpelevic product at iLambda = <i lambda,
// alpha_0>:
//   kappa * 2^{-(iLambda - rho_a)} G((m_a + m_2a + 1)/2) G(iLambda)
//         / [ G((m_a/2 + 1 + iLambda)/2) G((m_a/2 + m_2a + iLambda)/2) ]
// with rho_a = m_a/2 + m_2a and kappa chosen so that the value at
// iLambda = rho_a is 1.
// Throws PoleError(numerator) at iLambda in {0, -1, ...} and
// PoleError(denominator) where a denominator Gamma argument is a pole.
Complex c_alpha(Complex Lam, int m_alpha, int m_2alpha);

// The product formula exactly as printed (kappa omitted).
Complex c_alpha_verbatim(Complex Lam, int m_alpha, int m_2alpha);

// verbatim / calibrated, i.e. 1/kappa; reported for transparency.
double c_alpha_calibration_diagnostic(int m_alpha, int m_2alpha);

// Product of c_alpha over Sigma_0^+.
Complex c_full(const RootDatum& datum, const SpectralParam& lam);

// c_full / c_full(-i rho), so that the value at lambda = -i rho is 1 in any
// rank. Equal to c_full in rank one.
Complex c_full_normalized(const RootDatum& datum, const SpectralParam& lam);

// Product of c_alpha over negative_set(w). w must be reduced.
Complex c_sigma(const RootDatum& datum, const WeylElement& w,
                const SpectralParam& lam);

// Non-throwing variants: a pole yields {NaN, pole_flag = true, kind, root}.
CFunctionValue c_full_flagged(const RootDatum& datum, const SpectralParam& lam);
CFunctionValue c_sigma_flagged(const RootDatum& datum, const WeylElement& w,
                               const SpectralParam& lam);

// The two denominator Gamma arguments of root j at lambda.
struct DenominatorArgs {
  Complex first;   // (m_a/2 + 1 + <i lambda, alpha_0>) / 2
  Complex second;  // (m_a/2 + m_2a + <i lambda, alpha_0>) / 2
};
DenominatorArgs denominator_args(const RootDatum& datum,
                                 const SpectralParam& lam, std::size_t j);

// False exactly when some denominator argument lies within tol of a
// non-positive integer, i.e. 1/Gamma^+_X(lambda) = 0.
bool is_simple(const RootDatum& datum, const SpectralParam& lam,
               double tol = kSimpleTolerance);

// Gamma^+_X(lambda) = prod_j G(first_j) G(second_j). Throws PoleError
// (denominator) at non-simple lambda.
Complex gamma_plus_X(const RootDatum& datum, const SpectralParam& lam);

}  // namespace sphfun
