#pragma once

#include <cmath>
#include <complex>
#include <initializer_list>

namespace sphfun {

using Complex = std::complex<double>;

// Absolute distance below which an argument counts as a non-positive integer.
inline constexpr double kPoleTolerance = 1e-12;

// Hard cap on the number of terms summed by any hypergeometric series.
inline constexpr int kSeriesTermCap = 100000;

inline bool is_finite(Complex z) noexcept {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// True when z lies within `tol` of {0, -1, -2, ...}.
bool near_nonpositive_integer(Complex z, double tol = kPoleTolerance) noexcept;

// sin(pi z) with exact argument reduction, so that zeros at integers are
// reproduced without the rounding of pi * z.
Complex sin_pi(Complex z) noexcept;

// Gamma function. Throws PoleError near non-positive integers.
Complex gamma(Complex z);

// A logarithm of Gamma, suitable for ratios: exp(log_gamma(z)) == gamma(z),
// with the imaginary part continuous in z on Re z >= 1/2 (the branch used by
// differences does not matter once exponentiated).
Complex log_gamma(Complex z);

// 1 / Gamma(z); entire, exactly zero at the poles of Gamma.
Complex rgamma(Complex z);

// Digamma function psi(z) = Gamma'(z) / Gamma(z).
Complex digamma(Complex z);

// prod Gamma(num) / prod Gamma(den), evaluated in log space.
// A pole in the numerator throws PoleError(numerator); a pole in the
// denominator alone makes the ratio exactly zero.
Complex gamma_ratio(std::initializer_list<Complex> num,
                    std::initializer_list<Complex> den);

// Gauss hypergeometric 2F1(a, b; c; z) for |z| <= 1.
//
// Direct power series for |z| <= 0.9; otherwise the 1 - z connection formula
// (with the logarithmic form when c - a - b is an integer) or the Pfaff
// transformation, whichever gives the smaller series argument.
Complex gauss_2f1(Complex a, Complex b, Complex c, Complex z);

// Same, with 1 - z supplied by the caller. Use this when z is close to 1 and
// 1 - z is known more accurately than the rounded difference (z = tanh^2 t).
Complex gauss_2f1(Complex a, Complex b, Complex c, Complex z,
                  Complex one_minus_z);

// Gauss summation 2F1(a, b; c; 1) = G(c) G(c-a-b) / (G(c-a) G(c-b)).
// Requires Re(c - a - b) > 0 (DomainError otherwise).
Complex gauss_2f1_at_one(Complex a, Complex b, Complex c);

}  // namespace sphfun
