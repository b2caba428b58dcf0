#pragma once

// Reference computations that share no code path with the library kernels
// they check.

#include <functional>
#include <vector>

#include "sphfun/complexmath.hpp"

namespace sphfun::oracle {

// Gamma(z) = int_R exp(z u - e^u) du by the trapezoid rule on [-80, 4] with
// step 0.05 (spectrally accurate for this doubly-exponential integrand).
// Requires Re z > 0.5.
Complex gamma_trapezoid(Complex z);

// Solves S(h_k) = S + sum_j A_j h_k^{p_j} for S from samples at h_k, using
// as many samples as exponents + 1.
Complex richardson(const std::vector<double>& h, const std::vector<Complex>& samples,
                   const std::vector<Complex>& exponents);

// 2F1(a, b; c; 1) from partial sums of the series at z = 1 with N = 1000 2^k,
// k = 0..5, extrapolated in N^{-(c-a-b)-j}, j = 0..4. Needs Re(c-a-b) > 0.
Complex gauss_sum_series_limit(Complex a, Complex b, Complex c);

// z -> 1^- limit of f(z) = F(a,b;c;z) given as a callable of w = 1 - z,
// sampled at w = 10^-2 2^-k and extrapolated in w^delta, w, w^{delta+1}, ...
Complex z_to_one_limit(const std::function<Complex(double)>& f_of_w,
                       Complex delta);

// Radial Laplacian (d^2/dt^2 + (m_a coth t + 2 m_2a coth 2t) d/dt) applied to
// f by fourth-order central differences with step h.
Complex radial_laplacian_fd(const std::function<Complex(double)>& f, double t,
                            int m_alpha, int m_2alpha, double h = 1e-3);

}  // namespace sphfun::oracle
