#include "oracles.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace sphfun::oracle {

Complex gamma_trapezoid(Complex z) {
  if (!(z.real() > 0.5)) {
    throw std::invalid_argument("gamma_trapezoid: needs Re z > 0.5");
  }
  constexpr double lo = -80.0, hi = 4.0, h = 0.05;
  const int n = static_cast<int>(std::lround((hi - lo) / h));
  Complex sum = 0.0;
  for (int k = 0; k <= n; ++k) {
    const double u = lo + k * h;
    const double w = (k == 0 || k == n) ? 0.5 : 1.0;
    sum += w * std::exp(z * u - std::exp(u));
  }
  return h * sum;
}

Complex richardson(const std::vector<double>& h,
                   const std::vector<Complex>& samples,
                   const std::vector<Complex>& exponents) {
  const std::size_t m = exponents.size() + 1;
  if (h.size() < m || samples.size() < m) {
    throw std::invalid_argument("richardson: not enough samples");
  }
  // Use the last m samples (smallest h).
  const std::size_t off = h.size() - m;
  Eigen::MatrixXcd A(m, m);
  Eigen::VectorXcd y(m);
  for (std::size_t r = 0; r < m; ++r) {
    const double hr = h[off + r];
    A(r, 0) = 1.0;
    for (std::size_t j = 0; j + 1 < m; ++j) {
      A(r, j + 1) = std::exp(exponents[j] * std::log(hr));
    }
    y(r) = samples[off + r];
  }
  const Eigen::VectorXcd x = A.colPivHouseholderQr().solve(y);
  return x(0);
}

Complex gauss_sum_series_limit(Complex a, Complex b, Complex c) {
  const Complex delta = c - a - b;
  if (!(delta.real() > 0.0)) {
    throw std::invalid_argument("gauss_sum_series_limit: Re(c-a-b) <= 0");
  }
  std::vector<double> h;
  std::vector<Complex> sums;
  Complex term = 1.0, sum = 1.0;
  long n = 0;
  for (int k = 0; k <= 5; ++k) {
    const long N = 1000L << k;
    for (; n < N; ++n) {
      const double dn = static_cast<double>(n);
      term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0));
      sum += term;
    }
    h.push_back(1.0 / static_cast<double>(N));
    sums.push_back(sum);
  }
  // S_N - S ~ N^{-delta} (A0 + A1/N + ...), i.e. powers of h = 1/N.
  std::vector<Complex> exps;
  for (int j = 0; j < 5; ++j) exps.push_back(delta + static_cast<double>(j));
  return richardson(h, sums, exps);
}

Complex z_to_one_limit(const std::function<Complex(double)>& f_of_w,
                       Complex delta) {
  std::vector<double> h;
  std::vector<Complex> vals;
  for (int k = 0; k <= 6; ++k) {
    const double w = 1e-2 * std::ldexp(1.0, -k);
    h.push_back(w);
    vals.push_back(f_of_w(w));
  }
  const std::vector<Complex> exps = {delta, 1.0, delta + 1.0, 2.0,
                                     delta + 2.0, 3.0};
  return richardson(h, vals, exps);
}

Complex radial_laplacian_fd(const std::function<Complex(double)>& f, double t,
                            int m_alpha, int m_2alpha, double h) {
  const Complex fm2 = f(t - 2 * h), fm1 = f(t - h), f0 = f(t), fp1 = f(t + h),
                fp2 = f(t + 2 * h);
  const Complex d2 = (-fp2 + 16.0 * fp1 - 30.0 * f0 + 16.0 * fm1 - fm2) /
                     (12.0 * h * h);
  const Complex d1 = (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * h);
  const double drift =
      m_alpha / std::tanh(t) + 2.0 * m_2alpha / std::tanh(2.0 * t);
  return d2 + drift * d1;
}

}  // namespace sphfun::oracle
