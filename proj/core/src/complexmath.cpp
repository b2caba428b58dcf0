#include "sphfun/complexmath.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "sphfun/errors.hpp"

namespace sphfun {

namespace {

// Lanczos approximation, g = 607/128, 15 terms (Godfrey). Relative error is
// a few ulps on Re z >= 1/2.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczosCoeff = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4,
    .15808870322491248884e-3,   -.21026444172410488319e-3,
    .21743961811521264320e-3,   -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4,
    .36899182659531622704e-5};

constexpr double kHalfLog2Pi = 0.91893853320467274178032973640562;
constexpr double kLogPi = 1.1447298858494001741434273513531;
constexpr double kPi = std::numbers::pi;

std::string describe(Complex z) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << z.real() << "," << z.imag() << ")";
  return os.str();
}

void throw_pole(const char* fn, Complex z) {
  throw PoleError(std::string(fn) + ": argument " + describe(z) +
                      " is at a pole of Gamma",
                  PoleKind::gamma_argument);
}

// log Gamma on Re z >= 1/2.
Complex lanczos_log_gamma(Complex z) {
  const Complex zm1 = z - 1.0;
  Complex series = kLanczosCoeff[0];
  for (std::size_t k = 1; k < kLanczosCoeff.size(); ++k) {
    series += kLanczosCoeff[k] / (zm1 + static_cast<double>(k));
  }
  const Complex t = zm1 + kLanczosG + 0.5;
  return kHalfLog2Pi + (zm1 + 0.5) * std::log(t) - t + std::log(series);
}

// sin(pi x) and cos(pi x) for real x with exact reduction modulo 2.
void sincos_pi(double x, double& s, double& c) {
  double r = std::fmod(x, 2.0);  // exact
  if (r < 0) r += 2.0;
  // Fold onto [-1/4, 1/4] around the nearest quarter point.
  const double q = std::nearbyint(2.0 * r);  // 0..4
  const double f = r - 0.5 * q;              // |f| <= 1/4, exact
  const double sf = std::sin(kPi * f);
  const double cf = std::cos(kPi * f);
  switch (static_cast<int>(q) % 4) {
    case 0: s = sf; c = cf; break;
    case 1: s = cf; c = -sf; break;
    case 2: s = -sf; c = -cf; break;
    default: s = -cf; c = sf; break;
  }
}

// log sin(pi z), finite for large |Im z| where sin(pi z) overflows.
Complex log_sin_pi(Complex z) {
  const double y = z.imag();
  if (std::abs(y) < 20.0) return std::log(sin_pi(z));
  if (y > 0) {
    // sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 pi i z})
    const Complex e = std::exp(Complex(0, 2 * kPi) * z);
    return Complex(0, -kPi) * z + std::log(1.0 - e) +
           Complex(std::log(0.5), kPi / 2);
  }
  return std::conj(log_sin_pi(std::conj(z)));
}

}  // namespace

bool near_nonpositive_integer(Complex z, double tol) noexcept {
  if (std::abs(z.imag()) > tol) return false;
  if (z.real() > tol) return false;
  const double n = std::nearbyint(z.real());
  return std::abs(z - Complex(n, 0.0)) <= tol;
}

Complex sin_pi(Complex z) noexcept {
  double s, c;
  sincos_pi(z.real(), s, c);
  const double y = kPi * z.imag();
  return {s * std::cosh(y), c * std::sinh(y)};
}

Complex log_gamma(Complex z) {
  if (near_nonpositive_integer(z)) throw_pole("log_gamma", z);
  if (z.real() >= 0.5) return lanczos_log_gamma(z);
  return kLogPi - log_sin_pi(z) - lanczos_log_gamma(1.0 - z);
}

Complex gamma(Complex z) {
  if (near_nonpositive_integer(z)) throw_pole("gamma", z);
  if (z.real() >= 0.5) return std::exp(lanczos_log_gamma(z));
  if (std::abs(z.imag()) < 20.0) {
    return kPi / (sin_pi(z) * std::exp(lanczos_log_gamma(1.0 - z)));
  }
  return std::exp(log_gamma(z));
}

Complex rgamma(Complex z) {
  if (near_nonpositive_integer(z)) return 0.0;
  if (z.real() >= 0.5) return std::exp(-lanczos_log_gamma(z));
  return sin_pi(z) * std::exp(lanczos_log_gamma(1.0 - z)) / kPi;
}

Complex digamma(Complex z) {
  if (near_nonpositive_integer(z)) throw_pole("digamma", z);
  if (z.real() < 0.5) {
    // psi(z) = psi(1 - z) - pi cot(pi z)
    double s, c;
    sincos_pi(z.real(), s, c);
    const double y = kPi * z.imag();
    const Complex cos_pz(c * std::cosh(y), -s * std::sinh(y));
    return digamma(1.0 - z) - kPi * cos_pz / sin_pi(z);
  }
  Complex shift = 0.0;
  while (std::abs(z) < 12.0) {
    shift -= 1.0 / z;
    z += 1.0;
  }
  // Asymptotic series with Bernoulli numbers B_2k / (2k).
  static constexpr std::array<double, 8> kB = {
      1.0 / 12,  -1.0 / 120,       1.0 / 252, -1.0 / 240,
      1.0 / 132, -691.0 / 32760.0, 1.0 / 12,  -3617.0 / 8160.0};
  const Complex inv2 = 1.0 / (z * z);
  Complex pw = inv2;
  Complex acc = std::log(z) - 0.5 / z;
  for (double b : kB) {
    acc -= b * pw;
    pw *= inv2;
  }
  return acc + shift;
}

Complex gamma_ratio(std::initializer_list<Complex> num,
                    std::initializer_list<Complex> den) {
  for (Complex z : num) {
    if (near_nonpositive_integer(z)) {
      throw PoleError("gamma_ratio: numerator argument " + describe(z) +
                          " is at a pole",
                      PoleKind::numerator);
    }
  }
  Complex log_sum = 0.0;
  for (Complex z : den) {
    if (near_nonpositive_integer(z)) return 0.0;
    log_sum -= log_gamma(z);
  }
  for (Complex z : num) log_sum += log_gamma(z);
  return std::exp(log_sum);
}

}  // namespace sphfun
