#include <cmath>
#include <numbers>
#include <sstream>

#include "sphfun/complexmath.hpp"
#include "sphfun/errors.hpp"

namespace sphfun {

namespace {

constexpr double kDirectRadius = 0.9;
constexpr double kIntegerTolerance = 1e-9;
constexpr double kEulerGamma = std::numbers::egamma;

std::string fmt_params(Complex a, Complex b, Complex c, Complex z) {
  std::ostringstream os;
  os.precision(10);
  os << "a=" << a << " b=" << b << " c=" << c << " z=" << z;
  return os.str();
}

// Neumaier-compensated complex accumulator.
class Accumulator {
 public:
  void add(Complex x) {
    add_part(sum_re_, comp_re_, x.real());
    add_part(sum_im_, comp_im_, x.imag());
  }
  Complex value() const { return {sum_re_ + comp_re_, sum_im_ + comp_im_}; }

 private:
  static void add_part(double& sum, double& comp, double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  double sum_re_ = 0, comp_re_ = 0, sum_im_ = 0, comp_im_ = 0;
};

bool is_nonpositive_integer(Complex x) {
  return near_nonpositive_integer(x, kPoleTolerance);
}

// Plain power series sum_n (a)_n (b)_n / ((c)_n n!) z^n.
Complex direct_series(Complex a, Complex b, Complex c, Complex z) {
  Accumulator sum;
  Complex term = 1.0;
  sum.add(term);
  int small_run = 0;
  for (int n = 0; n < kSeriesTermCap; ++n) {
    const double dn = n;
    if (std::abs(a + dn) == 0.0 || std::abs(b + dn) == 0.0) {
      return sum.value();  // terminating series
    }
    term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * z;
    sum.add(term);
    const double scale = std::abs(sum.value());
    if (std::abs(term) <= 1e-17 * scale) {
      if (++small_run >= 3) return sum.value();
    } else {
      small_run = 0;
    }
  }
  throw ConvergenceError("gauss_2f1: series did not converge within " +
                         std::to_string(kSeriesTermCap) + " terms (" +
                         fmt_params(a, b, c, z) + ")");
}

// Terminating series when a or b is a non-positive integer.
Complex polynomial_series(Complex a, Complex b, Complex c, Complex z) {
  const Complex top = is_nonpositive_integer(a) ? a : b;
  const int degree = static_cast<int>(-std::nearbyint(top.real()));
  Accumulator sum;
  Complex term = 1.0;
  sum.add(term);
  for (int n = 0; n < degree; ++n) {
    const double dn = n;
    term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * z;
    sum.add(term);
  }
  return sum.value();
}

// Logarithmic connection formula for c = a + b + m, m = 0, 1, 2, ...
Complex log_case_nonnegative(Complex a, Complex b, int m, Complex w) {
  const Complex c = a + b + static_cast<double>(m);
  Accumulator finite;
  if (m > 0) {
    Complex term = 1.0;
    finite.add(term);
    for (int n = 0; n + 1 < m; ++n) {
      const double dn = n;
      term *= (a + dn) * (b + dn) / ((dn + 1.0) * (1.0 - m + dn)) * w;
      finite.add(term);
    }
  }
  const Complex pre_finite =
      m > 0 ? std::tgamma(static_cast<double>(m)) *
                  gamma_ratio({c}, {a + static_cast<double>(m),
                                    b + static_cast<double>(m)})
            : Complex(0.0);

  // psi(n + 1), psi(n + m + 1), psi(a + n + m), psi(b + n + m) by recurrence.
  double psi_n1 = -kEulerGamma;
  double psi_nm1 = -kEulerGamma;
  for (int k = 1; k <= m; ++k) psi_nm1 += 1.0 / k;
  Complex psi_a = digamma(a + static_cast<double>(m));
  Complex psi_b = digamma(b + static_cast<double>(m));
  const Complex log_w = std::log(w);

  Accumulator infinite;
  Complex coeff = 1.0 / std::tgamma(static_cast<double>(m) + 1.0);
  int small_run = 0;
  for (int n = 0; n < kSeriesTermCap; ++n) {
    const double dn = n;
    const Complex term =
        coeff * (log_w - psi_n1 - psi_nm1 + psi_a + psi_b);
    infinite.add(term);
    const double scale = std::abs(infinite.value());
    if (std::abs(term) <= 1e-17 * scale && n > 2) {
      if (++small_run >= 3) break;
    } else {
      small_run = 0;
    }
    const Complex am = a + static_cast<double>(m) + dn;
    const Complex bm = b + static_cast<double>(m) + dn;
    coeff *= am * bm / ((dn + 1.0) * (dn + m + 1.0)) * w;
    psi_n1 += 1.0 / (dn + 1.0);
    psi_nm1 += 1.0 / (dn + m + 1.0);
    psi_a += 1.0 / am;
    psi_b += 1.0 / bm;
    if (n + 1 == kSeriesTermCap) {
      throw ConvergenceError("gauss_2f1: logarithmic series did not converge");
    }
  }
  const Complex pre_infinite = gamma_ratio({c}, {a, b});
  const Complex minus_w_pow_m = std::pow(-w, m);
  return pre_finite * finite.value() -
         pre_infinite * minus_w_pow_m * infinite.value();
}

// Logarithmic connection formula for c = a + b - m, m = 1, 2, ...
Complex log_case_negative(Complex a, Complex b, int m, Complex w) {
  const Complex c = a + b - static_cast<double>(m);
  const double dm = m;
  Accumulator finite;
  Complex term = 1.0;
  finite.add(term);
  for (int n = 0; n + 1 < m; ++n) {
    const double dn = n;
    term *= (a - dm + dn) * (b - dm + dn) / ((dn + 1.0) * (1.0 - dm + dn)) * w;
    finite.add(term);
  }
  const Complex pre_finite =
      std::tgamma(dm) * gamma_ratio({c}, {a, b}) * std::pow(w, -m);

  double psi_n1 = -kEulerGamma;
  double psi_nm1 = -kEulerGamma;
  for (int k = 1; k <= m; ++k) psi_nm1 += 1.0 / k;
  Complex psi_a = digamma(a);
  Complex psi_b = digamma(b);
  const Complex log_w = std::log(w);

  Accumulator infinite;
  Complex coeff = 1.0 / std::tgamma(dm + 1.0);
  int small_run = 0;
  for (int n = 0; n < kSeriesTermCap; ++n) {
    const double dn = n;
    const Complex t = coeff * (log_w - psi_n1 - psi_nm1 + psi_a + psi_b);
    infinite.add(t);
    const double scale = std::abs(infinite.value());
    if (std::abs(t) <= 1e-17 * scale && n > 2) {
      if (++small_run >= 3) break;
    } else {
      small_run = 0;
    }
    const Complex an = a + dn;
    const Complex bn = b + dn;
    coeff *= an * bn / ((dn + 1.0) * (dn + dm + 1.0)) * w;
    psi_n1 += 1.0 / (dn + 1.0);
    psi_nm1 += 1.0 / (dn + dm + 1.0);
    psi_a += 1.0 / an;
    psi_b += 1.0 / bn;
    if (n + 1 == kSeriesTermCap) {
      throw ConvergenceError("gauss_2f1: logarithmic series did not converge");
    }
  }
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  const Complex pre_infinite = gamma_ratio({c}, {a - dm, b - dm});
  return pre_finite * finite.value() -
         sign * pre_infinite * infinite.value();
}

// F(a,b;c;z) through the connection formula around z = 1, series in w = 1-z.
Complex one_minus_z_transform(Complex a, Complex b, Complex c, Complex w) {
  const Complex s = c - a - b;
  const double m_near = std::nearbyint(s.real());
  if (std::abs(s - Complex(m_near, 0.0)) < kIntegerTolerance) {
    const int m = static_cast<int>(m_near);
    if (m >= 0) return log_case_nonnegative(a, b, m, w);
    return log_case_negative(a, b, -m, w);
  }
  const Complex first = gamma_ratio({c, s}, {c - a, c - b});
  const Complex second = gamma_ratio({c, -s}, {a, b});
  Complex result = 0.0;
  if (first != 0.0) {
    result += first * direct_series(a, b, 1.0 - s, w);
  }
  if (second != 0.0) {
    result += second * std::exp(s * std::log(w)) *
              direct_series(c - a, c - b, s + 1.0, w);
  }
  return result;
}

}  // namespace

Complex gauss_2f1(Complex a, Complex b, Complex c, Complex z) {
  return gauss_2f1(a, b, c, z, 1.0 - z);
}

Complex gauss_2f1(Complex a, Complex b, Complex c, Complex z, Complex w) {
  if (is_nonpositive_integer(c)) {
    throw PoleError("gauss_2f1: c is a non-positive integer (" +
                        fmt_params(a, b, c, z) + ")",
                    PoleKind::gamma_argument);
  }
  const double az = std::abs(z);
  if (!(az <= 1.0 + 1e-15)) {
    throw DomainError("gauss_2f1: |z| > 1 is not supported (" +
                      fmt_params(a, b, c, z) + ")");
  }
  if (z == 0.0) return 1.0;
  if (is_nonpositive_integer(a) || is_nonpositive_integer(b)) {
    return polynomial_series(a, b, c, z);
  }
  // z rounds onto the unit circle for z = tanh^2 t at large t; the exact
  // 1 - z decides whether it is really inside.
  const bool inside = 2.0 * w.real() - std::norm(w) > 0.0;
  if (az >= 1.0 - 1e-15 && !inside && !((c - a - b).real() > 0.0)) {
    throw DomainError("gauss_2f1: divergent on |z| = 1 with Re(c-a-b) <= 0 (" +
                      fmt_params(a, b, c, z) + ")");
  }
  if (w == 0.0) return gauss_2f1_at_one(a, b, c);
  if (az <= kDirectRadius) return direct_series(a, b, c, z);

  const double aw = std::abs(w);
  const double pfaff = az / aw;  // |z / (z - 1)|
  if (aw <= kDirectRadius && aw <= pfaff) {
    return one_minus_z_transform(a, b, c, w);
  }
  if (pfaff <= kDirectRadius) {
    // F(a,b;c;z) = (1-z)^{-a} F(a, c-b; c; z/(z-1))
    const Complex zp = -z / w;
    return std::exp(-a * std::log(w)) * gauss_2f1(a, c - b, c, zp, 1.0 / w);
  }
  return direct_series(a, b, c, z);
}

Complex gauss_2f1_at_one(Complex a, Complex b, Complex c) {
  const Complex s = c - a - b;
  if (!(s.real() > 0.0)) {
    throw DomainError("gauss_2f1_at_one: requires Re(c - a - b) > 0");
  }
  if (is_nonpositive_integer(c)) {
    throw PoleError("gauss_2f1_at_one: c is a non-positive integer",
                    PoleKind::gamma_argument);
  }
  return gamma_ratio({c, s}, {c - a, c - b});
}

}  // namespace sphfun
