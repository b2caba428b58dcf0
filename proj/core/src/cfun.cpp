#include "sphfun/cfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace sphfun {

namespace {

std::string describe(Complex z) {
  std::ostringstream os;
  os.precision(12);
  os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
  return os.str();
}

void check_multiplicities(int m_alpha, int m_2alpha) {
  if (m_alpha < 1 || m_2alpha < 0) {
    throw InvalidInput("c_alpha: require m_alpha >= 1, m_2alpha >= 0");
  }
}

// log of the verbatim factor; pole checks done by the caller.
Complex log_verbatim(Complex x, int m_alpha, int m_2alpha) {
  const double ma = m_alpha;
  const double m2 = m_2alpha;
  const double rho_a = 0.5 * ma + m2;
  const Complex d1 = 0.5 * (0.5 * ma + 1.0 + x);
  const Complex d2 = 0.5 * (0.5 * ma + m2 + x);
  return -(x - rho_a) * std::numbers::ln2 +
         log_gamma(Complex(0.5 * (ma + m2 + 1.0))) + log_gamma(x) -
         log_gamma(d1) - log_gamma(d2);
}

// Raises PoleError for a pole of the factor at iLambda = x.
Complex checked_verbatim(Complex Lam, int m_alpha, int m_2alpha,
                         std::optional<std::size_t> root) {
  check_multiplicities(m_alpha, m_2alpha);
  const Complex x = Complex(0.0, 1.0) * Lam;
  if (near_nonpositive_integer(x)) {
    throw PoleError("c_alpha: numerator pole, iLambda = " + describe(x),
                    PoleKind::numerator, root);
  }
  const Complex d1 = 0.5 * (0.5 * m_alpha + 1.0 + x);
  const Complex d2 = 0.5 * (0.5 * m_alpha + m_2alpha + x);
  if (near_nonpositive_integer(d1) || near_nonpositive_integer(d2)) {
    throw PoleError("c_alpha: denominator pole (zero of c), iLambda = " +
                        describe(x),
                    PoleKind::denominator, root);
  }
  return std::exp(log_verbatim(x, m_alpha, m_2alpha));
}

double kappa(int m_alpha, int m_2alpha) {
  const double rho_a = 0.5 * m_alpha + m_2alpha;
  return 1.0 / std::exp(log_verbatim(Complex(rho_a), m_alpha, m_2alpha)).real();
}

Complex c_alpha_at_root(Complex Lam, const Multiplicity& m,
                        std::optional<std::size_t> root) {
  return kappa(m.m_alpha, m.m_2alpha) *
         checked_verbatim(Lam, m.m_alpha, m.m_2alpha, root);
}

Complex product_over(const RootDatum& d, const SpectralParam& lam,
                     const std::vector<std::size_t>& roots) {
  require_rank(d, lam);
  Complex out = 1.0;
  for (std::size_t j : roots) {
    const Complex Lam = restrict(d, lam, j);
    out *= c_alpha_at_root(Lam, d.multiplicity(j), j);
  }
  return out;
}

std::vector<std::size_t> all_roots(const RootDatum& d) {
  std::vector<std::size_t> out(d.positive_roots().size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = j;
  return out;
}

template <class F>
CFunctionValue flagged(F&& f) {
  try {
    return {f(), false, std::nullopt, std::nullopt};
  } catch (const PoleError& e) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    return {Complex(nan, nan), true, e.kind(), e.root()};
  }
}

}  // namespace

Complex c_alpha(Complex Lam, int m_alpha, int m_2alpha) {
  return c_alpha_at_root(Lam, {m_alpha, m_2alpha}, std::nullopt);
}

Complex c_alpha_verbatim(Complex Lam, int m_alpha, int m_2alpha) {
  return checked_verbatim(Lam, m_alpha, m_2alpha, std::nullopt);
}

double c_alpha_calibration_diagnostic(int m_alpha, int m_2alpha) {
  check_multiplicities(m_alpha, m_2alpha);
  return 1.0 / kappa(m_alpha, m_2alpha);
}

Complex c_full(const RootDatum& d, const SpectralParam& lam) {
  return product_over(d, lam, all_roots(d));
}

Complex c_full_normalized(const RootDatum& d, const SpectralParam& lam) {
  SpectralParam at_rho = rho(d);
  for (Complex& z : at_rho.coords) z *= Complex(0.0, -1.0);
  return c_full(d, lam) / c_full(d, at_rho);
}

Complex c_sigma(const RootDatum& d, const WeylElement& w,
                const SpectralParam& lam) {
  require_reduced(d, w);
  return product_over(d, lam, negative_set(d, w));
}

CFunctionValue c_full_flagged(const RootDatum& d, const SpectralParam& lam) {
  return flagged([&] { return c_full(d, lam); });
}

CFunctionValue c_sigma_flagged(const RootDatum& d, const WeylElement& w,
                               const SpectralParam& lam) {
  return flagged([&] { return c_sigma(d, w, lam); });
}

DenominatorArgs denominator_args(const RootDatum& d, const SpectralParam& lam,
                                 std::size_t j) {
  const auto& m = d.multiplicity(j);
  const Complex x = Complex(0.0, 1.0) * restrict(d, lam, j);
  return {0.5 * (0.5 * m.m_alpha + 1.0 + x),
          0.5 * (0.5 * m.m_alpha + m.m_2alpha + x)};
}

bool is_simple(const RootDatum& d, const SpectralParam& lam, double tol) {
  if (!(tol > 0.0)) throw InvalidInput("is_simple: tol must be positive");
  require_rank(d, lam);
  for (std::size_t j = 0; j < d.positive_roots().size(); ++j) {
    const auto args = denominator_args(d, lam, j);
    if (near_nonpositive_integer(args.first, tol) ||
        near_nonpositive_integer(args.second, tol)) {
      return false;
    }
  }
  return true;
}

Complex gamma_plus_X(const RootDatum& d, const SpectralParam& lam) {
  require_rank(d, lam);
  Complex log_sum = 0.0;
  for (std::size_t j = 0; j < d.positive_roots().size(); ++j) {
    const auto args = denominator_args(d, lam, j);
    for (Complex z : {args.first, args.second}) {
      if (near_nonpositive_integer(z)) {
        throw PoleError("gamma_plus_X: argument " + describe(z) +
                            " is a pole (lambda not simple)",
                        PoleKind::denominator, j);
      }
      log_sum += log_gamma(z);
    }
  }
  return std::exp(log_sum);
}

}  // namespace sphfun
