#include "sphfun/quadrature.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <sstream>

#include "sphfun/errors.hpp"

namespace sphfun {

namespace {

unsigned max_depth(const QuadratureSpec& spec) {
  unsigned depth = 0;
  while ((std::size_t{1} << (depth + 1)) <= spec.max_subdivisions && depth < 30) {
    ++depth;
  }
  return depth;
}

void check_result(QuadratureResult& r, const QuadratureSpec& spec,
                  const char* where) {
  const double target = std::max(spec.abs_tol, spec.rel_tol * std::abs(r.value));
  if (!is_finite(r.value) || !(r.error_estimate <= target)) {
    std::ostringstream os;
    os.precision(3);
    os << where << ": tolerance not met (error estimate " << r.error_estimate
       << ", target " << target << ", " << r.nodes << " nodes)";
    throw QuadratureError(os.str(), r.error_estimate);
  }
}

struct CountingIntegrand {
  const ComplexIntegrand* f;
  std::size_t* count;
  Complex operator()(double x) const {
    ++*count;
    return (*f)(x);
  }
};

template <class Run>
QuadratureResult run_guarded(Run&& run, const char* where) {
  try {
    return run();
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw QuadratureError(std::string(where) + ": " + e.what(),
                          std::numeric_limits<double>::infinity());
  }
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
    throw InvalidInput("quadrature: tolerances must be positive");
  }
  if (max_subdivisions == 0) {
    throw InvalidInput("quadrature: max_subdivisions must be positive");
  }
}

QuadratureResult integrate_interval(const ComplexIntegrand& f, double a,
                                    double b, const QuadratureSpec& spec) {
  spec.validate();
  std::size_t nodes = 0;
  CountingIntegrand g{&f, &nodes};
  QuadratureResult r = run_guarded(
      [&] {
        double err = 0.0;
        const Complex v =
            boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
                g, a, b, max_depth(spec), spec.rel_tol * 0.1, &err);
        return QuadratureResult{v, err, 0};
      },
      "integrate_interval");
  r.nodes = nodes;
  check_result(r, spec, "integrate_interval");
  return r;
}

QuadratureResult integrate_halfline(const ComplexIntegrand& f,
                                    const QuadratureSpec& spec) {
  spec.validate();
  std::size_t nodes = 0;
  QuadratureResult r;
  if (spec.scheme == QuadratureScheme::gauss_legendre_composite) {
    CountingIntegrand g{&f, &nodes};
    r = run_guarded(
        [&] {
          double err = 0.0;
          const Complex v =
              boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
                  g, 0.0, std::numeric_limits<double>::infinity(),
                  max_depth(spec), spec.rel_tol * 0.1, &err);
          return QuadratureResult{v, err, 0};
        },
        "integrate_halfline");
  } else {
    // x = sinh u turns algebraic tails into exponential ones.
    auto g = [&](double u) -> Complex {
      ++nodes;
      const double x = std::sinh(u);
      // Beyond this the integrands (algebraic decay, squared arguments) are
      // not representable; their tail contribution is far below tolerance.
      if (!(x < 1e100)) return 0.0;
      return f(x) * std::cosh(u);
    };
    r = run_guarded(
        [&] {
          boost::math::quadrature::exp_sinh<double> integrator(
              std::max(4u, std::min(max_depth(spec), 12u)));
          double err = 0.0;
          const Complex v = integrator.integrate(g, spec.rel_tol * 0.1, &err);
          return QuadratureResult{v, err, 0};
        },
        "integrate_halfline");
  }
  r.nodes = nodes;
  check_result(r, spec, "integrate_halfline");
  return r;
}

const char* to_string(QuadratureScheme scheme) {
  switch (scheme) {
    case QuadratureScheme::gauss_legendre_composite:
      return "gauss_legendre_composite";
    case QuadratureScheme::tanh_sinh_halfline:
      return "tanh_sinh_halfline";
  }
  return "?";
}

QuadratureScheme parse_scheme(const std::string& name) {
  if (name == "gauss_legendre_composite") {
    return QuadratureScheme::gauss_legendre_composite;
  }
  if (name == "tanh_sinh_halfline") return QuadratureScheme::tanh_sinh_halfline;
  throw InvalidInput("unknown quadrature scheme '" + name + "'");
}

}  // namespace sphfun
