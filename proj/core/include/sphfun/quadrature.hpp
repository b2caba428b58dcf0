#pragma once

#include <cstddef>
#include <functional>
#include <string>

#include "sphfun/complexmath.hpp"

namespace sphfun {

enum class QuadratureScheme { gauss_legendre_composite, tanh_sinh_halfline };

struct QuadratureSpec {
  double abs_tol = 1e-10;
  double rel_tol = 1e-9;
  // Upper bound on adaptive bisections, a power of two (2^k -> depth k).
  std::size_t max_subdivisions = std::size_t{1} << 14;
  // Rule for unbounded ranges; finite intervals always use adaptive
  // Gauss-Kronrod.
  QuadratureScheme scheme = QuadratureScheme::tanh_sinh_halfline;

  // Throws InvalidInput on non-positive tolerances or zero subdivisions.
  void validate() const;
};

struct QuadratureResult {
  Complex value;
  double error_estimate = 0.0;
  std::size_t nodes = 0;
};

using ComplexIntegrand = std::function<Complex(double)>;

// Adaptive Gauss-Kronrod on [a, b]. Throws QuadratureError if the error
// estimate exceeds max(abs_tol, rel_tol |value|).
QuadratureResult integrate_interval(const ComplexIntegrand& f, double a,
                                    double b, const QuadratureSpec& spec);

// Integral over [0, inf) with the scheme selected by spec.
QuadratureResult integrate_halfline(const ComplexIntegrand& f,
                                    const QuadratureSpec& spec);

const char* to_string(QuadratureScheme scheme);
QuadratureScheme parse_scheme(const std::string& name);

}  // namespace sphfun
