#pragma once

#include <span>
#include <vector>

#include "sphfun/complexmath.hpp"
#include "sphfun/quadrature.hpp"
#include "sphfun/rankone.hpp"

namespace sphfun {

// Element of SL(2, R), [[a, b], [c, d]].
struct Matrix2 {
  double a = 1, b = 0, c = 0, d = 1;

  double det() const noexcept { return a * d - b * c; }
  Matrix2 inverse() const noexcept { return {d, -b, -c, a}; }
  friend Matrix2 operator*(const Matrix2& x, const Matrix2& y) noexcept {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
};

// Throws InvalidInput unless |det g - 1| <= 1e-12 (relative to the entry scale).
void require_unimodular(const Matrix2& g);

Matrix2 rotation(double theta);      // k_theta = [[cos, -sin], [sin, cos]]
Matrix2 a_t(double t);               // diag(e^{t/2}, e^{-t/2}), alpha(H) = 1
Matrix2 n_upper(double x);           // [[1, x], [0, 1]]
Matrix2 n_bar(double x);             // [[1, 0], [x, 1]]

// Representative of the non-trivial Weyl element: k_{pi/2} = [[0, -1], [1, 0]].
Matrix2 m_star();

// g = k_theta a_h n_x.
struct IwasawaKAN {
  double theta = 0;
  double h = 0;
  double x = 0;
};
IwasawaKAN iwasawa(const Matrix2& g);
Matrix2 reconstruct(const IwasawaKAN& f);

// H-coordinate of g: e^h = g11^2 + g21^2.
double iwasawa_H(const Matrix2& g);

// Mobius action on the upper half-plane and the Cayley map to the disk,
// w = (z - i)/(z + i); a_t . i lands on tanh(t/2) > 0.
Complex mobius(const Matrix2& g, Complex z);
Complex cayley(Complex z);
Complex disk_point(const Matrix2& g);      // cayley(g . i)
Complex boundary_point(const Matrix2& k);  // cayley(k . oo)

// A(x, b)(H) = log((1 - |x|^2) / |x - b|^2) in the unit ball of R^n.
double horocycle_bracket(int n, std::span<const double> x,
                         std::span<const double> b);

struct OracleReport {
  Complex closed_form;
  Complex quadrature;
  double abs_err = 0;
  double rel_err = 0;
  std::size_t nodes_used = 0;
};
OracleReport make_report(Complex closed_form, Complex quadrature,
                         std::size_t nodes);

// phi_lambda(a_t . o) on H^n as the boundary integral of P^{iLambda + rho}.
QuadratureResult quad_phi_K(int n, Complex Lam, double t,
                            const QuadratureSpec& spec = {});

// int_{N-bar} e^{-(s)(H(n-bar))} dn-bar for H^n, unnormalized. At n = 2 the
// integrand goes through iwasawa_H(n_bar(x)); for n >= 3 the radial form with
// e^{H} = 1 + |v|^2 is used.
QuadratureResult nbar_integral(int n, Complex s, const QuadratureSpec& spec);

// nbar_integral at s = 2 rho, the measure normalization shared by
// quad_c_Nbar and quad_Csigma_sl2.
double nbar_measure_constant(int n, const QuadratureSpec& spec);

// c(lambda) = int_{N-bar} e^{-(i lambda + rho)(H(n-bar))} dn-bar, normalized.
// Requires Re(iLambda) > 0.05 (DomainError otherwise).
QuadratureResult quad_c_Nbar(int n, Complex Lam, const QuadratureSpec& spec = {});

// V_delta^M entry of the Eisenstein integral on SL(2,R) for the character
// k_theta -> e^{i char_n theta}, at the disk point z.
QuadratureResult eisenstein_sl2_at(int char_n, Complex Lam, Complex z,
                                   const QuadratureSpec& spec = {});

// Same at a_t . o.
QuadratureResult quad_eisenstein_sl2(int char_n, Complex Lam, double t,
                                     const QuadratureSpec& spec = {});

// The rank-one K-type of the character chi_{char_n} on H^2: s = |char_n|/2,
// r = 0.
KTypeRankOne character_ktype(int char_n);

// Closed form of the Eisenstein entry: phi_tau / asymptotic_factor
// (= phi_tau / s! on H^2).
Complex eisenstein_sl2_closed_form(int char_n, Complex Lam, double t);

// C_sigma(-lambda) = int_{N-bar} e^{-(i lambda + rho)(H(n-bar))}
//                    delta(k(n-bar)^{-1} m*) dn-bar, normalized like c.
QuadratureResult quad_Csigma_sl2(int char_n, Complex Lam,
                                 const QuadratureSpec& spec = {});

// int_K phi(a_{t1} k a_{t2}) dk against phi(a_{t1}) phi(a_{t2}) on H^n
// (quadrature = left side, closed_form = right side).
OracleReport functional_equation_check(int n, Complex Lam, double t1, double t2,
                                       const QuadratureSpec& spec = {});

// Same identity with the chi_{char_n} Eisenstein entry Phi on the left and
// Phi(a_{t1}) phi_lambda(a_{t2}) on the right (SL(2,R) model).
OracleReport functional_equation_check_entry(int char_n, Complex Lam, double t1,
                                             double t2,
                                             const QuadratureSpec& spec = {});

}  // namespace sphfun
