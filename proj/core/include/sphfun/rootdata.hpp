#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "sphfun/complexmath.hpp"

namespace sphfun {

using RealVector = std::vector<double>;

// Multiplicities (m_alpha, m_2alpha) of an indivisible root and its double.
struct Multiplicity {
  int m_alpha = 1;
  int m_2alpha = 0;

  // <rho_alpha, alpha_0> for the rank-one group G_alpha: m_alpha/2 + m_2alpha.
  double rho_coefficient() const noexcept { return 0.5 * m_alpha + m_2alpha; }
  friend bool operator==(const Multiplicity&, const Multiplicity&) = default;
};

// A point of the complexified dual a*_C, in coordinates of an orthonormal
// basis of a*.
struct SpectralParam {
  std::vector<Complex> coords;

  std::size_t rank() const noexcept { return coords.size(); }
  SpectralParam operator-() const;
  friend bool operator==(const SpectralParam&, const SpectralParam&) = default;
};

// A Weyl group element stored as a word in the simple reflections,
// w = s_{word[0]} s_{word[1]} ... s_{word[p-1]}, acting right-to-left.
// Letters are 1-based simple-root indices.
struct WeylElement {
  std::vector<int> word;

  std::size_t length() const noexcept { return word.size(); }
  friend bool operator==(const WeylElement&, const WeylElement&) = default;
};

// Concatenation u v.
WeylElement operator*(const WeylElement& u, const WeylElement& v);

// Restricted root datum with explicit coordinates.
//
// Invariants (checked by the constructor): simple roots are among the positive
// roots; every positive root is a non-negative integer combination of simple
// roots; Cartan integers are integral; m_alpha >= 1; m_2alpha = 0 is allowed
// for any root; multiplicities are invariant under the simple reflections.
class RootDatum {
 public:
  RootDatum(std::string name, std::vector<RealVector> simple_roots,
            std::vector<RealVector> positive_roots,
            std::vector<Multiplicity> multiplicities);

  const std::string& name() const noexcept { return name_; }
  std::size_t rank() const noexcept { return simple_.size(); }
  const std::vector<RealVector>& simple_roots() const noexcept {
    return simple_;
  }
  // Sigma_0^+, the positive indivisible roots.
  const std::vector<RealVector>& positive_roots() const noexcept {
    return positive_;
  }
  const Multiplicity& multiplicity(std::size_t root_index) const {
    return mult_.at(root_index);
  }
  const std::vector<Multiplicity>& multiplicities() const noexcept {
    return mult_;
  }
  // Index into positive_roots() of the i-th simple root (1-based i).
  std::size_t simple_root_index(int i) const;

  // Index of `root` among the positive roots, or npos.
  std::size_t find_positive(std::span<const double> root) const;

  // Coefficients of positive root j in the basis of simple roots.
  const std::vector<int>& simple_coefficients(std::size_t j) const {
    return coeffs_.at(j);
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::string name_;
  std::vector<RealVector> simple_;
  std::vector<RealVector> positive_;
  std::vector<Multiplicity> mult_;
  std::vector<std::vector<int>> coeffs_;
  std::vector<std::size_t> simple_index_;
};

// Built-in catalog.
namespace datum {
// Rank one with alpha(H) = 1: covers every rank-one space by multiplicity.
RootDatum rank_one(int m_alpha, int m_2alpha = 0);
// Real hyperbolic space H^n: m_alpha = n - 1.
RootDatum hyperbolic(int n);
RootDatum a1xa1(Multiplicity first = {}, Multiplicity second = {});
RootDatum a2(int m = 1);
// B2 with long roots e1 +- e2 and short roots e1, e2; m_2alpha on the short
// roots turns it into BC2.
RootDatum b2(int m_long = 1, int m_short = 1, int m_2short = 0);
}  // namespace datum

// Supported root-system types for longest_element.
enum class RootSystemType { A1, A1xA1, A2, B2, unsupported };
RootSystemType classify(const RootDatum& datum);

double dot(std::span<const double> x, std::span<const double> y);

// Complex-bilinear pairing <lambda, v> with a real vector v.
Complex pair(const SpectralParam& lambda, std::span<const double> v);
Complex pair(const SpectralParam& lambda, const SpectralParam& mu);

// rho = 1/2 sum_{alpha in Sigma_0^+} (m_alpha + 2 m_2alpha) alpha.
SpectralParam rho(const RootDatum& datum);

// Simple reflection s_i (1-based) applied to a real vector or to lambda.
RealVector reflect(const RootDatum& datum, int i, std::span<const double> v);
SpectralParam reflect(const RootDatum& datum, int i, const SpectralParam& lam);

// w lambda = s_{i1}(s_{i2}(... s_{ip}(lambda))).
SpectralParam weyl_apply(const RootDatum& datum, const WeylElement& w,
                         const SpectralParam& lam);
RealVector weyl_apply(const RootDatum& datum, const WeylElement& w,
                      std::span<const double> v);

// Indices of { alpha in Sigma_0^+ : w alpha in -Sigma_0^+ }.
std::vector<std::size_t> negative_set(const RootDatum& datum,
                                      const WeylElement& w);

// A word is reduced iff its length equals |negative_set|.
bool is_reduced(const RootDatum& datum, const WeylElement& w);
// Throws InvalidInput if the word is not reduced or has a bad letter.
void require_reduced(const RootDatum& datum, const WeylElement& w);

// Reduced word for the longest element (A1, A1xA1, A2, B2/BC2 only).
WeylElement longest_element(const RootDatum& datum);

// Every element of the (finite, small) Weyl group, each with a reduced word,
// in breadth-first order from the identity. Rank <= 2 only.
std::vector<WeylElement> enumerate_weyl_group(const RootDatum& datum);

// <lambda, alpha_0> = <lambda, alpha> / <alpha, alpha>.
Complex restrict(const RootDatum& datum, const SpectralParam& lam,
                 std::size_t root_index);
Complex restrict(const SpectralParam& lam, std::span<const double> alpha);

// Throws InvalidInput unless lam has datum.rank() coordinates.
void require_rank(const RootDatum& datum, const SpectralParam& lam);

}  // namespace sphfun
