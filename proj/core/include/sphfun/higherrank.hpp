#pragma once

#include <map>
#include <utility>
#include <vector>

#include "sphfun/models.hpp"
#include "sphfun/rankone.hpp"
#include "sphfun/rootdata.hpp"

namespace sphfun {

// One rank-one K-type per (word position j, index i), j = 1..p, i = 1..l.
struct FactorEntry {
  RankOneSpace space;
  KTypeRankOne ktype;
};

class FactorKTypeTable {
 public:
  FactorKTypeTable() = default;
  FactorKTypeTable(WeylElement word, std::map<std::pair<int, int>, FactorEntry> entries);

  const WeylElement& word() const noexcept { return word_; }
  // l(delta), the number of i indices.
  int ell() const noexcept { return ell_; }
  const FactorEntry& at(int j, int i) const;

  // Completeness, K-type quadratics, and agreement of each entry's
  // multiplicities with those of alpha_{word[j]} in the datum.
  void validate(const RootDatum& datum) const;

 private:
  WeylElement word_;
  std::map<std::pair<int, int>, FactorEntry> entries_;
  int ell_ = 0;
};

// Table with the trivial K-type at every position, l(delta) = ell.
FactorKTypeTable trivial_table(const RootDatum& datum, const WeylElement& w,
                               int ell = 1);

// lambda_j = <sigma^{(j)} lambda, alpha_j^0>, sigma^{(j)} = s_{j+1} ... s_p.
std::vector<Complex> lambda_chain(const RootDatum& datum, const WeylElement& w,
                                  const SpectralParam& lam);

// det A(lambda, sigma)|V_delta^M
//   = c_sigma(lambda)^l prod_j prod_i c_{-lambda_j,delta(i,j)}/c_{lambda_j,delta(i,j)}.
Complex det_A(const RootDatum& datum, const WeylElement& w,
              const SpectralParam& lam, const FactorKTypeTable& table);

// Same determinant as the product of the per-factor eigenvalues
// C_sigma_minus(space_j, delta(i,j), lambda_j).
Complex det_A_factorwise(const RootDatum& datum, const WeylElement& w,
                         const SpectralParam& lam,
                         const FactorKTypeTable& table);

// det C_{sigma^{-1}}(-sigma lambda) from the adjoint relation:
//   conj(det A(conj lambda, sigma)) * (c(-lambda) / c_sigma(-lambda))^l.
Complex det_C_from_adjoint(const RootDatum& datum, const WeylElement& w,
                           const SpectralParam& lam,
                           const FactorKTypeTable& table);

// |C_sigma_minus(Lambda)|^2 (quadrature slot) against |c(Lambda)|^2 (closed
// form slot) for real Lambda.
OracleReport hs_norm_check(const RankOneSpace& space, const KTypeRankOne& kt,
                           double Lam_real);

}  // namespace sphfun
