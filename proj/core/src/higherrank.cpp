#include "sphfun/higherrank.hpp"

#include <cmath>
#include <sstream>

#include "sphfun/cfun.hpp"
#include "sphfun/errors.hpp"

namespace sphfun {

namespace {

std::string where(int j, int i) {
  return "(j=" + std::to_string(j) + ", i=" + std::to_string(i) + ")";
}

void check_table(const RootDatum& d, const WeylElement& w,
                 const FactorKTypeTable& table) {
  if (!(table.word() == w)) {
    throw InvalidInput("factor table word does not match the Weyl word");
  }
  table.validate(d);
}

template <class F>
Complex guarded_factor(int j, int i, F&& f) {
  try {
    return f();
  } catch (const PoleError& e) {
    throw PoleError(std::string("pole at factor ") + where(j, i) + ": " + e.what(),
                    e.kind(), static_cast<std::size_t>(j));
  }
}

}  // namespace

FactorKTypeTable::FactorKTypeTable(WeylElement word,
                                   std::map<std::pair<int, int>, FactorEntry> entries)
    : word_(std::move(word)), entries_(std::move(entries)) {
  for (const auto& [key, entry] : entries_) ell_ = std::max(ell_, key.second);
  const int p = static_cast<int>(word_.length());
  for (int j = 1; j <= p; ++j) {
    for (int i = 1; i <= ell_; ++i) {
      if (!entries_.count({j, i})) {
        throw InvalidInput("factor table: missing entry " + where(j, i));
      }
    }
  }
  for (const auto& [key, entry] : entries_) {
    if (key.first < 1 || key.first > p || key.second < 1) {
      throw InvalidInput("factor table: entry " + where(key.first, key.second) +
                         " out of range");
    }
    validate_ktype(entry.space, entry.ktype);
  }
  if (p > 0 && ell_ == 0) throw InvalidInput("factor table: no entries");
}

const FactorEntry& FactorKTypeTable::at(int j, int i) const {
  const auto it = entries_.find({j, i});
  if (it == entries_.end()) {
    throw InvalidInput("factor table: missing entry " + where(j, i));
  }
  return it->second;
}

void FactorKTypeTable::validate(const RootDatum& d) const {
  require_reduced(d, word_);
  for (int j = 1; j <= static_cast<int>(word_.length()); ++j) {
    const auto& m = d.multiplicity(d.simple_root_index(word_.word[j - 1]));
    for (int i = 1; i <= ell_; ++i) {
      const FactorEntry& e = at(j, i);
      if (e.space.m_alpha != m.m_alpha || e.space.m_2alpha != m.m_2alpha) {
        std::ostringstream os;
        os << "factor table entry " << where(j, i) << " has multiplicities ("
           << e.space.m_alpha << "," << e.space.m_2alpha << "), root alpha_"
           << word_.word[j - 1] << " has (" << m.m_alpha << "," << m.m_2alpha
           << ")";
        throw InvalidInput(os.str());
      }
      validate_ktype(e.space, e.ktype);
    }
  }
}

FactorKTypeTable trivial_table(const RootDatum& d, const WeylElement& w,
                               int ell) {
  if (ell < 1) throw InvalidInput("trivial_table: ell must be >= 1");
  std::map<std::pair<int, int>, FactorEntry> entries;
  for (int j = 1; j <= static_cast<int>(w.length()); ++j) {
    const auto& m = d.multiplicity(d.simple_root_index(w.word[j - 1]));
    for (int i = 1; i <= ell; ++i) {
      entries[{j, i}] = {RankOneSpace(m.m_alpha, m.m_2alpha),
                         KTypeRankOne::trivial()};
    }
  }
  return FactorKTypeTable(w, std::move(entries));
}

std::vector<Complex> lambda_chain(const RootDatum& d, const WeylElement& w,
                                  const SpectralParam& lam) {
  require_rank(d, lam);
  require_reduced(d, w);
  const std::size_t p = w.length();
  std::vector<Complex> out(p);
  // Walk j = p .. 1, applying s_{j+1} to the running tail image.
  SpectralParam tail = lam;
  for (std::size_t jj = p; jj-- > 0;) {
    if (jj + 1 < p) tail = reflect(d, w.word[jj + 1], tail);
    const auto& alpha = d.simple_roots()[static_cast<std::size_t>(w.word[jj] - 1)];
    out[jj] = restrict(tail, alpha);
  }
  return out;
}

Complex det_A(const RootDatum& d, const WeylElement& w,
              const SpectralParam& lam, const FactorKTypeTable& table) {
  check_table(d, w, table);
  const Complex cs = c_sigma(d, w, lam);
  const std::vector<Complex> chain = lambda_chain(d, w, lam);
  Complex out = std::pow(cs, table.ell());
  for (int j = 1; j <= static_cast<int>(chain.size()); ++j) {
    const Complex Lj = chain[j - 1];
    for (int i = 1; i <= table.ell(); ++i) {
      const FactorEntry& e = table.at(j, i);
      out *= guarded_factor(j, i, [&] {
        return c_lambda_delta(e.space, e.ktype, -Lj) /
               c_lambda_delta(e.space, e.ktype, Lj);
      });
    }
  }
  return out;
}

Complex det_A_factorwise(const RootDatum& d, const WeylElement& w,
                         const SpectralParam& lam,
                         const FactorKTypeTable& table) {
  check_table(d, w, table);
  const std::vector<Complex> chain = lambda_chain(d, w, lam);
  Complex out = 1.0;
  for (int j = 1; j <= static_cast<int>(chain.size()); ++j) {
    for (int i = 1; i <= table.ell(); ++i) {
      const FactorEntry& e = table.at(j, i);
      out *= guarded_factor(
          j, i, [&] { return C_sigma_minus(e.space, e.ktype, chain[j - 1]); });
    }
  }
  return out;
}

Complex det_C_from_adjoint(const RootDatum& d, const WeylElement& w,
                           const SpectralParam& lam,
                           const FactorKTypeTable& table) {
  SpectralParam lam_bar = lam;
  for (Complex& z : lam_bar.coords) z = std::conj(z);
  const Complex detA = std::conj(det_A(d, w, lam_bar, table));
  const SpectralParam neg = -lam;
  return detA * std::pow(c_full(d, neg) / c_sigma(d, w, neg), table.ell());
}

OracleReport hs_norm_check(const RankOneSpace& space, const KTypeRankOne& kt,
                           double Lam_real) {
  if (!std::isfinite(Lam_real)) {
    throw DomainError("hs_norm_check: Lambda must be a finite real number");
  }
  const Complex cs = C_sigma_minus(space, kt, Lam_real);
  const Complex c = c_alpha(Lam_real, space.m_alpha, space.m_2alpha);
  return make_report(std::norm(c), std::norm(cs), 0);
}

}  // namespace sphfun
