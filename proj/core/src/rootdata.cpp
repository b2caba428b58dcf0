#include "sphfun/rootdata.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <sstream>

#include "sphfun/errors.hpp"

namespace sphfun {

namespace {

constexpr double kCoordTolerance = 1e-9;

bool same_vector(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (std::abs(x[i] - y[i]) > kCoordTolerance) return false;
  }
  return true;
}

RealVector negated(std::span<const double> v) {
  RealVector out(v.begin(), v.end());
  for (double& x : out) x = -x;
  return out;
}

// Solve for integer coefficients of v in the basis of simple roots.
// Returns false if v is not an integral combination.
bool simple_coordinates(const std::vector<RealVector>& simple,
                        std::span<const double> v, std::vector<int>& out) {
  const std::size_t r = simple.size();
  // Gram system G c = b with G_ij = <a_i, a_j>, b_i = <a_i, v>.
  std::vector<std::vector<double>> g(r, std::vector<double>(r + 1));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) g[i][j] = dot(simple[i], simple[j]);
    g[i][r] = dot(simple[i], v);
  }
  for (std::size_t col = 0; col < r; ++col) {
    std::size_t piv = col;
    for (std::size_t i = col + 1; i < r; ++i) {
      if (std::abs(g[i][col]) > std::abs(g[piv][col])) piv = i;
    }
    if (std::abs(g[piv][col]) < 1e-14) return false;
    std::swap(g[piv], g[col]);
    for (std::size_t i = 0; i < r; ++i) {
      if (i == col) continue;
      const double f = g[i][col] / g[col][col];
      for (std::size_t j = col; j <= r; ++j) g[i][j] -= f * g[col][j];
    }
  }
  out.assign(r, 0);
  RealVector rebuilt(v.size(), 0.0);
  for (std::size_t i = 0; i < r; ++i) {
    const double c = g[i][r] / g[i][i];
    const double n = std::nearbyint(c);
    if (std::abs(c - n) > kCoordTolerance) return false;
    out[i] = static_cast<int>(n);
    for (std::size_t k = 0; k < v.size(); ++k) rebuilt[k] += n * simple[i][k];
  }
  return same_vector(rebuilt, v);
}

}  // namespace

SpectralParam SpectralParam::operator-() const {
  SpectralParam out = *this;
  for (Complex& z : out.coords) z = -z;
  return out;
}

WeylElement operator*(const WeylElement& u, const WeylElement& v) {
  WeylElement out = u;
  out.word.insert(out.word.end(), v.word.begin(), v.word.end());
  return out;
}

double dot(std::span<const double> x, std::span<const double> y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

Complex pair(const SpectralParam& lambda, std::span<const double> v) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) s += lambda.coords[i] * v[i];
  return s;
}

Complex pair(const SpectralParam& lambda, const SpectralParam& mu) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < lambda.coords.size(); ++i) {
    s += lambda.coords[i] * mu.coords[i];
  }
  return s;
}

RootDatum::RootDatum(std::string name, std::vector<RealVector> simple_roots,
                     std::vector<RealVector> positive_roots,
                     std::vector<Multiplicity> multiplicities)
    : name_(std::move(name)),
      simple_(std::move(simple_roots)),
      positive_(std::move(positive_roots)),
      mult_(std::move(multiplicities)) {
  if (simple_.empty()) throw InvalidInput("root datum: rank must be positive");
  const std::size_t dim = simple_.front().size();
  if (dim != simple_.size()) {
    throw InvalidInput("root datum: simple roots must span a* (rank " +
                       std::to_string(simple_.size()) + ", dimension " +
                       std::to_string(dim) + ")");
  }
  if (mult_.size() != positive_.size()) {
    throw InvalidInput("root datum: one multiplicity record per positive root");
  }
  for (const auto& v : simple_) {
    if (v.size() != dim) throw InvalidInput("root datum: ragged simple roots");
  }
  for (const auto& v : positive_) {
    if (v.size() != dim) throw InvalidInput("root datum: ragged positive roots");
  }
  for (const auto& m : mult_) {
    if (m.m_alpha < 1 || m.m_2alpha < 0) {
      throw InvalidInput("root datum: require m_alpha >= 1 and m_2alpha >= 0");
    }
  }
  for (std::size_t j = 0; j < positive_.size(); ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      if (same_vector(positive_[j], positive_[k])) {
        throw InvalidInput("root datum: duplicate positive root");
      }
    }
  }
  coeffs_.resize(positive_.size());
  for (std::size_t j = 0; j < positive_.size(); ++j) {
    if (!simple_coordinates(simple_, positive_[j], coeffs_[j])) {
      throw InvalidInput("root datum: positive root " + std::to_string(j) +
                         " is not an integral combination of simple roots");
    }
    if (std::any_of(coeffs_[j].begin(), coeffs_[j].end(),
                    [](int c) { return c < 0; })) {
      throw InvalidInput("root datum: positive root " + std::to_string(j) +
                         " has a negative simple-root coefficient");
    }
  }
  simple_index_.resize(simple_.size());
  for (std::size_t i = 0; i < simple_.size(); ++i) {
    simple_index_[i] = find_positive(simple_[i]);
    if (simple_index_[i] == npos) {
      throw InvalidInput("root datum: simple root " + std::to_string(i + 1) +
                         " missing from positive roots");
    }
  }
  for (std::size_t j = 0; j < positive_.size(); ++j) {
    for (std::size_t k = 0; k < positive_.size(); ++k) {
      const double q = 2.0 * dot(positive_[j], positive_[k]) /
                       dot(positive_[k], positive_[k]);
      if (std::abs(q - std::nearbyint(q)) > kCoordTolerance) {
        throw InvalidInput("root datum: Cartan integer 2<a,b>/<b,b> is not "
                           "integral for roots " +
                           std::to_string(j) + ", " + std::to_string(k));
      }
    }
  }
  // Closure of Sigma_0^+ under simple reflections (up to sign) and
  // W-invariance of the multiplicities.
  for (std::size_t i = 1; i <= simple_.size(); ++i) {
    const std::size_t si = simple_index_[i - 1];
    for (std::size_t j = 0; j < positive_.size(); ++j) {
      if (j == si) continue;
      const RealVector image = reflect(*this, static_cast<int>(i), positive_[j]);
      const std::size_t k = find_positive(image);
      if (k == npos) {
        throw InvalidInput("root datum: positive roots are not closed under "
                           "simple reflection s" + std::to_string(i));
      }
      if (!(mult_[k] == mult_[j])) {
        throw InvalidInput("root datum: multiplicities are not Weyl-invariant "
                           "(roots " + std::to_string(j) + " and " +
                           std::to_string(k) + ")");
      }
    }
  }
}

std::size_t RootDatum::simple_root_index(int i) const {
  if (i < 1 || static_cast<std::size_t>(i) > simple_.size()) {
    throw InvalidInput("simple root index " + std::to_string(i) +
                       " out of range 1.." + std::to_string(simple_.size()));
  }
  return simple_index_[static_cast<std::size_t>(i - 1)];
}

std::size_t RootDatum::find_positive(std::span<const double> root) const {
  for (std::size_t j = 0; j < positive_.size(); ++j) {
    if (same_vector(positive_[j], root)) return j;
  }
  return npos;
}

namespace datum {

RootDatum rank_one(int m_alpha, int m_2alpha) {
  std::ostringstream name;
  name << "rank1(" << m_alpha << "," << m_2alpha << ")";
  return RootDatum(name.str(), {{1.0}}, {{1.0}}, {{m_alpha, m_2alpha}});
}

RootDatum hyperbolic(int n) {
  if (n < 2) throw InvalidInput("hyperbolic space needs n >= 2");
  RootDatum d = rank_one(n - 1, 0);
  return RootDatum("H" + std::to_string(n), d.simple_roots(),
                   d.positive_roots(), d.multiplicities());
}

RootDatum a1xa1(Multiplicity first, Multiplicity second) {
  return RootDatum("A1xA1", {{1.0, 0.0}, {0.0, 1.0}},
                   {{1.0, 0.0}, {0.0, 1.0}}, {first, second});
}

RootDatum a2(int m) {
  const double h = std::sqrt(3.0) / 2.0;
  return RootDatum("A2", {{1.0, 0.0}, {-0.5, h}},
                   {{1.0, 0.0}, {-0.5, h}, {0.5, h}},
                   {{m, 0}, {m, 0}, {m, 0}});
}

RootDatum b2(int m_long, int m_short, int m_2short) {
  return RootDatum(m_2short > 0 ? "BC2" : "B2", {{1.0, -1.0}, {0.0, 1.0}},
                   {{1.0, -1.0}, {0.0, 1.0}, {1.0, 0.0}, {1.0, 1.0}},
                   {{m_long, 0}, {m_short, m_2short}, {m_short, m_2short},
                    {m_long, 0}});
}

}  // namespace datum

RootSystemType classify(const RootDatum& d) {
  const auto n_pos = d.positive_roots().size();
  if (d.rank() == 1 && n_pos == 1) return RootSystemType::A1;
  if (d.rank() != 2) return RootSystemType::unsupported;
  const auto& s = d.simple_roots();
  const double a12 = 2.0 * dot(s[0], s[1]) / dot(s[1], s[1]);
  const double a21 = 2.0 * dot(s[1], s[0]) / dot(s[0], s[0]);
  const long p = std::lround(a12 * a21);
  if (p == 0 && n_pos == 2) return RootSystemType::A1xA1;
  if (p == 1 && n_pos == 3) return RootSystemType::A2;
  if (p == 2 && n_pos == 4) return RootSystemType::B2;
  return RootSystemType::unsupported;
}

SpectralParam rho(const RootDatum& d) {
  SpectralParam out{std::vector<Complex>(d.rank(), 0.0)};
  for (std::size_t j = 0; j < d.positive_roots().size(); ++j) {
    const auto& m = d.multiplicity(j);
    const double w = 0.5 * (m.m_alpha + 2.0 * m.m_2alpha);
    for (std::size_t k = 0; k < d.rank(); ++k) {
      out.coords[k] += w * d.positive_roots()[j][k];
    }
  }
  return out;
}

RealVector reflect(const RootDatum& d, int i, std::span<const double> v) {
  const auto& a = d.positive_roots()[d.simple_root_index(i)];
  const double f = 2.0 * dot(v, a) / dot(a, a);
  RealVector out(v.begin(), v.end());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] -= f * a[k];
  return out;
}

SpectralParam reflect(const RootDatum& d, int i, const SpectralParam& lam) {
  const auto& a = d.positive_roots()[d.simple_root_index(i)];
  const Complex f = 2.0 * pair(lam, a) / dot(a, a);
  SpectralParam out = lam;
  for (std::size_t k = 0; k < out.coords.size(); ++k) out.coords[k] -= f * a[k];
  return out;
}

void require_rank(const RootDatum& d, const SpectralParam& lam) {
  if (lam.rank() != d.rank()) {
    throw InvalidInput("spectral parameter has " + std::to_string(lam.rank()) +
                       " coordinates, datum rank is " +
                       std::to_string(d.rank()));
  }
}

SpectralParam weyl_apply(const RootDatum& d, const WeylElement& w,
                         const SpectralParam& lam) {
  require_rank(d, lam);
  SpectralParam out = lam;
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) {
    out = reflect(d, *it, out);
  }
  return out;
}

RealVector weyl_apply(const RootDatum& d, const WeylElement& w,
                      std::span<const double> v) {
  RealVector out(v.begin(), v.end());
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) {
    out = reflect(d, *it, out);
  }
  return out;
}

std::vector<std::size_t> negative_set(const RootDatum& d,
                                      const WeylElement& w) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < d.positive_roots().size(); ++j) {
    const RealVector image = weyl_apply(d, w, d.positive_roots()[j]);
    if (d.find_positive(negated(image)) != RootDatum::npos) out.push_back(j);
  }
  return out;
}

bool is_reduced(const RootDatum& d, const WeylElement& w) {
  return negative_set(d, w).size() == w.length();
}

void require_reduced(const RootDatum& d, const WeylElement& w) {
  for (int letter : w.word) (void)d.simple_root_index(letter);
  if (!is_reduced(d, w)) {
    std::ostringstream os;
    os << "Weyl word [";
    for (std::size_t k = 0; k < w.word.size(); ++k) {
      os << (k ? "," : "") << w.word[k];
    }
    os << "] is not reduced";
    throw InvalidInput(os.str());
  }
}

WeylElement longest_element(const RootDatum& d) {
  if (classify(d) == RootSystemType::unsupported) {
    throw InvalidInput("longest_element: unsupported root system '" +
                       d.name() + "' (A1, A1xA1, A2, B2/BC2 only)");
  }
  // Grow w by s_i while w(alpha_i) > 0; this stops at w_0.
  WeylElement w;
  bool grown = true;
  while (grown) {
    grown = false;
    for (int i = 1; i <= static_cast<int>(d.rank()); ++i) {
      const auto& a = d.simple_roots()[static_cast<std::size_t>(i - 1)];
      if (d.find_positive(weyl_apply(d, w, a)) != RootDatum::npos) {
        w.word.push_back(i);
        grown = true;
        break;
      }
    }
  }
  return w;
}

std::vector<WeylElement> enumerate_weyl_group(const RootDatum& d) {
  if (d.rank() > 2) {
    throw InvalidInput("enumerate_weyl_group: rank > 2 is not supported");
  }
  // Elements are told apart by their action on a regular vector.
  RealVector probe(d.rank(), 0.0);
  for (std::size_t k = 0; k < d.rank(); ++k) probe[k] = 1.0 + 0.37 * (k + 1);
  auto key = [](const RealVector& v) {
    std::vector<long long> out;
    for (double x : v) out.push_back(std::llround(x * 1e8));
    return out;
  };
  std::map<std::vector<long long>, std::size_t> seen;
  std::vector<WeylElement> out;
  std::deque<WeylElement> queue{WeylElement{}};
  seen[key(probe)] = 0;
  out.push_back(WeylElement{});
  while (!queue.empty()) {
    const WeylElement w = queue.front();
    queue.pop_front();
    for (int i = 1; i <= static_cast<int>(d.rank()); ++i) {
      WeylElement next = w * WeylElement{{i}};
      const auto k = key(weyl_apply(d, next, probe));
      if (seen.count(k)) continue;
      seen[k] = out.size();
      out.push_back(next);
      queue.push_back(std::move(next));
      if (out.size() > 48) {
        throw InvalidInput("enumerate_weyl_group: group too large");
      }
    }
  }
  return out;
}

Complex restrict(const SpectralParam& lam, std::span<const double> alpha) {
  return pair(lam, alpha) / dot(alpha, alpha);
}

Complex restrict(const RootDatum& d, const SpectralParam& lam,
                 std::size_t root_index) {
  require_rank(d, lam);
  return restrict(lam, d.positive_roots().at(root_index));
}

}  // namespace sphfun
