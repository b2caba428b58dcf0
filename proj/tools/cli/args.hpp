#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sphfun/rankone.hpp"
#include "sphfun/rootdata.hpp"

namespace sphfun::cli {

// Bad command line or configuration: exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double parse_double(const std::string& text, const std::string& what);
int parse_int(const std::string& text, const std::string& what);

// "re,im" or "re"; rank > 1 separates components with '/'.
SpectralParam parse_lambda(const std::string& text);

// "start:stop:count", count >= 1, evenly spaced and inclusive.
std::vector<double> parse_grid(const std::string& text, const std::string& what);

// "1,2,1" or "[1,2,1]".
WeylElement parse_word(const std::string& text);

struct SpaceSelection {
  std::string label;
  RootDatum datum;
  std::optional<RankOneSpace> rank_one;  // set when the datum has rank one
};

// h2, h3, hn:<n>, rank1:<m>,<m2> (alias ranke1:), a1xa1, a2[:<m>],
// b2[:<ml>,<ms>], bc2[:<ml>,<ms>,<m2s>].
SpaceSelection parse_space(const std::string& text);
SpaceSelection space_from_datum(RootDatum datum);

std::string format_complex(Complex z);
std::string format_lambda(const SpectralParam& lam);
std::string format_word(const WeylElement& w);

}  // namespace sphfun::cli
