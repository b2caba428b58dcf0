#include "args.hpp"

#include <charconv>
#include <cmath>
#include <json.hpp>

#include "sphfun/errors.hpp"

namespace sphfun::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::string fmt_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return nlohmann::json(x).dump();
}

}  // namespace

double parse_double(const std::string& text, const std::string& what) {
  const std::string t = trim(text);
  double v = 0;
  const char* first = t.data();
  const char* last = t.data() + t.size();
  if (!t.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (t.empty() || ec != std::errc() || ptr != last || !std::isfinite(v)) {
    throw UsageError("malformed " + what + " '" + text + "'");
  }
  return v;
}

int parse_int(const std::string& text, const std::string& what) {
  const std::string t = trim(text);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
    throw UsageError("malformed " + what + " '" + text + "'");
  }
  return v;
}

SpectralParam parse_lambda(const std::string& text) {
  SpectralParam p;
  for (const std::string& comp : split(text, '/')) {
    const auto parts = split(comp, ',');
    if (parts.size() > 2) {
      throw UsageError("malformed lambda '" + text + "' (expected re,im)");
    }
    try {
      const double re = parse_double(parts[0], "lambda");
      const double im = parts.size() == 2 ? parse_double(parts[1], "lambda") : 0.0;
      p.coords.emplace_back(re, im);
    } catch (const UsageError&) {
      throw UsageError("malformed lambda '" + text + "' (expected re,im)");
    }
  }
  return p;
}

std::vector<double> parse_grid(const std::string& text, const std::string& what) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) {
    throw UsageError("malformed " + what + " '" + text + "' (expected start:stop:count)");
  }
  const double a = parse_double(parts[0], what);
  const double b = parse_double(parts[1], what);
  const int n = parse_int(parts[2], what + " count");
  if (n < 1) throw UsageError(what + " count must be at least 1");
  std::vector<double> out;
  for (int k = 0; k < n; ++k) {
    out.push_back(n == 1 ? a : a + (b - a) * k / (n - 1));
  }
  return out;
}

WeylElement parse_word(const std::string& text) {
  std::string t = trim(text);
  if (!t.empty() && t.front() == '[' && t.back() == ']') t = t.substr(1, t.size() - 2);
  WeylElement w;
  if (trim(t).empty()) return w;
  for (const std::string& s : split(t, ',')) w.word.push_back(parse_int(s, "word letter"));
  return w;
}

SpaceSelection space_from_datum(RootDatum d) {
  std::optional<RankOneSpace> r1;
  if (d.rank() == 1) {
    const Multiplicity m = d.multiplicity(0);
    r1 = RankOneSpace(m.m_alpha, m.m_2alpha);
  }
  const std::string label = d.name();
  return SpaceSelection{label, std::move(d), r1};
}

SpaceSelection parse_space(const std::string& text) {
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string tail = colon == std::string::npos ? "" : text.substr(colon + 1);
  std::vector<int> args;
  if (colon != std::string::npos) {
    for (const std::string& s : split(tail, ',')) args.push_back(parse_int(s, "space parameter"));
  }
  auto want = [&](std::size_t lo, std::size_t hi) {
    if (args.size() < lo || args.size() > hi) {
      throw UsageError("wrong number of parameters in space '" + text + "'");
    }
  };
  try {
    if (head == "h2" || head == "h3") {
      want(0, 0);
      const int n = head == "h2" ? 2 : 3;
      auto sel = space_from_datum(datum::hyperbolic(n));
      sel.label = head;
      return sel;
    }
    if (head == "hn") {
      want(1, 1);
      auto sel = space_from_datum(datum::hyperbolic(args[0]));
      sel.label = text;
      return sel;
    }
    if (head == "rank1" || head == "ranke1") {
      want(1, 2);
      const int m2 = args.size() == 2 ? args[1] : 0;
      RankOneSpace sp(args[0], m2);  // validates
      auto sel = space_from_datum(datum::rank_one(sp.m_alpha, sp.m_2alpha));
      sel.label = text;
      return sel;
    }
    if (head == "a1xa1") {
      want(0, 0);
      return space_from_datum(datum::a1xa1());
    }
    if (head == "a2") {
      want(0, 1);
      return space_from_datum(datum::a2(args.empty() ? 1 : args[0]));
    }
    if (head == "b2") {
      want(0, 2);
      return space_from_datum(args.empty() ? datum::b2() : datum::b2(args[0], args.at(1), 0));
    }
    if (head == "bc2") {
      want(0, 3);
      if (args.empty()) return space_from_datum(datum::b2(1, 1, 1));
      if (args.size() != 3) throw UsageError("bc2 takes <ml>,<ms>,<m2s>");
      return space_from_datum(datum::b2(args[0], args[1], args[2]));
    }
  } catch (const InvalidInput& e) {
    throw UsageError("invalid space '" + text + "': " + e.what());
  } catch (const std::out_of_range&) {
    throw UsageError("wrong number of parameters in space '" + text + "'");
  }
  throw UsageError("unknown space '" + text +
                   "' (h2, h3, hn:<n>, rank1:<m>,<m2>, a1xa1, a2, b2, bc2)");
}

std::string format_complex(Complex z) {
  return fmt_double(z.real()) + "," + fmt_double(z.imag());
}

std::string format_lambda(const SpectralParam& lam) {
  std::string s;
  for (std::size_t k = 0; k < lam.coords.size(); ++k) {
    if (k) s += "/";
    s += format_complex(lam.coords[k]);
  }
  return s;
}

std::string format_word(const WeylElement& w) {
  std::string s;
  for (std::size_t k = 0; k < w.word.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(w.word[k]);
  }
  return s;
}

}  // namespace sphfun::cli
