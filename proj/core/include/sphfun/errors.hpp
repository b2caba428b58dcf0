#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace sphfun {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Where a Gamma pole was hit. Numerator poles of the c-function are genuine
// poles of c; denominator poles are zeros of c (non-simple parameters).
enum class PoleKind { gamma_argument, numerator, denominator };

class PoleError : public Error {
 public:
  PoleError(const std::string& what, PoleKind kind,
            std::optional<std::size_t> root = std::nullopt)
      : Error(what), kind_(kind), root_(root) {}

  PoleKind kind() const noexcept { return kind_; }
  // Index of the offending positive root, when the pole came from a product
  // over roots (or the word position for chain products).
  std::optional<std::size_t> root() const noexcept { return root_; }

 private:
  PoleKind kind_;
  std::optional<std::size_t> root_;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A series or iteration failed to reach its tolerance within the cap.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// Recursion denominator n(n - 2i Lambda) vanished.
class ResonanceError : public Error {
 public:
  ResonanceError(const std::string& what, int n) : Error(what), n_(n) {}
  int n() const noexcept { return n_; }

 private:
  int n_;
};

// Quadrature finished without meeting the requested tolerance.
class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, double achieved)
      : Error(what), achieved_(achieved) {}
  double achieved_error() const noexcept { return achieved_; }

 private:
  double achieved_;
};

// Malformed input data (root datum, K-type record, factor table).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

}  // namespace sphfun
