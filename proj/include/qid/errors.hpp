#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace qid {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A factor that must be non-zero (a denominator or a gamma argument) hit the
/// pole lattice. `index` names the offending list element when known.
class PoleError : public Error {
 public:
  explicit PoleError(const std::string& what, std::optional<std::size_t> index = std::nullopt)
      : Error(what), index_(index) {}
  std::optional<std::size_t> index() const { return index_; }

 private:
  std::optional<std::size_t> index_;
};

class DivergesError : public Error {
 public:
  using Error::Error;
};

/// Summation hit the hard term cap before the stopping rule was satisfied.
class CapError : public Error {
 public:
  using Error::Error;
};

class SlowConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A computed value left the finite range of the floating point type.
class OverflowError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class InadmissibleError : public Error {
 public:
  using Error::Error;
};

class ExhaustedError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace qid
