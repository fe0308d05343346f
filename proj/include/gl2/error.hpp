#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gl2 {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the shape or type of an argument was violated.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class NotQuasiIso : public Error {
 public:
  using Error::Error;
};

class NoFiller : public Error {
 public:
  using Error::Error;
};

/// Boundary data whose tetrahedra do not all commute.
class Incompatible : public Error {
 public:
  using Error::Error;
};

class NotSimplicial : public Error {
 public:
  using Error::Error;
};

class NotAbelian : public Error {
 public:
  using Error::Error;
};

class OrthogonalPair : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// One violated law or equation. `rule` names the equation, `where` the
/// offending index tuple.
struct Violation {
  std::string rule;
  std::string where;
  std::string detail;

  std::string message() const {
    std::string m = rule + " fails at " + where;
    if (!detail.empty()) m += ": " + detail;
    return m;
  }
  friend bool operator==(const Violation&, const Violation&) = default;
};

using Report = std::vector<Violation>;

inline std::string tuple_string(const std::vector<std::string>& parts) {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += parts[i];
  }
  return s + ")";
}

}  // namespace gl2
