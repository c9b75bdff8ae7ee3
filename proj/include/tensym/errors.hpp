#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace tensym {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IndexError : Error {
  using Error::Error;
};

/// Transitive closure of the generating pairs violates antisymmetry.
struct CycleError : Error {
  int a = -1, b = -1;
  CycleError(const std::string& msg, int a_, int b_) : Error(msg), a(a_), b(b_) {}
};

struct NotALattice : Error {
  int x = -1, y = -1;
  NotALattice(const std::string& msg, int x_, int y_) : Error(msg), x(x_), y(y_) {}
};

struct NotDistributive : Error {
  int x = -1, y = -1, z = -1;
  NotDistributive(const std::string& msg, int x_, int y_, int z_)
      : Error(msg), x(x_), y(y_), z(z_) {}
};

struct NotBounded : Error {
  using Error::Error;
};

struct ShapeError : Error {
  using Error::Error;
};

struct InvalidAlgebra : Error {
  using Error::Error;
};

struct InvalidSpace : Error {
  using Error::Error;
};

struct NotAHomomorphism : Error {
  using Error::Error;
};

struct NotACongruence : Error {
  int a = -1, b = -1;
  std::string op;
  NotACongruence(const std::string& msg, std::string op_, int a_, int b_)
      : Error(msg), a(a_), b(b_), op(std::move(op_)) {}
};

struct NotATmsSubset : Error {
  using Error::Error;
};

struct SizeGuard : Error {
  int limit = 0, actual = 0;
  SizeGuard(const std::string& msg, int limit_, int actual_)
      : Error(msg), limit(limit_), actual(actual_) {}
};

struct ParseError : Error {
  int line = 0, col = 0;
  ParseError(const std::string& msg, int line_, int col_)
      : Error(msg + " at " + std::to_string(line_) + ":" + std::to_string(col_)),
        line(line_),
        col(col_) {}
};

struct SemanticError : Error {
  using Error::Error;
};

/// Caps for the exhaustive enumerations. `algebra` bounds brute-force
/// congruence search on a carrier, `space` bounds subset scans on a dual
/// carrier. The TENSYM_GUARD environment variable overrides the algebra cap.
struct Guards {
  int algebra = 12;
  int space = 6;
};

inline Guards default_guards() {
  static const Guards g = [] {
    Guards out;
    if (const char* env = std::getenv("TENSYM_GUARD")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (end != env && v >= 1) out.algebra = static_cast<int>(v);
    }
    return out;
  }();
  return g;
}

}  // namespace tensym
