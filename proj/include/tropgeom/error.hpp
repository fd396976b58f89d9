#pragma once

#include <stdexcept>
#include <string>

namespace tropgeom {

enum class Errc {
  DivisionByZero,
  DimensionMismatch,
  NotSquare,
  ZeroVector,
  DegenerateLine,
  IdenticalPoints,
  IdenticalLines,
  NotIncident,
  VertexPoint,
  Incompatible,
  DegenerateConfiguration,
  CenterOnLine,
  SingularMatrix,
  BudgetExhausted,
  NoSolution,
  AmbiguousSolution,
  PreconditionViolated,
  ZeroDenominator,
  NotInvertible,
  EmptyView,
  ParseError,
};

const char* errc_name(Errc c);

/// Domain error carrying a stable machine-readable code.
class TropError : public std::runtime_error {
 public:
  TropError(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const { return code_; }
  const char* code_name() const { return errc_name(code_); }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw TropError(code, what);
}

}  // namespace tropgeom
