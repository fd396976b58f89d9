#pragma once

#include "tropgeom/error.hpp"
#include "tropgeom/rational.hpp"

#include <optional>
#include <string>

namespace tropgeom {

/// Which tropical convention is active. MaxPlus is (Q u {-inf}, max, +) with
/// additive identity -inf; MinPlus is the order dual with identity +inf.
enum class Flavor { MaxPlus, MinPlus };

/// An element of the tropical semiring: the additive identity (the infinite
/// element, whose sign is fixed by the active Flavor) or an exact rational.
/// Every finite element is a unit.
class TropScalar {
 public:
  TropScalar() : v_() {}
  TropScalar(Rat v) : v_(std::move(v)) {}
  TropScalar(int v) : v_(Rat(v)) {}

  static TropScalar zero() { return TropScalar(); }
  static TropScalar one() { return TropScalar(Rat(0)); }

  bool is_zero() const { return !v_.has_value(); }
  bool finite() const { return v_.has_value(); }

  const Rat& value() const {
    if (!v_) fail(Errc::PreconditionViolated, "value() on the zero element");
    return *v_;
  }

  friend bool operator==(const TropScalar& a, const TropScalar& b) {
    return a.v_ == b.v_;
  }
  friend bool operator!=(const TropScalar& a, const TropScalar& b) {
    return !(a == b);
  }

 private:
  std::optional<Rat> v_;
};

/// Outcome of the semi-linearity check on a pair with u + v = 1: which of the
/// two is a unit, with multiplicative inverses as witnesses.
struct SemilinearWitness {
  bool u_is_unit = false;
  bool v_is_unit = false;
  std::optional<Rat> u_inverse;
  std::optional<Rat> v_inverse;
};

/// Operation context. All ordering and arithmetic on TropScalar goes through
/// one Semiring, so the two conventions can never be mixed in a computation.
class Semiring {
 public:
  explicit Semiring(Flavor flavor = Flavor::MaxPlus) : flavor_(flavor) {}

  Flavor flavor() const { return flavor_; }

  /// x + y: max (MaxPlus) or min (MinPlus); idempotent, zero is neutral.
  TropScalar add(const TropScalar& x, const TropScalar& y) const;

  /// x * y: classical addition; zero is absorbing.
  TropScalar mul(const TropScalar& x, const TropScalar& y) const;

  /// x / y: classical subtraction. Throws DivisionByZero when y is zero.
  TropScalar div(const TropScalar& x, const TropScalar& y) const;

  /// The dual of add (min for MaxPlus); zero is absorbing. This is the fold
  /// used by residuation, not a semiring operation.
  TropScalar dual_add(const TropScalar& x, const TropScalar& y) const;

  /// Natural order of the idempotent addition: leq(x,y) iff x + y = y.
  bool leq(const TropScalar& x, const TropScalar& y) const;
  bool less(const TropScalar& x, const TropScalar& y) const {
    return leq(x, y) && x != y;
  }

  /// Certifies the semi-linear condition on a pair with u + v = 1: at least
  /// one of u, v must be a unit. Always succeeds for the tropical semiring.
  /// Throws PreconditionViolated when u + v != 1.
  SemilinearWitness check_semilinear_condition(const TropScalar& u,
                                               const TropScalar& v) const;

 private:
  Flavor flavor_;
};

}  // namespace tropgeom
