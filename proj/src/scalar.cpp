#include "tropgeom/scalar.hpp"

namespace tropgeom {

TropScalar Semiring::add(const TropScalar& x, const TropScalar& y) const {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (flavor_ == Flavor::MaxPlus)
    return TropScalar(std::max(x.value(), y.value()));
  return TropScalar(std::min(x.value(), y.value()));
}

TropScalar Semiring::mul(const TropScalar& x, const TropScalar& y) const {
  if (x.is_zero() || y.is_zero()) return TropScalar::zero();
  return TropScalar(x.value() + y.value());
}

TropScalar Semiring::div(const TropScalar& x, const TropScalar& y) const {
  if (y.is_zero()) fail(Errc::DivisionByZero, "division by the zero element");
  if (x.is_zero()) return TropScalar::zero();
  return TropScalar(x.value() - y.value());
}

TropScalar Semiring::dual_add(const TropScalar& x, const TropScalar& y) const {
  if (x.is_zero() || y.is_zero()) return TropScalar::zero();
  if (flavor_ == Flavor::MaxPlus)
    return TropScalar(std::min(x.value(), y.value()));
  return TropScalar(std::max(x.value(), y.value()));
}

bool Semiring::leq(const TropScalar& x, const TropScalar& y) const {
  return add(x, y) == y;
}

SemilinearWitness Semiring::check_semilinear_condition(
    const TropScalar& u, const TropScalar& v) const {
  if (add(u, v) != TropScalar::one())
    fail(Errc::PreconditionViolated, "u + v is not the semiring one");
  SemilinearWitness w;
  if (u.finite()) {
    w.u_is_unit = true;
    w.u_inverse = -u.value();
  }
  if (v.finite()) {
    w.v_is_unit = true;
    w.v_inverse = -v.value();
  }
  // u + v = 1 forces at least one summand to equal 1, hence be a unit.
  return w;
}

}  // namespace tropgeom
