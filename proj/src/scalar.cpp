#include "symqec/scalar.hpp"

#include <cmath>

namespace symqec {

double to_double(const Rational& r) { return r.convert_to<double>(); }

ComplexRational ComplexRational::reciprocal() const {
  if (is_zero()) {
    throw Error("division by zero complex rational");
  }
  Rational n = norm_sq();
  return {re / n, -im / n};
}

std::complex<double> Scalar::to_complex() const {
  static const double kSqrt2 = std::sqrt(2.0);
  return rat_.to_complex() + root_.to_complex() * kSqrt2;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  static const ComplexRational kTwo(Rational(2), Rational(0));
  return {a.rat_ * b.rat_ + kTwo * (a.root_ * b.root_),
          a.rat_ * b.root_ + a.root_ * b.rat_};
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) {
    throw Error("division by zero Scalar");
  }
  static const ComplexRational kTwo(Rational(2), Rational(0));
  // Multiply through by the sqrt(2)-conjugate of b; the denominator
  // collapses to the plain complex rational r^2 - 2 s^2.
  const Scalar conj_b(b.rat_, -b.root_);
  const ComplexRational denom =
      b.rat_ * b.rat_ - kTwo * (b.root_ * b.root_);
  const ComplexRational inv = denom.reciprocal();
  const Scalar num = a * conj_b;
  return {num.rat_ * inv, num.root_ * inv};
}

}  // namespace symqec
