#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <utility>

#include "symqec/errors.hpp"

namespace symqec {

// Arbitrary-precision rational, always stored reduced with positive
// denominator (the backing type canonicalizes on every operation).
using Rational = boost::multiprecision::cpp_rational;

double to_double(const Rational& r);

// Exact complex number re + im*i with rational parts.
struct ComplexRational {
  Rational re{};
  Rational im{};

  ComplexRational() = default;
  ComplexRational(Rational real, Rational imag)
      : re(std::move(real)), im(std::move(imag)) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  ComplexRational conj() const { return {re, -im}; }
  Rational norm_sq() const { return re * re + im * im; }

  // Multiplicative inverse; throws on zero.
  ComplexRational reciprocal() const;

  std::complex<double> to_complex() const {
    return {to_double(re), to_double(im)};
  }

  friend ComplexRational operator+(const ComplexRational& a,
                                   const ComplexRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexRational operator-(const ComplexRational& a,
                                   const ComplexRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexRational operator*(const ComplexRational& a,
                                   const ComplexRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  ComplexRational operator-() const { return {-re, -im}; }

  friend bool operator==(const ComplexRational&,
                         const ComplexRational&) = default;
};

// Element of Q(i)[sqrt 2], stored as rat + root*sqrt(2) with complex
// rational components. Zero has the unique representation rat = root = 0,
// and the ring is closed under +, -, * and division by nonzero elements
// (sqrt 2 is irrational over Q(i), so the norm r^2 - 2 s^2 of a nonzero
// element never vanishes).
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(int value) : rat_(Rational(value), Rational(0)) {}
  explicit Scalar(Rational value) : rat_(std::move(value), Rational(0)) {}
  explicit Scalar(ComplexRational rat) : rat_(std::move(rat)) {}
  Scalar(ComplexRational rat, ComplexRational root)
      : rat_(std::move(rat)), root_(std::move(root)) {}

  static Scalar zero() { return {}; }
  static Scalar one() { return Scalar(1); }
  static Scalar i() { return Scalar(ComplexRational(Rational(0), Rational(1))); }
  static Scalar sqrt2() {
    return {ComplexRational(), ComplexRational(Rational(1), Rational(0))};
  }
  // 1/sqrt(2) rationalized as sqrt(2)/2.
  static Scalar inv_sqrt2() {
    return {ComplexRational(), ComplexRational(Rational(1, 2), Rational(0))};
  }

  const ComplexRational& rat() const { return rat_; }
  const ComplexRational& root() const { return root_; }

  bool is_zero() const { return rat_.is_zero() && root_.is_zero(); }

  // Complex conjugation (i -> -i, sqrt 2 fixed).
  Scalar conj() const { return {rat_.conj(), root_.conj()}; }

  std::complex<double> to_complex() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    return {a.rat_ + b.rat_, a.root_ + b.root_};
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    return {a.rat_ - b.rat_, a.root_ - b.root_};
  }
  Scalar operator-() const { return {-rat_, -root_}; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);

  friend bool operator==(const Scalar&, const Scalar&) = default;

 private:
  ComplexRational rat_{};
  ComplexRational root_{};
};

}  // namespace symqec
