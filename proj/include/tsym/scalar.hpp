#pragma once

#include <array>
#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace tsym {

using Rational = mpq_class;

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};

/// Element of the cyclotomic field Q(w), w a primitive 12th root of unity.
///
/// Stored in the power basis {1, w, w^2, w^3} modulo w^4 - w^2 + 1. Every
/// operation returns the reduced coordinates, so two scalars are equal iff
/// their coordinates are equal. The field contains i = w^3 and the primitive
/// cube root of unity zeta = w^4 = w^2 - 1.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : c_{Rational(v), 0, 0, 0} {}  // NOLINT: implicit from integers
  Scalar(const Rational& q) : c_{q, 0, 0, 0} { c_[0].canonicalize(); }  // NOLINT
  Scalar(Rational c0, Rational c1, Rational c2, Rational c3);

  static Scalar omega() { return {0, 1, 0, 0}; }
  static Scalar i() { return {0, 0, 0, 1}; }
  static Scalar zeta() { return {-1, 0, 1, 0}; }
  static Scalar zeta_bar() { return {0, 0, -1, 0}; }
  /// w^k for any integer k.
  static Scalar root_of_unity(int k);

  const Rational& coeff(int k) const { return c_[k]; }
  const std::array<Rational, 4>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  bool is_one() const { return is_rational() && c_[0] == 1; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.c_ == b.c_; }
  /// Lexicographic on coordinates; a total order used for canonical keys only.
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  /// Multiplicative inverse; throws DivisionByZero on zero.
  Scalar inv() const;
  /// Complex conjugation, the automorphism sending w to w^{-1} = w - w^3.
  Scalar conj() const;

  /// Human-readable form such as "1/2 - 3*w^2"; not a file format.
  std::string str() const;

 private:
  std::array<Rational, 4> c_{};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

inline Scalar scalar_add(const Scalar& a, const Scalar& b) { return a + b; }
inline Scalar scalar_mul(const Scalar& a, const Scalar& b) { return a * b; }
inline Scalar scalar_inv(const Scalar& a) { return a.inv(); }
inline Scalar scalar_conj(const Scalar& a) { return a.conj(); }

}  // namespace tsym
