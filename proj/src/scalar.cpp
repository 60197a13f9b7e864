#include "tsym/scalar.hpp"

#include <ostream>
#include <sstream>
#include <utility>

namespace tsym {

Scalar::Scalar(Rational c0, Rational c1, Rational c2, Rational c3)
    : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {
  for (auto& q : c_) q.canonicalize();
}

Scalar Scalar::root_of_unity(int k) {
  k %= 12;
  if (k < 0) k += 12;
  Scalar r = 1;
  for (int j = 0; j < k; ++j) r *= omega();
  return r;
}

bool Scalar::is_zero() const {
  return sgn(c_[0]) == 0 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

bool Scalar::is_rational() const {
  return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (int k = 0; k < 4; ++k)
    if (sgn(o.c_[k]) != 0) c_[k] += o.c_[k];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  for (int k = 0; k < 4; ++k)
    if (sgn(o.c_[k]) != 0) c_[k] -= o.c_[k];
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_rational() && o.is_rational()) {
    c_[0] *= o.c_[0];
    return *this;
  }
  std::array<Rational, 7> r{};
  for (int a = 0; a < 4; ++a) {
    if (sgn(c_[a]) == 0) continue;
    for (int b = 0; b < 4; ++b)
      if (sgn(o.c_[b]) != 0) r[a + b] += c_[a] * o.c_[b];
  }
  // w^6 = -1, w^5 = w^3 - w, w^4 = w^2 - 1
  r[0] -= r[6];
  r[3] += r[5];
  r[1] -= r[5];
  r[2] += r[4];
  r[0] -= r[4];
  for (int k = 0; k < 4; ++k) c_[k] = std::move(r[k]);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inv(); }

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  for (int k = 0; k < 4; ++k) {
    int c = cmp(a.c_[k], b.c_[k]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) return Scalar(1 / c_[0]);

  // Solve (multiplication-by-this) * v = 1 in the power basis.
  std::array<std::array<Rational, 5>, 4> m{};
  Scalar col = *this;
  for (int j = 0; j < 4; ++j) {
    for (int r = 0; r < 4; ++r) m[r][j] = col.c_[r];
    col *= omega();
  }
  m[0][4] = 1;
  for (int p = 0; p < 4; ++p) {
    int piv = p;
    while (sgn(m[piv][p]) == 0) ++piv;  // nonsingular: the field has no zero divisors
    std::swap(m[p], m[piv]);
    Rational f = 1 / m[p][p];
    for (int j = p; j < 5; ++j) m[p][j] *= f;
    for (int r = 0; r < 4; ++r) {
      if (r == p || sgn(m[r][p]) == 0) continue;
      Rational g = m[r][p];
      for (int j = p; j < 5; ++j) m[r][j] -= g * m[p][j];
    }
  }
  return Scalar(m[0][4], m[1][4], m[2][4], m[3][4]);
}

Scalar Scalar::conj() const {
  // w -> w - w^3, w^2 -> 1 - w^2, w^3 -> -w^3
  return Scalar(c_[0] + c_[2], c_[1], -c_[2], -c_[1] - c_[3]);
}

std::string Scalar::str() const {
  static const char* const names[] = {"", "w", "w^2", "w^3"};
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < 4; ++k) {
    if (sgn(c_[k]) == 0) continue;
    Rational a = abs(c_[k]);
    if (first) {
      if (sgn(c_[k]) < 0) os << "-";
    } else {
      os << (sgn(c_[k]) < 0 ? " - " : " + ");
    }
    if (k == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << names[k];
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace tsym
