#include "tsym/matrix.hpp"

#include <utility>

namespace tsym {

Mat Mat::unit(int i, int j) {
  if (i < 1 || i > 3 || j < 1 || j > 3) throw std::out_of_range("matrix unit index");
  Mat m;
  m.at(i - 1, j - 1) = 1;
  return m;
}

Mat Mat::identity() { return diag(1, 1, 1); }

Mat Mat::diag(const Scalar& a, const Scalar& b, const Scalar& c) {
  Mat m;
  m.at(0, 0) = a;
  m.at(1, 1) = b;
  m.at(2, 2) = c;
  return m;
}

Mat Mat::from_vec(const linalg::Vec& v) {
  if (v.size() != 9) throw std::invalid_argument("Mat::from_vec expects 9 entries");
  Mat m;
  for (int k = 0; k < 9; ++k) m.e_[k] = v[k];
  return m;
}

bool Mat::is_zero() const { return leading_index() < 0; }

int Mat::leading_index() const {
  for (int k = 0; k < 9; ++k)
    if (!e_[k].is_zero()) return k;
  return -1;
}

Mat Mat::operator-() const {
  Mat r = *this;
  for (auto& s : r.e_) s = -s;
  return r;
}

Mat& Mat::operator+=(const Mat& o) {
  for (int k = 0; k < 9; ++k) e_[k] += o.e_[k];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  for (int k = 0; k < 9; ++k) e_[k] -= o.e_[k];
  return *this;
}

Mat& Mat::operator*=(const Scalar& s) {
  for (auto& v : e_)
    if (!v.is_zero()) v *= s;
  return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
  Mat r;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < 3; ++j)
        if (!b.at(k, j).is_zero()) r.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return r;
}

std::strong_ordering operator<=>(const Mat& a, const Mat& b) {
  for (int k = 0; k < 9; ++k)
    if (auto c = a.e_[k] <=> b.e_[k]; c != 0) return c;
  return std::strong_ordering::equal;
}

Scalar Mat::det() const {
  const Mat& m = *this;
  return m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1)) -
         m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0)) +
         m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
}

Mat Mat::inverse() const {
  Scalar d = det();
  if (d.is_zero()) throw SingularMatrix();
  const Mat& m = *this;
  Mat adj;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      // cofactor of (j, i)
      int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      adj.at(i, j) = m.at(r0, c0) * m.at(r1, c1) - m.at(r0, c1) * m.at(r1, c0);
    }
  return adj * d.inv();
}

Mat transpose(const Mat& m) {
  Mat r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.at(j, i) = m.at(i, j);
  return r;
}

Mat conj_by(const Mat& a, const Mat& m) { return a * m * a.inverse(); }

Mat conj_entries(const Mat& m) {
  Mat r;
  for (int k = 0; k < 9; ++k) r[k] = m[k].conj();
  return r;
}

namespace named {

Mat delta() { return Mat::identity(); }

Mat kappa() {
  Mat m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) m.at(i, j) = 1;
  return m;
}

Mat eta() { return Mat::diag(1, Scalar::zeta(), Scalar::zeta_bar()); }
Mat eta_bar() { return Mat::diag(1, Scalar::zeta_bar(), Scalar::zeta()); }

Mat tau() {
  return Mat::unit(1, 2) + Mat::unit(2, 3) + Mat::unit(3, 1) - Mat::unit(2, 1) -
         Mat::unit(3, 2) - Mat::unit(1, 3);
}

Mat all_ones() { return delta() + kappa(); }

}  // namespace named

DecTensor::DecTensor(Mat x, Mat y, Mat z) : f_{std::move(x), std::move(y), std::move(z)} {
  for (const auto& m : f_)
    if (m.is_zero()) throw ZeroFactor("decomposable tensor with a zero factor");
}

std::strong_ordering operator<=>(const DecTensor& a, const DecTensor& b) {
  for (int k = 0; k < 3; ++k)
    if (auto c = a.f_[k] <=> b.f_[k]; c != 0) return c;
  return std::strong_ordering::equal;
}

const Scalar& FullTensor::coeff(const Index6& idx) const {
  static const Scalar zero;
  auto it = c_.find(idx);
  return it == c_.end() ? zero : it->second;
}

void FullTensor::add(const Index6& idx, const Scalar& v) {
  if (v.is_zero()) return;
  auto [it, inserted] = c_.try_emplace(idx, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) c_.erase(it);
  }
}

void FullTensor::set(const Index6& idx, const Scalar& v) {
  if (v.is_zero())
    c_.erase(idx);
  else
    c_[idx] = v;
}

FullTensor& FullTensor::operator+=(const FullTensor& o) {
  for (const auto& [k, v] : o.c_) add(k, v);
  return *this;
}

FullTensor& FullTensor::operator-=(const FullTensor& o) {
  for (const auto& [k, v] : o.c_) add(k, -v);
  return *this;
}

FullTensor& FullTensor::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& [k, v] : c_) v *= s;
  return *this;
}

Index6 idx1(int i, int j, int k, int l, int m, int n) {
  auto d = [](int v) {
    if (v < 1 || v > 3) throw std::out_of_range("tensor index");
    return static_cast<std::uint8_t>(v - 1);
  };
  return {d(i), d(j), d(k), d(l), d(m), d(n)};
}

FullTensor expand(const DecTensor& w) {
  FullTensor t;
  for (int a = 0; a < 9; ++a) {
    const Scalar& xa = w.x()[a];
    if (xa.is_zero()) continue;
    for (int b = 0; b < 9; ++b) {
      const Scalar& yb = w.y()[b];
      if (yb.is_zero()) continue;
      Scalar xy = xa * yb;
      for (int c = 0; c < 9; ++c) {
        const Scalar& zc = w.z()[c];
        if (zc.is_zero()) continue;
        t.add({std::uint8_t(a / 3), std::uint8_t(a % 3), std::uint8_t(b / 3),
               std::uint8_t(b % 3), std::uint8_t(c / 3), std::uint8_t(c % 3)},
              xy * zc);
      }
    }
  }
  return t;
}

const FullTensor& tensor_T() {
  static const FullTensor t = [] {
    FullTensor r;
    for (std::uint8_t i = 0; i < 3; ++i)
      for (std::uint8_t j = 0; j < 3; ++j)
        for (std::uint8_t k = 0; k < 3; ++k) r.set({i, j, j, k, k, i}, 1);
    return r;
  }();
  return t;
}

DecTensor dec_canon(const DecTensor& w) {
  const Scalar& lx = w.x()[w.x().leading_index()];
  const Scalar& ly = w.y()[w.y().leading_index()];
  if (lx.is_one() && ly.is_one()) return w;
  Mat x = w.x(), y = w.y(), z = w.z();
  if (!lx.is_one()) x *= lx.inv();
  if (!ly.is_one()) y *= ly.inv();
  z *= lx * ly;
  return {std::move(x), std::move(y), std::move(z)};
}

}  // namespace tsym
