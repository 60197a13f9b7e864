#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>

#include "tsym/linalg.hpp"
#include "tsym/scalar.hpp"

namespace tsym {

struct ZeroFactor : std::domain_error {
  using std::domain_error::domain_error;
};
struct SingularMatrix : std::domain_error {
  SingularMatrix() : std::domain_error("singular matrix") {}
};

/// 3x3 matrix over Scalar. Entries are addressed 0-based through at(); the
/// matrix units e_ij are built 1-based through unit(i, j) to match the usual
/// notation. Row-major entry order e11, e12, ..., e33 is the global basis
/// order for canonical forms and encodings.
class Mat {
 public:
  Mat() = default;

  static Mat unit(int i, int j);
  static Mat identity();
  static Mat diag(const Scalar& a, const Scalar& b, const Scalar& c);
  static Mat from_vec(const linalg::Vec& v);

  Scalar& at(int r, int c) { return e_[r * 3 + c]; }
  const Scalar& at(int r, int c) const { return e_[r * 3 + c]; }
  Scalar& operator[](int k) { return e_[k]; }
  const Scalar& operator[](int k) const { return e_[k]; }

  bool is_zero() const;
  /// Index of the first nonzero entry in row-major order, or -1.
  int leading_index() const;
  linalg::Vec to_vec() const { return {e_.begin(), e_.end()}; }

  Mat operator-() const;
  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(const Scalar& s);
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(Mat a, const Scalar& s) { return a *= s; }
  friend Mat operator*(const Scalar& s, Mat a) { return a *= s; }
  friend Mat operator*(const Mat& a, const Mat& b);

  friend bool operator==(const Mat&, const Mat&) = default;
  friend std::strong_ordering operator<=>(const Mat& a, const Mat& b);

  Scalar det() const;
  /// Throws SingularMatrix when det = 0.
  Mat inverse() const;

 private:
  std::array<Scalar, 9> e_{};
};

Mat transpose(const Mat& m);
/// a m a^{-1}.
Mat conj_by(const Mat& a, const Mat& m);
/// Entrywise complex conjugate.
Mat conj_entries(const Mat& m);

namespace named {
Mat delta();    ///< e11 + e22 + e33
Mat kappa();    ///< sum of the off-diagonal units
Mat eta();      ///< e11 + zeta e22 + zeta_bar e33
Mat eta_bar();  ///< e11 + zeta_bar e22 + zeta e33
Mat tau();      ///< e12 + e23 + e31 - e21 - e32 - e13
Mat all_ones();
}  // namespace named

/// Decomposable tensor x (x) y (x) z with nonzero factors.
class DecTensor {
 public:
  /// Throws ZeroFactor if any factor is zero.
  DecTensor(Mat x, Mat y, Mat z);

  const Mat& x() const { return f_[0]; }
  const Mat& y() const { return f_[1]; }
  const Mat& z() const { return f_[2]; }
  const Mat& factor(int k) const { return f_[k]; }
  const std::array<Mat, 3>& factors() const { return f_; }

  friend bool operator==(const DecTensor&, const DecTensor&) = default;
  friend std::strong_ordering operator<=>(const DecTensor& a, const DecTensor& b);

 private:
  std::array<Mat, 3> f_;
};

inline DecTensor cube(const Mat& x) { return {x, x, x}; }

/// Index (i,j,k,l,m,n), 0-based, of the basis tensor e_ij (x) e_kl (x) e_mn.
using Index6 = std::array<std::uint8_t, 6>;

/// Full tensor in M (x) M (x) M, stored as its nonzero coefficients.
class FullTensor {
 public:
  const Scalar& coeff(const Index6& idx) const;
  void add(const Index6& idx, const Scalar& v);
  void set(const Index6& idx, const Scalar& v);
  std::size_t nonzero_count() const { return c_.size(); }
  const std::map<Index6, Scalar>& nonzeros() const { return c_; }

  FullTensor& operator+=(const FullTensor& o);
  FullTensor& operator-=(const FullTensor& o);
  FullTensor& operator*=(const Scalar& s);
  friend FullTensor operator+(FullTensor a, const FullTensor& b) { return a += b; }
  friend FullTensor operator-(FullTensor a, const FullTensor& b) { return a -= b; }
  friend bool operator==(const FullTensor&, const FullTensor&) = default;

 private:
  std::map<Index6, Scalar> c_;
};

/// Index6 from 1-based indices, for readability at call sites.
Index6 idx1(int i, int j, int k, int l, int m, int n);

FullTensor expand(const DecTensor& w);
/// The matrix-multiplication tensor <3,3,3> = sum e_ij (x) e_jk (x) e_ki.
const FullTensor& tensor_T();

/// Rescales x and y to leading coefficient 1 (row-major order), folding the
/// scalars into z. Two decomposables are equal as tensors iff their canonical
/// forms are equal.
DecTensor dec_canon(const DecTensor& w);

}  // namespace tsym
