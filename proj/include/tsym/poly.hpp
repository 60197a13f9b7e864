#pragma once

#include <map>
#include <string>
#include <vector>

#include "tsym/scalar.hpp"

namespace tsym {

/// Sparse polynomial over Scalar in a fixed number of variables. Monomials
/// are exponent vectors; zero coefficients are never stored.
class ParamPoly {
 public:
  using Exponents = std::vector<int>;

  explicit ParamPoly(std::size_t nvars = 0) : nvars_(nvars) {}
  static ParamPoly constant(std::size_t nvars, const Scalar& c);
  static ParamPoly variable(std::size_t nvars, std::size_t k);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  const std::map<Exponents, Scalar>& terms() const { return terms_; }
  void add_term(const Exponents& e, const Scalar& c);

  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly& operator*=(const Scalar& s);
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(ParamPoly a, const Scalar& s) { return a *= s; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend bool operator==(const ParamPoly&, const ParamPoly&) = default;

  /// Exact evaluation; values.size() must equal nvars().
  Scalar eval(const std::vector<Scalar>& values) const;
  /// e.g. "3*a^2*b - w^3*c + 1", with the given variable names.
  std::string str(const std::vector<std::string>& names) const;

 private:
  std::size_t nvars_;
  std::map<Exponents, Scalar> terms_;
};

}  // namespace tsym
