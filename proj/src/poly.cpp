#include "tsym/poly.hpp"

#include <numeric>
#include <stdexcept>

namespace tsym {

ParamPoly ParamPoly::constant(std::size_t nvars, const Scalar& c) {
  ParamPoly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

ParamPoly ParamPoly::variable(std::size_t nvars, std::size_t k) {
  if (k >= nvars) throw std::out_of_range("variable index");
  ParamPoly p(nvars);
  Exponents e(nvars, 0);
  e[k] = 1;
  p.add_term(e, 1);
  return p;
}

int ParamPoly::degree() const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

void ParamPoly::add_term(const Exponents& e, const Scalar& c) {
  if (e.size() != nvars_) throw std::invalid_argument("exponent vector length");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

ParamPoly& ParamPoly::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("variable count mismatch");
  ParamPoly r(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      ParamPoly::Exponents e(a.nvars_);
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      r.add_term(e, ca * cb);
    }
  return r;
}

Scalar ParamPoly::eval(const std::vector<Scalar>& values) const {
  if (values.size() != nvars_) throw std::invalid_argument("wrong number of values");
  Scalar sum;
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (std::size_t k = 0; k < e.size(); ++k)
      for (int p = 0; p < e[k]; ++p) t *= values[k];
    sum += t;
  }
  return sum;
}

std::string ParamPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  // Highest-degree monomials first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names.at(k);
      if (e[k] > 1) mono += "^" + std::to_string(e[k]);
    }
    std::string coef = c.str();
    bool compound = !c.is_rational() && coef.find_first_of("+-", 1) != std::string::npos;
    if (compound) coef = "(" + coef + ")";
    std::string term;
    if (mono.empty())
      term = coef;
    else if (c.is_one())
      term = mono;
    else if (c == Scalar(-1))
      term = "-" + mono;
    else
      term = coef + "*" + mono;
    if (out.empty())
      out = term;
    else if (term[0] == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out;
}

}  // namespace tsym
