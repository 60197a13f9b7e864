#include "tsym/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace tsym::linalg {

Echelon rref(Rows rows, std::size_t ncols) {
  Echelon out;
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    Scalar f = rows[r][col].inv();
    for (std::size_t j = col; j < ncols; ++j)
      if (!rows[r][j].is_zero()) rows[r][j] *= f;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col].is_zero()) continue;
      Scalar g = rows[i][col];
      for (std::size_t j = col; j < ncols; ++j)
        if (!rows[r][j].is_zero()) rows[i][j] -= g * rows[r][j];
    }
    out.pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  out.rows = std::move(rows);
  return out;
}

Rows kernel(const Rows& a, std::size_t ncols) {
  Echelon e = rref(a, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  Rows basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(ncols);
    v[free] = 1;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.rows[k][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> span_coordinates(const Rows& basis, const Vec& v) {
  const std::size_t n = v.size();
  const std::size_t k = basis.size();
  // Columns are basis vectors; augmented with v.
  Rows a(n, Vec(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = basis[j][i];
    a[i][k] = v[i];
  }
  Echelon e = rref(std::move(a), k + 1);
  if (!e.pivots.empty() && e.pivots.back() == k) return std::nullopt;
  if (e.pivots.size() != k) throw std::invalid_argument("span_coordinates: dependent basis");
  Vec c(k);
  for (std::size_t j = 0; j < k; ++j) c[j] = e.rows[j][k];
  return c;
}

bool same_span(const Rows& a, const Rows& b, std::size_t ncols) {
  Echelon ea = rref(a, ncols);
  Echelon eb = rref(b, ncols);
  return ea.pivots == eb.pivots && ea.rows == eb.rows;
}

bool in_span(const Rows& basis, const Vec& v) {
  if (basis.empty()) return is_zero(v);
  Rows all = basis;
  all.push_back(v);
  return rref(basis, v.size()).rank() == rref(std::move(all), v.size()).rank();
}

bool is_zero(const Vec& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

}  // namespace tsym::linalg
