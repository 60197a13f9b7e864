#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tsym/scalar.hpp"

namespace tsym::linalg {

using Vec = std::vector<Scalar>;
/// Row-major list of rows; all rows share one length.
using Rows = std::vector<Vec>;

struct Echelon {
  Rows rows;                 // nonzero rows of the reduced row-echelon form
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return rows.size(); }
};

/// Reduced row-echelon form with leading ones. Unique for a given row space,
/// which makes it the canonical key for subspace comparison.
Echelon rref(Rows rows, std::size_t ncols);

/// Basis of {v : A v = 0}, one vector per free column, in column order.
Rows kernel(const Rows& a, std::size_t ncols);

/// Coordinates c with sum_k c[k] basis[k] = v, or nullopt if v is outside the
/// span. The basis must be linearly independent.
std::optional<Vec> span_coordinates(const Rows& basis, const Vec& v);

bool same_span(const Rows& a, const Rows& b, std::size_t ncols);
bool in_span(const Rows& basis, const Vec& v);
bool is_zero(const Vec& v);

}  // namespace tsym::linalg
