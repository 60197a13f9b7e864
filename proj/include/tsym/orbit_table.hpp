#pragma once

#include <string>
#include <vector>

#include "tsym/matrix.hpp"

namespace tsym {

/// Linear form sum_k p[param_k] * mat_k in the row parameters, or a constant
/// matrix when there are no terms.
struct LinForm {
  std::vector<std::pair<int, Mat>> terms;
  Mat constant;

  bool is_constant() const { return terms.empty(); }
  Mat eval(const std::vector<Scalar>& params) const;
  friend bool operator==(const LinForm&, const LinForm&) = default;
};

enum class Coupling { Cube, Repeat, Linked, Independent };
const char* coupling_name(Coupling c);

/// One row of the orbit table: w(p) = s * f1(p) (x) f2(p) (x) f3(p), where s
/// is params[scalar_param] if scalar_param >= 0 and 1 otherwise.
struct OrbitRow {
  int id = 0;
  std::string stabilizer;  // label of a standard representative
  int length = 0;
  std::vector<std::string> params;
  std::array<LinForm, 3> factors;
  int scalar_param = -1;
  std::string formula;  // human-readable form of w(p)

  int param_count() const { return static_cast<int>(params.size()); }
  Coupling coupling() const;
};

/// The 44 rows, indexed by id - 1.
const std::vector<OrbitRow>& orbit_table();
const OrbitRow& orbit_row(int id);

}  // namespace tsym
