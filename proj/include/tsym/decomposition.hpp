#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "tsym/orbits.hpp"
#include "tsym/poly.hpp"

namespace tsym {

using Decomposition = std::vector<DecTensor>;

struct NotInvariant : std::domain_error {
  using std::domain_error::domain_error;
};
struct CapExceeded : std::domain_error {
  using std::domain_error::domain_error;
};
struct MissingVariable : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The 27 terms e_ij (x) e_jk (x) e_ki, ordered by (i, j, k).
Decomposition standard_decomposition();
FullTensor decomposition_sum(const Decomposition& d);
bool verify_decomposition(const Decomposition& d);
/// For every g, {dec_canon(g t)} equals {dec_canon(t)} as multisets.
bool is_g_invariant(const Decomposition& d);

struct OrbitPart {
  DecTensor representative;  // canonical form of the first term met
  int length = 0;
  int multiplicity = 0;      // how many times the whole orbit occurs
  int stabilizer_order = 0;
};
/// Throws NotInvariant unless is_g_invariant(d).
std::vector<OrbitPart> orbit_structure(const Decomposition& d);

/// Orbit lengths 144/|H| over subgroups H of order >= 8.
const std::vector<int>& orbit_lengths();
/// Multisets of orbit_lengths() (nondecreasing parts) with sum <= max_len,
/// or == max_len when exact; the empty profile is excluded. Sorted
/// lexicographically.
std::vector<std::vector<int>> feasible_profiles(int max_len, bool exact = false);

struct RowSpec {
  int row_id = 0;
  std::vector<std::string> names;  // one per row parameter
};

struct ConstraintSystem {
  std::vector<std::string> variables;
  std::vector<RowSpec> rows;
  /// 729 polynomials, coordinate (i,j,k,l,m,n) at position
  /// ((3i+j)*9 + 3k+l)*9 + 3m+n, 0-based: orbit sum minus T.
  std::vector<ParamPoly> equations;
};

inline constexpr int kDefaultCap = 23;

/// Left transversal of H_i in G: the first element of each coset gH in
/// element order.
std::vector<int> left_transversal(const Subgroup& h);

/// Sum over each row's orbit of its parametrized term, minus T. Names may be
/// left empty to get "<param><row position>" names. Throws CapExceeded when
/// the total orbit length exceeds cap.
ConstraintSystem constraint_system(const std::vector<RowSpec>& rows, int cap = kDefaultCap);

struct Residual {
  std::vector<std::pair<Index6, Scalar>> nonzero;
  bool is_zero() const { return nonzero.empty(); }
};

/// Throws MissingVariable when a system variable has no value.
Residual evaluate_constraints(const ConstraintSystem& sys,
                              const std::map<std::string, Scalar>& values);

/// Rows and parameters whose orbit sums give the standard decomposition:
/// row 5 at (0,1), row 26 at (1,0,1,0,0), row 44 at (1,0).
std::vector<RowSpec> standard_orbit_rows();
std::map<std::string, Scalar> standard_orbit_values();

/// Direct path: instantiate each row, act by the transversal and expand.
FullTensor orbit_sum(const std::vector<RowSpec>& rows,
                     const std::map<std::string, Scalar>& values);

}  // namespace tsym
