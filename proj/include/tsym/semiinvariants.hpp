#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tsym/subgroups.hpp"

namespace tsym {

/// One-dimensional character of K <= A, recorded by its values on a fixed
/// generating list of K.
struct Character {
  std::vector<Perm4> gens;
  std::vector<Scalar> values;

  bool is_trivial() const;
  /// Smallest m >= 1 with chi^m = 1.
  int order() const;
  friend Character operator*(const Character& a, const Character& b);
  Character pow(int e) const;
  friend bool operator==(const Character& a, const Character& b) { return a.values == b.values; }
};

/// Subspace M_chi = {x : h x = chi(h) x for all h in K}, with a basis in
/// reduced row-echelon form over the coordinates e11, e12, ..., e33.
struct SemiSpace {
  Character chi;
  std::vector<Mat> basis;
  int dim() const { return static_cast<int>(basis.size()); }
};

/// Generators used for K: the standard ones when K is a standard
/// representative, otherwise a greedy generating set.
std::vector<Perm4> a_generators(const Subgroup& k);

/// All nonzero semiinvariant spaces of K, ordered with the trivial character
/// first, then by character values. Throws std::invalid_argument when K is
/// not contained in A x 1.
std::vector<SemiSpace> semiinvariant_spaces(const Subgroup& k);

/// The character of x for K (on the given generators), or nullopt if x is not
/// a semiinvariant. x must be nonzero.
std::optional<Character> character_of(const Mat& x, const std::vector<Perm4>& gens);

/// Canonical basis (RREF) of the span of the given matrices.
std::vector<Mat> span_basis(const std::vector<Mat>& ms);
bool same_span(const std::vector<Mat>& a, const std::vector<Mat>& b);
bool in_span(const std::vector<Mat>& basis, const Mat& m);

/// R x = (h x)^t.
Mat R_transform(const Perm4& h, const Mat& m);

/// The ten standard subgroups K1..K10 of S4 by name, in order.
const std::vector<std::string>& k_names();
/// 1-based position of a name in k_names(); throws on unknown names.
int k_index(std::string_view name);

/// Listed spaces L_{i,j} for K_i, j = 1.. . `printed` is the listing as
/// originally stated; `amended` differs only where the printed form
/// is internally inconsistent and carries a note explaining why.
struct ListedSpace {
  int i = 0;
  int j = 0;
  std::vector<Mat> printed;
  std::vector<Mat> amended;
  std::string note;
};
const std::vector<ListedSpace>& listed_spaces(int i);

/// A multiplicative relation prod chi_{i,j}^{e} = chi_{i,rhs} (rhs = 0 for the
/// trivial character).
struct CharRelation {
  std::vector<std::pair<int, int>> lhs;  // (j, exponent)
  int rhs = 0;
  std::string text;
};
const std::vector<CharRelation>& listed_relations(int i);

struct SpaceMatch {
  int j = 0;                 // listed index, 0 when unmatched
  bool matches_printed = false;
  bool matches_amended = false;
};

struct SemiinvariantReport {
  int i = 0;
  std::string name;
  std::vector<SemiSpace> spaces;
  std::vector<SpaceMatch> matches;  // parallel to spaces
  bool listing_agrees = false;      // bijection with the (amended) listing
  std::vector<std::string> notes;   // printed-vs-computed discrepancies
  std::string character_group;      // "1", "Z2", "Z3", "Z2xZ2", "Z4"
  std::vector<std::pair<std::string, bool>> relations;
  bool direct_sum_is_whole = false;
  bool transpose_stable = false;
  bool passed() const;
};

SemiinvariantReport character_relations(int i);

}  // namespace tsym
