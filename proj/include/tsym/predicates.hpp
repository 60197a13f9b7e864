#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tsym/semiinvariants.hpp"

namespace tsym {

struct UnknownCondition : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class CondKind { KxOne, OnexZ3, OnexZ2, OnexS3, KxZ3, KxZ2, KxS3, Twist, X, Y };

/// An invariance condition with its parameters: K (a name from k_names())
/// for the K-kinds, h for Twist, which stands for the element (h, (12)).
struct Condition {
  CondKind kind = CondKind::OnexZ3;
  std::string k;
  Perm4 h;

  /// Text form: "Kx1:D8", "1xZ3", "1xZ2", "1xS3", "KxZ3:Z3", "KxZ2:V(1)",
  /// "KxS3:S3", "twist:(12)(34)", "X", "Y".
  std::string str() const;
  static Condition parse(std::string_view text);
};

/// The subgroup of G the condition describes invariance under.
Subgroup condition_subgroup(const Condition& c);

/// Decides invariance of w from the shape of its factors: proportionality
/// between factors, transposes and R-images, membership in semiinvariant
/// spaces and the character equations. No stabilizer sweep is involved.
bool structural_invariant(const DecTensor& w, const Condition& c);

/// Every condition with each admissible parameter: all ten K for the
/// K-kinds, and every h of order 1, 2 or 4 for Twist.
std::vector<Condition> all_conditions();

/// a = c b for some nonzero scalar c (both nonzero).
bool proportional(const Mat& a, const Mat& b);

}  // namespace tsym
