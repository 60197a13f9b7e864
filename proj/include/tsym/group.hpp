#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "tsym/matrix.hpp"
#include "tsym/perm.hpp"

namespace tsym {

/// Element (h, b) of G = A x B, with h in S4 (acting through gamma) and b in
/// S3 (permuting tensor factors).
struct GElem {
  Perm4 h;
  Perm3 b;

  friend GElem operator*(const GElem& x, const GElem& y) { return {x.h * y.h, x.b * y.b}; }
  GElem inverse() const { return {h.inverse(), b.inverse()}; }
  bool is_identity() const { return h.is_identity() && b.is_identity(); }

  /// "h|b" in cycle notation, e.g. "(12)(34)|(12)".
  std::string str() const;
  /// Inverse of str(); also accepts "h" alone (b = e).
  static GElem parse(std::string_view text);

  friend bool operator==(const GElem&, const GElem&) = default;
  friend auto operator<=>(const GElem&, const GElem&) = default;
};

/// Monomial matrix a with a e_j = sign[j] e_{perm[j]} (0-based).
struct Monomial {
  std::array<std::uint8_t, 3> perm{0, 1, 2};
  std::array<std::int8_t, 3> sign{1, 1, 1};

  Mat to_mat() const;
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// alpha(s) = sgn(s) * (permutation matrix of s), s in S3 = Stab(4) in S4.
Monomial alpha(const Perm4& s);
/// beta on the Klein four-group V = {e, (12)(34), (13)(24), (14)(23)}.
Monomial beta(const Perm4& v);
/// gamma(h) = beta(v) alpha(s) where h = v s, v in V, s fixing 4.
Monomial gamma_monomial(const Perm4& h);
Mat gamma(const Perm4& h);

/// gamma(h) m gamma(h)^{-1}.
Mat act_mat(const Perm4& h, const Mat& m);
DecTensor act(const GElem& g, const DecTensor& w);
FullTensor act_full(const GElem& g, const FullTensor& t);

/// The 144 elements in lexicographic order of (h images, b images); the
/// identity comes first.
const std::vector<GElem>& group_elements();

/// Index-based view of G: element order as group_elements(), with
/// multiplication and inverse tables.
class GroupTable {
 public:
  static constexpr int kOrder = 144;
  static const GroupTable& get();

  const GElem& elem(int k) const { return elems_[k]; }
  int index(const GElem& g) const;
  int mul(int a, int b) const { return mul_[a * kOrder + b]; }
  int inv(int a) const { return inv_[a]; }
  static constexpr int identity() { return 0; }
  const Monomial& monomial(int k) const { return mono_[k]; }

 private:
  GroupTable();
  std::vector<GElem> elems_;
  std::vector<std::uint8_t> mul_;
  std::vector<std::uint8_t> inv_;
  std::vector<Monomial> mono_;
};

int perm_rank(const Perm4& p);
int perm_rank(const Perm3& p);

/// Group-level checks parameterised over gamma so that a deliberately broken
/// gamma can be fed through the same code path.
using GammaFn = std::function<Mat(const Perm4&)>;

struct GroupCheck {
  int homomorphism_pairs_ok = 0;   // out of 576
  bool image_is_det1_monomials = false;
  bool orthogonal = false;
  int commuting_pairs_ok = 0;      // out of 24 * 6
  int invariance_ok = 0;           // out of 144
  bool passed() const {
    return homomorphism_pairs_ok == 576 && image_is_det1_monomials && orthogonal &&
           commuting_pairs_ok == 144 && invariance_ok == 144;
  }
};

/// Runs the isomorphism and invariance checks. `probe` is the decomposable
/// used for the A-B commutation test.
GroupCheck check_group(const GammaFn& gamma_fn, const DecTensor& probe);

}  // namespace tsym
