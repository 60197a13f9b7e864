#pragma once

#include <array>
#include <bitset>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tsym/group.hpp"

namespace tsym {

/// Subset of G as a bitmask over GroupTable indices.
using ElemSet = std::bitset<GroupTable::kOrder>;

/// Closure of a set of element indices under multiplication.
ElemSet closure(std::span<const int> generators);

class Subgroup {
 public:
  Subgroup();  // trivial group
  explicit Subgroup(const ElemSet& elements, std::string label = {});
  static Subgroup generated_by(std::span<const GElem> generators, std::string label = {});
  static Subgroup whole_group();

  const ElemSet& set() const { return set_; }
  int order() const { return static_cast<int>(set_.count()); }
  int index() const { return GroupTable::kOrder / order(); }
  bool contains(int k) const { return set_.test(k); }
  bool contains(const GElem& g) const;
  bool contains(const Subgroup& other) const { return (other.set_ & ~set_).none(); }
  std::vector<int> indices() const;
  std::vector<GElem> elements() const;
  /// A small generating set, chosen greedily in element order.
  std::vector<GElem> generators() const;

  /// Canonical encoding: the element bitmask in hex, most significant first.
  std::string key() const;
  const std::string& label() const { return label_; }
  void set_label(std::string l) { label_ = std::move(l); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.set_ == b.set_; }
  friend bool operator<(const Subgroup& a, const Subgroup& b);

 private:
  ElemSet set_;
  std::string label_;
};

/// g H g^{-1}.
Subgroup conjugate(const Subgroup& h, int g);
bool are_conjugate(const Subgroup& a, const Subgroup& b);
/// Smallest bitmask among the conjugates; equal iff conjugate.
ElemSet conjugacy_key(const Subgroup& h);
Subgroup normalizer(const Subgroup& h);

/// Every subgroup of G (or of `within`) of order >= min_order, each exactly
/// once, found by joining cyclic subgroups to a fixpoint. Sorted by order,
/// then by key.
std::vector<Subgroup> enumerate_subgroups(int min_order);
std::vector<Subgroup> enumerate_subgroups_within(const ElemSet& within, int min_order = 1);

/// Partition by conjugacy in G; classes ordered by first appearance.
std::vector<std::vector<Subgroup>> conjugacy_classes(const std::vector<Subgroup>& subs);

/// H n (A x 1), H n (1 x B), and the projections onto the factors, all as
/// subgroups of G.
Subgroup intersect_a(const Subgroup& h);
Subgroup intersect_b(const Subgroup& h);
Subgroup project_a(const Subgroup& h);
Subgroup project_b(const Subgroup& h);

/// Standard conjugacy-class representatives of subgroups of S4, embedded as
/// X x 1: "1", "Z2(1)", "Z2(2)", "Z3", "V(1)", "V(2)", "Z4", "S3", "D8", "A4", "S4".
Subgroup s4_rep(std::string_view name);
std::vector<Perm4> s4_rep_generators(std::string_view name);
const std::vector<std::string>& s4_rep_names();
/// Representatives in S3, embedded as 1 x Y: "1", "Z2", "Z3", "S3".
Subgroup s3_rep(std::string_view name);

/// g1..g5 of the subdirect-product decompositions.
GElem standard_g(int k);

struct StandardRep {
  std::string label;   // e.g. "V(1)o2S3", "D8x1"
  std::string x_name;  // projection onto S4
  std::string y_name;  // projection onto S3
  std::string c_name;  // H n (A x 1)
  std::string d_name;  // H n (1 x B)
  std::vector<GElem> r_gens;
  Subgroup group;
};

/// The 43 representatives of subgroups of order >= 8: direct products X x Y
/// of standard representatives and subdirect products (C x D) R.
const std::vector<StandardRep>& standard_reps();
const StandardRep& standard_rep(std::string_view label);

/// All Z <= X x Y with full projections (Goursat). X must lie in A x 1 and Y
/// in 1 x B. Sorted by (order, key); the direct product is included.
std::vector<Subgroup> subdirect_products(const Subgroup& x, const Subgroup& y);

}  // namespace tsym
