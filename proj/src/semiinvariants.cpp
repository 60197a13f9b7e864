#include "tsym/semiinvariants.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tsym {

bool Character::is_trivial() const {
  return std::all_of(values.begin(), values.end(), [](const Scalar& v) { return v.is_one(); });
}

Character operator*(const Character& a, const Character& b) {
  Character r = a;
  for (std::size_t k = 0; k < r.values.size(); ++k) r.values[k] *= b.values[k];
  return r;
}

Character Character::pow(int e) const {
  Character r = *this;
  for (auto& v : r.values) v = 1;
  for (int k = 0; k < e; ++k) r = r * *this;
  return r;
}

int Character::order() const {
  Character p = *this;
  int m = 1;
  while (!p.is_trivial()) {
    p = p * *this;
    ++m;
  }
  return m;
}

std::vector<Perm4> a_generators(const Subgroup& k) {
  for (const auto& name : s4_rep_names())
    if (s4_rep(name) == k) return s4_rep_generators(name);
  std::vector<Perm4> out;
  for (const auto& g : k.generators()) out.push_back(g.h);
  return out;
}

namespace {

linalg::Rows operator_rows(const Perm4& h, const Scalar& lambda) {
  linalg::Rows rows(9, linalg::Vec(9));
  for (int c = 0; c < 9; ++c) {
    Mat img = act_mat(h, Mat::unit(c / 3 + 1, c % 3 + 1));
    for (int r = 0; r < 9; ++r) rows[r][c] = img[r];
  }
  for (int r = 0; r < 9; ++r) rows[r][r] -= lambda;
  return rows;
}

// All homomorphisms K -> C*, as value tuples on gens. A tuple is a
// homomorphism iff propagating it along the Cayley graph is consistent.
std::vector<Character> all_characters(const std::vector<Perm4>& gens) {
  std::vector<std::vector<Scalar>> candidates{{}};
  for (const auto& g : gens) {
    const int n = g.order();
    std::vector<std::vector<Scalar>> next;
    for (const auto& c : candidates)
      for (int j = 0; j < n; ++j) {
        auto v = c;
        v.push_back(Scalar::root_of_unity(12 / n * j));
        next.push_back(std::move(v));
      }
    candidates = std::move(next);
  }
  std::vector<Character> out;
  for (const auto& vals : candidates) {
    std::map<Perm4, Scalar> value{{Perm4(), Scalar(1)}};
    std::vector<Perm4> queue{Perm4()};
    bool ok = true;
    for (std::size_t q = 0; q < queue.size() && ok; ++q)
      for (std::size_t k = 0; k < gens.size() && ok; ++k) {
        Perm4 next = gens[k] * queue[q];
        Scalar v = vals[k] * value[queue[q]];
        auto [it, inserted] = value.try_emplace(next, v);
        if (inserted)
          queue.push_back(next);
        else
          ok = it->second == v;
      }
    if (ok) out.push_back({gens, vals});
  }
  return out;
}

std::vector<Mat> rows_to_mats(const linalg::Rows& rows) {
  std::vector<Mat> out;
  for (const auto& r : rows) out.push_back(Mat::from_vec(r));
  return out;
}

bool char_less(const Character& a, const Character& b) {
  if (a.is_trivial() != b.is_trivial()) return a.is_trivial();
  return a.values < b.values;
}

}  // namespace

std::vector<SemiSpace> semiinvariant_spaces(const Subgroup& k) {
  for (const auto& g : k.elements())
    if (!g.b.is_identity()) throw std::invalid_argument("semiinvariants: K must lie in A x 1");
  const auto gens = a_generators(k);
  std::vector<SemiSpace> out;
  for (const auto& chi : all_characters(gens)) {
    linalg::Rows system;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      auto rows = operator_rows(gens[g], chi.values[g]);
      system.insert(system.end(), rows.begin(), rows.end());
    }
    auto ker = linalg::kernel(system, 9);
    if (ker.empty()) continue;
    out.push_back({chi, span_basis(rows_to_mats(ker))});
  }
  std::sort(out.begin(), out.end(),
            [](const SemiSpace& a, const SemiSpace& b) { return char_less(a.chi, b.chi); });
  return out;
}

std::optional<Character> character_of(const Mat& x, const std::vector<Perm4>& gens) {
  const int lead = x.leading_index();
  if (lead < 0) throw ZeroFactor("character_of: zero matrix");
  Character chi{gens, {}};
  for (const auto& g : gens) {
    Mat img = act_mat(g, x);
    Scalar ratio = img[lead] / x[lead];
    if (!(img == ratio * x)) return std::nullopt;
    chi.values.push_back(ratio);
  }
  return chi;
}

std::vector<Mat> span_basis(const std::vector<Mat>& ms) {
  linalg::Rows rows;
  for (const auto& m : ms) rows.push_back(m.to_vec());
  return rows_to_mats(linalg::rref(std::move(rows), 9).rows);
}

bool same_span(const std::vector<Mat>& a, const std::vector<Mat>& b) {
  return span_basis(a) == span_basis(b);
}

bool in_span(const std::vector<Mat>& basis, const Mat& m) {
  auto extended = basis;
  extended.push_back(m);
  return span_basis(extended).size() == span_basis(basis).size();
}

Mat R_transform(const Perm4& h, const Mat& m) { return transpose(act_mat(h, m)); }

const std::vector<std::string>& k_names() {
  static const std::vector<std::string> names = {"Z2(1)", "Z2(2)", "Z3", "V(1)", "V(2)",
                                                 "Z4",    "S3",    "D8", "A4",   "S4"};
  return names;
}

int k_index(std::string_view name) {
  const auto& n = k_names();
  auto it = std::find(n.begin(), n.end(), name);
  if (it == n.end()) throw std::invalid_argument("unknown subgroup of S4: " + std::string(name));
  return static_cast<int>(it - n.begin()) + 1;
}

namespace {

Mat e(int i, int j) { return Mat::unit(i, j); }

const std::vector<std::vector<ListedSpace>>& listing() {
  static const std::vector<std::vector<ListedSpace>> data = [] {
    using named::delta;
    using named::eta;
    using named::eta_bar;
    using named::kappa;
    using named::tau;
    const Scalar z = Scalar::zeta(), zb = Scalar::zeta_bar(), i = Scalar::i();
    std::vector<std::vector<std::vector<Mat>>> raw = {
        // K1
        {{e(1, 1) + e(2, 2), e(1, 2) + e(2, 1), e(1, 3) + e(2, 3), e(3, 1) + e(3, 2), e(3, 3)},
         {e(1, 1) - e(2, 2), e(1, 2) - e(2, 1), e(1, 3) - e(2, 3), e(3, 1) - e(3, 2)}},
        // K2, first space as printed
        {{e(1, 1), e(2, 2), e(2, 1), e(2, 2), e(3, 3)},
         {e(1, 3), e(2, 3), e(3, 1), e(3, 2)}},
        // K3
        {{delta(), e(1, 2) + e(2, 3) + e(3, 1), e(1, 3) + e(2, 1) + e(3, 2)},
         {eta(), e(1, 2) + z * e(2, 3) + zb * e(3, 1), e(1, 3) + z * e(2, 1) + zb * e(3, 2)},
         {eta_bar(), e(1, 2) + zb * e(2, 3) + z * e(3, 1), e(1, 3) + zb * e(2, 1) + z * e(3, 2)}},
        // K4
        {{e(1, 1) + e(2, 2), e(1, 2) + e(2, 1), e(3, 3)},
         {e(1, 1) - e(2, 2), e(1, 2) - e(2, 1)},
         {e(1, 3) + e(2, 3), e(3, 1) + e(3, 2)},
         {e(1, 3) - e(2, 3), e(3, 1) - e(3, 2)}},
        // K5
        {{e(1, 1), e(2, 2), e(3, 3)}, {e(1, 2), e(2, 1)}, {e(1, 3), e(3, 1)}, {e(2, 3), e(3, 2)}},
        // K6
        {{e(1, 1) + e(2, 2), e(1, 2) - e(2, 1), e(3, 3)},
         {e(1, 2) + e(2, 1), e(1, 1) - e(2, 2)},
         {e(1, 3) + i * e(2, 3), e(3, 1) + i * e(3, 2)},
         {e(1, 3) - i * e(2, 3), e(3, 1) - i * e(3, 2)}},
        // K7
        {{delta(), kappa()}, {tau()}},
        // K8
        {{e(1, 1) + e(2, 2), e(3, 3)},
         {e(1, 1) - e(2, 2)},
         {e(1, 2) + e(2, 1)},
         {e(1, 2) - e(2, 1)}},
        // K9
        {{delta()}, {eta()}, {eta_bar()}},
        // K10
        {{delta()}},
    };
    std::vector<std::vector<ListedSpace>> out;
    for (std::size_t a = 0; a < raw.size(); ++a) {
      std::vector<ListedSpace> row;
      for (std::size_t b = 0; b < raw[a].size(); ++b)
        row.push_back({static_cast<int>(a + 1), static_cast<int>(b + 1), raw[a][b], raw[a][b], {}});
      out.push_back(std::move(row));
    }
    // The printed L2,1 repeats e22 and lists e21 without e12, which makes it
    // 4-dimensional and not closed under transpose.
    out[1][0].amended = {e(1, 1), e(1, 2), e(2, 1), e(2, 2), e(3, 3)};
    out[1][0].note =
        "L2,1 printed as <e11, e22, e21, e22, e33> (dimension 4, not transpose-closed); "
        "computed space is <e11, e12, e21, e22, e33>";
    return out;
  }();
  return data;
}

}  // namespace

const std::vector<ListedSpace>& listed_spaces(int i) {
  if (i < 1 || i > 10) throw std::out_of_range("K index must be in 1..10");
  return listing()[i - 1];
}

const std::vector<CharRelation>& listed_relations(int i) {
  static const std::vector<std::vector<CharRelation>> data = [] {
    auto z2 = std::vector<CharRelation>{{{{2, 2}}, 0, "chi2^2 = 1"}};
    auto z3 = std::vector<CharRelation>{{{{2, 2}}, 3, "chi2^2 = chi3"},
                                        {{{2, 3}}, 0, "chi2^3 = 1"}};
    auto v4 = std::vector<CharRelation>{{{{2, 2}}, 0, "chi2^2 = 1"},
                                        {{{3, 2}}, 0, "chi3^2 = 1"},
                                        {{{4, 2}}, 0, "chi4^2 = 1"},
                                        {{{2, 1}, {3, 1}, {4, 1}}, 0, "chi2 chi3 chi4 = 1"}};
    auto z4 = std::vector<CharRelation>{{{{3, 2}}, 2, "chi3^2 = chi2"},
                                        {{{3, 3}}, 4, "chi3^3 = chi4"},
                                        {{{3, 4}}, 0, "chi3^4 = 1"}};
    std::vector<std::vector<CharRelation>> d = {z2, z2, z3, v4, v4, z4, z2, v4, z3, {}};
    for (auto& rels : d) rels.insert(rels.begin(), CharRelation{{{1, 1}}, 0, "chi1 = 1"});
    return d;
  }();
  if (i < 1 || i > 10) throw std::out_of_range("K index must be in 1..10");
  return data[i - 1];
}

bool SemiinvariantReport::passed() const {
  return listing_agrees && transpose_stable &&
         std::all_of(relations.begin(), relations.end(), [](const auto& r) { return r.second; });
}

SemiinvariantReport character_relations(int i) {
  SemiinvariantReport rep;
  rep.i = i;
  rep.name = k_names().at(i - 1);
  const Subgroup k = s4_rep(rep.name);
  rep.spaces = semiinvariant_spaces(k);
  const auto& listed = listed_spaces(i);

  std::map<int, Character> chi_of;
  std::vector<bool> used(listed.size(), false);
  for (const auto& s : rep.spaces) {
    SpaceMatch m;
    for (const auto& l : listed) {
      bool amended = same_span(s.basis, l.amended);
      if (amended && !used[l.j - 1]) {
        m.j = l.j;
        m.matches_amended = true;
        m.matches_printed = same_span(s.basis, l.printed);
        used[l.j - 1] = true;
        chi_of.emplace(l.j, s.chi);
        if (!m.matches_printed) rep.notes.push_back(l.note);
        break;
      }
    }
    rep.matches.push_back(m);
  }
  rep.listing_agrees = rep.spaces.size() == listed.size() &&
                       std::all_of(used.begin(), used.end(), [](bool b) { return b; });

  const auto gens = a_generators(k);
  const auto chars = all_characters(gens);
  int exponent = 1;
  for (const auto& c : chars) exponent = std::max(exponent, c.order());
  switch (chars.size()) {
    case 1: rep.character_group = "1"; break;
    case 2: rep.character_group = "Z2"; break;
    case 3: rep.character_group = "Z3"; break;
    case 4: rep.character_group = exponent == 4 ? "Z4" : "Z2xZ2"; break;
    default: rep.character_group = "order " + std::to_string(chars.size());
  }

  for (const auto& rel : listed_relations(i)) {
    bool ok = true;
    Character prod{gens, std::vector<Scalar>(gens.size(), Scalar(1))};
    for (const auto& [j, ex] : rel.lhs) {
      auto it = chi_of.find(j);
      if (it == chi_of.end()) {
        ok = false;
        break;
      }
      prod = prod * it->second.pow(ex);
    }
    if (ok) {
      if (rel.rhs == 0) {
        ok = prod.is_trivial();
      } else {
        auto it = chi_of.find(rel.rhs);
        ok = it != chi_of.end() && prod == it->second;
      }
    }
    rep.relations.push_back({rel.text, ok});
  }

  std::vector<Mat> all;
  for (const auto& s : rep.spaces) all.insert(all.end(), s.basis.begin(), s.basis.end());
  rep.direct_sum_is_whole = span_basis(all).size() == 9;
  rep.transpose_stable = std::all_of(rep.spaces.begin(), rep.spaces.end(), [](const SemiSpace& s) {
    return std::all_of(s.basis.begin(), s.basis.end(),
                       [&](const Mat& m) { return in_span(s.basis, transpose(m)); });
  });
  return rep;
}

}  // namespace tsym
