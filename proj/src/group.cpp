#include "tsym/group.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tsym {

std::string GElem::str() const { return h.str() + "|" + b.str(); }

GElem GElem::parse(std::string_view text) {
  auto bar = text.find('|');
  if (bar == std::string_view::npos) return {Perm4::parse(text), Perm3()};
  return {Perm4::parse(text.substr(0, bar)), Perm3::parse(text.substr(bar + 1))};
}

Mat Monomial::to_mat() const {
  Mat m;
  for (int j = 0; j < 3; ++j) m.at(perm[j], j) = sign[j];
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int j = 0; j < 3; ++j) {
    r.perm[j] = a.perm[b.perm[j]];
    r.sign[j] = static_cast<std::int8_t>(a.sign[b.perm[j]] * b.sign[j]);
  }
  return r;
}

Monomial alpha(const Perm4& s) {
  if (s(3) != 3) throw std::invalid_argument("alpha: permutation must fix 4");
  Monomial m;
  const auto sg = static_cast<std::int8_t>(s.sign());
  for (int j = 0; j < 3; ++j) {
    m.perm[j] = static_cast<std::uint8_t>(s(j));
    m.sign[j] = sg;
  }
  return m;
}

Monomial beta(const Perm4& v) {
  Monomial m;
  if (v.is_identity()) return m;
  if (v == Perm4::parse("(12)(34)")) {
    m.sign = {-1, -1, 1};
  } else if (v == Perm4::parse("(13)(24)")) {
    m.sign = {-1, 1, -1};
  } else if (v == Perm4::parse("(14)(23)")) {
    m.sign = {1, -1, -1};
  } else {
    throw std::invalid_argument("beta: not in the Klein four-group");
  }
  return m;
}

namespace {

const std::array<Perm4, 4>& klein_four() {
  static const std::array<Perm4, 4> v = {Perm4(), Perm4::parse("(12)(34)"),
                                         Perm4::parse("(13)(24)"), Perm4::parse("(14)(23)")};
  return v;
}

}  // namespace

Monomial gamma_monomial(const Perm4& h) {
  const Perm4* v = nullptr;
  for (const auto& k : klein_four())
    if (k(3) == h(3)) v = &k;
  Perm4 s = *v * h;  // v is an involution, so h = v s
  return beta(*v) * alpha(s);
}

Mat gamma(const Perm4& h) { return gamma_monomial(h).to_mat(); }

namespace {

Mat act_monomial(const Monomial& a, const Mat& m) {
  Mat r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const Scalar& v = m.at(i, j);
      if (v.is_zero()) continue;
      r.at(a.perm[i], a.perm[j]) = (a.sign[i] * a.sign[j] > 0) ? v : -v;
    }
  return r;
}

DecTensor act_with(const Monomial& a, const Perm3& b, const DecTensor& w) {
  const bool odd = b.sign() < 0;
  std::array<Mat, 3> out;
  for (int k = 0; k < 3; ++k) {
    Mat f = act_monomial(a, w.factor(k));
    out[b(k)] = odd ? transpose(f) : std::move(f);
  }
  return {std::move(out[0]), std::move(out[1]), std::move(out[2])};
}

}  // namespace

Mat act_mat(const Perm4& h, const Mat& m) { return act_monomial(gamma_monomial(h), m); }

DecTensor act(const GElem& g, const DecTensor& w) {
  const auto& table = GroupTable::get();
  return act_with(table.monomial(table.index(g)), g.b, w);
}

FullTensor act_full(const GElem& g, const FullTensor& t) {
  const auto& table = GroupTable::get();
  const Monomial& a = table.monomial(table.index(g));
  const bool odd = g.b.sign() < 0;
  FullTensor out;
  for (const auto& [idx, v] : t.nonzeros()) {
    Index6 moved{};
    int sign = 1;
    for (int k = 0; k < 3; ++k) {
      int r = idx[2 * k], c = idx[2 * k + 1];
      sign *= a.sign[r] * a.sign[c];
      int nr = a.perm[r], nc = a.perm[c];
      if (odd) std::swap(nr, nc);
      int pos = g.b(k);
      moved[2 * pos] = static_cast<std::uint8_t>(nr);
      moved[2 * pos + 1] = static_cast<std::uint8_t>(nc);
    }
    out.add(moved, sign > 0 ? v : -v);
  }
  return out;
}

namespace {

template <int N>
std::vector<Perm<N>> all_perms() {
  std::array<int, N> img;
  for (int k = 0; k < N; ++k) img[k] = k + 1;
  std::vector<Perm<N>> out;
  do {
    out.push_back(Perm<N>::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

template <int N>
int rank_of(const Perm<N>& p) {
  // Lehmer code, which matches lexicographic order of image arrays.
  int r = 0;
  for (int i = 0; i < N; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < N; ++j)
      if (p(j) < p(i)) ++smaller;
    int fact = 1;
    for (int k = 2; k <= N - 1 - i; ++k) fact *= k;
    r += smaller * fact;
  }
  return r;
}

}  // namespace

int perm_rank(const Perm4& p) { return rank_of(p); }
int perm_rank(const Perm3& p) { return rank_of(p); }

GroupTable::GroupTable() {
  const auto p4 = all_perms<4>();
  const auto p3 = all_perms<3>();
  for (const auto& h : p4)
    for (const auto& b : p3) elems_.push_back({h, b});
  mul_.resize(kOrder * kOrder);
  inv_.resize(kOrder);
  mono_.resize(kOrder);
  for (int a = 0; a < kOrder; ++a) {
    mono_[a] = gamma_monomial(elems_[a].h);
    inv_[a] = static_cast<std::uint8_t>(index(elems_[a].inverse()));
    for (int b = 0; b < kOrder; ++b)
      mul_[a * kOrder + b] = static_cast<std::uint8_t>(index(elems_[a] * elems_[b]));
  }
}

const GroupTable& GroupTable::get() {
  static const GroupTable table;
  return table;
}

int GroupTable::index(const GElem& g) const { return perm_rank(g.h) * 6 + perm_rank(g.b); }

const std::vector<GElem>& group_elements() {
  static const std::vector<GElem> elems = [] {
    std::vector<GElem> v;
    const auto& t = GroupTable::get();
    for (int k = 0; k < GroupTable::kOrder; ++k) v.push_back(t.elem(k));
    return v;
  }();
  return elems;
}

GroupCheck check_group(const GammaFn& gamma_fn, const DecTensor& probe) {
  GroupCheck out;
  const auto p4 = all_perms<4>();
  const auto p3 = all_perms<3>();

  std::vector<Mat> image;
  image.reserve(p4.size());
  for (const auto& h : p4) image.push_back(gamma_fn(h));

  for (std::size_t a = 0; a < p4.size(); ++a)
    for (std::size_t b = 0; b < p4.size(); ++b) {
      auto ab = std::find(p4.begin(), p4.end(), p4[a] * p4[b]) - p4.begin();
      if (image[ab] == image[a] * image[b]) ++out.homomorphism_pairs_ok;
    }

  // Image must be exactly the 24 signed permutation matrices of determinant 1.
  std::set<Mat> expected;
  for (const auto& s : all_perms<3>())
    for (int signs = 0; signs < 8; ++signs) {
      Mat m;
      for (int j = 0; j < 3; ++j) m.at(s(j), j) = (signs >> j & 1) ? -1 : 1;
      if (m.det() == Scalar(1)) expected.insert(m);
    }
  std::set<Mat> got(image.begin(), image.end());
  out.image_is_det1_monomials = got == expected && got.size() == 24;

  out.orthogonal = std::all_of(image.begin(), image.end(), [](const Mat& m) {
    return transpose(m) * m == Mat::identity();
  });

  auto act_generic = [&](std::size_t h, const Perm3& b, const DecTensor& w) {
    const Mat& a = image[h];
    Mat ainv = a.inverse();
    const bool odd = b.sign() < 0;
    std::array<Mat, 3> out_f;
    for (int k = 0; k < 3; ++k) {
      Mat f = a * w.factor(k) * ainv;
      out_f[b(k)] = odd ? transpose(f) : f;
    }
    return DecTensor(out_f[0], out_f[1], out_f[2]);
  };
  const std::size_t id4 = 0;
  const Perm3 id3;
  for (std::size_t h = 0; h < p4.size(); ++h)
    for (const auto& b : p3) {
      DecTensor hb = act_generic(h, id3, act_generic(id4, b, probe));
      DecTensor bh = act_generic(id4, b, act_generic(h, id3, probe));
      if (hb == bh) ++out.commuting_pairs_ok;
    }

  // Invariance of T: linear extension of the generic action on the 27 terms.
  const FullTensor& t = tensor_T();
  for (std::size_t h = 0; h < p4.size(); ++h)
    for (const auto& b : p3) {
      FullTensor img;
      for (const auto& [idx, v] : t.nonzeros()) {
        DecTensor term(Mat::unit(idx[0] + 1, idx[1] + 1), Mat::unit(idx[2] + 1, idx[3] + 1),
                       Mat::unit(idx[4] + 1, idx[5] + 1));
        FullTensor e = expand(act_generic(h, b, term));
        e *= v;
        img += e;
      }
      if (img == t) ++out.invariance_ok;
    }
  return out;
}

}  // namespace tsym
