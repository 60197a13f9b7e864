#include "tsym/sampling.hpp"

#include <algorithm>
#include <numeric>

namespace tsym {

Scalar random_scalar(Rng& rng) {
  for (;;) {
    Scalar s(Rational(rng.uniform(-4, 4)), 0, 0, Rational(rng.coin(1, 4) ? rng.uniform(-4, 4) : 0));
    if (!s.is_zero()) return s;
  }
}

Mat random_mat(Rng& rng) {
  for (;;) {
    Mat m;
    for (int k = 0; k < 9; ++k)
      if (rng.coin()) m[k] = rng.uniform(-2, 2);
    if (!m.is_zero()) return m;
  }
}

std::optional<Mat> random_in_span(Rng& rng, const std::vector<Mat>& basis) {
  if (basis.empty()) return std::nullopt;
  for (;;) {
    Mat m;
    for (const auto& b : basis)
      if (basis.size() == 1 || rng.coin(3, 4)) m += random_scalar(rng) * b;
    if (!m.is_zero()) return m;
  }
}

DecTensor random_dec(Rng& rng) { return {random_mat(rng), random_mat(rng), random_mat(rng)}; }

std::vector<Mat> joint_eigenspace(const std::vector<std::function<Mat(const Mat&)>>& maps,
                                  const std::vector<Scalar>& lambdas) {
  linalg::Rows system;
  for (std::size_t k = 0; k < maps.size(); ++k) {
    linalg::Rows rows(9, linalg::Vec(9));
    for (int c = 0; c < 9; ++c) {
      Mat img = maps[k](Mat::unit(c / 3 + 1, c % 3 + 1));
      for (int r = 0; r < 9; ++r) rows[r][c] = img[r];
    }
    for (int r = 0; r < 9; ++r) rows[r][r] -= lambdas[k];
    system.insert(system.end(), rows.begin(), rows.end());
  }
  std::vector<Mat> out;
  for (const auto& v : linalg::kernel(system, 9)) out.push_back(Mat::from_vec(v));
  return out;
}

namespace {

using MapList = std::vector<std::function<Mat(const Mat&)>>;

struct Constraint {
  MapList maps;
  std::vector<Scalar> lambdas;
  void add(std::function<Mat(const Mat&)> f, Scalar l) {
    maps.push_back(std::move(f));
    lambdas.push_back(std::move(l));
  }
  void add_character(const Character& chi) {
    for (std::size_t k = 0; k < chi.gens.size(); ++k) {
      Perm4 h = chi.gens[k];
      add([h](const Mat& m) { return act_mat(h, m); }, chi.values[k]);
    }
  }
  void add_symmetric() {
    add([](const Mat& m) { return transpose(m); }, 1);
  }
  void add_r_fixed(const Perm4& h) {
    add([h](const Mat& m) { return R_transform(h, m); }, 1);
  }
  std::vector<Mat> space() const { return joint_eigenspace(maps, lambdas); }
};

std::vector<Character> characters_of(const std::string& k) {
  std::vector<Character> out;
  for (const auto& s : semiinvariant_spaces(s4_rep(k))) out.push_back(s.chi);
  return out;
}

Character inverse(const Character& c) {
  Character r = c;
  for (auto& v : r.values) v = v.inv();
  return r;
}

template <class T>
std::vector<T> shuffled(std::vector<T> v, Rng& rng) {
  for (std::size_t k = v.size(); k > 1; --k)
    std::swap(v[k - 1], v[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(k) - 1))]);
  return v;
}

// x (x) s y (x) s^-1 z: same tensor, different factor scaling.
DecTensor rescaled(const Mat& x, const Mat& y, const Mat& z, Rng& rng) {
  Scalar s = random_scalar(rng);
  return {x, s * y, s.inv() * z};
}

std::optional<DecTensor> sample_cube(const std::string& k, bool symmetric,
                                     const std::vector<Perm4>& r_fixed, Rng& rng) {
  for (const auto& chi : shuffled(characters_of(k), rng)) {
    if (!chi.pow(3).is_trivial()) continue;
    Constraint c;
    c.add_character(chi);
    if (symmetric) c.add_symmetric();
    for (const auto& h : r_fixed) c.add_r_fixed(h);
    if (auto x = random_in_span(rng, c.space())) return rescaled(*x, *x, *x, rng);
  }
  return std::nullopt;
}

std::optional<DecTensor> sample_swap(const std::string& k, Rng& rng) {
  for (const auto& lambda : shuffled(characters_of(k), rng)) {
    Constraint cx;
    cx.add_character(lambda);
    auto x = random_in_span(rng, cx.space());
    if (!x) continue;
    Constraint cz;
    cz.add_character(inverse(lambda.pow(2)));
    cz.add_symmetric();
    if (auto z = random_in_span(rng, cz.space())) return rescaled(*x, transpose(*x), *z, rng);
  }
  return std::nullopt;
}

std::optional<DecTensor> sample_k_one(const std::string& k, Rng& rng) {
  auto chars = characters_of(k);
  for (const auto& l1 : shuffled(chars, rng))
    for (const auto& l2 : shuffled(chars, rng)) {
      Constraint c1, c2, c3;
      c1.add_character(l1);
      c2.add_character(l2);
      c3.add_character(inverse(l1 * l2));
      auto x = random_in_span(rng, c1.space());
      auto y = random_in_span(rng, c2.space());
      auto z = random_in_span(rng, c3.space());
      if (x && y && z) return rescaled(*x, *y, *z, rng);
    }
  return std::nullopt;
}

// Invariance under C x 1 and (h,(12)), h of order 2: x (x) Rx (x) z with
// Rz = z and the characters multiplying to 1.
std::optional<DecTensor> sample_twisted(const std::string& k, const Perm4& h, Rng& rng) {
  const auto gens = s4_rep_generators(k);
  for (const auto& lambda : shuffled(characters_of(k), rng)) {
    Constraint cx;
    cx.add_character(lambda);
    auto x = random_in_span(rng, cx.space());
    if (!x) continue;
    Mat y = R_transform(h, *x);
    auto chi_y = character_of(y, gens);
    if (!chi_y) continue;
    Constraint cz;
    cz.add_character(inverse(lambda * *chi_y));
    cz.add_r_fixed(h);
    if (auto z = random_in_span(rng, cz.space())) return rescaled(*x, y, *z, rng);
  }
  return std::nullopt;
}

DecTensor rotation_form(const Mat& u, Rng& rng) {
  const Perm4 c3 = Perm4::parse("(123)"), c3i = Perm4::parse("(132)");
  return rescaled(act_mat(c3, u), act_mat(c3i, u), u, rng);
}

std::optional<DecTensor> sample_rotation(const std::string& k, bool y_kind, Rng& rng) {
  Condition kx1{CondKind::KxOne, k, {}};
  for (const auto& lambda : shuffled(characters_of(k), rng)) {
    Constraint c;
    c.add_character(lambda);
    if (y_kind) c.add_r_fixed(Perm4::parse("(12)"));
    auto u = random_in_span(rng, c.space());
    if (!u) continue;
    DecTensor w = rotation_form(*u, rng);
    if (structural_invariant(w, kx1)) return w;
  }
  return std::nullopt;
}

}  // namespace

std::optional<DecTensor> sample_invariant(const StandardRep& h, Rng& rng) {
  const std::string& c = h.c_name;
  bool has_g5 = false;
  std::vector<Perm4> twists;
  for (const auto& r : h.r_gens) {
    if (r.b.sign() > 0)
      has_g5 = true;
    else
      twists.push_back(r.h);
  }
  if (h.d_name == "Z3" || h.d_name == "S3") return sample_cube(c, h.d_name == "S3", twists, rng);
  if (h.d_name == "Z2") return sample_swap(c, rng);
  if (has_g5) return sample_rotation(c, !twists.empty(), rng);
  if (twists.empty()) return sample_k_one(c, rng);
  return sample_twisted(c, twists.front(), rng);
}

DecTensor sample_for_condition(const Condition& c, Rng& rng) {
  std::optional<DecTensor> w;
  switch (c.kind) {
    case CondKind::KxOne: w = sample_k_one(c.k, rng); break;
    case CondKind::OnexZ3: {
      Mat x = random_mat(rng);
      w = rescaled(x, x, x, rng);
      break;
    }
    case CondKind::OnexZ2: {
      Mat x = random_mat(rng), z = random_mat(rng);
      z = z + transpose(z);
      if (z.is_zero()) z = Mat::identity();
      w = rescaled(x, transpose(x), z, rng);
      break;
    }
    case CondKind::OnexS3: {
      Mat x = random_mat(rng);
      x = x + transpose(x);
      if (x.is_zero()) x = Mat::identity();
      w = rescaled(x, x, x, rng);
      break;
    }
    case CondKind::KxZ3: w = sample_cube(c.k, false, {}, rng); break;
    case CondKind::KxZ2: w = sample_swap(c.k, rng); break;
    case CondKind::KxS3: w = sample_cube(c.k, true, {}, rng); break;
    case CondKind::Twist: {
      // R^2 x = a x and R z = a^{-1} z with y = R x.
      const Perm4 h = c.h;
      auto r = [h](const Mat& m) { return R_transform(h, m); };
      auto r2 = [h](const Mat& m) { return R_transform(h, R_transform(h, m)); };
      for (long a : shuffled(std::vector<long>{1, -1}, rng)) {
        auto x = random_in_span(rng, joint_eigenspace({r2}, {Scalar(a)}));
        auto z = random_in_span(rng, joint_eigenspace({r}, {Scalar(a)}));
        if (x && z) {
          w = rescaled(*x, r(*x), *z, rng);
          break;
        }
      }
      break;
    }
    case CondKind::X: w = rotation_form(random_mat(rng), rng); break;
    case CondKind::Y: {
      Constraint cu;
      cu.add_r_fixed(Perm4::parse("(12)"));
      w = rotation_form(*random_in_span(rng, cu.space()), rng);
      break;
    }
  }
  return w ? *w : random_dec(rng);
}

}  // namespace tsym
