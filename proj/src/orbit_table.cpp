#include "tsym/orbit_table.hpp"

#include <set>
#include <stdexcept>

namespace tsym {

Mat LinForm::eval(const std::vector<Scalar>& params) const {
  if (terms.empty()) return constant;
  Mat m;
  for (const auto& [k, mat] : terms) m += params.at(k) * mat;
  return m;
}

const char* coupling_name(Coupling c) {
  switch (c) {
    case Coupling::Cube: return "cube";
    case Coupling::Repeat: return "repeat";
    case Coupling::Linked: return "linked";
    case Coupling::Independent: return "independent";
  }
  return "?";
}

Coupling OrbitRow::coupling() const {
  if (factors[0] == factors[1] && factors[1] == factors[2]) return Coupling::Cube;
  if (factors[0] == factors[1]) return Coupling::Repeat;
  std::array<std::set<int>, 3> used;
  for (int k = 0; k < 3; ++k)
    for (const auto& t : factors[k].terms) used[k].insert(t.first);
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      for (int p : used[a])
        if (used[b].count(p)) return Coupling::Linked;
  return Coupling::Independent;
}

namespace {

Mat e(int i, int j) { return Mat::unit(i, j); }

LinForm form(std::vector<std::pair<int, Mat>> terms) { return {std::move(terms), {}}; }
LinForm constant(Mat m) { return {{}, std::move(m)}; }

enum P { a = 0, b, c, d, f, g };

OrbitRow row(int id, std::string h, int len, std::vector<std::string> params, LinForm x,
             LinForm y, LinForm z, std::string formula, int scalar = -1) {
  OrbitRow r;
  r.id = id;
  r.stabilizer = std::move(h);
  r.length = len;
  r.params = std::move(params);
  r.factors = {std::move(x), std::move(y), std::move(z)};
  r.scalar_param = scalar;
  r.formula = std::move(formula);
  return r;
}

OrbitRow cube_row(int id, std::string h, int len, std::vector<std::string> params, LinForm x,
                  std::string formula) {
  return row(id, std::move(h), len, std::move(params), x, x, x, std::move(formula));
}

std::vector<OrbitRow> build() {
  using named::delta;
  using named::eta;
  using named::eta_bar;
  using named::kappa;
  using named::tau;
  const Scalar z = Scalar::zeta(), zb = Scalar::zeta_bar(), i = Scalar::i();
  const Mat p12 = e(1, 1) + e(2, 2), m12 = e(1, 1) - e(2, 2);
  const Mat s12 = e(1, 2) + e(2, 1), t12 = e(1, 2) - e(2, 1);
  const Mat e33 = e(3, 3);
  const std::vector<std::string> ab = {"a", "b"}, abc = {"a", "b", "c"},
                                 abcd = {"a", "b", "c", "d"}, abcdf = {"a", "b", "c", "d", "f"},
                                 abcdfg = {"a", "b", "c", "d", "f", "g"};

  std::vector<OrbitRow> t;
  t.push_back(cube_row(1, "Z2(1)xS3", 12, abcd,
                       form({{a, p12}, {b, s12}, {c, e33},
                             {d, e(1, 3) + e(2, 3) + e(3, 1) + e(3, 2)}}),
                       "(a(e11+e22)+b(e12+e21)+c e33+d(e13+e23+e31+e32))^3"));
  t.push_back(cube_row(2, "Z2(2)xS3", 12, abcd,
                       form({{a, e(1, 1)}, {b, e(2, 2)}, {c, e33}, {d, s12}}),
                       "(a e11+b e22+c e33+d(e12+e21))^3"));
  t.push_back(cube_row(3, "V(1)xS3", 6, abc, form({{a, p12}, {b, e33}, {c, s12}}),
                       "(a(e11+e22)+b e33+c(e12+e21))^3"));
  t.push_back(cube_row(4, "V(2)xS3", 6, abc, form({{a, e(1, 1)}, {b, e(2, 2)}, {c, e33}}),
                       "(a e11+b e22+c e33)^3"));
  t.push_back(cube_row(5, "D8xS3", 3, ab, form({{a, p12}, {b, e33}}), "(a(e11+e22)+b e33)^3"));
  t.push_back(row(6, "A4xS3", 2, {"a"}, constant(eta()), constant(eta()), constant(eta()),
                  "a eta^3", a));
  t.push_back(row(7, "S4xS3", 1, {"a"}, constant(delta()), constant(delta()), constant(delta()),
                  "a delta^3", a));
  t.push_back(cube_row(8, "Z3xZ3", 16, abc,
                       form({{a, eta()},
                             {b, e(1, 2) + z * e(2, 3) + zb * e(3, 1)},
                             {c, e(2, 1) + z * e(3, 2) + zb * e(1, 3)}}),
                       "(a eta+b(e12+z e23+zb e31)+c(e21+z e32+zb e13))^3"));
  t.push_back(cube_row(9, "S3xS3", 4, ab, form({{a, delta()}, {b, kappa()}}),
                       "(a delta+b kappa)^3"));
  t.push_back(cube_row(10, "Z3xS3", 8, ab,
                       form({{a, eta()},
                             {b, s12 + z * (e(2, 3) + e(3, 2)) + zb * (e(3, 1) + e(1, 3))}}),
                       "(a eta+b(e12+e21+z(e23+e32)+zb(e31+e13)))^3"));
  t.push_back(cube_row(11, "S3oS3", 8, abc,
                       form({{a, delta()},
                             {b, e(1, 2) + e(2, 3) + e(3, 1)},
                             {c, e(2, 1) + e(3, 2) + e(1, 3)}}),
                       "(a delta+b(e12+e23+e31)+c(e21+e32+e13))^3"));
  t.push_back(cube_row(12, "D8o3S3", 6, abc, form({{a, p12}, {b, t12}, {c, e33}}),
                       "(a(e11+e22)+b(e12-e21)+c e33)^3"));
  t.push_back(cube_row(13, "V(1)o1S3", 12, abcd,
                       form({{a, p12}, {b, s12}, {c, e33},
                             {d, e(1, 3) + e(2, 3) - e(3, 1) - e(3, 2)}}),
                       "(a(e11+e22)+b(e12+e21)+c e33+d(e13+e23-e31-e32))^3"));
  t.push_back(cube_row(14, "V(1)o2S3", 12, abcd,
                       form({{a, p12}, {b, e(1, 2)}, {c, e(2, 1)}, {d, e33}}),
                       "(a(e11+e22)+b e12+c e21+d e33)^3"));
  t.push_back(cube_row(15, "V(2)oS3", 12, abcd,
                       form({{a, e(1, 1)}, {b, e(2, 2)}, {c, t12}, {d, e33}}),
                       "(a e11+b e22+c(e12-e21)+d e33)^3"));
  t.push_back(row(16, "D8x1", 18, abcdfg, form({{a, p12}, {b, e33}}), form({{c, p12}, {d, e33}}),
                  form({{f, p12}, {g, e33}}),
                  "(a(e11+e22)+b e33) x (c(e11+e22)+d e33) x (f(e11+e22)+g e33)"));
  t.push_back(row(17, "D8x1", 18, {"a"}, constant(m12), constant(s12), constant(t12),
                  "a(e11-e22) x (e12+e21) x (e12-e21)", a));
  t.push_back(row(18, "D8xZ2", 9, ab, constant(m12), constant(m12), form({{a, p12}, {b, e33}}),
                  "(e11-e22)^2 x (a(e11+e22)+b e33)"));
  t.push_back(row(19, "D8xZ2", 9, ab, constant(s12), constant(s12), form({{a, p12}, {b, e33}}),
                  "(e12+e21)^2 x (a(e11+e22)+b e33)"));
  t.push_back(row(20, "D8xZ2", 9, ab, constant(t12), constant(t12), form({{a, p12}, {b, e33}}),
                  "(e12-e21)^2 x (a(e11+e22)+b e33)"));
  {
    auto x = form({{a, p12}, {b, e33}});
    t.push_back(row(21, "D8xZ2", 9, abcd, x, x, form({{c, p12}, {d, e33}}),
                    "(a(e11+e22)+b e33)^2 x (c(e11+e22)+d e33)"));
  }
  {
    auto x = form({{a, p12}, {b, s12}, {c, e33}});
    t.push_back(row(22, "V(1)xZ2", 18, abcdfg, x, x, form({{d, p12}, {f, s12}, {g, e33}}),
                    "(a(e11+e22)+b(e12+e21)+c e33)^2 x (d(e11+e22)+f(e12+e21)+g e33)"));
  }
  const auto cdf_sym = form({{c, p12}, {d, s12}, {f, e33}});
  t.push_back(row(23, "V(1)xZ2", 18, abcdf, form({{a, m12}, {b, t12}}),
                  form({{a, m12}, {b, -t12}}), cdf_sym,
                  "(a(e11-e22)+b(e12-e21)) x (a(e11-e22)-b(e12-e21)) x "
                  "(c(e11+e22)+d(e12+e21)+f e33)"));
  {
    const Mat u = e(1, 3) + e(2, 3), v = e(3, 1) + e(3, 2);
    t.push_back(row(24, "V(1)xZ2", 18, abcdf, form({{a, u}, {b, v}}), form({{b, u}, {a, v}}),
                    cdf_sym,
                    "(a(e13+e23)+b(e31+e32)) x (b(e13+e23)+a(e31+e32)) x "
                    "(c(e11+e22)+d(e12+e21)+f e33)"));
  }
  {
    auto x = form({{a, e(1, 1)}, {b, e(2, 2)}, {c, e33}});
    t.push_back(row(25, "V(2)xZ2", 18, abcdfg, x, x,
                    form({{d, e(1, 1)}, {f, e(2, 2)}, {g, e33}}),
                    "(a e11+b e22+c e33)^2 x (d e11+f e22+g e33)"));
  }
  t.push_back(row(26, "V(2)xZ2", 18, abcdf, form({{a, e(1, 2)}, {b, e(2, 1)}}),
                  form({{b, e(1, 2)}, {a, e(2, 1)}}),
                  form({{c, e(1, 1)}, {d, e(2, 2)}, {f, e33}}),
                  "(a e12+b e21) x (b e12+a e21) x (c e11+d e22+f e33)"));
  const auto df_diag = form({{d, p12}, {f, e33}});
  t.push_back(row(27, "Z4xZ2", 18, abcdf, form({{a, p12}, {b, t12}, {c, e33}}),
                  form({{a, p12}, {b, -t12}, {c, e33}}), df_diag,
                  "(a(e11+e22)+b(e12-e21)+c e33) x (a(e11+e22)-b(e12-e21)+c e33) x "
                  "(d(e11+e22)+f e33)"));
  const auto cd_diag = form({{c, p12}, {d, e33}});
  {
    auto x = form({{a, m12}, {b, s12}});
    t.push_back(row(28, "Z4xZ2", 18, abcd, x, x, cd_diag,
                    "(a(e11-e22)+b(e12+e21))^2 x (c(e11+e22)+d e33)"));
  }
  {
    const Mat u = e(1, 3) + i * e(2, 3), v = e(3, 1) + i * e(3, 2);
    t.push_back(row(29, "Z4xZ2", 18, abcd, form({{a, u}, {b, v}}), form({{b, u}, {a, v}}),
                    form({{c, m12}, {d, s12}}),
                    "(a(e13+i e23)+b(e31+i e32)) x (b(e13+i e23)+a(e31+i e32)) x "
                    "(c(e11-e22)+d(e12+e21))"));
  }
  t.push_back(row(30, "D8o1Z2", 18, abcdf, form({{a, p12}, {b, s12}, {c, e33}}),
                  form({{a, p12}, {b, -s12}, {c, e33}}), df_diag,
                  "(a(e11+e22)+b(e12+e21)+c e33) x (a(e11+e22)-b(e12+e21)+c e33) x "
                  "(d(e11+e22)+f e33)"));
  {
    auto x = form({{a, m12}, {b, t12}});
    t.push_back(row(31, "D8o1Z2", 18, abcd, x, x, cd_diag,
                    "(a(e11-e22)+b(e12-e21))^2 x (c(e11+e22)+d e33)"));
  }
  t.push_back(row(32, "D8o1Z2", 18, abcd, form({{a, e(1, 3) + e(2, 3)}, {b, e(3, 1) + e(3, 2)}}),
                  form({{b, e(1, 3) - e(2, 3)}, {a, e(3, 1) - e(3, 2)}}),
                  form({{c, m12}, {d, t12}}),
                  "(a(e13+e23)+b(e31+e32)) x (b(e13-e23)+a(e31-e32)) x "
                  "(c(e11-e22)+d(e12-e21))"));
  t.push_back(row(33, "D8o2Z2", 18, abcdf, form({{a, e(1, 1)}, {b, e(2, 2)}, {c, e33}}),
                  form({{b, e(1, 1)}, {a, e(2, 2)}, {c, e33}}), df_diag,
                  "(a e11+b e22+c e33) x (b e11+a e22+c e33) x (d(e11+e22)+f e33)"));
  {
    auto x = form({{a, e(1, 2)}, {b, e(2, 1)}});
    t.push_back(row(34, "D8o2Z2", 18, abcd, x, x, cd_diag,
                    "(a e12+b e21)^2 x (c(e11+e22)+d e33)"));
  }
  t.push_back(row(35, "D8o2Z2", 18, abcd, form({{a, e(1, 3)}, {b, e(3, 1)}}),
                  form({{b, e(2, 3)}, {a, e(3, 2)}}), form({{c, e(1, 2)}, {d, e(2, 1)}}),
                  "(a e13+b e31) x (b e23+a e32) x (c e12+d e21)"));
  {
    auto x = form({{a, p12}, {b, t12}, {c, e33}});
    t.push_back(row(36, "D8o3Z2", 18, abcdfg, x, x, form({{d, p12}, {f, t12}, {g, e33}}),
                    "(a(e11+e22)+b(e12-e21)+c e33)^2 x (d(e11+e22)+f(e12-e21)+g e33)"));
  }
  const auto cdf_rot = form({{c, p12}, {d, t12}, {f, e33}});
  t.push_back(row(37, "D8o3Z2", 18, abcdf, form({{a, m12}, {b, s12}}),
                  form({{a, m12}, {b, -s12}}), cdf_rot,
                  "(a(e11-e22)+b(e12+e21)) x (a(e11-e22)-b(e12+e21)) x "
                  "(c(e11+e22)+d(e12-e21)+f e33)"));
  t.push_back(row(38, "D8o3Z2", 18, abcdf,
                  form({{a, e(1, 3) + i * e(2, 3)}, {b, e(3, 1) + i * e(3, 2)}}),
                  form({{b, e(1, 3) - i * e(2, 3)}, {a, e(3, 1) - i * e(3, 2)}}), cdf_rot,
                  "(a(e13+i e23)+b(e31+i e32)) x (b(e13-i e23)+a(e31-i e32)) x "
                  "(c(e11+e22)+d(e12-e21)+f e33)"));
  t.push_back(row(39, "S4oZ2", 6, {}, constant(eta()), constant(eta_bar()), constant(delta()),
                  "eta x eta_bar x delta"));
  {
    auto x = form({{a, delta()}, {b, kappa()}});
    t.push_back(row(40, "S3xZ2", 12, abcd, x, x, form({{c, delta()}, {d, kappa()}}),
                    "(a delta+b kappa)^2 x (c delta+d kappa)"));
  }
  t.push_back(row(41, "S3xZ2", 12, ab, constant(tau()), constant(tau()),
                  form({{a, delta()}, {b, kappa()}}), "tau^2 x (a delta+b kappa)"));
  t.push_back(row(42, "A4oZ3", 12, abc, form({{a, e(1, 1)}, {b, e(2, 2)}, {c, e33}}),
                  form({{c, e(1, 1)}, {a, e(2, 2)}, {b, e33}}),
                  form({{b, e(1, 1)}, {c, e(2, 2)}, {a, e33}}),
                  "(a e11+b e22+c e33) x (c e11+a e22+b e33) x (b e11+c e22+a e33)"));
  t.push_back(row(43, "S4o2S3", 6, ab, form({{a, e(1, 1)}, {b, e(2, 2) + e33}}),
                  form({{a, e(2, 2)}, {b, e(1, 1) + e33}}),
                  form({{a, e33}, {b, e(1, 1) + e(2, 2)}}),
                  "(a e11+b(e22+e33)) x (a e22+b(e11+e33)) x (a e33+b(e11+e22))"));
  t.push_back(row(44, "S4o2S3", 6, ab, form({{a, e(2, 3)}, {b, e(3, 2)}}),
                  form({{b, e(1, 3)}, {a, e(3, 1)}}), form({{a, e(1, 2)}, {b, e(2, 1)}}),
                  "(a e23+b e32) x (b e13+a e31) x (a e12+b e21)"));
  return t;
}

}  // namespace

const std::vector<OrbitRow>& orbit_table() {
  static const std::vector<OrbitRow> table = build();
  return table;
}

const OrbitRow& orbit_row(int id) {
  if (id < 1 || id > static_cast<int>(orbit_table().size()))
    throw std::out_of_range("row id must be in 1..44");
  return orbit_table()[id - 1];
}

}  // namespace tsym
