#include "tsym/predicates.hpp"

#include <algorithm>

namespace tsym {

bool proportional(const Mat& a, const Mat& b) {
  const int la = a.leading_index(), lb = b.leading_index();
  if (la < 0 || lb < 0) throw ZeroFactor("proportional: zero matrix");
  if (la != lb) return false;
  return a == (a[la] / b[lb]) * b;
}

namespace {

const char* kind_tag(CondKind k) {
  switch (k) {
    case CondKind::KxOne: return "Kx1";
    case CondKind::OnexZ3: return "1xZ3";
    case CondKind::OnexZ2: return "1xZ2";
    case CondKind::OnexS3: return "1xS3";
    case CondKind::KxZ3: return "KxZ3";
    case CondKind::KxZ2: return "KxZ2";
    case CondKind::KxS3: return "KxS3";
    case CondKind::Twist: return "twist";
    case CondKind::X: return "X";
    case CondKind::Y: return "Y";
  }
  return "?";
}

bool needs_k(CondKind k) {
  return k == CondKind::KxOne || k == CondKind::KxZ3 || k == CondKind::KxZ2 ||
         k == CondKind::KxS3;
}

std::optional<Character> semi(const Mat& x, const std::string& k) {
  return character_of(x, s4_rep_generators(k));
}

bool is_cube_shape(const DecTensor& w) {
  return proportional(w.y(), w.x()) && proportional(w.z(), w.x());
}

bool is_swap_shape(const DecTensor& w) {
  return proportional(w.y(), transpose(w.x())) && transpose(w.z()) == w.z();
}

}  // namespace

std::string Condition::str() const {
  std::string out = kind_tag(kind);
  if (needs_k(kind)) out += ":" + k;
  if (kind == CondKind::Twist) out += ":" + h.str();
  return out;
}

Condition Condition::parse(std::string_view text) {
  const auto colon = text.find(':');
  const std::string tag(text.substr(0, colon));
  const std::string arg = colon == std::string_view::npos ? "" : std::string(text.substr(colon + 1));
  for (auto kind : {CondKind::KxOne, CondKind::OnexZ3, CondKind::OnexZ2, CondKind::OnexS3,
                    CondKind::KxZ3, CondKind::KxZ2, CondKind::KxS3, CondKind::Twist, CondKind::X,
                    CondKind::Y}) {
    if (tag != kind_tag(kind)) continue;
    Condition c;
    c.kind = kind;
    if (needs_k(kind)) {
      try {
        k_index(arg);
      } catch (const std::invalid_argument&) {
        throw UnknownCondition("condition " + tag + " needs a subgroup of S4, got '" + arg + "'");
      }
      c.k = arg;
    } else if (kind == CondKind::Twist) {
      try {
        c.h = Perm4::parse(arg);
      } catch (const std::invalid_argument&) {
        throw UnknownCondition("condition twist needs a permutation, got '" + arg + "'");
      }
    } else if (!arg.empty()) {
      throw UnknownCondition("condition " + tag + " takes no argument");
    }
    return c;
  }
  throw UnknownCondition("unknown condition: " + std::string(text));
}

Subgroup condition_subgroup(const Condition& c) {
  std::vector<GElem> gens;
  auto add_k = [&] {
    for (const auto& p : s4_rep_generators(c.k)) gens.push_back({p, Perm3()});
  };
  const Perm3 c3 = Perm3::parse("(123)"), t2 = Perm3::parse("(12)");
  switch (c.kind) {
    case CondKind::KxOne: add_k(); break;
    case CondKind::OnexZ3: gens.push_back({Perm4(), c3}); break;
    case CondKind::OnexZ2: gens.push_back({Perm4(), t2}); break;
    case CondKind::OnexS3: gens = {{Perm4(), c3}, {Perm4(), t2}}; break;
    case CondKind::KxZ3: add_k(); gens.push_back({Perm4(), c3}); break;
    case CondKind::KxZ2: add_k(); gens.push_back({Perm4(), t2}); break;
    case CondKind::KxS3:
      add_k();
      gens.push_back({Perm4(), c3});
      gens.push_back({Perm4(), t2});
      break;
    case CondKind::Twist: gens.push_back({c.h, t2}); break;
    case CondKind::X: gens.push_back(standard_g(5)); break;
    case CondKind::Y:
      gens.push_back(standard_g(2));
      gens.push_back(standard_g(5));
      break;
  }
  return Subgroup::generated_by(gens, c.str());
}

bool structural_invariant(const DecTensor& w, const Condition& c) {
  const Mat &x = w.x(), &y = w.y(), &z = w.z();
  switch (c.kind) {
    case CondKind::KxOne: {
      auto a = semi(x, c.k), b = semi(y, c.k), d = semi(z, c.k);
      return a && b && d && (*a * *b * *d).is_trivial();
    }
    case CondKind::OnexZ3: return is_cube_shape(w);
    case CondKind::OnexZ2: return is_swap_shape(w);
    case CondKind::OnexS3: return is_cube_shape(w) && transpose(x) == x;
    case CondKind::KxZ3: {
      if (!is_cube_shape(w)) return false;
      auto mu = semi(x, c.k);
      return mu && mu->pow(3).is_trivial();
    }
    case CondKind::KxZ2: {
      if (!is_swap_shape(w)) return false;
      auto lambda = semi(x, c.k), mu = semi(z, c.k);
      return lambda && mu && (lambda->pow(2) * *mu).is_trivial();
    }
    case CondKind::KxS3: {
      if (!is_cube_shape(w) || !(transpose(x) == x)) return false;
      auto mu = semi(x, c.k);
      return mu && mu->pow(3).is_trivial();
    }
    case CondKind::Twist: {
      // (h,(12)) sends x (x) y (x) z to Ry (x) Rx (x) Rz. Invariance forces
      // y ~ Rx; writing w = x (x) Rx (x) z', the image is R^2 x (x) Rx (x) Rz',
      // so we need R^2 x = a x and R z = b z with a b = 1. For h of order 2
      // this reads R z = z, and for cubes it reads R x = x.
      const Mat rx = R_transform(c.h, x);
      if (!proportional(y, rx)) return false;
      const Mat r2x = R_transform(c.h, rx);
      const Mat rz = R_transform(c.h, z);
      if (!proportional(r2x, x) || !proportional(rz, z)) return false;
      const int lx = x.leading_index(), lz = z.leading_index();
      return (r2x[lx] / x[lx]) * (rz[lz] / z[lz]) == Scalar(1);
    }
    case CondKind::X:
    case CondKind::Y: {
      const Perm4 c3 = Perm4::parse("(123)"), c3i = Perm4::parse("(132)");
      if (!proportional(y, act_mat(c3, x)) || !proportional(z, act_mat(c3i, x))) return false;
      if (c.kind == CondKind::X) return true;
      return R_transform(Perm4::parse("(12)"), z) == z;
    }
  }
  return false;
}

std::vector<Condition> all_conditions() {
  std::vector<Condition> out;
  for (auto kind : {CondKind::OnexZ3, CondKind::OnexZ2, CondKind::OnexS3})
    out.push_back({kind, {}, {}});
  for (auto kind : {CondKind::KxOne, CondKind::KxZ3, CondKind::KxZ2, CondKind::KxS3})
    for (const auto& k : k_names()) out.push_back({kind, k, {}});
  std::array<int, 4> img{1, 2, 3, 4};
  do {
    Perm4 h = Perm4::from_images(img);
    int o = h.order();
    if (o == 1 || o == 2 || o == 4) out.push_back({CondKind::Twist, {}, h});
  } while (std::next_permutation(img.begin(), img.end()));
  out.push_back({CondKind::X, {}, {}});
  out.push_back({CondKind::Y, {}, {}});
  return out;
}

}  // namespace tsym
