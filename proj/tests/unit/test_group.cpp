#include <doctest.h>

#include <set>

#include "helpers.hpp"

using namespace tsym;

TEST_SUITE("group") {

TEST_CASE("gamma examples") {
  CHECK(gamma(Perm4::parse("(12)")) == -Mat::unit(1, 2) - Mat::unit(2, 1) - Mat::unit(3, 3));
  CHECK(gamma(Perm4::parse("(12)(34)")) == Mat::diag(-1, -1, 1));
  CHECK(gamma(Perm4()) == Mat::identity());
}

TEST_CASE("act_mat examples") {
  CHECK(act_mat(Perm4::parse("(123)"), Mat::unit(1, 2)) == Mat::unit(2, 3));
  const Mat m = Mat::unit(1, 3) * Scalar::zeta() + Mat::unit(2, 2);
  CHECK(act_mat(Perm4(), m) == m);
  const Mat d = Mat::diag(-1, -1, 1);
  CHECK(act_mat(Perm4::parse("(12)(34)"), Mat::unit(1, 3)) == d * Mat::unit(1, 3) * d);
  CHECK(act_mat(Perm4::parse("(12)(34)"), Mat::unit(1, 3)) == -Mat::unit(1, 3));
}

TEST_CASE("act examples") {
  Rng rng(31);
  const DecTensor w = random_dec(rng);
  const DecTensor r = act(GElem::parse("e|(123)"), w);
  CHECK(r == DecTensor(w.z(), w.x(), w.y()));
  const DecTensor s = act(GElem::parse("e|(12)"), w);
  CHECK(s == DecTensor(transpose(w.y()), transpose(w.x()), transpose(w.z())));
}

TEST_CASE("T is invariant") {
  for (const auto& g : group_elements()) CHECK(act_full(g, tensor_T()) == tensor_T());
  Rng rng(32);
  const FullTensor t = expand(random_dec(rng));
  CHECK(act_full(GElem{}, t) == t);
}

TEST_CASE("element list") {
  const auto& els = group_elements();
  CHECK(els.size() == 144);
  CHECK(els[0].is_identity());
  std::set<GElem> distinct(els.begin(), els.end());
  CHECK(distinct.size() == 144);
  for (const auto& g : els) CHECK(GElem::parse(g.str()) == g);
}

TEST_CASE("the image of gamma") {
  std::set<Mat> images;
  for (const auto& g : group_elements()) {
    if (!g.b.is_identity()) continue;
    const Mat m = gamma(g.h);
    CHECK(m.det() == Scalar(1));
    CHECK(m * transpose(m) == Mat::identity());
    int nonzero = 0;
    for (int k = 0; k < 9; ++k)
      if (!m[k].is_zero()) {
        ++nonzero;
        CHECK((m[k] == Scalar(1) || m[k] == Scalar(-1)));
      }
    CHECK(nonzero == 3);
    images.insert(m);
  }
  CHECK(images.size() == 24);
}

TEST_CASE("gamma is a homomorphism") {
  for (const auto& a : group_elements())
    for (const auto& b : group_elements())
      if (a.b.is_identity() && b.b.is_identity()) CHECK(gamma(a.h * b.h) == gamma(a.h) * gamma(b.h));
}

TEST_CASE("the action is a left action on tensors") {
  Rng rng(33);
  for (int n = 0; n < 100; ++n) {
    const GElem g = test::random_g(rng), h = test::random_g(rng);
    const DecTensor w = random_dec(rng);
    CHECK(expand(act(g, act(h, w))) == expand(act(g * h, w)));
    CHECK(act_full(g, expand(w)) == expand(act(g, w)));
  }
}

TEST_CASE("A and B commute") {
  Rng rng(34);
  const DecTensor w = random_dec(rng);
  for (const auto& g : group_elements()) {
    const GElem a{g.h, Perm3()}, b{Perm4(), g.b};
    CHECK(expand(act(a, act(b, w))) == expand(act(b, act(a, w))));
  }
}

TEST_CASE("group table agrees with element multiplication") {
  const auto& t = GroupTable::get();
  Rng rng(35);
  for (int n = 0; n < 500; ++n) {
    const int a = static_cast<int>(rng.uniform(0, 143)), b = static_cast<int>(rng.uniform(0, 143));
    CHECK(t.elem(t.mul(a, b)) == t.elem(a) * t.elem(b));
    CHECK(t.mul(a, t.inv(a)) == GroupTable::identity());
    CHECK(t.index(t.elem(a)) == a);
  }
}

TEST_CASE("check_group passes and detects a sign fault") {
  Rng rng(36);
  const DecTensor probe = random_dec(rng);
  const GroupCheck ok = check_group([](const Perm4& h) { return gamma(h); }, probe);
  CHECK(ok.passed());
  CHECK(ok.invariance_ok == 144);
  const GroupCheck bad = check_group(
      [](const Perm4& h) {
        Mat m = gamma(h);
        return h == Perm4::parse("(12)") ? Mat(-m) : m;
      },
      probe);
  CHECK_FALSE(bad.passed());
}

TEST_CASE("permutation parsing") {
  CHECK(Perm4::parse("(1 3 2 4)") == Perm4::parse("(1324)"));
  CHECK(Perm4::parse("(12)(13)") == Perm4::parse("(132)"));
  CHECK(Perm4::parse("(1324)").order() == 4);
  CHECK(Perm4::parse("(1324)").sign() == -1);
  CHECK_THROWS(Perm4::parse("(15)"));
  CHECK_THROWS(Perm4::parse("(11)"));
  CHECK_THROWS(Perm3::parse("12"));
}

}  // TEST_SUITE
