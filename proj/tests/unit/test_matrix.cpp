#include <doctest.h>

#include "helpers.hpp"

using namespace tsym;

TEST_SUITE("matrix") {

TEST_CASE("transpose examples") {
  CHECK(transpose(Mat::unit(1, 2)) == Mat::unit(2, 1));
  CHECK(transpose(named::delta()) == named::delta());
  CHECK(transpose(named::tau()) == -named::tau());
}

TEST_CASE("conj_by examples") {
  const Mat m = Mat::unit(2, 3) * Scalar::i() + Mat::unit(1, 1);
  CHECK(conj_by(Mat::identity(), m) == m);
  CHECK(conj_by(gamma(Perm4::parse("(12)")), Mat::unit(1, 1)) == Mat::unit(2, 2));
  const Mat a = Mat::unit(1, 2) - Mat::unit(2, 1) + Mat::unit(3, 3);
  CHECK(conj_by(a, Mat::unit(1, 3)) == -Mat::unit(2, 3));
  CHECK_THROWS_AS(conj_by(Mat::unit(1, 1), m), SingularMatrix);
}

TEST_CASE("expand examples") {
  const FullTensor t = expand({Mat::unit(1, 1), Mat::unit(1, 1), Mat::unit(1, 1)});
  CHECK(t.nonzero_count() == 1);
  CHECK(t.coeff(idx1(1, 1, 1, 1, 1, 1)) == Scalar(1));
  const FullTensor u = expand({Mat::unit(1, 2) * Scalar(2), Mat::unit(2, 1), Mat::unit(1, 1)});
  CHECK(u.nonzero_count() == 1);
  CHECK(u.coeff(idx1(1, 2, 2, 1, 1, 1)) == Scalar(2));
}

TEST_CASE("the tensor T") {
  const FullTensor& t = tensor_T();
  CHECK(t.coeff(idx1(1, 2, 2, 3, 3, 1)) == Scalar(1));
  CHECK(t.coeff(idx1(1, 2, 2, 3, 3, 2)) == Scalar());
  CHECK(t.nonzero_count() == 27);
  FullTensor sum;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k) sum += expand({Mat::unit(i, j), Mat::unit(j, k), Mat::unit(k, i)});
  CHECK(sum == t);
}

TEST_CASE("dec_canon examples") {
  const DecTensor w{Mat::unit(1, 1) * Scalar(2), Mat::unit(1, 1) * Scalar(3), Mat::unit(1, 1)};
  CHECK(dec_canon(w) == DecTensor(Mat::unit(1, 1), Mat::unit(1, 1), Mat::unit(1, 1) * Scalar(6)));
  const DecTensor v{Mat::unit(1, 1) + Mat::unit(2, 3), Mat::unit(1, 2), Mat::unit(3, 3) * Scalar(5)};
  CHECK(dec_canon(v) == v);
  CHECK(dec_canon({-Mat::unit(1, 2), Mat::unit(2, 1), Mat::unit(1, 1)}) ==
        DecTensor(Mat::unit(1, 2), Mat::unit(2, 1), -Mat::unit(1, 1)));
}

TEST_CASE("zero factors are rejected") {
  CHECK_THROWS_AS(DecTensor(Mat(), Mat::unit(1, 1), Mat::unit(1, 1)), ZeroFactor);
  CHECK_THROWS_AS(DecTensor(Mat::unit(1, 1), Mat::unit(1, 1), Mat()), ZeroFactor);
}

TEST_CASE("matrix algebra on random matrices") {
  Rng rng(21);
  for (int n = 0; n < 60; ++n) {
    const Mat a = random_mat(rng), b = random_mat(rng), c = random_mat(rng);
    CHECK(transpose(transpose(a)) == a);
    CHECK(transpose(a * b) == transpose(b) * transpose(a));
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * b).det() == a.det() * b.det());
    CHECK(conj_entries(conj_entries(a)) == a);
    if (!a.det().is_zero()) {
      CHECK(a * a.inverse() == Mat::identity());
      CHECK(conj_by(a, b * c) == conj_by(a, b) * conj_by(a, c));
    } else {
      CHECK_THROWS_AS(a.inverse(), SingularMatrix);
    }
  }
}

TEST_CASE("dec_canon decides equality as tensors") {
  Rng rng(22);
  for (int n = 0; n < 80; ++n) {
    const DecTensor w = random_dec(rng);
    const DecTensor c = dec_canon(w);
    CHECK(dec_canon(c) == c);
    CHECK(expand(c) == expand(w));
    CHECK(c.x()[c.x().leading_index()] == Scalar(1));
    CHECK(c.y()[c.y().leading_index()] == Scalar(1));
    // Moving scalars between factors leaves the tensor and its canonical form unchanged.
    const Scalar s = random_scalar(rng), t = random_scalar(rng);
    const DecTensor moved{w.x() * s, w.y() * t, w.z() * (s * t).inv()};
    CHECK(dec_canon(moved) == c);
    // A genuine rescaling changes both.
    const Scalar u = Scalar(1) + random_scalar(rng) * Scalar(2);
    if (!(u - Scalar(1)).is_zero() && !u.is_zero()) {
      const DecTensor scaled{w.x(), w.y(), w.z() * u};
      CHECK(dec_canon(scaled) != c);
      CHECK(expand(scaled) != expand(w));
    }
  }
}

TEST_CASE("named matrices") {
  CHECK(named::delta() == Mat::identity());
  CHECK(named::eta() == Mat::diag(1, Scalar::zeta(), Scalar::zeta_bar()));
  CHECK(named::eta_bar() == conj_entries(named::eta()));
  CHECK(named::kappa() + named::delta() == named::all_ones());
}

}  // TEST_SUITE
