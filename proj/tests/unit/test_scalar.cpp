#include <doctest.h>

#include "helpers.hpp"

using namespace tsym;

TEST_SUITE("scalar") {

TEST_CASE("addition examples") {
  const Scalar s(Rational(3, 7), 1, -2, Rational(1, 2));
  CHECK(Scalar() + s == s);
  CHECK(Scalar::zeta() + Scalar::zeta_bar() == Scalar(-1));
  CHECK(Scalar::i() + (-Scalar::i()) == Scalar());
}

TEST_CASE("multiplication examples") {
  CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
  CHECK(Scalar::zeta() * Scalar::zeta() * Scalar::zeta() == Scalar(1));
  CHECK(Scalar::omega() * Scalar::root_of_unity(3) == Scalar(-1, 0, 1, 0));
  CHECK(Scalar::zeta() * Scalar::zeta() == Scalar::zeta_bar());
}

TEST_CASE("inverse examples") {
  CHECK(Scalar(1).inv() == Scalar(1));
  CHECK(Scalar::zeta().inv() == Scalar::zeta_bar());
  CHECK(Scalar(2).inv() == Scalar(Rational(1, 2)));
  CHECK_THROWS_AS(Scalar().inv(), DivisionByZero);
  CHECK_THROWS_AS(Scalar(1) / Scalar(), DivisionByZero);
}

TEST_CASE("conjugation examples") {
  CHECK(Scalar::i().conj() == -Scalar::i());
  CHECK(Scalar::zeta().conj() == Scalar::zeta_bar());
  CHECK(Scalar(Rational(3, 5)).conj() == Scalar(Rational(3, 5)));
  CHECK(Scalar::omega().conj() == Scalar(0, 1, 0, -1));
}

TEST_CASE("named elements and their coordinates") {
  CHECK(Scalar::zeta() == Scalar::root_of_unity(4));
  CHECK(Scalar::i() == Scalar::root_of_unity(3));
  CHECK(Scalar::root_of_unity(12) == Scalar(1));
  CHECK(Scalar::root_of_unity(6) == Scalar(-1));
  CHECK(Scalar::root_of_unity(-1) == Scalar::omega().inv());
  CHECK(Scalar(1) + Scalar::zeta() + Scalar::zeta_bar() == Scalar());
  for (int k = 1; k < 12; ++k) CHECK_FALSE(Scalar::root_of_unity(k).is_one());
}

TEST_CASE("field axioms on random elements") {
  Rng rng(11);
  for (int n = 0; n < 200; ++n) {
    const Scalar a = test::random_full(rng), b = test::random_full(rng), c = test::random_full(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Scalar());
    if (!a.is_zero()) {
      CHECK(a * a.inv() == Scalar(1));
      CHECK((b / a) * a == b);
    }
  }
}

TEST_CASE("conjugation is an involutive field automorphism") {
  Rng rng(12);
  for (int n = 0; n < 200; ++n) {
    const Scalar a = test::random_full(rng), b = test::random_full(rng);
    CHECK((a + b).conj() == a.conj() + b.conj());
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK(a.conj().conj() == a);
    // a * conj(a) is a real element of the field; it is fixed by conj.
    CHECK((a * a.conj()).conj() == a * a.conj());
  }
  for (int k = 0; k < 12; ++k) CHECK(Scalar::root_of_unity(k).conj() == Scalar::root_of_unity(-k));
}

TEST_CASE("coordinates are always reduced") {
  // Equality is coordinatewise, so a product that equals 1 must read back as
  // exactly (1, 0, 0, 0).
  Rng rng(13);
  for (int n = 0; n < 100; ++n) {
    const Scalar a = test::random_full(rng);
    if (a.is_zero()) continue;
    const Scalar one = a * a.inv();
    CHECK(one.coeff(0) == 1);
    for (int k = 1; k < 4; ++k) CHECK(one.coeff(k) == 0);
  }
}

}  // TEST_SUITE
