#include <doctest.h>

#include "helpers.hpp"

using namespace tsym;

namespace {

bool oracle(const DecTensor& w, const Condition& c) {
  return stabilizer(w).contains(condition_subgroup(c));
}

}  // namespace

TEST_SUITE("predicates") {

TEST_CASE("condition list and text round trip") {
  const auto conds = all_conditions();
  CHECK(conds.size() == 61);
  for (const auto& c : conds) {
    const Condition p = Condition::parse(c.str());
    CHECK(p.str() == c.str());
    CHECK(condition_subgroup(p) == condition_subgroup(c));
  }
  CHECK_THROWS_AS(Condition::parse("Kx1:Q8"), UnknownCondition);
  CHECK_THROWS_AS(Condition::parse("bogus"), UnknownCondition);
  CHECK_THROWS_AS(Condition::parse("twist:(12345)"), UnknownCondition);
}

TEST_CASE("condition subgroups") {
  CHECK(condition_subgroup(Condition::parse("1xS3")) == s3_rep("S3"));
  CHECK(condition_subgroup(Condition::parse("Kx1:D8")) == s4_rep("D8"));
  CHECK(condition_subgroup(Condition::parse("KxS3:A4")).order() == 72);
  CHECK(condition_subgroup(Condition::parse("twist:(12)(34)")).order() == 2);
  CHECK(condition_subgroup(Condition::parse("twist:(1324)")).order() == 4);
}

TEST_CASE("proportionality") {
  CHECK(proportional(Mat::unit(1, 2) * Scalar::i(), Mat::unit(1, 2)));
  CHECK_FALSE(proportional(Mat::unit(1, 2), Mat::unit(2, 1)));
  CHECK_FALSE(proportional(Mat::unit(1, 1) + Mat::unit(2, 2), Mat::unit(1, 1) - Mat::unit(2, 2)));
  CHECK_THROWS_AS(proportional(Mat(), Mat::unit(1, 1)), ZeroFactor);
}

TEST_CASE("shape examples") {
  const DecTensor d = cube(named::delta());
  for (const auto& c : all_conditions()) CHECK(structural_invariant(d, c));
  const DecTensor e{Mat::unit(1, 1), Mat::unit(2, 2), Mat::unit(3, 3)};
  CHECK_FALSE(structural_invariant(e, Condition::parse("1xZ3")));
  const DecTensor eta3 = cube(named::eta());
  CHECK(structural_invariant(eta3, Condition::parse("1xS3")));
  CHECK(structural_invariant(eta3, Condition::parse("KxS3:A4")));
  CHECK_FALSE(structural_invariant(eta3, Condition::parse("Kx1:S4")));
}

TEST_CASE("structural decisions agree with the stabilizer on random tensors") {
  Rng rng(51);
  const auto conds = all_conditions();
  int positives = 0;
  for (int n = 0; n < 40; ++n) {
    const DecTensor w = random_dec(rng);
    const Subgroup st = stabilizer(w);
    for (const auto& c : conds)
      CHECK(structural_invariant(w, c) == st.contains(condition_subgroup(c)));
  }
  for (const auto& c : conds) {
    for (int n = 0; n < 3; ++n) {
      const DecTensor w = sample_for_condition(c, rng);
      const Subgroup st = stabilizer(w);
      const bool s = structural_invariant(w, c);
      CAPTURE(c.str());
      CHECK(s == st.contains(condition_subgroup(c)));
      positives += s;
      // Also against every other condition.
      for (const auto& d : conds)
        CHECK(structural_invariant(w, d) == st.contains(condition_subgroup(d)));
    }
  }
  CHECK(positives > 100);
}

TEST_CASE("twists by elements of order 3 are decided too") {
  // Not in all_conditions(), but the criterion does not depend on the order of h.
  const Condition c = Condition::parse("twist:(123)");
  CHECK(condition_subgroup(c).order() == 6);
  Rng rng(53);
  for (int n = 0; n < 20; ++n) {
    const DecTensor w = n % 2 ? random_dec(rng) : sample_for_condition(c, rng);
    CHECK(structural_invariant(w, c) == oracle(w, c));
  }
  const Mat x = Mat::unit(1, 2) + Mat::unit(3, 3);
  const DecTensor fixed{R_transform(c.h, x), x, named::delta()};
  CHECK(oracle(DecTensor(x, R_transform(c.h, x), named::delta()), c) ==
        structural_invariant(DecTensor(x, R_transform(c.h, x), named::delta()), c));
  CHECK(structural_invariant(fixed, c) == oracle(fixed, c));
}

TEST_CASE("decisions are invariant under rescaling factors") {
  Rng rng(52);
  for (const auto& c : all_conditions()) {
    const DecTensor w = sample_for_condition(c, rng);
    const Scalar s = random_scalar(rng);
    const DecTensor v{w.x() * s, w.y(), w.z() * s.inv()};
    CHECK(structural_invariant(v, c) == structural_invariant(w, c));
  }
}

}  // TEST_SUITE
