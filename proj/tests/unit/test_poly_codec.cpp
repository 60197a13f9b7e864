#include <doctest.h>

#include "helpers.hpp"
#include "tsym/codec.hpp"

using namespace tsym;

TEST_SUITE("poly") {

TEST_CASE("arithmetic") {
  const ParamPoly a = ParamPoly::variable(2, 0), b = ParamPoly::variable(2, 1);
  const ParamPoly one = ParamPoly::constant(2, Scalar(1));
  const ParamPoly p = (a + b) * (a - b);
  CHECK(p == a * a - b * b);
  CHECK(p.degree() == 2);
  CHECK((p - p).is_zero());
  CHECK((one * Scalar()).is_zero());
  CHECK(p.str({"a", "b"}) == "a^2 - b^2");
  CHECK(ParamPoly(2).degree() < 0);
}

TEST_CASE("evaluation is a ring homomorphism") {
  Rng rng(81);
  const std::size_t n = 3;
  auto random_poly = [&] {
    ParamPoly p(n);
    for (int t = 0; t < 4; ++t) {
      std::vector<int> e(n);
      for (auto& x : e) x = static_cast<int>(rng.uniform(0, 2));
      p.add_term(e, random_scalar(rng));
    }
    return p;
  };
  for (int k = 0; k < 50; ++k) {
    const ParamPoly p = random_poly(), q = random_poly();
    std::vector<Scalar> v{test::random_full(rng), test::random_full(rng), test::random_full(rng)};
    CHECK((p + q).eval(v) == p.eval(v) + q.eval(v));
    CHECK((p * q).eval(v) == p.eval(v) * q.eval(v));
    CHECK((p * Scalar::i()).eval(v) == p.eval(v) * Scalar::i());
  }
}

}  // TEST_SUITE

TEST_SUITE("codec") {

TEST_CASE("scalar encodings") {
  CHECK(to_json(Scalar::zeta()) == Json::parse(R"(["-1/1","0/1","1/1","0/1"])"));
  CHECK(to_json(Scalar::i()) == Json::parse(R"(["0/1","0/1","0/1","1/1"])"));
  CHECK(to_json(Scalar(Rational(-3, 6))) == Json::parse(R"(["-1/2","0/1","0/1","0/1"])"));
  CHECK(scalar_from_json(Json::parse(R"(["2/4", 0, "0", "-1"])")) ==
        Scalar(Rational(1, 2), 0, 0, -1));
  CHECK(scalar_from_json(Json::parse(R"("7/3")")) == Scalar(Rational(7, 3)));
  CHECK(scalar_from_json(Json(5)) == Scalar(5));
}

TEST_CASE("bad input") {
  CHECK_THROWS_AS(scalar_from_json(Json::parse(R"(["1/0","0","0","0"])")), CodecError);
  CHECK_THROWS_AS(scalar_from_json(Json::parse(R"(["x","0","0","0"])")), CodecError);
  CHECK_THROWS_AS(scalar_from_json(Json::parse(R"(["1","0","0"])")), CodecError);
  CHECK_THROWS_AS(scalar_from_json(Json::parse("1.5")), CodecError);
  CHECK_THROWS_AS(mat_from_json(Json::parse("[[1,0,0],[0,1,0]]")), CodecError);
  CHECK_THROWS_AS(dec_from_json(Json::parse(R"({"x":1})")), CodecError);
  const Json zero = Json::parse("[[0,0,0],[0,0,0],[0,0,0]]");
  CHECK_THROWS_AS(dec_from_json(Json{{"x", zero}, {"y", zero}, {"z", zero}}), CodecError);
  CHECK_THROWS_AS(full_from_json(Json::parse("[[1,1,1,1,1,4,1]]")), CodecError);
  CHECK_THROWS_AS(values_from_json(Json::parse("[1]")), CodecError);
  CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), std::ios_base::failure);
}

TEST_CASE("round trips") {
  Rng rng(82);
  for (int n = 0; n < 50; ++n) {
    const Scalar s = test::random_full(rng);
    CHECK(scalar_from_json(to_json(s)) == s);
    CHECK(scalar_from_json(Json::parse(to_json(s).dump())) == s);
    const DecTensor w = random_dec(rng);
    CHECK(dec_from_json(to_json(w)) == w);
    CHECK(full_from_json(to_json(expand(w))) == expand(w));
  }
  const Decomposition d = standard_decomposition();
  CHECK(decomposition_from_json(to_json(d)) == d);
}

TEST_CASE("full tensor entries use 1-based indices") {
  const Json j = to_json(expand({Mat::unit(1, 2) * Scalar(2), Mat::unit(2, 1), Mat::unit(1, 1)}));
  CHECK(j == Json::parse(R"([[1,2,2,1,1,1,["2/1","0/1","0/1","0/1"]]])"));
}

TEST_CASE("constraint export") {
  const ConstraintSystem sys = constraint_system({{44, {"a", "b"}}});
  const Json j = to_json(sys);
  CHECK(j["variables"] == Json::parse(R"(["a","b"])"));
  CHECK(j["equations"].size() == 729);
  CHECK(j["equations"][0]["index"] == Json::parse("[1,1,1,1,1,1]"));
  CHECK(j["equations"][728]["index"] == Json::parse("[3,3,3,3,3,3]"));
  // e12 (x) e23 (x) e31 sits at flat position ((0*3+1)*9 + 1*3+2)*9 + 2*3+0.
  const auto& e = j["equations"][(1 * 9 + 5) * 9 + 6];
  CHECK(e["index"] == Json::parse("[1,2,2,3,3,1]"));
  for (const auto& t : e["terms"]) CHECK(t["exponents"].size() == 2);
}

}  // TEST_SUITE
