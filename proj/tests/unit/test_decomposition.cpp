#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"

using namespace tsym;

TEST_SUITE("decomposition") {

TEST_CASE("the standard decomposition") {
  const Decomposition d = standard_decomposition();
  CHECK(d.size() == 27);
  CHECK(verify_decomposition(d));
  CHECK(is_g_invariant(d));
  CHECK(d[0] == DecTensor(Mat::unit(1, 1), Mat::unit(1, 1), Mat::unit(1, 1)));
  CHECK(d[5] == DecTensor(Mat::unit(1, 2), Mat::unit(2, 3), Mat::unit(3, 1)));
}

TEST_CASE("broken decompositions") {
  Decomposition removed = standard_decomposition();
  removed.pop_back();
  CHECK_FALSE(verify_decomposition(removed));
  Decomposition negated = standard_decomposition();
  negated[4] = DecTensor(-negated[4].x(), negated[4].y(), negated[4].z());
  CHECK_FALSE(verify_decomposition(negated));
  Decomposition doubled = standard_decomposition();
  doubled[4] = DecTensor(doubled[4].x() * Scalar(2), doubled[4].y(), doubled[4].z());
  CHECK_FALSE(is_g_invariant(doubled));
  CHECK_FALSE(verify_decomposition(doubled));
  CHECK_THROWS_AS(orbit_structure(doubled), NotInvariant);
}

TEST_CASE("a single fixed term") {
  const Decomposition d{cube(named::delta())};
  CHECK(is_g_invariant(d));
  CHECK_FALSE(verify_decomposition(d));
  const auto parts = orbit_structure(d);
  REQUIRE(parts.size() == 1);
  CHECK(parts[0].length == 1);
  CHECK(parts[0].multiplicity == 1);
}

TEST_CASE("orbit structure of the standard decomposition") {
  const auto parts = orbit_structure(standard_decomposition());
  int total = 0;
  std::vector<int> lengths;
  for (const auto& p : parts) {
    total += p.length * p.multiplicity;
    lengths.push_back(p.length);
    // Each length is confirmed by sweeping the group.
    CHECK(static_cast<int>(orbit(p.representative).size()) == p.length);
    CHECK(p.stabilizer_order * p.length == 144);
  }
  CHECK(total == 27);
  std::sort(lengths.begin(), lengths.end());
  CHECK(lengths == std::vector<int>{3, 6, 18});
  CHECK(orbit(DecTensor(Mat::unit(1, 1), Mat::unit(1, 1), Mat::unit(1, 1))).size() == 3);
}

TEST_CASE("the action preserves valid decompositions") {
  const Decomposition d = standard_decomposition();
  Rng rng(71);
  for (int n = 0; n < 10; ++n) {
    const GElem g = test::random_g(rng);
    Decomposition moved;
    for (const auto& t : d) moved.push_back(act(g, t));
    CHECK(verify_decomposition(moved));
    CHECK(is_g_invariant(moved));
  }
}

TEST_CASE("orbit structure reports long orbits as they are") {
  Rng rng(72);
  DecTensor w = random_dec(rng);
  while (stabilizer(w).order() != 1) w = random_dec(rng);
  const auto orb = orbit(w);
  const Decomposition d(orb.begin(), orb.end());
  const auto parts = orbit_structure(d);
  REQUIRE(parts.size() == 1);
  CHECK(parts[0].length == 144);
}

TEST_CASE("orbit lengths") {
  CHECK(orbit_lengths() == std::vector<int>{1, 2, 3, 4, 6, 8, 9, 12, 16, 18});
}

TEST_CASE("profiles") {
  const auto one = feasible_profiles(1);
  CHECK(one == std::vector<std::vector<int>>{{1}});
  CHECK_THROWS_AS(feasible_profiles(0), std::invalid_argument);
  const auto exact = feasible_profiles(23, true);
  CHECK(std::find(exact.begin(), exact.end(), std::vector<int>{1, 4, 18}) != exact.end());
  const auto upto = feasible_profiles(23);
  CHECK(upto.size() > exact.size());
  for (const auto& p : exact) {
    int s = 0;
    for (int v : p) s += v;
    CHECK(s == 23);
    CHECK(std::is_sorted(p.begin(), p.end()));
    CHECK(std::find(upto.begin(), upto.end(), p) != upto.end());
  }
  // Independent count of exact profiles by dynamic programming over parts.
  const auto& parts = orbit_lengths();
  for (int target : {5, 12, 23}) {
    std::vector<long> ways(target + 1, 0);
    ways[0] = 1;
    for (int part : parts)
      for (int s = part; s <= target; ++s) ways[s] += ways[s - part];
    CHECK(static_cast<long>(feasible_profiles(target, true).size()) == ways[target]);
  }
}

TEST_CASE("left transversals") {
  for (const auto& row : orbit_table()) {
    const Subgroup& h = row_subgroup(row.id);
    const auto t = left_transversal(h);
    CHECK(static_cast<int>(t.size()) == h.index());
    CHECK(t[0] == GroupTable::identity());
    ElemSet covered;
    const auto& tab = GroupTable::get();
    for (int g : t)
      for (int k : h.indices()) {
        CHECK_FALSE(covered.test(tab.mul(g, k)));
        covered.set(tab.mul(g, k));
      }
    CHECK(covered.all());
  }
}

TEST_CASE("constraint system of the standard decomposition") {
  const ConstraintSystem sys = constraint_system(standard_orbit_rows(), 27);
  CHECK(sys.equations.size() == 729);
  CHECK(sys.variables.size() == 9);
  CHECK(evaluate_constraints(sys, standard_orbit_values()).is_zero());
  for (const auto& [name, value] : standard_orbit_values()) {
    auto perturbed = standard_orbit_values();
    perturbed[name] = value + Scalar(1);
    CAPTURE(name);
    CHECK_FALSE(evaluate_constraints(sys, perturbed).is_zero());
  }
  CHECK_THROWS_AS(constraint_system(standard_orbit_rows()), CapExceeded);
  auto missing = standard_orbit_values();
  missing.erase("a1");
  CHECK_THROWS_AS(evaluate_constraints(sys, missing), MissingVariable);
}

TEST_CASE("empty and single-row systems") {
  const ConstraintSystem empty = constraint_system({});
  int minus_one = 0, zero = 0;
  for (const auto& e : empty.equations) {
    if (e.is_zero())
      ++zero;
    else if (e == ParamPoly::constant(0, Scalar(-1)))
      ++minus_one;
  }
  CHECK(minus_one == 27);
  CHECK(zero == 702);
  const ConstraintSystem seven = constraint_system({{7, {"a"}}});
  Rng rng(73);
  for (int n = 0; n < 5; ++n)
    CHECK_FALSE(evaluate_constraints(seven, {{"a", random_scalar(rng)}}).is_zero());
}

TEST_CASE("shared names share a variable") {
  const ConstraintSystem sys = constraint_system({{44, {"p", "q"}}, {5, {"q", "p"}}});
  CHECK(sys.variables == std::vector<std::string>{"p", "q"});
  const ConstraintSystem fresh = constraint_system({{44, {}}, {5, {}}});
  CHECK(fresh.variables.size() == 4);
}

TEST_CASE("symbolic and direct orbit sums agree") {
  Rng rng(74);
  const std::vector<std::vector<int>> choices{{7, 9}, {5, 26}, {44, 6}, {38}, {12, 3}, {39, 17}};
  for (const auto& ids : choices) {
    std::vector<RowSpec> rows;
    int total = 0;
    for (int id : ids) {
      rows.push_back({id, {}});
      total += orbit_row(id).length;
    }
    const ConstraintSystem sys = constraint_system(rows, total);
    for (int n = 0; n < 3; ++n) {
      std::map<std::string, Scalar> values;
      for (const auto& v : sys.variables) values[v] = random_scalar(rng);
      const Residual r = evaluate_constraints(sys, values);
      FullTensor expected = orbit_sum(rows, values);
      expected -= tensor_T();
      FullTensor got;
      for (const auto& [idx, v] : r.nonzero) got.add(idx, v);
      CHECK(got == expected);
    }
  }
}

}  // TEST_SUITE
