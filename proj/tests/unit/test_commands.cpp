#include <doctest.h>

#include "tsym/commands.hpp"

using namespace tsym;

TEST_SUITE("commands") {

TEST_CASE("verify-group") {
  const Report r = cmd_verify_group(0);
  CHECK(r.exit_code == 0);
  CHECK(r.result["invariance"] == 144);
  CHECK(r.result["homomorphism_pairs"] == 576);
  const Report bad = cmd_verify_group(0, true);
  CHECK(bad.exit_code == 1);
  CHECK(bad.result["passed"] == false);
}

TEST_CASE("reports are deterministic and carry a digest") {
  const std::string a = report_json(cmd_verify_group(3)).dump();
  const std::string b = report_json(cmd_verify_group(3)).dump();
  CHECK(a == b);
  const Json j = report_json(cmd_verify_group(3));
  CHECK(j["seed"] == 3);
  Json body = j;
  body.erase("digest");
  CHECK(j["digest"] == sha256_hex(body.dump()));
  CHECK(report_json(cmd_verify_group(4))["digest"] != j["digest"]);
  // Keys come out sorted.
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(std::is_sorted(keys.begin(), keys.end()));
}

TEST_CASE("sha256") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("enumerate-subgroups") {
  const Report r = cmd_enumerate_subgroups(8);
  CHECK(r.exit_code == 0);
  CHECK(r.result["class_count"] == 43);
  CHECK(r.result["standard_bijection"] == true);
}

TEST_CASE("verify-table with seed 1") {
  const Report r = cmd_verify_table(std::nullopt, 1);
  CHECK(r.exit_code == 0);
  CHECK(r.result["passed"] == 44);
  const Report one = cmd_verify_table(12, 1);
  CHECK(one.result["total"] == 1);
  CHECK_THROWS_AS(cmd_verify_table(45, 1), std::out_of_range);
}

TEST_CASE("semiinvariants") {
  CHECK(cmd_semiinvariants(std::nullopt).exit_code == 0);
  const Report r = cmd_semiinvariants(std::string("Z4"));
  CHECK(r.result["subgroups"].size() == 1);
  CHECK(r.result["subgroups"][0]["character_group"] == "Z4");
}

TEST_CASE("profiles") {
  const Report r = cmd_profiles(23, true);
  bool found = false;
  for (const auto& p : r.result["profiles"]) found = found || p == Json::parse("[1,4,18]");
  CHECK(found);
}

TEST_CASE("constraints") {
  Json system;
  const Report r = cmd_constraints(standard_orbit_rows(), 27, standard_orbit_values(), &system);
  CHECK(r.exit_code == 0);
  CHECK(r.result["residual_zero"] == true);
  CHECK(system["equations"].size() == 729);
  auto values = standard_orbit_values();
  values["b3"] = Scalar(1);
  CHECK(cmd_constraints(standard_orbit_rows(), 27, values, nullptr).exit_code == 1);
}

TEST_CASE("decomposition commands") {
  CHECK(cmd_verify_decomposition(standard_decomposition()).exit_code == 0);
  Decomposition d = standard_decomposition();
  d.pop_back();
  CHECK(cmd_verify_decomposition(d).exit_code == 1);
  const Report o = cmd_orbit_structure(standard_decomposition());
  CHECK(o.result["total"] == 27);
}

TEST_CASE("classify and instantiate") {
  const Report i = cmd_instantiate(44, {Scalar(2), Scalar(3)});
  const DecTensor w = dec_from_json(i.result["tensor"]);
  const Report c = cmd_classify(w, false);
  CHECK(c.result["row"] == 44);
  CHECK(c.result["g"] == "e|e");
}

}  // TEST_SUITE
