#include <doctest.h>

#include <set>

#include "helpers.hpp"

using namespace tsym;

namespace {

bool is_closed(const Subgroup& h) {
  const auto& t = GroupTable::get();
  if (!h.contains(GroupTable::identity())) return false;
  for (int a : h.indices()) {
    if (!h.contains(t.inv(a))) return false;
    for (int b : h.indices())
      if (!h.contains(t.mul(a, b))) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("subgroups") {

TEST_CASE("the whole group is the only subgroup of order 144") {
  const auto subs = enumerate_subgroups(144);
  REQUIRE(subs.size() == 1);
  CHECK(subs[0] == Subgroup::whole_group());
  CHECK_THROWS_AS(enumerate_subgroups(0), std::invalid_argument);
}

TEST_CASE("enumeration is complete and consists of subgroups") {
  // Completeness: the list contains the trivial group and is closed under
  // joining with any single element. Every subgroup is reached from the
  // trivial group by adding its generators one at a time, so nothing is
  // missing.
  const auto all = enumerate_subgroups(1);
  std::set<ElemSet, bool (*)(const ElemSet&, const ElemSet&)> seen(
      [](const ElemSet& a, const ElemSet& b) { return a.to_string() < b.to_string(); });
  for (const auto& h : all) seen.insert(h.set());
  CHECK(seen.size() == all.size());
  CHECK(seen.count(Subgroup().set()) == 1);
  bool joins_ok = true, closed_ok = true;
  for (const auto& h : all) {
    closed_ok = closed_ok && is_closed(h);
    for (int g = 0; g < GroupTable::kOrder; ++g) {
      if (h.contains(g)) continue;
      std::vector<int> gens = h.indices();
      gens.push_back(g);
      joins_ok = joins_ok && seen.count(closure(gens)) == 1;
    }
  }
  CHECK(closed_ok);
  CHECK(joins_ok);
  // Lagrange.
  for (const auto& h : all) CHECK(GroupTable::kOrder % h.order() == 0);
}

TEST_CASE("43 classes of order at least 8, one per standard representative") {
  const auto subs = enumerate_subgroups(8);
  const auto classes = conjugacy_classes(subs);
  CHECK(classes.size() == 43);
  CHECK(standard_reps().size() == 43);
  std::set<std::string> keys;
  for (const auto& s : standard_reps()) {
    CHECK(is_closed(s.group));
    keys.insert(Subgroup(conjugacy_key(s.group)).key());
  }
  CHECK(keys.size() == 43);
  std::set<std::string> class_keys;
  for (const auto& c : classes) class_keys.insert(Subgroup(conjugacy_key(c[0])).key());
  CHECK(keys == class_keys);
}

TEST_CASE("conjugacy classes are orbits under conjugation") {
  const auto classes = conjugacy_classes(enumerate_subgroups(8));
  std::size_t total = 0;
  for (const auto& c : classes) {
    total += c.size();
    const Subgroup& h = c[0];
    // Class size is the index of the normalizer.
    CHECK(c.size() == static_cast<std::size_t>(normalizer(h).index()));
    for (const auto& k : c) CHECK(are_conjugate(h, k));
    std::set<std::string> conj;
    for (int g = 0; g < GroupTable::kOrder; ++g) conj.insert(conjugate(h, g).key());
    CHECK(conj.size() == c.size());
  }
  CHECK(total == enumerate_subgroups(8).size());
}

TEST_CASE("standard representatives") {
  auto gens = [](const std::string& c, const std::string& d, std::vector<int> rs) {
    std::vector<GElem> g;
    for (const auto& e : s4_rep(c).generators()) g.push_back(e);
    for (const auto& e : s3_rep(d).generators()) g.push_back(e);
    for (int k : rs) g.push_back(standard_g(k));
    return Subgroup::generated_by(g);
  };
  const auto& z4s3 = standard_rep("Z4oS3");
  CHECK(z4s3.group.order() == 12);
  CHECK(z4s3.group == gens("Z2(2)", "Z3", {4}));
  CHECK(s4_rep("Z2(2)").contains(GElem::parse("(12)(34)|e")));
  const auto& s4s3 = standard_rep("S4o2S3");
  CHECK(s4s3.group.order() == 24);
  CHECK(s4s3.group == gens("V(2)", "1", {2, 5}));
  for (const auto& s : standard_reps()) {
    CHECK(intersect_a(s.group) == s4_rep(s.c_name));
    CHECK(intersect_b(s.group) == s3_rep(s.d_name));
    CHECK(project_a(s.group) == s4_rep(s.x_name));
    CHECK(project_b(s.group) == s3_rep(s.y_name));
    CHECK(s.group.order() >= 8);
  }
  CHECK_THROWS(standard_rep("nonsense"));
}

TEST_CASE("normalizers") {
  CHECK(normalizer(Subgroup::whole_group()) == Subgroup::whole_group());
  CHECK(normalizer(s4_rep("V(2)")) == Subgroup::whole_group());
  CHECK(normalizer(s4_rep("A4")) == Subgroup::whole_group());
  CHECK(normalizer(s4_rep("Z3")).order() == 36);
}

TEST_CASE("subdirect products") {
  const auto z4s3 = subdirect_products(s4_rep("Z4"), s3_rep("S3"));
  CHECK(z4s3.size() == 2);
  const auto d8s3 = subdirect_products(s4_rep("D8"), s3_rep("S3"));
  CHECK(d8s3.size() == 4);
  const auto trivial = subdirect_products(Subgroup(), Subgroup());
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].order() == 1);
  for (const auto& z : d8s3) {
    CHECK(project_a(z) == s4_rep("D8"));
    CHECK(project_b(z) == s3_rep("S3"));
    CHECK(is_closed(z));
  }
  int named = 0;
  for (const auto& s : standard_reps())
    if (s.x_name == "D8" && s.y_name == "S3" && s.c_name != "D8") ++named;
  CHECK(named == 3);
}

TEST_CASE("no subgroup has index between 19 and 23") {
  for (const auto& h : enumerate_subgroups(1)) {
    CHECK((h.index() < 19 || h.index() > 23));
  }
}

TEST_CASE("g1 to g5") {
  CHECK(standard_g(1) == GElem::parse("(12)(34)|(12)"));
  CHECK(standard_g(4) == GElem::parse("(1324)|(12)"));
  CHECK(standard_g(5) == GElem::parse("(123)|(123)"));
  CHECK_THROWS(standard_g(6));
}

}  // TEST_SUITE
