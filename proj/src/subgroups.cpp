#include "tsym/subgroups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace tsym {

ElemSet closure(std::span<const int> generators) {
  const auto& t = GroupTable::get();
  ElemSet s;
  s.set(GroupTable::identity());
  std::vector<int> list{GroupTable::identity()};
  for (std::size_t k = 0; k < list.size(); ++k)
    for (int g : generators) {
      int n = t.mul(list[k], g);
      if (!s.test(n)) {
        s.set(n);
        list.push_back(n);
      }
    }
  return s;
}

Subgroup::Subgroup() { set_.set(GroupTable::identity()); }

Subgroup::Subgroup(const ElemSet& elements, std::string label)
    : set_(elements), label_(std::move(label)) {}

Subgroup Subgroup::generated_by(std::span<const GElem> generators, std::string label) {
  const auto& t = GroupTable::get();
  std::vector<int> idx;
  for (const auto& g : generators) idx.push_back(t.index(g));
  return Subgroup(closure(idx), std::move(label));
}

Subgroup Subgroup::whole_group() {
  ElemSet s;
  s.set();
  return Subgroup(s, "S4xS3");
}

bool Subgroup::contains(const GElem& g) const { return set_.test(GroupTable::get().index(g)); }

std::vector<int> Subgroup::indices() const {
  std::vector<int> out;
  for (int k = 0; k < GroupTable::kOrder; ++k)
    if (set_.test(k)) out.push_back(k);
  return out;
}

std::vector<GElem> Subgroup::elements() const {
  std::vector<GElem> out;
  const auto& t = GroupTable::get();
  for (int k : indices()) out.push_back(t.elem(k));
  return out;
}

std::vector<GElem> Subgroup::generators() const {
  const auto& t = GroupTable::get();
  std::vector<int> gens;
  ElemSet span;
  span.set(GroupTable::identity());
  for (int k : indices()) {
    if (span.test(k)) continue;
    gens.push_back(k);
    span = closure(gens);
  }
  std::vector<GElem> out;
  for (int k : gens) out.push_back(t.elem(k));
  return out;
}

namespace {

std::array<std::uint64_t, 3> words(const ElemSet& s) {
  std::array<std::uint64_t, 3> w{};
  for (int k = 0; k < GroupTable::kOrder; ++k)
    if (s.test(k)) w[k / 64] |= std::uint64_t{1} << (k % 64);
  return w;
}

bool set_less(const ElemSet& a, const ElemSet& b) {
  auto wa = words(a), wb = words(b);
  return std::lexicographical_compare(wa.rbegin(), wa.rend(), wb.rbegin(), wb.rend());
}

}  // namespace

std::string Subgroup::key() const {
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (int k = GroupTable::kOrder - 4; k >= 0; k -= 4) {
    int nib = 0;
    for (int b = 3; b >= 0; --b) nib = nib * 2 + (set_.test(k + b) ? 1 : 0);
    out += hex[nib];
  }
  return out;
}

bool operator<(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return set_less(a.set_, b.set_);
}

Subgroup conjugate(const Subgroup& h, int g) {
  const auto& t = GroupTable::get();
  int gi = t.inv(g);
  ElemSet s;
  for (int k : h.indices()) s.set(t.mul(t.mul(g, k), gi));
  return Subgroup(s);
}

ElemSet conjugacy_key(const Subgroup& h) {
  ElemSet best = h.set();
  for (int g = 1; g < GroupTable::kOrder; ++g) {
    ElemSet c = conjugate(h, g).set();
    if (set_less(c, best)) best = c;
  }
  return best;
}

bool are_conjugate(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return false;
  for (int g = 0; g < GroupTable::kOrder; ++g)
    if (conjugate(a, g) == b) return true;
  return false;
}

Subgroup normalizer(const Subgroup& h) {
  ElemSet s;
  for (int g = 0; g < GroupTable::kOrder; ++g)
    if (conjugate(h, g) == h) s.set(g);
  return Subgroup(s);
}

std::vector<Subgroup> enumerate_subgroups_within(const ElemSet& within, int min_order) {
  std::vector<ElemSet> cyclic;
  std::unordered_set<ElemSet> seen;
  std::vector<std::pair<ElemSet, std::vector<int>>> found;
  for (int k = 0; k < GroupTable::kOrder; ++k) {
    if (!within.test(k)) continue;
    std::array<int, 1> g{k};
    ElemSet c = closure(g);
    if (seen.insert(c).second) {
      cyclic.push_back(c);
      found.push_back({c, {k}});
    }
  }
  std::vector<int> cyc_gen;
  for (const auto& [c, gens] : found) cyc_gen.push_back(gens[0]);

  // Every subgroup is a join of cyclic subgroups, so joining each found
  // subgroup with each cyclic one reaches all of them.
  for (std::size_t k = 0; k < found.size(); ++k) {
    for (std::size_t c = 0; c < cyclic.size(); ++c) {
      if ((cyclic[c] & ~found[k].first).none()) continue;
      std::vector<int> gens = found[k].second;
      gens.push_back(cyc_gen[c]);
      ElemSet j = closure(gens);
      if (seen.insert(j).second) found.push_back({j, std::move(gens)});
    }
  }

  std::vector<Subgroup> out;
  for (const auto& [s, gens] : found)
    if (static_cast<int>(s.count()) >= min_order) out.emplace_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subgroup> enumerate_subgroups(int min_order) {
  if (min_order < 1) throw std::invalid_argument("min_order must be >= 1");
  ElemSet all;
  all.set();
  return enumerate_subgroups_within(all, min_order);
}

std::vector<std::vector<Subgroup>> conjugacy_classes(const std::vector<Subgroup>& subs) {
  std::vector<std::vector<Subgroup>> classes;
  std::map<std::string, std::size_t> by_key;
  for (const auto& s : subs) {
    std::string k = Subgroup(conjugacy_key(s)).key();
    auto [it, inserted] = by_key.try_emplace(k, classes.size());
    if (inserted) classes.emplace_back();
    classes[it->second].push_back(s);
  }
  return classes;
}

namespace {

template <class Pred>
Subgroup filter(const Subgroup& h, Pred p) {
  const auto& t = GroupTable::get();
  ElemSet s;
  for (int k : h.indices())
    if (p(t.elem(k))) s.set(k);
  return Subgroup(s);
}

template <class Map>
Subgroup image(const Subgroup& h, Map m) {
  const auto& t = GroupTable::get();
  ElemSet s;
  for (int k : h.indices()) s.set(t.index(m(t.elem(k))));
  return Subgroup(s);
}

}  // namespace

Subgroup intersect_a(const Subgroup& h) {
  return filter(h, [](const GElem& g) { return g.b.is_identity(); });
}
Subgroup intersect_b(const Subgroup& h) {
  return filter(h, [](const GElem& g) { return g.h.is_identity(); });
}
Subgroup project_a(const Subgroup& h) {
  return image(h, [](const GElem& g) { return GElem{g.h, Perm3()}; });
}
Subgroup project_b(const Subgroup& h) {
  return image(h, [](const GElem& g) { return GElem{Perm4(), g.b}; });
}

const std::vector<std::string>& s4_rep_names() {
  static const std::vector<std::string> names = {"1",    "Z2(1)", "Z2(2)", "Z3", "V(1)", "V(2)",
                                                 "Z4",   "S3",    "D8",    "A4", "S4"};
  return names;
}

std::vector<Perm4> s4_rep_generators(std::string_view name) {
  static const std::map<std::string, std::vector<std::string>, std::less<>> gens = {
      {"1", {}},
      {"Z2(1)", {"(12)"}},
      {"Z2(2)", {"(12)(34)"}},
      {"Z3", {"(123)"}},
      {"V(1)", {"(12)", "(34)"}},
      {"V(2)", {"(12)(34)", "(13)(24)"}},
      {"Z4", {"(1324)"}},
      {"S3", {"(123)", "(12)"}},
      {"D8", {"(12)(34)", "(13)(24)", "(12)"}},
      {"A4", {"(123)", "(12)(34)"}},
      {"S4", {"(1234)", "(12)"}},
  };
  auto it = gens.find(name);
  if (it == gens.end()) throw std::invalid_argument("unknown S4 subgroup: " + std::string(name));
  std::vector<Perm4> out;
  for (const auto& c : it->second) out.push_back(Perm4::parse(c));
  return out;
}

Subgroup s4_rep(std::string_view name) {
  std::vector<GElem> g;
  for (const auto& p : s4_rep_generators(name)) g.push_back({p, Perm3()});
  return Subgroup::generated_by(g, std::string(name));
}

Subgroup s3_rep(std::string_view name) {
  static const std::map<std::string, std::vector<std::string>, std::less<>> gens = {
      {"1", {}}, {"Z2", {"(12)"}}, {"Z3", {"(123)"}}, {"S3", {"(123)", "(12)"}}};
  auto it = gens.find(name);
  if (it == gens.end()) throw std::invalid_argument("unknown S3 subgroup: " + std::string(name));
  std::vector<GElem> g;
  for (const auto& c : it->second) g.push_back({Perm4(), Perm3::parse(c)});
  return Subgroup::generated_by(g, std::string(name));
}

GElem standard_g(int k) {
  switch (k) {
    case 1: return GElem::parse("(12)(34)|(12)");
    case 2: return GElem::parse("(12)|(12)");
    case 3: return GElem::parse("(13)(24)|(12)");
    case 4: return GElem::parse("(1324)|(12)");
    case 5: return GElem::parse("(123)|(123)");
    default: throw std::out_of_range("standard_g: k must be in 1..5");
  }
}

namespace {

StandardRep direct(const std::string& x, const std::string& y) {
  StandardRep r;
  r.label = x + "x" + y;
  r.x_name = r.c_name = x;
  r.y_name = r.d_name = y;
  std::vector<GElem> g;
  for (const auto& e : s4_rep(x).generators()) g.push_back(e);
  for (const auto& e : s3_rep(y).generators()) g.push_back(e);
  r.group = Subgroup::generated_by(g, r.label);
  return r;
}

StandardRep sub(const std::string& label, const std::string& x, const std::string& y,
                const std::string& c, const std::string& d, std::vector<int> rs) {
  StandardRep r;
  r.label = label;
  r.x_name = x;
  r.y_name = y;
  r.c_name = c;
  r.d_name = d;
  std::vector<GElem> g;
  for (const auto& e : s4_rep(c).generators()) g.push_back(e);
  for (const auto& e : s3_rep(d).generators()) g.push_back(e);
  for (int k : rs) {
    r.r_gens.push_back(standard_g(k));
    g.push_back(standard_g(k));
  }
  r.group = Subgroup::generated_by(g, label);
  return r;
}

}  // namespace

const std::vector<StandardRep>& standard_reps() {
  static const std::vector<StandardRep> reps = [] {
    std::vector<StandardRep> v;
    v.push_back(direct("Z2(1)", "S3"));
    v.push_back(direct("Z2(2)", "S3"));
    v.push_back(direct("Z3", "Z3"));
    v.push_back(direct("Z3", "S3"));
    v.push_back(direct("V(1)", "Z2"));
    v.push_back(direct("V(1)", "Z3"));
    v.push_back(direct("V(1)", "S3"));
    v.push_back(sub("V(1)o1S3", "V(1)", "S3", "Z2(1)", "Z3", {1}));
    v.push_back(sub("V(1)o2S3", "V(1)", "S3", "Z2(2)", "Z3", {2}));
    v.push_back(direct("V(2)", "Z2"));
    v.push_back(direct("V(2)", "Z3"));
    v.push_back(direct("V(2)", "S3"));
    v.push_back(sub("V(2)oS3", "V(2)", "S3", "Z2(2)", "Z3", {3}));
    v.push_back(direct("Z4", "Z2"));
    v.push_back(direct("Z4", "Z3"));
    v.push_back(direct("Z4", "S3"));
    v.push_back(sub("Z4oS3", "Z4", "S3", "Z2(2)", "Z3", {4}));
    v.push_back(direct("S3", "Z2"));
    v.push_back(direct("S3", "Z3"));
    v.push_back(direct("S3", "S3"));
    v.push_back(sub("S3oS3", "S3", "S3", "Z3", "Z3", {2}));
    v.push_back(direct("D8", "1"));
    v.push_back(direct("D8", "Z2"));
    v.push_back(direct("D8", "Z3"));
    v.push_back(direct("D8", "S3"));
    v.push_back(sub("D8o1Z2", "D8", "Z2", "V(1)", "1", {3}));
    v.push_back(sub("D8o2Z2", "D8", "Z2", "V(2)", "1", {2}));
    v.push_back(sub("D8o3Z2", "D8", "Z2", "Z4", "1", {2}));
    v.push_back(sub("D8o1S3", "D8", "S3", "V(1)", "Z3", {3}));
    v.push_back(sub("D8o2S3", "D8", "S3", "V(2)", "Z3", {2}));
    v.push_back(sub("D8o3S3", "D8", "S3", "Z4", "Z3", {2}));
    v.push_back(direct("A4", "1"));
    v.push_back(direct("A4", "Z2"));
    v.push_back(direct("A4", "Z3"));
    v.push_back(direct("A4", "S3"));
    v.push_back(sub("A4oZ3", "A4", "Z3", "V(2)", "1", {5}));
    v.push_back(direct("S4", "1"));
    v.push_back(direct("S4", "Z2"));
    v.push_back(direct("S4", "Z3"));
    v.push_back(direct("S4", "S3"));
    v.push_back(sub("S4oZ2", "S4", "Z2", "A4", "1", {2}));
    v.push_back(sub("S4o1S3", "S4", "S3", "A4", "Z3", {2}));
    v.push_back(sub("S4o2S3", "S4", "S3", "V(2)", "1", {2, 5}));
    return v;
  }();
  return reps;
}

const StandardRep& standard_rep(std::string_view label) {
  for (const auto& r : standard_reps())
    if (r.label == label) return r;
  throw std::invalid_argument("unknown standard subgroup: " + std::string(label));
}

namespace {

struct Quotient {
  std::vector<ElemSet> cosets;  // ordered by smallest element
  std::vector<int> coset_of;    // element index -> coset number, -1 outside
  std::vector<std::vector<int>> mul;
};

Quotient quotient(const Subgroup& x, const Subgroup& n) {
  const auto& t = GroupTable::get();
  Quotient q;
  q.coset_of.assign(GroupTable::kOrder, -1);
  for (int k : x.indices()) {
    if (q.coset_of[k] >= 0) continue;
    ElemSet c;
    for (int m : n.indices()) c.set(t.mul(k, m));
    int id = static_cast<int>(q.cosets.size());
    for (int e = 0; e < GroupTable::kOrder; ++e)
      if (c.test(e)) q.coset_of[e] = id;
    q.cosets.push_back(c);
  }
  std::size_t sz = q.cosets.size();
  std::vector<int> rep(sz);
  for (std::size_t c = 0; c < sz; ++c) rep[c] = static_cast<int>(q.cosets[c]._Find_first());
  q.mul.assign(sz, std::vector<int>(sz));
  for (std::size_t a = 0; a < sz; ++a)
    for (std::size_t b = 0; b < sz; ++b) q.mul[a][b] = q.coset_of[t.mul(rep[a], rep[b])];
  return q;
}

bool is_normal_in(const Subgroup& n, const Subgroup& x) {
  for (int g : x.indices())
    if (!(conjugate(n, g) == n)) return false;
  return true;
}

std::vector<Subgroup> normal_subgroups(const Subgroup& x) {
  std::vector<Subgroup> out;
  for (const auto& s : enumerate_subgroups_within(x.set(), 1))
    if (is_normal_in(s, x)) out.push_back(s);
  return out;
}

}  // namespace

std::vector<Subgroup> subdirect_products(const Subgroup& x, const Subgroup& y) {
  for (const auto& g : x.elements())
    if (!g.b.is_identity()) throw std::invalid_argument("subdirect_products: X must lie in A x 1");
  for (const auto& g : y.elements())
    if (!g.h.is_identity()) throw std::invalid_argument("subdirect_products: Y must lie in 1 x B");

  const auto& t = GroupTable::get();
  std::unordered_set<ElemSet> seen;
  std::vector<Subgroup> out;
  const auto nx = normal_subgroups(x);
  const auto ny = normal_subgroups(y);
  for (const auto& n : nx) {
    Quotient qx = quotient(x, n);
    for (const auto& m : ny) {
      Quotient qy = quotient(y, m);
      const std::size_t sz = qx.cosets.size();
      if (qy.cosets.size() != sz) continue;
      std::vector<int> theta(sz);
      std::iota(theta.begin(), theta.end(), 0);
      do {
        if (theta[0] != 0) continue;  // identity coset comes first in both
        bool hom = true;
        for (std::size_t a = 0; a < sz && hom; ++a)
          for (std::size_t b = 0; b < sz && hom; ++b)
            hom = theta[qx.mul[a][b]] == qy.mul[theta[a]][theta[b]];
        if (!hom) continue;
        ElemSet z;
        for (std::size_t a = 0; a < sz; ++a)
          for (int u = 0; u < GroupTable::kOrder; ++u) {
            if (!qx.cosets[a].test(u)) continue;
            for (int v = 0; v < GroupTable::kOrder; ++v)
              if (qy.cosets[theta[a]].test(v)) z.set(t.mul(u, v));
          }
        if (seen.insert(z).second) out.emplace_back(z);
      } while (std::next_permutation(theta.begin(), theta.end()));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tsym
