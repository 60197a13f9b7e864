#include "tsym/orbits.hpp"

#include <map>

#include "tsym/predicates.hpp"
#include "tsym/rng.hpp"

namespace tsym {

Subgroup stabilizer(const DecTensor& w) {
  const auto& t = GroupTable::get();
  const DecTensor base = dec_canon(w);
  ElemSet s;
  for (int k = 0; k < GroupTable::kOrder; ++k)
    if (dec_canon(act(t.elem(k), w)) == base) s.set(k);
  return Subgroup(s);
}

std::set<DecTensor> orbit(const DecTensor& w) {
  std::set<DecTensor> out;
  for (const auto& g : group_elements()) out.insert(dec_canon(act(g, w)));
  return out;
}

DecTensor row_instantiate(int id, const std::vector<Scalar>& params) {
  const OrbitRow& row = orbit_row(id);
  if (static_cast<int>(params.size()) != row.param_count())
    throw std::invalid_argument("row " + std::to_string(id) + " takes " +
                                std::to_string(row.param_count()) + " parameters");
  Mat x = row.factors[0].eval(params);
  if (row.scalar_param >= 0) x *= params[row.scalar_param];
  return DecTensor(std::move(x), row.factors[1].eval(params), row.factors[2].eval(params));
}

const Subgroup& row_subgroup(int id) { return standard_rep(orbit_row(id).stabilizer).group; }

RowReport verify_row(int id, std::uint64_t seed) {
  const OrbitRow& row = orbit_row(id);
  const Subgroup& h = row_subgroup(id);
  RowReport rep;
  rep.id = id;
  rep.seed = seed;
  Rng rng = Rng::derived(seed, static_cast<std::uint64_t>(id));
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    RowAttempt at;
    at.params = rng.distinct(row.param_count(), 1, 9);
    std::vector<Scalar> p(at.params.begin(), at.params.end());
    const DecTensor w = row_instantiate(id, p);
    const Subgroup st = stabilizer(w);
    at.stabilizer_order = st.order();
    at.contains_h = st.contains(h);
    at.equals_h = st == h;
    at.orbit_length = static_cast<int>(orbit(w).size());
    rep.attempts.push_back(at);
    if (!at.contains_h) return rep;
    if (at.equals_h) {
      rep.passed = at.orbit_length == row.length;
      return rep;
    }
  }
  throw PersistentDegeneracy("row " + std::to_string(id) + ": stabilizer strictly larger than " +
                             row.stabilizer + " for " + std::to_string(kMaxDraws) +
                             " parameter draws");
}

namespace {

struct FactorSolver {
  bool constant = true;
  Mat mat;                   // constant factor
  linalg::Rows basis;        // term matrices as rows
  std::vector<int> params;   // parameter of each term
};

const std::vector<std::array<FactorSolver, 3>>& solvers() {
  static const std::vector<std::array<FactorSolver, 3>> s = [] {
    std::vector<std::array<FactorSolver, 3>> out;
    for (const auto& row : orbit_table()) {
      std::array<FactorSolver, 3> fs;
      for (int k = 0; k < 3; ++k) {
        const LinForm& f = row.factors[k];
        fs[k].constant = f.is_constant();
        fs[k].mat = f.constant;
        for (const auto& [p, m] : f.terms) {
          fs[k].basis.push_back(m.to_vec());
          fs[k].params.push_back(p);
        }
      }
      out.push_back(std::move(fs));
    }
    return out;
  }();
  return s;
}

Scalar ratio(const Mat& a, const Mat& b) {
  const int l = b.leading_index();
  return a[l] / b[l];
}

}  // namespace

std::optional<Classification> match_row(const OrbitRow& row, const DecTensor& gw) {
  const auto& fs = solvers()[row.id - 1];
  std::vector<std::optional<Scalar>> p(row.param_count());
  Scalar scale(1);
  for (int k = 0; k < 3; ++k) {
    const Mat& x = gw.factor(k);
    if (fs[k].constant) {
      if (!proportional(x, fs[k].mat)) return std::nullopt;
      scale *= ratio(x, fs[k].mat);
      continue;
    }
    auto coords = linalg::span_coordinates(fs[k].basis, x.to_vec());
    if (!coords) return std::nullopt;
    // x = lambda * f_k(p): the factor scale comes from a parameter already
    // fixed to a nonzero value, or is free and set to 1.
    Scalar lambda(1);
    for (std::size_t j = 0; j < fs[k].params.size(); ++j) {
      const auto& known = p[fs[k].params[j]];
      if (known && !known->is_zero()) {
        lambda = (*coords)[j] / *known;
        break;
      }
    }
    if (lambda.is_zero()) return std::nullopt;
    const Scalar inv = lambda.inv();
    for (std::size_t j = 0; j < fs[k].params.size(); ++j) {
      Scalar v = (*coords)[j] * inv;
      auto& slot = p[fs[k].params[j]];
      if (slot) {
        if (!(*slot == v)) return std::nullopt;
      } else {
        slot = v;
      }
    }
    scale *= lambda;
  }
  if (row.scalar_param >= 0) {
    p[row.scalar_param] = scale;
    scale = 1;
  }
  Classification c;
  c.row_id = row.id;
  for (auto& v : p) c.params.push_back(v.value_or(Scalar(0)));
  c.global_scale = scale;
  DecTensor inst = row_instantiate(row.id, c.params);
  DecTensor scaled(inst.x() * scale, inst.y(), inst.z());
  if (!(dec_canon(scaled) == dec_canon(gw))) return std::nullopt;
  return c;
}

Classification classify(const DecTensor& w, bool collect_all) {
  const Subgroup st = stabilizer(w);
  if (st.order() < 8)
    throw SmallStabilizer("stabilizer has order " + std::to_string(st.order()) +
                          " < 8; the orbit is longer than 18");
  const auto& t = GroupTable::get();
  const ElemSet key = conjugacy_key(st);

  std::map<std::string, bool> conj_cache;
  std::vector<int> candidates;
  for (const auto& row : orbit_table()) {
    auto [it, inserted] = conj_cache.try_emplace(row.stabilizer, false);
    if (inserted) {
      const Subgroup& h = row_subgroup(row.id);
      it->second = h.order() == st.order() && conjugacy_key(h) == key;
    }
    if (it->second) candidates.push_back(row.id);
  }

  std::optional<Classification> first;
  std::set<int> matching;
  for (int gi = 0; gi < GroupTable::kOrder; ++gi) {
    std::optional<DecTensor> gw;
    for (int id : candidates) {
      if (!(conjugate(st, gi) == row_subgroup(id))) continue;
      if (collect_all && matching.count(id)) continue;
      if (!gw) gw = act(t.elem(gi), w);
      auto m = match_row(orbit_row(id), *gw);
      if (!m) continue;
      m->g = t.elem(gi);
      matching.insert(id);
      if (!first) first = std::move(m);
      if (!collect_all) break;
    }
    if (first && !collect_all) break;
  }
  if (!first) throw NoMatch("no table row matches a tensor with stabilizer of order " +
                            std::to_string(st.order()));
  first->matching_rows.assign(matching.begin(), matching.end());
  return *first;
}

}  // namespace tsym
