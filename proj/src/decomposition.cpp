#include "tsym/decomposition.hpp"

#include <algorithm>
#include <set>

namespace tsym {

Decomposition standard_decomposition() {
  Decomposition d;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k) d.emplace_back(Mat::unit(i, j), Mat::unit(j, k), Mat::unit(k, i));
  return d;
}

FullTensor decomposition_sum(const Decomposition& d) {
  FullTensor s;
  for (const auto& t : d) s += expand(t);
  return s;
}

bool verify_decomposition(const Decomposition& d) { return decomposition_sum(d) == tensor_T(); }

namespace {

std::vector<DecTensor> canon_sorted(const Decomposition& d) {
  std::vector<DecTensor> v;
  v.reserve(d.size());
  for (const auto& t : d) v.push_back(dec_canon(t));
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

bool is_g_invariant(const Decomposition& d) {
  const auto base = canon_sorted(d);
  for (const auto& g : group_elements()) {
    Decomposition moved;
    moved.reserve(d.size());
    for (const auto& t : d) moved.push_back(act(g, t));
    if (canon_sorted(moved) != base) return false;
  }
  return true;
}

std::vector<OrbitPart> orbit_structure(const Decomposition& d) {
  if (!is_g_invariant(d)) throw NotInvariant("decomposition is not G-invariant");
  std::map<DecTensor, int> count;
  std::vector<DecTensor> order;
  for (const auto& t : d) {
    DecTensor c = dec_canon(t);
    if (count[c]++ == 0) order.push_back(c);
  }
  std::set<DecTensor> done;
  std::vector<OrbitPart> out;
  for (const auto& c : order) {
    if (done.count(c)) continue;
    auto orb = orbit(c);
    done.insert(orb.begin(), orb.end());
    OrbitPart p{c, static_cast<int>(orb.size()), count[c], stabilizer(c).order()};
    out.push_back(p);
  }
  return out;
}

const std::vector<int>& orbit_lengths() {
  static const std::vector<int> lengths = [] {
    std::set<int> s;
    for (const auto& h : enumerate_subgroups(8)) s.insert(GroupTable::kOrder / h.order());
    return std::vector<int>(s.begin(), s.end());
  }();
  return lengths;
}

std::vector<std::vector<int>> feasible_profiles(int max_len, bool exact) {
  if (max_len < 1) throw std::invalid_argument("max_len must be >= 1");
  const auto& parts = orbit_lengths();
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, std::size_t from, int sum) -> void {
    if (!cur.empty() && (!exact || sum == max_len)) out.push_back(cur);
    for (std::size_t k = from; k < parts.size(); ++k) {
      if (sum + parts[k] > max_len) break;
      cur.push_back(parts[k]);
      self(self, k, sum + parts[k]);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> left_transversal(const Subgroup& h) {
  const auto& t = GroupTable::get();
  ElemSet covered;
  std::vector<int> reps;
  for (int g = 0; g < GroupTable::kOrder; ++g) {
    if (covered.test(g)) continue;
    reps.push_back(g);
    for (int k : h.indices()) covered.set(t.mul(g, k));
  }
  return reps;
}

namespace {

using SymFactor = std::array<ParamPoly, 9>;

// g applied to one factor: conjugation, then transpose when b is odd.
Mat act_factor(const GElem& g, const Mat& m) {
  Mat r = act_mat(g.h, m);
  return g.b.sign() < 0 ? transpose(r) : r;
}

SymFactor symbolic(const LinForm& f, const std::vector<std::size_t>& var_of, std::size_t nvars,
                   const GElem& g) {
  SymFactor s;
  s.fill(ParamPoly(nvars));
  if (f.is_constant()) {
    Mat m = act_factor(g, f.constant);
    for (int e = 0; e < 9; ++e)
      if (!m[e].is_zero()) s[e] += ParamPoly::constant(nvars, m[e]);
    return s;
  }
  for (const auto& [p, mat] : f.terms) {
    Mat m = act_factor(g, mat);
    ParamPoly v = ParamPoly::variable(nvars, var_of[p]);
    for (int e = 0; e < 9; ++e)
      if (!m[e].is_zero()) s[e] += v * m[e];
  }
  return s;
}

std::vector<std::string> row_names(const RowSpec& rs, std::size_t position) {
  const OrbitRow& row = orbit_row(rs.row_id);
  if (rs.names.empty()) {
    std::vector<std::string> n;
    for (const auto& p : row.params) n.push_back(p + std::to_string(position + 1));
    return n;
  }
  if (static_cast<int>(rs.names.size()) != row.param_count())
    throw std::invalid_argument("row " + std::to_string(rs.row_id) + " takes " +
                                std::to_string(row.param_count()) + " parameter names");
  return rs.names;
}

Index6 index_of(int flat) {
  int e1 = flat / 81, e2 = flat / 9 % 9, e3 = flat % 9;
  return {std::uint8_t(e1 / 3), std::uint8_t(e1 % 3), std::uint8_t(e2 / 3),
          std::uint8_t(e2 % 3), std::uint8_t(e3 / 3), std::uint8_t(e3 % 3)};
}

}  // namespace

ConstraintSystem constraint_system(const std::vector<RowSpec>& rows, int cap) {
  int total = 0;
  for (const auto& r : rows) total += orbit_row(r.row_id).length;
  if (total > cap)
    throw CapExceeded("total orbit length " + std::to_string(total) + " exceeds cap " +
                      std::to_string(cap));

  ConstraintSystem sys;
  std::vector<std::vector<std::size_t>> var_of;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    RowSpec rs{rows[r].row_id, row_names(rows[r], r)};
    std::vector<std::size_t> idx;
    for (const auto& n : rs.names) {
      auto it = std::find(sys.variables.begin(), sys.variables.end(), n);
      idx.push_back(static_cast<std::size_t>(it - sys.variables.begin()));
      if (it == sys.variables.end()) sys.variables.push_back(n);
    }
    var_of.push_back(std::move(idx));
    sys.rows.push_back(std::move(rs));
  }
  const std::size_t nv = sys.variables.size();
  sys.equations.assign(729, ParamPoly(nv));

  const auto& t = GroupTable::get();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const OrbitRow& row = orbit_row(rows[r].row_id);
    for (int gi : left_transversal(row_subgroup(row.id))) {
      const GElem& g = t.elem(gi);
      std::array<SymFactor, 3> f;
      for (int k = 0; k < 3; ++k) f[g.b(k)] = symbolic(row.factors[k], var_of[r], nv, g);
      if (row.scalar_param >= 0) {
        ParamPoly s = ParamPoly::variable(nv, var_of[r][row.scalar_param]);
        for (auto& e : f[g.b(0)]) e = e * s;
      }
      for (int a = 0; a < 9; ++a) {
        if (f[0][a].is_zero()) continue;
        for (int b = 0; b < 9; ++b) {
          if (f[1][b].is_zero()) continue;
          ParamPoly ab = f[0][a] * f[1][b];
          for (int c = 0; c < 9; ++c)
            if (!f[2][c].is_zero()) sys.equations[(a * 9 + b) * 9 + c] += ab * f[2][c];
        }
      }
    }
  }
  for (const auto& [idx, v] : tensor_T().nonzeros()) {
    int flat = ((idx[0] * 3 + idx[1]) * 9 + idx[2] * 3 + idx[3]) * 9 + idx[4] * 3 + idx[5];
    sys.equations[flat] -= ParamPoly::constant(nv, v);
  }
  return sys;
}

Residual evaluate_constraints(const ConstraintSystem& sys,
                              const std::map<std::string, Scalar>& values) {
  std::vector<Scalar> v;
  for (const auto& n : sys.variables) {
    auto it = values.find(n);
    if (it == values.end()) throw MissingVariable("no value for variable " + n);
    v.push_back(it->second);
  }
  Residual r;
  for (int k = 0; k < static_cast<int>(sys.equations.size()); ++k) {
    Scalar s = sys.equations[k].eval(v);
    if (!s.is_zero()) r.nonzero.push_back({index_of(k), s});
  }
  return r;
}

std::vector<RowSpec> standard_orbit_rows() {
  return {{5, {"a1", "b1"}}, {26, {"a2", "b2", "c2", "d2", "f2"}}, {44, {"a3", "b3"}}};
}

std::map<std::string, Scalar> standard_orbit_values() {
  return {{"a1", 0}, {"b1", 1}, {"a2", 1}, {"b2", 0}, {"c2", 1},
          {"d2", 0}, {"f2", 0}, {"a3", 1}, {"b3", 0}};
}

FullTensor orbit_sum(const std::vector<RowSpec>& rows,
                     const std::map<std::string, Scalar>& values) {
  const auto& t = GroupTable::get();
  FullTensor sum;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto names = row_names(rows[r], r);
    std::vector<Scalar> p;
    for (const auto& n : names) {
      auto it = values.find(n);
      if (it == values.end()) throw MissingVariable("no value for variable " + n);
      p.push_back(it->second);
    }
    FullTensor term;
    try {
      term = expand(row_instantiate(rows[r].row_id, p));
    } catch (const ZeroFactor&) {
      continue;  // the term is the zero tensor
    }
    for (int gi : left_transversal(row_subgroup(rows[r].row_id)))
      sum += act_full(t.elem(gi), term);
  }
  return sum;
}

}  // namespace tsym
