#include "tsym/commands.hpp"

#include <openssl/evp.h>

#include <iomanip>
#include <set>
#include <sstream>

#include "tsym/parallel.hpp"
#include "tsym/rng.hpp"
#include "tsym/sampling.hpp"

namespace tsym {

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  std::ostringstream out;
  for (unsigned int k = 0; k < len; ++k)
    out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[k]);
  return out.str();
}

Json report_json(const Report& r) {
  Json body{{"command", r.command}, {"seed", r.seed}, {"result", r.result},
            {"exit_code", r.exit_code}};
  body["digest"] = sha256_hex(body.dump());
  return body;
}

std::string render(const Report& r, bool json) {
  Json j = report_json(r);
  if (json) return j.dump(2) + "\n";
  std::string out = r.text;
  if (!out.empty() && out.back() != '\n') out += '\n';
  out += "seed: " + std::to_string(r.seed) + "\n";
  out += "digest: " + j["digest"].get<std::string>() + "\n";
  return out;
}

namespace {

std::string pass(bool ok) { return ok ? "pass" : "FAIL"; }

Json mats_json(const std::vector<Mat>& ms) {
  Json j = Json::array();
  for (const auto& m : ms) j.push_back(to_json(m));
  return j;
}

}  // namespace

Report cmd_verify_group(std::uint64_t seed, bool inject_fault) {
  Report r;
  r.command = "verify-group";
  r.seed = seed;
  Rng rng(seed);
  const DecTensor probe = random_dec(rng);
  GammaFn fn = [inject_fault](const Perm4& h) {
    Mat m = gamma(h);
    if (inject_fault && h == Perm4::parse("(12)")) m = -m;
    return m;
  };
  const GroupCheck c = check_group(fn, probe);
  r.result = {{"homomorphism_pairs", c.homomorphism_pairs_ok},
              {"homomorphism_total", 576},
              {"image_is_det1_signed_permutations", c.image_is_det1_monomials},
              {"orthogonal", c.orthogonal},
              {"commuting_pairs", c.commuting_pairs_ok},
              {"commuting_total", 144},
              {"invariance", c.invariance_ok},
              {"invariance_total", 144},
              {"fault_injected", inject_fault},
              {"passed", c.passed()}};
  std::ostringstream t;
  t << "gamma homomorphism: " << c.homomorphism_pairs_ok << "/576\n"
    << "image = det-1 signed permutation matrices: " << pass(c.image_is_det1_monomials) << "\n"
    << "orthogonal images: " << pass(c.orthogonal) << "\n"
    << "A and B commute: " << c.commuting_pairs_ok << "/144\n"
    << "T invariant: " << c.invariance_ok << "/144\n"
    << (inject_fault ? "fault injected into gamma((12))\n" : "")
    << "verify-group: " << pass(c.passed()) << "\n";
  r.text = t.str();
  r.exit_code = c.passed() ? 0 : 1;
  return r;
}

Report cmd_enumerate_subgroups(int min_order) {
  Report r;
  r.command = "enumerate-subgroups";
  const auto subs = enumerate_subgroups(min_order);
  const auto classes = conjugacy_classes(subs);

  std::vector<std::string> label(classes.size());
  std::vector<const StandardRep*> rep_of(classes.size(), nullptr);
  std::set<std::size_t> hit;
  bool bijection = true;
  int expected = 0;
  for (const auto& s : standard_reps()) {
    if (s.group.order() < min_order) continue;
    ++expected;
    const ElemSet key = conjugacy_key(s.group);
    bool found = false;
    for (std::size_t c = 0; c < classes.size(); ++c)
      if (classes[c][0].order() == s.group.order() && conjugacy_key(classes[c][0]) == key) {
        found = true;
        if (!label[c].empty()) bijection = false;
        label[c] = s.label;
        rep_of[c] = &s;
        hit.insert(c);
      }
    if (!found) bijection = false;
  }
  std::size_t large = 0;
  for (const auto& c : classes) large += c[0].order() >= 8;
  if (hit.size() != large) bijection = false;

  Json cls = Json::array();
  std::ostringstream t;
  t << "subgroups of order >= " << min_order << ": " << subs.size() << " in " << classes.size()
    << " conjugacy classes\n";
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const Subgroup& h = rep_of[c] ? rep_of[c]->group : classes[c][0];
    Json gens = Json::array();
    std::string gtext;
    for (const auto& g : h.generators()) {
      gens.push_back(g.str());
      gtext += (gtext.empty() ? "" : ", ") + g.str();
    }
    cls.push_back({{"label", label[c]},
                   {"order", h.order()},
                   {"index", h.index()},
                   {"class_size", classes[c].size()},
                   {"generators", gens}});
    t << "  " << std::left << std::setw(10) << (label[c].empty() ? "?" : label[c])
      << " order " << std::setw(3) << h.order() << " index " << std::setw(3) << h.index()
      << " conjugates " << std::setw(2) << classes[c].size() << "  <" << gtext << ">\n";
  }

  // Each decomposition (C x D) R: C, D, and both projections, setwise.
  Json decomp = Json::array();
  bool decomp_ok = true;
  for (const auto& s : standard_reps()) {
    bool c = intersect_a(s.group) == s4_rep(s.c_name);
    bool d = intersect_b(s.group) == s3_rep(s.d_name);
    bool x = project_a(s.group) == s4_rep(s.x_name);
    bool y = project_b(s.group) == s3_rep(s.y_name);
    decomp_ok = decomp_ok && c && d && x && y;
    Json rg = Json::array();
    for (const auto& g : s.r_gens) rg.push_back(g.str());
    decomp.push_back({{"label", s.label}, {"C", s.c_name}, {"D", s.d_name}, {"R", rg},
                      {"order", s.group.order()}, {"ok", c && d && x && y}});
  }

  bool gap_ok = true;
  std::set<int> indices;
  for (const auto& h : enumerate_subgroups(1)) {
    indices.insert(h.index());
    if (h.index() >= 19 && h.index() <= 23) gap_ok = false;
  }

  // Nondirect subdirect products of order >= 8 per projection pair, counted
  // up to conjugacy, against the named ones.
  Json families = Json::array();
  bool families_ok = true;
  for (const auto& xn : s4_rep_names())
    for (const std::string yn : {"Z2", "Z3", "S3"}) {
      const Subgroup x = s4_rep(xn), y = s3_rep(yn);
      std::set<std::string> keys;
      for (const auto& z : subdirect_products(x, y)) {
        if (z.order() == x.order() * y.order() || z.order() < 8) continue;
        keys.insert(Subgroup(conjugacy_key(z)).key());
      }
      int named = 0;
      for (const auto& s : standard_reps())
        if (s.x_name == xn && s.y_name == yn && s.c_name != xn) ++named;
      if (keys.empty() && named == 0) continue;
      bool ok = static_cast<int>(keys.size()) == named;
      families_ok = families_ok && ok;
      families.push_back({{"X", xn}, {"Y", yn}, {"classes", keys.size()}, {"named", named}});
    }

  r.result = {{"min_order", min_order},
              {"subgroups", subs.size()},
              {"classes", cls},
              {"class_count", classes.size()},
              {"standard_count", expected},
              {"standard_bijection", bijection},
              {"decompositions", decomp},
              {"decompositions_ok", decomp_ok},
              {"indices", indices},
              {"no_index_19_to_23", gap_ok},
              {"subdirect_families", families},
              {"subdirect_families_ok", families_ok}};
  t << "bijection with the " << expected << " standard representatives: " << pass(bijection)
    << "\n"
    << "(C x D)R decompositions verified setwise: " << pass(decomp_ok) << "\n"
    << "no subgroup of index 19..23: " << pass(gap_ok) << "\n"
    << "subdirect product families match the named ones: " << pass(families_ok) << "\n";
  r.text = t.str();
  r.exit_code = bijection && decomp_ok && gap_ok && families_ok ? 0 : 1;
  return r;
}

Report cmd_semiinvariants(const std::optional<std::string>& k) {
  Report r;
  r.command = "semiinvariants";
  std::vector<int> which;
  if (k) {
    which.push_back(k_index(*k));
  } else {
    for (int i = 1; i <= 10; ++i) which.push_back(i);
  }
  std::vector<SemiinvariantReport> reps(which.size());
  parallel_for(which.size(), [&](std::size_t n) { reps[n] = character_relations(which[n]); });

  Json arr = Json::array();
  std::ostringstream t;
  bool all = true;
  for (const auto& rep : reps) {
    all = all && rep.passed();
    Json spaces = Json::array();
    t << "K" << rep.i << " = " << rep.name << ": characters " << rep.character_group << ", "
      << rep.spaces.size() << " nonzero spaces\n";
    for (std::size_t s = 0; s < rep.spaces.size(); ++s) {
      const auto& sp = rep.spaces[s];
      const auto& m = rep.matches[s];
      Json chi = Json::object();
      std::string ctext;
      for (std::size_t g = 0; g < sp.chi.gens.size(); ++g) {
        chi[sp.chi.gens[g].str()] = to_json(sp.chi.values[g]);
        ctext += (ctext.empty() ? "" : ", ") + sp.chi.gens[g].str() + " -> " +
                 sp.chi.values[g].str();
      }
      std::string name = m.j ? "L" + std::to_string(rep.i) + "," + std::to_string(m.j) : "?";
      spaces.push_back({{"listed", name},
                        {"character", chi},
                        {"dimension", sp.dim()},
                        {"basis", mats_json(sp.basis)},
                        {"matches_printed", m.matches_printed},
                        {"matches_computed_listing", m.matches_amended}});
      t << "  " << name << " dim " << sp.dim() << "  [" << ctext << "]"
        << (m.j && !m.matches_printed ? "  (printed listing differs)" : "") << "\n";
    }
    Json rels = Json::array();
    for (const auto& [text, ok] : rep.relations) {
      rels.push_back({{"relation", text}, {"holds", ok}});
      t << "  " << text << ": " << pass(ok) << "\n";
    }
    for (const auto& n : rep.notes) t << "  note: " << n << "\n";
    t << "  listing agrees: " << pass(rep.listing_agrees)
      << ", transpose-stable: " << pass(rep.transpose_stable)
      << ", sum is all of M: " << (rep.direct_sum_is_whole ? "yes" : "no") << "\n";
    arr.push_back({{"k", rep.i},
                   {"name", rep.name},
                   {"character_group", rep.character_group},
                   {"spaces", spaces},
                   {"relations", rels},
                   {"notes", rep.notes},
                   {"listing_agrees", rep.listing_agrees},
                   {"transpose_stable", rep.transpose_stable},
                   {"direct_sum_is_whole", rep.direct_sum_is_whole},
                   {"passed", rep.passed()}});
  }
  r.result = {{"subgroups", arr}, {"passed", all}};
  r.text = t.str() + "semiinvariants: " + pass(all) + "\n";
  r.exit_code = all ? 0 : 1;
  return r;
}

Report cmd_verify_table(const std::optional<int>& row, std::uint64_t seed) {
  Report r;
  r.command = "verify-table";
  r.seed = seed;
  std::vector<int> ids;
  if (row) {
    orbit_row(*row);
    ids.push_back(*row);
  } else {
    for (const auto& rw : orbit_table()) ids.push_back(rw.id);
  }
  std::vector<RowReport> reps(ids.size());
  std::vector<std::string> errors(ids.size());
  parallel_for(ids.size(), [&](std::size_t n) {
    try {
      reps[n] = verify_row(ids[n], seed);
    } catch (const PersistentDegeneracy& e) {
      reps[n].id = ids[n];
      reps[n].seed = seed;
      errors[n] = e.what();
    }
  });

  Json arr = Json::array();
  std::ostringstream t;
  int passed = 0;
  for (std::size_t n = 0; n < ids.size(); ++n) {
    const auto& rep = reps[n];
    const OrbitRow& rw = orbit_row(rep.id);
    if (rep.passed) ++passed;
    Json attempts = Json::array();
    for (const auto& a : rep.attempts)
      attempts.push_back({{"params", a.params},
                          {"stabilizer_order", a.stabilizer_order},
                          {"contains_h", a.contains_h},
                          {"equals_h", a.equals_h},
                          {"orbit_length", a.orbit_length}});
    Json entry{{"row", rep.id},
               {"stabilizer", rw.stabilizer},
               {"length", rw.length},
               {"params", rw.params},
               {"coupling", coupling_name(rw.coupling())},
               {"attempts", attempts},
               {"passed", rep.passed}};
    if (!errors[n].empty()) entry["error"] = errors[n];
    if (rw.param_count() == 0) entry["note"] = "no free parameter; scalar multiples have the same stabilizer";
    arr.push_back(entry);
    t << "row " << std::setw(2) << rep.id << "  " << std::left << std::setw(9) << rw.stabilizer
      << std::right << " l=" << std::setw(2) << rw.length;
    if (!rep.attempts.empty()) {
      const auto& a = rep.attempts.back();
      t << "  |St|=" << std::setw(3) << a.stabilizer_order << " |O|=" << std::setw(2)
        << a.orbit_length << " draws=" << rep.attempts.size();
    }
    t << "  " << pass(rep.passed);
    if (!errors[n].empty()) t << "  (" << errors[n] << ")";
    t << "\n";
  }
  const bool all = passed == static_cast<int>(ids.size());
  r.result = {{"rows", arr}, {"passed", passed}, {"total", ids.size()}};
  t << "verify-table: " << passed << "/" << ids.size() << " rows pass\n";
  r.text = t.str();
  r.exit_code = all ? 0 : 1;
  return r;
}

Report cmd_classify(const DecTensor& w, bool verbose) {
  Report r;
  r.command = "classify";
  const Classification c = classify(w, verbose);
  const OrbitRow& rw = orbit_row(c.row_id);
  Json params = Json::object();
  std::string ptext;
  for (int k = 0; k < rw.param_count(); ++k) {
    params[rw.params[k]] = to_json(c.params[k]);
    ptext += (ptext.empty() ? "" : ", ") + rw.params[k] + " = " + c.params[k].str();
  }
  r.result = {{"row", c.row_id},
              {"stabilizer", rw.stabilizer},
              {"length", rw.length},
              {"g", c.g.str()},
              {"params", params},
              {"global_scale", to_json(c.global_scale)},
              {"formula", rw.formula}};
  if (verbose) r.result["matching_rows"] = c.matching_rows;
  std::ostringstream t;
  t << "row " << c.row_id << " (" << rw.stabilizer << ", orbit length " << rw.length << ")\n"
    << "w_i = " << rw.formula << "\n"
    << "g = " << c.g.str() << "\n"
    << "params: " << (ptext.empty() ? "none" : ptext) << "\n"
    << "global scale: " << c.global_scale.str() << "\n";
  if (verbose) {
    t << "rows matching for some g:";
    for (int id : c.matching_rows) t << " " << id;
    t << "\n";
  }
  r.text = t.str();
  return r;
}

Report cmd_verify_decomposition(const Decomposition& d) {
  Report r;
  r.command = "verify-decomposition";
  const bool ok = verify_decomposition(d);
  const bool inv = is_g_invariant(d);
  FullTensor diff = decomposition_sum(d);
  diff -= tensor_T();
  r.result = {{"terms", d.size()},
              {"sums_to_T", ok},
              {"g_invariant", inv},
              {"residual_nonzero", diff.nonzero_count()}};
  std::ostringstream t;
  t << d.size() << " terms; sum equals T: " << (ok ? "yes" : "no") << " ("
    << diff.nonzero_count() << " residual coefficients); G-invariant: " << (inv ? "yes" : "no")
    << "\n";
  r.text = t.str();
  r.exit_code = ok ? 0 : 1;
  return r;
}

Report cmd_orbit_structure(const Decomposition& d) {
  Report r;
  r.command = "orbit-structure";
  const auto parts = orbit_structure(d);
  Json arr = Json::array();
  std::ostringstream t;
  int total = 0;
  for (const auto& p : parts) {
    total += p.length * p.multiplicity;
    arr.push_back({{"representative", to_json(p.representative)},
                   {"length", p.length},
                   {"multiplicity", p.multiplicity},
                   {"stabilizer_order", p.stabilizer_order}});
    t << "orbit length " << std::setw(2) << p.length << " x" << p.multiplicity
      << "  |St| = " << p.stabilizer_order << "\n";
  }
  r.result = {{"orbits", arr}, {"total", total}, {"terms", d.size()}};
  t << "lengths sum to " << total << " of " << d.size() << " terms\n";
  r.text = t.str();
  r.exit_code = total == static_cast<int>(d.size()) ? 0 : 1;
  return r;
}

Report cmd_profiles(int max_len, bool exact) {
  Report r;
  r.command = "profiles";
  const auto profiles = feasible_profiles(max_len, exact);
  r.result = {{"max", max_len},
              {"exact", exact},
              {"parts", orbit_lengths()},
              {"count", profiles.size()},
              {"profiles", profiles}};
  std::ostringstream t;
  for (const auto& p : profiles) {
    t << "[";
    for (std::size_t k = 0; k < p.size(); ++k) t << (k ? "," : "") << p[k];
    t << "]\n";
  }
  t << profiles.size() << " profiles with sum " << (exact ? "= " : "<= ") << max_len << "\n";
  r.text = t.str();
  return r;
}

Report cmd_constraints(const std::vector<RowSpec>& rows, int cap,
                       const std::optional<std::map<std::string, Scalar>>& values,
                       Json* system_out) {
  Report r;
  r.command = "constraints";
  const ConstraintSystem sys = constraint_system(rows, cap);
  if (system_out) *system_out = to_json(sys);
  int nonzero = 0, max_deg = -1;
  for (const auto& e : sys.equations) {
    if (!e.is_zero()) ++nonzero;
    max_deg = std::max(max_deg, e.degree());
  }
  Json rj = Json::array();
  int total = 0;
  for (const auto& s : sys.rows) {
    rj.push_back({{"row", s.row_id}, {"names", s.names}});
    total += orbit_row(s.row_id).length;
  }
  r.result = {{"rows", rj},
              {"variables", sys.variables},
              {"total_length", total},
              {"cap", cap},
              {"equations", sys.equations.size()},
              {"nonzero_equations", nonzero},
              {"max_degree", max_deg}};
  std::ostringstream t;
  t << sys.equations.size() << " equations (" << nonzero << " not identically zero, degree <= "
    << max_deg << ") in " << sys.variables.size() << " variables; total orbit length " << total
    << "\n";
  if (values) {
    const Residual res = evaluate_constraints(sys, *values);
    Json nz = Json::array();
    for (const auto& [idx, v] : res.nonzero) {
      Json e = Json::array();
      for (auto i : idx) e.push_back(i + 1);
      e.push_back(to_json(v));
      nz.push_back(e);
    }
    r.result["residual"] = nz;
    r.result["residual_zero"] = res.is_zero();
    t << "residual: " << (res.is_zero() ? "zero" : std::to_string(res.nonzero.size()) + " nonzero coordinates")
      << "\n";
    r.exit_code = res.is_zero() ? 0 : 1;
  }
  r.text = t.str();
  return r;
}

Report cmd_instantiate(int row, const std::vector<Scalar>& params) {
  Report r;
  r.command = "instantiate";
  const DecTensor w = row_instantiate(row, params);
  r.result = {{"row", row}, {"tensor", to_json(w)}};
  r.text = to_json(w).dump() + "\n";
  return r;
}

}  // namespace tsym
