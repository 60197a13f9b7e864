#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "tsym/commands.hpp"

using namespace tsym;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string part; std::getline(in, part, sep);) out.push_back(part);
  return out;
}

int emit(const Report& r, bool json) {
  std::cout << render(r, json);
  return r.exit_code;
}

int fail(const std::string& kind, const std::string& what, int code, bool json) {
  if (json) {
    std::cout << Json{{"error", kind}, {"message", what}, {"exit_code", code}}.dump(2) << "\n";
  } else {
    std::cerr << "tsym: " << kind << ": " << what << "\n";
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for S4 x S3 acting on M3 (x) M3 (x) M3 and <3,3,3>"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  std::uint64_t seed = 0;
  app.add_flag("--json", json, "Print the report as JSON");
  app.add_option("--seed", seed, "Seed for randomized checks")->capture_default_str();

  auto* vg = app.add_subcommand("verify-group", "Check gamma, the A-B commutation and T-invariance");
  bool inject = false;
  vg->add_flag("--inject-fault", inject, "Flip the sign of gamma((12)) before checking");

  auto* es = app.add_subcommand("enumerate-subgroups", "Conjugacy classes of subgroups of G");
  int min_order = 8;
  es->add_option("--min-order", min_order)->capture_default_str()->check(CLI::PositiveNumber);

  auto* si = app.add_subcommand("semiinvariants", "Semiinvariant spaces of K1..K10");
  std::string k_name;
  si->add_option("--subgroup", k_name, "One of Z2(1) Z2(2) Z3 V(1) V(2) Z4 S3 D8 A4 S4");

  auto* vt = app.add_subcommand("verify-table", "Stabilizers and orbit lengths of the 44 rows");
  int row = 0;
  vt->add_option("--row", row)->check(CLI::Range(1, 44));

  auto* cl = app.add_subcommand("classify", "Find the row, element and parameters of a tensor");
  std::string tensor_file;
  bool verbose = false;
  cl->add_option("file", tensor_file, "Decomposable tensor {\"x\",\"y\",\"z\"}")->required();
  cl->add_flag("--verbose", verbose, "Also list every row that matches");

  auto* vd = app.add_subcommand("verify-decomposition", "Check that a decomposition sums to T");
  std::string dec_file;
  vd->add_option("file", dec_file)->required();

  auto* os = app.add_subcommand("orbit-structure", "Orbit partition of a G-invariant decomposition");
  os->add_option("file", dec_file)->required();

  auto* pr = app.add_subcommand("profiles", "Multisets of orbit lengths");
  int max_len = 23;
  bool exact = false;
  pr->add_option("--max", max_len)->capture_default_str()->check(CLI::NonNegativeNumber);
  pr->add_flag("--exact", exact, "Require the sum to equal --max");

  auto* cs = app.add_subcommand("constraints", "Polynomial system of an orbit-sum ansatz");
  std::string rows_text, out_file, eval_file;
  std::vector<std::string> names_text;
  int cap = kDefaultCap;
  cs->add_option("--rows", rows_text, "Comma-separated row ids, e.g. 7,9")->required();
  cs->add_option("--names", names_text,
                 "Comma-separated variable names for each row, in order; repeated names are shared")
      ->take_all();
  cs->add_option("--out", out_file, "Write the system as JSON");
  cs->add_option("--cap", cap, "Largest allowed total orbit length")->capture_default_str();
  cs->add_option("--eval", eval_file, "JSON object of variable values; prints the residual");

  auto* in = app.add_subcommand("instantiate", "Write w_i at given parameters");
  int inst_row = 0;
  std::string params_text;
  in->add_option("--row", inst_row)->required()->check(CLI::Range(1, 44));
  in->add_option("--params", params_text, "Comma-separated rationals");
  in->add_option("--out", out_file);

  auto* sd = app.add_subcommand("standard-decomposition", "Write the 27-term decomposition");
  sd->add_option("--out", out_file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*vg) return emit(cmd_verify_group(seed, inject), json);
    if (*es) return emit(cmd_enumerate_subgroups(min_order), json);
    if (*si) {
      std::optional<std::string> k;
      if (!k_name.empty()) k = k_name;
      return emit(cmd_semiinvariants(k), json);
    }
    if (*vt) {
      std::optional<int> r;
      if (row) r = row;
      return emit(cmd_verify_table(r, seed), json);
    }
    if (*cl) return emit(cmd_classify(dec_from_json(read_json_file(tensor_file)), verbose), json);
    if (*vd)
      return emit(cmd_verify_decomposition(decomposition_from_json(read_json_file(dec_file))), json);
    if (*os)
      return emit(cmd_orbit_structure(decomposition_from_json(read_json_file(dec_file))), json);
    if (*pr) return emit(cmd_profiles(max_len, exact), json);
    if (*cs) {
      std::vector<RowSpec> specs;
      for (const auto& id : split(rows_text, ',')) {
        try {
          specs.push_back({std::stoi(id), {}});
        } catch (const std::logic_error&) {
          throw CodecError("bad row id '" + id + "'");
        }
        orbit_row(specs.back().row_id);
      }
      if (!names_text.empty()) {
        if (names_text.size() != specs.size())
          throw std::invalid_argument("--names must be given once per row");
        for (std::size_t k = 0; k < specs.size(); ++k) {
          specs[k].names = split(names_text[k], ',');
          if (static_cast<int>(specs[k].names.size()) != orbit_row(specs[k].row_id).param_count())
            throw std::invalid_argument("row " + std::to_string(specs[k].row_id) + " takes " +
                                        std::to_string(orbit_row(specs[k].row_id).param_count()) +
                                        " names");
        }
      }
      std::optional<std::map<std::string, Scalar>> values;
      if (!eval_file.empty()) values = values_from_json(read_json_file(eval_file));
      Json system;
      Report r = cmd_constraints(specs, cap, values, out_file.empty() ? nullptr : &system);
      if (!out_file.empty()) write_json_file(out_file, system);
      return emit(r, json);
    }
    if (*in) {
      std::vector<Scalar> params;
      if (!params_text.empty())
        for (const auto& p : split(params_text, ',')) params.emplace_back(parse_rational(p));
      Report r = cmd_instantiate(inst_row, params);
      if (!out_file.empty()) write_json_file(out_file, r.result["tensor"]);
      return emit(r, json);
    }
    if (*sd) {
      const Decomposition d = standard_decomposition();
      write_json_file(out_file, to_json(d));
      Report r;
      r.command = "standard-decomposition";
      r.result = {{"terms", d.size()}, {"file", out_file}};
      r.text = "wrote " + std::to_string(d.size()) + " terms to " + out_file + "\n";
      return emit(r, json);
    }
  } catch (const NoMatch& e) {
    return fail("no match", e.what(), 1, json);
  } catch (const PersistentDegeneracy& e) {
    return fail("persistent degeneracy", e.what(), 1, json);
  } catch (const NotInvariant& e) {
    return fail("not invariant", e.what(), 2, json);
  } catch (const CapExceeded& e) {
    return fail("cap exceeded", e.what(), 2, json);
  } catch (const MissingVariable& e) {
    return fail("missing variable", e.what(), 2, json);
  } catch (const SmallStabilizer& e) {
    return fail("small stabilizer", e.what(), 2, json);
  } catch (const CodecError& e) {
    return fail("bad input", e.what(), 2, json);
  } catch (const ZeroFactor& e) {
    return fail("zero factor", e.what(), 2, json);
  } catch (const std::ios_base::failure& e) {
    return fail("io", e.what(), 2, json);
  } catch (const std::exception& e) {
    return fail("error", e.what(), 2, json);
  }
  return 2;
}
