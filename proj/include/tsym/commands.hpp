#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "tsym/codec.hpp"

namespace tsym {

/// Result of one CLI subcommand. exit_code is 0 when every check passed and
/// 1 when a verification failed; errors in the input surface as exceptions.
struct Report {
  std::string command;
  std::uint64_t seed = 0;
  Json result;
  std::string text;
  int exit_code = 0;
};

/// Hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& data);
/// {"command", "seed", "result", "exit_code", "digest"}; the digest covers the
/// compact dump of the other four fields.
Json report_json(const Report& r);
std::string render(const Report& r, bool json);

/// inject_fault flips the sign of gamma((12)) to exercise the failure path.
Report cmd_verify_group(std::uint64_t seed, bool inject_fault = false);
Report cmd_enumerate_subgroups(int min_order);
Report cmd_semiinvariants(const std::optional<std::string>& k);
Report cmd_verify_table(const std::optional<int>& row, std::uint64_t seed);
Report cmd_classify(const DecTensor& w, bool verbose);
Report cmd_verify_decomposition(const Decomposition& d);
Report cmd_orbit_structure(const Decomposition& d);
Report cmd_profiles(int max_len, bool exact);
/// The system itself goes to `system_out` (when non-null); the report holds
/// a summary and, when values are given, the residual.
Report cmd_constraints(const std::vector<RowSpec>& rows, int cap,
                       const std::optional<std::map<std::string, Scalar>>& values,
                       Json* system_out);
Report cmd_instantiate(int row, const std::vector<Scalar>& params);

}  // namespace tsym
