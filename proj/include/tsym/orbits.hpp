#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "tsym/orbit_table.hpp"
#include "tsym/subgroups.hpp"

namespace tsym {

struct NoMatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PersistentDegeneracy : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SmallStabilizer : std::domain_error {
  using std::domain_error::domain_error;
};

/// {g : dec_canon(g w) = dec_canon(w)}.
Subgroup stabilizer(const DecTensor& w);
/// {dec_canon(g w) : g in G}.
std::set<DecTensor> orbit(const DecTensor& w);

/// The row's tensor at the given parameters. Throws std::invalid_argument on
/// a wrong parameter count and ZeroFactor when a factor vanishes.
DecTensor row_instantiate(int id, const std::vector<Scalar>& params);

/// Standard representative H_i of a row.
const Subgroup& row_subgroup(int id);

struct RowAttempt {
  std::vector<long> params;
  int stabilizer_order = 0;
  bool contains_h = false;
  bool equals_h = false;
  int orbit_length = 0;
};

struct RowReport {
  int id = 0;
  std::uint64_t seed = 0;
  std::vector<RowAttempt> attempts;
  bool passed = false;
};

inline constexpr int kMaxDraws = 5;

/// Draws distinct parameters from 1..9 and checks stabilizer = H_i (setwise)
/// and orbit length l_i. Redraws while the stabilizer strictly contains H_i;
/// throws PersistentDegeneracy when all kMaxDraws draws are degenerate.
/// A stabilizer not containing H_i fails immediately.
RowReport verify_row(int id, std::uint64_t seed);

struct Classification {
  int row_id = 0;
  GElem g;
  std::vector<Scalar> params;
  Scalar global_scale;
  /// Every row matching for some g, ascending; filled when requested.
  std::vector<int> matching_rows;
};

/// Finds (g, i, params, s) with g w = s * w_i(params), sweeping g in element
/// order and, for each g, the rows with g St(w) g^{-1} = H_i in ascending
/// order. Throws SmallStabilizer when |St(w)| < 8 and NoMatch when nothing
/// fits.
Classification classify(const DecTensor& w, bool collect_all = false);

/// Tries a single (row, element) candidate; exposed for tests.
std::optional<Classification> match_row(const OrbitRow& row, const DecTensor& gw);

}  // namespace tsym
