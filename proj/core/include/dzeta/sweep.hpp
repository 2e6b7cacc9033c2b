#pragma once

/// @file sweep.hpp
/// Grid runner: per (curve, tuple) cell, derive the tower and run a battery of checks.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dzeta/mult_struct.hpp"
#include "dzeta/rh.hpp"

namespace dzeta {

/// positivity, rh, miracle, interlacing, ratio_bounds, beta_routes
const std::vector<std::string>& all_sweep_checks();

struct SweepConfig {
  std::vector<CurveSpec> curves;
  std::vector<std::vector<int>> tuples;
  std::vector<std::string> checks;  // empty means all
  RHNumericOptions rh;
  bool normalize = false;
  long product_cap = 64;
  int ratio_n_max = 8;
  int jobs = 1;
};

struct SweepCell {
  std::string curve;
  std::vector<int> tuple;
  std::optional<std::string> error;
  std::vector<std::pair<std::string, CheckStatus>> checks;  // in all_sweep_checks() order
  std::map<std::string, std::string> details;

  // Final level data.
  BigRat Q;
  int genus = 0;
  std::vector<BigRat> numerator;
  std::vector<BigRat> alphas;
  BigRat beta;
  bool positivity = false;
  std::vector<bool> level_positivity;  // one per tower level
  std::optional<RHVerdict> rh;
  std::optional<RHVerdict> rh_numeric_cross;  // genus 1 only
  std::vector<int> gamma_signs;
  int gamma_real_roots = 0;
  std::vector<int> gamma_interval_roots;
};

struct SweepReport {
  std::vector<SweepCell> cells;
  /// check name -> {pass, fail, unknown, skip} counts
  std::map<std::string, std::map<std::string, int>> summary;
  int errors = 0;

  bool any_failed() const;
};

/// Runs every (curve, tuple) cell, curves outermost. Cells are independent and run
/// on cfg.jobs threads; the report is ordered by cell index regardless of schedule.
SweepReport sweep(const SweepConfig& cfg);

/// Runs one cell; errors are captured in the cell.
SweepCell run_cell(const CurveSpec& curve, const std::vector<int>& tuple, const SweepConfig& cfg);

}  // namespace dzeta
