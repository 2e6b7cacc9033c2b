#pragma once

/// @file derived.hpp
/// The derivation step that builds the next zeta level from the current one.

#include <vector>

#include "dzeta/curves.hpp"

namespace dzeta {

using Composition = std::vector<int>;

/// All compositions of total, ordered by number of parts, then lexicographically.
/// compositions(0) is the single empty composition.
std::vector<Composition> compositions(int total);

struct SpecialValues {
  BigRat Q;
  BigRat zeta1;                 // residue at T = 1
  std::vector<BigRat> values;   // values[k] = zeta-hat(k), k >= 1; values[0] unused
  std::vector<BigRat> vhats;    // vhats[N] = prod_{k<=N} values[k], vhats[0] = 1

  int depth() const { return static_cast<int>(vhats.size()) - 1; }
};

SpecialValues special_values(const ZetaLevel& z, int n_max);

/// prod v_{k_i} / prod_j (1 - Q^{k_j + k_{j+1}}); 1 for the empty composition.
BigRat composition_weight(const Composition& k, const SpecialValues& sv);

/// Sum of composition_weight over compositions of t whose last part is j, for
/// 1 <= j <= t <= t_max. Indexed [t][j]. Reversal leaves weights unchanged, so this
/// also groups by first part.
std::vector<std::vector<BigRat>> grouped_weights(const SpecialValues& sv, int t_max);

/// Next level with tuple z.tuple + [n] and Q = z.Q^n. Throws InconsistencyError
/// ("derivation inconsistency") if the result fails validation.
ZetaLevel derive_step(const ZetaLevel& z, int n);

/// Same result, summing every (a, k, l) term as a separate reduced RatFunc.
/// Exponential in n; kept as an independent reference.
ZetaLevel derive_step_naive(const ZetaLevel& z, int n);

/// Divides the zeta by alpha(0) = P(0) and records the constant.
ZetaLevel normalize_level(const ZetaLevel& z);

/// Levels for each prefix of tuple (the base is not included).
std::vector<ZetaLevel> derive_tower(const ZetaLevel& base, const std::vector<int>& tuple, bool normalize);
std::vector<ZetaLevel> derive_tower(const CurveSpec& c, const std::vector<int>& tuple, bool normalize);

}  // namespace dzeta
