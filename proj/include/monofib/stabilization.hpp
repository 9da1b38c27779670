#pragma once

#include "monofib/fibration.hpp"

#include <vector>

namespace monofib {

enum class StabilizationMode { GenusUp, BoundaryUp };

/// Attaches a 1-handle to the fiber and appends a vanishing cycle crossing it
/// once. Over the disk only (bundle values would need extending).
///
/// BoundaryUp, F_{g,b} -> F_{g,b+1} (b >= 1): both feet on the last boundary
/// component, which splits in two. Old coordinates embed unchanged and a new
/// stored class delta_b is appended; the new cycle is +delta_b.
///
/// GenusUp, F_{g,b} -> F_{g+1,b-1} (b >= 2): one foot on each of the last two
/// boundary components, which merge. The new handle pair (alpha_{g+1},
/// beta_{g+1}) is inserted after the old pairs, the old delta_{b-1} becomes
/// beta_{g+1}, and the new cycle is alpha_{g+1}.
LefschetzFibration stabilize(const LefschetzFibration& f, StabilizationMode mode, int sign);

/// Removes the single cycle meeting coordinate `generator` with coefficient +-1
/// (every other cycle must have coefficient 0 there). Throws NotApplicable when
/// this homological criterion fails or no consistent re-coordinatization exists.
///
/// alpha/beta generator: the handle pair is dropped and its partner becomes a
/// new boundary class, F_{g,b} -> F_{g-1,b+1}. The split boundary component k
/// and the orientation s of the partner are searched in the order (k = last
/// component, s = +1), (last, -1), (1, +1), (1, -1), ...; the first choice that
/// keeps every surviving curve valid is used. New coordinates are
///   delta'_m = d_m (m < b),  delta'_b = s * x_partner + d_k (d_b := 0).
///
/// delta generator: its coordinate is deleted and that boundary component
/// merges with the last one, F_{g,b} -> F_{g,b-1}.
LefschetzFibration destabilize(const LefschetzFibration& f, int generator);

struct ReduceResult {
  LefschetzFibration fibration;
  std::vector<int> generators;  // generator used at each step, in the fiber of that step
  bool budget_exhausted = false;
};

/// Greedy destabilization: at each step the lowest applicable generator index
/// is used, until nothing applies or `budget` steps were taken.
ReduceResult reduce(const LefschetzFibration& f, int budget = 64);

}  // namespace monofib
