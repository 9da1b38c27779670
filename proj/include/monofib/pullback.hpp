#pragma once

#include "monofib/fibration.hpp"

#include <variant>
#include <vector>

namespace monofib {

/// Target cycle i is the image of source cycle `source` under `conjugator`,
/// met with local degree `degree` (+1, or -1 for an orientation-reversing disk).
struct PlanEntry {
  int source = 0;
  MCWord conjugator;
  int degree = 1;
};

/// Combinatorial u-regular map of the disk: one immersed meridian per target cycle.
struct MeridianPlan {
  std::vector<PlanEntry> entries;

  bool orientation_preserving() const;
};

/// A plan with every local degree +1.
struct ImmersionWitness {
  MeridianPlan plan;
};

struct WitnessUnknown {
  std::vector<int> unmatched;  // target cycle indices with no match within depth
};

using WitnessResult = std::variant<MeridianPlan, ImmersionWitness, WitnessUnknown>;

MeridianPlan identity_plan(const LefschetzFibration& u);

/// Pulls u back along the plan: cycle i = (conjugator_i(c_{j_i}), degree_i * e_{j_i}).
/// Checks at matrix level that each new meridian twist equals the conjugated
/// source twist raised to the local degree. Throws InputError for invalid plans.
LefschetzFibration pullback(const LefschetzFibration& u, const MeridianPlan& plan);

/// Searches, for every cycle of f, a source cycle of u and a conjugator word of
/// length <= depth over the twists (both hands) about the cycles of u, in
/// breadth-first lexicographic order. Sources with matching sign are exhausted
/// before sign-reversed ones. Every returned plan reproduces f cycle by cycle
/// (class, unoriented homology, sign) under pullback.
WitnessResult substitution_witness(const LefschetzFibration& u, const LefschetzFibration& f, int depth = 4);

}  // namespace monofib
