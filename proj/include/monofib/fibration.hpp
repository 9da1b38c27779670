#pragma once

#include "monofib/mapping_class.hpp"

#include <string>
#include <vector>

namespace monofib {

/// Compact base surface of genus h with d >= 1 boundary components. Its
/// fundamental group outside the critical values needs l = 2h + d - 1 free
/// loops beyond the meridians.
struct BaseSurface {
  int genus = 0;
  int boundary = 1;

  int free_loop_count() const { return 2 * genus + boundary - 1; }
  bool is_disk() const { return genus == 0 && boundary == 1; }
  std::string to_string() const;

  static BaseSurface disk() { return {0, 1}; }
  static BaseSurface annulus() { return {0, 2}; }

  friend bool operator==(const BaseSurface&, const BaseSurface&) = default;
};

struct SignedCycle {
  Curve curve;
  int sign = 1;  // +1 right-handed (positive singular point), -1 left-handed
};

inline Handed handed_of(int sign) { return sign > 0 ? Handed::Right : Handed::Left; }

/// Achiral allowable Lefschetz fibration given by its monodromy: vanishing
/// cycles in the order of a Hurwitz system, and one bundle monodromy value per
/// free loop of the base.
struct LefschetzFibration {
  SurfaceSpec fiber;
  BaseSurface base;
  std::vector<SignedCycle> cycles;
  std::vector<BundleGen> bundle;

  int positive_count() const;
  int negative_count() const;
};

/// Throws InputError naming the first violated invariant.
void validate(const LefschetzFibration& f);

LefschetzFibration make_fibration(SurfaceSpec fiber, BaseSurface base, std::vector<SignedCycle> cycles,
                                  std::vector<BundleGen> bundle = {});

/// Universal fibrations over the disk, built from the twist catalog:
///   u_g1 (g >= 2): (b1^-, b2, a1, ..., ag, c1^-, c2, ..., c_{g-1}) on F_{g,1}
///   u_11:          (a, b^-) on F_{1,1}
///   u_10:          (a, b^-) on F_{1,0}
///   p_g (g >= 1):  the catalog sequence of F_{g,1}, all positive
LefschetzFibration build_u_g1(int genus);
LefschetzFibration build_u_11();
LefschetzFibration build_u_10();
LefschetzFibration build_p_g(int genus);

/// Dispatch by name ("u_g1", "u_11", "u_10", "p_g"); `genus` is ignored by
/// the fixed-genus constructors. Throws InputError for unknown names or genus.
LefschetzFibration build(const std::string& name, int genus = 0);

struct InvariantReport {
  int euler = 0;
  long h1_free_rank = 0;
  std::vector<Integer> h1_torsion;
  long h2_rank = 0;
  int positive = 0;
  int negative = 0;
  bool allowable = true;

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

/// Homological invariants of the total space over the disk, read off the
/// handle decomposition: one 2-handle per vanishing cycle attached along its
/// homology class (plus the fiber 2-cell when the fiber is closed).
/// Throws Unsupported for other bases.
InvariantReport total_space_invariants(const LefschetzFibration& f);

/// Signed twist matrix of one cycle.
IntMatrix cycle_matrix(const SignedCycle& c);

/// Ordered product M_1 * ... * M_n of the signed twist matrices.
IntMatrix monodromy_product(const LefschetzFibration& f);

enum class HurwitzDirection { Left, Right };

/// Elementary transformation at positions (i, i+1), i 0-based:
///   R: (c_i, c_{i+1}) -> (c_{i+1}, t_{c_{i+1}}^{-e_{i+1}}(c_i))
///   L: (c_i, c_{i+1}) -> (t_{c_i}^{e_i}(c_{i+1}), c_i)
/// Signs travel with their curves; moved curves keep their labels, so L and R
/// at the same index undo each other exactly.
LefschetzFibration hurwitz_move(const LefschetzFibration& f, int i, HurwitzDirection direction);

/// Applies w to every vanishing cycle and conjugates the bundle values by w.
LefschetzFibration global_conjugate(const LefschetzFibration& f, const MCWord& w);

}  // namespace monofib
