#pragma once

#include "monofib/mapping_class.hpp"
#include "monofib/symplectic_mod_p.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace monofib {

enum class Verdict { Certified, Obstructed, Unknown };

std::string to_string(Verdict v);

struct SurjectivityVerdict {
  Verdict verdict = Verdict::Unknown;
  std::string reason;
  std::vector<ModPClosure> closures;  // every mod-p closure that was computed
};

struct OracleOptions {
  std::vector<int> primes{2, 3, 5};
  std::uint64_t max_points = 20000;  // skip primes with p^{2g} above this
};

/// Three-verdict test of whether the twists generate the mapping class group.
///
/// Certified needs a generating-set certificate (trivial group, or all curves
/// of the standard catalog present up to orientation). Obstructed needs a
/// finite witness: the homology images generate a proper subgroup of
/// Sp(2g, F_p) for some configured prime, or there are no twists at all on a
/// surface with nontrivial mapping class group. Anything else is Unknown.
///
/// `conjugators` are bundle monodromy matrices; the twist set is closed under
/// conjugation by them before the mod-p test, which keeps the obstruction
/// sound over bases with free loops.
SurjectivityVerdict mcg_surjectivity_oracle(std::span<const TwistGen> twists, const SurfaceSpec& surface,
                                            const OracleOptions& options = {},
                                            std::span<const IntMatrix> conjugators = {});

}  // namespace monofib
