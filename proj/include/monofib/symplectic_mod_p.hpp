#pragma once

#include "monofib/surface.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <vector>

namespace monofib {

/// Matrices over F_p acting on F_p^{2g}, entries kept in [0, p).
using ModPMatrix = Eigen::MatrixXi;

/// |Sp(2g, F_p)| = p^{g^2} * prod_{i=1..g} (p^{2i} - 1).
Integer symplectic_group_order(int genus, int p);

/// Transvection x -> x + <v, x> v on F_p^{2g}; v is given in alpha/beta coordinates.
ModPMatrix transvection_mod_p(const IntVector& v, int p);

/// Reduction mod p of an integer matrix.
ModPMatrix reduce_mod_p(const IntMatrix& m, int p);

struct ModPClosure {
  int prime = 0;
  Integer order;       // order of the generated subgroup
  Integer full_order;  // |Sp(2g, F_p)|
  bool generates = false;
};

/// Order of the subgroup of Sp(2g, F_p) generated by `generators`, decided
/// exactly: a randomized chain that reaches |Sp| proves generation, otherwise
/// a deterministic Schreier-Sims computes the exact (smaller) order.
/// Throws CapacityError when p^{2g} exceeds `max_points`.
ModPClosure symplectic_closure_mod_p(int genus, int p, const std::vector<ModPMatrix>& generators,
                                     std::uint64_t max_points = 20000);

}  // namespace monofib
