#pragma once

#include "monofib/integer.hpp"

#include <algorithm>
#include <compare>
#include <string>

namespace monofib {

/// Compact connected oriented surface F_{g,b}.
///
/// First homology is modelled on the ordered basis
///
///     (alpha_1, beta_1, ..., alpha_g, beta_g, delta_1, ..., delta_{b-1})
///
/// with <alpha_i, beta_i> = +1 and every other basis pairing zero. delta_j is
/// the j-th boundary component with its boundary orientation; the last boundary
/// component delta_b is not stored and equals -(delta_1 + ... + delta_{b-1}).
/// Every module in the library uses this convention.
struct SurfaceSpec {
  int genus = 0;
  int boundary = 0;

  constexpr int rank() const { return 2 * genus + std::max(boundary - 1, 0); }
  constexpr int euler() const { return 2 - 2 * genus - boundary; }
  constexpr int symplectic_rank() const { return 2 * genus; }
  constexpr int stored_boundary_classes() const { return std::max(boundary - 1, 0); }

  /// Coordinate indices (handle i and boundary j are 0-based).
  constexpr int alpha(int i) const { return 2 * i; }
  constexpr int beta(int i) const { return 2 * i + 1; }
  constexpr int delta(int j) const { return 2 * genus + j; }
  constexpr bool is_delta_coordinate(int k) const { return k >= 2 * genus && k < rank(); }

  friend constexpr auto operator<=>(const SurfaceSpec&, const SurfaceSpec&) = default;

  std::string to_string() const;
};

/// Throws InputError on negative genus or boundary count.
SurfaceSpec make_surface(int genus, int boundary);

using HomologyClass = IntVector;

/// Skew-symmetric intersection matrix J with x . y = x^T J y.
template <typename Scalar = Integer>
Matrix<Scalar> pairing_form(const SurfaceSpec& surface) {
  Matrix<Scalar> j = zero_matrix<Scalar>(surface.rank(), surface.rank());
  for (int i = 0; i < surface.genus; ++i) {
    j(surface.alpha(i), surface.beta(i)) = Scalar(1);
    j(surface.beta(i), surface.alpha(i)) = Scalar(-1);
  }
  return j;
}

/// Algebraic intersection number. Throws InputError on dimension mismatch.
Integer pairing(const SurfaceSpec& surface, const HomologyClass& x, const HomologyClass& y);

/// Homologically essential means nonzero in H_1.
bool is_essential(const HomologyClass& x);

HomologyClass basis_class(const SurfaceSpec& surface, int index);

/// Class of boundary component j in 0..b-1 (the last one expands to -sum).
HomologyClass boundary_class(const SurfaceSpec& surface, int component);

/// Coordinates on the alpha/beta block (the image in H_1 modulo boundary classes).
HomologyClass symplectic_part(const SurfaceSpec& surface, const HomologyClass& x);

void check_dimension(const SurfaceSpec& surface, const HomologyClass& x);

}  // namespace monofib
