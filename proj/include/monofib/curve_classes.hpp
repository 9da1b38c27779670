#pragma once

#include "monofib/surface.hpp"

#include <compare>
#include <string>
#include <vector>

namespace monofib {

/// One complementary piece of a separating curve: its genus and the number
/// of boundary components of the ambient surface it contains.
struct SideType {
  int genus = 0;
  int boundary = 0;
  friend constexpr auto operator<=>(const SideType&, const SideType&) = default;
};

/// Homeomorphism class of a homologically essential simple closed curve.
///
/// Orientation-preserving homeomorphisms may permute boundary components, so a
/// separating class is the unordered pair of its two side types; it is stored
/// with side_a <= side_b. Every non-separating curve cuts F_{g,b} to
/// F_{g-1,b+2}, so those form a single class.
struct CurveClass {
  enum class Kind { NonSeparating, Separating };

  Kind kind = Kind::NonSeparating;
  SideType side_a{};
  SideType side_b{};

  static CurveClass nonseparating() { return {}; }
  /// Normalizes the pair; does not check essentiality (see valid_for).
  static CurveClass separating(SideType x, SideType y);

  bool is_separating() const { return kind == Kind::Separating; }
  bool valid_for(const SurfaceSpec& surface) const;
  std::string to_string() const;

  friend constexpr auto operator<=>(const CurveClass&, const CurveClass&) = default;
};

/// All classes of C_{g,b}, sorted (non-separating first, then by side pair).
std::vector<CurveClass> enumerate_classes(const SurfaceSpec& surface);

/// Closed form for #C_{g,b}:
///   g = 0:  floor(b/2)
///   g >= 1: floor((g*b - g + b)/2) + 1   (b >= 1),   1 for b = 0.
long class_count(const SurfaceSpec& surface);

}  // namespace monofib
