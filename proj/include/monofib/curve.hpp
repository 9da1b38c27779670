#pragma once

#include "monofib/curve_classes.hpp"
#include "monofib/surface.hpp"

#include <optional>
#include <string>
#include <vector>

namespace monofib {

/// A simple closed curve at (class, homology) resolution.
///
/// Curves are unoriented: `hom` is one of the two orientations and every
/// comparison treats hom and -hom as the same curve.
struct Curve {
  SurfaceSpec surface;
  CurveClass cls;
  HomologyClass hom;
  std::string label;
};

/// Validates and returns the curve; throws InputError naming the violated
/// invariant. Only allowable (homologically essential) curves exist.
Curve make_curve(const SurfaceSpec& surface, const CurveClass& cls, HomologyClass hom, std::string label);

void validate_curve(const Curve& curve);

bool same_hom_up_to_sign(const HomologyClass& x, const HomologyClass& y);

/// Same class and same unoriented homology; labels are ignored.
bool same_curve(const Curve& a, const Curve& b);

/// If `hom` is +-(0/1 indicator) on the boundary block with zero symplectic
/// part, the stored boundary indices in its support.
std::optional<std::vector<int>> indicator_support(const SurfaceSpec& surface, const HomologyClass& hom);

/// The two sides of a separating curve. The last (implicit) boundary component
/// always lies on `implicit_side`. When both sides have the same number of
/// boundary components the genus assignment cannot be read off the homology;
/// the implicit side then takes the smaller of the two side types.
struct SeparatingSides {
  std::vector<bool> on_implicit_side;  // indexed by boundary component 0..b-1
  SideType implicit_side;
  SideType other_side;
};

SeparatingSides separating_sides(const Curve& curve);

/// Class of a separating curve given the side containing the implicit component.
CurveClass separating_class(const SurfaceSpec& surface, const HomologyClass& hom, SideType implicit_side);

}  // namespace monofib
