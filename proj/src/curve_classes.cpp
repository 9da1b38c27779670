#include "monofib/curve_classes.hpp"

#include <algorithm>

namespace monofib {

CurveClass CurveClass::separating(SideType x, SideType y) {
  if (y < x) std::swap(x, y);
  return CurveClass{Kind::Separating, x, y};
}

bool CurveClass::valid_for(const SurfaceSpec& surface) const {
  if (kind == Kind::NonSeparating) return surface.genus >= 1 && side_a == SideType{} && side_b == SideType{};
  // A side without boundary of F makes the curve null-homologous.
  return side_a.genus >= 0 && side_b.genus >= 0 && side_a.boundary >= 1 && side_b.boundary >= 1 &&
         side_a.genus + side_b.genus == surface.genus &&
         side_a.boundary + side_b.boundary == surface.boundary && !(side_b < side_a);
}

std::string CurveClass::to_string() const {
  if (kind == Kind::NonSeparating) return "nonsep";
  auto side = [](const SideType& s) {
    return "(" + std::to_string(s.genus) + "," + std::to_string(s.boundary) + ")";
  };
  return "sep{" + side(side_a) + "," + side(side_b) + "}";
}

std::vector<CurveClass> enumerate_classes(const SurfaceSpec& surface) {
  std::vector<CurveClass> out;
  if (surface.genus >= 1) out.push_back(CurveClass::nonseparating());
  for (int g1 = 0; g1 <= surface.genus; ++g1) {
    for (int b1 = 1; b1 < surface.boundary; ++b1) {
      SideType a{g1, b1};
      SideType b{surface.genus - g1, surface.boundary - b1};
      if (b < a) continue;
      out.push_back(CurveClass::separating(a, b));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

long class_count(const SurfaceSpec& surface) {
  const long g = surface.genus;
  const long b = surface.boundary;
  if (b == 0) return g >= 1 ? 1 : 0;
  if (g == 0) return b / 2;
  return (g * b - g + b) / 2 + 1;
}

}  // namespace monofib
