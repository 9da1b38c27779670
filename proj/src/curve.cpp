#include "monofib/curve.hpp"

#include "monofib/errors.hpp"

namespace monofib {

namespace {

[[noreturn]] void reject(const std::string& label, const std::string& why) {
  throw InputError("curve '" + label + "': " + why);
}

}  // namespace

std::optional<std::vector<int>> indicator_support(const SurfaceSpec& surface, const HomologyClass& hom) {
  check_dimension(surface, hom);
  if (!is_zero(symplectic_part(surface, hom))) return std::nullopt;
  std::vector<int> support;
  int sign = 0;
  for (int j = 0; j < surface.stored_boundary_classes(); ++j) {
    const Integer& c = hom(surface.delta(j));
    if (c == 0) continue;
    if (c != 1 && c != -1) return std::nullopt;
    const int s = c > 0 ? 1 : -1;
    if (sign != 0 && s != sign) return std::nullopt;
    sign = s;
    support.push_back(j);
  }
  if (support.empty()) return std::nullopt;
  return support;
}

void validate_curve(const Curve& curve) {
  const SurfaceSpec& s = curve.surface;
  if (curve.hom.size() != s.rank())
    reject(curve.label, "homology vector has length " + std::to_string(curve.hom.size()) + ", expected " +
                            std::to_string(s.rank()));
  if (!curve.cls.valid_for(s)) reject(curve.label, "class " + curve.cls.to_string() + " invalid on " + s.to_string());
  if (!is_essential(curve.hom)) reject(curve.label, "homologically trivial");

  if (!curve.cls.is_separating()) {
    if (is_zero(symplectic_part(s, curve.hom)))
      reject(curve.label, "non-separating curve must pair nontrivially with some class");
    if (content(curve.hom) != 1) reject(curve.label, "non-separating curve must have primitive homology");
    return;
  }
  auto support = indicator_support(s, curve.hom);
  if (!support) reject(curve.label, "separating curve must be +-(indicator of a proper set of boundary components)");
  const int other = static_cast<int>(support->size());
  const int implicit = s.boundary - other;
  const bool matches = (curve.cls.side_a.boundary == other && curve.cls.side_b.boundary == implicit) ||
                       (curve.cls.side_a.boundary == implicit && curve.cls.side_b.boundary == other);
  if (!matches) reject(curve.label, "boundary split of " + curve.cls.to_string() + " disagrees with homology");
}

Curve make_curve(const SurfaceSpec& surface, const CurveClass& cls, HomologyClass hom, std::string label) {
  Curve c{surface, cls, std::move(hom), std::move(label)};
  validate_curve(c);
  return c;
}

bool same_hom_up_to_sign(const HomologyClass& x, const HomologyClass& y) {
  if (x.size() != y.size()) return false;
  if (exactly_equal(x, y)) return true;
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (x(i) != -y(i)) return false;
  return true;
}

bool same_curve(const Curve& a, const Curve& b) {
  return a.surface == b.surface && a.cls == b.cls && same_hom_up_to_sign(a.hom, b.hom);
}

SeparatingSides separating_sides(const Curve& curve) {
  if (!curve.cls.is_separating()) throw InputError("curve '" + curve.label + "' is not separating");
  const SurfaceSpec& s = curve.surface;
  auto support = indicator_support(s, curve.hom);
  if (!support) throw InputError("curve '" + curve.label + "' has non-indicator homology");

  SeparatingSides out;
  out.on_implicit_side.assign(s.boundary, true);
  for (int j : *support) out.on_implicit_side[j] = false;
  const int implicit_count = s.boundary - static_cast<int>(support->size());
  if (curve.cls.side_a.boundary == implicit_count) {
    out.implicit_side = curve.cls.side_a;
    out.other_side = curve.cls.side_b;
  } else {
    out.implicit_side = curve.cls.side_b;
    out.other_side = curve.cls.side_a;
  }
  return out;
}

CurveClass separating_class(const SurfaceSpec& surface, const HomologyClass& hom, SideType implicit_side) {
  auto support = indicator_support(surface, hom);
  if (!support) throw InputError("homology is not a boundary indicator");
  SideType other{surface.genus - implicit_side.genus, static_cast<int>(support->size())};
  return CurveClass::separating(implicit_side, other);
}

}  // namespace monofib
