#include "monofib/stabilization.hpp"

#include "monofib/errors.hpp"

#include <optional>

namespace monofib {

namespace {

void require_disk(const LefschetzFibration& f, const char* what) {
  if (!f.base.is_disk()) throw Unsupported(std::string(what) + " is implemented over the disk only");
}

// Separating curve class after the side containing the implicit component
// changed to `implicit_side`.
CurveClass reclassify(const SurfaceSpec& s, const HomologyClass& hom, SideType implicit_side) {
  return separating_class(s, hom, implicit_side);
}

std::optional<Curve> try_curve(const SurfaceSpec& s, const CurveClass& cls, HomologyClass hom, const std::string& label) {
  Curve c{s, cls, std::move(hom), label};
  if (!cls.valid_for(s)) return std::nullopt;
  try {
    validate_curve(c);
  } catch (const InputError&) {
    return std::nullopt;
  }
  return c;
}

// Mode A: one surviving curve under the choice (k, sign). `pair` is the handle
// index being removed, `partner` the surviving coordinate of that pair.
std::optional<Curve> map_curve_pair(const Curve& c, const SurfaceSpec& to, int pair, int partner, int k, int sign) {
  const SurfaceSpec& from = c.surface;
  const int b = from.boundary;
  HomologyClass hom = zero_vector<Integer>(to.rank());
  for (int i = 0, t = 0; i < from.genus; ++i) {
    if (i == pair) continue;
    hom(to.alpha(t)) = c.hom(from.alpha(i));
    hom(to.beta(t)) = c.hom(from.beta(i));
    ++t;
  }
  for (int m = 0; m + 1 < b; ++m) hom(to.delta(m)) = c.hom(from.delta(m));
  Integer last = sign * c.hom(partner);
  if (k + 1 < b) last += c.hom(from.delta(k));
  hom(to.delta(b - 1)) = last;

  if (!is_zero(symplectic_part(to, hom))) return try_curve(to, CurveClass::nonseparating(), hom, c.label);
  if (!indicator_support(to, hom)) return std::nullopt;
  if (!c.cls.is_separating()) {
    // was non-separating: all remaining genus is put on the side of the last component
    const int other_count = static_cast<int>(indicator_support(to, hom)->size());
    return try_curve(to, reclassify(to, hom, SideType{to.genus, to.boundary - other_count}), hom, c.label);
  }
  // With equally many boundary components on both sides the homology does not
  // say which side carries which genus; the handle goes to the side with more genus.
  const SeparatingSides sides = separating_sides(c);
  const bool k_on_implicit = sides.on_implicit_side[k];
  std::optional<std::pair<SideType, SideType>> best;
  auto consider = [&](SideType implicit, SideType other) {
    SideType& handle_side = k_on_implicit ? implicit : other;
    if (handle_side.genus < 1) return;
    const int current = best ? (k_on_implicit ? best->first : best->second).genus : -1;
    if (handle_side.genus <= current) return;
    best = {implicit, other};
  };
  consider(sides.implicit_side, sides.other_side);
  if (sides.implicit_side.boundary == sides.other_side.boundary)
    consider({sides.other_side.genus, sides.implicit_side.boundary}, {sides.implicit_side.genus, sides.other_side.boundary});
  if (!best) return std::nullopt;
  auto [implicit, other] = *best;
  SideType& handle_side = k_on_implicit ? implicit : other;
  handle_side.genus -= 1;
  handle_side.boundary += 1;
  return try_curve(to, CurveClass::separating(implicit, other), hom, c.label);
}

}  // namespace

LefschetzFibration stabilize(const LefschetzFibration& f, StabilizationMode mode, int sign) {
  require_disk(f, "stabilization");
  if (sign != 1 && sign != -1) throw InputError("stabilization sign must be +1 or -1");
  const SurfaceSpec& s = f.fiber;
  LefschetzFibration out;
  out.base = f.base;

  if (mode == StabilizationMode::BoundaryUp) {
    if (s.boundary < 1) throw InputError("boundary stabilization needs a fiber with boundary");
    const SurfaceSpec t = make_surface(s.genus, s.boundary + 1);
    out.fiber = t;
    for (const SignedCycle& c : f.cycles) {
      HomologyClass hom = zero_vector<Integer>(t.rank());
      hom.head(s.rank()) = c.curve.hom;
      CurveClass cls = c.curve.cls;
      if (cls.is_separating()) {
        SideType implicit = separating_sides(c.curve).implicit_side;
        implicit.boundary += 1;
        cls = reclassify(t, hom, implicit);
      }
      out.cycles.push_back({make_curve(t, cls, hom, c.curve.label), c.sign});
    }
    const CurveClass cls = CurveClass::separating({0, 1}, {s.genus, s.boundary});
    out.cycles.push_back({make_curve(t, cls, basis_class(t, t.delta(s.boundary - 1)), "s" + std::to_string(f.cycles.size() + 1)), sign});
    return out;
  }

  if (s.boundary < 2) throw InputError("genus stabilization needs at least two boundary components");
  const SurfaceSpec t = make_surface(s.genus + 1, s.boundary - 1);
  out.fiber = t;
  const int last_stored = s.boundary - 2;  // old delta_{b-1}, 0-based
  for (const SignedCycle& c : f.cycles) {
    HomologyClass hom = zero_vector<Integer>(t.rank());
    hom.head(2 * s.genus) = c.curve.hom.head(2 * s.genus);
    hom(t.beta(s.genus)) = c.curve.hom(s.delta(last_stored));
    for (int m = 0; m < last_stored; ++m) hom(t.delta(m)) = c.curve.hom(s.delta(m));
    CurveClass cls = CurveClass::nonseparating();
    if (c.curve.cls.is_separating() && c.curve.hom(s.delta(last_stored)) == 0) {
      SideType implicit = separating_sides(c.curve).implicit_side;
      implicit.genus += 1;
      implicit.boundary -= 1;
      cls = reclassify(t, hom, implicit);
    }
    out.cycles.push_back({make_curve(t, cls, hom, c.curve.label), c.sign});
  }
  out.cycles.push_back({make_curve(t, CurveClass::nonseparating(), basis_class(t, t.alpha(s.genus)),
                                   "s" + std::to_string(f.cycles.size() + 1)),
                        sign});
  return out;
}

LefschetzFibration destabilize(const LefschetzFibration& f, int generator) {
  require_disk(f, "destabilization");
  const SurfaceSpec& s = f.fiber;
  if (generator < 0 || generator >= s.rank())
    throw InputError("generator index " + std::to_string(generator) + " out of range for " + s.to_string());

  int hit = -1;
  for (std::size_t k = 0; k < f.cycles.size(); ++k) {
    const Integer& x = f.cycles[k].curve.hom(generator);
    if (x == 0) continue;
    if (hit >= 0 || (x != 1 && x != -1))
      throw NotApplicable("generator " + std::to_string(generator) + " is not met by exactly one cycle once");
    hit = static_cast<int>(k);
  }
  if (hit < 0) throw NotApplicable("generator " + std::to_string(generator) + " meets no cycle");

  if (s.is_delta_coordinate(generator)) {
    const int j = generator - 2 * s.genus;
    const SurfaceSpec t = make_surface(s.genus, s.boundary - 1);
    LefschetzFibration out{t, f.base, {}, {}};
    for (std::size_t k = 0; k < f.cycles.size(); ++k) {
      if (static_cast<int>(k) == hit) continue;
      const Curve& c = f.cycles[k].curve;
      HomologyClass hom(t.rank());
      for (int i = 0, r = 0; i < s.rank(); ++i)
        if (i != generator) hom(r++) = c.hom(i);
      CurveClass cls = c.cls;
      if (cls.is_separating()) {
        SideType implicit = separating_sides(c).implicit_side;
        implicit.boundary -= 1;
        if (!indicator_support(t, hom))
          throw NotApplicable("boundary component " + std::to_string(j + 1) + " cannot be merged away");
        cls = reclassify(t, hom, implicit);
      }
      auto curve = try_curve(t, cls, hom, c.label);
      if (!curve) throw NotApplicable("curve '" + c.label + "' does not survive removing boundary component " + std::to_string(j + 1));
      out.cycles.push_back({*curve, f.cycles[k].sign});
    }
    return out;
  }

  if (s.boundary < 1) throw NotApplicable("a closed fiber has no boundary to destabilize along");
  const int pair = generator / 2;
  const int partner = generator % 2 == 0 ? s.beta(pair) : s.alpha(pair);
  const SurfaceSpec t = make_surface(s.genus - 1, s.boundary + 1);
  std::vector<int> components{s.boundary - 1};
  for (int k = 0; k + 1 < s.boundary; ++k) components.push_back(k);
  for (int k : components) {
    for (int sign : {1, -1}) {
      LefschetzFibration out{t, f.base, {}, {}};
      bool ok = true;
      for (std::size_t m = 0; m < f.cycles.size() && ok; ++m) {
        if (static_cast<int>(m) == hit) continue;
        auto curve = map_curve_pair(f.cycles[m].curve, t, pair, partner, k, sign);
        if (!curve) ok = false;
        else out.cycles.push_back({*curve, f.cycles[m].sign});
      }
      if (ok) return out;
    }
  }
  throw NotApplicable("no consistent boundary assignment for generator " + std::to_string(generator));
}

ReduceResult reduce(const LefschetzFibration& f, int budget) {
  validate(f);
  ReduceResult r{f, {}, false};
  for (;;) {
    std::optional<LefschetzFibration> next;
    int gen = 0;
    for (; gen < r.fibration.fiber.rank() && !next; ++gen) {
      try {
        next = destabilize(r.fibration, gen);
      } catch (const NotApplicable&) {
      }
    }
    if (!next) return r;
    if (static_cast<int>(r.generators.size()) >= budget) {
      r.budget_exhausted = true;
      return r;
    }
    r.fibration = std::move(*next);
    r.generators.push_back(gen - 1);
  }
}

}  // namespace monofib
