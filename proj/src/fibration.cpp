#include "monofib/fibration.hpp"

#include "monofib/catalog.hpp"
#include "monofib/errors.hpp"
#include "monofib/smith.hpp"

#include <algorithm>

namespace monofib {

std::string BaseSurface::to_string() const {
  return "S_{" + std::to_string(genus) + "," + std::to_string(boundary) + "}";
}

int LefschetzFibration::positive_count() const {
  return static_cast<int>(std::count_if(cycles.begin(), cycles.end(), [](const SignedCycle& c) { return c.sign > 0; }));
}

int LefschetzFibration::negative_count() const { return static_cast<int>(cycles.size()) - positive_count(); }

void validate(const LefschetzFibration& f) {
  if (f.fiber.genus < 0 || f.fiber.boundary < 0) throw InputError("fiber genus and boundary must be non-negative");
  if (f.base.genus < 0 || f.base.boundary < 1) throw InputError("base must have genus >= 0 and boundary >= 1");
  for (std::size_t k = 0; k < f.cycles.size(); ++k) {
    const SignedCycle& c = f.cycles[k];
    if (c.sign != 1 && c.sign != -1) throw InputError("cycle " + std::to_string(k + 1) + ": sign must be +1 or -1");
    if (c.curve.surface != f.fiber)
      throw InputError("cycle " + std::to_string(k + 1) + ": curve does not live on the fiber");
    validate_curve(c.curve);
  }
  if (static_cast<int>(f.bundle.size()) != f.base.free_loop_count())
    throw InputError("base " + f.base.to_string() + " needs " + std::to_string(f.base.free_loop_count()) +
                     " bundle generators, got " + std::to_string(f.bundle.size()));
  for (const BundleGen& b : f.bundle) validate_bundle_gen(b, f.fiber);
}

LefschetzFibration make_fibration(SurfaceSpec fiber, BaseSurface base, std::vector<SignedCycle> cycles,
                                  std::vector<BundleGen> bundle) {
  LefschetzFibration f{fiber, base, std::move(cycles), std::move(bundle)};
  validate(f);
  return f;
}

namespace {

LefschetzFibration from_catalog(const SurfaceSpec& s, const std::vector<std::pair<std::string, int>>& sequence) {
  const Catalog cat = wajnryb_catalog(s);
  std::vector<SignedCycle> cycles;
  for (const auto& [label, sign] : sequence) cycles.push_back({cat.curve(label), sign});
  return make_fibration(s, BaseSurface::disk(), std::move(cycles));
}

}  // namespace

LefschetzFibration build_u_g1(int genus) {
  if (genus < 2) throw InputError("u_g1 needs g >= 2");
  std::vector<std::pair<std::string, int>> seq{{"b1", -1}, {"b2", 1}};
  for (int i = 1; i <= genus; ++i) seq.push_back({"a" + std::to_string(i), 1});
  for (int i = 1; i < genus; ++i) seq.push_back({"c" + std::to_string(i), i == 1 ? -1 : 1});
  return from_catalog(make_surface(genus, 1), seq);
}

LefschetzFibration build_u_11() { return from_catalog(make_surface(1, 1), {{"a", 1}, {"b", -1}}); }

LefschetzFibration build_u_10() { return from_catalog(make_surface(1, 0), {{"a", 1}, {"b", -1}}); }

LefschetzFibration build_p_g(int genus) {
  if (genus < 1) throw InputError("p_g needs g >= 1");
  const SurfaceSpec s = make_surface(genus, 1);
  std::vector<std::pair<std::string, int>> seq;
  for (const Curve& c : wajnryb_catalog(s).curves) seq.push_back({c.label, 1});
  return from_catalog(s, seq);
}

LefschetzFibration build(const std::string& name, int genus) {
  if (name == "u_g1") return build_u_g1(genus);
  if (name == "u_11") return build_u_11();
  if (name == "u_10") return build_u_10();
  if (name == "p_g") return build_p_g(genus);
  throw InputError("unknown fibration '" + name + "' (expected u_g1, u_11, u_10 or p_g)");
}

InvariantReport total_space_invariants(const LefschetzFibration& f) {
  if (!f.base.is_disk()) throw Unsupported("total space invariants are implemented over the disk only");
  const SurfaceSpec& s = f.fiber;
  const Eigen::Index n = static_cast<Eigen::Index>(f.cycles.size());
  const Eigen::Index extra = s.boundary == 0 ? 1 : 0;
  IntMatrix boundary = zero_matrix<Integer>(s.rank(), n + extra);
  for (Eigen::Index k = 0; k < n; ++k) boundary.col(k) = f.cycles[k].curve.hom;

  auto snf = smith_normal_form(boundary);
  InvariantReport r;
  r.euler = s.euler() + static_cast<int>(n);
  r.h1_free_rank = static_cast<long>(boundary.rows() - snf.rank);
  for (const Integer& d : snf.invariant_factors())
    if (d != 1) r.h1_torsion.push_back(d);
  r.h2_rank = static_cast<long>(boundary.cols() - snf.rank);
  r.positive = f.positive_count();
  r.negative = f.negative_count();
  r.allowable = std::all_of(f.cycles.begin(), f.cycles.end(),
                            [](const SignedCycle& c) { return is_essential(c.curve.hom); });
  return r;
}

IntMatrix cycle_matrix(const SignedCycle& c) { return twist_matrix(c.curve, handed_of(c.sign)); }

IntMatrix monodromy_product(const LefschetzFibration& f) {
  IntMatrix p = identity_matrix<Integer>(f.fiber.rank());
  for (const SignedCycle& c : f.cycles) p = p * cycle_matrix(c);
  return p;
}

LefschetzFibration hurwitz_move(const LefschetzFibration& f, int i, HurwitzDirection direction) {
  const int n = static_cast<int>(f.cycles.size());
  if (i < 0 || i + 1 >= n)
    throw InputError("Hurwitz move index " + std::to_string(i + 1) + " out of range for " + std::to_string(n) +
                     " cycles");
  LefschetzFibration out = f;
  const SignedCycle& x = f.cycles[i];
  const SignedCycle& y = f.cycles[i + 1];
  if (direction == HurwitzDirection::Right) {
    const IntMatrix m = twist_matrix(y.curve, handed_of(-y.sign));
    out.cycles[i] = y;
    out.cycles[i + 1] = {act_on_curve(m, x.curve, x.curve.label), x.sign};
  } else {
    const IntMatrix m = twist_matrix(x.curve, handed_of(x.sign));
    out.cycles[i] = {act_on_curve(m, y.curve, y.curve.label), y.sign};
    out.cycles[i + 1] = x;
  }
  return out;
}

LefschetzFibration global_conjugate(const LefschetzFibration& f, const MCWord& w) {
  if (w.surface != f.fiber) throw InputError("conjugating word lives on another surface");
  const HomPermRep rep = evaluate(w);
  const IntMatrix inv = unimodular_inverse(rep.matrix);
  LefschetzFibration out = f;
  for (SignedCycle& c : out.cycles) c.curve = act_on_curve(w, c.curve);
  for (BundleGen& b : out.bundle) {
    b.matrix = rep.matrix * b.matrix * inv;
    b.perm = rep.perm * b.perm * rep.perm.inverse();
  }
  return out;
}

}  // namespace monofib
