#include "monofib/errors.hpp"
#include "monofib/pullback.hpp"
#include "support/random.hpp"

#include <doctest.h>

using namespace monofib;
using monofib::testing::Gen;

namespace {

bool reproduces(const LefschetzFibration& a, const LefschetzFibration& b) {
  if (a.fiber != b.fiber || a.cycles.size() != b.cycles.size()) return false;
  for (std::size_t k = 0; k < a.cycles.size(); ++k)
    if (a.cycles[k].sign != b.cycles[k].sign || !same_curve(a.cycles[k].curve, b.cycles[k].curve)) return false;
  return true;
}

std::vector<Curve> cycle_curves(const LefschetzFibration& f) {
  std::vector<Curve> out;
  for (const SignedCycle& c : f.cycles) out.push_back(c.curve);
  return out;
}

}  // namespace

TEST_CASE("identity plan") {
  const auto u = build_u_g1(2);
  const auto p = pullback(u, identity_plan(u));
  CHECK(reproduces(p, u));
  for (std::size_t k = 0; k < u.cycles.size(); ++k) CHECK(p.cycles[k].curve.label == u.cycles[k].curve.label);
}

TEST_CASE("local degree -1 flips the sign") {
  const auto u = build_u_11();
  MeridianPlan plan = identity_plan(u);
  plan.entries[0].degree = -1;
  const auto p = pullback(u, plan);
  CHECK(p.cycles[0].sign == -1);
  CHECK(p.cycles[1].sign == -1);
  CHECK(same_curve(p.cycles[0].curve, u.cycles[0].curve));
}

TEST_CASE("invalid plans") {
  const auto u = build_u_11();
  MeridianPlan plan = identity_plan(u);
  plan.entries[1].source = 5;
  CHECK_THROWS_AS(pullback(u, plan), InputError);
  plan = identity_plan(u);
  plan.entries[0].degree = 0;
  CHECK_THROWS_AS(pullback(u, plan), InputError);
  plan = identity_plan(u);
  plan.entries[0].conjugator = MCWord(make_surface(2, 1));
  CHECK_THROWS_AS(pullback(u, plan), InputError);
}

TEST_CASE("conjugated plans reproduce global conjugation") {
  Gen gen(53);
  const auto u = build_u_g1(2);
  for (int trial = 0; trial < 50; ++trial) {
    const MCWord w = gen.word(u.fiber, cycle_curves(u), 3);
    MeridianPlan plan = identity_plan(u);
    for (PlanEntry& e : plan.entries) e.conjugator = w;
    CHECK(reproduces(pullback(u, plan), global_conjugate(u, w)));
  }
}

TEST_CASE("plan conjugators compose like mapping classes") {
  Gen gen(59);
  const auto u = build_u_g1(3);
  for (int trial = 0; trial < 50; ++trial) {
    MeridianPlan inner, outer, both;
    for (std::size_t k = 0; k < u.cycles.size(); ++k) {
      const MCWord v = gen.word(u.fiber, cycle_curves(u), 3);
      const MCWord w = gen.word(u.fiber, cycle_curves(u), 3);
      const int src = gen.uniform(0, static_cast<int>(u.cycles.size()) - 1);
      inner.entries.push_back({src, v, 1});
      outer.entries.push_back({static_cast<int>(k), w, 1});
      both.entries.push_back({src, w * v, 1});
    }
    const auto step = pullback(u, inner);
    CHECK(reproduces(pullback(step, outer), pullback(u, both)));
  }
}

TEST_CASE("witness search basics") {
  const auto u = build_u_g1(2);
  const auto same = substitution_witness(u, u);
  REQUIRE(std::holds_alternative<ImmersionWitness>(same));
  for (const PlanEntry& e : std::get<ImmersionWitness>(same).plan.entries) CHECK(e.conjugator.length() == 0);

  CHECK_THROWS_AS(substitution_witness(u, build_u_g1(3)), InputError);

  // a repeated cycle is drawn twice from the same source
  const auto u11 = build_u_11();
  const auto target = make_fibration(u11.fiber, BaseSurface::disk(), {{u11.cycles[0].curve, 1}, {u11.cycles[0].curve, 1}});
  CHECK(std::holds_alternative<ImmersionWitness>(substitution_witness(u11, target)));
}

TEST_CASE("sign mismatch yields a plan with a reversed disk") {
  // u has a single negative cycle; an all-positive target forces degree -1
  const SurfaceSpec f11 = make_surface(1, 1);
  const Curve a = make_curve(f11, CurveClass::nonseparating(), basis_class(f11, 0), "a");
  const auto u = make_fibration(f11, BaseSurface::disk(), {{a, -1}});
  const auto f = make_fibration(f11, BaseSurface::disk(), {{a, 1}});
  const auto w = substitution_witness(u, f);
  REQUIRE(std::holds_alternative<MeridianPlan>(w));
  CHECK(std::get<MeridianPlan>(w).entries[0].degree == -1);

  // nothing of the right class at all
  const SurfaceSpec f12 = make_surface(1, 2);
  const Curve n = make_curve(f12, CurveClass::nonseparating(), basis_class(f12, 0), "n");
  const Curve d = make_curve(f12, CurveClass::separating({0, 1}, {1, 1}), basis_class(f12, 2), "d");
  const auto v = substitution_witness(make_fibration(f12, BaseSurface::disk(), {{n, 1}}),
                                      make_fibration(f12, BaseSurface::disk(), {{d, 1}}));
  REQUIRE(std::holds_alternative<WitnessUnknown>(v));
  CHECK(std::get<WitnessUnknown>(v).unmatched == std::vector{0});
}

TEST_CASE("witnesses for conjugated targets are found at depth 3") {
  Gen gen(61);
  const auto u = build_u_g1(2);
  for (int trial = 0; trial < 20; ++trial) {
    const MCWord w = gen.word(u.fiber, cycle_curves(u), 3);
    const auto target = global_conjugate(u, w);
    const auto result = substitution_witness(u, target, 3);
    REQUIRE(std::holds_alternative<ImmersionWitness>(result));
    const auto& plan = std::get<ImmersionWitness>(result).plan;
    CHECK(reproduces(pullback(u, plan), target));
    for (const PlanEntry& e : plan.entries) CHECK(e.conjugator.length() <= 3);
  }
}
