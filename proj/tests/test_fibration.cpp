#include "monofib/errors.hpp"
#include "monofib/fibration.hpp"
#include "monofib/smith.hpp"
#include "support/random.hpp"

#include <doctest.h>

using namespace monofib;
using monofib::testing::Gen;

namespace {

bool same_cycles(const LefschetzFibration& a, const LefschetzFibration& b) {
  if (a.fiber != b.fiber || a.cycles.size() != b.cycles.size()) return false;
  for (std::size_t k = 0; k < a.cycles.size(); ++k) {
    if (a.cycles[k].sign != b.cycles[k].sign) return false;
    if (a.cycles[k].curve.cls != b.cycles[k].curve.cls) return false;
    if (!exactly_equal(a.cycles[k].curve.hom, b.cycles[k].curve.hom)) return false;
  }
  return true;
}

std::vector<int> signs(const LefschetzFibration& f) {
  std::vector<int> out;
  for (const SignedCycle& c : f.cycles) out.push_back(c.sign);
  return out;
}

}  // namespace

TEST_CASE("named fibrations") {
  const auto u11 = build_u_11();
  CHECK(u11.fiber == make_surface(1, 1));
  CHECK(signs(u11) == std::vector{1, -1});

  const auto u31 = build_u_g1(3);
  CHECK(u31.fiber == make_surface(3, 1));
  CHECK(signs(u31) == std::vector{-1, 1, 1, 1, 1, -1, 1});

  const auto p2 = build_p_g(2);
  CHECK(p2.fiber == make_surface(2, 1));
  CHECK(signs(p2) == std::vector{1, 1, 1, 1, 1});

  CHECK(build_u_10().fiber == make_surface(1, 0));
  CHECK(build("u_g1", 4).cycles.size() == 9);
  CHECK_THROWS_AS(build_u_g1(1), InputError);
  CHECK_THROWS_AS(build_p_g(0), InputError);
  CHECK_THROWS_AS(build("u_99", 2), InputError);
  for (const auto& f : {u11, u31, p2, build_u_10()}) {
    CHECK(f.base.is_disk());
    CHECK(f.bundle.empty());
  }
}

TEST_CASE("total space invariants") {
  // B^4
  const InvariantReport u11 = total_space_invariants(build_u_11());
  CHECK(u11.euler == 1);
  CHECK(u11.h1_free_rank == 0);
  CHECK(u11.h1_torsion.empty());
  CHECK(u11.h2_rank == 0);
  CHECK(u11.positive == 1);
  CHECK(u11.negative == 1);

  // B^4 with one 2-handle
  const InvariantReport u31 = total_space_invariants(build_u_g1(3));
  CHECK(u31.euler == 2);
  CHECK(u31.h1_free_rank == 0);
  CHECK(u31.h1_torsion.empty());
  CHECK(u31.h2_rank == 1);

  // closed fiber: the fiber 2-cell adds a zero column
  const InvariantReport u10 = total_space_invariants(build_u_10());
  CHECK(u10.euler == 2);
  CHECK(u10.h1_free_rank == 0);
  CHECK(u10.h2_rank == 1);

  const InvariantReport empty = total_space_invariants(make_fibration(make_surface(0, 1), BaseSurface::disk(), {}));
  CHECK(empty.euler == 1);
  CHECK(empty.h1_free_rank == 0);
  CHECK(empty.h2_rank == 0);

  // F_{0,2} with a doubled boundary cycle: H_1 = 0, one relation between the two handles
  const SurfaceSpec f02 = make_surface(0, 2);
  const Curve d = make_curve(f02, CurveClass::separating({0, 1}, {0, 1}), basis_class(f02, 0), "d");
  const InvariantReport twice = total_space_invariants(make_fibration(f02, BaseSurface::disk(), {{d, 1}, {d, -1}}));
  CHECK(twice.euler == 2);
  CHECK(twice.h2_rank == 1);

  LefschetzFibration annular = build_u_11();
  annular.base = BaseSurface::annulus();
  CHECK_THROWS_AS(total_space_invariants(annular), Unsupported);
}

TEST_CASE("fibration validation") {
  LefschetzFibration f = build_u_11();
  f.cycles[0].sign = 2;
  CHECK_THROWS_AS(validate(f), InputError);
  f = build_u_11();
  f.base = BaseSurface::annulus();
  CHECK_THROWS_AS(validate(f), InputError);  // needs one bundle generator
  f.base = {0, 0};
  CHECK_THROWS_AS(validate(f), InputError);
}

TEST_CASE("Hurwitz moves") {
  const auto u11 = build_u_11();
  // R at 1: (a, b^-) -> (b^-, t_b(a)) and t_b(a) = a + <b, a> b = a - b
  const auto r = hurwitz_move(u11, 0, HurwitzDirection::Right);
  CHECK(r.cycles[0].curve.label == "b");
  CHECK(r.cycles[0].sign == -1);
  CHECK(r.cycles[1].sign == 1);
  CHECK(r.cycles[1].curve.hom(0) == 1);
  CHECK(r.cycles[1].curve.hom(1) == -1);
  CHECK(same_cycles(hurwitz_move(r, 0, HurwitzDirection::Left), u11));
  CHECK(exactly_equal(monodromy_product(r), monodromy_product(u11)));

  // disjoint curves are simply transposed
  const SurfaceSpec f21 = make_surface(2, 1);
  const Curve a1 = make_curve(f21, CurveClass::nonseparating(), basis_class(f21, f21.alpha(0)), "a1");
  const Curve a2 = make_curve(f21, CurveClass::nonseparating(), basis_class(f21, f21.alpha(1)), "a2");
  const auto f = make_fibration(f21, BaseSurface::disk(), {{a1, 1}, {a2, -1}});
  const auto g = hurwitz_move(f, 0, HurwitzDirection::Left);
  CHECK(g.cycles[0].curve.label == "a2");
  CHECK(exactly_equal(g.cycles[0].curve.hom, a2.hom));
  CHECK(exactly_equal(g.cycles[1].curve.hom, a1.hom));

  CHECK_THROWS_AS(hurwitz_move(u11, 1, HurwitzDirection::Right), InputError);
  CHECK_THROWS_AS(hurwitz_move(u11, -1, HurwitzDirection::Right), InputError);
}

TEST_CASE("global conjugation") {
  const auto u = build_u_g1(2);
  CHECK(same_cycles(global_conjugate(u, MCWord(u.fiber)), u));
  const MCWord w = twist_word(u.cycles[2].curve) * twist_word(u.cycles[4].curve, Handed::Left);
  const auto back = global_conjugate(global_conjugate(u, w), w.inverse());
  CHECK(same_cycles(back, u));
  CHECK(total_space_invariants(global_conjugate(u, w)) == total_space_invariants(u));
}

TEST_CASE("Hurwitz moves and conjugation keep the invariants and the monodromy") {
  Gen gen(43);
  for (int trial = 0; trial < 300; ++trial) {
    const SurfaceSpec s = gen.surface(8);
    LefschetzFibration f = gen.fibration(s, 10);
    const InvariantReport report = total_space_invariants(f);
    const IntMatrix product = monodromy_product(f);
    IntMatrix conjugator = identity_matrix<Integer>(s.rank());
    std::vector<Curve> curves;
    for (const SignedCycle& c : f.cycles) curves.push_back(c.curve);
    const int steps = gen.uniform(0, 20);
    for (int k = 0; k < steps; ++k) {
      if (f.cycles.size() >= 2 && gen.coin()) {
        const int i = gen.uniform(0, static_cast<int>(f.cycles.size()) - 2);
        f = hurwitz_move(f, i, gen.coin() ? HurwitzDirection::Left : HurwitzDirection::Right);
      } else {
        const MCWord w = gen.word(s, curves, 3);
        f = global_conjugate(f, w);
        conjugator = evaluate(w).matrix * conjugator;
      }
    }
    CHECK(total_space_invariants(f) == report);
    // P' = W P W^{-1}
    CHECK(exactly_equal(IntMatrix(monodromy_product(f) * conjugator), IntMatrix(conjugator * product)));
  }
}
