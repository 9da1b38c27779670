#include "monofib/catalog.hpp"
#include "monofib/errors.hpp"
#include "monofib/mapping_class.hpp"
#include "monofib/smith.hpp"
#include "support/random.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace monofib;
using monofib::testing::Gen;

namespace {

Curve basis_curve(const SurfaceSpec& s, int index, const std::string& label) {
  return make_curve(s, CurveClass::nonseparating(), basis_class(s, index), label);
}

// Size of the permutation group generated, by closure under composition.
std::size_t brute_perm_order(const std::vector<Permutation>& gens, int b) {
  std::set<std::vector<int>> seen{Permutation::identity(b).images()};
  std::vector<Permutation> queue{Permutation::identity(b)};
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (const Permutation& g : gens) {
      Permutation next = g * queue[k];
      if (seen.insert(next.images()).second) queue.push_back(next);
    }
  return queue.size();
}

}  // namespace

TEST_CASE("twist matrices on the torus") {
  const SurfaceSpec f11 = make_surface(1, 1);
  const Curve a = basis_curve(f11, f11.alpha(0), "a");
  const Curve b = basis_curve(f11, f11.beta(0), "b");

  const IntVector image = twist_matrix(a, Handed::Right) * b.hom;
  CHECK(image(0) == 1);
  CHECK(image(1) == 1);
  CHECK(exactly_equal(IntVector(twist_matrix(a, Handed::Right) * a.hom), a.hom));
  CHECK(exactly_equal(IntMatrix(twist_matrix(a, Handed::Right) * twist_matrix(a, Handed::Left)),
                      identity_matrix<Integer>(2)));

  const Curve moved = act_on_curve(twist_word(a), b);
  CHECK(moved.cls == CurveClass::nonseparating());
  CHECK(moved.hom(0) == 1);
  CHECK(moved.hom(1) == 1);
  CHECK(same_curve(act_on_curve(MCWord(f11), b), b));
}

TEST_CASE("(t_a t_b)^6 is trivial in homology") {
  const SurfaceSpec f11 = make_surface(1, 1);
  const Curve a = basis_curve(f11, f11.alpha(0), "a");
  const Curve b = basis_curve(f11, f11.beta(0), "b");
  MCWord w(f11);
  for (int k = 0; k < 6; ++k) w = w * twist_word(a) * twist_word(b);
  CHECK(exactly_equal(evaluate(w).matrix, identity_matrix<Integer>(2)));

  // 2x2 oracle: T_a = [[1,1],[0,1]], T_b = [[1,0],[-1,1]], product has order 6
  long m[2][2] = {{1, 1}, {0, 1}}, n[2][2] = {{1, 0}, {-1, 1}}, p[2][2], q[2][2] = {{1, 0}, {0, 1}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) p[i][j] = m[i][0] * n[0][j] + m[i][1] * n[1][j];
  int order = 0;
  do {
    long r[2][2];
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) r[i][j] = q[i][0] * p[0][j] + q[i][1] * p[1][j];
    std::copy(&r[0][0], &r[0][0] + 4, &q[0][0]);
    ++order;
  } while (!(q[0][0] == 1 && q[0][1] == 0 && q[1][0] == 0 && q[1][1] == 1));
  CHECK(order == 6);
  const IntMatrix ab = twist_matrix(a, Handed::Right) * twist_matrix(b, Handed::Right);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(ab(i, j) == p[i][j]);
}

TEST_CASE("evaluation is a homomorphism and preserves the pairing") {
  Gen gen(23);
  for (int trial = 0; trial < 200; ++trial) {
    const SurfaceSpec s = gen.surface(8);
    std::vector<Curve> curves;
    for (int k = 0; k < 4; ++k) curves.push_back(gen.curve(s));
    const MCWord w1 = gen.word(s, curves, 6), w2 = gen.word(s, curves, 6);
    const HomPermRep r = evaluate(w1 * w2);
    CHECK(exactly_equal(r.matrix, IntMatrix(evaluate(w1).matrix * evaluate(w2).matrix)));
    CHECK(preserves_pairing(s, r.matrix));
    CHECK(r.perm.is_identity());
    CHECK(exactly_equal(evaluate(w1 * w1.inverse()).matrix, identity_matrix<Integer>(s.rank())));
    for (const Curve& c : curves) {
      const Curve moved = act_on_curve(w1, c);
      CHECK(moved.cls == c.cls);
      CHECK(exactly_equal(moved.hom, IntVector(evaluate(w1).matrix * c.hom)));
      if (!c.cls.is_separating()) CHECK(content(moved.hom) == 1);
    }
  }
  CHECK(exactly_equal(evaluate(MCWord(make_surface(2, 1))).matrix, identity_matrix<Integer>(4)));
}

TEST_CASE("words must share one surface") {
  const SurfaceSpec f11 = make_surface(1, 1), f21 = make_surface(2, 1);
  const Curve a = basis_curve(f11, 0, "a");
  const Curve b = basis_curve(f21, 0, "b");
  MCWord mixed(f11, {Letter{TwistGen{a, Handed::Right}, false}, Letter{TwistGen{b, Handed::Right}, false}});
  CHECK_THROWS_AS(evaluate(mixed), InputError);
  CHECK_THROWS_AS(act_on_curve(twist_word(a), b), InputError);
}

TEST_CASE("bundle generators permuting boundary components") {
  const SurfaceSpec f04 = make_surface(0, 4);
  // swap delta_1 and delta_2
  IntMatrix m = zero_matrix<Integer>(3, 3);
  m(0, 1) = 1;
  m(1, 0) = 1;
  m(2, 2) = 1;
  const BundleGen swap{m, Permutation::from_cycles(4, {{1, 2}}), "s"};
  CHECK_NOTHROW(validate_bundle_gen(swap, f04));
  HomologyClass h(3);
  h << 1, 1, 0;
  const Curve c = make_curve(f04, CurveClass::separating({0, 2}, {0, 2}), h, "c");
  const Curve moved = act_on_curve(MCWord(f04, {Letter{swap, false}}), c);
  CHECK(moved.cls == c.cls);
  CHECK(same_curve(moved, c));
  const HomPermRep r = evaluate(MCWord(f04, {Letter{swap, false}, Letter{swap, true}}));
  CHECK(r.perm.is_identity());

  const BundleGen wrong{m, Permutation::identity(4), "w"};
  CHECK_THROWS_AS(validate_bundle_gen(wrong, f04), InputError);
}

TEST_CASE("symmetric group surjectivity") {
  CHECK(perm_group_surjective(std::vector{Permutation::from_cycles(2, {{1, 2}})}, 2));
  CHECK_FALSE(perm_group_surjective(std::vector{Permutation::from_cycles(3, {{1, 2, 3}})}, 3));
  CHECK(perm_group_surjective(
      std::vector{Permutation::from_cycles(3, {{1, 2}}), Permutation::from_cycles(3, {{1, 2, 3}})}, 3));
  CHECK(perm_group_surjective(std::vector<Permutation>{}, 1));
  CHECK_FALSE(perm_group_surjective(std::vector<Permutation>{}, 2));
  CHECK_THROWS_AS(perm_group_surjective(std::vector<Permutation>{}, 11), CapacityError);
  CHECK_THROWS_AS(perm_group_surjective(std::vector<Permutation>{}, 0), InputError);
}

TEST_CASE("surjectivity agrees with brute-force closure") {
  Gen gen(29);
  for (int trial = 0; trial < 150; ++trial) {
    const int b = gen.uniform(1, 5);
    std::vector<Permutation> gens;
    const int k = gen.uniform(0, 3);
    for (int i = 0; i < k; ++i) {
      std::vector<int> images(b);
      for (int j = 0; j < b; ++j) images[j] = j;
      std::shuffle(images.begin(), images.end(), gen.engine());
      gens.push_back(Permutation(images));
    }
    std::size_t factorial = 1;
    for (int j = 2; j <= b; ++j) factorial *= j;
    CHECK(perm_group_surjective(gens, b) == (brute_perm_order(gens, b) == factorial));
  }
}

TEST_CASE("catalog chains") {
  for (const SurfaceSpec& s : {make_surface(1, 0), make_surface(1, 1), make_surface(2, 1), make_surface(3, 1),
                               make_surface(5, 1)}) {
    const Catalog cat = wajnryb_catalog(s);
    CHECK(static_cast<int>(cat.curves.size()) == (s.genus == 1 ? 2 : 2 * s.genus + 1));
    for (const Curve& c : cat.curves) CHECK_FALSE(c.cls.is_separating());
    for (const Curve& x : cat.curves)
      for (const Curve& y : cat.curves) {
        if (x.label >= y.label) continue;
        bool adjacent = false;
        for (const auto& [p, q] : cat.chain_edges)
          if ((p == x.label && q == y.label) || (p == y.label && q == x.label)) adjacent = true;
        CAPTURE(x.label);
        CAPTURE(y.label);
        const Integer i = pairing(s, x.hom, y.hom);
        CHECK((adjacent ? (i == 1 || i == -1) : i == 0));
      }
    IntMatrix span(s.rank(), cat.curves.size());
    for (std::size_t k = 0; k < cat.curves.size(); ++k) span.col(k) = cat.curves[k].hom;
    const auto coker = cokernel_invariants(span);
    CHECK(coker.free_rank == s.rank() - 2 * s.genus);
    CHECK(coker.torsion.empty());
  }
  CHECK_THROWS_AS(wajnryb_catalog(make_surface(2, 2)), InputError);
}
