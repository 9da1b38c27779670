#pragma once

#include "monofib/fibration.hpp"

#include <random>
#include <vector>

namespace monofib::testing {

/// Seeded generators for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }
  int sign() { return coin() ? 1 : -1; }

  IntMatrix matrix(int rows, int cols, int bound) {
    IntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = uniform(-bound, bound);
    return m;
  }

  IntVector vector(int n, int bound) {
    IntVector v(n);
    for (int i = 0; i < n; ++i) v(i) = uniform(-bound, bound);
    return v;
  }

  SurfaceSpec surface(int max_rank) {
    for (;;) {
      SurfaceSpec s = make_surface(uniform(0, 4), uniform(0, 5));
      if (s.rank() >= 1 && s.rank() <= max_rank && !enumerate_classes(s).empty()) return s;
    }
  }

  /// A non-separating curve: random primitive vector with nonzero symplectic part.
  Curve nonseparating(const SurfaceSpec& s, int bound = 2) {
    for (;;) {
      HomologyClass h = vector(s.rank(), bound);
      if (is_zero(symplectic_part(s, h)) || content(h) != 1) continue;
      return make_curve(s, CurveClass::nonseparating(), h, "n" + std::to_string(counter_++));
    }
  }

  /// A separating curve around a random proper nonempty set of boundary
  /// components, with a random split of the genus.
  Curve separating(const SurfaceSpec& s) {
    std::vector<int> stored;
    for (;;) {
      stored.clear();
      for (int j = 0; j + 1 < s.boundary; ++j)
        if (coin()) stored.push_back(j);
      if (!stored.empty()) break;
    }
    HomologyClass h = zero_vector<Integer>(s.rank());
    const int orient = sign();
    for (int j : stored) h(s.delta(j)) = orient;
    const int g_other = uniform(0, s.genus);
    const SideType other{g_other, static_cast<int>(stored.size())};
    const SideType implicit{s.genus - g_other, s.boundary - other.boundary};
    return make_curve(s, CurveClass::separating(implicit, other), h, "s" + std::to_string(counter_++));
  }

  Curve curve(const SurfaceSpec& s) {
    const bool can_sep = s.boundary >= 2;
    const bool can_nonsep = s.genus >= 1;
    if (can_sep && (!can_nonsep || uniform(0, 3) == 0)) return separating(s);
    return nonseparating(s);
  }

  LefschetzFibration fibration(const SurfaceSpec& s, int max_cycles) {
    LefschetzFibration f{s, BaseSurface::disk(), {}, {}};
    const int n = uniform(0, max_cycles);
    for (int k = 0; k < n; ++k) f.cycles.push_back({curve(s), sign()});
    return f;
  }

  /// Random word in twists about the given curves.
  MCWord word(const SurfaceSpec& s, const std::vector<Curve>& curves, int max_length) {
    MCWord w(s);
    if (curves.empty()) return w;
    const int n = uniform(0, max_length);
    for (int k = 0; k < n; ++k) {
      const Curve& c = curves[uniform(0, static_cast<int>(curves.size()) - 1)];
      w.letters.push_back({TwistGen{c, coin() ? Handed::Right : Handed::Left}, coin()});
    }
    return w;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
  int counter_ = 0;
};

}  // namespace monofib::testing
