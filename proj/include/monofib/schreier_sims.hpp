#pragma once

#include "monofib/integer.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

namespace monofib {

using Point = std::uint64_t;

/// Stabilizer chain for a group acting faithfully on integer-labelled points.
///
/// `Action` supplies
///
///     using Element = ...;
///     Element identity() const;
///     Element multiply(const Element& a, const Element& b) const;   // a after b
///     Element inverse(const Element& a) const;
///     bool is_identity(const Element& a) const;
///     Point image(const Element& a, Point p) const;
///
/// Base points are taken from `base_candidates`, which must be a base for the
/// action: only the identity may fix all of them.
template <typename Action>
class StabilizerChain {
 public:
  using Element = typename Action::Element;

  StabilizerChain(Action action, std::vector<Point> base_candidates)
      : action_(std::move(action)), candidates_(std::move(base_candidates)) {}

  /// Deterministic Schreier-Sims: after this call the chain is complete and
  /// order() is the exact group order.
  void build(const std::vector<Element>& generators) {
    levels_.clear();
    for (const Element& g : generators) {
      if (action_.is_identity(g)) continue;
      auto [residue, depth] = strip(g, 0);
      if (!action_.is_identity(residue)) add_strong_generator(residue, depth);
    }
    std::size_t i = levels_.size();
    while (i > 0) {
      const std::size_t level = i - 1;
      bool verified = true;
      for (std::size_t k = 0; k < levels_[level].orbit.size() && verified; ++k) {
        const Point p = levels_[level].orbit[k];
        for (std::size_t s = 0; s < levels_[level].generators.size(); ++s) {
          const Element& gen = levels_[level].generators[s];
          const Point q = action_.image(gen, p);
          // u_q^{-1} * gen * u_p fixes the base point of this level.
          Element schreier = action_.multiply(levels_[level].inverse_at(q),
                                              action_.multiply(gen, levels_[level].transversal_at(p)));
          if (action_.is_identity(schreier)) continue;
          auto [residue, depth] = strip(schreier, level + 1);
          if (depth < levels_.size() || !action_.is_identity(residue)) {
            add_strong_generator(residue, depth);
            i = depth + 1;
            verified = false;
            break;
          }
        }
      }
      if (verified) --i;
    }
  }

  /// Randomized Schreier-Sims that stops once the chain reaches `target_order`
  /// or after `max_stall` consecutive random elements sift to the identity.
  /// The chain order is always a lower bound on the group order, so a `true`
  /// result proves the group has (at least) the target order.
  bool build_to_order(const std::vector<Element>& generators, const Integer& target_order,
                      std::uint64_t seed = 0x5eed, int max_stall = 64) {
    levels_.clear();
    std::vector<Element> state;
    for (const Element& g : generators)
      if (!action_.is_identity(g)) state.push_back(g);
    if (state.empty()) return target_order == 1;
    for (const Element& g : state) {
      auto [residue, depth] = strip(g, 0);
      if (!action_.is_identity(residue)) add_strong_generator(residue, depth);
    }
    if (order() >= target_order) return order() == target_order;

    std::mt19937_64 rng(seed);
    const std::size_t original = state.size();
    for (std::size_t k = 0; state.size() < 10; ++k) state.push_back(state[k % original]);
    Element accumulator = action_.identity();
    auto next_random = [&]() {
      std::uniform_int_distribution<std::size_t> pick(0, state.size() - 1);
      std::size_t a = pick(rng), b = pick(rng);
      while (b == a) b = pick(rng);
      state[a] = action_.multiply(state[a], state[b]);
      accumulator = action_.multiply(accumulator, state[a]);
      return accumulator;
    };
    for (int warm = 0; warm < 50; ++warm) next_random();

    int stall = 0;
    while (stall < max_stall) {
      auto [residue, depth] = strip(next_random(), 0);
      if (depth < levels_.size() || !action_.is_identity(residue)) {
        add_strong_generator(residue, depth);
        stall = 0;
        if (order() >= target_order) return order() == target_order;
      } else {
        ++stall;
      }
    }
    return false;
  }

  Integer order() const {
    Integer n(1);
    for (const Level& level : levels_) n *= static_cast<unsigned long>(level.orbit.size());
    return n;
  }

  bool contains(const Element& g) const {
    auto [residue, depth] = strip(g, 0);
    return depth == levels_.size() && action_.is_identity(residue);
  }

  std::size_t base_length() const { return levels_.size(); }
  Point base_point(std::size_t level) const { return levels_[level].base; }

 private:
  struct Level {
    Point base = 0;
    std::vector<Element> generators;
    std::vector<Point> orbit;
    std::unordered_map<Point, std::size_t> position;
    std::vector<Element> transversal;  // u_p with u_p(base) = p
    std::vector<Element> inverses;

    const Element& transversal_at(Point p) const { return transversal[position.at(p)]; }
    const Element& inverse_at(Point p) const { return inverses[position.at(p)]; }
  };

  // Sifts g through levels [from, end). Returns the residue and the level at
  // which sifting stopped (levels_.size() if it went all the way through).
  std::pair<Element, std::size_t> strip(Element g, std::size_t from) const {
    for (std::size_t l = from; l < levels_.size(); ++l) {
      const Point p = action_.image(g, levels_[l].base);
      auto it = levels_[l].position.find(p);
      if (it == levels_[l].position.end()) return {std::move(g), l};
      g = action_.multiply(levels_[l].inverses[it->second], g);
    }
    return {std::move(g), levels_.size()};
  }

  // Adds h (which fixes the base points of levels < depth) to every level up
  // to and including `depth`, extending the base if necessary.
  void add_strong_generator(const Element& h, std::size_t depth) {
    if (depth == levels_.size()) {
      Level fresh;
      fresh.base = moved_candidate(h);
      levels_.push_back(std::move(fresh));
    }
    for (std::size_t l = 0; l <= depth; ++l) {
      levels_[l].generators.push_back(h);
      recompute_orbit(levels_[l]);
    }
  }

  Point moved_candidate(const Element& h) const {
    for (Point p : candidates_)
      if (action_.image(h, p) != p) return p;
    throw std::logic_error("base candidates do not form a base for the action");
  }

  void recompute_orbit(Level& level) const {
    level.orbit.assign(1, level.base);
    level.position.clear();
    level.position.emplace(level.base, 0);
    level.transversal.assign(1, action_.identity());
    level.inverses.assign(1, action_.identity());
    for (std::size_t k = 0; k < level.orbit.size(); ++k) {
      for (const Element& gen : level.generators) {
        const Point q = action_.image(gen, level.orbit[k]);
        if (level.position.count(q)) continue;
        Element u = action_.multiply(gen, level.transversal[k]);
        level.position.emplace(q, level.orbit.size());
        level.orbit.push_back(q);
        level.inverses.push_back(action_.inverse(u));
        level.transversal.push_back(std::move(u));
      }
    }
  }

  Action action_;
  std::vector<Point> candidates_;
  std::vector<Level> levels_;
};

}  // namespace monofib
