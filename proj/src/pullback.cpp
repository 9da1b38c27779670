#include "monofib/pullback.hpp"

#include "monofib/errors.hpp"
#include "monofib/smith.hpp"

#include <map>
#include <optional>
#include <stdexcept>

namespace monofib {

bool MeridianPlan::orientation_preserving() const {
  for (const PlanEntry& e : entries)
    if (e.degree != 1) return false;
  return true;
}

MeridianPlan identity_plan(const LefschetzFibration& u) {
  MeridianPlan plan;
  for (std::size_t i = 0; i < u.cycles.size(); ++i) plan.entries.push_back({static_cast<int>(i), MCWord(u.fiber), 1});
  return plan;
}

LefschetzFibration pullback(const LefschetzFibration& u, const MeridianPlan& plan) {
  if (!u.base.is_disk()) throw InputError("pullback source must be a fibration over the disk");
  LefschetzFibration out{u.fiber, BaseSurface::disk(), {}, {}};
  for (std::size_t i = 0; i < plan.entries.size(); ++i) {
    const PlanEntry& e = plan.entries[i];
    if (e.source < 0 || e.source >= static_cast<int>(u.cycles.size()))
      throw InputError("plan entry " + std::to_string(i + 1) + ": source index out of range");
    if (e.degree != 1 && e.degree != -1) throw InputError("plan entry " + std::to_string(i + 1) + ": degree must be +-1");
    if (e.conjugator.surface != u.fiber)
      throw InputError("plan entry " + std::to_string(i + 1) + ": conjugator lives on another surface");
    const SignedCycle& src = u.cycles[e.source];
    SignedCycle c{act_on_curve(e.conjugator, src.curve), e.degree * src.sign};

    const IntMatrix w = evaluate(e.conjugator).matrix;
    const IntMatrix expected = w * twist_matrix(src.curve, handed_of(e.degree * src.sign)) * unimodular_inverse(w);
    if (!exactly_equal(cycle_matrix(c), expected))
      throw std::logic_error("pullback monodromy does not factor through the source");
    out.cycles.push_back(std::move(c));
  }
  return out;
}

namespace {

// Orientation-free key of a homology vector.
std::string hom_key(const HomologyClass& h) {
  int flip = 1;
  for (Eigen::Index i = 0; i < h.size(); ++i)
    if (h(i) != 0) {
      flip = h(i) < 0 ? -1 : 1;
      break;
    }
  std::string key;
  for (Eigen::Index i = 0; i < h.size(); ++i) key += Integer(flip * h(i)).str() + ",";
  return key;
}

struct OrbitEntry {
  MCWord word;
};

// All images of `start` under words of length <= depth, each with the first
// word (shortest, then lexicographic in the alphabet order) reaching it.
std::map<std::string, OrbitEntry> orbit(const Curve& start, const std::vector<Letter>& alphabet,
                                        const std::vector<IntMatrix>& letter_matrices, int depth) {
  std::map<std::string, OrbitEntry> seen;
  std::vector<std::pair<HomologyClass, MCWord>> frontier{{start.hom, MCWord(start.surface)}};
  seen.emplace(hom_key(start.hom), OrbitEntry{MCWord(start.surface)});
  for (int level = 0; level < depth && !frontier.empty(); ++level) {
    std::vector<std::pair<HomologyClass, MCWord>> next;
    for (const auto& [hom, word] : frontier) {
      for (std::size_t a = 0; a < alphabet.size(); ++a) {
        HomologyClass image = letter_matrices[a] * hom;
        std::string key = hom_key(image);
        if (seen.count(key)) continue;
        MCWord w(start.surface, {alphabet[a]});
        w = w * word;
        seen.emplace(key, OrbitEntry{w});
        next.push_back({std::move(image), std::move(w)});
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

WitnessResult substitution_witness(const LefschetzFibration& u, const LefschetzFibration& f, int depth) {
  if (u.fiber != f.fiber)
    throw InputError("fiber mismatch: " + u.fiber.to_string() + " vs " + f.fiber.to_string());
  if (!u.base.is_disk() || !f.base.is_disk()) throw InputError("witness search needs both fibrations over the disk");
  if (depth < 0) throw InputError("depth must be non-negative");

  std::vector<Letter> alphabet;
  std::vector<IntMatrix> matrices;
  for (const SignedCycle& c : u.cycles) {
    bool duplicate = false;
    for (const Letter& l : alphabet)
      if (same_curve(std::get<TwistGen>(l.gen).curve, c.curve)) duplicate = true;
    if (duplicate) continue;
    for (Handed h : {Handed::Right, Handed::Left}) {
      alphabet.push_back({TwistGen{c.curve, h}, false});
      matrices.push_back(twist_matrix(c.curve, h));
    }
  }

  std::vector<std::map<std::string, OrbitEntry>> orbits;
  for (const SignedCycle& c : u.cycles) orbits.push_back(orbit(c.curve, alphabet, matrices, depth));

  MeridianPlan plan;
  WitnessUnknown unknown;
  for (std::size_t i = 0; i < f.cycles.size(); ++i) {
    const SignedCycle& target = f.cycles[i];
    const std::string key = hom_key(target.curve.hom);
    std::optional<PlanEntry> found;
    for (int degree : {1, -1}) {
      // shortest conjugator first, then lowest source index
      for (std::size_t j = 0; j < u.cycles.size(); ++j) {
        if (u.cycles[j].sign * degree != target.sign) continue;
        if (u.cycles[j].curve.cls != target.curve.cls) continue;
        auto it = orbits[j].find(key);
        if (it == orbits[j].end()) continue;
        if (!found || it->second.word.length() < found->conjugator.length())
          found = PlanEntry{static_cast<int>(j), it->second.word, degree};
      }
      if (found) break;
    }
    if (found) plan.entries.push_back(*found);
    else unknown.unmatched.push_back(static_cast<int>(i));
  }
  if (!unknown.unmatched.empty()) return unknown;

  const LefschetzFibration check = pullback(u, plan);
  for (std::size_t i = 0; i < f.cycles.size(); ++i) {
    const SignedCycle& a = check.cycles[i];
    const SignedCycle& b = f.cycles[i];
    if (a.sign != b.sign || !same_curve(a.curve, b.curve))
      throw std::logic_error("witness failed its pullback round trip at cycle " + std::to_string(i + 1));
  }
  if (plan.orientation_preserving()) return ImmersionWitness{plan};
  return plan;
}

}  // namespace monofib
