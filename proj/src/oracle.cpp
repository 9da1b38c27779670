#include "monofib/oracle.hpp"

#include "monofib/catalog.hpp"
#include "monofib/errors.hpp"

#include <set>

namespace monofib {

namespace {

using ModPVector = std::vector<int>;

ModPVector to_mod_p(const IntVector& v, int p) {
  ModPVector out(v.size());
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    long long r = (v(k) % p).convert_to<long long>();
    out[k] = static_cast<int>(r < 0 ? r + p : r);
  }
  return out;
}

// Orbit of the vectors under the conjugating matrices and their inverses (mod p).
std::vector<ModPVector> conjugation_orbit(std::vector<ModPVector> seeds, const std::vector<ModPMatrix>& mats, int p) {
  std::set<ModPVector> seen(seeds.begin(), seeds.end());
  std::vector<ModPVector> queue(seen.begin(), seen.end());
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (const ModPMatrix& m : mats) {
      Eigen::VectorXi v = Eigen::Map<const Eigen::VectorXi>(queue[k].data(), queue[k].size());
      Eigen::VectorXi w = m * v;
      ModPVector next(w.size());
      for (Eigen::Index i = 0; i < w.size(); ++i) next[i] = ((w(i) % p) + p) % p;
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return queue;
}

bool certified_by_catalog(std::span<const TwistGen> twists, const SurfaceSpec& surface) {
  if (!has_catalog(surface)) return false;
  for (const Curve& needed : wajnryb_catalog(surface).curves) {
    bool found = false;
    for (const TwistGen& t : twists)
      if (same_curve(t.curve, needed)) found = true;
    if (!found) return false;
  }
  return true;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Certified: return "certified";
    case Verdict::Obstructed: return "obstructed";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

SurjectivityVerdict mcg_surjectivity_oracle(std::span<const TwistGen> twists, const SurfaceSpec& surface,
                                            const OracleOptions& options,
                                            std::span<const IntMatrix> conjugators) {
  for (const TwistGen& t : twists) {
    if (t.curve.surface != surface) throw InputError("twist curve lives on another surface");
    validate_curve(t.curve);
  }
  SurjectivityVerdict out;

  if (surface.genus == 0 && surface.boundary <= 1) {
    out.verdict = Verdict::Certified;
    out.reason = "mapping class group of " + surface.to_string() + " is trivial";
    return out;
  }
  if (certified_by_catalog(twists, surface)) {
    out.verdict = Verdict::Certified;
    out.reason = surface.genus == 1 ? "contains the twist generators a, b"
                                    : "contains the " + std::to_string(2 * surface.genus + 1) +
                                          " standard chain twist generators";
    return out;
  }
  if (twists.empty()) {
    out.verdict = Verdict::Obstructed;
    out.reason = "no Dehn twists, but the mapping class group of " + surface.to_string() + " is nontrivial";
    return out;
  }

  std::string skipped;
  if (surface.genus >= 1) {
    const int dim = surface.symplectic_rank();
    for (int p : options.primes) {
      std::uint64_t points = 1;
      bool too_big = false;
      for (int k = 0; k < dim && !too_big; ++k) {
        points *= static_cast<std::uint64_t>(p);
        too_big = points > options.max_points;
      }
      if (too_big) {
        skipped += (skipped.empty() ? "" : ",") + std::to_string(p);
        continue;
      }
      std::vector<ModPVector> seeds;
      for (const TwistGen& t : twists) seeds.push_back(to_mod_p(symplectic_part(surface, t.curve.hom), p));
      std::vector<ModPMatrix> mats;
      for (const IntMatrix& m : conjugators) {
        if (m.rows() != surface.rank()) throw InputError("conjugator has the wrong size");
        const IntMatrix block = m.topLeftCorner(dim, dim);
        mats.push_back(reduce_mod_p(block, p));
        // inverse on the symplectic quotient: -J A^T J
        IntMatrix j = pairing_form(make_surface(surface.genus, 0));
        mats.push_back(reduce_mod_p(IntMatrix(-(j * block.transpose() * j)), p));
      }
      std::vector<ModPMatrix> gens;
      for (const ModPVector& v : conjugation_orbit(seeds, mats, p)) {
        IntVector iv(v.size());
        for (std::size_t k = 0; k < v.size(); ++k) iv(k) = v[k];
        gens.push_back(transvection_mod_p(iv, p));
      }
      ModPClosure closure = symplectic_closure_mod_p(surface.genus, p, gens, options.max_points);
      out.closures.push_back(closure);
      if (!closure.generates) {
        out.verdict = Verdict::Obstructed;
        out.reason = "homology image mod " + std::to_string(p) + " has order " + closure.order.str() +
                     " < |Sp(" + std::to_string(dim) + ", F_" + std::to_string(p) + ")| = " + closure.full_order.str();
        return out;
      }
    }
  }
  out.verdict = Verdict::Unknown;
  out.reason = "no generating-set certificate and no finite obstruction";
  if (!skipped.empty()) out.reason += " (primes skipped for size: " + skipped + ")";
  return out;
}

}  // namespace monofib
