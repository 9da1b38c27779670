#include "monofib/universality.hpp"

namespace monofib {

std::string to_string(Answer a) {
  switch (a) {
    case Answer::Yes: return "yes";
    case Answer::No: return "no";
    case Answer::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

Answer combine(bool conditions, Verdict lef) {
  if (!conditions || lef == Verdict::Obstructed) return Answer::No;
  return lef == Verdict::Certified ? Answer::Yes : Answer::Unknown;
}

}  // namespace

UniversalityReport universality_report(const LefschetzFibration& u, const OracleOptions& options) {
  validate(u);
  UniversalityReport r;
  const SurfaceSpec& s = u.fiber;

  if (s.boundary <= 1) {
    r.cond_perm = true;
  } else {
    std::vector<Permutation> perms;
    for (const BundleGen& b : u.bundle) perms.push_back(b.perm);
    r.cond_perm = perm_group_surjective(perms, s.boundary);
  }

  std::vector<TwistGen> twists;
  for (const SignedCycle& c : u.cycles) twists.push_back({c.curve, handed_of(c.sign)});
  std::vector<IntMatrix> conjugators;
  for (const BundleGen& b : u.bundle) conjugators.push_back(b.matrix);
  r.cond_lef = mcg_surjectivity_oracle(twists, s, options, conjugators);

  for (const CurveClass& cls : enumerate_classes(s)) {
    bool pos = false, neg = false;
    for (const SignedCycle& c : u.cycles)
      if (c.curve.cls == cls) (c.sign > 0 ? pos : neg) = true;
    if (!pos && !neg) r.missing.push_back(cls);
    else if (!pos || !neg) r.single_signed.push_back(cls);
  }
  r.cond2 = r.missing.empty();
  r.cond2strong = r.cond2 && r.single_signed.empty();
  r.universal = combine(r.cond_perm && r.cond2, r.cond_lef.verdict);
  r.strongly_universal = combine(r.cond_perm && r.cond2strong, r.cond_lef.verdict);
  return r;
}

}  // namespace monofib
