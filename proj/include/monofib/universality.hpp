#pragma once

#include "monofib/fibration.hpp"
#include "monofib/oracle.hpp"

#include <string>
#include <vector>

namespace monofib {

enum class Answer { Yes, No, Unknown };

std::string to_string(Answer a);

/// Conditions for u to be (strongly) universal:
///   cond_perm   the permutation monodromy is onto Sigma_b
///   cond_lef    the Lefschetz monodromy is onto the mapping class group (oracle)
///   cond2       every class of C_{g,b} occurs among the vanishing cycles
///   cond2strong every class occurs with both signs
struct UniversalityReport {
  bool cond_perm = false;
  SurjectivityVerdict cond_lef;
  bool cond2 = false;
  bool cond2strong = false;
  std::vector<CurveClass> missing;        // classes with no vanishing cycle
  std::vector<CurveClass> single_signed;  // classes realized with only one sign
  Answer universal = Answer::Unknown;
  Answer strongly_universal = Answer::Unknown;
};

/// "Yes" needs a Certified oracle verdict and the combinatorial conditions;
/// "No" needs a failed combinatorial condition or an Obstructed verdict.
UniversalityReport universality_report(const LefschetzFibration& u, const OracleOptions& options = {});

}  // namespace monofib
