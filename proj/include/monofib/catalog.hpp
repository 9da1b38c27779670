#pragma once

#include "monofib/curve.hpp"

#include <string>
#include <utility>
#include <vector>

namespace monofib {

/// Curves whose Dehn twists generate the mapping class group, fixed once in
/// homology:
///
///   F_{1,1}, F_{1,0}:  a = alpha_1, b = beta_1
///   F_{g,1}, g >= 2:   b_1 = beta_1, b_2 = beta_2, a_i = alpha_i,
///                      c_i = beta_i - beta_{i+1}   (i = 1..g-1)
///
/// The curves form the chain b_1 - a_1 - c_1 - a_2 - c_2 - ... - c_{g-1} - a_g
/// with b_2 attached to a_2; adjacent curves meet once and all others are
/// disjoint.
struct Catalog {
  SurfaceSpec surface;
  std::vector<Curve> curves;  // in monodromy-sequence order
  std::vector<std::pair<std::string, std::string>> chain_edges;

  const Curve& curve(const std::string& label) const;
};

/// Throws InputError for surfaces without a catalog (anything but F_{g,1}, g >= 1, and F_{1,0}).
Catalog wajnryb_catalog(const SurfaceSpec& surface);

bool has_catalog(const SurfaceSpec& surface);

}  // namespace monofib
