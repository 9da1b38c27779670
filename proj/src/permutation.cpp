#include "monofib/permutation.hpp"

#include "monofib/errors.hpp"

namespace monofib {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || x >= degree() || seen[x]) throw InputError("not a permutation");
    seen[x] = true;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> images(degree);
  for (int i = 0; i < degree; ++i) images[i] = i;
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images(degree);
  for (int i = 0; i < degree; ++i) images[i] = i;
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int from = cycle[k] - 1;
      const int to = cycle[(k + 1) % cycle.size()] - 1;
      if (from < 0 || from >= degree || to < 0 || to >= degree || used[from])
        throw InputError("bad cycle notation");
      used[from] = true;
      images[from] = to;
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += "(";
    for (int x = i; !seen[x]; x = images_[x]) {
      seen[x] = true;
      if (x != i) out += " ";
      out += std::to_string(x + 1);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw InputError("composing permutations of different degree");
  std::vector<int> images(a.images_.size());
  for (int i = 0; i < a.degree(); ++i) images[i] = a.images_[b.images_[i]];
  return Permutation(std::move(images));
}

}  // namespace monofib
