#pragma once

#include <string>
#include <vector>

namespace monofib {

/// Permutation of {0, ..., degree-1}; composition (a * b)(x) = a(b(x)).
class Permutation {
 public:
  Permutation() = default;
  /// Throws InputError if `images` is not a bijection.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);
  /// Cycles are written 1-based, as in (1 2 3).
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[point]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  std::string to_string() const;  // cycle notation, 1-based

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

}  // namespace monofib
