#pragma once

#include "monofib/curve.hpp"
#include "monofib/permutation.hpp"

#include <span>
#include <string>
#include <variant>
#include <vector>

namespace monofib {

enum class Handed { Right, Left };

inline Handed opposite(Handed h) { return h == Handed::Right ? Handed::Left : Handed::Right; }
inline int handed_sign(Handed h) { return h == Handed::Right ? 1 : -1; }

struct TwistGen {
  Curve curve;
  Handed handed = Handed::Right;
};

/// Explicit element of the extended mapping class group at (homology,
/// boundary permutation) resolution, used for bundle monodromy values.
struct BundleGen {
  IntMatrix matrix;
  Permutation perm;
  std::string label;
};

/// Throws InputError unless the matrix preserves the pairing form, is
/// invertible over Z, and sends each boundary class delta_j to delta_{perm(j)}.
void validate_bundle_gen(const BundleGen& gen, const SurfaceSpec& surface);

struct Letter {
  std::variant<TwistGen, BundleGen> gen;
  bool inverse = false;
};

/// Word in mapping classes. Words act on the fiber right to left, like
/// composition of maps: the last letter is applied first.
struct MCWord {
  SurfaceSpec surface;
  std::vector<Letter> letters;

  MCWord() = default;
  explicit MCWord(SurfaceSpec s) : surface(s) {}
  MCWord(SurfaceSpec s, std::vector<Letter> l) : surface(s), letters(std::move(l)) {}

  std::size_t length() const { return letters.size(); }
  MCWord inverse() const;
  std::string to_string() const;

  /// this * other (other acts first).
  friend MCWord operator*(const MCWord& a, const MCWord& b);
};

MCWord twist_word(const Curve& c, Handed handed = Handed::Right);

struct HomPermRep {
  IntMatrix matrix;
  Permutation perm;
};

/// Homology action of a Dehn twist: x -> x + h <c, x> c with h = +1 for a
/// right-handed twist and -1 for a left-handed one, so t_{alpha}(beta) = beta + alpha.
IntMatrix twist_matrix(const Curve& c, Handed handed);

/// Representation of a word; evaluate(a * b) = evaluate(a) o evaluate(b).
/// Throws InputError if a letter lives on another surface.
HomPermRep evaluate(const MCWord& w);

/// Image of a curve under a word. The class is preserved; the label records provenance.
Curve act_on_curve(const MCWord& w, const Curve& c);

/// Image of a curve under an already evaluated matrix.
Curve act_on_curve(const IntMatrix& m, const Curve& c, std::string label);

/// true iff the matrix preserves the pairing form of `surface`.
bool preserves_pairing(const SurfaceSpec& surface, const IntMatrix& m);

/// Whether the permutations generate the full symmetric group on b points.
/// Throws InputError for b < 1 and CapacityError for b > 10.
bool perm_group_surjective(std::span<const Permutation> perms, int b);

}  // namespace monofib
