#include "monofib/mapping_class.hpp"

#include "monofib/errors.hpp"
#include "monofib/schreier_sims.hpp"
#include "monofib/smith.hpp"

namespace monofib {

namespace {

struct PermutationAction {
  using Element = Permutation;
  int degree;

  Element identity() const { return Permutation::identity(degree); }
  Element multiply(const Element& a, const Element& b) const { return a * b; }
  Element inverse(const Element& a) const { return a.inverse(); }
  bool is_identity(const Element& a) const { return a.is_identity(); }
  Point image(const Element& a, Point p) const { return static_cast<Point>(a(static_cast<int>(p))); }
};

Handed effective_handedness(const TwistGen& t, bool inverse) {
  return inverse ? opposite(t.handed) : t.handed;
}

std::string letter_string(const Letter& letter) {
  if (const auto* t = std::get_if<TwistGen>(&letter.gen)) {
    const bool left = effective_handedness(*t, letter.inverse) == Handed::Left;
    return "t_" + t->curve.label + (left ? "^-1" : "");
  }
  const auto& b = std::get<BundleGen>(letter.gen);
  return b.label + (letter.inverse ? "^-1" : "");
}

}  // namespace

MCWord MCWord::inverse() const {
  MCWord out(surface);
  out.letters.assign(letters.rbegin(), letters.rend());
  for (Letter& l : out.letters) l.inverse = !l.inverse;
  return out;
}

std::string MCWord::to_string() const {
  if (letters.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out += " ";
    out += letter_string(letters[i]);
  }
  return out;
}

MCWord operator*(const MCWord& a, const MCWord& b) {
  if (a.surface != b.surface) throw InputError("concatenating words on different surfaces");
  MCWord out(a.surface, a.letters);
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

MCWord twist_word(const Curve& c, Handed handed) {
  return MCWord(c.surface, {Letter{TwistGen{c, handed}, false}});
}

IntMatrix twist_matrix(const Curve& c, Handed handed) {
  const SurfaceSpec& s = c.surface;
  check_dimension(s, c.hom);
  // row r = c^T J, so that <c, x> = r . x
  IntVector r = zero_vector<Integer>(s.rank());
  for (int i = 0; i < s.genus; ++i) {
    r(s.alpha(i)) = -c.hom(s.beta(i));
    r(s.beta(i)) = c.hom(s.alpha(i));
  }
  IntMatrix t = identity_matrix<Integer>(s.rank());
  const Integer h(handed_sign(handed));
  for (int i = 0; i < s.rank(); ++i)
    for (int k = 0; k < s.rank(); ++k) t(i, k) += h * c.hom(i) * r(k);
  return t;
}

bool preserves_pairing(const SurfaceSpec& surface, const IntMatrix& m) {
  if (m.rows() != surface.rank() || m.cols() != surface.rank()) return false;
  const IntMatrix j = pairing_form(surface);
  const IntMatrix lhs = m.transpose() * j * m;
  return exactly_equal(lhs, j);
}

void validate_bundle_gen(const BundleGen& gen, const SurfaceSpec& surface) {
  const std::string who = "bundle generator '" + gen.label + "'";
  if (gen.matrix.rows() != surface.rank() || gen.matrix.cols() != surface.rank())
    throw InputError(who + ": matrix size does not match " + surface.to_string());
  if (gen.perm.degree() != surface.boundary)
    throw InputError(who + ": permutation degree must equal the boundary count");
  if (!preserves_pairing(surface, gen.matrix)) throw InputError(who + ": matrix does not preserve the pairing");
  auto snf = smith_normal_form(gen.matrix);
  for (Eigen::Index k = 0; k < gen.matrix.rows(); ++k)
    if (k >= snf.rank || snf.D(k, k) != 1) throw InputError(who + ": matrix is not invertible over Z");
  for (int j = 0; j < surface.boundary; ++j) {
    const IntVector image = gen.matrix * boundary_class(surface, j);
    if (!exactly_equal(image, boundary_class(surface, gen.perm(j))))
      throw InputError(who + ": matrix does not carry boundary classes along the permutation");
  }
}

HomPermRep evaluate(const MCWord& w) {
  const SurfaceSpec& s = w.surface;
  HomPermRep rep{identity_matrix<Integer>(s.rank()), Permutation::identity(s.boundary)};
  for (const Letter& letter : w.letters) {
    if (const auto* t = std::get_if<TwistGen>(&letter.gen)) {
      if (t->curve.surface != s) throw InputError("word mixes letters from different surfaces");
      rep.matrix = rep.matrix * twist_matrix(t->curve, effective_handedness(*t, letter.inverse));
    } else {
      const auto& b = std::get<BundleGen>(letter.gen);
      if (b.matrix.rows() != s.rank() || b.perm.degree() != s.boundary)
        throw InputError("word mixes letters from different surfaces");
      if (letter.inverse) {
        rep.matrix = rep.matrix * unimodular_inverse(b.matrix);
        rep.perm = rep.perm * b.perm.inverse();
      } else {
        rep.matrix = rep.matrix * b.matrix;
        rep.perm = rep.perm * b.perm;
      }
    }
  }
  return rep;
}

Curve act_on_curve(const IntMatrix& m, const Curve& c, std::string label) {
  if (m.rows() != c.surface.rank() || m.cols() != c.surface.rank())
    throw InputError("mapping class and curve live on different surfaces");
  Curve out{c.surface, c.cls, m * c.hom, std::move(label)};
  validate_curve(out);
  return out;
}

Curve act_on_curve(const MCWord& w, const Curve& c) {
  if (w.surface != c.surface) throw InputError("mapping class and curve live on different surfaces");
  if (w.letters.empty()) return c;
  return act_on_curve(evaluate(w).matrix, c, w.to_string() + "(" + c.label + ")");
}

bool perm_group_surjective(std::span<const Permutation> perms, int b) {
  if (b < 1) throw InputError("boundary permutation group needs b >= 1");
  if (b > 10) throw CapacityError("boundary permutation closure is limited to b <= 10");
  std::vector<Permutation> gens;
  for (const Permutation& p : perms) {
    if (p.degree() != b) throw InputError("permutation degree does not match boundary count");
    gens.push_back(p);
  }
  std::vector<Point> candidates;
  for (int i = 0; i < b; ++i) candidates.push_back(static_cast<Point>(i));
  StabilizerChain<PermutationAction> chain(PermutationAction{b}, candidates);
  chain.build(gens);
  Integer factorial(1);
  for (int i = 2; i <= b; ++i) factorial *= i;
  return chain.order() == factorial;
}

}  // namespace monofib
