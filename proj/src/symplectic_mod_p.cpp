#include "monofib/symplectic_mod_p.hpp"

#include "monofib/errors.hpp"
#include "monofib/schreier_sims.hpp"

namespace monofib {

namespace {

int mod(long long x, int p) {
  const long long r = x % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

struct SymplecticModPAction {
  using Element = ModPMatrix;
  int dim;
  int p;

  Element identity() const { return ModPMatrix::Identity(dim, dim); }

  Element multiply(const Element& a, const Element& b) const {
    Element c = a * b;
    return c.unaryExpr([this](int x) { return mod(x, p); });
  }

  // M^{-1} = -J M^T J for symplectic M.
  Element inverse(const Element& a) const {
    Element out(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        const int si = (i % 2 == 0) ? 1 : -1;  // (J)_{i, i^1} = si
        const int sj = (j % 2 == 0) ? 1 : -1;
        // (-J M^T J)_{ij} = -J_{i,i^1} M_{j^1, i^1} J_{j^1, j}, with J_{j^1,j} = -sj
        out(i, j) = mod(static_cast<long long>(si) * sj * a(j ^ 1, i ^ 1), p);
      }
    return out;
  }

  bool is_identity(const Element& a) const { return a.isIdentity(0); }

  Point image(const Element& a, Point point) const {
    Eigen::VectorXi v(dim);
    for (int k = 0; k < dim; ++k) {
      v(k) = static_cast<int>(point % p);
      point /= p;
    }
    Eigen::VectorXi w = a * v;
    Point out = 0;
    for (int k = dim - 1; k >= 0; --k) out = out * p + mod(w(k), p);
    return out;
  }
};

}  // namespace

Integer symplectic_group_order(int genus, int p) {
  Integer order(1);
  for (int k = 0; k < genus * genus; ++k) order *= p;
  Integer power(1);
  for (int i = 1; i <= genus; ++i) {
    power *= p * p;
    order *= power - 1;
  }
  return order;
}

ModPMatrix transvection_mod_p(const IntVector& v, int p) {
  const int dim = static_cast<int>(v.size());
  if (dim % 2 != 0) throw InputError("transvection vector must have even length");
  Eigen::VectorXi w(dim), r(dim);
  for (int k = 0; k < dim; ++k) w(k) = mod((v(k) % p).convert_to<long long>(), p);
  for (int i = 0; i < dim / 2; ++i) {  // r = v^T J
    r(2 * i) = mod(-w(2 * i + 1), p);
    r(2 * i + 1) = w(2 * i);
  }
  ModPMatrix t = ModPMatrix::Identity(dim, dim) + w * r.transpose();
  return t.unaryExpr([p](int x) { return mod(x, p); });
}

ModPMatrix reduce_mod_p(const IntMatrix& m, int p) {
  ModPMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = mod((m(i, j) % p).convert_to<long long>(), p);
  return out;
}

ModPClosure symplectic_closure_mod_p(int genus, int p, const std::vector<ModPMatrix>& generators,
                                     std::uint64_t max_points) {
  ModPClosure out;
  out.prime = p;
  out.full_order = symplectic_group_order(genus, p);
  const int dim = 2 * genus;
  std::uint64_t points = 1;
  for (int k = 0; k < dim; ++k) {
    points *= static_cast<std::uint64_t>(p);
    if (points > max_points)
      throw CapacityError("F_" + std::to_string(p) + "^" + std::to_string(dim) + " exceeds the closure bound");
  }
  if (genus == 0) {
    out.order = 1;
    out.generates = true;
    return out;
  }
  for (const ModPMatrix& g : generators)
    if (g.rows() != dim || g.cols() != dim) throw InputError("generator has the wrong size");

  std::vector<Point> base;
  Point e = 1;
  for (int k = 0; k < dim; ++k, e *= static_cast<Point>(p)) base.push_back(e);

  StabilizerChain<SymplecticModPAction> chain(SymplecticModPAction{dim, p}, base);
  if (chain.build_to_order(generators, out.full_order)) {
    out.order = out.full_order;
    out.generates = true;
    return out;
  }
  chain.build(generators);
  out.order = chain.order();
  out.generates = out.order == out.full_order;
  return out;
}

}  // namespace monofib
