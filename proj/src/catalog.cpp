#include "monofib/catalog.hpp"

#include "monofib/errors.hpp"

namespace monofib {

const Curve& Catalog::curve(const std::string& label) const {
  for (const Curve& c : curves)
    if (c.label == label) return c;
  throw InputError("no catalog curve labelled '" + label + "'");
}

bool has_catalog(const SurfaceSpec& s) {
  return (s.boundary == 1 && s.genus >= 1) || (s.genus == 1 && s.boundary == 0);
}

Catalog wajnryb_catalog(const SurfaceSpec& s) {
  if (!has_catalog(s)) throw InputError("no twist-generator catalog for " + s.to_string());
  Catalog cat;
  cat.surface = s;
  auto add = [&](const std::string& label, const HomologyClass& hom) {
    cat.curves.push_back(make_curve(s, CurveClass::nonseparating(), hom, label));
  };
  if (s.genus == 1) {
    add("a", basis_class(s, s.alpha(0)));
    add("b", basis_class(s, s.beta(0)));
    cat.chain_edges = {{"a", "b"}};
    return cat;
  }
  const int g = s.genus;
  add("b1", basis_class(s, s.beta(0)));
  add("b2", basis_class(s, s.beta(1)));
  for (int i = 0; i < g; ++i) add("a" + std::to_string(i + 1), basis_class(s, s.alpha(i)));
  for (int i = 0; i + 1 < g; ++i) {
    HomologyClass c = basis_class(s, s.beta(i)) - basis_class(s, s.beta(i + 1));
    add("c" + std::to_string(i + 1), c);
  }
  cat.chain_edges.push_back({"b1", "a1"});
  for (int i = 1; i < g; ++i) {
    cat.chain_edges.push_back({"a" + std::to_string(i), "c" + std::to_string(i)});
    cat.chain_edges.push_back({"c" + std::to_string(i), "a" + std::to_string(i + 1)});
  }
  cat.chain_edges.push_back({"b2", "a2"});
  return cat;
}

}  // namespace monofib
