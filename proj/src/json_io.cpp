#include "monofib/json_io.hpp"

#include "monofib/errors.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace monofib {

namespace {

void expect_object(const Json& j, const std::string& what, const std::set<std::string>& keys) {
  if (!j.is_object()) throw InputError(what + ": expected an object");
  for (const auto& [key, value] : j.items())
    if (!keys.count(key)) throw InputError(what + ": unknown field '" + key + "'");
  for (const std::string& key : keys)
    if (!j.contains(key)) throw InputError(what + ": missing field '" + key + "'");
}

std::int64_t get_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw InputError(what + ": expected an integer");
  return j.get<std::int64_t>();
}

int get_small_int(const Json& j, const std::string& what) {
  const std::int64_t v = get_int(j, what);
  if (v < -1000000 || v > 1000000) throw InputError(what + ": value out of range");
  return static_cast<int>(v);
}

std::string get_string(const Json& j, const std::string& what) {
  if (!j.is_string()) throw InputError(what + ": expected a string");
  return j.get<std::string>();
}

const Json& get_array(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + ": expected an array");
  return j;
}

Json int_json(const Integer& x) {
  if (!fits_int64(x)) throw CapacityError("integer " + x.str() + " does not fit the file format");
  return to_int64(x);
}

Json class_to_json(const CurveClass& c) {
  if (!c.is_separating()) return "nonsep";
  return Json{{"sep", Json::array({Json::array({c.side_a.genus, c.side_a.boundary}),
                                   Json::array({c.side_b.genus, c.side_b.boundary})})}};
}

CurveClass class_from_json(const Json& j, const std::string& what) {
  if (j.is_string()) {
    if (j.get<std::string>() != "nonsep") throw InputError(what + ": unknown class '" + j.get<std::string>() + "'");
    return CurveClass::nonseparating();
  }
  expect_object(j, what, {"sep"});
  const Json& sides = get_array(j.at("sep"), what + ".sep");
  if (sides.size() != 2) throw InputError(what + ".sep: expected two sides");
  SideType t[2];
  for (int k = 0; k < 2; ++k) {
    const Json& side = get_array(sides[k], what + ".sep");
    if (side.size() != 2) throw InputError(what + ".sep: each side is [genus, boundary]");
    t[k] = {get_small_int(side[0], what + ".sep"), get_small_int(side[1], what + ".sep")};
  }
  return CurveClass::separating(t[0], t[1]);
}

Json surface_to_json(int genus, int boundary) { return Json{{"boundary", boundary}, {"genus", genus}}; }

Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(int_json(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

Json curve_to_json(const Curve& c) {
  Json hom = Json::array();
  for (Eigen::Index i = 0; i < c.hom.size(); ++i) hom.push_back(int_json(c.hom(i)));
  return Json{{"class", class_to_json(c.cls)}, {"hom", hom}, {"label", c.label}};
}

Curve curve_from_json(const Json& j, const SurfaceSpec& surface) {
  expect_object(j, "curve", {"class", "hom", "label"});
  const std::string label = get_string(j.at("label"), "curve.label");
  const std::string what = "curve '" + label + "'";
  const Json& hom = get_array(j.at("hom"), what + ".hom");
  if (static_cast<int>(hom.size()) != surface.rank())
    throw InputError(what + ": homology vector has length " + std::to_string(hom.size()) + ", expected " +
                     std::to_string(surface.rank()));
  HomologyClass v(surface.rank());
  for (int i = 0; i < surface.rank(); ++i) v(i) = Integer(static_cast<long>(get_int(hom[i], what + ".hom")));
  return make_curve(surface, class_from_json(j.at("class"), what + ".class"), std::move(v), label);
}

Json fibration_to_json(const LefschetzFibration& f) {
  Json cycles = Json::array();
  for (const SignedCycle& c : f.cycles) cycles.push_back(Json{{"curve", curve_to_json(c.curve)}, {"sign", c.sign}});
  Json bundle = Json::array();
  for (const BundleGen& b : f.bundle) {
    Json perm = Json::array();
    for (int x : b.perm.images()) perm.push_back(x + 1);
    bundle.push_back(Json{{"label", b.label}, {"matrix", matrix_to_json(b.matrix)}, {"perm", perm}});
  }
  return Json{{"base", surface_to_json(f.base.genus, f.base.boundary)},
              {"bundle", bundle},
              {"cycles", cycles},
              {"fiber", surface_to_json(f.fiber.genus, f.fiber.boundary)}};
}

LefschetzFibration fibration_from_json(const Json& j) {
  expect_object(j, "fibration", {"base", "bundle", "cycles", "fiber"});
  expect_object(j.at("fiber"), "fiber", {"boundary", "genus"});
  expect_object(j.at("base"), "base", {"boundary", "genus"});
  const int g = get_small_int(j.at("fiber").at("genus"), "fiber.genus");
  const int b = get_small_int(j.at("fiber").at("boundary"), "fiber.boundary");
  if (g < 0 || b < 0 || g > 64 || b > 64) throw InputError("fiber genus and boundary must lie in [0, 64]");
  LefschetzFibration f;
  f.fiber = make_surface(g, b);
  f.base = {get_small_int(j.at("base").at("genus"), "base.genus"),
            get_small_int(j.at("base").at("boundary"), "base.boundary")};

  const Json& cycles = get_array(j.at("cycles"), "cycles");
  for (std::size_t k = 0; k < cycles.size(); ++k) {
    const std::string what = "cycles[" + std::to_string(k) + "]";
    expect_object(cycles[k], what, {"curve", "sign"});
    const int sign = get_small_int(cycles[k].at("sign"), what + ".sign");
    if (sign != 1 && sign != -1) throw InputError(what + ": sign must be 1 or -1");
    f.cycles.push_back({curve_from_json(cycles[k].at("curve"), f.fiber), sign});
  }

  const Json& bundle = get_array(j.at("bundle"), "bundle");
  for (std::size_t k = 0; k < bundle.size(); ++k) {
    const std::string what = "bundle[" + std::to_string(k) + "]";
    expect_object(bundle[k], what, {"label", "matrix", "perm"});
    BundleGen gen;
    gen.label = get_string(bundle[k].at("label"), what + ".label");
    const Json& rows = get_array(bundle[k].at("matrix"), what + ".matrix");
    const int n = f.fiber.rank();
    if (static_cast<int>(rows.size()) != n) throw InputError(what + ": matrix must be " + std::to_string(n) + "x" + std::to_string(n));
    gen.matrix = IntMatrix(n, n);
    for (int r = 0; r < n; ++r) {
      const Json& row = get_array(rows[r], what + ".matrix");
      if (static_cast<int>(row.size()) != n) throw InputError(what + ": matrix must be square of the fiber rank");
      for (int c = 0; c < n; ++c) gen.matrix(r, c) = Integer(static_cast<long>(get_int(row[c], what + ".matrix")));
    }
    std::vector<int> images;
    for (const Json& x : get_array(bundle[k].at("perm"), what + ".perm")) images.push_back(get_small_int(x, what + ".perm") - 1);
    gen.perm = Permutation(images);
    f.bundle.push_back(std::move(gen));
  }
  validate(f);
  return f;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

LefschetzFibration parse_fibration(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return fibration_from_json(j);
}

LefschetzFibration read_fibration_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_fibration(buffer.str());
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

Json invariants_to_json(const InvariantReport& r) {
  Json torsion = Json::array();
  for (const Integer& t : r.h1_torsion) torsion.push_back(int_json(t));
  return Json{{"allowable", r.allowable},
              {"euler", r.euler},
              {"h1_free_rank", r.h1_free_rank},
              {"h1_torsion", torsion},
              {"h2_rank", r.h2_rank},
              {"negative", r.negative},
              {"positive", r.positive}};
}

Json universality_to_json(const UniversalityReport& r) {
  auto classes = [](const std::vector<CurveClass>& v) {
    Json out = Json::array();
    for (const CurveClass& c : v) out.push_back(class_to_json(c));
    return out;
  };
  return Json{{"cond2", r.cond2},
              {"cond2strong", r.cond2strong},
              {"cond_lef", Json{{"reason", r.cond_lef.reason}, {"verdict", to_string(r.cond_lef.verdict)}}},
              {"cond_perm", r.cond_perm},
              {"missing_classes", classes(r.missing)},
              {"single_signed_classes", classes(r.single_signed)},
              {"strongly_universal", to_string(r.strongly_universal)},
              {"universal", to_string(r.universal)}};
}

Json witness_to_json(const WitnessResult& w) {
  auto plan_json = [](const MeridianPlan& plan) {
    Json entries = Json::array();
    for (std::size_t i = 0; i < plan.entries.size(); ++i) {
      const PlanEntry& e = plan.entries[i];
      entries.push_back(Json{{"conjugator", e.conjugator.to_string()},
                             {"degree", e.degree},
                             {"length", e.conjugator.length()},
                             {"source", e.source + 1},
                             {"target", i + 1}});
    }
    return entries;
  };
  if (const auto* iw = std::get_if<ImmersionWitness>(&w))
    return Json{{"entries", plan_json(iw->plan)}, {"kind", "immersion_witness"}};
  if (const auto* mp = std::get_if<MeridianPlan>(&w)) return Json{{"entries", plan_json(*mp)}, {"kind", "meridian_plan"}};
  Json unmatched = Json::array();
  for (int i : std::get<WitnessUnknown>(w).unmatched) unmatched.push_back(i + 1);
  return Json{{"kind", "unknown"}, {"unmatched", unmatched}};
}

Json reduce_to_json(const ReduceResult& r) {
  Json gens = Json::array();
  for (int g : r.generators) gens.push_back(g + 1);
  return Json{{"budget_exhausted", r.budget_exhausted},
              {"fibration", fibration_to_json(r.fibration)},
              {"generators", gens},
              {"steps", r.generators.size()}};
}

Json catalog_to_json(int max_genus) {
  Json out = Json::array();
  std::vector<SurfaceSpec> surfaces{make_surface(1, 0)};
  for (int g = 1; g <= max_genus; ++g) surfaces.push_back(make_surface(g, 1));
  for (const SurfaceSpec& s : surfaces) {
    const Catalog cat = wajnryb_catalog(s);
    Json curves = Json::array();
    for (const Curve& c : cat.curves) curves.push_back(curve_to_json(c));
    Json edges = Json::array();
    for (const auto& [x, y] : cat.chain_edges) edges.push_back(Json::array({x, y}));
    out.push_back(Json{{"chain", edges}, {"curves", curves}, {"fiber", surface_to_json(s.genus, s.boundary)}});
  }
  return out;
}

}  // namespace monofib
