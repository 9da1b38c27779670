// Command-line front end. Reports are JSON on stdout; fibrations go to --out
// or stdout. Exit codes: 0 affirmative, 1 negative, 2 input error, 3 unknown.

#include "monofib/errors.hpp"
#include "monofib/json_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

using namespace monofib;

namespace {

constexpr int kAffirmative = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;
constexpr int kUnknown = 3;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) std::cout << text;
  else write_text_file(out_path, text);
}

int exit_for(Answer a) {
  switch (a) {
    case Answer::Yes: return kAffirmative;
    case Answer::No: return kNegative;
    case Answer::Unknown: return kUnknown;
  }
  return kUnknown;
}

int default_depth() {
  const char* env = std::getenv("MF_DEPTH");
  if (!env || !*env) return 4;
  try {
    std::size_t used = 0;
    const int d = std::stoi(env, &used);
    if (used != std::string(env).size() || d < 0) throw InputError("");
    return d;
  } catch (const std::exception&) {
    throw InputError("MF_DEPTH must be a non-negative integer");
  }
}

std::pair<int, HurwitzDirection> parse_move(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos || colon + 2 != spec.size())
    throw InputError("move '" + spec + "' must look like i:L or i:R");
  const char dir = spec.back();
  if (dir != 'L' && dir != 'R') throw InputError("move direction must be L or R");
  int index = 0;
  try {
    std::size_t used = 0;
    index = std::stoi(spec.substr(0, colon), &used);
    if (used != colon) throw InputError("");
  } catch (const std::exception&) {
    throw InputError("move index in '" + spec + "' is not an integer");
  }
  return {index - 1, dir == 'L' ? HurwitzDirection::Left : HurwitzDirection::Right};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"monofib: monodromy calculus of Lefschetz fibrations over bounded surfaces"};
  app.require_subcommand(1);

  int census_g = 0, census_b = 0;
  bool census_enumerate = false;
  auto* census = app.add_subcommand("census", "count (and list) curve classes C_{g,b}");
  census->add_option("g", census_g, "fiber genus")->required()->check(CLI::NonNegativeNumber);
  census->add_option("b", census_b, "fiber boundary count")->required()->check(CLI::NonNegativeNumber);
  census->add_flag("--enumerate", census_enumerate, "list the classes and compare with the closed form");

  std::string build_name, build_out;
  int build_g = 0;
  auto* build_cmd = app.add_subcommand("build", "write a named fibration (u_11, u_10, u_g1, p_g)");
  build_cmd->add_option("name", build_name, "fibration name")->required();
  build_cmd->add_option("--g", build_g, "genus for u_g1 and p_g");
  build_cmd->add_option("--out", build_out, "output file (default stdout)");

  std::string inv_file;
  auto* invariants = app.add_subcommand("invariants", "homological invariants of the total space");
  invariants->add_option("file", inv_file, "fibration file")->required();

  std::string univ_file;
  bool univ_strong = false;
  auto* check = app.add_subcommand("check-universal", "universality report; exit code carries the verdict");
  check->add_option("file", univ_file, "fibration file")->required();
  check->add_flag("--strong", univ_strong, "judge strong universality");

  std::string wit_u, wit_f;
  std::optional<int> wit_depth;
  auto* witness = app.add_subcommand("witness", "search a pullback witness expressing f through u");
  witness->add_option("-u", wit_u, "universal fibration file")->required();
  witness->add_option("-f", wit_f, "target fibration file")->required();
  witness->add_option("--depth", wit_depth, "maximal conjugator length (default 4, or MF_DEPTH)");

  std::string red_file, red_out;
  int red_budget = 64;
  auto* reduce_cmd = app.add_subcommand("reduce", "destabilize greedily until nothing applies");
  reduce_cmd->add_option("file", red_file, "fibration file")->required();
  reduce_cmd->add_option("--budget", red_budget, "maximal number of steps")->check(CLI::NonNegativeNumber);
  reduce_cmd->add_option("--out", red_out, "write the terminal fibration here");

  std::string hur_file, hur_out;
  std::vector<std::string> hur_moves;
  auto* hurwitz = app.add_subcommand("hurwitz", "apply elementary Hurwitz moves in order");
  hurwitz->add_option("file", hur_file, "fibration file")->required();
  hurwitz->add_option("--move", hur_moves, "move i:L or i:R (1-based index, repeatable)")->required();
  hurwitz->add_option("--out", hur_out, "output file (default stdout)");

  std::string stab_file, stab_out, stab_mode;
  int stab_sign = 1;
  auto* stab = app.add_subcommand("stabilize", "add a fiber 1-handle and a cycle crossing it");
  stab->add_option("file", stab_file, "fibration file")->required();
  stab->add_option("--mode", stab_mode, "genus or boundary")->required()->check(CLI::IsMember({"genus", "boundary"}));
  stab->add_option("--sign", stab_sign, "sign of the new cycle")->check(CLI::IsMember({1, -1}));
  stab->add_option("--out", stab_out, "output file (default stdout)");

  std::string destab_file, destab_out;
  int destab_gen = 0;
  auto* destab = app.add_subcommand("destabilize", "remove the cycle meeting one generator once");
  destab->add_option("file", destab_file, "fibration file")->required();
  destab->add_option("--generator", destab_gen, "1-based homology coordinate")->required();
  destab->add_option("--out", destab_out, "output file (default stdout)");

  std::string cat_out;
  int cat_genus = 6;
  auto* catalog = app.add_subcommand("catalog", "print the twist-generator catalog");
  catalog->add_option("--max-genus", cat_genus, "largest genus listed")->check(CLI::PositiveNumber);
  catalog->add_option("--out", cat_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*census) {
      const SurfaceSpec s = make_surface(census_g, census_b);
      const long count = class_count(s);
      Json report{{"boundary", census_b}, {"count", count}, {"genus", census_g}};
      bool agrees = true;
      if (census_enumerate) {
        Json classes = Json::array();
        const auto list = enumerate_classes(s);
        for (const CurveClass& c : list) classes.push_back(c.to_string());
        agrees = static_cast<long>(list.size()) == count;
        report["classes"] = classes;
        report["formula_matches"] = agrees;
      }
      std::cout << dump(report);
      return agrees ? kAffirmative : kNegative;
    }
    if (*build_cmd) {
      emit(dump(fibration_to_json(build(build_name, build_g))), build_out);
      return kAffirmative;
    }
    if (*invariants) {
      std::cout << dump(invariants_to_json(total_space_invariants(read_fibration_file(inv_file))));
      return kAffirmative;
    }
    if (*check) {
      const UniversalityReport r = universality_report(read_fibration_file(univ_file));
      std::cout << dump(universality_to_json(r));
      return exit_for(univ_strong ? r.strongly_universal : r.universal);
    }
    if (*witness) {
      const int depth = wit_depth ? *wit_depth : default_depth();
      if (depth < 0) throw InputError("--depth must be non-negative");
      const WitnessResult w =
          substitution_witness(read_fibration_file(wit_u), read_fibration_file(wit_f), depth);
      std::cout << dump(witness_to_json(w));
      return std::holds_alternative<WitnessUnknown>(w) ? kUnknown : kAffirmative;
    }
    if (*reduce_cmd) {
      const ReduceResult r = reduce(read_fibration_file(red_file), red_budget);
      if (!red_out.empty()) write_text_file(red_out, dump(fibration_to_json(r.fibration)));
      std::cout << dump(reduce_to_json(r));
      return kAffirmative;
    }
    if (*hurwitz) {
      LefschetzFibration f = read_fibration_file(hur_file);
      for (const std::string& m : hur_moves) {
        const auto [i, dir] = parse_move(m);
        f = hurwitz_move(f, i, dir);
      }
      emit(dump(fibration_to_json(f)), hur_out);
      return kAffirmative;
    }
    if (*stab) {
      const auto mode = stab_mode == "genus" ? StabilizationMode::GenusUp : StabilizationMode::BoundaryUp;
      emit(dump(fibration_to_json(stabilize(read_fibration_file(stab_file), mode, stab_sign))), stab_out);
      return kAffirmative;
    }
    if (*destab) {
      emit(dump(fibration_to_json(destabilize(read_fibration_file(destab_file), destab_gen - 1))), destab_out);
      return kAffirmative;
    }
    if (*catalog) {
      emit(dump(catalog_to_json(cat_genus)), cat_out);
      return kAffirmative;
    }
  } catch (const NotApplicable& e) {
    std::cerr << "not applicable: " << e.what() << "\n";
    return kNegative;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
