// tropopt: command-line front end. Subcommands:
//   solve <file>                           solve an instance, print the report
//   verify <file> [--samples N]            solve, then oracle-check the report
//          [--grid-step a/b] [--seed S] [--inject-fault]
//   algebra <star|plus|eigen|spectral-radius> <file>
// Exit codes: 0 ok, 2 parse/schema error, 3 precondition error,
// 4 verification failure. Standard output is valid JSON or empty.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "tropopt/algebra.hpp"
#include "tropopt/errors.hpp"
#include "tropopt/io.hpp"
#include "tropopt/oracle.hpp"
#include "tropopt/solvers.hpp"
#include "tropopt/spectral.hpp"

namespace {

using nlohmann::json;
using namespace tropopt;

constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitVerification = 4;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return j;
}

std::optional<ArithmeticMode> mode_from_env() {
  const char* env = std::getenv("TROPOPT_MODE");
  if (env == nullptr || *env == '\0') return std::nullopt;
  std::string mode(env);
  if (mode == "exact") return ArithmeticMode::Exact;
  if (mode == "float") return ArithmeticMode::Float;
  throw ParseError("TROPOPT_MODE must be \"exact\" or \"float\", got \"" + mode + "\"");
}

int run_solve(const std::string& path) {
  ParsedInstance parsed = instance_from_json(load_json(path), mode_from_env());
  OptimumReport report = solve(parsed.instance);
  std::cout << render_json(report_to_json(parsed.instance.semifield, report));
  return 0;
}

int run_verify(const std::string& path, int samples_flag, const std::string& step_flag,
               std::uint64_t seed, bool inject_fault) {
  ParsedInstance parsed = instance_from_json(load_json(path), mode_from_env());
  const Semifield& sf = parsed.instance.semifield;

  std::optional<Rational> step;
  if (!step_flag.empty()) {
    auto r = Rational::parse(step_flag);
    if (!r || !(Rational(0) < *r)) throw ParseError("--grid-step must be a positive rational");
    step = *r;
  }

  OptimumReport report = solve(parsed.instance);
  if (inject_fault) {
    report.value = report.value.is_zero() ? sf.one()
                                          : sf.mul(report.value, sf.from_rational(Rational(2)));
  }

  int samples = samples_flag >= 0 ? samples_flag : parsed.options.samples.value_or(50);
  GridSpec grid = resolve_grid(parsed.instance, parsed.options, step);
  try {
    VerificationRecord record = check_solution_set(parsed.instance, report, samples, seed, grid);
    json out;
    out["verified"] = true;
    out["optimum"] = record.optimum;
    out["oracle_best"] = record.oracle_best;
    out["grid_points"] = record.grid_points;
    out["samples_checked"] = record.samples_checked;
    out["argbest_checked"] = record.argbest_checked;
    std::cout << render_json(out);
    return 0;
  } catch (const VerificationFailure& e) {
    json out;
    out["verified"] = false;
    out["failure"] = e.condition();
    std::cout << render_json(out);
    return kExitVerification;
  }
}

int run_algebra(const std::string& op, const std::string& path) {
  json doc = load_json(path);
  Semifield sf = Semifield::max_plus();
  json matrix_doc = doc;
  if (doc.is_object()) {
    if (!doc.contains("matrix")) throw ParseError("matrix document requires \"matrix\"");
    auto id = semifield_from_string(doc.value("semifield", "max-plus"));
    if (!id) throw ParseError("unknown semifield");
    ArithmeticMode mode = (*id == SemifieldId::MaxPlus || *id == SemifieldId::MinPlus)
                              ? ArithmeticMode::Exact
                              : ArithmeticMode::Float;
    sf = Semifield::make(*id, mode);
    matrix_doc = doc.at("matrix");
  }
  if (auto mode = mode_from_env()) sf = Semifield::make(sf.id(), *mode);
  TropMatrix m = matrix_from_json(sf, matrix_doc);

  if (op == "star") {
    std::cout << render_json(matrix_to_json(sf, solve_order_inequality(sf, m)));
  } else if (op == "plus") {
    std::cout << render_json(matrix_to_json(sf, solve_fixpoint_equation(sf, m)));
  } else if (op == "spectral-radius") {
    std::cout << render_json(scalar_to_json(sf, spectral_radius(sf, m)));
  } else if (op == "eigen") {
    SpectrumReport spectrum = eigenvectors(sf, m);
    json out;
    out["lambda"] = scalar_to_json(sf, spectrum.lambda);
    out["generator"] = matrix_to_json(sf, spectrum.eigen_generator);
    std::cout << render_json(out);
  } else {
    throw ParseError("unknown algebra subcommand: " + op);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tropopt: closed-form tropical optimization with oracle verification"};
  app.require_subcommand(1);

  std::string solve_path;
  CLI::App* solve_cmd = app.add_subcommand("solve", "solve an instance file");
  solve_cmd->add_option("file", solve_path, "instance JSON file")->required();

  std::string verify_path;
  int samples = -1;
  std::string grid_step;
  std::uint64_t seed = 0;
  bool inject_fault = false;
  CLI::App* verify_cmd = app.add_subcommand("verify", "solve and verify against the oracle");
  verify_cmd->add_option("file", verify_path, "instance JSON file")->required();
  verify_cmd->add_option("--samples", samples, "solution-set samples to draw (default 50)");
  verify_cmd->add_option("--grid-step", grid_step, "override the oracle grid step (a/b)");
  verify_cmd->add_option("--seed", seed, "sampling seed");
  verify_cmd->add_flag("--inject-fault", inject_fault,
                       "test hook: corrupt the optimum before verifying");

  std::string algebra_op;
  std::string algebra_path;
  CLI::App* algebra_cmd = app.add_subcommand("algebra", "matrix-level operations");
  algebra_cmd->add_option("op", algebra_op, "star | plus | eigen | spectral-radius")
      ->required()
      ->check(CLI::IsMember({"star", "plus", "eigen", "spectral-radius"}));
  algebra_cmd->add_option("file", algebra_path, "matrix JSON file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve_cmd->parsed()) return run_solve(solve_path);
    if (verify_cmd->parsed()) {
      return run_verify(verify_path, samples, grid_step, seed, inject_fault);
    }
    return run_algebra(algebra_op, algebra_path);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const VerificationFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerification;
  } catch (const Error& e) {
    nlohmann::json out;
    out["error"] = {{"class", "precondition"}, {"condition", e.condition()}};
    std::cout << tropopt::render_json(out);
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
}
