#pragma once

#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string>
#include <vector>

#include "tropopt/oracle.hpp"
#include "tropopt/problem.hpp"

namespace tropopt {

// JSON instance/report codecs. One schema serves all four semifields: the
// semifield zero is encoded as null, exact rationals as "a/b" strings (plain
// numbers are accepted on input), and every emitted scalar is re-parseable
// without loss. "inf"/"-inf" literals are rejected.

nlohmann::json scalar_to_json(const Semifield& sf, const Scalar& s);
Scalar scalar_from_json(const Semifield& sf, const nlohmann::json& j);

nlohmann::json vector_to_json(const Semifield& sf, const TropVector& v);
TropVector vector_from_json(const Semifield& sf, const nlohmann::json& j);

nlohmann::json matrix_to_json(const Semifield& sf, const TropMatrix& m);
TropMatrix matrix_from_json(const Semifield& sf, const nlohmann::json& j);

/// Oracle overrides carried in an instance file's "options" object.
struct OracleOptions {
  std::optional<std::vector<Rational>> grid_lower;
  std::optional<std::vector<Rational>> grid_upper;
  std::optional<Rational> grid_step;
  std::optional<int> samples;
};

struct ParsedInstance {
  ProblemInstance instance;
  OracleOptions options;
};

/// Parses and validates an instance document. `mode_override` (the
/// TROPOPT_MODE environment variable) wins over the file's options.mode.
/// Throws ParseError on malformed documents and schema violations.
ParsedInstance instance_from_json(const nlohmann::json& j,
                                  std::optional<ArithmeticMode> mode_override = std::nullopt);

/// Instance grid: the default grid patched with any file/flag overrides
/// (flag step takes precedence over the file's).
GridSpec resolve_grid(const ProblemInstance& instance, const OracleOptions& options,
                      const std::optional<Rational>& step_flag = std::nullopt);

nlohmann::json solution_set_to_json(const Semifield& sf, const SolutionSet& set);
SolutionSet solution_set_from_json(const Semifield& sf, const nlohmann::json& j);

nlohmann::json report_to_json(const Semifield& sf, const OptimumReport& report);
OptimumReport report_from_json(const Semifield& sf, const nlohmann::json& j);

bool report_eq(const Semifield& sf, const OptimumReport& a, const OptimumReport& b);

/// Canonical text rendering used by the CLI and the golden corpus: 2-space
/// indent, sorted keys, trailing newline.
std::string render_json(const nlohmann::json& j);

}  // namespace tropopt
