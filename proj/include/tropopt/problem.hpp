#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tropopt/matrix.hpp"
#include "tropopt/semifield.hpp"

namespace tropopt {

/// The supported problem forms, named after the displayed problems they
/// solve. The numeric tags match the instance-file identifiers.
enum class ProblemForm {
  P3Rayleigh,         // minimize x^- A x
  P4ChebyBox,         // minimize q^- x (+) x^- p,  g <= x <= h
  P5ChebyLower,       // minimize q^- A x (+) (A x)^- p,  x >= g
  P6ChebyIneqBox,     // minimize x^- p (+) q^- x,  B x (+) g <= x,  x <= h
  P8ChebyIneq,        // minimize x^- p (+) q^- x,  B x <= x
  P9SpanMin,          // minimize q^- B x (A x)^- p
  P10SpanMinEqIneq,   // minimize 1^T y y^- 1,  C x = y,  D x <= x
  P11SpanMax,         // maximize q^- B x (A x)^- p
  P13SpanMaxIneq,     // maximize q^- B x (A x)^- p,  C x <= x
  P14SpanMaxEq,       // maximize q^- B x (A x)^- p,  C x = x
  P15RayleighAffine,  // minimize x^- A x (+) x^- p (+) q^- x (+) c
  P16RayleighFull,    // minimize x^- A x,  B x (+) g <= x,  C x <= h
  P17RayleighIneq,    // minimize x^- A x,  B x (+) g <= x
  P18RayleighBox,     // minimize x^- A x,  g <= x <= h
  P19RayleighPIneq,   // minimize x^- A x (+) x^- p,  B x (+) g <= x
};

constexpr std::size_t kProblemFormCount = 15;

const char* form_name(ProblemForm form);                         // "P4-cheby-box" etc.
std::optional<ProblemForm> form_from_string(std::string_view s);
ProblemForm form_at(std::size_t index);                          // enumeration helper

enum class Sense { Minimize, Maximize };

Sense sense_of(ProblemForm form);

/// One optimization problem: a form tag plus the matrices/vectors/scalars it
/// requires. Unused slots stay disengaged; validate() enforces presence and
/// dimension consistency for the chosen form.
struct ProblemInstance {
  Semifield semifield = Semifield::max_plus();
  ProblemForm form = ProblemForm::P3Rayleigh;

  std::optional<TropMatrix> A, B, C, D;
  std::optional<TropVector> p, q, g, h;
  std::optional<Scalar> c;

  /// Dimension of the unknown vector x.
  std::size_t unknown_dim() const;

  /// Throws ShapeMismatch/ParseError-style Error when slots required by the
  /// form are missing or dimensionally inconsistent.
  void validate() const;
};

/// Symbolic description of all optima of a solved instance.
struct SolutionSet {
  /// { x : lower <= x <= upper }.
  struct Interval {
    TropVector lower, upper;
  };
  /// { G u : u_lower <= u <= u_upper, u regular }.
  struct GeneratedInterval {
    TropMatrix generator;
    TropVector u_lower, u_upper;
  };
  /// { G u : u >= u_lower, u regular }; zero components of u_lower are
  /// vacuous bounds.
  struct GeneratedCone {
    TropMatrix generator;
    TropVector u_lower;
  };
  /// { x : x_k = alpha pin, x_j <= alpha caps_j for j != k, alpha > 0 }.
  /// Indices are 0-based in memory and 1-based in serialized reports.
  struct PinnedScaledBox {
    std::size_t k = 0;
    std::size_t s = 0;
    Scalar pin;
    TropVector caps;
  };
  /// { outer u : u in inner }.
  struct Substituted {
    TropMatrix outer;
    std::shared_ptr<const SolutionSet> inner;
  };

  /// monostate marks a not-yet-populated set (solver output always holds one
  /// of the five concrete variants).
  std::variant<std::monostate, Interval, GeneratedInterval, GeneratedCone, PinnedScaledBox,
               Substituted>
      v;
};

/// Solver output: optimum value, solution-set description, one concrete
/// regular witness attaining the value, and the precondition checks that
/// were performed (short stable names, surfaced as CLI diagnostics).
struct OptimumReport {
  Scalar value;
  Sense sense = Sense::Minimize;
  SolutionSet set;
  TropVector witness{1};
  std::vector<std::string> diagnostics;
};

}  // namespace tropopt
