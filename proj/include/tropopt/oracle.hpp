#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tropopt/problem.hpp"
#include "tropopt/rational.hpp"

namespace tropopt {

/// Rectangular lattice: numeric per-coordinate ranges [lower_i, upper_i]
/// walked with a common positive step. All bounds are finite scalars. The
/// oracle works on the exact additive semifields only; multiplicative
/// instances are validated through the order isomorphism instead.
struct GridSpec {
  TropVector lower;
  TropVector upper;
  Rational step{1};
};

/// Grid-search outcome. `argbest` lists the feasible optimizers in
/// lexicographic coordinate order, capped at kArgbestCap entries
/// (`argbest_truncated` reports whether the cap was hit);
/// `evaluated_count` counts every lattice point visited.
struct OracleReport {
  Scalar best_value;
  std::vector<TropVector> argbest;
  std::uint64_t evaluated_count = 0;
  bool argbest_truncated = false;
};

inline constexpr std::size_t kArgbestCap = 512;

/// Result of check_solution_set when all checks pass.
struct VerificationRecord {
  std::string optimum;
  std::string oracle_best;
  std::uint64_t grid_points = 0;
  int samples_checked = 0;
  std::size_t argbest_checked = 0;
};

/// Objective value of the instance's form at a regular x, composed from the
/// algebra primitives (conjugation, matrix products, norms).
Scalar evaluate_objective(const ProblemInstance& instance, const TropVector& x);

/// Second, independently coded evaluation using raw scalar loops; kept as a
/// double-entry check against the matrix path.
Scalar evaluate_objective_direct(const ProblemInstance& instance, const TropVector& x);

/// True iff x satisfies every constraint of the form, with exact comparisons
/// in exact mode.
bool check_feasible(const ProblemInstance& instance, const TropVector& x);

/// Extreme finite constants over all data arrays of the instance (0, 0 when
/// the instance has no finite entry).
std::pair<Rational, Rational> finite_constant_range(const ProblemInstance& instance);

/// Default oracle grid: per-coordinate box [c_min - span, c_max + span] with
/// span = c_max - c_min and step 1/lcm(1..n+1), tightened by the form's
/// explicit coordinate bounds (g <= x, x <= h) where present.
GridSpec default_grid(const ProblemInstance& instance);

/// Exhaustive search over the grid lattice: evaluates every point, filters by
/// check_feasible, returns the best value for the instance sense plus the
/// argbest points. Runs the OpenMP integer kernel when the data allows it
/// and falls back to the scalar path otherwise; in both cases the result is
/// bitwise identical to grid_optimize_serial. Throws EmptyFeasibleGrid when
/// nothing on the lattice is feasible.
OracleReport grid_optimize(const ProblemInstance& instance, const GridSpec& grid);

/// Serial reference implementation on Scalars; definitional and unoptimized,
/// kept for kernel equivalence testing.
OracleReport grid_optimize_serial(const ProblemInstance& instance, const GridSpec& grid);

/// Exact membership test of x in the solution set (residuated preimage for
/// generated sets). For Substituted sets the test is sound but may
/// under-approximate (it checks the maximal preimage only).
bool set_contains(const Semifield& sf, const SolutionSet& set, const TropVector& x);

/// Draws `count` elements of the set: interval sets are sampled between
/// their bounds, cones in [u_lower, u_lower * offset], pinned boxes with a
/// random positive scaling. All draws stay exact in exact mode.
std::vector<TropVector> sample_solution_set(const Semifield& sf, const SolutionSet& set,
                                            std::size_t count, const Rational& offset,
                                            std::uint64_t seed);

/// Verifies a solver report against the instance: (a) `samples` random
/// elements of the reported set are feasible and attain the reported value
/// exactly; (b) the grid oracle's best value equals the reported value;
/// (c) for interval-shaped sets, every collected oracle argbest lies in the
/// set. Throws VerificationFailure carrying the first violated assertion.
VerificationRecord check_solution_set(const ProblemInstance& instance, const OptimumReport& report,
                                      int samples, std::uint64_t seed = 0,
                                      const std::optional<GridSpec>& grid_override = std::nullopt);

}  // namespace tropopt
