#include <random>

#include "doctest.h"
#include "instance_gen.hpp"
#include "test_support.hpp"
#include "tropopt/errors.hpp"
#include "tropopt/oracle.hpp"
#include "tropopt/solvers.hpp"

using namespace tropopt;
using namespace tropopt::testing;

namespace {

const Semifield sf = Semifield::max_plus();

ProblemInstance p4_example() {
  ProblemInstance inst;
  inst.form = ProblemForm::P4ChebyBox;
  inst.p = vec({fin(4)});
  inst.q = vec({fin(0)});
  inst.g = vec({fin(0)});
  inst.h = vec({fin(10)});
  return inst;
}

ProblemInstance p3_example() {
  ProblemInstance inst;
  inst.form = ProblemForm::P3Rayleigh;
  inst.A = mat({{fin(1), fin(3)}, {fin(0), fin(2)}});
  return inst;
}

GridSpec box_grid(std::vector<std::int64_t> lo, std::vector<std::int64_t> hi, Rational step) {
  GridSpec grid{TropVector(lo.size()), TropVector(hi.size()), step};
  for (std::size_t i = 0; i < lo.size(); ++i) {
    grid.lower[i] = fin(lo[i]);
    grid.upper[i] = fin(hi[i]);
  }
  return grid;
}

}  // namespace

TEST_CASE("evaluate_objective: examples") {
  CHECK(sf.eq(evaluate_objective(p4_example(), vec({fin(2)})), fin(2)));
  CHECK(sf.eq(evaluate_objective(p3_example(), vec({fin(0), fin(-2)})), fin(2)));

  // the span objective is invariant along the optimal ray
  ProblemInstance p9;
  p9.form = ProblemForm::P9SpanMin;
  p9.A = mat({{fin(0), zz()}, {zz(), fin(-3)}});
  p9.B = p9.A;
  p9.p = ones_vector(sf, 2);
  p9.q = ones_vector(sf, 2);
  OptimumReport rep = solve(p9);
  TropVector ray = rep.witness;
  Scalar at_one = evaluate_objective(p9, ray);
  for (std::int64_t alpha : {-5, 2, 9}) {
    CHECK(sf.eq(evaluate_objective(p9, scale(sf, fin(alpha), ray)), at_one));
  }

  CHECK_THROWS_AS(evaluate_objective(p4_example(), vec({zz()})), NotRegular);
  CHECK_THROWS_AS(evaluate_objective(p4_example(), vec({fin(0), fin(0)})), ShapeMismatch);
}

TEST_CASE("evaluate_objective agrees with the scalar-loop double entry") {
  std::mt19937_64 rng(79);
  for (std::size_t f = 0; f < kProblemFormCount; ++f) {
    ProblemForm form = form_at(f);
    for (int i = 0; i < 25; ++i) {
      GenDims dims{1 + rng() % 3, 1 + rng() % 3, 1 + rng() % 3};
      ProblemInstance inst = random_instance(form, rng, dims, -4, 4);
      TropVector x = random_regular_vector(rng, inst.unknown_dim(), -6, 6);
      CHECK(sf.eq(evaluate_objective(inst, x), evaluate_objective_direct(inst, x)));
    }
  }
}

TEST_CASE("check_feasible: examples") {
  ProblemInstance p4 = p4_example();
  CHECK(check_feasible(p4, vec({fin(2)})));
  CHECK(check_feasible(p4, vec({fin(0)})));
  CHECK(!check_feasible(p4, vec({fin(11)})));
  CHECK(!check_feasible(p4, vec({fin(-1)})));

  ProblemInstance p16;
  p16.form = ProblemForm::P16RayleighFull;
  p16.A = mat({{fin(1)}});
  p16.B = TropMatrix(1, 1);
  p16.C = mat({{fin(0)}});
  p16.g = vec({fin(0)});
  p16.h = vec({fin(5)});
  CHECK(check_feasible(p16, vec({fin(3)})));
  CHECK(!check_feasible(p16, vec({fin(6)})));

  // x = B* u with u >= g is always feasible for the inequality form
  std::mt19937_64 rng(83);
  ProblemInstance p17 = random_instance(ProblemForm::P17RayleighIneq, rng, {3}, -3, 3);
  TropMatrix star = kleene_star(sf, *p17.B);
  for (int i = 0; i < 100; ++i) {
    TropVector u = random_regular_vector(rng, 3, -4, 4);
    for (std::size_t j = 0; j < 3; ++j) u[j] = sf.add(u[j], (*p17.g)[j]);
    CHECK(check_feasible(p17, mat_vec(sf, star, u)));
  }
}

TEST_CASE("grid_optimize: hand examples") {
  OracleReport p4 = grid_optimize(p4_example(), box_grid({-10}, {20}, Rational(1, 2)));
  CHECK(sf.eq(p4.best_value, fin(2)));
  REQUIRE(p4.argbest.size() == 1);
  CHECK(sf.eq(p4.argbest[0][0], fin(2)));
  CHECK(p4.evaluated_count == 61);

  OracleReport p3 = grid_optimize(p3_example(), box_grid({-4, -4}, {4, 4}, Rational(1, 2)));
  CHECK(sf.eq(p3.best_value, fin(2)));

  ProblemInstance infeasible = p4_example();
  infeasible.g = vec({fin(11)});
  infeasible.h = vec({fin(10)});
  CHECK_THROWS_AS(grid_optimize(infeasible, box_grid({0}, {9}, Rational(1, 2))),
                  EmptyFeasibleGrid);
}

TEST_CASE("parallel kernel and serial reference are bitwise identical") {
  std::mt19937_64 rng(89);
  for (std::size_t f = 0; f < kProblemFormCount; ++f) {
    ProblemForm form = form_at(f);
    for (int i = 0; i < 4; ++i) {
      GenDims dims{1 + rng() % 2, 1 + rng() % 2, 1 + rng() % 2};
      ProblemInstance inst = random_instance(form, rng, dims, -2, 2);
      GridSpec grid = default_grid(inst);
      OracleReport fast;
      OracleReport slow;
      bool fast_empty = false;
      bool slow_empty = false;
      try {
        fast = grid_optimize(inst, grid);
      } catch (const EmptyFeasibleGrid&) {
        fast_empty = true;
      }
      try {
        slow = grid_optimize_serial(inst, grid);
      } catch (const EmptyFeasibleGrid&) {
        slow_empty = true;
      }
      REQUIRE(fast_empty == slow_empty);
      if (fast_empty) continue;
      CHECK(fast.best_value == slow.best_value);  // bitwise, not tolerance
      CHECK(fast.evaluated_count == slow.evaluated_count);
      CHECK(fast.argbest_truncated == slow.argbest_truncated);
      REQUIRE(fast.argbest.size() == slow.argbest.size());
      for (std::size_t k = 0; k < fast.argbest.size(); ++k) {
        CHECK(fast.argbest[k] == slow.argbest[k]);
      }
    }
  }
}

TEST_CASE("default_grid covers the documented box and step") {
  ProblemInstance p4 = p4_example();
  GridSpec grid = default_grid(p4);
  // constants {4, 0, 0, 10}: span 10, box [-10, 20], step 1/lcm(1..2)
  CHECK(grid.step == Rational(1, 2));
  CHECK(sf.eq(grid.lower[0], fin(0)));   // tightened by g
  CHECK(sf.eq(grid.upper[0], fin(10)));  // tightened by h

  ProblemInstance p3 = p3_example();
  GridSpec g3 = default_grid(p3);
  CHECK(g3.step == Rational(1, 6));  // lcm(1..3)
  CHECK(sf.eq(g3.lower[0], fin(-3)));
  CHECK(sf.eq(g3.upper[0], fin(6)));
}

TEST_CASE("check_solution_set: passes on correct reports, flags corrupted ones") {
  ProblemInstance inst = p4_example();
  OptimumReport report = solve(inst);
  VerificationRecord record = check_solution_set(inst, report, 50);
  CHECK(record.samples_checked == 50);
  CHECK(record.optimum == "2");
  CHECK(record.oracle_best == "2");
  CHECK(record.argbest_checked == record.argbest_checked);

  OptimumReport corrupted = report;
  corrupted.value = sf.mul(corrupted.value, fin(2));
  CHECK_THROWS_AS(check_solution_set(inst, corrupted, 10), VerificationFailure);

  // Theorem-6 instance: oracle argbests attain the maximum
  ProblemInstance p11;
  p11.form = ProblemForm::P11SpanMax;
  p11.A = mat({{fin(0), fin(0)}, {fin(0), fin(0)}});
  p11.B = mat({{fin(1), fin(0)}, {fin(0), fin(1)}});
  p11.p = ones_vector(sf, 2);
  p11.q = ones_vector(sf, 2);
  OptimumReport max_report = solve(p11);
  VerificationRecord r11 = check_solution_set(p11, max_report, 50);
  CHECK(r11.oracle_best == "1");
}

TEST_CASE("set membership: residuated tests") {
  // interval
  SolutionSet interval;
  interval.v = SolutionSet::Interval{vec({fin(0)}), vec({fin(2)})};
  CHECK(set_contains(sf, interval, vec({fin(1)})));
  CHECK(!set_contains(sf, interval, vec({fin(3)})));

  // generated interval around a nontrivial star
  TropMatrix star = kleene_star(sf, mat({{zz(), fin(-1)}, {fin(-2), zz()}}));
  SolutionSet generated;
  generated.v = SolutionSet::GeneratedInterval{star, vec({fin(2), fin(1)}), vec({fin(2), fin(2)})};
  CHECK(set_contains(sf, generated, mat_vec(sf, star, vec({fin(2), fin(1)}))));
  CHECK(set_contains(sf, generated, mat_vec(sf, star, vec({fin(2), fin(2)}))));
  CHECK(!set_contains(sf, generated, vec({fin(10), fin(10)})));

  // cone membership is scale-free
  SolutionSet cone;
  cone.v = SolutionSet::GeneratedCone{star, TropVector(2)};
  TropVector x = mat_vec(sf, star, vec({fin(4), fin(-1)}));
  CHECK(set_contains(sf, cone, x));
  CHECK(set_contains(sf, cone, scale(sf, fin(-7), x)));
  CHECK(!set_contains(sf, cone, vec({fin(0), fin(5)})));  // violates the star fixpoint
}

TEST_CASE("sampled set elements are feasible and optimal across forms") {
  std::mt19937_64 rng(97);
  for (std::size_t f = 0; f < kProblemFormCount; ++f) {
    ProblemForm form = form_at(f);
    for (int i = 0; i < 6; ++i) {
      GenDims dims{1 + rng() % 3, 1 + rng() % 3, 1 + rng() % 3};
      ProblemInstance inst = random_instance(form, rng, dims, -4, 4);
      OptimumReport report = solve(inst);
      auto [cmin, cmax] = finite_constant_range(inst);
      Rational offset = cmax - cmin;
      if (offset < Rational(1)) offset = Rational(1);
      for (const TropVector& x : sample_solution_set(sf, report.set, 50, offset, 1234 + i)) {
        CHECK(check_feasible(inst, x));
        CHECK(sf.eq(evaluate_objective(inst, x), report.value));
      }
    }
  }
}
