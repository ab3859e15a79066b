#include <nlohmann/json.hpp>
#include <random>

#include "doctest.h"
#include "instance_gen.hpp"
#include "test_support.hpp"
#include "tropopt/errors.hpp"
#include "tropopt/io.hpp"
#include "tropopt/solvers.hpp"

using namespace tropopt;
using namespace tropopt::testing;
using nlohmann::json;

namespace {
const Semifield sf = Semifield::max_plus();
}

TEST_CASE("scalar encoding: null is the semifield zero, strings are exact") {
  CHECK(scalar_to_json(sf, Scalar::zero()).is_null());
  CHECK(scalar_to_json(sf, fin(-7, 2)) == "-7/2");
  CHECK(scalar_from_json(sf, json(nullptr)).is_zero());
  CHECK(sf.eq(scalar_from_json(sf, json("3/4")), fin(3, 4)));
  CHECK(sf.eq(scalar_from_json(sf, json(5)), fin(5)));
  CHECK(sf.eq(scalar_from_json(sf, json(0.5)), fin(1, 2)));
  CHECK_THROWS_AS(scalar_from_json(sf, json("inf")), ParseError);
  CHECK_THROWS_AS(scalar_from_json(sf, json("-inf")), ParseError);
  CHECK_THROWS_AS(scalar_from_json(sf, json("wat")), ParseError);
}

TEST_CASE("instance parsing: schema checks") {
  json doc = {
      {"semifield", "max-plus"},
      {"problem", "P4-cheby-box"},
      {"data",
       {{"p", {"4"}}, {"q", {"0"}}, {"g", {"0"}}, {"h", {"10"}}}},
  };
  ParsedInstance parsed = instance_from_json(doc);
  CHECK(parsed.instance.form == ProblemForm::P4ChebyBox);
  CHECK(parsed.instance.p->dim() == 1);

  json bad_form = doc;
  bad_form["problem"] = "P99";
  CHECK_THROWS_AS(instance_from_json(bad_form), ParseError);

  json missing = doc;
  missing["data"].erase("h");
  CHECK_THROWS_AS(instance_from_json(missing), ParseError);

  json ragged = doc;
  ragged["problem"] = "P3-rayleigh";
  ragged["data"] = {{"A", {{"1", "2"}, {"3"}}}};
  CHECK_THROWS_AS(instance_from_json(ragged), ParseError);

  json mismatched = doc;
  mismatched["data"]["h"] = {"10", "11"};
  CHECK_THROWS_AS(instance_from_json(mismatched), ParseError);
}

TEST_CASE("instance options: mode and oracle overrides") {
  json doc = {
      {"semifield", "max-plus"},
      {"problem", "P3-rayleigh"},
      {"data", {{"A", {{"1", "3"}, {"0", "2"}}}}},
      {"options",
       {{"mode", "float"},
        {"samples", 7},
        {"grid", {{"lower", {"-1", "-1"}}, {"upper", {"1", "1"}}, {"step", "1/3"}}}}},
  };
  ParsedInstance parsed = instance_from_json(doc);
  CHECK(parsed.instance.semifield.mode() == ArithmeticMode::Float);
  CHECK(parsed.options.samples == 7);
  CHECK(parsed.options.grid_step == Rational(1, 3));

  ParsedInstance exact = instance_from_json(doc, ArithmeticMode::Exact);
  CHECK(exact.instance.semifield.mode() == ArithmeticMode::Exact);

  GridSpec grid = resolve_grid(exact.instance, exact.options);
  CHECK(grid.step == Rational(1, 3));
  CHECK(sf.eq(grid.lower[0], fin(-1)));
  CHECK(sf.eq(grid.upper[1], fin(1)));
  GridSpec flagged = resolve_grid(exact.instance, exact.options, Rational(1, 6));
  CHECK(flagged.step == Rational(1, 6));
}

TEST_CASE("reports round-trip losslessly through the parser") {
  std::mt19937_64 rng(101);
  for (std::size_t f = 0; f < kProblemFormCount; ++f) {
    ProblemForm form = form_at(f);
    for (int i = 0; i < 5; ++i) {
      GenDims dims{1 + rng() % 3, 1 + rng() % 3, 1 + rng() % 3};
      ProblemInstance inst = random_instance(form, rng, dims, -4, 4);
      OptimumReport report = solve(inst);
      json encoded = report_to_json(sf, report);
      OptimumReport decoded = report_from_json(sf, encoded);
      CHECK(report_eq(sf, report, decoded));
      CHECK(report_to_json(sf, decoded) == encoded);
    }
  }
}

TEST_CASE("rendered reports are deterministic") {
  ProblemInstance inst;
  inst.form = ProblemForm::P3Rayleigh;
  inst.A = mat({{fin(1), fin(3)}, {fin(0), fin(2)}});
  OptimumReport report = solve(inst);
  std::string once = render_json(report_to_json(sf, report));
  std::string twice = render_json(report_to_json(sf, solve(inst)));
  CHECK(once == twice);
  CHECK(once.back() == '\n');
}

TEST_CASE("min-plus instances parse with exact arithmetic by default") {
  json doc = {
      {"semifield", "min-plus"},
      {"problem", "P3-rayleigh"},
      {"data", {{"A", {{"-1", "-3"}, {"0", "-2"}}}}},
  };
  ParsedInstance parsed = instance_from_json(doc);
  CHECK(parsed.instance.semifield.id() == SemifieldId::MinPlus);
  CHECK(parsed.instance.semifield.is_exact());
  OptimumReport report = solve(parsed.instance);
  CHECK(sf.eq(report.value, fin(-2)));  // mirror of the max-plus example
}

TEST_CASE("max-times instances run in float mode") {
  json doc = {
      {"semifield", "max-times"},
      {"problem", "P4-cheby-box"},
      {"data", {{"p", {16.0}}, {"q", {1.0}}, {"g", {1.0}}, {"h", {100.0}}}},
  };
  ParsedInstance parsed = instance_from_json(doc);
  OptimumReport report = solve(parsed.instance);
  const Semifield& mt = parsed.instance.semifield;
  CHECK(mt.eq(report.value, mt.from_real(4.0)));  // sqrt(16/1)
  CHECK_THROWS_AS(instance_from_json(doc, ArithmeticMode::Exact), ParseError);
}
