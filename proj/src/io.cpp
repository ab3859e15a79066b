#include "tropopt/io.hpp"

#include <charconv>
#include <nlohmann/json.hpp>

#include "tropopt/algebra.hpp"
#include "tropopt/errors.hpp"

namespace tropopt {

using nlohmann::json;

namespace {

std::string double_to_string(double d) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), d);
  if (ec != std::errc()) throw Error("failed to render double");
  return std::string(buf, ptr);
}

Sense sense_from_json(const json& j) {
  std::string s = j.get<std::string>();
  if (s == "minimize") return Sense::Minimize;
  if (s == "maximize") return Sense::Maximize;
  throw ParseError("unknown sense: " + s);
}

}  // namespace

json scalar_to_json(const Semifield& sf, const Scalar& s) {
  if (s.is_zero()) return nullptr;
  if (s.is_exact()) return s.rat().to_string();
  return double_to_string(s.real());
}

Scalar scalar_from_json(const Semifield& sf, const json& j) {
  if (j.is_null()) return Scalar::zero();
  if (j.is_string()) {
    const std::string& text = j.get_ref<const std::string&>();
    if (text == "inf" || text == "-inf" || text == "+inf") {
      throw ParseError("infinity literals are not accepted; use null for the semifield zero");
    }
    if (auto r = Rational::parse(text)) return sf.from_rational(*r);
    // Float-mode values may carry a decimal point.
    if (!sf.is_exact()) {
      char* end = nullptr;
      double d = std::strtod(text.c_str(), &end);
      if (end == text.c_str() + text.size() && !text.empty()) return sf.from_real(d);
    }
    throw ParseError("not a scalar: \"" + text + "\"");
  }
  if (j.is_number_integer()) return sf.from_rational(Rational(j.get<std::int64_t>()));
  if (j.is_number()) return sf.from_real(j.get<double>());
  throw ParseError("not a scalar: " + j.dump());
}

json vector_to_json(const Semifield& sf, const TropVector& v) {
  json arr = json::array();
  for (std::size_t i = 0; i < v.dim(); ++i) arr.push_back(scalar_to_json(sf, v[i]));
  return arr;
}

TropVector vector_from_json(const Semifield& sf, const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("vector must be a non-empty array");
  TropVector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = scalar_from_json(sf, j[i]);
  return v;
}

json matrix_to_json(const Semifield& sf, const TropMatrix& m) {
  json arr = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(sf, m.at(i, j)));
    arr.push_back(std::move(row));
  }
  return arr;
}

TropMatrix matrix_from_json(const Semifield& sf, const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty()) {
    throw ParseError("matrix must be a non-empty array of rows");
  }
  TropMatrix m(j.size(), j[0].size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != m.cols()) throw ParseError("ragged matrix rows");
    for (std::size_t k = 0; k < m.cols(); ++k) m.at(i, k) = scalar_from_json(sf, j[i][k]);
  }
  return m;
}

ParsedInstance instance_from_json(const json& j, std::optional<ArithmeticMode> mode_override) {
  if (!j.is_object()) throw ParseError("instance must be a JSON object");
  if (!j.contains("semifield") || !j.contains("problem") || !j.contains("data")) {
    throw ParseError("instance requires \"semifield\", \"problem\" and \"data\"");
  }
  auto id = semifield_from_string(j.at("semifield").get<std::string>());
  if (!id) throw ParseError("unknown semifield: " + j.at("semifield").dump());
  auto form = form_from_string(j.at("problem").get<std::string>());
  if (!form) throw ParseError("unknown problem form: " + j.at("problem").dump());

  const json options = j.value("options", json::object());
  ArithmeticMode mode = (*id == SemifieldId::MaxPlus || *id == SemifieldId::MinPlus)
                            ? ArithmeticMode::Exact
                            : ArithmeticMode::Float;
  if (options.contains("mode")) {
    std::string m = options.at("mode").get<std::string>();
    if (m == "exact") {
      mode = ArithmeticMode::Exact;
    } else if (m == "float") {
      mode = ArithmeticMode::Float;
    } else {
      throw ParseError("unknown arithmetic mode: " + m);
    }
  }
  if (mode_override) mode = *mode_override;

  ParsedInstance parsed;
  try {
    parsed.instance.semifield = Semifield::make(*id, mode);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  parsed.instance.form = *form;
  const Semifield& sf = parsed.instance.semifield;

  const json& data = j.at("data");
  if (!data.is_object()) throw ParseError("\"data\" must be an object");
  try {
    if (data.contains("A")) parsed.instance.A = matrix_from_json(sf, data.at("A"));
    if (data.contains("B")) parsed.instance.B = matrix_from_json(sf, data.at("B"));
    if (data.contains("C")) parsed.instance.C = matrix_from_json(sf, data.at("C"));
    if (data.contains("D")) parsed.instance.D = matrix_from_json(sf, data.at("D"));
    if (data.contains("p")) parsed.instance.p = vector_from_json(sf, data.at("p"));
    if (data.contains("q")) parsed.instance.q = vector_from_json(sf, data.at("q"));
    if (data.contains("g")) parsed.instance.g = vector_from_json(sf, data.at("g"));
    if (data.contains("h")) parsed.instance.h = vector_from_json(sf, data.at("h"));
    if (data.contains("c")) parsed.instance.c = scalar_from_json(sf, data.at("c"));
    parsed.instance.validate();
  } catch (const ShapeMismatch& e) {
    throw ParseError(e.what());
  }

  if (options.contains("grid")) {
    const json& grid = options.at("grid");
    auto rationals = [&](const json& arr) {
      std::vector<Rational> out;
      for (const json& e : arr) {
        Scalar s = scalar_from_json(sf, e);
        if (s.is_zero() || !s.is_exact()) throw ParseError("grid bounds must be finite rationals");
        out.push_back(s.rat());
      }
      return out;
    };
    if (grid.contains("lower")) parsed.options.grid_lower = rationals(grid.at("lower"));
    if (grid.contains("upper")) parsed.options.grid_upper = rationals(grid.at("upper"));
    if (grid.contains("step")) {
      auto r = Rational::parse(grid.at("step").is_string()
                                   ? grid.at("step").get<std::string>()
                                   : grid.at("step").dump());
      if (!r || !(Rational(0) < *r)) throw ParseError("grid step must be a positive rational");
      parsed.options.grid_step = *r;
    }
  }
  if (options.contains("samples")) parsed.options.samples = options.at("samples").get<int>();
  return parsed;
}

GridSpec resolve_grid(const ProblemInstance& instance, const OracleOptions& options,
                      const std::optional<Rational>& step_flag) {
  GridSpec grid = default_grid(instance);
  const Semifield& sf = instance.semifield;
  if (options.grid_lower) {
    if (options.grid_lower->size() != grid.lower.dim()) {
      throw ParseError("grid lower bound has the wrong dimension");
    }
    for (std::size_t i = 0; i < grid.lower.dim(); ++i) {
      grid.lower[i] = sf.from_rational((*options.grid_lower)[i]);
    }
  }
  if (options.grid_upper) {
    if (options.grid_upper->size() != grid.upper.dim()) {
      throw ParseError("grid upper bound has the wrong dimension");
    }
    for (std::size_t i = 0; i < grid.upper.dim(); ++i) {
      grid.upper[i] = sf.from_rational((*options.grid_upper)[i]);
    }
  }
  if (options.grid_step) grid.step = *options.grid_step;
  if (step_flag) grid.step = *step_flag;
  return grid;
}

json solution_set_to_json(const Semifield& sf, const SolutionSet& set) {
  json out;
  if (const auto* iv = std::get_if<SolutionSet::Interval>(&set.v)) {
    out["type"] = "interval";
    out["lower"] = vector_to_json(sf, iv->lower);
    out["upper"] = vector_to_json(sf, iv->upper);
  } else if (const auto* gi = std::get_if<SolutionSet::GeneratedInterval>(&set.v)) {
    out["type"] = "generated-interval";
    out["generator"] = matrix_to_json(sf, gi->generator);
    out["u_lower"] = vector_to_json(sf, gi->u_lower);
    out["u_upper"] = vector_to_json(sf, gi->u_upper);
  } else if (const auto* gc = std::get_if<SolutionSet::GeneratedCone>(&set.v)) {
    out["type"] = "generated-cone";
    out["generator"] = matrix_to_json(sf, gc->generator);
    out["u_lower"] = vector_to_json(sf, gc->u_lower);
  } else if (const auto* pb = std::get_if<SolutionSet::PinnedScaledBox>(&set.v)) {
    out["type"] = "pinned-scaled-box";
    out["k"] = pb->k + 1;  // 1-based in documents
    out["s"] = pb->s + 1;
    out["pin"] = scalar_to_json(sf, pb->pin);
    out["caps"] = vector_to_json(sf, pb->caps);
  } else if (const auto* sub = std::get_if<SolutionSet::Substituted>(&set.v)) {
    out["type"] = "substituted";
    out["outer"] = matrix_to_json(sf, sub->outer);
    out["inner"] = solution_set_to_json(sf, *sub->inner);
  }
  return out;
}

SolutionSet solution_set_from_json(const Semifield& sf, const json& j) {
  SolutionSet set;
  std::string type = j.at("type").get<std::string>();
  if (type == "interval") {
    set.v = SolutionSet::Interval{vector_from_json(sf, j.at("lower")),
                                  vector_from_json(sf, j.at("upper"))};
  } else if (type == "generated-interval") {
    set.v = SolutionSet::GeneratedInterval{matrix_from_json(sf, j.at("generator")),
                                           vector_from_json(sf, j.at("u_lower")),
                                           vector_from_json(sf, j.at("u_upper"))};
  } else if (type == "generated-cone") {
    set.v = SolutionSet::GeneratedCone{matrix_from_json(sf, j.at("generator")),
                                       vector_from_json(sf, j.at("u_lower"))};
  } else if (type == "pinned-scaled-box") {
    std::size_t k = j.at("k").get<std::size_t>();
    std::size_t s = j.at("s").get<std::size_t>();
    if (k == 0 || s == 0) throw ParseError("pinned-scaled-box indices are 1-based");
    set.v = SolutionSet::PinnedScaledBox{k - 1, s - 1, scalar_from_json(sf, j.at("pin")),
                                         vector_from_json(sf, j.at("caps"))};
  } else if (type == "substituted") {
    set.v = SolutionSet::Substituted{
        matrix_from_json(sf, j.at("outer")),
        std::make_shared<SolutionSet>(solution_set_from_json(sf, j.at("inner")))};
  } else {
    throw ParseError("unknown solution set type: " + type);
  }
  return set;
}

json report_to_json(const Semifield& sf, const OptimumReport& report) {
  json out;
  out["optimum"] = scalar_to_json(sf, report.value);
  out["sense"] = report.sense == Sense::Minimize ? "minimize" : "maximize";
  out["solution_set"] = solution_set_to_json(sf, report.set);
  out["witness"] = vector_to_json(sf, report.witness);
  out["diagnostics"] = report.diagnostics;
  return out;
}

OptimumReport report_from_json(const Semifield& sf, const json& j) {
  OptimumReport report;
  report.value = scalar_from_json(sf, j.at("optimum"));
  report.sense = sense_from_json(j.at("sense"));
  report.set = solution_set_from_json(sf, j.at("solution_set"));
  report.witness = vector_from_json(sf, j.at("witness"));
  if (j.contains("diagnostics")) {
    report.diagnostics = j.at("diagnostics").get<std::vector<std::string>>();
  }
  return report;
}

namespace {

bool set_eq(const Semifield& sf, const SolutionSet& a, const SolutionSet& b) {
  // Structural comparison via the canonical JSON form keeps this honest with
  // the serialization (round-trip equality is exactly what it claims).
  return solution_set_to_json(sf, a) == solution_set_to_json(sf, b);
}

}  // namespace

bool report_eq(const Semifield& sf, const OptimumReport& a, const OptimumReport& b) {
  return sf.eq(a.value, b.value) && a.sense == b.sense && vector_eq(sf, a.witness, b.witness) &&
         a.diagnostics == b.diagnostics && set_eq(sf, a.set, b.set);
}

std::string render_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace tropopt
