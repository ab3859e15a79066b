#include "tropopt/problem.hpp"

#include <array>

#include "tropopt/errors.hpp"

namespace tropopt {

namespace {

struct FormInfo {
  ProblemForm form;
  const char* name;
  Sense sense;
};

constexpr std::array<FormInfo, kProblemFormCount> kForms{{
    {ProblemForm::P3Rayleigh, "P3-rayleigh", Sense::Minimize},
    {ProblemForm::P4ChebyBox, "P4-cheby-box", Sense::Minimize},
    {ProblemForm::P5ChebyLower, "P5-cheby-lower", Sense::Minimize},
    {ProblemForm::P6ChebyIneqBox, "P6-cheby-ineq-box", Sense::Minimize},
    {ProblemForm::P8ChebyIneq, "P8-cheby-ineq", Sense::Minimize},
    {ProblemForm::P9SpanMin, "P9-span-min", Sense::Minimize},
    {ProblemForm::P10SpanMinEqIneq, "P10-span-min-eqineq", Sense::Minimize},
    {ProblemForm::P11SpanMax, "P11-span-max", Sense::Maximize},
    {ProblemForm::P13SpanMaxIneq, "P13-span-max-ineq", Sense::Maximize},
    {ProblemForm::P14SpanMaxEq, "P14-span-max-eq", Sense::Maximize},
    {ProblemForm::P15RayleighAffine, "P15-rayleigh-affine", Sense::Minimize},
    {ProblemForm::P16RayleighFull, "P16-rayleigh-full", Sense::Minimize},
    {ProblemForm::P17RayleighIneq, "P17-rayleigh-ineq", Sense::Minimize},
    {ProblemForm::P18RayleighBox, "P18-rayleigh-box", Sense::Minimize},
    {ProblemForm::P19RayleighPIneq, "P19-rayleigh-p-ineq", Sense::Minimize},
}};

const FormInfo& info(ProblemForm form) {
  for (const FormInfo& fi : kForms) {
    if (fi.form == form) return fi;
  }
  throw Error("unknown problem form");
}

void need(bool present, const char* slot, const char* form) {
  if (!present) throw ShapeMismatch(std::string(form) + " requires " + slot);
}

void dim_check(bool ok, const char* what, const char* form) {
  if (!ok) throw ShapeMismatch(std::string(form) + ": inconsistent dimensions for " + what);
}

}  // namespace

const char* form_name(ProblemForm form) { return info(form).name; }

std::optional<ProblemForm> form_from_string(std::string_view s) {
  for (const FormInfo& fi : kForms) {
    if (s == fi.name) return fi.form;
  }
  return std::nullopt;
}

ProblemForm form_at(std::size_t index) { return kForms.at(index).form; }

Sense sense_of(ProblemForm form) { return info(form).sense; }

std::size_t ProblemInstance::unknown_dim() const {
  switch (form) {
    case ProblemForm::P3Rayleigh:
    case ProblemForm::P15RayleighAffine:
    case ProblemForm::P16RayleighFull:
    case ProblemForm::P17RayleighIneq:
    case ProblemForm::P18RayleighBox:
    case ProblemForm::P19RayleighPIneq:
      return A ? A->cols() : 0;
    case ProblemForm::P4ChebyBox:
      return p ? p->dim() : 0;
    case ProblemForm::P5ChebyLower:
    case ProblemForm::P9SpanMin:
    case ProblemForm::P11SpanMax:
    case ProblemForm::P13SpanMaxIneq:
    case ProblemForm::P14SpanMaxEq:
      return A ? A->cols() : 0;
    case ProblemForm::P6ChebyIneqBox:
    case ProblemForm::P8ChebyIneq:
      return B ? B->cols() : 0;
    case ProblemForm::P10SpanMinEqIneq:
      return C ? C->cols() : 0;
  }
  return 0;
}

void ProblemInstance::validate() const {
  const char* fname = form_name(form);
  switch (form) {
    case ProblemForm::P3Rayleigh:
      need(A.has_value(), "A", fname);
      dim_check(A->is_square(), "A", fname);
      break;
    case ProblemForm::P4ChebyBox:
      need(p && q && g && h, "p, q, g, h", fname);
      dim_check(p->dim() == q->dim() && p->dim() == g->dim() && p->dim() == h->dim(),
                "p, q, g, h", fname);
      break;
    case ProblemForm::P5ChebyLower:
      need(A && p && q && g, "A, p, q, g", fname);
      dim_check(p->dim() == A->rows() && q->dim() == A->rows() && g->dim() == A->cols(),
                "A, p, q, g", fname);
      break;
    case ProblemForm::P6ChebyIneqBox:
      need(B && p && q && g && h, "B, p, q, g, h", fname);
      dim_check(B->is_square() && p->dim() == B->cols() && q->dim() == B->cols() &&
                    g->dim() == B->cols() && h->dim() == B->cols(),
                "B, p, q, g, h", fname);
      break;
    case ProblemForm::P8ChebyIneq:
      need(B && p && q, "B, p, q", fname);
      dim_check(B->is_square() && p->dim() == B->cols() && q->dim() == B->cols(), "B, p, q", fname);
      break;
    case ProblemForm::P9SpanMin:
      need(A && B && p && q, "A, B, p, q", fname);
      dim_check(A->rows() == B->rows() && A->cols() == B->cols() && p->dim() == A->rows() &&
                    q->dim() == A->rows(),
                "A, B, p, q", fname);
      break;
    case ProblemForm::P10SpanMinEqIneq:
      need(C && D, "C, D", fname);
      dim_check(C->is_square() && D->is_square() && C->rows() == D->rows(), "C, D", fname);
      break;
    case ProblemForm::P11SpanMax:
      need(A && B && p && q, "A, B, p, q", fname);
      dim_check(A->cols() == B->cols() && p->dim() == A->rows() && q->dim() == B->rows(),
                "A, B, p, q", fname);
      break;
    case ProblemForm::P13SpanMaxIneq:
    case ProblemForm::P14SpanMaxEq:
      need(A && B && C && p && q, "A, B, C, p, q", fname);
      dim_check(A->cols() == B->cols() && C->is_square() && C->rows() == A->cols() &&
                    p->dim() == A->rows() && q->dim() == B->rows(),
                "A, B, C, p, q", fname);
      break;
    case ProblemForm::P15RayleighAffine:
      need(A && p && q && c, "A, p, q, c", fname);
      dim_check(A->is_square() && p->dim() == A->cols() && q->dim() == A->cols(), "A, p, q", fname);
      break;
    case ProblemForm::P16RayleighFull:
      need(A && B && C && g && h, "A, B, C, g, h", fname);
      dim_check(A->is_square() && B->is_square() && A->rows() == B->rows() &&
                    C->cols() == A->cols() && g->dim() == A->cols() && h->dim() == C->rows(),
                "A, B, C, g, h", fname);
      break;
    case ProblemForm::P17RayleighIneq:
      need(A && B && g, "A, B, g", fname);
      dim_check(A->is_square() && B->is_square() && A->rows() == B->rows() &&
                    g->dim() == A->cols(),
                "A, B, g", fname);
      break;
    case ProblemForm::P18RayleighBox:
      need(A && g && h, "A, g, h", fname);
      dim_check(A->is_square() && g->dim() == A->cols() && h->dim() == A->cols(), "A, g, h", fname);
      break;
    case ProblemForm::P19RayleighPIneq:
      need(A && B && p && g, "A, B, p, g", fname);
      dim_check(A->is_square() && B->is_square() && A->rows() == B->rows() &&
                    p->dim() == A->cols() && g->dim() == A->cols(),
                "A, B, p, g", fname);
      break;
  }
}

}  // namespace tropopt
