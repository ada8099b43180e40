#include "exalg/eval.hpp"

#include <cmath>

#include "exalg/geometry.hpp"
#include "exalg/grades.hpp"
#include "exalg/star.hpp"

namespace exalg {

namespace {

const Multivector& as_mv(const Value& v, const char* stage) {
  if (const auto* m = std::get_if<Multivector>(&v)) return *m;
  throw EvalError(stage, "subspace value cannot be used here");
}

Multivector make_scalar(const SessionConfig& cfg, Scalar s) {
  Multivector m(cfg.dimension, cfg.field, cfg.tolerance);
  m.add_term(0u, s);
  return m;
}

bool is_scalar_value(const Multivector& m) {
  return m.is_zero() || *m.top_grade() == 0;
}

int as_small_int(const Multivector& m, const char* stage) {
  if (!is_scalar_value(m))
    throw EvalError(stage, "expected a scalar argument");
  Scalar s = m.scalar_part();
  double r = std::round(s.real());
  if (std::abs(s.imag()) > 1e-9 || std::abs(s.real() - r) > 1e-9)
    throw EvalError(stage, "expected an integer argument");
  return static_cast<int>(r);
}

Blade as_blade(const Multivector& m, const char* stage) {
  try {
    return Blade::validated(m);
  } catch (const std::invalid_argument& err) {
    throw EvalError(stage, err.what());
  }
}

ContractionConvention convention_from(const std::string& name) {
  if (name == "I_left") return ContractionConvention::ILeft;
  if (name == "I_right") return ContractionConvention::IRight;
  if (name == "II_left") return ContractionConvention::IILeft;
  if (name == "II_right") return ContractionConvention::IIRight;
  if (name == "III_left") return ContractionConvention::IIILeft;
  if (name == "III_right") return ContractionConvention::IIIRight;
  return ContractionConvention::Hestenes;
}

Value eval_call(const Expr& e, const SessionConfig& cfg);

Value eval_impl(const Expr& e, const SessionConfig& cfg) {
  switch (e.kind) {
    case Expr::Kind::Number: {
      if (e.imaginary && cfg.field == Field::Real)
        throw EvalError("literal", "imaginary literal in a real session");
      Scalar s = e.imaginary ? Scalar(0.0, e.number) : Scalar(e.number);
      return make_scalar(cfg, s);
    }
    case Expr::Kind::Basis: {
      IndexSeq seq(e.basis_indices, cfg.dimension);
      Sign sign = epsilon(seq);
      Multivector m(cfg.dimension, cfg.field, cfg.tolerance);
      if (!sign.zero)
        m.add_term(MultiIndex::from_indices(e.basis_indices, cfg.dimension),
                   Scalar(static_cast<double>(sign.value)));
      return m;
    }
    case Expr::Kind::Neg: {
      Value v = eval_impl(*e.operand, cfg);
      return -as_mv(v, "negation");
    }
    case Expr::Kind::Binary: {
      Multivector a = as_mv(eval_impl(*e.lhs, cfg), "operator");
      Multivector b = as_mv(eval_impl(*e.rhs, cfg), "operator");
      try {
        switch (e.op) {
          case BinOp::Add:
            return a + b;
          case BinOp::Sub:
            return a - b;
          case BinOp::Wedge:
            return wedge(a, b);
          case BinOp::LContr:
            return contract_left(a, b);
          case BinOp::RContr:
            return contract_right(a, b);
          case BinOp::Regr:
            return regressive(a, b,
                              Orientation(cfg.dimension, cfg.orientation_unit));
          case BinOp::ScalarMul: {
            if (is_scalar_value(a)) return a.scalar_part() * b;
            if (is_scalar_value(b)) return b.scalar_part() * a;
            throw EvalError("operator '*'",
                            "scalar multiplication needs a scalar operand "
                            "(use '^' for the exterior product)");
          }
        }
      } catch (const std::invalid_argument& err) {
        throw EvalError("operator", err.what());
      } catch (const std::domain_error& err) {
        throw EvalError("operator", err.what());
      }
      throw EvalError("operator", "unknown operator");
    }
    case Expr::Kind::Call:
      return eval_call(e, cfg);
  }
  throw EvalError("eval", "malformed expression");
}

Value eval_call(const Expr& e, const SessionConfig& cfg) {
  const std::string& f = e.callee;
  auto mv_arg = [&](std::size_t k) {
    return as_mv(eval_impl(*e.args[k], cfg), e.callee.c_str());
  };
  try {
    if (f == "lstar" || f == "rstar") {
      Orientation omega(cfg.dimension, cfg.orientation_unit);
      return star(mv_arg(0), f == "lstar" ? Side::Left : Side::Right, omega);
    }
    if (f == "rev") return involution(mv_arg(0), Involution::Reversion);
    if (f == "ginv") return involution(mv_arg(0), Involution::Grade);
    if (f == "cconj") return involution(mv_arg(0), Involution::Clifford);
    if (f == "check") return involution(mv_arg(0), Involution::Check);
    if (f == "grade")
      return grade_project(mv_arg(0), as_small_int(mv_arg(1), "grade"));
    if (f == "inner") return make_scalar(cfg, inner(mv_arg(0), mv_arg(1)));
    if (f == "norm") return make_scalar(cfg, Scalar(mv_arg(0).norm()));
    if (f == "isp") return inner_space(mv_arg(0));
    if (f == "osp") return outer_space(mv_arg(0));
    if (f == "igrade")
      return make_scalar(cfg, Scalar(static_cast<double>(inner_space(mv_arg(0)).dim())));
    if (f == "ograde")
      return make_scalar(cfg, Scalar(static_cast<double>(outer_space(mv_arg(0)).dim())));
    if (f == "bgrade" || f == "tgrade") {
      Multivector m = mv_arg(0);
      auto g = f == "bgrade" ? m.bottom_grade() : m.top_grade();
      if (!g)
        throw EvalError(f, "undefined for the zero multivector");
      return make_scalar(cfg, Scalar(static_cast<double>(*g)));
    }
    if (f == "simple")
      return make_scalar(cfg, Scalar(is_simple(mv_arg(0)) ? 1.0 : 0.0));
    if (f == "join")
      return join(as_blade(mv_arg(0), "join"), as_blade(mv_arg(1), "join")).mv();
    if (f == "meet")
      return meet(as_blade(mv_arg(0), "meet"), as_blade(mv_arg(1), "meet"),
                  as_blade(mv_arg(2), "meet"));
    if (f == "proj") {
      Blade onto = as_blade(mv_arg(1), "proj");
      if (onto.is_zero()) throw EvalError("proj", "projection onto the zero blade");
      return project(mv_arg(0), outer_space(onto.mv()));
    }
    if (f == "regr")
      return regressive(mv_arg(0), mv_arg(1),
                        Orientation(cfg.dimension, cfg.orientation_unit));
    if (f == "conv")
      return convention_contract(convention_from(e.convention), mv_arg(0),
                                 mv_arg(1));
  } catch (const EvalError&) {
    throw;
  } catch (const std::exception& err) {
    throw EvalError(f, err.what());
  }
  throw EvalError("eval", "unknown function '" + f + "'");
}

}  // namespace

Value eval(const Expr& e, const SessionConfig& cfg) {
  return eval_impl(e, cfg);
}

Multivector eval_multivector(const Expr& e, const SessionConfig& cfg) {
  Value v = eval(e, cfg);
  return as_mv(v, "eval");
}

std::string to_text(const Value& v) {
  if (const auto* m = std::get_if<Multivector>(&v)) return m->to_string();
  const auto& basis = std::get<SubspaceBasis>(v);
  std::string out = "subspace dim " + std::to_string(basis.dim());
  if (basis.dim() > 0) {
    out += ": ";
    for (int k = 0; k < basis.dim(); ++k) {
      if (k) out += "; ";
      std::vector<Scalar> coords(basis.columns.col(k).data(),
                                 basis.columns.col(k).data() + basis.ambient);
      out += Multivector::from_vector(coords, basis.ambient).to_string();
    }
  }
  return out;
}

}  // namespace exalg
