#pragma once

#include <variant>

#include "exalg/expr.hpp"
#include "exalg/spaces.hpp"

namespace exalg {

// An evaluated expression: a multivector (scalars are grade-0 multivectors)
// or a subspace basis from isp()/osp().
using Value = std::variant<Multivector, SubspaceBasis>;

Value eval(const Expr& e, const SessionConfig& cfg);

// Evaluate and require a multivector result.
Multivector eval_multivector(const Expr& e, const SessionConfig& cfg);

std::string to_text(const Value& v);

}  // namespace exalg
