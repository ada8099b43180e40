#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "exalg/multivector.hpp"

namespace exalg {

// Generalized grades: inner = dim isp, outer = dim osp, bottom/top = lowest
// and highest grades carrying terms (absent for the zero multivector, which
// has inner = n and outer = 0).
struct GradeProfile {
  int inner = 0;
  int outer = 0;
  std::optional<int> bottom;
  std::optional<int> top;
};

GradeProfile grade_profile(const Multivector& m);

// Simplicity through the rank criterion isp M = osp M (zero and scalars are
// simple).
bool is_simple(const Multivector& m);

// max_j ||(e_j -| H) ^ H|| / ||H||^2 over grade-(p-1) basis indices j; zero
// exactly on simple homogeneous multivectors.  H must be homogeneous.
double cartan_residual(const Multivector& h);

struct PluckerResidual {
  MultiIndex j;  // grade p-1
  MultiIndex k;  // grade p+1
  double residual = 0;
};

// Residuals of the quadratic simplicity relations
// sum_{i in k-j} (-1)^(pairs(j,i)+pairs(k,i)) c_{j+i} c_{k-i} = 0
// for every (j, k) pair; all below 1e-9 * ||H||^2 exactly when H is simple.
std::vector<PluckerResidual> plucker_residuals(const Multivector& h);
double worst_plucker_residual(const Multivector& h);

}  // namespace exalg
