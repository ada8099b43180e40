#include "exalg/grades.hpp"

#include <stdexcept>

#include "exalg/spaces.hpp"

namespace exalg {

GradeProfile grade_profile(const Multivector& m) {
  GradeProfile g;
  g.inner = inner_space(m).dim();
  g.outer = outer_space(m).dim();
  g.bottom = m.bottom_grade();
  g.top = m.top_grade();
  return g;
}

bool is_simple(const Multivector& m) {
  if (m.is_zero()) return true;
  return inner_space(m).dim() == outer_space(m).dim();
}

double cartan_residual(const Multivector& h) {
  if (!h.is_homogeneous())
    throw std::invalid_argument("cartan_residual: multivector must be homogeneous");
  if (h.is_zero()) return 0;
  const int p = *h.top_grade();
  if (p == 0) return 0;
  const double scale = h.norm_squared();
  double worst = 0;
  for (const MultiIndex& j : indices_of_grade(h.ambient(), p - 1)) {
    Multivector f = Multivector::basis(j, h.field());
    double r = wedge(contract_left(f, h), h).norm() / scale;
    worst = std::max(worst, r);
  }
  return worst;
}

std::vector<PluckerResidual> plucker_residuals(const Multivector& h) {
  if (!h.is_homogeneous())
    throw std::invalid_argument("plucker_residuals: multivector must be homogeneous");
  std::vector<PluckerResidual> out;
  if (h.is_zero()) return out;
  const int n = h.ambient();
  const int p = *h.top_grade();

  for (const MultiIndex& j : indices_of_grade(n, p - 1)) {
    for (const MultiIndex& k : indices_of_grade(n, p + 1)) {
      Scalar sum(0.0);
      for (int i : difference(k, j).indices()) {
        MultiIndex single = MultiIndex::single(i, n);
        int parity = (pairs(j, single) + pairs(k, single)) & 1;
        Scalar term = h.coeff(unite(j, single)) * h.coeff(difference(k, single));
        sum += (parity ? -1.0 : 1.0) * term;
      }
      out.push_back(PluckerResidual{j, k, std::abs(sum)});
    }
  }
  return out;
}

double worst_plucker_residual(const Multivector& h) {
  double worst = 0;
  for (const auto& r : plucker_residuals(h)) worst = std::max(worst, r.residual);
  return worst;
}

}  // namespace exalg
