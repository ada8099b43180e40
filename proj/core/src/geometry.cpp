#include "exalg/geometry.hpp"

#include <stdexcept>

#include "exalg/outermorphism.hpp"
#include "linalg_detail.hpp"

namespace exalg {

namespace {

Eigen::MatrixXcd orthonormalize_independent(const Eigen::MatrixXcd& basis,
                                            const char* what) {
  if (basis.cols() == 0) return basis;
  Eigen::MatrixXcd q = detail::column_span(basis);
  if (q.cols() != basis.cols())
    throw std::invalid_argument(std::string(what) +
                                ": input vectors are linearly dependent");
  return q;
}

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

}  // namespace

PrincipalData principal_angles(const Eigen::MatrixXcd& v_basis,
                               const Eigen::MatrixXcd& w_basis) {
  if (v_basis.rows() != w_basis.rows())
    throw std::invalid_argument("principal_angles: ambient mismatch");
  Eigen::MatrixXcd qv = orthonormalize_independent(v_basis, "principal_angles");
  Eigen::MatrixXcd qw = orthonormalize_independent(w_basis, "principal_angles");

  PrincipalData pd;
  if (qv.cols() == 0 || qw.cols() == 0) {
    pd.left_basis = qv;
    pd.right_basis = qw;
    return pd;
  }
  Eigen::MatrixXcd g = qv.adjoint() * qw;  // <v_i, w_j>
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(
      g, Eigen::ComputeFullU | Eigen::ComputeFullV);
  pd.left_basis = qv * svd.matrixU();
  pd.right_basis = qw * svd.matrixV();
  const auto& sigma = svd.singularValues();
  pd.cosines.reserve(sigma.size());
  for (Eigen::Index k = 0; k < sigma.size(); ++k)
    pd.cosines.push_back(clamp01(sigma[k]));
  return pd;
}

PrincipalData principal_angles(const SubspaceBasis& v, const SubspaceBasis& w) {
  return principal_angles(v.columns, w.columns);
}

int intersection_dim(const PrincipalData& pd) {
  int k = 0;
  for (double c : pd.cosines)
    if (c >= 1.0 - kUnityTol) ++k;
  return k;
}

namespace {

Multivector wedge_range(const Eigen::MatrixXcd& cols, int first, int last,
                        int ambient, Field field) {
  std::vector<Eigen::VectorXcd> vs;
  for (int k = first; k < last; ++k) vs.push_back(cols.col(k));
  return detail::wedge_columns(vs, ambient, field);
}

}  // namespace

POFactorization po_factorize(const Blade& b, const Blade& a,
                             FactorOrder order) {
  if (a.is_zero() || b.is_zero())
    throw std::invalid_argument("po_factorize: zero blade");
  const int n = b.ambient();
  Field field = b.mv().field();
  SubspaceBasis sa = outer_space(a.mv());
  SubspaceBasis sb = outer_space(b.mv());
  const int p = sa.dim(), q = sb.dim();
  const int m = std::min(p, q);

  PrincipalData pd = principal_angles(sa.columns, sb.columns);
  const Eigen::MatrixXcd& f = pd.right_basis;

  Multivector whole = wedge_range(f, 0, q, n, field);  // unit
  Scalar c = inner(whole, b.mv());                     // B = c * whole
  Scalar eps = c / std::abs(c);

  Multivector projective = wedge_range(f, 0, m, n, field) * (eps * b.norm());
  Multivector perp = wedge_range(f, m, q, n, field);
  if (order == FactorOrder::OP && (m * (q - m)) % 2 != 0) perp = -perp;

  POFactorization out;
  out.projective = std::move(projective);
  out.orthogonal = Blade::validated(std::move(perp));
  out.eps = eps;
  out.order = order;
  return out;
}

AsymmetricAngle asym_angle_cos(const Blade& a, const Blade& b) {
  // Degenerate conventions: zero blades give angle 0, except a nonzero A of
  // positive grade against the zero blade, which gives pi/2.
  if (a.is_zero()) return {Scalar(1.0), 1.0};
  if (b.is_zero()) {
    if (a.grade() == 0) return {Scalar(1.0), 1.0};
    return {Scalar(0.0), 0.0};
  }
  const int p = a.grade(), q = b.grade();
  if (p > q) return {Scalar(0.0), 0.0};
  POFactorization po = po_factorize(b, a, FactorOrder::PO);
  Scalar oriented = inner(a.mv(), po.projective) / (a.norm() * b.norm());
  return {oriented, std::abs(oriented)};
}

double cos_angle_complement_left(const Blade& a, const Blade& b) {
  if (a.is_zero() || b.is_zero())
    throw std::invalid_argument("cos_angle_complement_left: zero blade");
  const int n = a.ambient();
  SubspaceBasis sa = outer_space(a.mv());
  SubspaceBasis sb = outer_space(b.mv());
  if (sa.dim() == n || sb.dim() == n) return 1.0;
  if (subspace_sum(sa, sb).dim() != n) return 0.0;
  PrincipalData pd = principal_angles(sa, sb);
  int r = intersection_dim(pd);
  double prod = 1.0;
  for (std::size_t k = r; k < pd.cosines.size(); ++k)
    prod *= std::sqrt(std::max(0.0, 1.0 - pd.cosines[k] * pd.cosines[k]));
  return prod;
}

Multivector project(const Multivector& m, const Eigen::MatrixXcd& v_basis) {
  if (v_basis.rows() != m.ambient())
    throw std::invalid_argument("project: ambient mismatch");
  Eigen::MatrixXcd q = orthonormalize_independent(v_basis, "project");
  Outermorphism p(q * q.adjoint());
  return p.apply(m);
}

Multivector project(const Multivector& m, const SubspaceBasis& v) {
  return project(m, v.columns);
}

bool orthogonality(const Multivector& m, const Multivector& n,
                   Orthogonality kind) {
  check_compatible(m, n);
  switch (kind) {
    case Orthogonality::Plain: {
      double scale = std::max(1.0, m.norm() * n.norm());
      return std::abs(inner(m, n)) <= kRankRelTol * scale;
    }
    case Orthogonality::Complete:
      return subspaces_orthogonal(outer_space(m), outer_space(n));
    case Orthogonality::Partial: {
      if (m.is_zero()) return false;
      SubspaceBasis v = inner_space(m);
      SubspaceBasis w = outer_space(n);
      if (v.dim() == 0) return false;
      if (v.dim() > w.dim()) return true;
      PrincipalData pd = principal_angles(v, w);
      for (double c : pd.cosines)
        if (c < kRankRelTol) return true;
      return false;
    }
  }
  throw std::logic_error("unknown orthogonality kind");
}

}  // namespace exalg
