#include "exalg/spaces.hpp"

#include <map>
#include <stdexcept>

#include "exalg/geometry.hpp"
#include "linalg_detail.hpp"

namespace exalg {

namespace {

// Matrix whose column j collects the coefficients of op(e_j); rows span the
// union of the supports.
Eigen::MatrixXcd
column_matrix(const Multivector& m,
              const std::function<Multivector(const Multivector&)>& op) {
  const int n = m.ambient();
  std::vector<Multivector> images;
  images.reserve(n);
  std::map<std::uint32_t, int> row_of;
  for (int j = 0; j < n; ++j) {
    images.push_back(
        op(Multivector::basis(MultiIndex::single(j + 1, n), m.field())));
    for (const auto& [bits, c] : images.back().terms())
      row_of.try_emplace(bits, static_cast<int>(row_of.size()));
  }
  Eigen::MatrixXcd a =
      Eigen::MatrixXcd::Zero(std::max<std::size_t>(row_of.size(), 1), n);
  for (int j = 0; j < n; ++j)
    for (const auto& [bits, c] : images[j].terms()) a(row_of[bits], j) = c;
  return a;
}

SubspaceBasis full_space(int n) {
  return SubspaceBasis{Eigen::MatrixXcd::Identity(n, n), n};
}

}  // namespace

SubspaceBasis inner_space(const Multivector& m) {
  const int n = m.ambient();
  if (m.is_zero()) return full_space(n);
  Eigen::MatrixXcd a =
      column_matrix(m, [&](const Multivector& e) { return wedge(e, m); });
  return SubspaceBasis{detail::kernel(a), n};
}

SubspaceBasis outer_space(const Multivector& m) {
  const int n = m.ambient();
  if (m.is_zero()) return SubspaceBasis{Eigen::MatrixXcd(n, 0), n};
  // v -| M = A conj(v) with column j = e_j -| M, so the solution set is the
  // conjugated kernel and its complement the conjugated row space.
  Eigen::MatrixXcd a = column_matrix(
      m, [&](const Multivector& e) { return contract_left(e, m); });
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeFullV);
  int r = detail::svd_rank(svd.singularValues());
  return SubspaceBasis{svd.matrixV().leftCols(r).conjugate(), n};
}

SubspaceBasis subspace_sum(const SubspaceBasis& a, const SubspaceBasis& b) {
  Eigen::MatrixXcd stacked(a.ambient, a.dim() + b.dim());
  stacked << a.columns, b.columns;
  return SubspaceBasis{detail::column_span(stacked), a.ambient};
}

SubspaceBasis subspace_intersection(const SubspaceBasis& a,
                                    const SubspaceBasis& b) {
  // Principal vectors with cosine 1 span the intersection.
  if (a.dim() == 0 || b.dim() == 0)
    return SubspaceBasis{Eigen::MatrixXcd(a.ambient, 0), a.ambient};
  Eigen::MatrixXcd g = a.columns.adjoint() * b.columns;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(g, Eigen::ComputeFullU);
  int k = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()[i] >= 1.0 - kUnityTol) ++k;
  return SubspaceBasis{a.columns * svd.matrixU().leftCols(k), a.ambient};
}

SubspaceBasis subspace_complement(const SubspaceBasis& a) {
  // Kernel of columns^H.
  return SubspaceBasis{detail::kernel(a.columns.adjoint()), a.ambient};
}

bool subspace_contains(const SubspaceBasis& big, const SubspaceBasis& small) {
  if (small.dim() == 0) return true;
  Eigen::MatrixXcd residual =
      small.columns -
      big.columns * (big.columns.adjoint() * small.columns);
  return residual.colwise().norm().maxCoeff() <= kRankRelTol;
}

bool subspaces_orthogonal(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.dim() == 0 || b.dim() == 0) return true;
  return (a.columns.adjoint() * b.columns).cwiseAbs().maxCoeff() <= kRankRelTol;
}

bool contained(const Multivector& m, const Multivector& n) {
  return subspace_contains(inner_space(n), outer_space(m));
}

bool is_balanced(const Multivector& m, const std::vector<Multivector>& parts,
                 BalanceSide side) {
  Multivector sum = Multivector::zero(m.ambient(), m.field());
  for (const auto& p : parts) sum += p;
  if ((sum - m).norm() > kRankRelTol * std::max(1.0, m.norm()))
    throw std::invalid_argument("is_balanced: parts do not sum to the whole");

  bool inner_ok = true, outer_ok = true;
  if (side != BalanceSide::Outer) {
    // isp M contains the intersection always; equality is a dim check.
    SubspaceBasis meet = full_space(m.ambient());
    for (const auto& p : parts) meet = subspace_intersection(meet, inner_space(p));
    inner_ok = meet.dim() == inner_space(m).dim();
  }
  if (side != BalanceSide::Inner) {
    SubspaceBasis join{Eigen::MatrixXcd(m.ambient(), 0), m.ambient()};
    for (const auto& p : parts) join = subspace_sum(join, outer_space(p));
    outer_ok = join.dim() == outer_space(m).dim();
  }
  switch (side) {
    case BalanceSide::Inner:
      return inner_ok;
    case BalanceSide::Outer:
      return outer_ok;
    default:
      return inner_ok && outer_ok;
  }
}

namespace {

// Unit blade from an orthonormal basis, gauged so the first nonzero
// coefficient in index-lexicographic order is real positive.
Blade gauged_blade(const SubspaceBasis& span, Field field) {
  std::vector<Eigen::VectorXcd> cols;
  cols.reserve(span.dim());
  for (int k = 0; k < span.dim(); ++k) cols.push_back(span.columns.col(k));
  Multivector raw = detail::wedge_columns(cols, span.ambient, field);
  // Unit already (wedge of orthonormal vectors); find the gauge phase.
  Scalar g(0.0);
  for (const MultiIndex& ix : indices_of_grade(span.ambient, span.dim())) {
    Scalar c = raw.coeff(ix);
    if (std::abs(c) > kCoeffTol) {
      g = c;
      break;
    }
  }
  if (g == Scalar(0.0)) throw std::logic_error("gauged_blade: zero wedge");
  Scalar phase = std::conj(g) / std::abs(g);
  Multivector fixed = raw * (phase / raw.norm());
  if (!cols.empty()) cols[0] *= phase / raw.norm();
  return Blade::validated(std::move(fixed), std::move(cols));
}

}  // namespace

FactorizationResult factorize_maximal(const Multivector& m) {
  if (m.is_zero())
    throw std::invalid_argument(
        "factorize_maximal: the zero multivector has no canonical "
        "factorization");
  Blade b = gauged_blade(inner_space(m), m.field());
  Multivector n = contract_left(b.mv(), m);
  double residual = (wedge(b.mv(), n) - m).norm();
  return FactorizationResult{std::move(b), std::move(n),
                             FactorizationKind::MaximalOrthogonalOptimal,
                             residual};
}

CarvingResult carve_minimal(const Multivector& m) {
  if (m.is_zero())
    throw std::invalid_argument(
        "carve_minimal: the zero multivector has no canonical carving");
  Blade b = gauged_blade(outer_space(m), m.field());
  Multivector n = contract_right(b.mv(), m);
  double residual = (contract_left(n, b.mv()) - m).norm();
  return CarvingResult{std::move(b), std::move(n),
                       CarvingKind::MinimalInternalOptimal, residual};
}

namespace {

int intersection_dim_of(const SubspaceBasis& a, const SubspaceBasis& b) {
  return a.dim() + b.dim() - subspace_sum(a, b).dim();
}

void check_reconstruction(const Multivector& m, const Multivector& rebuilt,
                          const char* what) {
  if ((rebuilt - m).norm() > kReconstructRelTol * std::max(1.0, m.norm()))
    throw std::invalid_argument(std::string(what) +
                                ": inputs do not reconstruct the multivector");
}

}  // namespace

FactorizationFlags classify_factorization(const Multivector& m, const Blade& b,
                                          const Multivector& n) {
  check_reconstruction(m, wedge(b.mv(), n), "classify_factorization");
  SubspaceBasis bs = outer_space(b.mv());
  SubspaceBasis ns = outer_space(n);
  FactorizationFlags flags;
  flags.efficient = intersection_dim_of(ns, bs) == 0;
  flags.orthogonal = subspaces_orthogonal(ns, bs);
  SubspaceBasis isp = inner_space(m);
  flags.maximal = bs.dim() == isp.dim() && subspace_contains(isp, bs);
  flags.optimal = flags.efficient && flags.maximal;
  return flags;
}

CarvingFlags classify_carving(const Multivector& m, const Blade& b,
                              const Multivector& n) {
  check_reconstruction(m, contract_left(n, b.mv()), "classify_carving");
  SubspaceBasis bs = outer_space(b.mv());
  SubspaceBasis ns = outer_space(n);
  CarvingFlags flags;
  flags.efficient = intersection_dim_of(ns, subspace_complement(bs)) == 0;
  flags.internal = subspace_contains(bs, ns);
  SubspaceBasis osp = outer_space(m);
  flags.minimal = bs.dim() == osp.dim() && subspace_contains(osp, bs);
  flags.optimal = flags.efficient && flags.minimal;
  return flags;
}

}  // namespace exalg
