#include "exalg/blade.hpp"

#include <stdexcept>

#include "exalg/grades.hpp"
#include "exalg/spaces.hpp"
#include "linalg_detail.hpp"

namespace exalg {

Multivector wedge_vectors(const std::vector<Eigen::VectorXcd>& vectors,
                          int ambient, Field field) {
  return detail::wedge_columns(vectors, ambient, field);
}

Blade Blade::from_vectors(const std::vector<Eigen::VectorXcd>& vectors,
                          int ambient, Field field) {
  for (const auto& v : vectors)
    if (v.size() != ambient)
      throw std::invalid_argument("Blade::from_vectors: wrong vector length");
  Blade b;
  b.mv_ = detail::wedge_columns(vectors, ambient, field);
  b.vectors_ = vectors;
  return b;
}

Blade Blade::validated(Multivector m) {
  if (!is_simple(m))
    throw std::invalid_argument("Blade::validated: multivector is not simple");
  Blade b;
  b.mv_ = std::move(m);
  return b;
}

Blade Blade::validated(Multivector m, std::vector<Eigen::VectorXcd> vectors) {
  Blade b = validated(std::move(m));
  Multivector rebuilt =
      detail::wedge_columns(vectors, b.ambient(), b.mv_.field());
  if ((rebuilt - b.mv_).norm() > kBladeRelTol * std::max(1.0, b.mv_.norm()))
    throw std::invalid_argument(
        "Blade::validated: vector factorization does not reproduce the data");
  b.vectors_ = std::move(vectors);
  return b;
}

Blade Blade::scalar(int ambient, Scalar value, Field field) {
  Blade b;
  b.mv_ = Multivector::scalar(ambient, value, field);
  b.vectors_ = std::vector<Eigen::VectorXcd>{};
  return b;
}

const std::vector<Eigen::VectorXcd>& Blade::vectors() const {
  if (!vectors_)
    throw std::invalid_argument("Blade: missing vector factorization");
  return *vectors_;
}

std::vector<Eigen::VectorXcd> Blade::vectors_or_extract() const {
  if (vectors_) return *vectors_;
  if (mv_.is_zero())
    throw std::invalid_argument("Blade: cannot factor the zero blade");
  SubspaceBasis span = outer_space(mv_);
  std::vector<Eigen::VectorXcd> out;
  out.reserve(span.dim());
  for (int k = 0; k < span.dim(); ++k) out.push_back(span.columns.col(k));
  if (out.empty()) return out;  // scalar blade, empty factorization
  Multivector unit = detail::wedge_columns(out, ambient(), mv_.field());
  // mv = c * unit with c = <unit, mv>.
  Scalar c = inner(unit, mv_);
  out[0] *= c;
  return out;
}

Multivector contract_blades_det(const Blade& a, const Blade& b) {
  const auto& vs = a.vectors();
  const auto& ws = b.vectors();
  const int n = a.ambient();
  if (b.ambient() != n)
    throw std::invalid_argument("contract_blades_det: ambient mismatch");
  const int p = static_cast<int>(vs.size());
  const int q = static_cast<int>(ws.size());
  Field field = a.mv().field();
  if (p > q) return Multivector::zero(n, field);

  // Row i of the frame matrix: <v_1, w_i>, ..., <v_p, w_i>, then the
  // coordinates w_{i, j_1}, ..., w_{i, j_{q-p}} of the surviving columns.
  Eigen::MatrixXcd gram(q, p);
  for (int r = 0; r < q; ++r)
    for (int c = 0; c < p; ++c) gram(r, c) = vs[c].dot(ws[r]);

  Multivector out(n, field);
  for (const MultiIndex& j : indices_of_grade(n, q - p)) {
    Eigen::MatrixXcd m(q, q);
    m.leftCols(p) = gram;
    std::vector<int> jx = j.indices();
    for (int c = 0; c < q - p; ++c)
      for (int r = 0; r < q; ++r) m(r, p + c) = ws[r][jx[c] - 1];
    out.add_term(j, m.determinant());
  }
  return out;
}

namespace {

// B_i for a subset of factor positions (bits over 1..p).
Multivector subblade(const std::vector<Eigen::VectorXcd>& vs,
                     std::uint32_t select, int ambient, Field field) {
  std::vector<Eigen::VectorXcd> chosen;
  for (std::uint32_t b = select; b;) {
    chosen.push_back(vs[std::countr_zero(b)]);
    b &= b - 1;
  }
  return detail::wedge_columns(chosen, ambient, field);
}

}  // namespace

Multivector leibniz_rhs(const Blade& b, const Multivector& m,
                        const Multivector& n) {
  const auto& vs = b.vectors();
  const int p = static_cast<int>(vs.size());
  check_compatible(m, n);
  if (b.ambient() != m.ambient())
    throw std::invalid_argument("leibniz_rhs: ambient mismatch");
  Field field = m.field();

  Multivector sum(m.ambient(), field);
  for (std::uint32_t sel = 0; sel < (1u << p); ++sel) {
    // eps_{i i'} within the factor index set 1..p: zeta_{|i|} xi_i.
    int k = std::popcount(sel);
    int norm = 0;
    for (std::uint32_t t = sel; t;) {
      norm += std::countr_zero(t) + 1;
      t &= t - 1;
    }
    int eps = zeta(k) * ((norm & 1) ? -1 : 1);
    Multivector bi = subblade(vs, sel, m.ambient(), field);
    Multivector bic = subblade(vs, ~sel & ((1u << p) - 1u), m.ambient(), field);
    Multivector term = wedge(contract_left(bic, grade_involution_power(m, k)),
                             contract_left(bi, n));
    sum += static_cast<double>(eps) * term;
  }
  return sum;
}

Multivector contract_subblade_expansion(const Multivector& h, const Blade& b) {
  if (!h.is_homogeneous())
    throw std::invalid_argument(
        "contract_subblade_expansion: contractor must be homogeneous");
  const auto& ws = b.vectors();
  const int q = static_cast<int>(ws.size());
  const int p = h.top_grade().value_or(0);
  if (h.ambient() != b.ambient())
    throw std::invalid_argument("contract_subblade_expansion: ambient mismatch");
  Field field = h.field();
  Multivector sum(h.ambient(), field);
  if (h.is_zero()) return sum;
  if (p > q) return sum;
  if (p == 0) return std::conj(h.scalar_part()) * b.mv();

  for (std::uint32_t sel = 0; sel < (1u << q); ++sel) {
    if (std::popcount(sel) != p) continue;
    int norm = 0;
    for (std::uint32_t t = sel; t;) {
      norm += std::countr_zero(t) + 1;
      t &= t - 1;
    }
    int eps = zeta(p) * ((norm & 1) ? -1 : 1);
    Multivector bi = subblade(ws, sel, h.ambient(), field);
    Multivector bic = subblade(ws, ~sel & ((1u << q) - 1u), h.ambient(), field);
    sum += static_cast<double>(eps) * inner(h, bi) * bic;
  }
  return sum;
}

}  // namespace exalg
