#include "exalg/outermorphism.hpp"

#include <stdexcept>

#include "linalg_detail.hpp"

namespace exalg {

Outermorphism::Outermorphism(Eigen::MatrixXcd matrix)
    : matrix_(std::move(matrix)), cache_(std::make_shared<Cache>()) {
  if (matrix_.rows() < 1 || matrix_.cols() < 1 ||
      matrix_.rows() > kDimensionCap || matrix_.cols() > kDimensionCap)
    throw std::invalid_argument("Outermorphism: dimension out of range");
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(matrix_);
  sigma_max_ = svd.singularValues().size() ? svd.singularValues()[0] : 0.0;
  sigma_min_ = svd.singularValues().size()
                   ? svd.singularValues()[svd.singularValues().size() - 1]
                   : 0.0;
}

Outermorphism Outermorphism::identity(int n) {
  return Outermorphism(Eigen::MatrixXcd::Identity(n, n));
}

const Eigen::MatrixXcd& Outermorphism::grade_block(int p) const {
  if (p < 0 || p > dim_in() || p > dim_out())
    throw std::invalid_argument("grade_block: grade out of range");
  std::scoped_lock lock(cache_->mu);
  auto it = cache_->blocks.find(p);
  if (it != cache_->blocks.end()) return it->second;

  const auto rows = indices_of_grade(dim_out(), p);
  const auto cols = indices_of_grade(dim_in(), p);
  Eigen::MatrixXcd block(rows.size(), cols.size());
  // Column J holds the coordinates of the wedge of image columns over J.
  std::map<std::uint32_t, Eigen::Index> row_of;
  for (std::size_t r = 0; r < rows.size(); ++r)
    row_of[rows[r].bits()] = static_cast<Eigen::Index>(r);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    std::vector<Eigen::VectorXcd> image;
    for (int j : cols[c].indices()) image.push_back(matrix_.col(j - 1));
    Multivector w = detail::wedge_columns(image, dim_out(), Field::Complex);
    block.col(static_cast<Eigen::Index>(c)).setZero();
    for (const auto& [bits, coef] : w.terms())
      block(row_of.at(bits), static_cast<Eigen::Index>(c)) = coef;
  }
  return cache_->blocks.emplace(p, std::move(block)).first->second;
}

Multivector Outermorphism::apply(const Multivector& m) const {
  if (m.ambient() != dim_in())
    throw std::invalid_argument("Outermorphism::apply: dimension mismatch");
  Multivector out(dim_out(), m.field(), m.tol());
  // Work grade by grade through the cached extension blocks.
  auto bottom = m.bottom_grade();
  if (!bottom) return out;
  for (int p = *bottom; p <= *m.top_grade(); ++p) {
    Multivector part = grade_project(m, p);
    if (part.is_zero()) continue;
    if (p > dim_out()) continue;  // image grade exceeds target dimension
    const Eigen::MatrixXcd& block = grade_block(p);
    const auto cols = indices_of_grade(dim_in(), p);
    Eigen::VectorXcd x = Eigen::VectorXcd::Zero(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
      x[static_cast<Eigen::Index>(c)] = part.coeff(cols[c]);
    Eigen::VectorXcd y = block * x;
    const auto rows = indices_of_grade(dim_out(), p);
    for (std::size_t r = 0; r < rows.size(); ++r)
      out.add_term(rows[r], y[static_cast<Eigen::Index>(r)]);
  }
  return out;
}

Outermorphism Outermorphism::adjoint() const {
  return Outermorphism(matrix_.adjoint());
}

Scalar Outermorphism::det() const {
  if (!square())
    throw std::invalid_argument("Outermorphism::det: map is not square");
  return matrix_.determinant();
}

double Outermorphism::volume_factor() const {
  if (!square())
    throw std::invalid_argument(
        "Outermorphism::volume_factor: map is not square");
  return std::abs(det());
}

bool Outermorphism::invertible() const {
  return square() && sigma_min_ > kInvertRelTol * sigma_max_;
}

Orientation Outermorphism::induced_orientation(const Orientation& omega) const {
  if (!square() || omega.ambient() != dim_in())
    throw std::invalid_argument("induced_orientation: dimension mismatch");
  if (!invertible())
    throw std::invalid_argument("induced_orientation: map is singular");
  Scalar d = det();
  return Orientation(dim_out(), omega.unit() * d / std::abs(d));
}

Multivector Outermorphism::inverse_apply(const Multivector& n,
                                         const Orientation& omega) const {
  if (!square())
    throw std::invalid_argument("inverse_apply: map is not square");
  if (!invertible())
    throw std::invalid_argument("inverse_apply: map is singular");
  if (n.ambient() != dim_out() || omega.ambient() != dim_in())
    throw std::invalid_argument("inverse_apply: dimension mismatch");
  Orientation induced = induced_orientation(omega);
  Multivector starred = star(n, Side::Right, induced);
  Multivector pulled = adjoint().apply(starred);
  return star(pulled, Side::Left, omega) * Scalar(1.0 / volume_factor());
}

}  // namespace exalg
