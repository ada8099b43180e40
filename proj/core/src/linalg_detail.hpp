#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <vector>

#include "exalg/config.hpp"
#include "exalg/multivector.hpp"

namespace exalg::detail {

// Wedge of coordinate vectors, accumulated left to right.
inline Multivector wedge_columns(const std::vector<Eigen::VectorXcd>& cols,
                                 int ambient, Field field) {
  Multivector acc = Multivector::scalar(ambient, Scalar(1.0), field);
  for (const auto& v : cols) {
    std::vector<Scalar> coords(v.data(), v.data() + v.size());
    acc = wedge(acc, Multivector::from_vector(coords, ambient, field));
  }
  return acc;
}

inline Eigen::VectorXcd to_eigen(const std::vector<Scalar>& v) {
  Eigen::VectorXcd out(static_cast<Eigen::Index>(v.size()));
  for (Eigen::Index k = 0; k < out.size(); ++k) out[k] = v[k];
  return out;
}

// Rank with the shared relative singular-value cutoff.
inline int svd_rank(const Eigen::VectorXd& sigma) {
  if (sigma.size() == 0) return 0;
  double smax = sigma[0];
  if (smax <= 0) return 0;
  int r = 0;
  for (Eigen::Index k = 0; k < sigma.size(); ++k)
    if (sigma[k] > kRankRelTol * smax) ++r;
  return r;
}

// Orthonormal basis of the column span (SVD-determined, deterministic).
inline Eigen::MatrixXcd column_span(const Eigen::MatrixXcd& a) {
  if (a.cols() == 0) return Eigen::MatrixXcd(a.rows(), 0);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeThinU);
  int r = svd_rank(svd.singularValues());
  return svd.matrixU().leftCols(r);
}

// Orthonormal kernel basis of a (columns of V with negligible sigma).
inline Eigen::MatrixXcd kernel(const Eigen::MatrixXcd& a) {
  if (a.rows() == 0)
    return Eigen::MatrixXcd::Identity(a.cols(), a.cols());
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeFullV);
  int r = svd_rank(svd.singularValues());
  return svd.matrixV().rightCols(a.cols() - r);
}

// Gram-Schmidt in the given column order; keeps columns whose residual
// exceeds the cutoff.  Deterministic.
inline Eigen::MatrixXcd gram_schmidt(const Eigen::MatrixXcd& a) {
  Eigen::MatrixXcd q(a.rows(), a.cols());
  int kept = 0;
  for (Eigen::Index c = 0; c < a.cols(); ++c) {
    Eigen::VectorXcd v = a.col(c);
    double original = v.norm();
    for (int k = 0; k < kept; ++k) v -= q.col(k).dot(v) * q.col(k);
    if (v.norm() > kRankRelTol * std::max(1.0, original)) {
      q.col(kept++) = v / v.norm();
    }
  }
  return q.leftCols(kept);
}

}  // namespace exalg::detail
