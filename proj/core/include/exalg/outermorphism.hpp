#pragma once

#include <Eigen/Dense>
#include <map>
#include <memory>
#include <mutex>

#include "exalg/multivector.hpp"
#include "exalg/star.hpp"

namespace exalg {

// Extension of a linear map to the whole exterior algebra.  Column j of the
// matrix is the image of the j-th basis vector.  Grade-wise extension blocks
// are built on demand and cached; the cache is shared between copies and
// internally synchronized, so values may cross threads.
class Outermorphism {
 public:
  explicit Outermorphism(Eigen::MatrixXcd matrix);

  static Outermorphism identity(int n);

  int dim_in() const { return static_cast<int>(matrix_.cols()); }
  int dim_out() const { return static_cast<int>(matrix_.rows()); }
  bool square() const { return matrix_.rows() == matrix_.cols(); }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }

  Multivector apply(const Multivector& m) const;

  Outermorphism adjoint() const;
  Scalar det() const;            // square maps only
  double volume_factor() const;  // ||T Omega||; square maps only
  bool invertible() const;

  // Orientation induced in the target space, Omega_T = T Omega / ||T Omega||.
  Orientation induced_orientation(const Orientation& omega) const;

  // Inverse through the adjoint and the two stars; requires invertibility.
  Multivector inverse_apply(const Multivector& n, const Orientation& omega) const;

  // Grade-p extension block, C(dim_out, p) x C(dim_in, p), rows and columns
  // in lexicographic order of the index lists.
  const Eigen::MatrixXcd& grade_block(int p) const;

 private:
  struct Cache {
    std::mutex mu;
    std::map<int, Eigen::MatrixXcd> blocks;
  };

  Eigen::MatrixXcd matrix_;
  std::shared_ptr<Cache> cache_;
  double sigma_max_ = 0, sigma_min_ = 0;
};

}  // namespace exalg
