#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "exalg/multivector.hpp"

namespace exalg {

// A simple multivector, optionally carrying a vector factorization
// v_1 ^ ... ^ v_p that reproduces its coefficient data.
class Blade {
 public:
  Blade() = default;

  // Wedge of explicit coordinate vectors; simple by construction.
  static Blade from_vectors(const std::vector<Eigen::VectorXcd>& vectors,
                            int ambient, Field field = Field::Complex);
  // Validates simplicity of the coefficient data (and the factorization if
  // one is supplied); throws std::invalid_argument when the test fails.
  static Blade validated(Multivector m);
  static Blade validated(Multivector m, std::vector<Eigen::VectorXcd> vectors);
  static Blade scalar(int ambient, Scalar value, Field field = Field::Complex);

  const Multivector& mv() const { return mv_; }
  int ambient() const { return mv_.ambient(); }
  bool is_zero() const { return mv_.is_zero(); }
  // Grade as a blade; 0 for the zero blade.
  int grade() const { return mv_.top_grade().value_or(0); }
  double norm() const { return mv_.norm(); }

  bool has_vectors() const { return vectors_.has_value(); }
  const std::vector<Eigen::VectorXcd>& vectors() const;

  // The stored factorization, or one extracted from the span (orthonormal
  // basis of [B], first vector scaled so the wedge reproduces the data).
  std::vector<Eigen::VectorXcd> vectors_or_extract() const;

 private:
  Multivector mv_;
  std::optional<std::vector<Eigen::VectorXcd>> vectors_;
};

Multivector wedge_vectors(const std::vector<Eigen::VectorXcd>& vectors,
                          int ambient, Field field = Field::Complex);

// Determinant route for a contraction of decomposed blades (grade(A) <=
// grade(B)); both factorizations must be present.
Multivector contract_blades_det(const Blade& a, const Blade& b);

// Right side of the generalized graded Leibniz rule
// B -| (M ^ N) = sum_i eps_{i i'} (B_{i'} -| M^(|i|)) ^ (B_i -| N)
// evaluated literally over the i-factorizations of the decomposed blade B.
Multivector leibniz_rhs(const Blade& b, const Multivector& m,
                        const Multivector& n);

// Subblade expansion H -| B = sum_i eps_{i i'} <H, B_i> B_{i'} for a
// homogeneous H of grade p <= grade(B).
Multivector contract_subblade_expansion(const Multivector& h, const Blade& b);

}  // namespace exalg
