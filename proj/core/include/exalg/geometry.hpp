#pragma once

#include <Eigen/Dense>
#include <vector>

#include "exalg/blade.hpp"
#include "exalg/multivector.hpp"
#include "exalg/spaces.hpp"

namespace exalg {

// Associated principal bases and cosines of two subspaces.  Cosines are the
// singular values of the cross-Gram matrix of orthonormalized inputs, clamped
// to [0, 1] and descending (angles ascending).  left_basis has as many
// columns as the first input's span, right_basis as the second's, and
// <left_i, right_j> = cos(theta_i) delta_ij for i, j <= min(p, q).
struct PrincipalData {
  std::vector<double> cosines;
  Eigen::MatrixXcd left_basis;
  Eigen::MatrixXcd right_basis;
};

PrincipalData principal_angles(const Eigen::MatrixXcd& v_basis,
                               const Eigen::MatrixXcd& w_basis);
PrincipalData principal_angles(const SubspaceBasis& v, const SubspaceBasis& w);

// Number of principal cosines at 1 within tolerance = dim of the intersection.
int intersection_dim(const PrincipalData& pd);

enum class FactorOrder { PO, OP };

// B = B_P ^ B_perp (PO) or B = B_perp' ^ B_P (OP) with respect to a
// reference blade A: the projective part B_P = eps ||B|| f_1 ^ ... ^ f_m
// along the principal basis of [B], and a unit completely orthogonal rest.
struct POFactorization {
  Multivector projective;  // B_P, norm ||B||
  Blade orthogonal;        // B_perp (PO) or B_perp' (OP), unit
  Scalar eps;              // unit scalar making the product reproduce B
  FactorOrder order = FactorOrder::PO;
};

POFactorization po_factorize(const Blade& b, const Blade& a, FactorOrder order);

// cos of the asymmetric angle of A with B: oriented value
// <A, B_P> / (||A|| ||B||) (a complex scalar in the complex case) and its
// modulus, the subspace value prod cos(theta_i) for p <= q, 0 for p > q.
// Degenerate blades follow the paper's conventions (angle 0 or pi/2).
struct AsymmetricAngle {
  Scalar oriented_cos;
  double unoriented_cos = 0;
};

AsymmetricAngle asym_angle_cos(const Blade& a, const Blade& b);

// cos Theta_{[A]^perp, [B]}: 0 when [A]+[B] is proper, 1 when either space is
// the whole one, else the product of sines of the nonzero principal angles.
double cos_angle_complement_left(const Blade& a, const Blade& b);

// Orthogonal projection onto the exterior algebra of span(v_basis).
Multivector project(const Multivector& m, const Eigen::MatrixXcd& v_basis);
Multivector project(const Multivector& m, const SubspaceBasis& v);

enum class Orthogonality { Partial, Plain, Complete };

// partial: isp M meets osp(N)^perp nontrivially (M nonzero);
// plain: <M, N> = 0; complete: osp M perp osp N.
bool orthogonality(const Multivector& m, const Multivector& n,
                   Orthogonality kind);

}  // namespace exalg
