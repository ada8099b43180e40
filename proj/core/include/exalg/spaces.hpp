#pragma once

#include <Eigen/Dense>
#include <vector>

#include "exalg/blade.hpp"
#include "exalg/multivector.hpp"

namespace exalg {

// Orthonormal basis of a subspace of the ambient vector space.
struct SubspaceBasis {
  Eigen::MatrixXcd columns;  // ambient x dim, orthonormal
  int ambient = 0;

  int dim() const { return static_cast<int>(columns.cols()); }
};

// isp M = {v : v ^ M = 0}.  isp 0 = X.
SubspaceBasis inner_space(const Multivector& m);
// osp M = {v : v -| M = 0}^perp, the smallest subspace whose exterior
// algebra contains M.  osp 0 = {0}.
SubspaceBasis outer_space(const Multivector& m);

// Subspace utilities (rank decisions use the shared singular-value cutoff).
SubspaceBasis subspace_sum(const SubspaceBasis& a, const SubspaceBasis& b);
SubspaceBasis subspace_intersection(const SubspaceBasis& a,
                                    const SubspaceBasis& b);
SubspaceBasis subspace_complement(const SubspaceBasis& a);
bool subspace_contains(const SubspaceBasis& big, const SubspaceBasis& small);
bool subspaces_orthogonal(const SubspaceBasis& a, const SubspaceBasis& b);

// M contained in N in the blade-decomposition sense: osp M inside isp N.
bool contained(const Multivector& m, const Multivector& n);

enum class BalanceSide { Inner, Outer, Both };

// Checks whether a user-supplied decomposition sum(parts) = M is inner/outer
// balanced; throws if the parts do not sum to M.
bool is_balanced(const Multivector& m, const std::vector<Multivector>& parts,
                 BalanceSide side);

enum class FactorizationKind { MaximalOrthogonalOptimal, User };
enum class CarvingKind { MinimalInternalOptimal, User };

struct FactorizationResult {
  Blade b;        // unit, lex-gauged
  Multivector n;  // B -| M (for unit B)
  FactorizationKind kind = FactorizationKind::User;
  double residual = 0;
};

struct CarvingResult {
  Blade b;        // unit, lex-gauged
  Multivector n;  // B |- M (for unit B)
  CarvingKind kind = CarvingKind::User;
  double residual = 0;
};

// M = B ^ N with B the gauged wedge of an orthonormal basis of isp M.
FactorizationResult factorize_maximal(const Multivector& m);
// M = N -| B with B the gauged wedge of an orthonormal basis of osp M.
CarvingResult carve_minimal(const Multivector& m);

struct FactorizationFlags {
  bool efficient = false;   // osp N and [B] intersect trivially
  bool orthogonal = false;  // osp N inside [B]^perp
  bool maximal = false;     // [B] = isp M
  bool optimal = false;     // efficient and maximal
};

struct CarvingFlags {
  bool efficient = false;  // osp N and [B]^perp intersect trivially
  bool internal = false;   // osp N inside [B]
  bool minimal = false;    // [B] = osp M
  bool optimal = false;    // efficient and minimal
};

// Classify a user-supplied factorization M = B ^ N (throws if it does not
// reconstruct M) or carving M = N -| B.
FactorizationFlags classify_factorization(const Multivector& m, const Blade& b,
                                          const Multivector& n);
CarvingFlags classify_carving(const Multivector& m, const Blade& b,
                              const Multivector& n);

}  // namespace exalg
