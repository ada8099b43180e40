#pragma once

namespace exalg {

// Largest supported ambient dimension. 2^n basis blades must stay addressable
// by a 32-bit set and the dense test oracles must fit in memory.
#ifndef EXALG_DIMENSION_CAP
inline constexpr int kDimensionCap = 16;
#else
inline constexpr int kDimensionCap = EXALG_DIMENSION_CAP;
#endif

// Coefficient cleanup threshold: terms with |coefficient| <= kCoeffTol are
// dropped after arithmetic.
inline constexpr double kCoeffTol = 1e-12;

// Relative singular-value cutoff for all rank/space decisions (inner and
// outer spaces, simplicity, subspace comparisons, principal angles).
inline constexpr double kRankRelTol = 1e-9;

// A principal cosine above 1 - kUnityTol counts as angle zero.
inline constexpr double kUnityTol = 1e-12;

// Relative tolerance for a blade's stored vector factorization to reproduce
// its coefficient data.
inline constexpr double kBladeRelTol = 1e-9;

// Smallest singular value of an invertible map must exceed
// kInvertRelTol * (largest singular value).
inline constexpr double kInvertRelTol = 1e-10;

// Relative residual allowed when a factorization or carving reconstructs its
// multivector.
inline constexpr double kReconstructRelTol = 1e-8;

}  // namespace exalg
