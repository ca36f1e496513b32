// Copyright 2026 The sunitary Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// The real Lie algebra u_S = { X : S X^* = -X S } and its group
// U_S = { X invertible : X S X^* = S }.

#include <functional>
#include <span>
#include <vector>

#include "sunitary/matcore.hpp"

namespace sunitary {

/// Real-orthonormal basis (under Re tr(X^* Y)) of u_S.
struct SubalgebraBasis {
  CMatrix S;
  std::vector<CMatrix> basis;

  Index n() const { return S.rows(); }
  Index dim() const { return static_cast<Index>(basis.size()); }

  /// Real coordinates of X in this basis (orthogonal projection).
  RVector coordinates(const CMatrix& X) const;
  CMatrix combine(const RVector& coeffs) const;
};

/// Kernel of the realified constraint operator, complexified. Deterministic
/// for a fixed S; S may be singular or zero.
SubalgebraBasis compute_basis(const CMatrix& S, const Tolerances& tol = {});

/// ||S X^* + X S|| against residual * (1 + ||S||)(1 + ||X||).
Verdict u_S_membership(const CMatrix& S, const CMatrix& X, const Tolerances& tol = {});
bool is_in_u_S(const CMatrix& S, const CMatrix& X, const Tolerances& tol = {});

/// ||X S X^* - S|| against residual * (1 + ||S||)(1 + ||X||^2).
/// Throws SingularMatrixError if X is not invertible.
Verdict U_S_membership(const CMatrix& S, const CMatrix& X, const Tolerances& tol = {});
bool is_in_U_S(const CMatrix& S, const CMatrix& X, const Tolerances& tol = {});

/// X -> V X V^{-1}. Throws SingularMatrixError for singular V.
CMatrix conjugation_map(const CMatrix& V, const CMatrix& X, const Tolerances& tol = {});

struct ComplexStructureReport {
  bool preserves_subspace = false;
  bool squares_to_minus_identity = false;
  bool bracket_compatible = false;
  double subspace_residual = 0.0;  // worst distance of J(X_i) from u_S
  double square_residual = 0.0;    // ||M^2 + I|| for the coordinate matrix M
  double bracket_residual = 0.0;   // worst of ||[JX,Y] - J[X,Y]||, ||[X,JY] - J[X,Y]||
  double threshold = 0.0;

  bool is_complex_structure() const {
    return preserves_subspace && squares_to_minus_identity && bracket_compatible;
  }
};

/// Checks a candidate complex structure J on u_S, given by the images
/// J(X_i) of the basis elements. A J that leaves u_S gets
/// preserves_subspace = false and is not a complex structure.
ComplexStructureReport complex_structure_report(const SubalgebraBasis& basis,
                                                std::span<const CMatrix> images,
                                                const Tolerances& tol = {});
ComplexStructureReport complex_structure_report(
    const SubalgebraBasis& basis, const std::function<CMatrix(const CMatrix&)>& J,
    const Tolerances& tol = {});
bool check_complex_structure(const SubalgebraBasis& basis,
                             const std::function<CMatrix(const CMatrix&)>& J,
                             const Tolerances& tol = {});

}  // namespace sunitary
