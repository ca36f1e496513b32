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

#include "sunitary/subalgebra.hpp"

#include <algorithm>

namespace sunitary {

RVector SubalgebraBasis::coordinates(const CMatrix& X) const {
  RVector c(dim());
  for (Index k = 0; k < dim(); ++k) {
    c(k) = (basis[k].adjoint() * X).trace().real();
  }
  return c;
}

CMatrix SubalgebraBasis::combine(const RVector& coeffs) const {
  if (coeffs.size() != dim()) {
    throw DimensionError("SubalgebraBasis::combine: coefficient count != dim");
  }
  CMatrix X = CMatrix::Zero(n(), n());
  for (Index k = 0; k < dim(); ++k) {
    X += coeffs(k) * basis[k];
  }
  return X;
}

SubalgebraBasis compute_basis(const CMatrix& S, const Tolerances& tol) {
  require_square(S, "compute_basis");
  tol.validate();
  const Index n = S.rows();
  SubalgebraBasis out;
  out.S = S;
  // realify is an isometry, so an orthonormal real kernel basis is already
  // orthonormal for Re tr(X^* Y).
  for (const RVector& v : nullspace_real(realified_constraint_operator(S).matrix, tol)) {
    out.basis.push_back(complexify(v, n));
  }
  return out;
}

Verdict u_S_membership(const CMatrix& S, const CMatrix& X, const Tolerances& tol) {
  require_square(S, "is_in_u_S");
  require_same_size(S, X, "is_in_u_S");
  Verdict v;
  v.residual = (S * X.adjoint() + X * S).norm();
  v.threshold = tol.residual * (1.0 + S.norm()) * (1.0 + X.norm());
  v.holds = v.residual <= v.threshold;
  return v;
}

bool is_in_u_S(const CMatrix& S, const CMatrix& X, const Tolerances& tol) {
  return u_S_membership(S, X, tol).holds;
}

Verdict U_S_membership(const CMatrix& S, const CMatrix& X, const Tolerances& tol) {
  require_square(S, "is_in_U_S");
  require_same_size(S, X, "is_in_U_S");
  if (!is_invertible(X, tol)) {
    throw SingularMatrixError("is_in_U_S: X is numerically singular");
  }
  Verdict v;
  v.residual = (X * S * X.adjoint() - S).norm();
  const double nx = X.norm();
  v.threshold = tol.residual * (1.0 + S.norm()) * (1.0 + nx * nx);
  v.holds = v.residual <= v.threshold;
  return v;
}

bool is_in_U_S(const CMatrix& S, const CMatrix& X, const Tolerances& tol) {
  return U_S_membership(S, X, tol).holds;
}

CMatrix conjugation_map(const CMatrix& V, const CMatrix& X, const Tolerances& tol) {
  require_square(V, "conjugation_map");
  require_same_size(V, X, "conjugation_map");
  // V X V^{-1} = (V^{-*} (V X)^*)^* avoids forming the inverse explicitly.
  const CMatrix VX = V * X;
  const CMatrix Vh = V.adjoint();
  return solve(Vh, VX.adjoint(), tol).adjoint();
}

ComplexStructureReport complex_structure_report(const SubalgebraBasis& basis,
                                                std::span<const CMatrix> images,
                                                const Tolerances& tol) {
  const Index d = basis.dim();
  if (static_cast<Index>(images.size()) != d) {
    throw DimensionError("complex_structure_report: need one image per basis element");
  }
  ComplexStructureReport rep;
  rep.threshold = tol.residual;
  if (d == 0) {
    // The zero space carries the empty complex structure.
    rep.preserves_subspace = rep.squares_to_minus_identity = rep.bracket_compatible = true;
    return rep;
  }

  // Coordinate matrix M with J(X_j) = sum_i M(i, j) X_i.
  RMatrix M(d, d);
  double scale = 1.0;
  for (Index j = 0; j < d; ++j) {
    require_same_size(basis.S, images[j], "complex_structure_report");
    M.col(j) = basis.coordinates(images[j]);
    const double off = (images[j] - basis.combine(M.col(j))).norm();
    rep.subspace_residual = std::max(rep.subspace_residual, off);
    scale = std::max(scale, images[j].norm());
  }
  rep.preserves_subspace = rep.subspace_residual <= tol.residual * scale;
  if (!rep.preserves_subspace) {
    return rep;
  }

  rep.square_residual = (M * M + RMatrix::Identity(d, d)).norm();
  rep.squares_to_minus_identity = rep.square_residual <= tol.residual * (1.0 + M.norm() * M.norm());

  double bracket_scale = 0.0;
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) {
      const CMatrix& X = basis.basis[i];
      const CMatrix& Y = basis.basis[j];
      const CMatrix XY = commutator(X, Y);
      const CMatrix J_XY = basis.combine(M * basis.coordinates(XY));
      const CMatrix JX_Y = commutator(images[i], Y);
      const CMatrix X_JY = commutator(X, images[j]);
      rep.bracket_residual =
          std::max({rep.bracket_residual, (JX_Y - J_XY).norm(), (X_JY - J_XY).norm()});
      bracket_scale = std::max(bracket_scale, (1.0 + images[i].norm()) * (1.0 + images[j].norm()));
    }
  }
  rep.bracket_compatible = rep.bracket_residual <= tol.residual * bracket_scale;
  return rep;
}

ComplexStructureReport complex_structure_report(
    const SubalgebraBasis& basis, const std::function<CMatrix(const CMatrix&)>& J,
    const Tolerances& tol) {
  std::vector<CMatrix> images;
  images.reserve(basis.basis.size());
  for (const CMatrix& X : basis.basis) {
    images.push_back(J(X));
  }
  return complex_structure_report(basis, images, tol);
}

bool check_complex_structure(const SubalgebraBasis& basis,
                             const std::function<CMatrix(const CMatrix&)>& J,
                             const Tolerances& tol) {
  return complex_structure_report(basis, J, tol).is_complex_structure();
}

}  // namespace sunitary
