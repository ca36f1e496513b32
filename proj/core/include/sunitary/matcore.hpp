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

// Dense complex matrix primitives shared by every other module.
//
// Conventions fixed here and used project-wide:
//   * vec(X) is column stacking: vec(X)[r + c*n] = X(r, c).
//   * realify(X) = (Re vec(X), Im vec(X)), a vector in R^{2n^2}. It is an
//     isometry from (M_n(C), Re tr(X^* Y)) onto Euclidean R^{2n^2}.

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "sunitary/errors.hpp"

namespace sunitary {

using Index = Eigen::Index;
using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

/// Numerical thresholds used by every decision operation.
///
/// `residual` is a relative Frobenius-norm tolerance for identities that should
/// hold exactly in exact arithmetic. `rank_cutoff` decides numerical rank:
/// a singular value s counts iff s > rank_cutoff * s_max * max(rows, cols).
struct Tolerances {
  double residual = 1e-9;
  double rank_cutoff = 1e-10;

  /// Throws InvalidToleranceError unless both values are finite and > 0.
  void validate() const;
};

/// Outcome of a tolerance-based decision: the verdict plus the evidence.
struct Verdict {
  bool holds = false;
  double residual = 0.0;
  double threshold = 0.0;

  explicit operator bool() const { return holds; }
};

/// Real-linear map on M_n(C) acting on realify(X).
struct RealifiedOperator {
  Index n = 0;  // ambient matrix size; matrix is 2n^2 x 2n^2
  RMatrix matrix;

  Index dim() const { return matrix.rows(); }
  RVector apply(const RVector& x) const { return matrix * x; }
  CMatrix apply(const CMatrix& X) const;
};

CMatrix identity(Index n);
/// Matrix unit E_ij (zero except a one at (i, j)).
CMatrix unit_matrix(Index n, Index i, Index j);

CMatrix adjoint(const CMatrix& X);
CMatrix commutator(const CMatrix& X, const CMatrix& Y);
CMatrix kron(const CMatrix& A, const CMatrix& B);

/// Frobenius norm.
double norm(const CMatrix& X);

CVector vec(const CMatrix& X);
CMatrix unvec(const CVector& v, Index n);

RVector realify(const CMatrix& X);
CMatrix complexify(const RVector& x, Index n);

/// The n^2 x n^2 permutation K with K vec(X) = vec(X^T).
CMatrix commutation_matrix(Index n);

/// Realifies the semilinear map x -> L x + C conj(x) on C^{n^2}, where x is
/// vec(X). Result acts on realify(X).
RealifiedOperator realify_semilinear(const CMatrix& linear, const CMatrix& antilinear);

/// L with L realify(X) = realify(S X^* + X S).
RealifiedOperator realified_constraint_operator(const CMatrix& S);

/// Orthonormal basis of the numerical kernel of M (possibly empty).
std::vector<RVector> nullspace_real(const RMatrix& M, const Tolerances& tol = {});

struct SvdResult {
  CMatrix U;
  RVector singular_values;  // descending
  CMatrix V;
};

/// Thin SVD, X = U diag(s) V^*.
SvdResult svd(const CMatrix& X);

struct HermitianEigen {
  RVector eigenvalues;  // ascending
  CMatrix eigenvectors;
};

/// Throws NotHermitianError if ||H - H^*|| > residual * ||H||.
HermitianEigen eig_hermitian(const CMatrix& H, const Tolerances& tol = {});

/// Number of singular values above rank_cutoff * s_max * max(rows, cols).
Index numerical_rank(const RVector& singular_values, Index rows, Index cols,
                     const Tolerances& tol = {});
Index rank(const CMatrix& X, const Tolerances& tol = {});

/// Scaling and squaring with a degree-13 Pade kernel.
CMatrix matrix_exponential(const CMatrix& X);

/// Throws SingularMatrixError when X is numerically rank deficient.
CMatrix inverse(const CMatrix& X, const Tolerances& tol = {});
CMatrix solve(const CMatrix& A, const CMatrix& B, const Tolerances& tol = {});
bool is_invertible(const CMatrix& X, const Tolerances& tol = {});

/// Rescales by a unit phase so the largest-magnitude entry (first in
/// column-major order on ties) is real and positive. Zero stays zero.
CMatrix normalize_phase(const CMatrix& X);
/// The unit factor applied by normalize_phase (1 for the zero matrix).
Complex normalizing_phase(const CMatrix& X);

void require_square(const CMatrix& X, const char* what);
void require_same_size(const CMatrix& X, const CMatrix& Y, const char* what);

}  // namespace sunitary
