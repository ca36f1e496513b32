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

#include "sunitary/matcore.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace sunitary {

void Tolerances::validate() const {
  if (!(std::isfinite(residual) && residual > 0.0)) {
    throw InvalidToleranceError("residual tolerance must be finite and positive");
  }
  if (!(std::isfinite(rank_cutoff) && rank_cutoff > 0.0)) {
    throw InvalidToleranceError("rank cutoff must be finite and positive");
  }
}

void require_square(const CMatrix& X, const char* what) {
  if (X.rows() != X.cols() || X.rows() == 0) {
    std::ostringstream os;
    os << what << ": expected a non-empty square matrix, got " << X.rows() << "x"
       << X.cols();
    throw DimensionError(os.str());
  }
}

void require_same_size(const CMatrix& X, const CMatrix& Y, const char* what) {
  if (X.rows() != Y.rows() || X.cols() != Y.cols()) {
    std::ostringstream os;
    os << what << ": size mismatch " << X.rows() << "x" << X.cols() << " vs "
       << Y.rows() << "x" << Y.cols();
    throw DimensionError(os.str());
  }
}

CMatrix RealifiedOperator::apply(const CMatrix& X) const {
  return complexify(matrix * realify(X), n);
}

CMatrix identity(Index n) { return CMatrix::Identity(n, n); }

CMatrix unit_matrix(Index n, Index i, Index j) {
  CMatrix E = CMatrix::Zero(n, n);
  E(i, j) = 1.0;
  return E;
}

CMatrix adjoint(const CMatrix& X) { return X.adjoint(); }

CMatrix commutator(const CMatrix& X, const CMatrix& Y) {
  require_square(X, "commutator");
  require_same_size(X, Y, "commutator");
  return X * Y - Y * X;
}

CMatrix kron(const CMatrix& A, const CMatrix& B) {
  CMatrix K(A.rows() * B.rows(), A.cols() * B.cols());
  for (Index i = 0; i < A.rows(); ++i) {
    for (Index j = 0; j < A.cols(); ++j) {
      K.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
    }
  }
  return K;
}

double norm(const CMatrix& X) { return X.norm(); }

CVector vec(const CMatrix& X) {
  return Eigen::Map<const CVector>(X.data(), X.size());
}

CMatrix unvec(const CVector& v, Index n) {
  if (v.size() != n * n) {
    throw DimensionError("unvec: vector length is not n^2");
  }
  return Eigen::Map<const CMatrix>(v.data(), n, n);
}

RVector realify(const CMatrix& X) {
  require_square(X, "realify");
  const Index m = X.size();
  RVector x(2 * m);
  const CVector v = vec(X);
  x.head(m) = v.real();
  x.tail(m) = v.imag();
  return x;
}

CMatrix complexify(const RVector& x, Index n) {
  const Index m = n * n;
  if (x.size() != 2 * m) {
    throw DimensionError("complexify: vector length is not 2n^2");
  }
  CVector v(m);
  for (Index k = 0; k < m; ++k) {
    v(k) = Complex(x(k), x(m + k));
  }
  return unvec(v, n);
}

CMatrix commutation_matrix(Index n) {
  CMatrix K = CMatrix::Zero(n * n, n * n);
  for (Index r = 0; r < n; ++r) {
    for (Index c = 0; c < n; ++c) {
      // vec(X^T)[c + r*n] = X^T(c, r) = X(r, c) = vec(X)[r + c*n]
      K(c + r * n, r + c * n) = 1.0;
    }
  }
  return K;
}

RealifiedOperator realify_semilinear(const CMatrix& linear, const CMatrix& antilinear) {
  require_same_size(linear, antilinear, "realify_semilinear");
  const Index m = linear.rows();
  const Index n = static_cast<Index>(std::llround(std::sqrt(static_cast<double>(m))));
  if (n * n != m || linear.cols() != m) {
    throw DimensionError("realify_semilinear: operators must be n^2 x n^2");
  }
  // x = a + ib:  L x + C conj(x) = (L + C) a + i (L - C) b
  const CMatrix P = linear + antilinear;
  const CMatrix Q = linear - antilinear;
  RealifiedOperator op;
  op.n = n;
  op.matrix.resize(2 * m, 2 * m);
  op.matrix.topLeftCorner(m, m) = P.real();
  op.matrix.topRightCorner(m, m) = -Q.imag();
  op.matrix.bottomLeftCorner(m, m) = P.imag();
  op.matrix.bottomRightCorner(m, m) = Q.real();
  return op;
}

RealifiedOperator realified_constraint_operator(const CMatrix& S) {
  require_square(S, "realified_constraint_operator");
  const Index n = S.rows();
  const CMatrix I = identity(n);
  // vec(X S) = (S^T (x) I) vec(X);  vec(S X^*) = (I (x) S) K conj(vec(X))
  const CMatrix right = kron(S.transpose(), I);
  const CMatrix left_adj = kron(I, S) * commutation_matrix(n);
  return realify_semilinear(right, left_adj);
}

Index numerical_rank(const RVector& singular_values, Index rows, Index cols,
                     const Tolerances& tol) {
  if (singular_values.size() == 0) return 0;
  const double smax = singular_values.maxCoeff();
  if (smax <= 0.0) return 0;
  const double cutoff =
      tol.rank_cutoff * smax * static_cast<double>(std::max(rows, cols));
  return static_cast<Index>((singular_values.array() > cutoff).count());
}

std::vector<RVector> nullspace_real(const RMatrix& M, const Tolerances& tol) {
  const Index k = M.cols();
  std::vector<RVector> kernel;
  if (k == 0) return kernel;
  // Pad to square so the full right singular basis is available.
  RMatrix A = RMatrix::Zero(std::max(M.rows(), k), k);
  A.topRows(M.rows()) = M;
  Eigen::JacobiSVD<RMatrix> dec(A, Eigen::ComputeFullV);
  const Index r = numerical_rank(dec.singularValues(), M.rows(), M.cols(), tol);
  for (Index j = r; j < k; ++j) {
    kernel.emplace_back(dec.matrixV().col(j));
  }
  return kernel;
}

SvdResult svd(const CMatrix& X) {
  Eigen::JacobiSVD<CMatrix> dec(X, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return {dec.matrixU(), dec.singularValues(), dec.matrixV()};
}

HermitianEigen eig_hermitian(const CMatrix& H, const Tolerances& tol) {
  require_square(H, "eig_hermitian");
  const double skew = (H - H.adjoint()).norm();
  if (skew > tol.residual * H.norm()) {
    throw NotHermitianError("eig_hermitian: input is not Hermitian (||H - H^*|| = " +
                            std::to_string(skew) + ")");
  }
  const CMatrix sym = 0.5 * (H + H.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> dec(sym);
  return {dec.eigenvalues(), dec.eigenvectors()};
}

Index rank(const CMatrix& X, const Tolerances& tol) {
  Eigen::JacobiSVD<CMatrix> dec(X);
  return numerical_rank(dec.singularValues(), X.rows(), X.cols(), tol);
}

CMatrix matrix_exponential(const CMatrix& X) {
  require_square(X, "matrix_exponential");
  static constexpr std::array<double, 14> b = {
      64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
      1187353796428800.0,  129060195264000.0,   10559470521600.0,
      670442572800.0,      33522128640.0,       1323241920.0,
      40840800.0,          960960.0,            16380.0,
      182.0,               1.0};
  constexpr double theta13 = 5.371920351148152;

  const Index n = X.rows();
  const double norm1 = X.cwiseAbs().colwise().sum().maxCoeff();
  int s = 0;
  if (norm1 > theta13) {
    s = std::max(0, static_cast<int>(std::ceil(std::log2(norm1 / theta13))));
  }
  const CMatrix A = X / std::ldexp(1.0, s);
  const CMatrix I = identity(n);
  const CMatrix A2 = A * A;
  const CMatrix A4 = A2 * A2;
  const CMatrix A6 = A4 * A2;

  const CMatrix U =
      A * (A6 * (b[13] * A6 + b[11] * A4 + b[9] * A2) + b[7] * A6 + b[5] * A4 +
           b[3] * A2 + b[1] * I);
  const CMatrix V = A6 * (b[12] * A6 + b[10] * A4 + b[8] * A2) + b[6] * A6 +
                    b[4] * A4 + b[2] * A2 + b[0] * I;

  CMatrix R = (V - U).partialPivLu().solve(V + U);
  for (int k = 0; k < s; ++k) {
    R = R * R;
  }
  return R;
}

bool is_invertible(const CMatrix& X, const Tolerances& tol) {
  if (X.rows() != X.cols() || X.rows() == 0) return false;
  return rank(X, tol) == X.rows();
}

CMatrix inverse(const CMatrix& X, const Tolerances& tol) {
  require_square(X, "inverse");
  if (!is_invertible(X, tol)) {
    throw SingularMatrixError("inverse: matrix is numerically singular");
  }
  return X.fullPivLu().inverse();
}

CMatrix solve(const CMatrix& A, const CMatrix& B, const Tolerances& tol) {
  require_square(A, "solve");
  if (B.rows() != A.rows()) {
    throw DimensionError("solve: right-hand side has wrong row count");
  }
  if (!is_invertible(A, tol)) {
    throw SingularMatrixError("solve: matrix is numerically singular");
  }
  return A.fullPivLu().solve(B);
}

Complex normalizing_phase(const CMatrix& X) {
  if (X.size() == 0) return 1.0;
  const double maxabs = X.cwiseAbs().maxCoeff();
  if (maxabs == 0.0) return 1.0;
  // Near-ties resolved by column-major order so the choice is stable under
  // rounding noise.
  const double threshold = maxabs * (1.0 - 1e-9);
  for (Index k = 0; k < X.size(); ++k) {
    const Complex z = X.data()[k];
    if (std::abs(z) >= threshold) {
      return std::conj(z) / std::abs(z);
    }
  }
  return 1.0;
}

CMatrix normalize_phase(const CMatrix& X) { return X * normalizing_phase(X); }

}  // namespace sunitary
