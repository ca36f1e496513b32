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

#include "sunitary/channels.hpp"

#include <algorithm>
#include <cmath>

namespace sunitary {

namespace {

PositivityReport positivity_of(const CMatrix& J, const Tolerances& tol) {
  PositivityReport rep;
  rep.choi_norm = J.norm();
  rep.hermiticity_residual = (J - J.adjoint()).norm();
  rep.threshold = tol.residual * rep.choi_norm;
  const CMatrix sym = 0.5 * (J + J.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> dec(sym, Eigen::EigenvaluesOnly);
  rep.min_eigenvalue = dec.eigenvalues().size() ? dec.eigenvalues()(0) : 0.0;
  rep.completely_positive =
      rep.hermiticity_residual <= rep.threshold && rep.min_eigenvalue >= -rep.threshold;
  return rep;
}

}  // namespace

Index KrausSet::n() const {
  if (operators.empty()) {
    throw DimensionError("KrausSet is empty");
  }
  return operators.front().rows();
}

CMatrix KrausSet::apply(const CMatrix& X) const { return as_map().apply(X); }

MapRep KrausSet::as_map() const {
  std::vector<KrausPair> pairs;
  pairs.reserve(operators.size());
  for (const CMatrix& A : operators) {
    pairs.push_back({A, A});
  }
  return MapRep::from_kraus_pairs(std::move(pairs));
}

ChoiMatrix choi(const MapRep& psi) {
  return ChoiMatrix{psi.n(), superoperator_to_choi(psi.superoperator())};
}

PositivityReport positivity_report(const MapRep& psi, const Tolerances& tol) {
  return positivity_of(choi(psi).matrix, tol);
}

bool is_completely_positive(const MapRep& psi, const Tolerances& tol) {
  return positivity_report(psi, tol).completely_positive;
}

KrausDecomposition kraus_decomposition(const ChoiMatrix& J, const Tolerances& tol) {
  const Index n = J.n;
  if (J.matrix.rows() != n * n || J.matrix.cols() != n * n) {
    throw DimensionError("ChoiMatrix: matrix is not n^2 x n^2");
  }
  const PositivityReport pos = positivity_of(J.matrix, tol);
  if (!pos.completely_positive) {
    throw NotPositiveError("kraus_from_choi: Choi matrix is not positive semidefinite "
                           "(min eigenvalue " + std::to_string(pos.min_eigenvalue) + ")");
  }
  const CMatrix sym = 0.5 * (J.matrix + J.matrix.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> dec(sym);
  const Index m = n * n;

  KrausDecomposition out;
  out.eigenvalues = dec.eigenvalues().reverse();
  const RVector magnitudes = out.eigenvalues.cwiseAbs();
  const double lmax = magnitudes.size() ? magnitudes.maxCoeff() : 0.0;
  const double cutoff = tol.rank_cutoff * lmax * static_cast<double>(m);
  double kept = 0.0;
  for (Index k = 0; k < m; ++k) {
    const double lambda = out.eigenvalues(k);
    if (lambda > cutoff && lmax > 0.0) {
      const CVector v = dec.eigenvectors().col(m - 1 - k);
      out.kraus.operators.push_back(normalize_phase(std::sqrt(lambda) * unvec(v, n)));
      kept += lambda;
    }
  }
  const double total = magnitudes.sum();
  if (total > 0.0) {
    out.discarded_mass = std::max(0.0, (total - kept) / total);
  }
  if (out.kraus.operators.empty()) {
    // The zero map still needs one operator.
    out.kraus.operators.push_back(CMatrix::Zero(n, n));
  }
  return out;
}

KrausSet kraus_from_choi(const ChoiMatrix& J, const Tolerances& tol) {
  return kraus_decomposition(J, tol).kraus;
}

Verdict unitality(const KrausSet& K, const Tolerances& tol) {
  const Index n = K.n();
  CMatrix sum = CMatrix::Zero(n, n);
  for (const CMatrix& A : K.operators) sum += A * A.adjoint();
  Verdict v;
  v.residual = (sum - identity(n)).norm();
  v.threshold = tol.residual * std::sqrt(static_cast<double>(n));
  v.holds = v.residual <= v.threshold;
  return v;
}

bool is_unital(const KrausSet& K, const Tolerances& tol) { return unitality(K, tol).holds; }

Verdict trace_preservation(const KrausSet& K, const Tolerances& tol) {
  const Index n = K.n();
  CMatrix sum = CMatrix::Zero(n, n);
  for (const CMatrix& A : K.operators) sum += A.adjoint() * A;
  Verdict v;
  v.residual = (sum - identity(n)).norm();
  v.threshold = tol.residual * std::sqrt(static_cast<double>(n));
  v.holds = v.residual <= v.threshold;
  return v;
}

bool is_trace_preserving(const KrausSet& K, const Tolerances& tol) {
  return trace_preservation(K, tol).holds;
}

PairDecomposition general_pair_decomposition(const MapRep& psi, const Tolerances& tol) {
  return decompose_choi(choi(psi).matrix, tol);
}

std::vector<KrausPair> general_pair_representation(const MapRep& psi, const Tolerances& tol) {
  return general_pair_decomposition(psi, tol).pairs;
}

double map_distance(const MapRep& psi, const MapRep& phi) {
  if (psi.n() != phi.n()) {
    throw DimensionError("map_distance: maps act on different sizes");
  }
  const CMatrix diff = psi.superoperator() - phi.superoperator();
  double worst = 0.0;
  for (Index k = 0; k < diff.cols(); ++k) {
    worst = std::max(worst, diff.col(k).norm());
  }
  return worst;
}

IntertwinerResult unitary_intertwiner(const KrausSet& first, const KrausSet& second,
                                      const Tolerances& tol) {
  const Index n = first.n();
  if (second.n() != n) {
    throw DimensionError("unitary_intertwiner: Kraus sets act on different sizes");
  }
  double weight = 0.0;
  for (const CMatrix& A : first.operators) weight += A.squaredNorm();
  const double scale = 1.0 + weight;
  if (map_distance(first.as_map(), second.as_map()) > tol.residual * scale) {
    throw InconsistentInputError(
        "unitary_intertwiner: the Kraus sets do not represent the same map");
  }

  const Index m = std::max(first.size(), second.size());
  // Row i holds vec(A_i)^T; missing rows are the zero padding.
  CMatrix rows_a = CMatrix::Zero(m, n * n);
  CMatrix rows_b = CMatrix::Zero(m, n * n);
  for (Index i = 0; i < first.size(); ++i) rows_a.row(i) = vec(first.operators[i]).transpose();
  for (Index j = 0; j < second.size(); ++j) rows_b.row(j) = vec(second.operators[j]).transpose();

  // Unitary Procrustes: argmin_U ||rows_b - U rows_a|| over unitary U is
  // W Z^* for the SVD rows_b rows_a^* = W S Z^*.
  const CMatrix cross = rows_b * rows_a.adjoint();
  Eigen::JacobiSVD<CMatrix> dec(cross, Eigen::ComputeFullU | Eigen::ComputeFullV);

  IntertwinerResult out;
  out.U = dec.matrixU() * dec.matrixV().adjoint();
  const CMatrix mixed = out.U * rows_a;
  for (Index j = 0; j < m; ++j) {
    out.reproduction_residual =
        std::max(out.reproduction_residual, (rows_b.row(j) - mixed.row(j)).norm());
  }
  out.unitarity_residual = (out.U.adjoint() * out.U - CMatrix::Identity(m, m)).norm();
  if (out.reproduction_residual > tol.residual * scale ||
      out.unitarity_residual > tol.residual * static_cast<double>(m)) {
    throw InconsistentInputError("unitary_intertwiner: no unitary reproduces the second set");
  }
  return out;
}

}  // namespace sunitary
