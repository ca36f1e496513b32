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

// Choi matrices, complete positivity, Kraus operators and their unitary
// freedom. Block and reshuffle conventions live in maprep.hpp.

#include <vector>

#include "sunitary/maprep.hpp"
#include "sunitary/matcore.hpp"

namespace sunitary {

struct ChoiMatrix {
  Index n = 0;
  CMatrix matrix;  // n^2 x n^2, block (i, j) = psi(E_ij)

  CMatrix block(Index i, Index j) const { return matrix.block(i * n, j * n, n, n); }
};

/// Operators A_k of psi(X) = sum_k A_k X A_k^*.
struct KrausSet {
  std::vector<CMatrix> operators;

  Index n() const;
  Index size() const { return static_cast<Index>(operators.size()); }
  CMatrix apply(const CMatrix& X) const;
  MapRep as_map() const;
};

ChoiMatrix choi(const MapRep& psi);

struct PositivityReport {
  bool completely_positive = false;
  double hermiticity_residual = 0.0;  // ||J - J^*||
  double min_eigenvalue = 0.0;        // of (J + J^*)/2
  double choi_norm = 0.0;             // ||J||
  double threshold = 0.0;             // residual * ||J||
};

/// J Hermitian and positive semidefinite, both within residual * ||J||.
PositivityReport positivity_report(const MapRep& psi, const Tolerances& tol = {});
bool is_completely_positive(const MapRep& psi, const Tolerances& tol = {});

struct KrausDecomposition {
  KrausSet kraus;
  RVector eigenvalues;          // of the symmetrized Choi matrix, descending
  double discarded_mass = 0.0;  // dropped |eigenvalue| mass / total |eigenvalue| mass
};

/// Eigen-decomposition of a PSD Choi matrix; operators ordered by
/// descending eigenvalue and phase-normalized. Throws NotPositiveError.
KrausDecomposition kraus_decomposition(const ChoiMatrix& J, const Tolerances& tol = {});
KrausSet kraus_from_choi(const ChoiMatrix& J, const Tolerances& tol = {});

/// ||sum A A^* - I|| <= residual * ||I||.
Verdict unitality(const KrausSet& K, const Tolerances& tol = {});
bool is_unital(const KrausSet& K, const Tolerances& tol = {});
/// ||sum A^* A - I|| <= residual * ||I||.
Verdict trace_preservation(const KrausSet& K, const Tolerances& tol = {});
bool is_trace_preserving(const KrausSet& K, const Tolerances& tol = {});

/// psi(X) = sum A_i X B_i^* with as many pairs as the Choi rank.
PairDecomposition general_pair_decomposition(const MapRep& psi, const Tolerances& tol = {});
std::vector<KrausPair> general_pair_representation(const MapRep& psi, const Tolerances& tol = {});

/// Worst ||psi(E_ij) - phi(E_ij)|| over the matrix units.
double map_distance(const MapRep& psi, const MapRep& phi);

struct IntertwinerResult {
  CMatrix U;                        // m x m, m = max(r, s)
  double reproduction_residual = 0.0;  // max_j ||B_j - sum_i U_ji A_i||
  double unitarity_residual = 0.0;     // ||U^* U - I||
};

/// Unitary U with B_j = sum_i U_ji A_i, both sets zero-padded to equal
/// length. Throws InconsistentInputError if the sets describe different maps
/// or no unitary reproduces the second set.
IntertwinerResult unitary_intertwiner(const KrausSet& first, const KrausSet& second,
                                      const Tolerances& tol = {});

}  // namespace sunitary
