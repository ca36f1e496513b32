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

// Representations of linear maps psi: M_n(C) -> M_n(C).
//
// Index conventions (the only place they are defined):
//   superoperator L:  vec(psi(X)) = L vec(X), vec column-stacking.
//   Choi matrix J:    J = sum_ij E_ij (x) psi(E_ij), so block (i, j) of J is
//                     psi(E_ij) and J[i*n + a, j*n + b] = psi(E_ij)(a, b).
//   Reshuffle:        J[i*n + a, j*n + b] = L[a + b*n, i + j*n].
// With these, psi(X) = sum_k A_k X B_k^* has J = sum_k vec(A_k) vec(B_k)^*.

#include <optional>
#include <vector>

#include "sunitary/matcore.hpp"

namespace sunitary {

/// One term X -> left * X * right^* of a pair representation.
struct KrausPair {
  CMatrix left;
  CMatrix right;
};

/// A linear map on M_n(C), held as a superoperator (acting on vec(X)), as a
/// list of pairs, or both. Construction validates shapes; `from_both` also
/// validates that the two forms agree on every E_ij.
class MapRep {
 public:
  static MapRep from_superoperator(CMatrix superop);
  static MapRep from_kraus_pairs(std::vector<KrausPair> pairs);
  static MapRep from_both(CMatrix superop, std::vector<KrausPair> pairs,
                          const Tolerances& tol = {});

  static MapRep identity(Index n);
  /// X -> A X
  static MapRep left_multiplication(const CMatrix& A);
  /// X -> X B
  static MapRep right_multiplication(const CMatrix& B);
  /// X -> A X B^*
  static MapRep single_pair(const CMatrix& A, const CMatrix& B);

  Index n() const { return n_; }
  bool has_superoperator() const { return superop_.has_value(); }
  bool has_kraus_pairs() const { return pairs_.has_value(); }

  CMatrix apply(const CMatrix& X) const;

  /// The n^2 x n^2 matrix L with vec(psi(X)) = L vec(X); built from the pairs
  /// when only those are stored.
  CMatrix superoperator() const;
  /// Stored pairs, or an exact decomposition of the stored superoperator.
  std::vector<KrausPair> kraus_pairs(const Tolerances& tol = {}) const;

 private:
  MapRep() = default;
  Index n_ = 0;
  std::optional<CMatrix> superop_;
  std::optional<std::vector<KrausPair>> pairs_;
};

/// Superoperator -> Choi matrix (pure index permutation).
CMatrix superoperator_to_choi(const CMatrix& superop);
/// Choi matrix -> superoperator (inverse permutation).
CMatrix choi_to_superoperator(const CMatrix& choi);

/// Pair decomposition read off an SVD of the Choi matrix:
/// J = sum_k s_k u_k v_k^*  gives  A_k = sqrt(s_k) unvec(u_k),
/// B_k = sqrt(s_k) unvec(v_k). Terms below the rank cutoff are dropped.
struct PairDecomposition {
  std::vector<KrausPair> pairs;
  RVector singular_values;     // all n^2 of them, descending
  double discarded_mass = 0.0; // sum of dropped singular values / sum of all
};
PairDecomposition decompose_choi(const CMatrix& choi, const Tolerances& tol = {});

}  // namespace sunitary
