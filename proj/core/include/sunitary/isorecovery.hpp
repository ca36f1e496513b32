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

// Recovering conjugations from linear automorphisms of M_n(C), and checking
// that conjugation transports u_S and the stabilizer of S under the
// *-conjugation action X . S = X S X^*.

#include <optional>
#include <vector>

#include "sunitary/maprep.hpp"
#include "sunitary/matcore.hpp"
#include "sunitary/subalgebra.hpp"

namespace sunitary {

struct RecoveryResult {
  bool is_conjugation = false;
  std::optional<CMatrix> V;  // phase-normalized, present iff is_conjugation
  /// If is_conjugation: max_ij ||Phi(E_ij) - V E_ij V^{-1}|| / 2, so that
  /// ||Phi(X) - V X V^{-1}|| <= residual (1 + ||X||) on matrix units.
  /// Otherwise: relative distance of the Choi matrix from rank one.
  double residual = 0.0;
  double discarded_rank_mass = 0.0;
  Index pair_rank = 0;            // number of pairs surviving the rank cutoff
  double balance_residual = 0.0;  // ||B^* A - I|| for the single pair, else 0
};

/// Decides whether Phi(X) = V X V^{-1} for some invertible V. Phi must be
/// invertible as a map (SingularMatrixError otherwise). Phi is a conjugation
/// iff its pair decomposition has exactly one pair (A, B) and B^* A = I;
/// then V = A.
RecoveryResult detect_conjugation(const MapRep& phi, const Tolerances& tol = {});

struct LieIsomorphismReport {
  bool holds = false;
  Index dim_source = 0;
  Index dim_target = 0;
  double transport_residual = 0.0;  // worst ||T Y^* + Y T||, Y = V X_i V^{-1}
  double bracket_residual = 0.0;    // worst ||V[X,Y]V^{-1} - [VXV^{-1}, VYV^{-1}]||
  bool transported = false;
  bool brackets_preserved = false;
};

/// Whether X -> V X V^{-1} maps u_S into u_T (checked on a basis) and
/// preserves brackets; dimension mismatch is a failure.
LieIsomorphismReport lie_isomorphism_report(const CMatrix& S, const CMatrix& T,
                                            const CMatrix& V, const Tolerances& tol = {});
bool verify_lie_isomorphism(const CMatrix& S, const CMatrix& T, const CMatrix& V,
                            const Tolerances& tol = {});

/// Same contract as U_S_membership: X S X^* = S.
Verdict stabilizer_verdict(const CMatrix& S, const CMatrix& X, const Tolerances& tol = {});
bool stabilizer_membership(const CMatrix& S, const CMatrix& X, const Tolerances& tol = {});

struct StabilizerConjugacyReport {
  bool holds = false;
  Index samples = 0;
  Index stabilizing = 0;     // samples in stab(S)
  Index disagreements = 0;   // samples where the two memberships differ
  double relation_residual = 0.0;  // ||T - V S V^*||
  std::vector<Index> disagreeing_samples;
};

/// Checks X S X^* = S  <=>  (V X V^{-1}) T (V X V^{-1})^* = T on each sample.
/// Requires T = V S V^* (InconsistentInputError otherwise) and invertible V.
StabilizerConjugacyReport stabilizer_conjugacy_report(const CMatrix& S, const CMatrix& T,
                                                      const CMatrix& V,
                                                      const std::vector<CMatrix>& samples,
                                                      const Tolerances& tol = {});
bool verify_stabilizer_conjugacy(const CMatrix& S, const CMatrix& T, const CMatrix& V,
                                 const std::vector<CMatrix>& samples,
                                 const Tolerances& tol = {});

/// exp(t X_i) for every basis element and t in {0.1, 0.5, 1.0} (all in
/// stab(S)), followed by I + E_ij / 2 for every matrix unit (generally not).
std::vector<CMatrix> default_stabilizer_samples(const SubalgebraBasis& basis);

}  // namespace sunitary
