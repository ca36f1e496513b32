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

// The psi-twisted bracket
//   [X, Y]_psi = X psi(Y) - Y psi(X).

#include <cstddef>
#include <vector>

#include "sunitary/maprep.hpp"
#include "sunitary/matcore.hpp"
#include "sunitary/subalgebra.hpp"

namespace sunitary {

/// psi(X); an alias for psi.apply(X).
CMatrix apply(const MapRep& psi, const CMatrix& X);

CMatrix twisted_bracket(const MapRep& psi, const CMatrix& X, const CMatrix& Y);

/// Frobenius norm of the cyclic sum of [X, [Y, Z]_psi]_psi.
double jacobi_defect(const MapRep& psi, const CMatrix& X, const CMatrix& Y,
                     const CMatrix& Z);

/// (1 + ||psi||)^2 (1 + ||X||)(1 + ||Y||)(1 + ||Z||), ||psi|| the spectral norm
/// of the superoperator. Natural size of a Jacobi defect.
double jacobi_scale(const MapRep& psi, const CMatrix& X, const CMatrix& Y, const CMatrix& Z);

struct JacobiSweep {
  struct Triple {
    Index x, y, z;  // column-major indices into the E_ij basis (r + c*n)
    double defect;
  };
  double max_defect = 0.0;
  double threshold = 0.0;
  std::vector<Triple> worst;  // descending by defect

  bool satisfies_jacobi() const { return max_defect <= threshold; }
};

/// Jacobi defect over every triple of matrix units. The Jacobiator is
/// complex-trilinear, so this sweep decides the identity on all of M_n(C).
JacobiSweep jacobi_sweep(const MapRep& psi, const Tolerances& tol = {},
                         std::size_t keep_worst = 1);

/// Whether the image of X -> A X lies in the commutant of B, i.e.
/// (A E_ij) B = B (A E_ij) for all i, j.
Verdict commutant_condition(const CMatrix& A, const CMatrix& B, const Tolerances& tol = {});
bool check_commutant_condition(const CMatrix& A, const CMatrix& B, const Tolerances& tol = {});

/// S A^* = A S within residual * (1 + ||S||)(1 + ||A||).
Verdict s_hermitian(const CMatrix& S, const CMatrix& A, const Tolerances& tol = {});
bool is_S_hermitian(const CMatrix& S, const CMatrix& A, const Tolerances& tol = {});

/// Whether [X, Y]_psi with psi(X) = A X stays in u_S for all basis pairs.
/// The verdict residual is the worst u_S membership ratio residual/threshold.
Verdict restriction_verdict(const CMatrix& S, const CMatrix& A, const SubalgebraBasis& basis,
                            const Tolerances& tol = {});
bool restricts_to_subalgebra(const CMatrix& S, const CMatrix& A, const SubalgebraBasis& basis,
                             const Tolerances& tol = {});

struct CoincidenceReport {
  bool coincides = false;
  CMatrix psi_of_identity;
  double max_deviation = 0.0;  // worst ||[E_ij, E_kl]_psi - [E_ij, E_kl]||
  double threshold = 0.0;
};

/// Compares [,]_psi with the commutator on all pairs of matrix units.
CoincidenceReport bracket_coincidence_report(const MapRep& psi, const Tolerances& tol = {});

}  // namespace sunitary
