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

#include "sunitary/isorecovery.hpp"

#include <algorithm>
#include <cmath>


namespace sunitary {

RecoveryResult detect_conjugation(const MapRep& phi, const Tolerances& tol) {
  tol.validate();
  const Index n = phi.n();
  const CMatrix L = phi.superoperator();
  if (!is_invertible(L, tol)) {
    throw SingularMatrixError("detect_conjugation: the map is not invertible on M_n(C)");
  }

  const PairDecomposition dec = decompose_choi(superoperator_to_choi(L), tol);
  RecoveryResult out;
  out.pair_rank = static_cast<Index>(dec.pairs.size());
  out.discarded_rank_mass = dec.discarded_mass;

  if (dec.pairs.size() != 1) {
    const RVector& s = dec.singular_values;
    out.residual = s.size() > 1 ? s.tail(s.size() - 1).norm() / s.norm() : 0.0;
    return out;
  }

  const CMatrix& A = dec.pairs.front().left;
  const CMatrix& B = dec.pairs.front().right;
  out.balance_residual = (B.adjoint() * A - identity(n)).norm();
  if (out.balance_residual > tol.residual * A.norm() * B.norm()) {
    // Phi = c * conjugation with c != 1: rank one, but not a Lie automorphism.
    out.residual = out.balance_residual;
    return out;
  }

  const CMatrix V = normalize_phase(A);
  const CMatrix Vinv = inverse(V, tol);
  for (Index c = 0; c < n; ++c) {
    for (Index r = 0; r < n; ++r) {
      const CMatrix E = unit_matrix(n, r, c);
      out.residual = std::max(out.residual, 0.5 * (phi.apply(E) - V * E * Vinv).norm());
    }
  }
  out.is_conjugation = true;
  out.V = V;
  return out;
}

LieIsomorphismReport lie_isomorphism_report(const CMatrix& S, const CMatrix& T,
                                            const CMatrix& V, const Tolerances& tol) {
  require_square(S, "verify_lie_isomorphism");
  require_same_size(S, T, "verify_lie_isomorphism");
  require_same_size(S, V, "verify_lie_isomorphism");
  if (!is_invertible(V, tol)) {
    throw SingularMatrixError("verify_lie_isomorphism: V is numerically singular");
  }
  const CMatrix Vinv = inverse(V, tol);
  const SubalgebraBasis source = compute_basis(S, tol);
  const SubalgebraBasis target = compute_basis(T, tol);

  LieIsomorphismReport rep;
  rep.dim_source = source.dim();
  rep.dim_target = target.dim();

  std::vector<CMatrix> images;
  images.reserve(source.basis.size());
  rep.transported = true;
  for (const CMatrix& X : source.basis) {
    images.push_back(V * X * Vinv);
    const Verdict m = u_S_membership(T, images.back(), tol);
    rep.transport_residual = std::max(rep.transport_residual, m.residual);
    rep.transported = rep.transported && m.holds;
  }

  rep.brackets_preserved = true;
  const Index d = source.dim();
  for (Index i = 0; i < d; ++i) {
    for (Index j = i + 1; j < d; ++j) {
      const CMatrix lhs = V * commutator(source.basis[i], source.basis[j]) * Vinv;
      const CMatrix rhs = commutator(images[i], images[j]);
      const double res = (lhs - rhs).norm();
      rep.bracket_residual = std::max(rep.bracket_residual, res);
      const double thr =
          tol.residual * (1.0 + images[i].norm()) * (1.0 + images[j].norm());
      rep.brackets_preserved = rep.brackets_preserved && res <= thr;
    }
  }
  rep.holds = rep.dim_source == rep.dim_target && rep.transported && rep.brackets_preserved;
  return rep;
}

bool verify_lie_isomorphism(const CMatrix& S, const CMatrix& T, const CMatrix& V,
                            const Tolerances& tol) {
  return lie_isomorphism_report(S, T, V, tol).holds;
}

Verdict stabilizer_verdict(const CMatrix& S, const CMatrix& X, const Tolerances& tol) {
  return U_S_membership(S, X, tol);
}

bool stabilizer_membership(const CMatrix& S, const CMatrix& X, const Tolerances& tol) {
  return stabilizer_verdict(S, X, tol).holds;
}

StabilizerConjugacyReport stabilizer_conjugacy_report(const CMatrix& S, const CMatrix& T,
                                                      const CMatrix& V,
                                                      const std::vector<CMatrix>& samples,
                                                      const Tolerances& tol) {
  require_square(S, "verify_stabilizer_conjugacy");
  require_same_size(S, T, "verify_stabilizer_conjugacy");
  require_same_size(S, V, "verify_stabilizer_conjugacy");
  const CMatrix Vinv = inverse(V, tol);

  StabilizerConjugacyReport rep;
  rep.relation_residual = (T - V * S * V.adjoint()).norm();
  const double nv = V.norm();
  if (rep.relation_residual > tol.residual * (1.0 + T.norm()) * (1.0 + nv * nv)) {
    throw InconsistentInputError("verify_stabilizer_conjugacy: T != V S V^*");
  }

  rep.samples = static_cast<Index>(samples.size());
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const CMatrix& X = samples[k];
    require_same_size(S, X, "verify_stabilizer_conjugacy");
    const bool in_source = stabilizer_verdict(S, X, tol).holds;
    const bool in_target = stabilizer_verdict(T, V * X * Vinv, tol).holds;
    rep.stabilizing += in_source ? 1 : 0;
    if (in_source != in_target) {
      ++rep.disagreements;
      rep.disagreeing_samples.push_back(static_cast<Index>(k));
    }
  }
  rep.holds = rep.disagreements == 0;
  return rep;
}

bool verify_stabilizer_conjugacy(const CMatrix& S, const CMatrix& T, const CMatrix& V,
                                 const std::vector<CMatrix>& samples, const Tolerances& tol) {
  return stabilizer_conjugacy_report(S, T, V, samples, tol).holds;
}

std::vector<CMatrix> default_stabilizer_samples(const SubalgebraBasis& basis) {
  std::vector<CMatrix> samples;
  for (const CMatrix& X : basis.basis) {
    for (double t : {0.1, 0.5, 1.0}) {
      samples.push_back(matrix_exponential(t * X));
    }
  }
  const Index n = basis.n();
  for (Index c = 0; c < n; ++c) {
    for (Index r = 0; r < n; ++r) {
      samples.push_back(identity(n) + 0.5 * unit_matrix(n, r, c));
    }
  }
  return samples;
}

}  // namespace sunitary
