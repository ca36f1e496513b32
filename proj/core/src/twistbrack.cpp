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

#include "sunitary/twistbrack.hpp"

#include <algorithm>
#include <tuple>

namespace sunitary {

namespace {

double spectral_norm(const MapRep& psi) {
  const RVector s = svd(psi.superoperator()).singular_values;
  return s.size() ? s(0) : 0.0;
}

std::vector<CMatrix> matrix_units(Index n) {
  std::vector<CMatrix> units;
  units.reserve(n * n);
  for (Index c = 0; c < n; ++c)
    for (Index r = 0; r < n; ++r)
      units.push_back(unit_matrix(n, r, c));
  return units;
}

}  // namespace

CMatrix apply(const MapRep& psi, const CMatrix& X) { return psi.apply(X); }

CMatrix twisted_bracket(const MapRep& psi, const CMatrix& X, const CMatrix& Y) {
  require_square(X, "twisted_bracket");
  require_same_size(X, Y, "twisted_bracket");
  return X * psi.apply(Y) - Y * psi.apply(X);
}

double jacobi_defect(const MapRep& psi, const CMatrix& X, const CMatrix& Y,
                     const CMatrix& Z) {
  require_same_size(X, Z, "jacobi_defect");
  const CMatrix cyclic = twisted_bracket(psi, X, twisted_bracket(psi, Y, Z)) +
                         twisted_bracket(psi, Y, twisted_bracket(psi, Z, X)) +
                         twisted_bracket(psi, Z, twisted_bracket(psi, X, Y));
  return cyclic.norm();
}

double jacobi_scale(const MapRep& psi, const CMatrix& X, const CMatrix& Y, const CMatrix& Z) {
  const double p = 1.0 + spectral_norm(psi);
  return p * p * (1.0 + X.norm()) * (1.0 + Y.norm()) * (1.0 + Z.norm());
}

JacobiSweep jacobi_sweep(const MapRep& psi, const Tolerances& tol, std::size_t keep_worst) {
  const Index n = psi.n();
  const auto units = matrix_units(n);
  const Index m = static_cast<Index>(units.size());

  // Cache psi(E) and [E, F]_psi; the sweep is otherwise O(n^6) brackets.
  std::vector<CMatrix> images;
  images.reserve(m);
  for (const CMatrix& E : units) images.push_back(psi.apply(E));
  auto bracket_units = [&](Index a, Index b) -> CMatrix {
    return units[a] * images[b] - units[b] * images[a];
  };
  auto bracket_with = [&](Index a, const CMatrix& W) -> CMatrix {
    return units[a] * psi.apply(W) - W * images[a];
  };

  JacobiSweep out;
  const double p = 1.0 + spectral_norm(psi);
  out.threshold = tol.residual * p * p * 8.0;
  std::vector<JacobiSweep::Triple> all;
  all.reserve(static_cast<std::size_t>(m * m * m));
  for (Index x = 0; x < m; ++x) {
    for (Index y = 0; y < m; ++y) {
      const CMatrix xy = bracket_units(x, y);
      for (Index z = 0; z < m; ++z) {
        const CMatrix cyclic = bracket_with(x, bracket_units(y, z)) +
                               bracket_with(y, bracket_units(z, x)) +
                               bracket_with(z, xy);
        all.push_back({x, y, z, cyclic.norm()});
      }
    }
  }
  const std::size_t keep = std::min(keep_worst, all.size());
  std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(keep), all.end(),
                    [](const auto& l, const auto& r) {
                      if (l.defect != r.defect) return l.defect > r.defect;
                      return std::tie(l.x, l.y, l.z) < std::tie(r.x, r.y, r.z);
                    });
  out.worst.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(keep));
  out.max_defect = all.empty() ? 0.0 : std::max_element(all.begin(), all.end(),
                                                        [](const auto& l, const auto& r) {
                                                          return l.defect < r.defect;
                                                        })->defect;
  return out;
}

Verdict commutant_condition(const CMatrix& A, const CMatrix& B, const Tolerances& tol) {
  require_square(A, "check_commutant_condition");
  require_same_size(A, B, "check_commutant_condition");
  const Index n = A.rows();
  Verdict v;
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const CMatrix AE = A * unit_matrix(n, i, j);
      v.residual = std::max(v.residual, (AE * B - B * AE).norm());
    }
  }
  v.threshold = tol.residual * (1.0 + A.norm()) * (1.0 + B.norm());
  v.holds = v.residual <= v.threshold;
  return v;
}

bool check_commutant_condition(const CMatrix& A, const CMatrix& B, const Tolerances& tol) {
  return commutant_condition(A, B, tol).holds;
}

Verdict s_hermitian(const CMatrix& S, const CMatrix& A, const Tolerances& tol) {
  require_square(S, "is_S_hermitian");
  require_same_size(S, A, "is_S_hermitian");
  Verdict v;
  v.residual = (S * A.adjoint() - A * S).norm();
  v.threshold = tol.residual * (1.0 + S.norm()) * (1.0 + A.norm());
  v.holds = v.residual <= v.threshold;
  return v;
}

bool is_S_hermitian(const CMatrix& S, const CMatrix& A, const Tolerances& tol) {
  return s_hermitian(S, A, tol).holds;
}

Verdict restriction_verdict(const CMatrix& S, const CMatrix& A, const SubalgebraBasis& basis,
                            const Tolerances& tol) {
  require_square(S, "restricts_to_subalgebra");
  require_same_size(S, A, "restricts_to_subalgebra");
  require_same_size(S, basis.S, "restricts_to_subalgebra");
  const double scale = tol.residual * (1.0 + S.norm()) * (1.0 + A.norm());
  Verdict v;
  v.threshold = 1.0;
  const Index d = basis.dim();
  for (Index i = 0; i < d; ++i) {
    for (Index j = i + 1; j < d; ++j) {
      const CMatrix& X = basis.basis[i];
      const CMatrix& Y = basis.basis[j];
      const CMatrix Z = X * A * Y - Y * A * X;
      const double res = (S * Z.adjoint() + Z * S).norm();
      const double thr = scale * (1.0 + X.norm()) * (1.0 + Y.norm());
      v.residual = std::max(v.residual, res / thr);
    }
  }
  v.holds = v.residual <= v.threshold;
  return v;
}

bool restricts_to_subalgebra(const CMatrix& S, const CMatrix& A, const SubalgebraBasis& basis,
                             const Tolerances& tol) {
  return restriction_verdict(S, A, basis, tol).holds;
}

CoincidenceReport bracket_coincidence_report(const MapRep& psi, const Tolerances& tol) {
  const Index n = psi.n();
  const auto units = matrix_units(n);
  std::vector<CMatrix> images;
  images.reserve(units.size());
  for (const CMatrix& E : units) images.push_back(psi.apply(E));

  CoincidenceReport rep;
  rep.psi_of_identity = psi.apply(identity(n));
  for (std::size_t a = 0; a < units.size(); ++a) {
    for (std::size_t b = a + 1; b < units.size(); ++b) {
      const CMatrix twisted = units[a] * images[b] - units[b] * images[a];
      const CMatrix canonical = units[a] * units[b] - units[b] * units[a];
      rep.max_deviation = std::max(rep.max_deviation, (twisted - canonical).norm());
    }
  }
  rep.threshold = tol.residual * (1.0 + spectral_norm(psi));
  rep.coincides = rep.max_deviation <= rep.threshold;
  return rep;
}

}  // namespace sunitary
