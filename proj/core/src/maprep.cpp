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

#include "sunitary/maprep.hpp"

#include <cmath>
#include <utility>

namespace sunitary {

namespace {

Index size_from_superop(const CMatrix& L) {
  const Index m = L.rows();
  const Index n = static_cast<Index>(std::llround(std::sqrt(static_cast<double>(m))));
  if (m == 0 || L.cols() != m || n * n != m) {
    throw DimensionError("superoperator must be n^2 x n^2 for some n >= 1");
  }
  return n;
}

Index size_from_pairs(const std::vector<KrausPair>& pairs) {
  if (pairs.empty()) {
    throw DimensionError("pair representation must contain at least one pair");
  }
  const Index n = pairs.front().left.rows();
  for (const KrausPair& p : pairs) {
    require_square(p.left, "pair representation");
    require_square(p.right, "pair representation");
    if (p.left.rows() != n || p.right.rows() != n) {
      throw DimensionError("pair representation: all operators must share one size");
    }
  }
  return n;
}

CMatrix superop_from_pairs(const std::vector<KrausPair>& pairs, Index n) {
  // vec(A X B^*) = (conj(B) (x) A) vec(X)
  CMatrix L = CMatrix::Zero(n * n, n * n);
  for (const KrausPair& p : pairs) {
    L += kron(p.right.conjugate(), p.left);
  }
  return L;
}

}  // namespace

MapRep MapRep::from_superoperator(CMatrix superop) {
  MapRep m;
  m.n_ = size_from_superop(superop);
  m.superop_ = std::move(superop);
  return m;
}

MapRep MapRep::from_kraus_pairs(std::vector<KrausPair> pairs) {
  MapRep m;
  m.n_ = size_from_pairs(pairs);
  m.pairs_ = std::move(pairs);
  return m;
}

MapRep MapRep::from_both(CMatrix superop, std::vector<KrausPair> pairs, const Tolerances& tol) {
  const Index n = size_from_superop(superop);
  if (size_from_pairs(pairs) != n) {
    throw DimensionError("superoperator and pairs describe maps of different sizes");
  }
  const CMatrix from_pairs = superop_from_pairs(pairs, n);
  // Column (i + j n) of each superoperator is vec(psi(E_ij)).
  for (Index k = 0; k < n * n; ++k) {
    const double diff = (from_pairs.col(k) - superop.col(k)).norm();
    if (diff > tol.residual * (1.0 + superop.col(k).norm())) {
      throw InconsistentInputError("superoperator and pairs disagree on a matrix unit");
    }
  }
  MapRep m;
  m.n_ = n;
  m.superop_ = std::move(superop);
  m.pairs_ = std::move(pairs);
  return m;
}

MapRep MapRep::identity(Index n) { return single_pair(sunitary::identity(n), sunitary::identity(n)); }

MapRep MapRep::left_multiplication(const CMatrix& A) {
  require_square(A, "left_multiplication");
  return single_pair(A, sunitary::identity(A.rows()));
}

MapRep MapRep::right_multiplication(const CMatrix& B) {
  require_square(B, "right_multiplication");
  return single_pair(sunitary::identity(B.rows()), B.adjoint());
}

MapRep MapRep::single_pair(const CMatrix& A, const CMatrix& B) {
  return from_kraus_pairs({KrausPair{A, B}});
}

CMatrix MapRep::apply(const CMatrix& X) const {
  if (X.rows() != n_ || X.cols() != n_) {
    throw DimensionError("MapRep::apply: argument size does not match the map");
  }
  if (pairs_) {
    CMatrix Y = CMatrix::Zero(n_, n_);
    for (const KrausPair& p : *pairs_) {
      Y.noalias() += p.left * X * p.right.adjoint();
    }
    return Y;
  }
  return unvec(*superop_ * vec(X), n_);
}

CMatrix MapRep::superoperator() const {
  if (superop_) return *superop_;
  return superop_from_pairs(*pairs_, n_);
}

std::vector<KrausPair> MapRep::kraus_pairs(const Tolerances& tol) const {
  if (pairs_) return *pairs_;
  auto dec = decompose_choi(superoperator_to_choi(*superop_), tol);
  if (dec.pairs.empty()) {
    // Zero map: keep a single zero pair so the list stays non-empty.
    dec.pairs.push_back({CMatrix::Zero(n_, n_), CMatrix::Zero(n_, n_)});
  }
  return dec.pairs;
}

CMatrix superoperator_to_choi(const CMatrix& superop) {
  const Index n = size_from_superop(superop);
  CMatrix J(n * n, n * n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
          J(i * n + a, j * n + b) = superop(a + b * n, i + j * n);
  return J;
}

CMatrix choi_to_superoperator(const CMatrix& choi) {
  const Index n = size_from_superop(choi);
  CMatrix L(n * n, n * n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
          L(a + b * n, i + j * n) = choi(i * n + a, j * n + b);
  return L;
}

PairDecomposition decompose_choi(const CMatrix& choi, const Tolerances& tol) {
  const Index n = size_from_superop(choi);
  const SvdResult dec = svd(choi);
  const Index r = numerical_rank(dec.singular_values, choi.rows(), choi.cols(), tol);

  PairDecomposition out;
  out.singular_values = dec.singular_values;
  for (Index k = 0; k < r; ++k) {
    const double w = std::sqrt(dec.singular_values(k));
    // The same unit phase on u_k and v_k leaves u_k v_k^* unchanged; fix it
    // so the output is deterministic.
    const Complex rot = normalizing_phase(unvec(dec.U.col(k), n));
    out.pairs.push_back(KrausPair{w * rot * unvec(dec.U.col(k), n),
                                  w * rot * unvec(dec.V.col(k), n)});
  }
  const double total = dec.singular_values.sum();
  if (total > 0.0) {
    out.discarded_mass = dec.singular_values.tail(dec.singular_values.size() - r).sum() / total;
  }
  return out;
}

}  // namespace sunitary
