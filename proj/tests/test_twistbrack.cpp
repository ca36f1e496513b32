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

#include <gtest/gtest.h>

#include <cmath>

#include "sunitary/twistbrack.hpp"
#include "support/test_support.hpp"

namespace sunitary {
namespace {

using testing::Rng;
using testing::random_matrix;
using testing::unit;

const Complex kI(0.0, 1.0);

CMatrix diag2(Complex a, Complex b) {
  CMatrix D = CMatrix::Zero(2, 2);
  D(0, 0) = a;
  D(1, 1) = b;
  return D;
}

// Independent evaluation of the cyclic Jacobi sum for psi(X) = A X B^*.
double oracle_jacobi(const CMatrix& A, const CMatrix& B, const CMatrix& X, const CMatrix& Y,
                     const CMatrix& Z) {
  auto psi = [&](const CMatrix& W) -> CMatrix { return A * W * B.adjoint(); };
  auto br = [&](const CMatrix& U, const CMatrix& W) -> CMatrix {
    return U * psi(W) - W * psi(U);
  };
  return (br(X, br(Y, Z)) + br(Y, br(Z, X)) + br(Z, br(X, Y))).norm();
}

TEST(MapRep, ApplyExamples) {
  Rng rng(51);
  const CMatrix X = random_matrix(rng, 3);
  const CMatrix A = random_matrix(rng, 3);
  EXPECT_LT((sunitary::apply(MapRep::identity(3), X) - X).norm(), 1e-14);
  EXPECT_LT((sunitary::apply(MapRep::single_pair(A, identity(3)), X) - A * X).norm(), 1e-13);

  // {(P0, P0), (P1, P1)} keeps the diagonal.
  const CMatrix P0 = diag2(1.0, 0.0), P1 = diag2(0.0, 1.0);
  const MapRep pinch = MapRep::from_kraus_pairs({{P0, P0}, {P1, P1}});
  CMatrix Y(2, 2);
  Y << Complex(1, 2), Complex(3, 4), Complex(5, 6), Complex(7, 8);
  EXPECT_TRUE(sunitary::apply(pinch, Y) == diag2(Y(0, 0), Y(1, 1)));
}

TEST(MapRep, FormsAgree) {
  Rng rng(52);
  for (Index n : {1, 2, 3}) {
    std::vector<KrausPair> pairs;
    for (int k = 0; k < 3; ++k) pairs.push_back({random_matrix(rng, n), random_matrix(rng, n)});
    const MapRep from_pairs = MapRep::from_kraus_pairs(pairs);
    const MapRep from_superop = MapRep::from_superoperator(from_pairs.superoperator());
    const MapRep both = MapRep::from_both(from_pairs.superoperator(), pairs);
    for (Index c = 0; c < n; ++c) {
      for (Index r = 0; r < n; ++r) {
        const CMatrix E = unit(n, r, c);
        EXPECT_LT((from_pairs.apply(E) - from_superop.apply(E)).norm(), 1e-12);
        EXPECT_LT((both.apply(E) - from_superop.apply(E)).norm(), 1e-12);
      }
    }
    // Decomposing the superoperator back into pairs reproduces the map.
    const MapRep again = MapRep::from_kraus_pairs(from_superop.kraus_pairs());
    EXPECT_LT((again.superoperator() - from_superop.superoperator()).norm(), 1e-10);
  }
}

TEST(MapRep, RejectsInvalidInput) {
  EXPECT_THROW(MapRep::from_kraus_pairs({}), DimensionError);
  EXPECT_THROW(MapRep::from_superoperator(CMatrix::Identity(3, 3)), DimensionError);
  EXPECT_THROW(MapRep::from_kraus_pairs({{identity(2), identity(3)}}), DimensionError);
  EXPECT_THROW(MapRep::from_both(CMatrix::Identity(4, 4), {{2.0 * identity(2), identity(2)}}),
               InconsistentInputError);
  EXPECT_THROW(MapRep::identity(2).apply(identity(3)), DimensionError);
}

TEST(MapRep, ReshuffleIsAnInvolutionPair) {
  Rng rng(53);
  const CMatrix L = random_matrix(rng, 9);
  EXPECT_TRUE(choi_to_superoperator(superoperator_to_choi(L)) == L);
}

TEST(TwistedBracket, Examples) {
  Rng rng(54);
  const CMatrix X = random_matrix(rng, 3);
  const CMatrix Y = random_matrix(rng, 3);
  EXPECT_LT((twisted_bracket(MapRep::identity(3), X, Y) - commutator(X, Y)).norm(), 1e-13);

  const MapRep psi = MapRep::from_superoperator(random_matrix(rng, 9));
  EXPECT_TRUE(twisted_bracket(psi, X, X) == CMatrix::Zero(3, 3));

  const MapRep left_e11 = MapRep::left_multiplication(unit(2, 0, 0));
  EXPECT_TRUE(twisted_bracket(left_e11, unit(2, 0, 1), unit(2, 1, 0)) == -unit(2, 1, 1));
}

TEST(TwistedBracket, IsSkewSymmetric) {
  Rng rng(55);
  for (int trial = 0; trial < 20; ++trial) {
    const MapRep psi = MapRep::from_superoperator(random_matrix(rng, 9));
    const CMatrix X = random_matrix(rng, 3);
    const CMatrix Y = random_matrix(rng, 3);
    EXPECT_TRUE(twisted_bracket(psi, X, Y) + twisted_bracket(psi, Y, X) == CMatrix::Zero(3, 3));
  }
}

TEST(Jacobi, LeftMultiplicationSatisfiesJacobi) {
  Rng rng(56);
  for (Index n : {2, 3, 4}) {
    for (int trial = 0; trial < 100; ++trial) {
      const CMatrix A = random_matrix(rng, n);
      const CMatrix X = random_matrix(rng, n), Y = random_matrix(rng, n),
                    Z = random_matrix(rng, n);
      const double scale = std::pow(1.0 + A.norm(), 2) * (1.0 + X.norm()) * (1.0 + Y.norm()) *
                           (1.0 + Z.norm());
      EXPECT_LT(jacobi_defect(MapRep::left_multiplication(A), X, Y, Z), 1e-10 * scale);
    }
  }
}

TEST(Jacobi, IdentityMapSatisfiesJacobi) {
  Rng rng(57);
  const CMatrix X = random_matrix(rng, 3), Y = random_matrix(rng, 3), Z = random_matrix(rng, 3);
  EXPECT_LT(jacobi_defect(MapRep::identity(3), X, Y, Z), 1e-12);
  EXPECT_TRUE(jacobi_sweep(MapRep::identity(3)).satisfies_jacobi());
}

TEST(Jacobi, RightMultiplicationCounterexample) {
  const MapRep psi = MapRep::right_multiplication(diag2(1.0, 2.0));
  const JacobiSweep sweep = jacobi_sweep(psi, {}, 3);
  // Frozen from an exhaustive numpy sweep: sqrt(5) at (E11, E21, E12).
  EXPECT_NEAR(sweep.max_defect, std::sqrt(5.0), 1e-12);
  EXPECT_FALSE(sweep.satisfies_jacobi());
  ASSERT_FALSE(sweep.worst.empty());
  const auto& t = sweep.worst.front();
  EXPECT_NEAR(t.defect, std::sqrt(5.0), 1e-12);
  const auto E = [](Index k) { return unit(2, k % 2, k / 2); };
  EXPECT_NEAR(jacobi_defect(psi, E(t.x), E(t.y), E(t.z)), std::sqrt(5.0), 1e-12);
  EXPECT_NEAR(oracle_jacobi(identity(2), diag2(1.0, 2.0), unit(2, 0, 0), unit(2, 1, 0),
                            unit(2, 0, 1)),
              std::sqrt(5.0), 1e-12);
}

TEST(Jacobi, SweepMatchesOracleOnRandomPairs) {
  Rng rng(58);
  for (int trial = 0; trial < 5; ++trial) {
    const CMatrix A = random_matrix(rng, 2), B = random_matrix(rng, 2);
    const MapRep psi = MapRep::single_pair(A, B);
    double worst = 0.0;
    for (Index x = 0; x < 4; ++x)
      for (Index y = 0; y < 4; ++y)
        for (Index z = 0; z < 4; ++z)
          worst = std::max(worst, oracle_jacobi(A, B, unit(2, x % 2, x / 2),
                                                unit(2, y % 2, y / 2), unit(2, z % 2, z / 2)));
    EXPECT_NEAR(jacobi_sweep(psi).max_defect, worst, 1e-12 * (1.0 + worst));
  }
}

TEST(Commutant, Examples) {
  Rng rng(59);
  const CMatrix A = random_matrix(rng, 3);
  const CMatrix B = random_matrix(rng, 3);
  EXPECT_TRUE(check_commutant_condition(A, Complex(2.0, 1.0) * identity(3)));
  EXPECT_TRUE(check_commutant_condition(CMatrix::Zero(3, 3), B));
  EXPECT_FALSE(check_commutant_condition(testing::random_invertible(rng, 3), B));
}

TEST(Commutant, SufficientForJacobi) {
  Rng rng(60);
  for (Index n : {2, 3}) {
    for (int trial = 0; trial < 30; ++trial) {
      // Two families meeting the hypothesis: scalar B, and A = 0.
      const CMatrix A = (trial % 2) ? random_matrix(rng, n) : CMatrix(CMatrix::Zero(n, n));
      const CMatrix B = (trial % 2) ? CMatrix(Complex(0.5, -1.5) * identity(n))
                                    : random_matrix(rng, n);
      ASSERT_TRUE(check_commutant_condition(A, B));
      const MapRep psi = MapRep::single_pair(A, B.adjoint());  // psi(X) = A X B
      for (int k = 0; k < 5; ++k) {
        const CMatrix X = random_matrix(rng, n), Y = random_matrix(rng, n),
                      Z = random_matrix(rng, n);
        const double scale = std::pow(1.0 + A.norm() * B.norm(), 2) * (1.0 + X.norm()) *
                             (1.0 + Y.norm()) * (1.0 + Z.norm());
        EXPECT_LT(jacobi_defect(psi, X, Y, Z), 1e-10 * scale);
      }
    }
  }
}

TEST(SHermitian, Examples) {
  Rng rng(61);
  EXPECT_TRUE(is_S_hermitian(identity(3), testing::random_hermitian(rng, 3)));
  EXPECT_FALSE(is_S_hermitian(identity(3), kI * identity(3)));
}

TEST(SHermitian, SolutionSetFromOracle) {
  Rng rng(62);
  for (Index n : {2, 3}) {
    const CMatrix S = testing::random_invertible(rng, n);
    const auto span = testing::entrywise_kernel(S, 1);
    ASSERT_FALSE(span.empty());
    for (int k = 0; k < 10; ++k) {
      const CMatrix A = testing::random_combination(rng, span, n);
      EXPECT_TRUE(is_S_hermitian(S, A));
    }
    EXPECT_FALSE(is_S_hermitian(S, random_matrix(rng, n)));
  }
}

TEST(Restricts, Examples) {
  Rng rng(63);
  const CMatrix S = random_matrix(rng, 3);
  EXPECT_TRUE(restricts_to_subalgebra(S, identity(3), compute_basis(S)));

  const SubalgebraBasis skew = compute_basis(identity(3));
  EXPECT_TRUE(restricts_to_subalgebra(identity(3), testing::random_hermitian(rng, 3), skew));
  EXPECT_FALSE(restricts_to_subalgebra(identity(3), kI * identity(3), skew));
}

TEST(Restricts, ITimesIdentityWitnessHasHermitianPart) {
  // psi(X) = iX on skew-Hermitian X, Y: [X, Y]_psi = i[X, Y] is Hermitian.
  const SubalgebraBasis skew = compute_basis(identity(2));
  bool found = false;
  for (const CMatrix& X : skew.basis) {
    for (const CMatrix& Y : skew.basis) {
      const CMatrix Z = X * (kI * Y) - Y * (kI * X);
      if ((Z + Z.adjoint()).norm() > 0.1) found = true;
    }
  }
  EXPECT_TRUE(found);
}

TEST(Restricts, EquivalentToSHermitian) {
  Rng rng(64);
  int disagreements = 0, hermitian_cases = 0;
  for (Index n : {2, 3}) {
    for (int s = 0; s < 10; ++s) {
      const CMatrix S = testing::random_invertible(rng, n);
      const SubalgebraBasis b = compute_basis(S);
      const auto span = testing::entrywise_kernel(S, 1);
      for (int a = 0; a < 10; ++a) {
        const CMatrix A = (a % 2) ? random_matrix(rng, n) : testing::random_combination(rng, span, n);
        const bool lhs = restricts_to_subalgebra(S, A, b);
        const bool rhs = is_S_hermitian(S, A);
        hermitian_cases += rhs ? 1 : 0;
        disagreements += lhs != rhs ? 1 : 0;
      }
    }
  }
  EXPECT_EQ(disagreements, 0);
  EXPECT_GT(hermitian_cases, 0);
}

TEST(Coincidence, Examples) {
  const CoincidenceReport id = bracket_coincidence_report(MapRep::identity(3));
  EXPECT_TRUE(id.coincides);
  EXPECT_LT((id.psi_of_identity - identity(3)).norm(), 1e-15);

  const CoincidenceReport twice = bracket_coincidence_report(MapRep::single_pair(2.0 * identity(2), identity(2)));
  EXPECT_FALSE(twice.coincides);
  EXPECT_LT((twice.psi_of_identity - 2.0 * identity(2)).norm(), 1e-15);
}

TEST(Coincidence, ConjugationPairsCoincideOnlyForScalars) {
  // psi = (A, A^{-*}) is X -> A X A^{-1}. [I, Y]_psi = A Y A^{-1} - Y, so
  // the bracket matches the commutator only when A is scalar.
  Rng rng(65);
  for (Index n : {2, 3}) {
    const CMatrix A = testing::random_invertible(rng, n);
    const CMatrix Ainv_star = A.inverse().adjoint();
    const auto rep = bracket_coincidence_report(MapRep::single_pair(A, Ainv_star));
    EXPECT_FALSE(rep.coincides);

    const Complex lambda(0.7, -1.3);
    // B = conj(1/lambda) I gives B^* = I / lambda, so psi is the identity map.
    const auto scalar = bracket_coincidence_report(
        MapRep::single_pair(lambda * identity(n), std::conj(1.0 / lambda) * identity(n)));
    EXPECT_TRUE(scalar.coincides);
  }
}

TEST(Coincidence, ForcesInverseRelation) {
  Rng rng(66);
  for (Index n : {2, 3}) {
    for (int trial = 0; trial < 20; ++trial) {
      CMatrix A, B;
      if (trial % 2) {
        A = random_matrix(rng, n);
        B = random_matrix(rng, n);
      } else {
        const Complex lambda(std::normal_distribution<double>()(rng), 1.0);
        A = lambda * identity(n);
        B = std::conj(1.0 / lambda) * identity(n);
      }
      const auto rep = bracket_coincidence_report(MapRep::single_pair(A, B));
      if (rep.coincides) {
        EXPECT_LT((B.adjoint() * A - identity(n)).norm(), 1e-8);
      }
      EXPECT_EQ(rep.coincides, trial % 2 == 0);
    }
  }
}

}  // namespace
}  // namespace sunitary
