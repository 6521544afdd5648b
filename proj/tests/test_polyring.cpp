#include <gtest/gtest.h>

#include "hwv/polyring.hpp"

using namespace hwv;

namespace {

Polynomial var(const RingDims& d, int l, int i, int j) { return Polynomial::variable(d, {l, i, j}); }

// Plain matrix with E_{a,b} entry c added to the identity (0-based a, b).
Matrix elementary(int n, int a, int b, const Rational& c) {
  Matrix u = Matrix::identity(n);
  u(a, b) += c;
  return u;
}

// A small mixed-degree polynomial on (m, r, s) = (2, 2, 3).
Polynomial sample_poly() {
  RingDims d{2, 2, 3};
  return var(d, 1, 1, 1) * var(d, 2, 2, 3) * Rational(3) - var(d, 1, 2, 2) * var(d, 1, 2, 2) +
         var(d, 2, 1, 2) * Rational(1, 2) + Polynomial::constant(d, 7);
}

}  // namespace

TEST(Variables, IndexRoundTrip) {
  RingDims d{3, 2, 4};
  for (int k = 0; k < d.num_vars(); ++k) EXPECT_EQ(var_index(d, var_id(d, k)), k);
  EXPECT_THROW(var_index(d, {4, 1, 1}), ConstraintError);
}

TEST(Evaluate, Basics) {
  RingDims d{1, 1, 1};
  MatrixTuple pt{{Matrix(1, 1)}};
  pt.mats[0](0, 0) = 5;
  EXPECT_EQ(evaluate(var(d, 1, 1, 1), pt), 5);
  EXPECT_EQ(evaluate(Polynomial::constant(d, 1), pt), 1);
  RingDims d2{1, 2, 2};
  EXPECT_THROW(evaluate(var(d2, 1, 1, 1), pt), ConstraintError);
}

TEST(Evaluate, ArithmeticIsCompatible) {
  auto p = sample_poly();
  auto q = p * p - p * Rational(2);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto pt = random_point(p.dims(), seed);
    Rational v = evaluate(p, pt);
    EXPECT_EQ(evaluate(q, pt), v * v - 2 * v);
  }
}

TEST(Gradings, SingleVariables) {
  const int r = 3, s = 2;
  RingDims d{2, r, s};
  auto w = torus_weight(var(d, 1, r, 1));
  EXPECT_EQ(w.row, (std::vector<int>{0, 0, -1}));
  EXPECT_EQ(w.col, (std::vector<int>{1, 0}));
  EXPECT_EQ(multidegree(var(d, 1, r, 1)), (std::vector<int>{1, 0}));
  auto p = var(d, 2, r, 1) * var(d, 1, r, 1);
  EXPECT_EQ(multidegree(p), (std::vector<int>{1, 1}));
  EXPECT_EQ(weighted_degree(multidegree(p)), 3);
}

TEST(Gradings, NonHomogeneousIsRejected) {
  RingDims d{2, 2, 2};
  auto p = var(d, 1, 1, 1) + var(d, 2, 1, 1);
  try {
    multidegree(p);
    FAIL() << "expected an exception";
  } catch (const ConstraintError& e) {
    std::string msg = e.what();
    EXPECT_NE(msg.find("x(1)_{1,1}"), std::string::npos) << msg;
    EXPECT_NE(msg.find("x(2)_{1,1}"), std::string::npos) << msg;
  }
  EXPECT_THROW(torus_weight(var(d, 1, 1, 1) + var(d, 1, 2, 1)), ConstraintError);
}

TEST(Gradings, ConjugationWeight) {
  RingDims d{1, 3, 3};
  EXPECT_EQ(conjugation_weight(var(d, 1, 3, 1)), (std::vector<int>{1, 0, -1}));
  EXPECT_EQ(conjugation_weight(var(d, 1, 2, 2)), (std::vector<int>{0, 0, 0}));
}

TEST(Generators, MatchMatrixAction) {
  auto p = sample_poly();
  const RingDims d = p.dims();
  for (const auto& g : unipotent_generators(d, Action::LeftRight)) {
    for (int c : {1, -2, 3}) {
      auto gp = apply_generator(p, g, c);
      for (std::uint64_t seed = 0; seed < 3; ++seed) {
        auto pt = random_point(d, seed);
        MatrixTuple moved;
        for (const auto& a : pt.mats) {
          if (g.kind == Generator::Kind::Row) {
            moved.mats.push_back(elementary(d.rows, g.index - 1, g.index, c) * a);
          } else {
            moved.mats.push_back(a * elementary(d.cols, g.index - 1, g.index, c));
          }
        }
        EXPECT_EQ(evaluate(gp, pt), evaluate(p, moved));
      }
    }
  }
}

TEST(Generators, ConjugationMatchesMatrixAction) {
  RingDims d{2, 3, 3};
  auto p = var(d, 1, 1, 2) * var(d, 2, 3, 1) + var(d, 1, 2, 3) * var(d, 1, 2, 3) - var(d, 2, 2, 2);
  for (const auto& g : unipotent_generators(d, Action::Conjugation)) {
    for (int c : {1, 2, -3}) {
      auto gp = apply_generator(p, g, c);
      auto pt = random_point(d, 11);
      MatrixTuple moved;
      for (const auto& a : pt.mats) {
        moved.mats.push_back(elementary(3, g.index - 1, g.index, c) * a * elementary(3, g.index - 1, g.index, -c));
      }
      EXPECT_EQ(evaluate(gp, pt), evaluate(p, moved));
    }
  }
}

TEST(Invariance, ElementaryCases) {
  RingDims d{1, 2, 2};
  EXPECT_TRUE(unipotent_invariance_proof(Polynomial::constant(d, 3)).invariant);
  EXPECT_TRUE(unipotent_invariance_proof(var(d, 1, 2, 1)).invariant);
  auto bad = unipotent_invariance_proof(var(d, 1, 1, 1));
  EXPECT_FALSE(bad.invariant);
  ASSERT_TRUE(bad.generator.has_value());
  EXPECT_EQ(bad.generator->kind, Generator::Kind::Row);
  ASSERT_TRUE(bad.point.has_value());
  auto det = var(d, 1, 1, 1) * var(d, 1, 2, 2) - var(d, 1, 1, 2) * var(d, 1, 2, 1);
  EXPECT_TRUE(unipotent_invariance_proof(det).invariant);
  EXPECT_FALSE(unipotent_invariance_proof(var(d, 1, 2, 2)).invariant);
}

TEST(Invariance, ConjugationCorner) {
  RingDims d{1, 3, 3};
  EXPECT_TRUE(unipotent_invariance_proof(var(d, 1, 3, 1), Action::Conjugation).invariant);
  EXPECT_FALSE(unipotent_invariance_proof(var(d, 1, 1, 1), Action::Conjugation).invariant);
  auto trace = var(d, 1, 1, 1) + var(d, 1, 2, 2) + var(d, 1, 3, 3);
  EXPECT_TRUE(unipotent_invariance_proof(trace, Action::Conjugation).invariant);
}

TEST(Substitute, AgreesWithEvaluation) {
  auto p = sample_poly();
  RingDims target{1, 2, 2};
  std::vector<Polynomial> images;
  for (int k = 0; k < p.dims().num_vars(); ++k) {
    auto v = var_id(p.dims(), k);
    images.push_back(var(target, 1, 1 + (v.i + v.l) % 2, 1 + v.j % 2) + Polynomial::constant(target, v.l));
  }
  auto q = substitute(p, images, target);
  auto pt = random_point(target, 3);
  MatrixTuple inner{{Matrix(2, 3), Matrix(2, 3)}};
  for (int k = 0; k < p.dims().num_vars(); ++k) {
    auto v = var_id(p.dims(), k);
    inner.mats[v.l - 1](v.i - 1, v.j - 1) = evaluate(images[k], pt);
  }
  EXPECT_EQ(evaluate(q, pt), evaluate(p, inner));
}

TEST(Format, Monomial) {
  RingDims d{2, 2, 2};
  Monomial m = {var_index(d, {1, 1, 2}), var_index(d, {1, 1, 2}), var_index(d, {2, 2, 1})};
  EXPECT_EQ(format_monomial(d, m), "x(1)_{1,2}^2*x(2)_{2,1}");
  EXPECT_EQ(format_monomial(d, {}), "1");
}
