#include <gtest/gtest.h>

#include "hwv/specht.hpp"
#include "test_oracles.hpp"

using namespace hwv;
namespace ref = testing_oracles;

namespace {

std::vector<Permutation> all_perms(int t) {
  std::vector<Permutation> out;
  std::vector<int> p(t);
  std::iota(p.begin(), p.end(), 1);
  do {
    out.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::size_t standard_count(const SkewDiagram& e) { return enumerate_tableaux(e, Flavor::standard).size(); }

// rank of {e* g f : g ∈ Sym_t} with plain sparse group algebra products.
std::size_t naive_hom_rank(const SkewDiagram& e, const SkewDiagram& f) {
  auto se = young_symmetrizers(e);
  auto sf = young_symmetrizers(f);
  auto estar = (se.e1 * se.e2).star();
  auto ff = sf.e1 * sf.e2;
  std::vector<GroupAlgebraElement> fam;
  for (const auto& g : all_perms(e.size())) fam.push_back(estar * GroupAlgebraElement::basis(g) * ff);
  return group_algebra_rank(fam);
}

// dim Hom between skew Specht modules via their LR decompositions.
Integer lr_hom_dimension(const SkewDiagram& e, const SkewDiagram& f) {
  Integer total = 0;
  for (const auto& nu : partitions_of(e.size())) {
    total += ref::lr_coefficient(e.outer(), e.inner(), nu) * ref::lr_coefficient(f.outer(), f.inner(), nu);
  }
  return total;
}

}  // namespace

TEST(Permutation, GroupLaws) {
  auto perms = all_perms(4);
  for (const auto& a : perms) {
    EXPECT_EQ(a * a.inverse(), Permutation::identity(4));
    for (const auto& b : perms) {
      EXPECT_EQ((a * b).sign(), a.sign() * b.sign());
      EXPECT_EQ((a * b)(1), a(b(1)));
    }
  }
  EXPECT_THROW(Permutation({1, 1}), ConstraintError);
  EXPECT_EQ(Permutation::transposition(3, 1, 3).sign(), -1);
}

TEST(GroupAlgebra, StarIsAntiInvolution) {
  auto perms = all_perms(3);
  GroupAlgebraElement a(3), b(3);
  for (std::size_t k = 0; k < perms.size(); ++k) {
    a.add(perms[k], Rational(static_cast<long>(k) - 2));
    b.add(perms[k], Rational(static_cast<long>(k * k % 5) + 1) / 3);
  }
  EXPECT_EQ((a * b).star(), b.star() * a.star());
  EXPECT_EQ(a.star().star(), a);
}

TEST(GroupAlgebra, IndexedMultiplicationMatchesSparse) {
  for (int t = 2; t <= 4; ++t) {
    const auto& g = SymmetricGroup::of(t);
    auto s = young_symmetrizers(SkewDiagram(Partition{t - 1, 1}));
    auto expected = s.e1 * s.e2;
    EXPECT_EQ(g.to_element(g.multiply(g.from(s.e1), g.from(s.e2))), expected);
  }
}

TEST(Symmetrizers, RowAndColumn) {
  for (int t = 1; t <= 4; ++t) {
    GroupAlgebraElement sum(t), signed_sum(t);
    for (const auto& g : all_perms(t)) {
      sum.add(g, 1);
      signed_sum.add(g, g.sign());
    }
    auto row = young_symmetrizers(SkewDiagram(Partition{t}));
    EXPECT_EQ(row.e1, GroupAlgebraElement::basis(Permutation::identity(t)));
    EXPECT_EQ(row.e2, sum);
    auto col = young_symmetrizers(SkewDiagram(Partition(std::vector<int>(t, 1))));
    EXPECT_EQ(col.e2, GroupAlgebraElement::basis(Permutation::identity(t)));
    EXPECT_EQ(col.e1, signed_sum);
  }
}

TEST(Symmetrizers, StraightShapesAreQuasiIdempotent) {
  for (int t = 1; t <= 5; ++t) {
    for (const auto& lam : partitions_of(t)) {
      auto e = young_symmetrizer(SkewDiagram(lam));
      Rational c = Rational(ref::factorial(t)) / Rational(ref::hook_length_count(lam));
      EXPECT_EQ(e * e, e * c);
    }
  }
}

TEST(Symmetrizers, SkewSpanOfPowers) {
  // (3,2)/(1) is not quasi-idempotent; (2,2)/(1) turns out to be.
  auto e = young_symmetrizer(SkewDiagram(Partition{3, 2}, Partition{1}));
  EXPECT_EQ(group_algebra_rank({e, e * e}), 2u);
  auto e2 = young_symmetrizer(SkewDiagram(Partition{2, 2}, Partition{1}));
  EXPECT_EQ(group_algebra_rank({e2, e2 * e2}), 1u);
}

TEST(Symmetrizers, LeftIdealDimensionIsStandardCount) {
  for (int t = 1; t <= 5; ++t) {
    for (const auto& e : normalized_skew_diagrams(t)) {
      EXPECT_EQ(left_ideal_dimension(young_symmetrizer(e)), standard_count(e));
    }
  }
}

TEST(Tabloids, Polytabloids) {
  auto t = Tableau::from_rows({{1, 2}, {3}});
  TabloidVector expected{t.shape(), {}};
  expected.add(t, 1);
  expected.add(Tableau::from_rows({{3, 2}, {1}}), -1);
  EXPECT_EQ(polytabloid(t), expected);

  auto row = Tableau::from_rows({{2, 3, 1}});
  EXPECT_EQ(polytabloid(row), tabloid(row));

  auto col = Tableau::from_rows({{1}, {2}});
  auto col2 = Tableau::from_rows({{2}, {1}});
  EXPECT_EQ(polytabloid(col).terms.size(), 2u);
  EXPECT_EQ(tabloid_rank({polytabloid(col), polytabloid(col2)}), 1u);
}

TEST(Tabloids, ActionPermutesEntries) {
  auto t = Tableau::from_rows({{1, 2}, {3}});
  auto g = Permutation({3, 1, 2});
  EXPECT_EQ(act(g, t), Tableau::from_rows({{3, 1}, {2}}));
}

TEST(Tabloids, SpechtBasisRank) {
  EXPECT_EQ(specht_basis(SkewDiagram(Partition{2, 1})).size(), 2u);
  EXPECT_EQ(tabloid_rank(specht_basis(SkewDiagram(Partition{2, 1}))), 2u);
  EXPECT_EQ(specht_basis(SkewDiagram(Partition{2, 2}, Partition{1})).size(), 2u);
  EXPECT_EQ(specht_basis(SkewDiagram(Partition{1, 1, 1, 1})).size(), 1u);
  for (int t = 1; t <= 5; ++t) {
    for (const auto& e : normalized_skew_diagrams(t)) {
      auto basis = specht_basis(e);
      EXPECT_EQ(tabloid_rank(basis), basis.size());
      // All polytabloids of E span the same space.
      std::vector<TabloidVector> all = basis;
      for (const auto& tt : enumerate_tableaux(e, Flavor::ordered, std::nullopt, t)) {
        if (is_permutation_tableau(tt)) all.push_back(polytabloid(tt));
      }
      EXPECT_EQ(tabloid_rank(all), basis.size());
    }
    for (const auto& lam : partitions_of(t)) {
      EXPECT_EQ(Integer(static_cast<unsigned long>(specht_basis(SkewDiagram(lam)).size())),
                ref::hook_length_count(lam));
    }
  }
}

TEST(HomSpace, SmallExamples) {
  for (int t = 1; t <= 4; ++t) {
    for (const auto& lam : partitions_of(t)) {
      auto b = homspace_basis(SkewDiagram(lam), SkewDiagram(lam));
      ASSERT_EQ(b.size(), 1u);
      EXPECT_FALSE(b[0].is_zero());
    }
  }
  EXPECT_TRUE(homspace_basis(SkewDiagram(Partition{2}), SkewDiagram(Partition{1, 1})).empty());
  EXPECT_EQ(naive_hom_rank(SkewDiagram(Partition{2}), SkewDiagram(Partition{1, 1})), 0u);

  SkewDiagram e(Partition{2, 2}, Partition{1}), f(Partition{2, 1});
  auto b = homspace_basis(e, f);
  EXPECT_EQ(b.size(), naive_hom_rank(e, f));
  EXPECT_EQ(group_algebra_rank(b), b.size());
}

TEST(HomSpace, BasisMatchesRankAndLittlewoodRichardson) {
  for (int t = 1; t <= 4; ++t) {
    for (const auto& e : normalized_skew_diagrams(t)) {
      for (const auto& f : normalized_skew_diagrams(t)) {
        auto b = homspace_basis(e, f);
        auto dim = homspace_dimension(e, f);
        EXPECT_EQ(b.size(), dim);
        EXPECT_EQ(group_algebra_rank(b), dim);
        EXPECT_EQ(Integer(static_cast<unsigned long>(dim)), lr_hom_dimension(e, f));
        if (t <= 3) {
          EXPECT_EQ(naive_hom_rank(e, f), dim);
        }
      }
    }
  }
}

TEST(Coinvariants, BlocksAndBelongingTableau) {
  EXPECT_EQ(young_blocks({2, 0, 1}), (std::vector<std::vector<int>>{{1, 2}, {}, {3}}));
  auto p = Tableau::from_rows({{1, 1, 3}, {3}});
  EXPECT_EQ(belonging_tableau(p, {2, 0, 2}), Tableau::from_rows({{1, 2, 3}, {4}}));
}

TEST(Coinvariants, ExtremeCompositions) {
  for (int t = 1; t <= 4; ++t) {
    for (const auto& e : partitions_of(t)) {
      for (const auto& f : partitions_of(t)) {
        EXPECT_EQ(coinvariants_basis(e, f, {t}).size(), enumerate_admissible(SkewDiagram(f), SkewDiagram(e)).size());
        EXPECT_EQ(coinvariants_basis(e, f, std::vector<int>(t, 1)).size(),
                  standard_count(SkewDiagram(e)) * standard_count(SkewDiagram(f)));
      }
    }
  }
}

TEST(Coinvariants, QuotientDimensionAndBasis) {
  auto c = check_coinvariants(Partition{2, 1}, Partition{2, 1}, {2, 1});
  EXPECT_EQ(c.candidates, c.quotient_dimension);
  EXPECT_EQ(c.candidate_rank, c.quotient_dimension);
  EXPECT_EQ(c.ambient_dimension, 4u);
  for (int t = 1; t <= 4; ++t) {
    for (const auto& e : partitions_of(t)) {
      for (const auto& f : partitions_of(t)) {
        for (const auto& nu : compositions(t)) {
          auto r = check_coinvariants(e, f, nu);
          EXPECT_EQ(r.candidates, r.quotient_dimension);
          EXPECT_EQ(r.candidate_rank, r.quotient_dimension);
        }
      }
    }
  }
}
