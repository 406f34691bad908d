#include <gtest/gtest.h>

#include "mstanley/primary.hpp"
#include "support.hpp"

using namespace mstanley;
using namespace testing_support;

TEST(Monomial, Divides) {
  EXPECT_TRUE(divides(mon({1, 0}), mon({1, 2})));
  EXPECT_FALSE(divides(mon({2, 0}), mon({1, 2})));
  EXPECT_TRUE(divides(Monomial::one(2), mon({3, 1})));
  EXPECT_THROW(divides(mon({1}), mon({1, 0})), InvalidArgument);
}

TEST(Monomial, Arithmetic) {
  EXPECT_EQ(lcm(mon({2, 0, 1}), mon({1, 3, 0})), mon({2, 3, 1}));
  EXPECT_EQ(gcd(mon({2, 0, 1}), mon({1, 3, 1})), mon({1, 0, 1}));
  EXPECT_EQ(mon({1, 2}) * mon({3, 0}), mon({4, 2}));
  EXPECT_EQ(quotient(mon({4, 2}), mon({3, 0})), mon({1, 2}));
  EXPECT_EQ(squarefree_part(mon({3, 0, 2})), mon({1, 0, 1}));
  EXPECT_EQ(restrict_to(mon({3, 1, 2}), VarSet(0b101)), mon({3, 0, 2}));
  EXPECT_EQ(mon({0, 2, 1}).support(), VarSet(0b110));
  EXPECT_EQ(mon({0, 2, 1}).degree(), 3u);
}

TEST(Monomial, ExponentOverflowThrows) {
  const auto big = std::numeric_limits<Exponent>::max();
  EXPECT_THROW(mon({big}) * mon({1}), Error);
}

TEST(Monomial, Printing) {
  EXPECT_EQ(to_string(mon({2, 0, 1})), "x1^2*x3");
  EXPECT_EQ(to_string(Monomial::one(3)), "1");
  EXPECT_EQ(to_string(VarSet(0b101)), "{x1,x3}");
}

TEST(RingContext, Bounds) {
  EXPECT_THROW(RingContext(0), InvalidArgument);
  EXPECT_THROW(RingContext(65), InvalidArgument);
  EXPECT_EQ(RingContext(3).variable_name(2), "x3");
}

TEST(Ideal, Contains) {
  const auto I = ideal(2, {{2, 0}, {0, 1}});
  EXPECT_TRUE(I.contains(mon({2, 1})));
  EXPECT_FALSE(I.contains(mon({1, 0})));
  EXPECT_FALSE(MonomialIdeal(RingContext(2)).contains(mon({5, 5})));
}

TEST(Ideal, Minimalize) {
  EXPECT_EQ(ideal(2, {{1, 0}, {2, 0}, {1, 1}}).gens().size(), 1u);
  EXPECT_EQ(ideal(2, {{1, 0}, {2, 0}, {1, 1}}), ideal(2, {{1, 0}}));
  EXPECT_EQ(ideal(3, {{1, 1, 0}, {0, 1, 1}}).num_gens(), 2u);
  EXPECT_TRUE(minimalize(RingContext(2), {}).is_zero());
}

TEST(Ideal, MinimalizeIsCanonical) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto I = random_ideal(rng, 3, 3, 6);
    std::vector<Monomial> gens(I.gens().begin(), I.gens().end());
    gens.insert(gens.end(), I.gens().begin(), I.gens().end());
    std::shuffle(gens.begin(), gens.end(), rng);
    const MonomialIdeal again(I.ring(), gens);
    EXPECT_EQ(again, I);
    EXPECT_TRUE(std::is_sorted(again.gens().begin(), again.gens().end()));
    EXPECT_EQ(MonomialIdeal(I.ring(), {again.gens().begin(), again.gens().end()}), again);
  }
}

TEST(Ideal, Examples) {
  EXPECT_EQ(intersect(ideal(2, {{1, 0}}), ideal(2, {{0, 1}})), ideal(2, {{1, 1}}));
  EXPECT_EQ(intersect(ideal(3, {{2, 0, 0}, {0, 1, 0}}), ideal(3, {{0, 0, 1}})),
            ideal(3, {{2, 0, 1}, {0, 1, 1}}));
  EXPECT_EQ(sum(ideal(2, {{1, 0}}), ideal(2, {{0, 1}})), ideal(2, {{1, 0}, {0, 1}}));
  EXPECT_EQ(sum(ideal(1, {{2}}), ideal(1, {{1}})), ideal(1, {{1}}));
  EXPECT_EQ(colon(ideal(1, {{2}}), mon({1})), ideal(1, {{1}}));
  EXPECT_EQ(colon(ideal(3, {{1, 1, 0}, {0, 0, 1}}), mon({0, 1, 0})),
            ideal(3, {{1, 0, 0}, {0, 0, 1}}));
  EXPECT_EQ(colon(ideal(2, {{1, 0}}), mon({0, 1})), ideal(2, {{1, 0}}));
  EXPECT_EQ(radical(ideal(2, {{2, 0}, {0, 3}})), ideal(2, {{1, 0}, {0, 1}}));
  EXPECT_EQ(radical(ideal(2, {{2, 1}})), ideal(2, {{1, 1}}));
}

TEST(Ideal, Contract) {
  const auto a = contract(ideal(4, {{0, 1, 0, 0}, {0, 0, 0, 2}}), VarSet(0b0011));
  EXPECT_EQ(a.ideal, ideal(4, {{0, 1, 0, 0}}));
  EXPECT_EQ(a.vars, VarSet(0b0011));
  EXPECT_TRUE(contract(ideal(2, {{1, 1}}), VarSet(0b01)).ideal.is_zero());
  const auto q = ideal(2, {{2, 0}, {1, 1}, {0, 2}});
  EXPECT_EQ(contract(q, VarSet(0b11)).ideal, q);
}

// Every operation agrees with membership tested monomial by monomial.
TEST(Ideal, OperationsMatchBruteMembership) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const auto I = random_ideal(rng, n, 3, 4);
    const auto J = random_ideal(rng, n, 3, 4);
    const auto gi = gens_of(I);
    const auto gj = gens_of(J);
    const auto w = random_ideal(rng, n, 2, 1).gens().front();
    const VarSet A(std::uniform_int_distribution<std::uint64_t>(0, (1ULL << n) - 1)(rng));
    const auto meet = gens_of(intersect(I, J));
    const auto join = gens_of(sum(I, J));
    const auto quot = gens_of(colon(I, w));
    const auto sub = contract(I, A);
    const auto sub_gens = gens_of(sub.ideal);
    const auto ext = extend(sub);
    EXPECT_TRUE(is_subset(ext, I));
    for_box(Exps(n, 3), [&](const Exps& m) {
      const bool in_i = member(gi, m);
      const bool in_j = member(gj, m);
      ASSERT_EQ(member(meet, m), in_i && in_j);
      ASSERT_EQ(member(join, m), in_i || in_j);
      Exps mw = m;
      for (std::size_t k = 0; k < n; ++k) mw[k] += w[k];
      ASSERT_EQ(member(quot, m), member(gi, mw));
      bool inside = true;
      for (std::size_t k = 0; k < n; ++k) inside = inside && (m[k] == 0 || A.contains(k));
      if (inside) {
        ASSERT_EQ(member(sub_gens, m), in_i);
      }
    });
    bool all_inside = true;
    for (const auto& g : I.gens()) all_inside = all_inside && g.support().subset_of(A);
    EXPECT_EQ(ext == I, all_inside);
  }
}

TEST(Primary, Examples) {
  const auto q = as_primary(ideal(2, {{2, 0}, {1, 1}, {0, 3}}));
  ASSERT_TRUE(q);
  EXPECT_EQ(q->radical(), VarSet(0b11));
  EXPECT_EQ(q->pure_power(1), 3u);
  EXPECT_FALSE(as_primary(ideal(2, {{1, 1}})));
  EXPECT_FALSE(as_primary(ideal(2, {{2, 0}, {1, 1}})));
  EXPECT_FALSE(as_primary(MonomialIdeal(RingContext(2))));
  EXPECT_FALSE(as_primary(MonomialIdeal::unit(RingContext(2))));
}

TEST(Primary, MatchesDefinition) {
  std::mt19937_64 rng(5);
  std::size_t accepted = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 3;
    auto I = random_ideal(rng, n, 2, 4);
    if (trial % 2 == 0) {
      // Bias towards primary ideals by adding pure powers on the support.
      std::vector<Monomial> gens(I.gens().begin(), I.gens().end());
      for (std::size_t k : I.support().indices()) gens.push_back(Monomial::variable(n, k, 2));
      I = MonomialIdeal(I.ring(), gens);
    }
    if (I.is_unit()) continue;
    const bool expected = brute_primary(gens_of(I), n);
    EXPECT_EQ(as_primary(I).has_value(), expected) << to_string(I);
    accepted += expected;
  }
  EXPECT_GT(accepted, 50u);
}

TEST(Decomposition, Irredundancy) {
  const RingContext r2(2);
  auto p = [](MonomialIdeal I) { return *as_primary(I); };
  EXPECT_TRUE(is_irredundant(PrimaryDecomposition(r2, {p(ideal(2, {{1, 0}})), p(ideal(2, {{0, 1}}))})));
  EXPECT_FALSE(is_irredundant(PrimaryDecomposition(r2, {p(ideal(2, {{1, 0}})), p(ideal(2, {{2, 0}}))})));
  const auto a = decomp("ring 4\ncomponent: x1^2, x1*x2, x2^2\ncomponent: x1^2, x3\ncomponent: x2, x4^2\n");
  EXPECT_TRUE(is_irredundant(a));
  EXPECT_EQ(a.intersection(), intersect(intersect(a[0].ideal(), a[1].ideal()), a[2].ideal()));
  EXPECT_THROW(PrimaryDecomposition(r2, {}), InvalidArgument);
}
