#include <gtest/gtest.h>

#include "mstanley/sdepth.hpp"
#include "mstanley/split.hpp"
#include "support.hpp"

using namespace mstanley;
using namespace testing_support;

namespace {

const char* kSplitN5 =
    "ring 5\ncomponent: x1^2, x1*x2, x2^2\ncomponent: x1^2, x3, x5\ncomponent: x2, x4^2\n";
const char* kCaseA =
    "ring 4\ncomponent: x1^2, x1*x2, x2^2\ncomponent: x1^2, x3\ncomponent: x2, x4^2\n";

StanleyDecomposition spaces(std::size_t n,
                            std::initializer_list<std::pair<Monomial, std::uint64_t>> list) {
  StanleyDecomposition d{RingContext(n)};
  for (const auto& [base, z] : list) d.add({base, VarSet(z)});
  return d;
}

}  // namespace

TEST(Spaces, IntersectAndContain) {
  const StanleyInterval a{mon({1, 0}), VarSet(0b11)};
  const StanleyInterval b{mon({0, 1}), VarSet(0b10)};
  const StanleyInterval c{mon({0, 1}), VarSet(0b11)};
  EXPECT_FALSE(spaces_intersect(a, b));
  EXPECT_TRUE(spaces_intersect(a, c));
  EXPECT_TRUE(space_contains(a, mon({3, 2})));
  EXPECT_FALSE(space_contains(b, mon({1, 1})));
}

TEST(Validate, Examples) {
  EXPECT_TRUE(validate_decomposition(ideal(2, {{1, 1}}), spaces(2, {{mon({1, 1}), 0b11}})));
  const auto d = spaces(2, {{mon({1, 0}), 0b11}, {mon({0, 1}), 0b10}});
  EXPECT_TRUE(validate_decomposition(ideal(2, {{1, 0}, {0, 1}}), d));
  EXPECT_EQ(d.sdepth(), 1u);

  const auto bad = validate_decomposition(ideal(2, {{1, 0}}), spaces(2, {{mon({1, 0}), 0b10}}));
  EXPECT_FALSE(bad);
  ASSERT_TRUE(bad.witness);
  EXPECT_EQ(*bad.witness, mon({2, 0}));
}

TEST(Validate, RejectsOverlapAndForeignBase) {
  const auto I = ideal(2, {{1, 0}, {0, 1}});
  EXPECT_FALSE(validate_decomposition(I, spaces(2, {{mon({1, 0}), 0b11}, {mon({0, 1}), 0b11}})));
  EXPECT_FALSE(validate_decomposition(ideal(2, {{1, 1}}), spaces(2, {{mon({1, 0}), 0b11}})));
}

TEST(Decomposition, PrefixAndFreeVars) {
  const auto d = spaces(3, {{mon({1, 0, 0}), 0b001}});
  EXPECT_EQ(d.prefixed(mon({0, 2, 0})).intervals()[0].base, mon({1, 2, 0}));
  EXPECT_EQ(d.with_free_vars(VarSet(0b100)).intervals()[0].zset, VarSet(0b101));
  EXPECT_EQ(StanleyDecomposition(RingContext(3)).sdepth(), 3u);
}

TEST(Poset, Examples) {
  const auto all = VarSet::all(2);
  CharacteristicPoset a(ideal(2, {{1, 0}, {0, 1}}), all, 4096);
  EXPECT_EQ(a.elements(), (std::vector<Monomial>{mon({0, 1}), mon({1, 0}), mon({1, 1})}));
  CharacteristicPoset b(ideal(2, {{1, 1}}), all, 4096);
  EXPECT_EQ(b.elements(), (std::vector<Monomial>{mon({1, 1})}));
  CharacteristicPoset c(ideal(2, {{2, 0}, {0, 1}}), all, 4096);
  EXPECT_EQ(c.size(), 4u);
  EXPECT_EQ(c.g(), mon({2, 1}));
  EXPECT_EQ(c.rho(mon({2, 0})), 1u);
  EXPECT_EQ(c.rho(mon({2, 1})), 2u);
  for (std::size_t code = 0; code < c.box_size(); ++code) EXPECT_EQ(c.encode(c.decode(code)), code);
  EXPECT_THROW(CharacteristicPoset(ideal(2, {{3, 3}}), all, 8), BudgetExceeded);
}

TEST(Sdepth, Examples) {
  EXPECT_EQ(sdepth_exact(ideal(2, {{1, 1}})).sdepth, 2u);
  EXPECT_EQ(sdepth_exact(ideal(2, {{1, 0}, {0, 1}})).sdepth, 1u);
  EXPECT_EQ(sdepth_exact(ideal(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})).sdepth, 2u);
  const auto r = sdepth_exact(ideal(4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
  EXPECT_EQ(r.sdepth, 2u);
  EXPECT_TRUE(validate_decomposition(
      ideal(4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}), r.witness));
}

TEST(Sdepth, AtLeast) {
  const auto I = ideal(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  EXPECT_TRUE(sdepth_at_least(I, VarSet::all(3), 2));
  EXPECT_FALSE(sdepth_at_least(I, VarSet::all(3), 3));
}

TEST(Sdepth, MatchesBruteForce) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const auto I = random_ideal(rng, n, 2, 4);
    if (I.is_unit()) continue;
    const auto r = sdepth_exact(I);
    EXPECT_EQ(r.sdepth, brute_sdepth(gens_of(I), n)) << to_string(I);
    EXPECT_TRUE(validate_decomposition(I, r.witness)) << to_string(I);
    EXPECT_GE(r.witness.sdepth(), r.sdepth);
  }
}

TEST(Sdepth, PermutationInvariant) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const auto I = random_ideal(rng, 4, 2, 4);
    std::vector<Monomial> swapped;
    for (const auto& g : I.gens()) swapped.push_back(mon({g[3], g[1], g[0], g[2]}));
    EXPECT_EQ(sdepth_exact(I).sdepth, sdepth_exact(MonomialIdeal(I.ring(), swapped)).sdepth);
  }
}

TEST(Sdepth, ThreadsGiveSameWitness) {
  const auto I = decomp(kSplitN5).intersection();
  SolverOptions many;
  many.threads = 4;
  const auto a = sdepth_exact(I);
  const auto b = sdepth_exact(I, many);
  EXPECT_EQ(a.sdepth, b.sdepth);
  ASSERT_EQ(a.witness.size(), b.witness.size());
  for (std::size_t i = 0; i < a.witness.size(); ++i) {
    EXPECT_EQ(a.witness.intervals()[i], b.witness.intervals()[i]);
  }
}

TEST(Sdepth, PrincipalIsN) {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<Exponent> e(n, 0);
    e[0] = 2;
    if (n > 2) e[2] = 1;
    EXPECT_EQ(sdepth_exact(MonomialIdeal(RingContext(n), {Monomial(e)})).sdepth, n);
  }
}

TEST(Sdepth, NodeBudget) {
  SolverOptions tiny;
  tiny.max_nodes = 1;
  const auto I = decomp(kCaseA).intersection();
  EXPECT_THROW(sdepth_exact(I, tiny), BudgetExceeded);
}

TEST(LiftPartition, SingletonOfBottomSpansFullCoordinates) {
  CharacteristicPoset p(ideal(2, {{2, 0}, {0, 1}}), VarSet::all(2), 4096);
  const std::vector<PosetInterval> part = {{mon({0, 1}), mon({1, 1})}, {mon({2, 0}), mon({2, 1})}};
  const auto d = lift_partition(p, part);
  EXPECT_TRUE(validate_decomposition(ideal(2, {{2, 0}, {0, 1}}), d));
  EXPECT_EQ(d.size(), 3u);
}

TEST(TwoPrimary, Examples) {
  auto a = decompose_two_primary(decomp("ring 2\ncomponent: x1\ncomponent: x2\n"));
  EXPECT_EQ(a.sdepth(), 2u);
  auto b = decompose_two_primary(decomp("ring 3\ncomponent: x1^2, x2\ncomponent: x3\n"));
  EXPECT_GE(b.sdepth(), 2u);
  auto c = decompose_two_primary(decomp("ring 2\ncomponent: x1\ncomponent: x2^2\n"));
  EXPECT_EQ(c.sdepth(), 2u);
  EXPECT_THROW(decompose_two_primary(decomp(kCaseA)), InvalidArgument);
}

TEST(Split, FrameOfN5Example) {
  const auto d = decomp(kSplitN5);
  const auto frame = split_frame(d.components(), VarSet::all(5));
  ASSERT_TRUE(frame);
  EXPECT_EQ(frame->labeling, (std::array<std::size_t, 3>{0, 1, 2}));
  EXPECT_EQ(frame->overlap, VarSet(0b00010));
  EXPECT_EQ(frame->s_prime, VarSet(0b00011));
  EXPECT_EQ(frame->s_bar, VarSet(0b11101));
  EXPECT_EQ(frame->w_list, (std::vector<Monomial>{Monomial::one(5)}));
  const auto pieces = split_pieces(d.components(), *frame);
  EXPECT_EQ(pieces.prime_components[2].ideal(), ideal(5, {{0, 1, 0, 0, 0}}));
  EXPECT_TRUE(count_split_partition(d.components(), *frame).holds());
}

TEST(Split, CaseAInstance) {
  // P1 + P2 = (x1, x2, x3) is not maximal in four variables, so this splits.
  const auto d = decomp(kCaseA);
  ASSERT_TRUE(split_frame(d.components(), VarSet::all(4)));
  SplitTrace trace;
  const auto out = decompose_three_primary(d, {}, &trace);
  EXPECT_GE(out.sdepth(), 3u);
  EXPECT_EQ(trace.frames, 1u);
  EXPECT_TRUE(validate_decomposition(d.intersection(), out));
}

TEST(Split, MaximalPairSumIsALeaf) {
  // P1 + P3 = (x1, x2, x3) = m.
  const auto d = decomp("ring 3\ncomponent: x1^2, x1*x2, x2^2\ncomponent: x1^2, x3\ncomponent: x2, x3^2\n");
  ASSERT_FALSE(split_frame(d.components(), VarSet::all(3)));
  SplitTrace trace;
  const auto out = decompose_three_primary(d, {}, &trace);
  EXPECT_EQ(trace.frames, 0u);
  EXPECT_EQ(trace.leaves, 1u);
  EXPECT_EQ(out.sdepth(), sdepth_exact(d.intersection()).sdepth);
}

TEST(Split, N5EndToEnd) {
  const auto d = decomp(kSplitN5);
  SplitTrace trace;
  const auto out = decompose_three_primary(d, {}, &trace);
  EXPECT_TRUE(validate_decomposition(d.intersection(), out));
  EXPECT_GE(out.sdepth(), depth_oracle(d.intersection()).depth_ideal);
  EXPECT_GE(trace.frames, 1u);
}

TEST(Split, RandomInstancesValidate) {
  std::size_t frames = 0;
  for (std::uint64_t i = 0; i < 400; ++i) {
    RandomParams p;
    p.seed = derive_seed(4242, i);
    p.n = 3 + i % 3;
    p.components = 3;
    const auto d = random_instance(p);
    SplitTrace trace;
    const auto out = decompose_three_primary(d, {}, &trace);
    const auto depth = depth_oracle(d.intersection()).depth_ideal;
    EXPECT_TRUE(validate_decomposition(d.intersection(), out));
    EXPECT_GE(out.sdepth(), depth);
    frames += trace.frames;
    if (auto frame = split_frame(d.components(), VarSet::all(p.n))) {
      EXPECT_TRUE(count_split_partition(d.components(), *frame).holds());
    }
  }
  EXPECT_GT(frames, 0u);
}
