#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "ngraph/core_partitions.hpp"
#include "oracles.hpp"

namespace ngraph {
namespace {

TEST(MakeSystem, AcceptsPaperSystems) {
  const auto a = make_system(13, {3, 2, 20});
  EXPECT_EQ(a.modulus(), 13);
  EXPECT_EQ(std::vector<Int>(a.elements().begin(), a.elements().end()),
            (std::vector<Int>{3, 2, 20}));
  EXPECT_NO_THROW(make_system(15, {1, 6, 19}));
  EXPECT_NO_THROW(make_system(1, {1}));
}

TEST(MakeSystem, Rejections) {
  EXPECT_THROW(make_system(13, {3, 16}), InvalidSystem);  // 3 == 16 mod 13
  EXPECT_THROW(make_system(0, {1}), InvalidSystem);
  EXPECT_THROW(make_system(-4, {1}), InvalidSystem);
  EXPECT_THROW(make_system(5, {}), InvalidSystem);
  EXPECT_THROW(make_system(5, {0}), InvalidSystem);
  EXPECT_THROW(make_system(5, {2, -3}), InvalidSystem);
  EXPECT_THROW(make_system(5, {2, 2}), InvalidSystem);
  EXPECT_THROW(make_system(1, {1, 2}), InvalidSystem);
}

TEST(ParseSystem, RoundTripKeepsOrder) {
  const auto sys = parse_system(" m = 13 ; S = 3, 2 ,20 ");
  EXPECT_EQ(to_string(sys), "m=13;S=3,2,20");
  EXPECT_EQ(parse_system(to_string(sys)), sys);
  EXPECT_THROW(parse_system("m=13"), InvalidSystem);
  EXPECT_THROW(parse_system("S=1;m=2"), InvalidSystem);
  EXPECT_THROW(parse_system("m=x;S=1"), InvalidSystem);
  EXPECT_THROW(parse_system("m=13;S=3,,2"), InvalidSystem);
}

TEST(Decompose, PaperExamples) {
  const auto sys = make_system(13, {3, 2, 20});
  EXPECT_EQ(decompose(55, sys), (Decomposition{4, 0, 55}));
  EXPECT_EQ(decompose(20, sys), (Decomposition{0, 2, 20}));
  EXPECT_THROW(decompose(5, sys), NotInA);
  // 7 has the residue of 20 but is smaller than it.
  EXPECT_THROW(decompose(7, sys), NotInA);
}

TEST(Decompose, ClassicalCase) {
  const auto sys = make_system(1, {1});
  for (Int a = 1; a <= 50; ++a) EXPECT_EQ(decompose(a, sys), (Decomposition{a - 1, 0, a}));
}

TEST(Decompose, BijectionWithOracle) {
  for (const auto& sys : {make_system(13, {3, 2, 20}), make_system(15, {1, 6, 19}),
                          make_system(12, {1, 3, 5}), make_system(2, {1})}) {
    const std::vector<Int> s(sys.elements().begin(), sys.elements().end());
    for (Int a = 1; a <= 300; ++a) {
      const auto reps = oracle::a_representations(a, sys.modulus(), s);
      ASSERT_LE(reps.size(), 1u);
      const auto d = try_decompose(a, sys);
      ASSERT_EQ(d.has_value(), !reps.empty()) << a;
      if (d) {
        EXPECT_EQ(d->u, reps[0].first);
        EXPECT_EQ(sys.element(d->s_index), reps[0].second);
        EXPECT_EQ(d->u * sys.modulus() + sys.element(d->s_index), a);
      }
    }
  }
}

TEST(StandardNForm, PaperExamples) {
  const auto sys = make_system(13, {3, 2, 20});
  const std::vector<Int> parts{55, 41, 33, 29, 20, 15};
  const auto pi = standard_n_form(parts, sys);
  EXPECT_EQ(pi.parts(), (std::vector<Int>{55, 41, 29, 15, 33, 20}));
  EXPECT_EQ(pi.weight(), 193);
  EXPECT_EQ(to_string(pi), "(55,41,29,15,33,20)_N");

  const auto sidon = make_system(15, {1, 6, 19});
  const std::vector<Int> parts2{96, 61, 64, 21};
  EXPECT_EQ(standard_n_form(parts2, sidon).parts(), parts2);

  const std::vector<Int> single{33};
  EXPECT_EQ(standard_n_form(single, sys).parts(), single);
  EXPECT_TRUE(standard_n_form(std::vector<Int>{}, sys).empty());
}

TEST(StandardNForm, RejectsPartsOutsideA) {
  const auto sys = make_system(13, {3, 2, 20});
  EXPECT_THROW(standard_n_form(std::vector<Int>{55, 5}, sys), NotInA);
}

TEST(StandardNForm, PermutationInvariant) {
  const auto sys = make_system(13, {3, 2, 20});
  std::mt19937 rng(7);
  std::vector<Int> pool;
  for (Int a = 1; a <= 120; ++a)
    if (in_a(a, sys)) pool.push_back(a);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Int> parts;
    const int k = 1 + static_cast<int>(rng() % 8);
    for (int i = 0; i < k; ++i) parts.push_back(pool[rng() % pool.size()]);
    const auto reference = standard_n_form(parts, sys);
    std::shuffle(parts.begin(), parts.end(), rng);
    const auto shuffled = standard_n_form(parts, sys);
    ASSERT_EQ(reference, shuffled);
    for (std::size_t i = 1; i < reference.size(); ++i) {
      ASSERT_GE(reference[i - 1].u, reference[i].u);
      if (reference[i - 1].u == reference[i].u)
        ASSERT_LE(reference[i - 1].s_index, reference[i].s_index);
    }
  }
}

TEST(NFormPartition, FromEntriesChecksOrder) {
  EXPECT_THROW(NFormPartition::from_entries({{0, 0, 3}, {1, 0, 16}}), std::invalid_argument);
  EXPECT_THROW(NFormPartition::from_entries({{1, 1, 15}, {1, 0, 16}}), std::invalid_argument);
  const auto ok = NFormPartition::from_entries({{1, 0, 16}, {1, 1, 15}, {0, 1, 2}});
  EXPECT_EQ(ok.weight(), 33);
  EXPECT_FALSE(ok.strictly_decreasing_u());
}

TEST(Partition, SortsAndWeighs) {
  const Partition p({4, 9, 6, 8});
  EXPECT_EQ(std::vector<Int>(p.parts().begin(), p.parts().end()), (std::vector<Int>{9, 8, 6, 4}));
  EXPECT_EQ(p.weight(), 27);
  EXPECT_THROW(Partition({3, 0}), std::invalid_argument);
  EXPECT_EQ(Partition().weight(), 0);
}

TEST(Checked, OverflowIsLoud) {
  EXPECT_THROW(checked::add<Int>(INT64_MAX, 1), OverflowError);
  EXPECT_THROW(checked::mul<Count>(UINT64_MAX, 2), OverflowError);
  EXPECT_THROW(checked::pow2(64), OverflowError);
  EXPECT_EQ(checked::pow2(63), Count{1} << 63);
}

}  // namespace
}  // namespace ngraph
