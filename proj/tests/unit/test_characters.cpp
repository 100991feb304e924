#include <gtest/gtest.h>

#include <thread>

#include "hooklie/cdes.hpp"
#include "hooklie/characters.hpp"
#include "oracles.hpp"

using namespace hooklie;

TEST(MurnaghanNakayama, Examples) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& mu : partitions_of(n)) {
      EXPECT_EQ(mn_character(Partition({n}), mu), 1);
      const int sign = (n - mu.length()) % 2 == 0 ? 1 : -1;
      EXPECT_EQ(mn_character(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)), mu), sign);
    }
  EXPECT_EQ(mn_character(Partition({2, 1}), Partition({3})), -1);
  EXPECT_THROW(mn_character(Partition({2, 1}), Partition({2})), std::invalid_argument);
}

TEST(MurnaghanNakayama, DegreesAreTableauCounts) {
  for (int n = 1; n <= 8; ++n)
    for (const auto& lambda : partitions_of(n))
      EXPECT_EQ(mn_character(lambda, Partition(std::vector<int>(static_cast<std::size_t>(n), 1))),
                oracle::hook_length_count(lambda.parts()));
}

TEST(MurnaghanNakayama, RowOrthonormality) {
  for (int n = 1; n <= 7; ++n) {
    const auto parts = partitions_of(n);
    for (const auto& a : parts)
      for (const auto& b : parts)
        EXPECT_EQ(inner_product(ClassFunction::irreducible(a), ClassFunction::irreducible(b)),
                  Rational(a == b ? 1 : 0))
            << a.to_string() << " " << b.to_string();
  }
}

TEST(MurnaghanNakayama, ColumnOrthogonality) {
  for (int n = 1; n <= 7; ++n) {
    const auto parts = partitions_of(n);
    for (const auto& mu : parts)
      for (const auto& nu : parts) {
        Int sum = 0;
        for (const auto& lambda : parts) sum += Int(mn_character(lambda, mu)) * mn_character(lambda, nu);
        EXPECT_EQ(sum, mu == nu ? mu.centralizer_order() : Int(0));
      }
  }
}

TEST(MurnaghanNakayama, ConcurrentQueriesAgree) {
  character_memo().clear();
  std::vector<long long> seq;
  const auto parts = partitions_of(8);
  std::vector<std::vector<long long>> results(4);
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < results.size(); ++t)
      pool.emplace_back([&, t] {
        for (const auto& a : parts)
          for (const auto& b : parts) results[t].push_back(mn_character(a, b));
      });
  }
  for (std::size_t t = 1; t < results.size(); ++t) EXPECT_EQ(results[t], results[0]);
}

TEST(CharacterMemoTest, InsertIsIdempotent) {
  CharacterMemo memo;
  CharacterMemo::Key key{{2, 1}, {3}};
  EXPECT_TRUE(memo.insert(key, -1));
  EXPECT_TRUE(memo.insert(key, -1));
  EXPECT_FALSE(memo.insert(key, 2));
  EXPECT_EQ(memo.find(key), -1);
}

TEST(HigherLie, IdentityClassIsTrivialCharacter) {
  for (int n = 1; n <= 6; ++n) {
    auto psi = higher_lie_values(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
    for (const auto& [mu, v] : psi.values()) EXPECT_EQ(v, Rational(1));
  }
}

TEST(HigherLie, HookExamples) {
  EXPECT_EQ(inner_product(higher_lie_values(Partition({4})), ClassFunction::irreducible(Partition({3, 1}))),
            Rational(1));
  EXPECT_EQ(hook_multiplicities_oracle(Partition({4})), (std::vector<Int>{0, 1, 1, 0}));
  EXPECT_EQ(hook_multiplicities_oracle(Partition({2, 2})), (std::vector<Int>{0, 0, 0, 1}));
  EXPECT_EQ(hook_multiplicities_oracle(Partition({4, 4})), (std::vector<Int>{0, 0, 0, 2, 2, 0, 0, 0}));
}

TEST(HigherLie, FullCycleMatchesResidueSubsets) {
  for (int n = 1; n <= 8; ++n) {
    auto kw = oracle::residue_subsets(n, n - 1);
    auto m = hook_multiplicities_oracle(Partition({n}));
    for (int k = 0; k < n; ++k) EXPECT_EQ(m[static_cast<std::size_t>(k)], kw[static_cast<std::size_t>(k)]);
  }
}

TEST(HigherLie, IsACharacter) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& mu : partitions_of(n)) {
      auto psi = higher_lie_values(mu);
      Int degree = 0;
      for (const auto& lambda : partitions_of(n)) {
        Rational q = inner_product(psi, ClassFunction::irreducible(lambda));
        ASSERT_EQ(boost::multiprecision::denominator(q), 1) << mu.to_string();
        ASSERT_GE(q, 0);
        degree += boost::multiprecision::numerator(q) * mn_character(lambda, Partition(std::vector<int>(
                                                                                   static_cast<std::size_t>(n), 1)));
      }
      // psi^mu is induced from a linear character of the centralizer
      EXPECT_EQ(degree, mu.class_size());
    }
}

TEST(HigherLie, SumOverClassesIsRegular) {
  for (int n = 1; n <= 6; ++n) {
    ClassFunction total(n);
    for (const auto& mu : partitions_of(n)) total += higher_lie_values(mu);
    for (const auto& lambda : partitions_of(n))
      EXPECT_EQ(inner_product(total, ClassFunction::irreducible(lambda)),
                Rational(oracle::hook_length_count(lambda.parts())));
  }
}

TEST(HigherLie, HooksMatchPrefixDescentFibers) {
  for (int n = 1; n <= 6; ++n) {
    std::map<std::vector<int>, std::vector<long long>> fibers;
    for (const auto& p : oracle::all_permutations(n)) {
      auto& f = fibers[oracle::cycle_type(p)];
      f.resize(static_cast<std::size_t>(n), 0);
      auto d = oracle::descents(p);
      std::vector<int> prefix(d.size());
      std::iota(prefix.begin(), prefix.end(), 1);
      if (d == prefix) ++f[d.size()];
    }
    for (const auto& mu : partitions_of(n)) {
      auto m = hook_multiplicities_oracle(mu);
      for (int k = 0; k < n; ++k)
        EXPECT_EQ(m[static_cast<std::size_t>(k)], fibers[mu.parts()][static_cast<std::size_t>(k)])
            << mu.to_string() << " k=" << k;
    }
  }
}

TEST(Centralizer, ElementsCommuteWithBase) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& mu : partitions_of(n)) {
      const Permutation base = centralizer_base(mu);
      EXPECT_EQ(base.cycle_type(), mu);
      const long long L = detail::lcm_of_parts(mu);
      Int count = 0;
      for_each_centralizer_element(mu, [&](const CentralizerElement& g) {
        ++count;
        EXPECT_EQ(g.element.compose(base), base.compose(g.element));
        EXPECT_EQ(L % g.omega.order, 0);
        EXPECT_GE(g.omega.exponent, 0);
        EXPECT_LT(g.omega.exponent, g.omega.order);
      });
      EXPECT_EQ(count, mu.centralizer_order());
    }
}

TEST(Centralizer, GuardIsEnforced) {
  EXPECT_THROW(higher_lie_values(Partition({2, 2, 2}), 10), GuardExceeded);
  EXPECT_NO_THROW(higher_lie_values(Partition({2, 2, 2}), 48));
}
