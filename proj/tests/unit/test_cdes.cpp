#include <gtest/gtest.h>

#include "hooklie/cdes.hpp"
#include "oracles.hpp"

using namespace hooklie;

namespace {

Subset S(int n, std::vector<int> m) { return Subset::from_members(n, m); }

bool predicted(const Partition& mu) { return !(mu.is_rectangular() && is_squarefree(mu.parts().front())); }

}  // namespace

TEST(DesDistribution, Examples) {
  auto d4 = des_distribution(Partition({4}));
  EXPECT_EQ(d4.fibers.size(), 6U);
  for (const auto& j : {S(3, {3}), S(3, {2}), S(3, {1, 3}), S(3, {2, 3}), S(3, {1}), S(3, {1, 2})})
    EXPECT_EQ(d4(j), 1) << j.to_string();

  auto id = des_distribution(Partition({1, 1, 1, 1, 1}));
  ASSERT_EQ(id.fibers.size(), 1U);
  EXPECT_EQ(id(Subset::empty(4)), 1);

  auto t = des_distribution(Partition({2, 1}));
  EXPECT_EQ(t(S(2, {1})), 1);
  EXPECT_EQ(t(S(2, {2})), 1);
  EXPECT_EQ(t(S(2, {1, 2})), 1);
  EXPECT_EQ(t.total(), 3);

  EXPECT_THROW(des_distribution(Partition({6, 5}), 10), GuardExceeded);
}

TEST(Solver, Examples) {
  auto sol = solve_extension(des_distribution(Partition({4})));
  ASSERT_TRUE(std::holds_alternative<CyclicFibers>(sol));
  const auto& c = std::get<CyclicFibers>(sol);
  const std::vector<Subset> expected{S(4, {3, 4}), S(4, {2, 4}), S(4, {1, 3}),
                                     S(4, {2, 3}), S(4, {1, 4}), S(4, {1, 2})};
  for (std::uint64_t b = 1; b + 1 < 16; ++b) {
    Subset j(4, b);
    const bool listed = std::find(expected.begin(), expected.end(), j) != expected.end();
    EXPECT_EQ(c(j), listed ? 1 : 0) << j.to_string();
  }
  for (int n = 2; n <= 7; ++n)
    EXPECT_TRUE(std::holds_alternative<Infeasible>(
        solve_extension(des_distribution(Partition(std::vector<int>(static_cast<std::size_t>(n), 1))))));
  EXPECT_TRUE(std::holds_alternative<Infeasible>(solve_extension(des_distribution(Partition({2, 2})))));
}

TEST(Solver, ClassificationUpToEight) {
  for (int n = 1; n <= 8; ++n)
    for (const auto& mu : partitions_of(n)) {
      auto sol = solve_extension(des_distribution(mu));
      EXPECT_EQ(std::holds_alternative<CyclicFibers>(sol), predicted(mu)) << mu.to_string();
      if (auto* inf = std::get_if<Infeasible>(&sol)) {
        EXPECT_NE(inf->reason, InfeasibleReason::kUnderdetermined) << mu.to_string();
      }
    }
}

TEST(Solver, DependsOnlyOnTheDistribution) {
  // the distribution of the class (2,1) and a relabeled copy give the same answer
  DescentDistribution d{3, {{S(2, {1}), 1}, {S(2, {2}), 1}, {S(2, {1, 2}), 1}}};
  auto a = solve_extension(d);
  auto b = solve_extension(des_distribution(Partition({2, 1})));
  ASSERT_TRUE(std::holds_alternative<CyclicFibers>(a));
  ASSERT_TRUE(std::holds_alternative<CyclicFibers>(b));
  EXPECT_EQ(std::get<CyclicFibers>(a).c, std::get<CyclicFibers>(b).c);
}

TEST(Solver, RejectsNonSymmetricDistribution) {
  DescentDistribution d{3, {{S(2, {1}), 2}}};
  EXPECT_TRUE(std::holds_alternative<Infeasible>(solve_extension(d)));
}

TEST(Construct, FourCycles) {
  auto built = construct_extension(Partition({4}));
  ASSERT_TRUE(std::holds_alternative<CyclicExtensionSolution>(built));
  const auto& sol = std::get<CyclicExtensionSolution>(built);
  EXPECT_TRUE(verify_axioms(sol).all());
  EXPECT_EQ(sol.record_of(Permutation::parse("2341")).cdes, S(4, {3, 4}));
  EXPECT_EQ(sol.record_of(Permutation::parse("2413")).cdes, S(4, {2, 4}));
  EXPECT_EQ(sol.record_of(Permutation::parse("3142")).cdes, S(4, {1, 3}));
  EXPECT_EQ(sol.record_of(Permutation::parse("3421")).cdes, S(4, {2, 3}));
  EXPECT_EQ(sol.record_of(Permutation::parse("4123")).cdes, S(4, {1, 4}));
  EXPECT_EQ(sol.record_of(Permutation::parse("4312")).cdes, S(4, {1, 2}));
}

TEST(Construct, InfeasibleClassesExplainThemselves) {
  auto three = construct_extension(Partition({3}));
  ASSERT_TRUE(std::holds_alternative<ExtensionFailure>(three));
  ASSERT_TRUE(std::get<ExtensionFailure>(three).hook_obstruction.has_value());

  auto two_two = construct_extension(Partition({2, 2}));
  ASSERT_TRUE(std::holds_alternative<ExtensionFailure>(two_two));
  const auto& f = std::get<ExtensionFailure>(two_two);
  ASSERT_TRUE(f.hook_obstruction.has_value());
  EXPECT_EQ(f.hook_obstruction->reason, ExtensionObstruction::kAlternatingSumNonzero);
  EXPECT_TRUE(f.escher_note.has_value());
  EXPECT_TRUE(std::get<ExtensionFailure>(construct_extension(Partition({1, 1, 1}))).escher_note.has_value());
  EXPECT_FALSE(std::get<ExtensionFailure>(construct_extension(Partition({3, 3}))).escher_note.has_value());
}

TEST(Construct, AxiomsHoldOnEveryFeasibleClass) {
  for (int n = 2; n <= 7; ++n)
    for (const auto& mu : partitions_of(n)) {
      auto built = construct_extension(mu);
      ASSERT_EQ(std::holds_alternative<CyclicExtensionSolution>(built), predicted(mu)) << mu.to_string();
      if (auto* sol = std::get_if<CyclicExtensionSolution>(&built)) {
        auto chk = verify_axioms(*sol);
        EXPECT_TRUE(chk.extension && chk.equivariance && chk.non_escher && chk.bijection && chk.fibers_match)
            << mu.to_string();
        EXPECT_EQ(Int(sol->records.size()), mu.class_size());
      }
    }
}

TEST(Construct, AxiomCheckCatchesTampering) {
  auto sol = std::get<CyclicExtensionSolution>(construct_extension(Partition({4})));
  sol.records[0].cdes = sol.records[1].cdes;
  EXPECT_FALSE(verify_axioms(sol).all());
}

TEST(Cellini, Examples) {
  EXPECT_TRUE(cellini_closed(Partition({2, 1})));
  EXPECT_TRUE(cellini_closed(Partition({3, 1})));
  for (int r = 1; r <= 6; ++r)
    for (int s = 1; r * s <= 7; ++s)
      if (r * s > 1) {
        EXPECT_FALSE(cellini_closed(Partition::rectangle(r, s))) << r << "," << s;
      }
}

TEST(Fibers, CyclicComposition) {
  EXPECT_EQ(cyclic_composition(S(5, {2})), (std::vector<int>{5}));
  EXPECT_EQ(cyclic_composition(S(5, {1, 3})), (std::vector<int>{2, 3}));
  EXPECT_EQ(cyclic_composition(S(5, {2, 3, 5})), (std::vector<int>{1, 2, 2}));
  EXPECT_THROW(cyclic_composition(Subset::empty(4)), std::invalid_argument);
}

TEST(Fibers, AffineExamples) {
  const auto m4 = schur_multiplicities(Partition({4}));
  EXPECT_EQ(affine_ribbon_fiber(Partition({4}), S(4, {1, 2}), m4), 1);
  EXPECT_THROW(affine_ribbon_fiber(Partition({4}), Subset::full(4), m4), std::invalid_argument);
  const auto m21 = schur_multiplicities(Partition({2, 1}));
  Int total = 0;
  for (std::uint64_t b = 1; b + 1 < 8; ++b) total += affine_ribbon_fiber(Partition({2, 1}), Subset(3, b), m21);
  EXPECT_EQ(total, 3);
}

TEST(Fibers, AffineMatchesSolver) {
  for (int n = 2; n <= 6; ++n)
    for (const auto& mu : partitions_of(n)) {
      auto sol = solve_extension(des_distribution(mu));
      const auto* c = std::get_if<CyclicFibers>(&sol);
      if (!c) continue;
      const auto mults = schur_multiplicities(mu);
      for (std::uint64_t b = 1; b + 1 < (std::uint64_t{1} << n); ++b)
        EXPECT_EQ(affine_ribbon_fiber(mu, Subset(n, b), mults), (*c)(Subset(n, b))) << mu.to_string();
    }
}

TEST(Fibers, StraightExamples) {
  for (int n = 2; n <= 6; ++n) {
    const auto m = m_coeffs(n, 1);
    for (int k = 0; k < n; ++k)
      EXPECT_EQ(straight_ribbon_fiber(Partition({n}), Subset::interval(n - 1, k)), m[static_cast<std::size_t>(k)]);
  }
  EXPECT_EQ(straight_ribbon_fiber(Partition({1, 1, 1, 1}), Subset::empty(3)), 1);
  EXPECT_EQ(straight_ribbon_fiber(Partition({2, 2}), S(3, {3})), 0);
  EXPECT_EQ(straight_ribbon_fiber(Partition({2, 2}), S(3, {1, 2, 3})), 1);
}

TEST(Fibers, StraightMatchesBruteForce) {
  for (int n = 1; n <= 6; ++n) {
    std::map<std::vector<int>, std::map<std::vector<int>, long long>> brute;
    for (const auto& p : oracle::all_permutations(n)) ++brute[oracle::cycle_type(p)][oracle::descents(p)];
    for (const auto& mu : partitions_of(n)) {
      const auto mults = schur_multiplicities(mu);
      for (std::uint64_t b = 0; b < (std::uint64_t{1} << (n - 1)); ++b) {
        Subset j(n - 1, b);
        EXPECT_EQ(straight_ribbon_fiber(mu, j, mults), brute[mu.parts()][j.members()])
            << mu.to_string() << " " << j.to_string();
      }
    }
  }
}
