#include "glblocks/partition.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace glblocks;

namespace {

std::vector<std::pair<Partition, int>> engine_strips(const Partition& p, int h)
{
    std::vector<std::pair<Partition, int>> out;
    for (const auto& hook : rim_hooks(p, h)) out.emplace_back(hook.result, hook.leg_length);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST(Parse, AcceptsBracketsAndBareLists)
{
    EXPECT_EQ(parse_partition("[6,5,5,2,1]"), (Partition{6, 5, 5, 2, 1}));
    EXPECT_EQ(parse_partition(" 3, 1 "), (Partition{3, 1}));
    EXPECT_EQ(parse_partition("[]"), Partition());
    EXPECT_EQ(parse_partition("(2,2)"), (Partition{2, 2}));
}

TEST(Parse, ReportsPosition)
{
    try {
        parse_partition("[3,x]");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position, 3u);
    }
    EXPECT_THROW(parse_partition("[1,2]"), ParseError);
    EXPECT_THROW(parse_partition("[3,1"), ParseError);
    EXPECT_THROW(parse_partition("[3,]"), ParseError);
    EXPECT_THROW(parse_partition("[3,0]"), ParseError);
}

TEST(Partitions, CountsMatchPartitionNumbers)
{
    std::vector<std::size_t> p{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    for (int n = 0; n <= 12; ++n) EXPECT_EQ(partitions_of(n).size(), p[static_cast<std::size_t>(n)]) << n;
}

TEST(RimHooks, SpecExamples)
{
    auto a = rim_hooks({2}, 2);
    ASSERT_EQ(a.size(), 1u);
    EXPECT_EQ(a[0].result, Partition());
    EXPECT_EQ(a[0].leg_length, 0);
    auto b = rim_hooks({1, 1}, 2);
    ASSERT_EQ(b.size(), 1u);
    EXPECT_EQ(b[0].leg_length, 1);
    auto c = engine_strips({2, 2}, 2);
    ASSERT_EQ(c.size(), 2u);
    EXPECT_EQ(c[0].first, (Partition{1, 1}));
    EXPECT_EQ(c[1].first, (Partition{2}));
}

TEST(RimHooks, AgreeWithDiagramBorderStrips)
{
    for (int n = 1; n <= 9; ++n)
        for (const auto& p : partitions_of(n))
            for (int h = 1; h <= n; ++h) ASSERT_EQ(engine_strips(p, h), oracle_ref::border_strips(p, h)) << to_string(p) << " h=" << h;
}

TEST(Core, SpecExamples)
{
    EXPECT_EQ(d_core({6, 5, 5, 2, 1}, 3), (Partition{3, 1}));
    EXPECT_EQ(d_core({2, 1}, 5), (Partition{2, 1}));
    for (const auto& p : partitions_of(6)) EXPECT_EQ(d_core(p, 1), Partition());
}

TEST(Core, AgreesWithStripRemovalAndHookCriterion)
{
    for (int n = 0; n <= 10; ++n)
        for (const auto& p : partitions_of(n))
            for (int d = 1; d <= 5; ++d) {
                auto core = d_core(p, d);
                ASSERT_EQ(core, oracle_ref::core_by_strips(p, d)) << to_string(p) << " d=" << d;
                auto hooks = oracle_ref::hook_lengths(core);
                // a core has no hook length divisible by d
                ASSERT_TRUE(std::none_of(hooks.begin(), hooks.end(), [&](int h) { return h % d == 0; }));
                // the weight counts hook lengths divisible by d
                auto all = oracle_ref::hook_lengths(p);
                ASSERT_EQ(d_weight(p, d), std::count_if(all.begin(), all.end(), [&](int h) { return h % d == 0; }));
            }
}

TEST(Quotient, WorkedExample)
{
    auto quotient = d_quotient({6, 5, 5, 2, 1}, 3);
    ASSERT_EQ(quotient.size(), 3u);
    EXPECT_EQ(quotient[0], (Partition{1, 1}));
    EXPECT_EQ(quotient[1], (Partition{2}));
    EXPECT_EQ(quotient[2], (Partition{1}));
    EXPECT_EQ(d_weight({6, 5, 5, 2, 1}, 3), 5);
    EXPECT_EQ(d_weight({4}, 2), 2);
}

TEST(Quotient, CoreHasEmptyQuotientAndRowOfTwoUsesOneRunner)
{
    for (const auto& c : d_quotient({3, 1}, 3)) EXPECT_TRUE(c.empty());
    auto q = d_quotient({2}, 2);
    EXPECT_EQ(std::count(q.begin(), q.end(), Partition{1}), 1);
    EXPECT_EQ(std::count(q.begin(), q.end(), Partition()), 1);
}

TEST(Quotient, ReconstructionRoundTripAndWeight)
{
    for (int n = 0; n <= 12; ++n)
        for (const auto& p : partitions_of(n))
            for (int d = 1; d <= 5; ++d) {
                auto core = d_core(p, d);
                auto quotient = d_quotient(p, d);
                int total = 0;
                for (const auto& c : quotient) total += c.size();
                ASSERT_EQ(total, d_weight(p, d));
                ASSERT_EQ(reconstruct(core, quotient), p) << to_string(p) << " d=" << d;
            }
}

TEST(Quotient, EveryCoreAndQuotientOccurs)
{
    // |{λ ⊢ n : core γ}| equals the number of d-multipartitions of (n − |γ|)/d
    auto multipartitions = [](int w, int d) {
        std::vector<BigInt> ways(static_cast<std::size_t>(w + 1), 0);
        ways[0] = 1;
        for (int r = 0; r < d; ++r) {
            std::vector<BigInt> next(ways.size(), 0);
            for (int a = 0; a <= w; ++a)
                for (int b = 0; a + b <= w; ++b) next[static_cast<std::size_t>(a + b)] += ways[static_cast<std::size_t>(a)] * BigInt(partitions_of(b).size());
            ways = next;
        }
        return ways[static_cast<std::size_t>(w)];
    };
    for (int d = 2; d <= 4; ++d)
        for (int n = 0; n <= 11; ++n) {
            std::map<Partition, int> by_core;
            for (const auto& p : partitions_of(n)) ++by_core[d_core(p, d)];
            for (const auto& [core, count] : by_core) EXPECT_EQ(BigInt(count), multipartitions((n - core.size()) / d, d)) << to_string(core);
        }
}

TEST(Abacus, EmptyPartitionIsPacked)
{
    auto state = abacus(Partition(), 3);
    for (const auto& runner : state.runners)
        for (std::size_t j = 0; j < runner.size(); ++j) EXPECT_EQ(runner[j], static_cast<int>(j));
    EXPECT_TRUE(runners_used(Partition(), 3).empty());
}

TEST(Abacus, WorkedExampleSequence)
{
    auto state = abacus({6, 5, 5, 2, 1}, 3);
    EXPECT_EQ(edge_sequence(state), "1101010001101");
    EXPECT_EQ(to_partition(state), (Partition{6, 5, 5, 2, 1}));
}

TEST(Abacus, BeadAboveGapIsAHook)
{
    for (int n = 1; n <= 9; ++n)
        for (const auto& p : partitions_of(n))
            for (int d = 1; d <= 4; ++d)
                for (int k = 1; k * d <= n; ++k) {
                    auto state = abacus(p, d);
                    int moves = 0;
                    for (const auto& runner : state.runners) {
                        std::set<int> levels(runner.begin(), runner.end());
                        for (int level : runner)
                            if (level >= k && !levels.count(level - k)) ++moves;
                    }
                    ASSERT_EQ(static_cast<std::size_t>(moves), rim_hooks(p, k * d).size());
                }
}

TEST(Paths, SpecExamples)
{
    EXPECT_EQ(removal_paths({2, 2}, Partition(), 2).size(), 2u);
    EXPECT_EQ(removal_paths({2}, Partition(), 2).size(), 1u);
    auto trivial = removal_paths({3, 1}, {3, 1}, 3);
    ASSERT_EQ(trivial.size(), 1u);
    EXPECT_TRUE(trivial[0].steps.empty());
    EXPECT_EQ(trivial[0].total_leg, 0);
    EXPECT_THROW(removal_paths({2, 2}, {1}, 2), PathMismatch);
}

TEST(Paths, CountIsMultinomialTimesStandardTableaux)
{
    for (int n = 1; n <= 11; ++n)
        for (const auto& p : partitions_of(n))
            for (int d = 2; d <= 4; ++d) {
                auto quotient = d_quotient(p, d);
                int w = d_weight(p, d);
                BigInt expected = 1;
                for (int i = 2; i <= w; ++i) expected *= i;
                for (const auto& c : quotient) {
                    BigInt f = 1;
                    for (int i = 2; i <= c.size(); ++i) f *= i;
                    expected = expected / f * oracle_ref::syt_count(c);
                }
                ASSERT_EQ(BigInt(count_removal_paths(p, d)), expected) << to_string(p) << " d=" << d;
                if (n <= 9) {
                    ASSERT_EQ(removal_paths(p, d_core(p, d), d).size(), count_removal_paths(p, d));
                }
            }
}

TEST(Epsilon, SpecExamples)
{
    EXPECT_EQ(epsilon({2}, 2), 1);
    EXPECT_EQ(epsilon({1, 1}, 2), -1);
    // (2,2) -> (2) -> ∅ has legs 0+0 and (2,2) -> (1,1) -> ∅ has legs 1+1, so the
    // sign is +1; the signed path sum 2 is χ^(2,2) on cycle type (2,2)
    EXPECT_EQ(epsilon({2, 2}, 2), 1);
    BigInt signed_sum = 0;
    for (const auto& path : removal_paths({2, 2}, {}, 2)) signed_sum += path.total_leg % 2 ? -1 : 1;
    EXPECT_EQ(signed_sum, 2);
}

TEST(Epsilon, PathIndependentOnSmallPartitions)
{
    for (int n = 0; n <= 9; ++n)
        for (const auto& p : partitions_of(n))
            for (int d = 1; d <= 4; ++d) ASSERT_TRUE(epsilon_path_independent(p, d)) << to_string(p);
}

TEST(Simple, SpecExamples)
{
    EXPECT_TRUE(is_simple({3, 1}, 3));
    EXPECT_FALSE(is_simple({4}, 2));
    EXPECT_FALSE(is_simple({6, 5, 5, 2, 1}, 3));
}

TEST(Simple, MeansElementaryBeadsOnDistinctRunners)
{
    for (int n = 1; n <= 11; ++n)
        for (const auto& p : partitions_of(n))
            for (int d = 2; d <= 4; ++d) {
                bool elementary = true;
                for (const auto& c : d_quotient(p, d)) elementary = elementary && c.size() <= 1;
                ASSERT_EQ(is_simple(p, d), elementary) << to_string(p) << " d=" << d;
            }
}

TEST(Disjoint, SpecExamples)
{
    Partition lambda{6, 5, 5, 2, 1};
    EXPECT_TRUE(disjoint(lambda, d_core(lambda, 3), 3));
    EXPECT_FALSE(disjoint(lambda, lambda, 3));
    // every partition of 4 has 2-weight 2, so the weight-1 pair lives over (2,1) in n = 5
    std::vector<Partition> weight_one;
    for (const auto& p : partitions_of(5))
        if (d_core(p, 2) == Partition{2, 1} && d_weight(p, 2) == 1) weight_one.push_back(p);
    ASSERT_EQ(weight_one.size(), 2u);
    EXPECT_TRUE(disjoint(weight_one[0], weight_one[1], 2));
}

TEST(Disjoint, ConventionMismatchIsAnError)
{
    EXPECT_THROW(disjoint(abacus({2}, 2, 1), abacus({1, 1}, 2, 2)), ConventionMismatch);
    EXPECT_NO_THROW(disjoint(abacus({2}, 2, 1), abacus({1, 1}, 2, 3)));
}

TEST(FindSimpleDisjoint, SpecExamples)
{
    auto a = find_simple_disjoint(Partition(), 1, 3, {});
    EXPECT_EQ(a.size(), 3);
    EXPECT_EQ(d_core(a, 3), Partition());
    EXPECT_EQ(d_weight(a, 3), 1);
    EXPECT_THROW(find_simple_disjoint({1}, 1, 3, {0, 1, 2}), Infeasible);
    auto b = find_simple_disjoint(Partition(), 2, 5, {0});
    EXPECT_TRUE(is_simple(b, 5));
    EXPECT_EQ(d_weight(b, 5), 2);
    EXPECT_FALSE(runners_used(b, 5).count(0));
}

TEST(LSets, SpecExamples)
{
    for (int n = 1; n <= 9; ++n)
        for (const auto& p : partitions_of(n))
            for (int d = 2; d <= 3; ++d) {
                int w = d_weight(p, d);
                EXPECT_EQ(l_sets(p, d, 0, LSetMode::iterate), std::set<Partition>{p});
                EXPECT_EQ(l_sets(p, d, w, LSetMode::iterate), std::set<Partition>{d_core(p, d)});
                EXPECT_TRUE(l_sets(p, d, w + 1, LSetMode::iterate).empty());
                if (is_simple(p, d)) {
                    for (int i = 2; i <= w; ++i) EXPECT_TRUE(l_sets(p, d, i, LSetMode::single_hook).empty());
                }
            }
}
