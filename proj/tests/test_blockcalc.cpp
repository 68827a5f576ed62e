#include "glblocks/blockcalc.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace glblocks;

namespace {

const std::vector<Context>& small_contexts()
{
    static const std::vector<Context> ctxs{{3, 3, 2}, {4, 3, 2}, {5, 3, 2}, {4, 2, 3}, {3, 2, 2}, {4, 2, 2}, {3, 3, 1}, {2, 4, 2}, {3, 4, 2}, {4, 5, 2}};
    return ctxs;
}

BigInt factorial(int n)
{
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Removal-path count from the quotient: w!/Π|λ^(i)|! · Π f^{λ^(i)}.
BigInt path_count_oracle(const Partition& p, int d)
{
    BigInt count = factorial(d_weight(p, d));
    for (const auto& part : d_quotient(p, d)) count = count / factorial(part.size()) * oracle_ref::syt_count(part);
    return count;
}

}  // namespace

TEST(Context, FAndHypothesis)
{
    EXPECT_EQ((Context{3, 3, 2}.F()), 3);
    EXPECT_EQ((Context{3, 2, 2}.F()), 1);
    EXPECT_EQ((Context{3, 3, 1}.F()), 1);
    EXPECT_EQ((Context{3, 5, 1}.F()), 3);
    EXPECT_TRUE((Context{3, 3, 2}.standing_hypothesis()));
    EXPECT_FALSE((Context{3, 2, 2}.standing_hypothesis()));
    EXPECT_THROW((Context{3, 6, 2}.validate()), std::invalid_argument);
    EXPECT_THROW((Context{0, 2, 2}.validate()), std::invalid_argument);
}

TEST(InnerProduct, FullDomainIsKronecker)
{
    for (const auto& ctx : small_contexts()) {
        const auto& data = context_data(ctx);
        auto m = data.matrix(Domain::full());
        for (std::size_t a = 0; a < m.size(); ++a)
            for (std::size_t b = 0; b < m.size(); ++b) EXPECT_EQ(m[a][b], a == b ? 1 : 0);
        // regular + singular = full
        auto reg = data.matrix(Domain::d_regular());
        auto sing = data.matrix(Domain::d_singular());
        for (std::size_t a = 0; a < m.size(); ++a)
            for (std::size_t b = 0; b < m.size(); ++b) EXPECT_EQ(reg[a][b] + sing[a][b], m[a][b]);
    }
}

TEST(CrossCore, ZeroOnEverySection)
{
    std::size_t total = 0;
    for (const auto& ctx : small_contexts()) {
        auto report = cross_core_section_check(ctx);
        EXPECT_TRUE(report.all_zero) << to_string(ctx);
        total += report.pairs_checked;
    }
    EXPECT_GT(total, 0u);
}

TEST(Blocks, ComputedRefineCombinatorial)
{
    for (const auto& ctx : small_contexts()) EXPECT_TRUE(unipotent_blocks(ctx).refines(combinatorial_blocks(ctx.n, ctx.d))) << to_string(ctx);
}

TEST(Blocks, EqualUnderSmallRankHypothesis)
{
    // n ≤ d(d+1)/2 with F ≥ n/d
    int seen = 0;
    for (auto [n, q, d] : std::vector<std::tuple<int, int, int>>{{2, 2, 2}, {3, 3, 2}, {3, 2, 3}, {4, 2, 3}, {5, 2, 3}, {6, 2, 3}, {4, 4, 2}, {3, 4, 2}, {5, 2, 5}}) {
        Context ctx{n, q, d};
        if (n > d * (d + 1) / 2 || !ctx.standing_hypothesis()) continue;
        ++seen;
        EXPECT_TRUE(unipotent_blocks(ctx).same_as(combinatorial_blocks(n, d))) << to_string(ctx);
    }
    EXPECT_GE(seen, 5);
}

TEST(Blocks, WeightTwoBlocksMatchCores)
{
    // any d with F ≥ 2: every weight-2 core class is one computed block
    for (const auto& ctx : std::vector<Context>{{4, 3, 2}, {5, 3, 2}, {6, 2, 3}, {7, 2, 3}, {8, 2, 3}, {8, 2, 4}, {9, 2, 4}}) {
        ASSERT_GE(ctx.F(), 2);
        auto computed = unipotent_blocks(ctx);
        int groups = 0;
        for (const auto& block : combinatorial_blocks(ctx.n, ctx.d).blocks) {
            if (d_weight(block.front(), ctx.d) != 2) continue;
            ++groups;
            EXPECT_EQ(computed.blocks[computed.block_of(block.front())], block) << to_string(ctx);
        }
        EXPECT_GT(groups, 0) << to_string(ctx);
    }
}

TEST(Blocks, EdgeCases)
{
    // d = 1: one block
    for (int n = 1; n <= 4; ++n) EXPECT_EQ(unipotent_blocks(Context{n, 3, 1}).blocks.size(), 1u);
    // d > n: every character alone
    EXPECT_EQ(unipotent_blocks(Context{3, 2, 4}).blocks.size(), partitions_of(3).size());
    EXPECT_EQ(combinatorial_blocks(3, 4).blocks.size(), partitions_of(3).size());
    EXPECT_EQ(combinatorial_blocks(4, 2).blocks.size(), 1u);
    EXPECT_EQ(combinatorial_blocks(4, 1).blocks.size(), 1u);
    // weight-0 characters are singletons
    for (const auto& ctx : small_contexts()) {
        auto blocks = unipotent_blocks(ctx);
        for (const auto& nu : partitions_of(ctx.n))
            if (d_weight(nu, ctx.d) == 0) {
                EXPECT_EQ(blocks.blocks[blocks.block_of(nu)].size(), 1u) << to_string(nu);
            }
    }
}

TEST(Blocks, CentralizerBlocks)
{
    Context ctx{4, 3, 2};
    auto f2 = enumerate_irreducibles(3, 2)[0];
    auto whole = centralizer_blocks(SectionLabel{GLClassLabel(3, {{f2, Partition{1, 1}}})}, ctx);
    EXPECT_EQ(whole.l, 0);
    EXPECT_EQ(whole.blocks.blocks.size(), 1u);
    auto half = centralizer_blocks(SectionLabel{GLClassLabel(3, {{f2, Partition{1}}})}, ctx);
    EXPECT_EQ(half.l, 2);
    EXPECT_EQ(half.blocks.blocks.size(), 1u);  // partitions of 2 share the empty 2-core
    auto lin = enumerate_irreducibles(3, 1)[0];
    EXPECT_THROW(centralizer_blocks(SectionLabel{GLClassLabel(3, {{lin, Partition{1}}})}, ctx), std::invalid_argument);
    // l < d: singletons
    Context ctx3{4, 2, 3};
    auto cubic = enumerate_irreducibles(2, 3)[0];
    auto small = centralizer_blocks(SectionLabel{GLClassLabel(2, {{cubic, Partition{1}}})}, ctx3);
    EXPECT_EQ(small.l, 1);
    EXPECT_EQ(small.blocks.blocks.size(), 1u);
}

TEST(ClosedForm, MatchesComputedInnerProducts)
{
    int checked = 0;
    for (const auto& ctx : small_contexts()) {
        if (!ctx.standing_hypothesis()) continue;
        const auto& labels = partitions_of(ctx.n);
        for (const auto& lambda : labels)
            for (const auto& mu : labels) {
                if (lambda == mu || d_core(lambda, ctx.d) != d_core(mu, ctx.d) || d_weight(lambda, ctx.d) < 1) continue;
                if (!is_simple(mu, ctx.d) || !disjoint(lambda, mu, ctx.d)) continue;
                ++checked;
                EXPECT_EQ(inner_product(lambda, mu, Domain::d_regular(), ctx), theorem46_rhs(lambda, mu, ctx)) << to_string(ctx) << to_string(lambda) << to_string(mu);
            }
    }
    EXPECT_GT(checked, 0);
}

TEST(ClosedForm, PathCountsAgreeWithQuotientFormula)
{
    for (const auto& lambda : partitions_of(9))
        for (int d = 2; d <= 4; ++d) EXPECT_EQ(BigInt(count_removal_paths(lambda, d)), path_count_oracle(lambda, d));
}

TEST(ClosedForm, SpecValue)
{
    Context ctx{3, 3, 2};
    EXPECT_EQ(theorem46_rhs({1, 1, 1}, {3}, ctx), Rational(3, 8));
    EXPECT_EQ(inner_product({1, 1, 1}, {3}, Domain::d_regular(), ctx), Rational(3, 8));
    EXPECT_EQ(weight_one_singular_value({3}, {1, 1, 1}, ctx), Rational(-3, 8));
}

TEST(ClosedForm, Hypotheses)
{
    Context ctx{3, 2, 2};
    EXPECT_THROW(theorem46_rhs({1, 1, 1}, {3}, ctx), HypothesisViolation);
    Context good{4, 3, 2};
    EXPECT_THROW(theorem46_rhs({3, 1}, {4}, good), HypothesisViolation);
    EXPECT_THROW(theorem46_closed_form({4}, {3, 1}, 3, 3, BigInt(2)), HypothesisViolation);
    EXPECT_THROW(weight_one_singular_value({2, 2}, {4}, good), HypothesisViolation);
}

TEST(WeightOne, SingularValue)
{
    int checked = 0;
    for (auto ctx : std::vector<Context>{{3, 3, 2}, {5, 3, 2}, {4, 2, 3}, {3, 2, 3}, {4, 4, 3}, {5, 2, 5}}) {
        if (!ctx.standing_hypothesis()) continue;
        const auto& labels = partitions_of(ctx.n);
        for (std::size_t a = 0; a < labels.size(); ++a)
            for (std::size_t b = a + 1; b < labels.size(); ++b) {
                const auto& lambda = labels[a];
                const auto& mu = labels[b];
                if (d_weight(lambda, ctx.d) != 1 || d_core(lambda, ctx.d) != d_core(mu, ctx.d)) continue;
                ++checked;
                auto value = weight_one_singular_value(lambda, mu, ctx);
                EXPECT_EQ(inner_product(lambda, mu, Domain::d_singular(), ctx), value);
                EXPECT_EQ(inner_product(lambda, mu, Domain::d_regular(), ctx), -value);
            }
    }
    EXPECT_GT(checked, 5);
}

TEST(LinkChain, ValidChains)
{
    for (const auto& ctx : std::vector<Context>{{3, 3, 2}, {5, 3, 2}, {4, 2, 3}, {6, 2, 3}, {5, 2, 5}}) {
        const auto& data = context_data(ctx);
        const auto& labels = partitions_of(ctx.n);
        for (const auto& lambda : labels)
            for (const auto& mu : labels) {
                if (d_core(lambda, ctx.d) != d_core(mu, ctx.d)) continue;
                auto chain = link_chain(lambda, mu, ctx);
                ASSERT_EQ(chain.chain.front(), lambda);
                ASSERT_EQ(chain.chain.back(), mu);
                ASSERT_EQ(chain.kinds.size() + 1, chain.chain.size());
                for (std::size_t i = 0; i + 1 < chain.chain.size(); ++i) {
                    auto ip = data.inner(data.table->label_index(chain.chain[i]), data.table->label_index(chain.chain[i + 1]), Domain::d_regular());
                    EXPECT_NE(ip, 0) << to_string(ctx) << " " << to_string(chain.chain[i]) << " " << to_string(chain.chain[i + 1]);
                }
            }
    }
    Context ctx{4, 3, 2};
    auto same = link_chain({3, 1}, {3, 1}, ctx);
    EXPECT_EQ(same.chain.size(), 1u);
    EXPECT_THROW(link_chain({3}, {2, 1}, Context{3, 2, 2}), HypothesisViolation);
}

TEST(LinkChain, SimpleDisjointPairIsOneLink)
{
    Context ctx{5, 3, 2};
    for (const auto& lambda : partitions_of(5))
        for (const auto& mu : partitions_of(5))
            if (closed_form_link(lambda, mu, 2) && d_weight(lambda, 2) >= 2) {
                auto chain = link_chain(lambda, mu, ctx);
                EXPECT_EQ(chain.chain.size(), 2u);
                EXPECT_EQ(chain.kinds, std::vector<LinkKind>{LinkKind::closed_form});
            }
}

TEST(CountingIdentity, Values)
{
    EXPECT_TRUE(lemma49_check(1, 7));
    auto r = lemma49_evaluate(3, Rational(5));
    EXPECT_EQ(r.lhs, Rational(125, 6));
    EXPECT_EQ(r.rhs, Rational(125, 6));
    for (int k = 1; k <= 8; ++k)
        for (int F = k; F <= 12; ++F) EXPECT_TRUE(lemma49_check(k, F)) << k << " " << F;
    for (int k = 1; k <= 5; ++k) EXPECT_TRUE(lemma49_polynomial_check(k));
    EXPECT_THROW(lemma49_evaluate(0, Rational(1)), std::invalid_argument);
}

TEST(SecondMainTheorem, SmallContexts)
{
    for (const auto& ctx : std::vector<Context>{{3, 3, 2}, {4, 3, 2}, {4, 2, 2}, {4, 2, 3}}) {
        auto report = smt_check(ctx);
        EXPECT_TRUE(report.ok()) << to_string(ctx) << (report.failures.empty() ? "" : " " + report.failures.front());
        EXPECT_EQ(report.classes_checked, all_classes(ctx.n, ctx.q).size());
    }
}
