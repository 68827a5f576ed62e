#include "glblocks/qarith.hpp"

#include <gtest/gtest.h>

using namespace glblocks;

namespace {

// Every monic of degree d that is a product of two monics of positive degree.
std::set<FqPoly> reducible_monics(int q, int d)
{
    const FiniteField& F = field(q);
    auto monics = [&](int deg) {
        std::vector<FqPoly> out;
        long long total = 1;
        for (int i = 0; i < deg; ++i) total *= q;
        for (long long code = 0; code < total; ++code) {
            FqPoly f(static_cast<std::size_t>(deg + 1));
            long long c = code;
            for (int i = 0; i < deg; ++i) {
                f[static_cast<std::size_t>(i)] = static_cast<int>(c % q);
                c /= q;
            }
            f[static_cast<std::size_t>(deg)] = 1;
            out.push_back(f);
        }
        return out;
    };
    std::set<FqPoly> out;
    for (int a = 1; 2 * a <= d; ++a)
        for (const auto& f : monics(a))
            for (const auto& g : monics(d - a)) out.insert(poly_mul(f, g, F));
    return out;
}

}  // namespace

TEST(PrimePower, Decomposition)
{
    EXPECT_EQ(PrimePower::of(8), (PrimePower{2, 3, 8}));
    EXPECT_EQ(PrimePower::of(9), (PrimePower{3, 2, 9}));
    EXPECT_EQ(PrimePower::of(7), (PrimePower{7, 1, 7}));
    EXPECT_THROW(PrimePower::of(6), std::invalid_argument);
    EXPECT_THROW(PrimePower::of(1), std::invalid_argument);
}

TEST(Mobius, SmallValues)
{
    std::vector<int> expected{1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0};
    for (int n = 1; n <= 12; ++n) EXPECT_EQ(mobius(n), expected[static_cast<std::size_t>(n - 1)]) << n;
}

TEST(FiniteField, FieldAxioms)
{
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
        const FiniteField& F = field(q);
        EXPECT_EQ(F.minus_one(), F.neg(1));
        for (int a = 0; a < q; ++a) {
            EXPECT_EQ(F.add(a, F.neg(a)), 0);
            if (a) {
                EXPECT_EQ(F.mul(a, F.inv(a)), 1);
                int power = 1;
                for (int i = 0; i < q - 1; ++i) power = F.mul(power, a);
                EXPECT_EQ(power, 1);
            }
            for (int b = 0; b < q; ++b) {
                EXPECT_EQ(F.add(a, b), F.add(b, a));
                EXPECT_EQ(F.mul(a, b), F.mul(b, a));
                for (int c = 0; c < q; ++c) EXPECT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
            }
        }
        // characteristic: p·1 = 0
        int s = 0;
        for (int i = 0; i < F.characteristic(); ++i) s = F.add(s, 1);
        EXPECT_EQ(s, 0);
    }
}

TEST(CountIrreducibles, SpecExamples)
{
    EXPECT_EQ(count_irreducibles(2, 2), 1);
    EXPECT_EQ(count_irreducibles(3, 2), 3);
    EXPECT_EQ(count_irreducibles(2, 1), 1);
    EXPECT_EQ(count_irreducibles(2, 1, {}), 2);
    EXPECT_EQ(count_irreducibles(3, 1, {Distinguished::x, Distinguished::x_minus_one}), 1);
    // necklace counts over F_2: 2, 1, 2, 3, 6, 9, 18 with X included in degree 1
    std::vector<int> f2{1, 1, 2, 3, 6, 9, 18};
    for (int d = 1; d <= 7; ++d) EXPECT_EQ(count_irreducibles(2, d), f2[static_cast<std::size_t>(d - 1)]);
}

TEST(EnumerateIrreducibles, SpecExamples)
{
    auto quad = enumerate_irreducibles(2, 2);
    ASSERT_EQ(quad.size(), 1u);
    EXPECT_EQ(quad[0].coeffs, (FqPoly{1, 1, 1}));
    EXPECT_EQ(to_string(quad[0]), "x^2+x+1");
    auto lin = enumerate_irreducibles(3, 1);
    ASSERT_EQ(lin.size(), 2u);
    EXPECT_EQ(to_string(lin[0]), "x+1");
    EXPECT_EQ(to_string(lin[1]), "x+2");
    EXPECT_TRUE(is_x_minus_one(lin[1]));
    EXPECT_EQ(x_minus_one(3), lin[1]);
    auto cubic = enumerate_irreducibles(2, 3);
    ASSERT_EQ(cubic.size(), 2u);
    EXPECT_EQ(to_string(cubic[0]), "x^3+x+1");
    EXPECT_EQ(to_string(cubic[1]), "x^3+x^2+1");
}

TEST(EnumerateIrreducibles, MatchesSieveAndCount)
{
    for (auto [q, maxd] : std::vector<std::pair<int, int>>{{2, 6}, {3, 4}, {4, 3}, {5, 3}, {8, 2}, {9, 2}}) {
        for (int d = 1; d <= maxd; ++d) {
            const auto& list = enumerate_irreducibles(q, d);
            EXPECT_EQ(BigInt(list.size()), count_irreducibles(q, d)) << q << " " << d;
            auto reducible = reducible_monics(q, d);
            for (std::size_t i = 0; i < list.size(); ++i) {
                EXPECT_EQ(list[i].index, static_cast<int>(i));
                EXPECT_EQ(list[i].degree, d);
                EXPECT_FALSE(reducible.count(list[i].coeffs));
                if (i) {
                    EXPECT_TRUE(list[i - 1] < list[i]);
                }
            }
            long long monics = 1;
            for (int i = 0; i < d; ++i) monics *= q;
            // monics = irreducibles + reducibles (+ X itself in degree 1)
            EXPECT_EQ(static_cast<long long>(list.size() + reducible.size()) + (d == 1 ? 1 : 0), monics);
        }
    }
}

TEST(EnumerateIrreducibles, ScaleGuard)
{
    EXPECT_THROW(enumerate_irreducibles(2, 21), ScaleGuard);
}

TEST(Orders, SpecExamples)
{
    EXPECT_EQ(gl_order(2, 2), 6);
    EXPECT_EQ(gl_order(3, 2), 168);
    EXPECT_EQ(gl_order(2, 3), 48);
    EXPECT_EQ(gl_order(4, 2), 20160);
    for (int q : {2, 3, 4, 5}) EXPECT_EQ(gl_order(1, q), q - 1);
    EXPECT_EQ(gl_order_p_prime(3, 2), 21);
}

TEST(Orders, Torus)
{
    for (int q : {2, 3}) {
        for (int d = 1; d <= 3; ++d) {
            BigInt qd = ipow(BigInt(q), static_cast<unsigned>(d));
            EXPECT_EQ(torus_order({1, 1, 1}, d, q), ipow(qd - 1, 3));
            EXPECT_EQ(torus_order({2}, d, q), qd * qd - 1);
        }
    }
    EXPECT_EQ(torus_order({2, 1}, 1, 2), 3);
}

TEST(Orders, PrimaryCentralizer)
{
    for (int t : {2, 3, 4, 5, 9}) {
        BigInt T(t);
        EXPECT_EQ(primary_centralizer_order({1}, T), T - 1);
        EXPECT_EQ(primary_centralizer_order({1, 1}, T), gl_order(2, t));
        EXPECT_EQ(primary_centralizer_order({1, 1, 1}, T), gl_order(3, t));
        EXPECT_EQ(primary_centralizer_order({2}, T), T * (T - 1));
        EXPECT_EQ(primary_centralizer_order({3}, T), T * T * (T - 1));
    }
}
