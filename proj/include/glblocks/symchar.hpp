#pragma once

// Characters of the symmetric groups by the Murnaghan–Nakayama rule, signed
// hook-removal coefficients and KOR ℓ-blocks.

#include "glblocks/components.hpp"
#include "glblocks/exact.hpp"
#include "glblocks/memo.hpp"
#include "glblocks/partition.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace glblocks {

/// Cycle lengths of a permutation class, as a partition.
using CycleType = Partition;

/// z_α = Π_i i^{r_i} r_i!
inline BigInt z_alpha(const CycleType& alpha)
{
    BigInt z = 1;
    std::map<int, int> multiplicities;
    for (int part : alpha.parts()) ++multiplicities[part];
    for (auto [part, r] : multiplicities)
        for (int j = 1; j <= r; ++j) z *= BigInt(part) * j;
    return z;
}

/// ᾱ = (d^{r_1}, (2d)^{r_2}, ...).
inline CycleType scaled(const CycleType& alpha, int d)
{
    std::vector<int> parts = alpha.parts();
    for (int& part : parts) part *= d;
    return Partition(std::move(parts));
}

/// Sign character value on a class of the given cycle type.
inline int permutation_sign(const CycleType& rho)
{
    int even_cycles = 0;
    for (int part : rho.parts())
        if (part % 2 == 0) ++even_cycles;
    return even_cycles % 2 == 0 ? 1 : -1;
}

namespace detail {

inline Memo<std::pair<Partition, Partition>, BigInt>& sn_char_memo()
{
    static Memo<std::pair<Partition, Partition>, BigInt> memo;
    return memo;
}

// Peels cycles in the order given by `order` (indices into rho's parts).
inline BigInt sn_char_ordered(const Partition& lambda, std::vector<int> cycles)
{
    if (cycles.empty()) return lambda.empty() ? 1 : 0;
    int h = cycles.front();
    cycles.erase(cycles.begin());
    BigInt total = 0;
    for (const auto& hook : rim_hooks(lambda, h)) {
        BigInt sub = sn_char_ordered(hook.result, cycles);
        total += hook.leg_length % 2 ? BigInt(-sub) : sub;
    }
    return total;
}

}  // namespace detail

/// φ_λ(ρ), peeling the largest cycle first; memoized process-wide.
inline BigInt sn_char(const Partition& lambda, const CycleType& rho)
{
    if (lambda.size() != rho.size())
        throw std::invalid_argument("sn_char: |" + to_string(lambda) + "| != |" + to_string(rho) + "|");
    if (lambda.empty()) return 1;
    auto key = std::make_pair(lambda, rho);
    return detail::sn_char_memo().get_or_compute(key, [&] {
        int h = rho[0];
        std::vector<int> rest(rho.parts().begin() + 1, rho.parts().end());
        CycleType smaller(rest);
        BigInt total = 0;
        for (const auto& hook : rim_hooks(lambda, h)) {
            BigInt sub = sn_char(hook.result, smaller);
            total += hook.leg_length % 2 ? BigInt(-sub) : sub;
        }
        return total;
    });
}

/// φ_λ(ρ) peeling cycles in the caller's order; unmemoized, used to
/// cross-check order independence.
inline BigInt sn_char_with_order(const Partition& lambda, const std::vector<int>& cycles)
{
    return detail::sn_char_ordered(lambda, cycles);
}

/// Signed sums over removal sequences of hooks of lengths d·α_1, d·α_2, ...
/// (largest first) from μ, keyed by the partition reached. Zero entries dropped.
inline std::map<Partition, BigInt> phi_coeffs(const Partition& mu, const CycleType& alpha, int d)
{
    if (mu.size() < alpha.size() * d) return {};
    std::map<Partition, BigInt> layer{{mu, 1}};
    for (int part : alpha.parts()) {
        std::map<Partition, BigInt> next;
        for (const auto& [node, coeff] : layer)
            for (const auto& hook : rim_hooks(node, part * d))
                next[hook.result] += hook.leg_length % 2 ? BigInt(-coeff) : coeff;
        layer.clear();
        for (auto& [node, coeff] : next)
            if (coeff != 0) layer.emplace(node, std::move(coeff));
    }
    return layer;
}

/// ε_{μη} φ_{μ|η}(α): the entry of phi_coeffs at η.
inline BigInt phi_coeff(const Partition& mu, const Partition& eta, const CycleType& alpha, int d)
{
    if (mu.size() - eta.size() != alpha.size() * d)
        throw std::invalid_argument("phi_coeff: size mismatch between " + to_string(mu) + " and " + to_string(eta));
    if (!l_sets(mu, d, alpha.size(), LSetMode::iterate).count(eta))
        throw std::invalid_argument("phi_coeff: " + to_string(eta) + " is not reachable from " + to_string(mu));
    auto layer = phi_coeffs(mu, alpha, d);
    auto it = layer.find(eta);
    return it == layer.end() ? BigInt(0) : it->second;
}

/// No cycle length divisible by ℓ.
inline bool is_l_regular(const CycleType& rho, int l)
{
    for (int part : rho.parts())
        if (part % l == 0) return false;
    return true;
}

/// Σ over ℓ-regular classes of φ_λ(α) φ_μ(α) / z_α.
inline Rational sn_l_regular_product(const Partition& lambda, const Partition& mu, int l)
{
    Rational total = 0;
    for (const auto& alpha : partitions_of(lambda.size()))
        if (is_l_regular(alpha, l)) total += Rational(sn_char(lambda, alpha) * sn_char(mu, alpha), z_alpha(alpha));
    return total;
}

/// ℓ-blocks of S_n: components of direct linking across ℓ-regular classes.
inline std::vector<std::vector<Partition>> sn_l_blocks(int n, int l)
{
    if (n < 1 || l < 2) throw std::invalid_argument("sn_l_blocks needs n >= 1 and l >= 2");
    auto labels = partitions_of(n);
    auto groups = detail::connected_components(labels.size(), [&](std::size_t i, std::size_t j) {
        return sn_l_regular_product(labels[i], labels[j], l) != 0;
    });
    std::vector<std::vector<Partition>> blocks;
    for (const auto& group : groups) {
        std::vector<Partition> block;
        for (auto i : group) block.push_back(labels[i]);
        blocks.push_back(std::move(block));
    }
    return blocks;
}

/// Grouping of partitions of n by ℓ-core, in the same member ordering.
inline std::vector<std::vector<Partition>> core_grouping(int n, int l)
{
    auto labels = partitions_of(n);
    auto groups = detail::connected_components(
        labels.size(), [&](std::size_t i, std::size_t j) { return d_core(labels[i], l) == d_core(labels[j], l); });
    std::vector<std::vector<Partition>> blocks;
    for (const auto& group : groups) {
        std::vector<Partition> block;
        for (auto i : group) block.push_back(labels[i]);
        blocks.push_back(std::move(block));
    }
    return blocks;
}

}  // namespace glblocks
