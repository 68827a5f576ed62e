#pragma once

// Inner products of unipotent characters over d-regular elements, d-singular
// elements and sections; unipotent d-blocks, the closed form for simple
// disjoint pairs, linking chains, the counting identity behind the closed
// form, and the Second Main Theorem reconstruction.

#include "glblocks/charvalue.hpp"
#include "glblocks/components.hpp"
#include "glblocks/exact.hpp"
#include "glblocks/glclass.hpp"
#include "glblocks/memo.hpp"
#include "glblocks/partition.hpp"
#include "glblocks/qarith.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace glblocks {

struct Context {
    int n = 1;
    int q = 2;
    int d = 1;
    Variant variant = Variant::divisible;

    void validate() const
    {
        if (n < 1) throw std::invalid_argument("n must be positive");
        if (d < 1) throw std::invalid_argument("d must be positive");
        PrimePower::of(q);
    }

    /// F = number of monic irreducibles of degree d other than X (and X−1 when d = 1).
    BigInt F() const
    {
        if (d == 1) return count_irreducibles(q, 1, {Distinguished::x, Distinguished::x_minus_one});
        return count_irreducibles(q, d);
    }

    /// The standing hypothesis F ≥ n/d.
    bool standing_hypothesis() const { return F() * d >= n; }

    auto key() const { return std::make_tuple(n, q, d, variant); }
    friend bool operator==(const Context& a, const Context& b) { return a.key() == b.key(); }
};

inline std::string to_string(const Context& c)
{
    return "GL(" + std::to_string(c.n) + "," + std::to_string(c.q) + "), d=" + std::to_string(c.d) + ", " + to_string(c.variant);
}

enum class DomainKind { d_regular, d_singular, section, full };

struct Domain {
    DomainKind kind = DomainKind::full;
    SectionLabel section;  // used when kind == section

    static Domain d_regular() { return {DomainKind::d_regular, {}}; }
    static Domain d_singular() { return {DomainKind::d_singular, {}}; }
    static Domain full() { return {DomainKind::full, {}}; }
    static Domain of_section(SectionLabel s) { return {DomainKind::section, std::move(s)}; }
};

inline std::string to_string(const Domain& dom)
{
    switch (dom.kind) {
    case DomainKind::d_regular: return "d_regular";
    case DomainKind::d_singular: return "d_singular";
    case DomainKind::full: return "full";
    case DomainKind::section: return "section" + to_string(dom.section);
    }
    return "?";
}

/// Per-context class data: the value table, the regular flags and the sections.
struct ContextData {
    Context ctx;
    const CharValueTable* table = nullptr;
    std::vector<bool> regular;                        // per class
    std::vector<SectionLabel> section_of;             // per class
    std::map<SectionLabel, std::vector<std::size_t>> sections;
    std::vector<BigInt> centralizer;                  // per class

    bool in_domain(std::size_t j, const Domain& dom) const
    {
        switch (dom.kind) {
        case DomainKind::full: return true;
        case DomainKind::d_regular: return regular[j];
        case DomainKind::d_singular: return !regular[j];
        case DomainKind::section: return section_of[j] == dom.section;
        }
        return false;
    }

    Rational inner(std::size_t a, std::size_t b, const Domain& dom) const
    {
        Rational total = 0;
        for (std::size_t j = 0; j < table->classes.size(); ++j)
            if (in_domain(j, dom)) total += Rational(table->value[a][j] * table->value[b][j], centralizer[j]);
        return total;
    }

    /// Full matrix of inner products over the domain, indexed like table->labels.
    std::vector<std::vector<Rational>> matrix(const Domain& dom) const
    {
        std::size_t m = table->labels.size();
        std::vector<std::vector<Rational>> out(m, std::vector<Rational>(m));
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = a; b < m; ++b) out[a][b] = out[b][a] = inner(a, b, dom);
        return out;
    }
};

inline const ContextData& context_data(const Context& ctx)
{
    ctx.validate();
    static detail::Memo<std::tuple<int, int, int, Variant>, std::shared_ptr<const ContextData>> cache;
    return *cache.get_or_compute(ctx.key(), [&] {
        auto data = std::make_shared<ContextData>();
        data->ctx = ctx;
        data->table = &char_value_table(ctx.n, ctx.q);
        for (std::size_t j = 0; j < data->table->classes.size(); ++j) {
            const auto& c = data->table->classes[j];
            data->regular.push_back(is_d_regular(c, ctx.d, ctx.variant));
            SectionLabel s{xy_decompose(c, ctx.d, ctx.variant).x_part};
            data->section_of.push_back(s);
            data->sections[s].push_back(j);
            data->centralizer.push_back(centralizer_order(c));
        }
        return std::shared_ptr<const ContextData>(std::move(data));
    });
}

inline Rational inner_product(const Partition& nu, const Partition& nu2, const Domain& dom, const Context& ctx)
{
    const auto& data = context_data(ctx);
    return data.inner(data.table->label_index(nu), data.table->label_index(nu2), dom);
}

// ---------------------------------------------------------------------------
// Closed form for a simple partition disjoint from another

struct HypothesisViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// (−1)^w F^w / (w! (q^d−1)^w) · |P^λ_γ| |P^μ_γ| ε_λ ε_μ, checking only that λ, μ
/// share core and weight w ≥ 1 and that one is simple and disjoint from the other.
inline Rational theorem46_closed_form(const Partition& lambda, const Partition& mu, int q, int d, const BigInt& F)
{
    if (lambda.size() != mu.size()) throw HypothesisViolation("partitions of different sizes");
    auto core = d_core(lambda, d);
    if (d_core(mu, d) != core) throw HypothesisViolation(to_string(lambda) + " and " + to_string(mu) + " have different d-cores");
    int w = d_weight(lambda, d);
    if (w < 1) throw HypothesisViolation("weight must be at least 1");
    bool one_simple = (is_simple(mu, d) || is_simple(lambda, d));
    if (!one_simple || !disjoint(lambda, mu, d))
        throw HypothesisViolation("neither partition is simple and disjoint from the other");
    BigInt factorial = 1;
    for (int i = 2; i <= w; ++i) factorial *= i;
    BigInt paths = BigInt(count_removal_paths(lambda, d)) * BigInt(count_removal_paths(mu, d));
    Rational value(ipow(F, static_cast<unsigned>(w)) * paths * epsilon(lambda, d) * epsilon(mu, d),
                   factorial * ipow(ipow(BigInt(q), static_cast<unsigned>(d)) - 1, static_cast<unsigned>(w)));
    return w % 2 ? Rational(-value) : value;
}

/// The closed form under the full hypotheses: μ simple and disjoint from λ, F ≥ n/d.
inline Rational theorem46_rhs(const Partition& lambda, const Partition& mu, const Context& ctx)
{
    if (lambda.size() != ctx.n || mu.size() != ctx.n) throw HypothesisViolation("partitions must have size n");
    if (!is_simple(mu, ctx.d)) throw HypothesisViolation(to_string(mu) + " is not simple");
    if (!ctx.standing_hypothesis()) throw HypothesisViolation("F >= n/d fails for " + to_string(ctx));
    return theorem46_closed_form(lambda, mu, ctx.q, ctx.d, ctx.F());
}

/// Same-core weight-1 pair, λ ≠ μ: F/(q^d−1) ε_λ ε_μ over d-singular elements.
inline Rational weight_one_singular_value(const Partition& lambda, const Partition& mu, const Context& ctx)
{
    if (d_weight(lambda, ctx.d) != 1 || d_weight(mu, ctx.d) != 1 || d_core(lambda, ctx.d) != d_core(mu, ctx.d))
        throw HypothesisViolation("weight-1 value needs two weight-1 partitions with one core");
    return Rational(ctx.F() * epsilon(lambda, ctx.d) * epsilon(mu, ctx.d), ipow(BigInt(ctx.q), static_cast<unsigned>(ctx.d)) - 1);
}

// ---------------------------------------------------------------------------
// Blocks

enum class BlockKind { computed, combinatorial };

struct BlockPartition {
    std::vector<std::vector<Partition>> blocks;
    BlockKind kind = BlockKind::computed;

    std::size_t block_of(const Partition& p) const
    {
        for (std::size_t i = 0; i < blocks.size(); ++i)
            if (std::find(blocks[i].begin(), blocks[i].end(), p) != blocks[i].end()) return i;
        throw std::invalid_argument(to_string(p) + " is in no block");
    }

    /// Every block of this partition lies inside one block of `coarser`.
    bool refines(const BlockPartition& coarser) const
    {
        for (const auto& block : blocks) {
            std::size_t target = coarser.block_of(block.front());
            for (const auto& p : block)
                if (coarser.block_of(p) != target) return false;
        }
        return true;
    }

    bool same_as(const BlockPartition& other) const { return refines(other) && other.refines(*this); }
};

inline BlockPartition unipotent_blocks(const Context& ctx)
{
    const auto& data = context_data(ctx);
    const auto& labels = data.table->labels;
    auto groups = detail::connected_components(labels.size(), [&](std::size_t a, std::size_t b) {
        return data.inner(a, b, Domain::d_regular()) != 0;
    });
    BlockPartition out{{}, BlockKind::computed};
    for (const auto& group : groups) {
        std::vector<Partition> block;
        for (auto i : group) block.push_back(labels[i]);
        out.blocks.push_back(std::move(block));
    }
    return out;
}

inline BlockPartition combinatorial_blocks(int n, int d)
{
    return BlockPartition{core_grouping(n, d), BlockKind::combinatorial};
}

/// Blocks of C_G(x) ≅ H_0 × GL(l,q) at the unipotent level: the Irr(H_0) factor
/// is left symbolic, the second factor is the d-blocks of GL(l,q).
struct CentralizerBlocks {
    int l = 0;
    BlockPartition blocks;
};

inline CentralizerBlocks centralizer_blocks(const SectionLabel& x, const Context& ctx)
{
    int l = ctx.n - x.x_class.n;
    if (l < 0) throw std::invalid_argument("section larger than n");
    if (!is_d_element(x.x_class, ctx.d, ctx.variant)) throw std::invalid_argument("section label is not a d-element");
    if (l == 0) return {0, BlockPartition{{{Partition()}}, BlockKind::computed}};
    return {l, unipotent_blocks(Context{l, ctx.q, ctx.d, ctx.variant})};
}

// ---------------------------------------------------------------------------
// Cross-core orthogonality over sections

struct SectionOrthogonalityReport {
    bool all_zero = true;
    std::size_t pairs_checked = 0;
    std::size_t sections_checked = 0;
    std::vector<std::tuple<Partition, Partition, SectionLabel, Rational>> failures;
};

/// Every pair with different d-cores has inner product exactly 0 over every section.
inline SectionOrthogonalityReport cross_core_section_check(const Context& ctx)
{
    const auto& data = context_data(ctx);
    const auto& labels = data.table->labels;
    SectionOrthogonalityReport report;
    report.sections_checked = data.sections.size();
    for (const auto& [section, members] : data.sections)
        for (std::size_t a = 0; a < labels.size(); ++a)
            for (std::size_t b = a + 1; b < labels.size(); ++b) {
                if (d_core(labels[a], ctx.d) == d_core(labels[b], ctx.d)) continue;
                Rational total = 0;
                for (auto j : members) total += Rational(data.table->value[a][j] * data.table->value[b][j], data.centralizer[j]);
                ++report.pairs_checked;
                if (total != 0) {
                    report.all_zero = false;
                    report.failures.emplace_back(labels[a], labels[b], section, total);
                }
            }
    return report;
}

// ---------------------------------------------------------------------------
// Linking chains

enum class LinkKind { closed_form, weight_one, computed };

inline std::string to_string(LinkKind k)
{
    switch (k) {
    case LinkKind::closed_form: return "closed_form";
    case LinkKind::weight_one: return "weight_one";
    case LinkKind::computed: return "computed";
    }
    return "?";
}

struct LinkChain {
    std::vector<Partition> chain;
    std::vector<LinkKind> kinds;  // kinds[i] links chain[i] and chain[i+1]
    std::string construction;     // which case of the construction produced it
};

/// One of the two is simple and disjoint from the other (same core and weight ≥ 1).
inline bool closed_form_link(const Partition& a, const Partition& b, int d)
{
    if (a == b || d_core(a, d) != d_core(b, d) || d_weight(a, d) < 1) return false;
    return (is_simple(a, d) || is_simple(b, d)) && disjoint(a, b, d);
}

namespace detail {

// Runner sets of size w in lexicographic order.
template <class Pred>
std::optional<std::set<int>> first_runner_set(int d, int w, Pred pred)
{
    std::vector<int> pick(static_cast<std::size_t>(w));
    std::function<std::optional<std::set<int>>(int, int)> rec = [&](int from, int depth) -> std::optional<std::set<int>> {
        if (depth == w) {
            std::set<int> s(pick.begin(), pick.end());
            if (pred(s)) return s;
            return std::nullopt;
        }
        for (int r = from; r < d; ++r) {
            pick[static_cast<std::size_t>(depth)] = r;
            if (auto s = rec(r + 1, depth + 1)) return s;
        }
        return std::nullopt;
    };
    return rec(0, 0);
}

template <class Pred>
std::optional<int> first_runner(int d, Pred pred)
{
    for (int r = 0; r < d; ++r)
        if (pred(r)) return r;
    return std::nullopt;
}

inline bool meets(const std::set<int>& a, const std::set<int>& b)
{
    for (int r : a)
        if (b.count(r)) return true;
    return false;
}

inline bool subset(const std::set<int>& a, const std::set<int>& b)
{
    for (int r : a)
        if (!b.count(r)) return false;
    return true;
}

// The abacus construction of a chain; nullopt when some step has no choice.
inline std::optional<LinkChain> constructive_chain(const Partition& lambda_in, const Partition& mu_in, int d)
{
    Partition lambda = lambda_in, mu = mu_in;
    auto core = d_core(lambda, d);
    int w = d_weight(lambda, d);
    bool swapped = false;
    if (!is_simple(lambda, d) && is_simple(mu, d)) {
        std::swap(lambda, mu);
        swapped = true;
    }
    auto U_l = runners_used(lambda, d), U_m = runners_used(mu, d);
    auto simple = [&](const std::set<int>& s) { return simple_on_runners(core, s, d); };
    auto single = [&](int r) { return single_runner(core, r, w, d); };
    std::vector<Partition> chain;
    std::string name;

    if (!is_simple(lambda, d)) {
        // both use at most w−1 runners
        auto S = first_runner_set(d, w, [&](const auto& s) { return !meets(s, U_l); });
        if (!S) return std::nullopt;
        auto nu = simple(*S);
        if (!subset(U_m, *S)) {
            auto r = first_runner(d, [&](int r) { return !S->count(r) && U_m.count(r); });
            if (!r) return std::nullopt;
            auto T = first_runner_set(d, w, [&](const auto& s) { return !meets(s, U_m) && !s.count(*r); });
            if (!T) return std::nullopt;
            chain = {lambda, nu, single(*r), simple(*T), mu};
            name = "both non-simple, mu not inside nu";
        } else {
            auto r = first_runner(d, [&](int r) { return !S->count(r) && !U_m.count(r); });
            if (!r) return std::nullopt;
            auto T = first_runner_set(d, w, [&](const auto& s) { return !s.count(*r) && !subset(U_m, s); });
            if (!T) return std::nullopt;
            auto r2 = first_runner(d, [&](int x) { return U_m.count(x) && !T->count(x); });
            if (!r2) return std::nullopt;
            auto T2 = first_runner_set(d, w, [&](const auto& s) { return !meets(s, U_m) && !s.count(*r2); });
            if (!T2) return std::nullopt;
            chain = {lambda, nu, single(*r), simple(*T), single(*r2), simple(*T2), mu};
            name = "both non-simple, mu inside nu";
        }
    } else if (!meets(U_l, U_m)) {
        chain = {lambda, mu};
        name = "disjoint, one simple";
    } else if (!is_simple(mu, d)) {
        if (subset(U_m, U_l)) {
            auto r = first_runner(d, [&](int r) { return !U_l.count(r); });
            if (!r) return std::nullopt;
            auto T = first_runner_set(d, w, [&](const auto& s) { return !s.count(*r) && !subset(U_m, s); });
            if (!T) return std::nullopt;
            auto r2 = first_runner(d, [&](int x) { return U_m.count(x) && !T->count(x); });
            if (!r2) return std::nullopt;
            auto T2 = first_runner_set(d, w, [&](const auto& s) { return !meets(s, U_m) && !s.count(*r2); });
            if (!T2) return std::nullopt;
            chain = {lambda, single(*r), simple(*T), single(*r2), simple(*T2), mu};
            name = "lambda simple, mu inside lambda";
        } else {
            auto r = first_runner(d, [&](int r) { return U_m.count(r) && !U_l.count(r); });
            if (!r) return std::nullopt;
            auto T = first_runner_set(d, w, [&](const auto& s) { return !meets(s, U_m) && !s.count(*r); });
            if (!T) return std::nullopt;
            chain = {lambda, single(*r), simple(*T), mu};
            name = "lambda simple, mu not inside lambda";
        }
    } else {
        auto free = first_runner(d, [&](int x) { return !U_l.count(x) && !U_m.count(x); });
        if (free) {
            chain = {lambda, single(*free), mu};
            name = "both simple, free runner";
        } else {
            auto r = first_runner(d, [&](int x) { return U_m.count(x) && !U_l.count(x); });
            if (!r) return std::nullopt;
            std::set<int> only_lambda;
            for (int x : U_l)
                if (!U_m.count(x)) only_lambda.insert(x);
            auto T = first_runner_set(d, w, [&](const auto& s) { return !s.count(*r) && !subset(only_lambda, s); });
            if (!T) return std::nullopt;
            auto s = first_runner(d, [&](int x) { return only_lambda.count(x) && !T->count(x); });
            if (!s) return std::nullopt;
            chain = {lambda, single(*r), simple(*T), single(*s), mu};
            name = "both simple, no free runner";
        }
    }
    if (swapped) std::reverse(chain.begin(), chain.end());
    // collapse repeated entries
    std::vector<Partition> dedup;
    for (auto& p : chain)
        if (dedup.empty() || dedup.back() != p) dedup.push_back(std::move(p));
    LinkChain out;
    out.chain = std::move(dedup);
    out.construction = name;
    for (std::size_t i = 0; i + 1 < out.chain.size(); ++i) {
        if (!closed_form_link(out.chain[i], out.chain[i + 1], d)) return std::nullopt;
        out.kinds.push_back(LinkKind::closed_form);
    }
    return out;
}

// Shortest path in a link graph on the same-core same-weight partitions of n.
template <class Linked>
std::optional<std::vector<Partition>> bfs_chain(const Partition& from, const Partition& to, int d, Linked linked)
{
    auto core = d_core(from, d);
    std::vector<Partition> nodes;
    for (const auto& p : partitions_of(from.size()))
        if (d_core(p, d) == core) nodes.push_back(p);
    std::map<Partition, Partition> parent;
    std::deque<Partition> queue{from};
    parent.emplace(from, from);
    while (!queue.empty()) {
        auto cur = queue.front();
        queue.pop_front();
        if (cur == to) break;
        for (const auto& next : nodes)
            if (!parent.count(next) && linked(cur, next)) {
                parent.emplace(next, cur);
                queue.push_back(next);
            }
    }
    if (!parent.count(to)) return std::nullopt;
    std::vector<Partition> path{to};
    while (path.back() != from) path.push_back(parent.at(path.back()));
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace detail

/// Scale limit for falling back to directly computed inner products.
inline constexpr std::size_t kComputedLinkClassLimit = 4000;

/// A chain λ = χ_0, ..., χ_r = μ in which consecutive terms are directly linked
/// across d-regular elements. The abacus construction is tried first (w > 2),
/// then shortest paths over closed-form links, then over computed links when
/// the value table of GL(n,q) is within reach.
inline LinkChain link_chain(const Partition& lambda, const Partition& mu, const Context& ctx)
{
    int d = ctx.d;
    if (lambda.size() != ctx.n || mu.size() != ctx.n) throw std::invalid_argument("link_chain: partitions must have size n");
    if (d_core(lambda, d) != d_core(mu, d)) throw HypothesisViolation("link_chain: different d-cores");
    int w = d_weight(lambda, d);
    if (lambda == mu) return {{lambda}, {}, "identical"};
    if (w == 1) return {{lambda, mu}, {LinkKind::weight_one}, "weight one"};
    if (w > 2 && d >= 2 * w - 1)
        if (auto chain = detail::constructive_chain(lambda, mu, d)) return *chain;
    if (auto path = detail::bfs_chain(lambda, mu, d, [&](const auto& a, const auto& b) { return closed_form_link(a, b, d); })) {
        LinkChain out{*path, std::vector<LinkKind>(path->size() - 1, LinkKind::closed_form), "closed-form link graph"};
        return out;
    }
    // computed links need the value table
    long long estimate = 1;
    for (int i = 0; i < ctx.n && estimate <= static_cast<long long>(kComputedLinkClassLimit); ++i) estimate *= ctx.q;
    if (estimate > static_cast<long long>(kComputedLinkClassLimit))
        throw Infeasible("no closed-form chain from " + to_string(lambda) + " to " + to_string(mu) + " and " + to_string(ctx) +
                         " is too large for computed links");
    const auto& data = context_data(ctx);
    auto path = detail::bfs_chain(lambda, mu, d, [&](const auto& a, const auto& b) {
        return data.inner(data.table->label_index(a), data.table->label_index(b), Domain::d_regular()) != 0;
    });
    if (!path) throw Infeasible(to_string(lambda) + " and " + to_string(mu) + " lie in different computed blocks");
    LinkChain out{*path, {}, "computed link graph"};
    for (std::size_t i = 0; i + 1 < path->size(); ++i)
        out.kinds.push_back(closed_form_link((*path)[i], (*path)[i + 1], d) ? LinkKind::closed_form : LinkKind::computed);
    return out;
}

// ---------------------------------------------------------------------------
// The counting identity

struct Lemma49Result {
    Rational lhs;
    Rational rhs;
    bool equal = false;
};

/// Σ_{π ⊢ k, r parts} F(F−1)…(F−r+1) / Π_i (i!)^{r_i} r_i!  versus  F^k / k!.
inline Lemma49Result lemma49_evaluate(int k, const Rational& F)
{
    if (k < 1) throw std::invalid_argument("k must be positive");
    Rational lhs = 0;
    for (const auto& pi : partitions_of(k)) {
        Rational falling = 1;
        for (int j = 0; j < pi.length(); ++j) falling *= F - j;
        BigInt den = 1;
        for (int i = 1; i <= k; ++i) {
            int r = pi.multiplicity(i);
            if (!r) continue;
            BigInt fact_i = 1;
            for (int j = 2; j <= i; ++j) fact_i *= j;
            den *= ipow(fact_i, static_cast<unsigned>(r));
            for (int j = 2; j <= r; ++j) den *= j;
        }
        lhs += falling / Rational(den);
    }
    BigInt k_fact = 1;
    for (int j = 2; j <= k; ++j) k_fact *= j;
    Rational rhs = F;
    for (int j = 1; j < k; ++j) rhs *= F;
    rhs /= Rational(k_fact);
    return {lhs, rhs, lhs == rhs};
}

inline bool lemma49_check(int k, int F) { return lemma49_evaluate(k, Rational(F)).equal; }

/// Both sides are polynomials of degree k in F: agreement at k+2 points
/// (F = 0, 1, ..., k+1, past the F ≥ k regime) proves the identity in Q[F].
inline bool lemma49_polynomial_check(int k)
{
    for (int F = 0; F <= k + 1; ++F)
        if (!lemma49_evaluate(k, Rational(F)).equal) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Second Main Theorem reconstruction

struct DominationDatum {
    SectionLabel x;
    Partition block_core;                   // B, by its d-core
    std::set<Partition> beta;               // cores of the GL(l) blocks reached
    std::map<std::pair<Partition, Partition>, BigInt> coefficients;  // (μ, λ) → α^x_{μλ}
};

struct SMTReport {
    bool reconstruction = true;
    bool cores_preserved = true;
    bool beta_disjoint = true;
    bool beta_expected = true;
    std::size_t classes_checked = 0;
    std::size_t values_checked = 0;
    std::vector<std::string> failures;
    std::vector<DominationDatum> data;

    bool ok() const { return reconstruction && cores_preserved && beta_disjoint && beta_expected; }
};

/// For every section x and every class xy in it: χ^μ(xy) computed in canonical
/// order equals Σ_λ α^x_{μλ} χ^λ(y) with x peeled first; the GL(l) blocks reached
/// from different combinatorial blocks of G are disjoint and equal the block
/// with the same core.
inline SMTReport smt_check(const Context& ctx)
{
    const auto& data = context_data(ctx);
    const auto& labels = data.table->labels;
    SMTReport report;
    auto blocks = combinatorial_blocks(ctx.n, ctx.d);
    for (const auto& [section, members] : data.sections) {
        int l = ctx.n - section.x_class.n;
        std::map<Partition, std::map<Partition, BigInt>> alphas;
        for (const auto& mu : labels) alphas[mu] = alpha_coefficients(mu, section.x_class);
        for (auto j : members) {
            const auto& c = data.table->classes[j];
            auto y = xy_decompose(c, ctx.d, ctx.variant).y_part;
            ++report.classes_checked;
            for (std::size_t a = 0; a < labels.size(); ++a) {
                BigInt rhs = 0;
                for (const auto& [lambda, coeff] : alphas[labels[a]]) rhs += coeff * unipotent_value(lambda, y);
                ++report.values_checked;
                if (rhs != data.table->value[a][j]) {
                    report.reconstruction = false;
                    report.failures.push_back("reconstruction " + to_string(labels[a]) + " at " + to_string(c));
                }
            }
        }
        std::map<Partition, std::set<Partition>> beta_by_core;
        for (const auto& block : blocks.blocks) {
            DominationDatum datum;
            datum.x = section;
            datum.block_core = d_core(block.front(), ctx.d);
            for (const auto& mu : block)
                for (const auto& [lambda, coeff] : alphas[mu]) {
                    auto lc = d_core(lambda, ctx.d);
                    if (lc != datum.block_core) {
                        report.cores_preserved = false;
                        report.failures.push_back("core changed from " + to_string(mu) + " to " + to_string(lambda));
                    }
                    datum.beta.insert(lc);
                    datum.coefficients[{mu, lambda}] = coeff;
                }
            std::set<Partition> expected;
            if (datum.block_core.size() <= l) expected.insert(datum.block_core);
            if (datum.beta != expected) {
                report.beta_expected = false;
                report.failures.push_back("beta of core " + to_string(datum.block_core) + " at section " + to_string(section));
            }
            for (const auto& [other_core, other_beta] : beta_by_core)
                for (const auto& b : datum.beta)
                    if (other_beta.count(b)) {
                        report.beta_disjoint = false;
                        report.failures.push_back("beta overlap between cores " + to_string(other_core) + " and " +
                                                  to_string(datum.block_core));
                    }
            beta_by_core[datum.block_core] = datum.beta;
            report.data.push_back(std::move(datum));
        }
    }
    return report;
}

}  // namespace glblocks
