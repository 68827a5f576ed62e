#pragma once

// Partition combinatorics: rim hooks, beta-sets and the d-runner abacus,
// d-cores, d-quotients, removal paths and their signs.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace glblocks {

/// Weakly decreasing sequence of positive integers. The empty sequence is the
/// empty partition of 0.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
        size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Sorts and drops zeros before validating.
    static Partition from_unsorted(std::vector<int> parts)
    {
        std::erase(parts, 0);
        std::sort(parts.begin(), parts.end(), std::greater<>());
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

    /// Multiplicity of part i.
    int multiplicity(int i) const { return static_cast<int>(std::count(parts_.begin(), parts_.end(), i)); }

    Partition conjugate() const
    {
        std::vector<int> result;
        if (parts_.empty()) return Partition();
        for (int j = 1; j <= parts_.front(); ++j) {
            int count = 0;
            for (int p : parts_)
                if (p >= j) ++count;
            result.push_back(count);
        }
        return Partition(std::move(result));
    }

    /// n(λ) = Σ (i-1) λ_i.
    int n_statistic() const
    {
        int total = 0;
        for (std::size_t i = 0; i < parts_.size(); ++i) total += static_cast<int>(i) * parts_[i];
        return total;
    }

    /// Concatenation λ ∪ μ.
    Partition join(const Partition& other) const
    {
        std::vector<int> all = parts_;
        all.insert(all.end(), other.parts_.begin(), other.parts_.end());
        return from_unsorted(std::move(all));
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Bracketed decreasing list; ∅ is "[]".
inline std::string to_string(const Partition& p)
{
    std::string out = "[";
    for (int i = 0; i < p.length(); ++i) {
        if (i) out += ",";
        out += std::to_string(p[i]);
    }
    return out + "]";
}

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << to_string(p); }

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), position(position)
    {
    }
    std::size_t position;
};

/// Parses "[6,5,5,2,1]", "[]" or "6,5,5,2,1" (whitespace ignored).
inline Partition parse_partition(const std::string& text)
{
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    bool bracketed = pos < text.size() && (text[pos] == '[' || text[pos] == '(');
    char closer = 0;
    if (bracketed) closer = text[pos++] == '[' ? ']' : ')';
    std::vector<int> parts;
    skip_ws();
    bool expect_number = false;
    while (pos < text.size()) {
        skip_ws();
        if (pos >= text.size()) break;
        char c = text[pos];
        if (bracketed && c == closer) break;
        if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("expected a positive integer", pos);
        long value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            if (value > 1'000'000) throw ParseError("part too large", pos);
            ++pos;
        }
        if (value == 0) throw ParseError("parts must be positive", pos - 1);
        if (!parts.empty() && value > parts.back()) throw ParseError("parts must be weakly decreasing", pos - 1);
        parts.push_back(static_cast<int>(value));
        skip_ws();
        expect_number = false;
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
            expect_number = true;
        }
    }
    if (expect_number) throw ParseError("trailing comma", pos);
    if (bracketed) {
        if (pos >= text.size()) throw ParseError(std::string("missing closing '") + closer + "'", pos);
        ++pos;
        skip_ws();
        if (pos != text.size()) throw ParseError("unexpected trailing input", pos);
    }
    return Partition(std::move(parts));
}

/// All partitions of n, in decreasing lexicographic order ((n) first).
inline std::vector<Partition> partitions_of(int n)
{
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            rec(remaining - p, p);
            current.pop_back();
        }
    };
    rec(n, n);
    return out;
}

// ---------------------------------------------------------------------------
// Beta-sets and hooks

/// Beta-set of length `length` (≥ number of parts), decreasing: λ_i + length - i.
inline std::vector<int> beta_set(const Partition& p, int length)
{
    if (length < p.length()) throw std::invalid_argument("beta-set shorter than the partition");
    std::vector<int> beta(static_cast<std::size_t>(length));
    for (int i = 0; i < length; ++i) beta[static_cast<std::size_t>(i)] = p[i] + length - 1 - i;
    return beta;
}

inline Partition from_beta_set(std::vector<int> beta)
{
    std::sort(beta.begin(), beta.end(), std::greater<>());
    std::vector<int> parts;
    int length = static_cast<int>(beta.size());
    for (int i = 0; i < length; ++i) {
        int part = beta[static_cast<std::size_t>(i)] - (length - 1 - i);
        if (part < 0 || (i > 0 && beta[static_cast<std::size_t>(i)] == beta[static_cast<std::size_t>(i - 1)]))
            throw std::invalid_argument("invalid beta-set");
        parts.push_back(part);
    }
    return Partition(std::move(parts));
}

struct HookRemoval {
    int hook_length = 0;
    int leg_length = 0;
    int start_row = 0;     // top row of the strip (0-based)
    int start_column = 0;  // rightmost column of the strip in its top row (0-based)
    Partition result;

    friend bool operator==(const HookRemoval&, const HookRemoval&) = default;
};

/// Every rim hook of length h, ordered by (start row, start column).
inline std::vector<HookRemoval> rim_hooks(const Partition& p, int h)
{
    if (h < 1) throw std::invalid_argument("hook length must be positive");
    std::vector<HookRemoval> out;
    int length = p.length();
    auto beta = beta_set(p, length);
    std::set<int> occupied(beta.begin(), beta.end());
    for (int i = 0; i < length; ++i) {
        int b = beta[static_cast<std::size_t>(i)];
        int target = b - h;
        if (target < 0 || occupied.count(target)) continue;
        int leg = 0;
        for (int other : beta)
            if (other > target && other < b) ++leg;
        auto moved = beta;
        moved[static_cast<std::size_t>(i)] = target;
        out.push_back(HookRemoval{h, leg, i, p[i] - 1, from_beta_set(std::move(moved))});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Abacus

/// Beads of a beta-set distributed on d runners: position b sits on runner
/// b mod d at level b / d. `origin_offset` is the beta-set length.
struct AbacusState {
    int d = 1;
    int origin_offset = 0;
    std::vector<std::vector<int>> runners;  // increasing levels per runner

    friend bool operator==(const AbacusState&, const AbacusState&) = default;
};

/// Least m ≥ the number of parts with m ≡ 1 (mod d): the origin sits one
/// bead below runner 0, so (6,5,5,2,1) at d = 3 has quotient ((1,1),(2),(1)).
inline int canonical_beta_length(const Partition& p, int d)
{
    if (d == 1) return p.length();
    int m = p.length();
    while (m % d != 1) ++m;
    return m;
}

inline AbacusState abacus(const Partition& p, int d, int beta_length)
{
    if (d < 1) throw std::invalid_argument("number of runners must be positive");
    AbacusState state{d, beta_length, std::vector<std::vector<int>>(static_cast<std::size_t>(d))};
    for (int b : beta_set(p, beta_length)) state.runners[static_cast<std::size_t>(b % d)].push_back(b / d);
    for (auto& runner : state.runners) std::sort(runner.begin(), runner.end());
    return state;
}

inline AbacusState abacus(const Partition& p, int d) { return abacus(p, d, canonical_beta_length(p, d)); }

inline Partition to_partition(const AbacusState& state)
{
    std::vector<int> beta;
    for (int r = 0; r < state.d; ++r)
        for (int level : state.runners[static_cast<std::size_t>(r)]) beta.push_back(level * state.d + r);
    if (static_cast<int>(beta.size()) != state.origin_offset)
        throw std::invalid_argument("bead count does not match the beta-set length");
    return from_beta_set(std::move(beta));
}

/// Rim encoding: 1 for a bead (vertical step), 0 for a gap, by increasing
/// position from the origin up to the highest bead.
inline std::string edge_sequence(const AbacusState& state)
{
    int top = -1;
    std::set<int> beads;
    for (int r = 0; r < state.d; ++r)
        for (int level : state.runners[static_cast<std::size_t>(r)]) {
            beads.insert(level * state.d + r);
            top = std::max(top, level * state.d + r);
        }
    std::string out;
    for (int b = 0; b <= top; ++b) out += beads.count(b) ? '1' : '0';
    return out;
}

/// Text rendering, highest level first: 'o' bead, '.' gap.
inline std::string render_abacus(const AbacusState& state)
{
    int top = 0;
    for (const auto& runner : state.runners)
        if (!runner.empty()) top = std::max(top, runner.back());
    std::ostringstream os;
    for (int level = top; level >= 0; --level) {
        for (int r = 0; r < state.d; ++r) {
            const auto& runner = state.runners[static_cast<std::size_t>(r)];
            bool bead = std::binary_search(runner.begin(), runner.end(), level);
            os << (r ? " " : "") << (bead ? 'o' : '.');
        }
        os << '\n';
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Cores, quotients, weights

inline Partition d_core(const Partition& p, int d)
{
    if (d < 1) throw std::invalid_argument("d must be positive");
    AbacusState state = abacus(p, d);
    for (auto& runner : state.runners) std::iota(runner.begin(), runner.end(), 0);
    return to_partition(state);
}

/// Runner r holds component r under the canonical beta-set length; other
/// origins give cyclic shifts.
inline std::vector<Partition> d_quotient(const Partition& p, int d)
{
    if (d < 1) throw std::invalid_argument("d must be positive");
    AbacusState state = abacus(p, d);
    std::vector<Partition> quotient;
    for (const auto& runner : state.runners) {
        int k = static_cast<int>(runner.size());
        std::vector<int> parts;
        for (int j = 0; j < k; ++j) parts.push_back(runner[static_cast<std::size_t>(k - 1 - j)] - (k - 1 - j));
        quotient.emplace_back(std::move(parts));
    }
    return quotient;
}

inline int d_weight(const Partition& p, int d) { return (p.size() - d_core(p, d).size()) / d; }

inline bool is_d_core(const Partition& p, int d) { return d_core(p, d) == p; }

/// Inverse of (d_core, d_quotient) under the canonical runner convention.
inline Partition reconstruct(const Partition& core, const std::vector<Partition>& quotient)
{
    int d = static_cast<int>(quotient.size());
    if (d < 1) throw std::invalid_argument("quotient must have at least one component");
    if (!is_d_core(core, d)) throw std::invalid_argument("reconstruct: " + to_string(core) + " is not a d-core");
    int length = canonical_beta_length(core, d);
    for (;;) {
        AbacusState state = abacus(core, d, length);
        bool fits = true;
        for (int r = 0; r < d; ++r)
            if (static_cast<int>(state.runners[static_cast<std::size_t>(r)].size()) <
                quotient[static_cast<std::size_t>(r)].length())
                fits = false;
        if (!fits) {
            length += d;
            continue;
        }
        for (int r = 0; r < d; ++r) {
            auto& runner = state.runners[static_cast<std::size_t>(r)];
            int k = static_cast<int>(runner.size());
            const Partition& component = quotient[static_cast<std::size_t>(r)];
            for (int j = 0; j < k; ++j) runner[static_cast<std::size_t>(k - 1 - j)] = component[j] + (k - 1 - j);
        }
        return to_partition(state);
    }
}

/// Runners carrying a nonempty quotient component.
inline std::set<int> runners_used(const Partition& p, int d)
{
    std::set<int> used;
    auto quotient = d_quotient(p, d);
    for (int r = 0; r < d; ++r)
        if (!quotient[static_cast<std::size_t>(r)].empty()) used.insert(r);
    return used;
}

// ---------------------------------------------------------------------------
// Paths and signs

struct RemovalPath {
    std::vector<HookRemoval> steps;
    int total_leg = 0;
};

struct PathMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// All maximal d-hook removal sequences from p to its d-core, depth-first with
/// hooks in (start row, start column) order.
inline std::vector<RemovalPath> removal_paths(const Partition& p, const Partition& core, int d)
{
    if (d_core(p, d) != core)
        throw PathMismatch(to_string(core) + " is not the " + std::to_string(d) + "-core of " + to_string(p));
    std::vector<RemovalPath> out;
    RemovalPath current;
    std::function<void(const Partition&)> walk = [&](const Partition& node) {
        auto hooks = rim_hooks(node, d);
        if (hooks.empty()) {
            out.push_back(current);
            return;
        }
        for (const auto& hook : hooks) {
            current.steps.push_back(hook);
            current.total_leg += hook.leg_length;
            walk(hook.result);
            current.total_leg -= hook.leg_length;
            current.steps.pop_back();
        }
    };
    walk(p);
    return out;
}

/// |P^λ_γ| without materializing the paths.
inline std::uint64_t count_removal_paths(const Partition& p, int d)
{
    std::map<Partition, std::uint64_t> memo;
    std::function<std::uint64_t(const Partition&)> count = [&](const Partition& node) -> std::uint64_t {
        if (auto it = memo.find(node); it != memo.end()) return it->second;
        auto hooks = rim_hooks(node, d);
        std::uint64_t total = hooks.empty() ? 1 : 0;
        for (const auto& hook : hooks) total += count(hook.result);
        memo.emplace(node, total);
        return total;
    };
    return count(p);
}

/// (-1)^{L_P} along the first removal path to the d-core.
inline int epsilon(const Partition& p, int d)
{
    if (d < 1) throw std::invalid_argument("d must be positive");
    int legs = 0;
    Partition node = p;
    for (;;) {
        auto hooks = rim_hooks(node, d);
        if (hooks.empty()) break;
        legs += hooks.front().leg_length;
        node = hooks.front().result;
    }
    return legs % 2 == 0 ? 1 : -1;
}

/// True when every removal path to the core has the same leg parity.
inline bool epsilon_path_independent(const Partition& p, int d)
{
    std::set<int> parities;
    for (const auto& path : removal_paths(p, d_core(p, d), d)) parities.insert(path.total_leg % 2);
    return parities.size() == 1;
}

/// No hook of length m·d for any m ≥ 2.
inline bool is_simple(const Partition& p, int d)
{
    if (d < 1) throw std::invalid_argument("d must be positive");
    for (int h = 2 * d; h <= p.size(); h += d)
        if (!rim_hooks(p, h).empty()) return false;
    return true;
}

struct ConventionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline std::set<int> runners_used(const AbacusState& state)
{
    std::set<int> used;
    for (int r = 0; r < state.d; ++r) {
        const auto& runner = state.runners[static_cast<std::size_t>(r)];
        for (std::size_t j = 0; j < runner.size(); ++j)
            if (runner[j] != static_cast<int>(j)) {
                used.insert(r);
                break;
            }
    }
    return used;
}

/// Disjointness of two abaci; both must share d and the beta-set length mod d.
inline bool disjoint(const AbacusState& a, const AbacusState& b)
{
    if (a.d != b.d || a.origin_offset % a.d != b.origin_offset % b.d)
        throw ConventionMismatch("abaci built under different runner conventions");
    auto ua = runners_used(a);
    auto ub = runners_used(b);
    for (int r : ua)
        if (ub.count(r)) return false;
    return true;
}

inline bool disjoint(const Partition& a, const Partition& b, int d) { return disjoint(abacus(a, d), abacus(b, d)); }

struct Infeasible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Partition with quotient component (1) on each listed runner over `core`.
inline Partition simple_on_runners(const Partition& core, const std::set<int>& runners, int d)
{
    std::vector<Partition> quotient(static_cast<std::size_t>(d));
    for (int r : runners) {
        if (r < 0 || r >= d) throw std::out_of_range("runner index out of range");
        quotient[static_cast<std::size_t>(r)] = Partition{1};
    }
    return reconstruct(core, quotient);
}

/// Partition whose whole weight sits on one runner, with quotient component (w).
inline Partition single_runner(const Partition& core, int runner, int w, int d)
{
    if (runner < 0 || runner >= d) throw std::out_of_range("runner index out of range");
    std::vector<Partition> quotient(static_cast<std::size_t>(d));
    quotient[static_cast<std::size_t>(runner)] = Partition{w};
    return reconstruct(core, quotient);
}

/// Simple partition of core `core` and weight w avoiding the runners in `avoid`
/// (lowest free runners are used).
inline Partition find_simple_disjoint(const Partition& core, int w, int d, const std::set<int>& avoid)
{
    if (w < 1) throw std::invalid_argument("weight must be positive");
    std::set<int> chosen;
    for (int r = 0; r < d && static_cast<int>(chosen.size()) < w; ++r)
        if (!avoid.count(r)) chosen.insert(r);
    if (static_cast<int>(chosen.size()) < w)
        throw Infeasible("fewer than " + std::to_string(w) + " free runners among " + std::to_string(d));
    return simple_on_runners(core, chosen, d);
}

enum class LSetMode { iterate, single_hook };

/// L^i (i successive d-hooks) or L^(i) (one i·d-hook).
inline std::set<Partition> l_sets(const Partition& p, int d, int i, LSetMode mode)
{
    if (i < 0) throw std::invalid_argument("index must be non-negative");
    std::set<Partition> current{p};
    if (i == 0) return current;
    if (mode == LSetMode::single_hook) {
        std::set<Partition> out;
        for (const auto& hook : rim_hooks(p, i * d)) out.insert(hook.result);
        return out;
    }
    for (int step = 0; step < i; ++step) {
        std::set<Partition> next;
        for (const auto& node : current)
            for (const auto& hook : rim_hooks(node, d)) next.insert(hook.result);
        current = std::move(next);
    }
    return current;
}

}  // namespace glblocks
