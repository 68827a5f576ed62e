#pragma once

// Conjugacy classes of GL(n,q) as partition-valued functions on monic
// irreducible polynomials, d-elements, d-regular classes and sections.

#include "glblocks/exact.hpp"
#include "glblocks/memo.hpp"
#include "glblocks/partition.hpp"
#include "glblocks/qarith.hpp"

#include <algorithm>
#include <compare>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace glblocks {

enum class Variant { divisible, exact };

inline std::string to_string(Variant v) { return v == Variant::divisible ? "divisible" : "exact"; }

inline Variant parse_variant(const std::string& text)
{
    if (text == "divisible") return Variant::divisible;
    if (text == "exact") return Variant::exact;
    throw std::invalid_argument("unknown variant '" + text + "' (expected divisible or exact)");
}

struct GLClassLabel {
    int n = 0;
    int q = 2;
    std::vector<std::pair<PolyLabel, Partition>> assignment;  // sorted by polynomial, nonempty partitions

    GLClassLabel() = default;

    GLClassLabel(int q_, std::vector<std::pair<PolyLabel, Partition>> parts) : q(q_)
    {
        for (auto& [f, zeta] : parts) {
            if (zeta.empty()) continue;
            if (f.q != q) throw std::invalid_argument("polynomial over the wrong field in class label");
            if (f.degree == 1 && !f.coeffs.empty() && f.coeffs[0] == 0) throw std::invalid_argument("X cannot occur in a class label");
            n += f.degree * zeta.size();
            assignment.emplace_back(f, std::move(zeta));
        }
        std::sort(assignment.begin(), assignment.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        for (std::size_t i = 1; i < assignment.size(); ++i)
            if (assignment[i - 1].first == assignment[i].first) throw std::invalid_argument("repeated polynomial in class label");
    }

    /// ζ(f), empty when f is not in the support.
    Partition at(const PolyLabel& f) const
    {
        for (const auto& [g, zeta] : assignment)
            if (g == f) return zeta;
        return {};
    }

    friend bool operator==(const GLClassLabel& a, const GLClassLabel& b)
    {
        return a.n == b.n && a.q == b.q && a.assignment == b.assignment;
    }
    friend std::strong_ordering operator<=>(const GLClassLabel& a, const GLClassLabel& b)
    {
        if (auto c = a.n <=> b.n; c != 0) return c;
        if (auto c = a.q <=> b.q; c != 0) return c;
        return a.assignment <=> b.assignment;
    }
};

inline std::string to_string(const GLClassLabel& c)
{
    std::string out = "{";
    for (std::size_t i = 0; i < c.assignment.size(); ++i) {
        if (i) out += ",";
        out += to_string(c.assignment[i].first) + ":" + to_string(c.assignment[i].second);
    }
    return out + "}";
}

inline GLClassLabel unipotent_class(const Partition& mu, int q)
{
    if (mu.empty()) {
        GLClassLabel empty;
        empty.q = q;
        return empty;
    }
    return GLClassLabel(q, {{x_minus_one(q), mu}});
}

inline GLClassLabel identity_class(int n, int q) { return unipotent_class(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)), q); }

/// Disjoint union of supports (ζ_1(f) ∪ ζ_2(f) on common polynomials).
inline GLClassLabel combine(const GLClassLabel& a, const GLClassLabel& b)
{
    if (a.q != b.q) throw std::invalid_argument("combine: field mismatch");
    std::map<PolyLabel, Partition> merged;
    for (const auto& [f, zeta] : a.assignment) merged[f] = zeta;
    for (const auto& [f, zeta] : b.assignment) merged[f] = merged[f].join(zeta);
    return GLClassLabel(a.q, {merged.begin(), merged.end()});
}

/// Π_f a_{ζ(f)}(q^{δ(f)})
inline BigInt centralizer_order(const GLClassLabel& c)
{
    BigInt order = 1;
    for (const auto& [f, zeta] : c.assignment)
        order *= primary_centralizer_order(zeta, ipow(BigInt(c.q), static_cast<unsigned>(f.degree)));
    return order;
}

inline BigInt class_size(const GLClassLabel& c) { return gl_order(c.n, c.q) / centralizer_order(c); }

/// All classes of GL(n,q); cached per (n, q).
inline const std::vector<GLClassLabel>& all_classes(int n, int q)
{
    using List = std::shared_ptr<const std::vector<GLClassLabel>>;
    static detail::Memo<std::pair<int, int>, List> cache;
    if (n < 1) throw std::invalid_argument("all_classes needs n >= 1");
    return *cache.get_or_compute({n, q}, [&]() -> List {
        std::vector<PolyLabel> polys;
        for (int d = 1; d <= n; ++d) {
            const auto& list = enumerate_irreducibles(q, d);
            polys.insert(polys.end(), list.begin(), list.end());
        }
        std::vector<std::vector<Partition>> partitions(static_cast<std::size_t>(n + 1));
        for (int k = 1; k <= n; ++k) partitions[static_cast<std::size_t>(k)] = partitions_of(k);
        auto out = std::make_shared<std::vector<GLClassLabel>>();
        std::vector<std::pair<PolyLabel, Partition>> current;
        std::function<void(std::size_t, int)> rec = [&](std::size_t start, int remaining) {
            if (remaining == 0) {
                out->push_back(GLClassLabel(q, current));
                return;
            }
            for (std::size_t i = start; i < polys.size(); ++i) {
                int deg = polys[i].degree;
                if (deg > remaining) break;
                for (int k = 1; k * deg <= remaining; ++k)
                    for (const auto& zeta : partitions[static_cast<std::size_t>(k)]) {
                        current.emplace_back(polys[i], zeta);
                        rec(i + 1, remaining - k * deg);
                        current.pop_back();
                    }
            }
        };
        rec(0, n);
        std::sort(out->begin(), out->end());
        return out;
    });
}

// ---------------------------------------------------------------------------
// d-elements, d-regular classes, sections

/// f ∈ F_d: f ≠ X−1 with d | δ(f) (divisible) or δ(f) = d (exact).
inline bool in_F_d(const PolyLabel& f, int d, Variant variant)
{
    if (d < 1) throw std::invalid_argument("d must be positive");
    if (is_x_minus_one(f)) return false;
    return variant == Variant::divisible ? f.degree % d == 0 : f.degree == d;
}

inline bool is_d_element(const GLClassLabel& c, int d, Variant variant)
{
    for (const auto& [f, zeta] : c.assignment) {
        if (is_x_minus_one(f)) {
            if (!zeta.empty() && zeta[0] != 1) return false;
        } else if (!in_F_d(f, d, variant)) {
            return false;
        }
    }
    return true;
}

inline bool is_d_regular(const GLClassLabel& c, int d, Variant variant)
{
    for (const auto& [f, zeta] : c.assignment)
        if (in_F_d(f, d, variant)) return false;
    return true;
}

struct XYDecomposition {
    GLClassLabel x_part;  // support in F_d, a class of GL(m)
    GLClassLabel y_part;  // remaining support, a class of GL(n - m)
};

inline XYDecomposition xy_decompose(const GLClassLabel& c, int d, Variant variant)
{
    std::vector<std::pair<PolyLabel, Partition>> xs, ys;
    for (const auto& entry : c.assignment) (in_F_d(entry.first, d, variant) ? xs : ys).push_back(entry);
    return {GLClassLabel(c.q, xs), GLClassLabel(c.q, ys)};
}

struct DTypeDescriptor {
    std::vector<std::pair<int, int>> pairs;  // (k_i, m_i), sorted
    int weight = 0;

    friend bool operator==(const DTypeDescriptor&, const DTypeDescriptor&) = default;
    friend auto operator<=>(const DTypeDescriptor&, const DTypeDescriptor&) = default;
};

inline std::string to_string(const DTypeDescriptor& t)
{
    std::string out = "(";
    for (std::size_t i = 0; i < t.pairs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(t.pairs[i].first) + "*" + std::to_string(t.pairs[i].second);
    }
    return out + ")";
}

/// d-type of the d-part of c; an X−1 component of shape (1^k) is ignored.
inline DTypeDescriptor d_type(const GLClassLabel& c, int d, Variant variant)
{
    auto x = xy_decompose(c, d, variant).x_part;
    DTypeDescriptor t;
    for (const auto& [f, zeta] : x.assignment) {
        t.pairs.emplace_back(zeta.size(), f.degree / d);
        t.weight += zeta.size() * (f.degree / d);
    }
    std::sort(t.pairs.begin(), t.pairs.end());
    return t;
}

/// Checked variant: c itself must be a d-element.
inline DTypeDescriptor d_type_of_element(const GLClassLabel& c, int d, Variant variant)
{
    if (!is_d_element(c, d, variant)) throw std::invalid_argument(to_string(c) + " is not a d-element");
    return d_type(c, d, variant);
}

inline int class_d_weight(const GLClassLabel& c, int d, Variant variant) { return d_type(c, d, variant).weight; }

/// A section is named by the F_d part of its d-element (size m ≤ n, possibly empty).
struct SectionLabel {
    GLClassLabel x_class;

    friend bool operator==(const SectionLabel&, const SectionLabel&) = default;
    friend auto operator<=>(const SectionLabel& a, const SectionLabel& b) { return a.x_class <=> b.x_class; }
};

inline std::string to_string(const SectionLabel& s) { return to_string(s.x_class); }

/// The d-element of GL(n) heading the section: x ⊕ (X−1 ↦ (1^{n−m})).
inline GLClassLabel section_element(const SectionLabel& s, int n)
{
    return combine(s.x_class, identity_class(n - s.x_class.n, s.x_class.q));
}

inline std::map<SectionLabel, std::vector<GLClassLabel>> sections(int n, int q, int d, Variant variant)
{
    std::map<SectionLabel, std::vector<GLClassLabel>> out;
    for (const auto& c : all_classes(n, q)) out[SectionLabel{xy_decompose(c, d, variant).x_part}].push_back(c);
    return out;
}

}  // namespace glblocks
