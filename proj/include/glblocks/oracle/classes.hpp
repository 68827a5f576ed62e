#pragma once

// Conjugacy classes of an explicit matrix group by orbit computation, with
// labels read off from elementary divisors.

#include "glblocks/glclass.hpp"
#include "glblocks/oracle/matrix_group.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace glblocks::oracle {

/// Label of g from dim ker f(g)^j = δ(f) Σ_i min(λ_i, j) for every irreducible f.
inline GLClassLabel element_label(const Mat& g, int q)
{
    const FiniteField& F = field(q);
    int n = g.n;
    std::vector<std::pair<PolyLabel, Partition>> parts;
    for (int deg = 1; deg <= n; ++deg)
        for (const auto& f : enumerate_irreducibles(q, deg)) {
            Mat fg = evaluate(f.coeffs, g, F);
            Mat power = Mat::identity(n);
            std::vector<int> kernel_dims{0};
            for (int j = 1; j <= n / deg; ++j) {
                power = mul(power, fg, F);
                kernel_dims.push_back(n - rank(power, F));
            }
            std::vector<int> conjugate_parts;
            for (std::size_t j = 1; j < kernel_dims.size(); ++j) {
                int diff = kernel_dims[j] - kernel_dims[j - 1];
                if (diff % deg) throw std::logic_error("kernel dimension not divisible by the degree");
                if (diff) conjugate_parts.push_back(diff / deg);
            }
            if (!conjugate_parts.empty()) parts.emplace_back(f, Partition(conjugate_parts).conjugate());
        }
    GLClassLabel label(q, parts);
    if (label.n != n) throw std::logic_error("elementary divisors do not account for the whole space");
    return label;
}

struct OracleClass {
    int representative = 0;
    std::vector<int> members;
    BigInt centralizer_order;
    GLClassLabel label;
    int element_order = 1;
};

struct OracleClassData {
    std::vector<OracleClass> classes;  // sorted by label
    std::vector<int> class_of;         // per element
    int identity_class = 0;

    /// Class of g^t for a representative g of class j.
    std::vector<std::vector<int>> power_map;  // power_map[j][t mod order_j]

    std::size_t class_count() const { return classes.size(); }
};

inline int element_order(const MatrixGroup& G, int g)
{
    int order = 1;
    int x = g;
    while (x != G.identity()) {
        x = G.mul(x, g);
        ++order;
    }
    return order;
}

inline OracleClassData oracle_classes(const MatrixGroup& G)
{
    std::vector<int> class_of(G.order(), -1);
    std::vector<OracleClass> found;
    for (int g = 0; g < static_cast<int>(G.order()); ++g) {
        if (class_of[static_cast<std::size_t>(g)] >= 0) continue;
        int id = static_cast<int>(found.size());
        OracleClass cls;
        cls.representative = g;
        for (int h = 0; h < static_cast<int>(G.order()); ++h) {
            int c = G.conjugate(g, h);
            if (class_of[static_cast<std::size_t>(c)] < 0) {
                class_of[static_cast<std::size_t>(c)] = id;
                cls.members.push_back(c);
            }
        }
        found.push_back(std::move(cls));
    }
    for (auto& cls : found) {
        if (G.order() % cls.members.size()) throw std::logic_error("class size does not divide |G|");
        cls.centralizer_order = BigInt(G.order() / cls.members.size());
        cls.label = element_label(G.element(cls.representative), G.q());
        cls.element_order = element_order(G, cls.representative);
    }
    std::vector<int> order(found.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return found[static_cast<std::size_t>(a)].label < found[static_cast<std::size_t>(b)].label;
    });
    std::vector<int> renumber(found.size());
    OracleClassData data;
    for (std::size_t i = 0; i < order.size(); ++i) {
        renumber[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
        data.classes.push_back(std::move(found[static_cast<std::size_t>(order[i])]));
    }
    for (auto& c : class_of) c = renumber[static_cast<std::size_t>(c)];
    data.class_of = std::move(class_of);
    data.identity_class = data.class_of[static_cast<std::size_t>(G.identity())];
    for (const auto& cls : data.classes) {
        std::vector<int> powers;
        int x = G.identity();
        for (int t = 0; t < cls.element_order; ++t) {
            powers.push_back(data.class_of[static_cast<std::size_t>(x)]);
            x = G.mul(x, cls.representative);
        }
        data.power_map.push_back(std::move(powers));
    }
    return data;
}

/// U_ζ: block diagonal of companion matrices of f^{λ_i} over the support.
inline Mat canonical_matrix(const GLClassLabel& c)
{
    const FiniteField& F = field(c.q);
    Mat m(c.n);
    int offset = 0;
    for (const auto& [f, zeta] : c.assignment)
        for (int part : zeta.parts()) {
            FqPoly power{1};
            for (int i = 0; i < part; ++i) power = poly_mul(power, f.coeffs, F);
            int size = static_cast<int>(power.size()) - 1;
            for (int i = 1; i < size; ++i) m(offset + i, offset + i - 1) = 1;
            for (int i = 0; i < size; ++i) m(offset + i, offset + size - 1) = F.neg(power[static_cast<std::size_t>(i)]);
            offset += size;
        }
    return m;
}

}  // namespace glblocks::oracle
