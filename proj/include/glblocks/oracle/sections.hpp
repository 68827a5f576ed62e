#pragma once

// Element-level x·y decomposition and a literal check of the five section
// properties on an explicit group.

#include "glblocks/glclass.hpp"
#include "glblocks/oracle/classes.hpp"
#include "glblocks/oracle/matrix_group.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace glblocks::oracle {

/// Bases of V_x = ⊕_{f ∈ F_d} ker f(g)^n and of its complement ⊕_{f ∉ F_d} ker f(g)^n.
struct PrimarySplit {
    std::vector<std::vector<int>> vx;
    std::vector<std::vector<int>> vx0;
    Mat basis;          // columns: vx then vx0
    Mat basis_inverse;
};

inline PrimarySplit primary_split(const Mat& g, int q, int d, Variant variant)
{
    const FiniteField& F = field(q);
    int n = g.n;
    PrimarySplit split;
    for (int deg = 1; deg <= n; ++deg)
        for (const auto& f : enumerate_irreducibles(q, deg)) {
            Mat fg = evaluate(f.coeffs, g, F);
            Mat power = Mat::identity(n);
            for (int j = 0; j < n; ++j) power = mul(power, fg, F);
            auto ker = kernel(power, F);
            auto& target = in_F_d(f, d, variant) ? split.vx : split.vx0;
            target.insert(target.end(), ker.begin(), ker.end());
        }
    std::vector<std::vector<int>> cols = split.vx;
    cols.insert(cols.end(), split.vx0.begin(), split.vx0.end());
    if (static_cast<int>(cols.size()) != n) throw std::logic_error("primary components do not span the space");
    split.basis = from_columns(cols);
    split.basis_inverse = inverse(split.basis, F);
    return split;
}

/// Block of B^{-1} m B on rows and columns [from, to).
inline Mat sub_block(const Mat& m, int from, int to)
{
    Mat out(to - from);
    for (int i = from; i < to; ++i)
        for (int j = from; j < to; ++j) out(i - from, j - from) = m(i, j);
    return out;
}

struct XYPair {
    int x = 0;
    int y = 0;
};

/// g = xy with x = g on V_x and 1 on V_x^0, y = 1 on V_x and g on V_x^0.
inline XYPair element_xy(const MatrixGroup& G, int g, int d, Variant variant)
{
    const FiniteField& F = G.F();
    const Mat& m = G.element(g);
    auto split = primary_split(m, G.q(), d, variant);
    int k = static_cast<int>(split.vx.size());
    Mat local = mul(mul(split.basis_inverse, m, F), split.basis, F);
    Mat xl = Mat::identity(m.n), yl = Mat::identity(m.n);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) {
            if (i < k && j < k) xl(i, j) = local(i, j);
            if (i >= k && j >= k) yl(i, j) = local(i, j);
        }
    Mat x = mul(mul(split.basis, xl, F), split.basis_inverse, F);
    Mat y = mul(mul(split.basis, yl, F), split.basis_inverse, F);
    return {G.index_of(x), G.index_of(y)};
}

/// y ∈ Y_d(x): y fixes V_x pointwise, stabilizes V_x^0, and y|_{V_x^0} is d-regular.
inline bool in_Y(const MatrixGroup& G, const PrimarySplit& split_of_x, int y, int d, Variant variant)
{
    const FiniteField& F = G.F();
    int n = G.n();
    int k = static_cast<int>(split_of_x.vx.size());
    Mat local = mul(mul(split_of_x.basis_inverse, G.element(y), F), split_of_x.basis, F);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (j < k && local(i, j) != (i == j ? 1 : 0)) return false;
            if (j >= k && i < k && local(i, j) != 0) return false;
        }
    if (k == n) return true;
    return is_d_regular(element_label(sub_block(local, k, n), G.q()), d, variant);
}

struct Prop32Report {
    bool decomposition = true;   // g = xy = yx with x ∈ X_d, y ∈ Y_d(x)
    bool part_i = true;
    bool part_ii = true;
    bool part_iii = true;
    bool part_iv = true;
    bool part_v = true;
    bool labels_match = true;    // element-level sections agree with label-level sections
    bool identity_section = true;
    std::size_t d_elements = 0;
    std::size_t d_regular_elements = 0;
    std::vector<std::string> failures;

    bool ok() const
    {
        return decomposition && part_i && part_ii && part_iii && part_iv && part_v && labels_match && identity_section;
    }
};

inline Prop32Report check_prop32(const MatrixGroup& G, const OracleClassData& cd, int d, Variant variant)
{
    Prop32Report report;
    int order = static_cast<int>(G.order());
    auto label_of = [&](int g) -> const GLClassLabel& { return cd.classes[static_cast<std::size_t>(cd.class_of[static_cast<std::size_t>(g)])].label; };
    auto fail = [&](bool& flag, const std::string& what) {
        flag = false;
        if (report.failures.size() < 20) report.failures.push_back(what);
    };

    // decomposition of every element
    std::vector<XYPair> xy(static_cast<std::size_t>(order));
    for (int g = 0; g < order; ++g) {
        auto p = element_xy(G, g, d, variant);
        xy[static_cast<std::size_t>(g)] = p;
        if (G.mul(p.x, p.y) != g || G.mul(p.y, p.x) != g) fail(report.decomposition, "xy != g at " + to_string(G.element(g)));
        if (!is_d_element(label_of(p.x), d, variant)) fail(report.decomposition, "x not a d-element at " + to_string(G.element(g)));
    }

    // X_d and Y_d(x) for every x ∈ X_d
    std::vector<int> X;
    for (int g = 0; g < order; ++g)
        if (is_d_element(label_of(g), d, variant)) X.push_back(g);
    report.d_elements = X.size();
    std::map<int, std::vector<int>> Y;
    std::map<int, PrimarySplit> splits;
    for (int x : X) {
        auto split = primary_split(G.element(x), G.q(), d, variant);
        std::vector<int> ys;
        for (int y = 0; y < order; ++y)
            if (in_Y(G, split, y, d, variant)) ys.push_back(y);
        Y.emplace(x, std::move(ys));
        splits.emplace(x, std::move(split));
    }
    for (int g = 0; g < order; ++g) {
        const auto& p = xy[static_cast<std::size_t>(g)];
        const auto& ys = Y.at(p.x);
        if (!std::binary_search(ys.begin(), ys.end(), p.y)) fail(report.decomposition, "y not in Y_d(x) at " + to_string(G.element(g)));
    }

    // (v): the products xy over x ∈ X_d, y ∈ Y_d(x) hit every element exactly once
    std::vector<int> hits(static_cast<std::size_t>(order), 0);
    for (int x : X)
        for (int y : Y.at(x)) ++hits[static_cast<std::size_t>(G.mul(x, y))];
    for (int g = 0; g < order; ++g)
        if (hits[static_cast<std::size_t>(g)] != 1)
            fail(report.part_v, "element hit " + std::to_string(hits[static_cast<std::size_t>(g)]) + " times: " + to_string(G.element(g)));

    // one representative x per G-class of X_d for (i), (ii), (iv); all g for (iii)
    std::set<int> seen_classes;
    for (int x : X) {
        int cls = cd.class_of[static_cast<std::size_t>(x)];
        if (!seen_classes.insert(cls).second) continue;
        const auto& ys = Y.at(x);
        std::set<int> yset(ys.begin(), ys.end());
        std::vector<int> cx;
        for (int h = 0; h < order; ++h)
            if (G.mul(h, x) == G.mul(x, h)) cx.push_back(h);

        // (i) Y_d(x) is a union of C_G(x)-classes
        for (int y : ys)
            for (int h : cx)
                if (!yset.count(G.conjugate(y, h))) {
                    fail(report.part_i, "Y_d(x) not C_G(x)-stable");
                    break;
                }

        // (ii) C_G(xy) ≤ C_G(x)
        for (int y : ys) {
            int g = G.mul(x, y);
            for (int h = 0; h < order; ++h)
                if (G.mul(h, g) == G.mul(g, h) && G.mul(h, x) != G.mul(x, h)) {
                    fail(report.part_ii, "C_G(xy) not inside C_G(x)");
                    break;
                }
        }

        // (iii) Y_d(x^g) = Y_d(x)^g
        for (int g = 0; g < order; ++g) {
            int xg = G.conjugate(x, g);
            std::vector<int> conj;
            for (int y : ys) conj.push_back(G.conjugate(y, g));
            std::sort(conj.begin(), conj.end());
            if (conj != Y.at(xg)) {
                fail(report.part_iii, "Y_d(x^g) != Y_d(x)^g");
                break;
            }
        }

        // (iv) G-conjugacy on xY_d(x) equals C_G(x)-conjugacy
        std::map<int, int> orbit_of;
        int orbits = 0;
        for (int y : ys) {
            if (orbit_of.count(y)) continue;
            for (int h : cx) orbit_of.emplace(G.conjugate(y, h), orbits);
            ++orbits;
        }
        for (int y : ys)
            for (int z : ys) {
                bool g_conj = cd.class_of[static_cast<std::size_t>(G.mul(x, y))] == cd.class_of[static_cast<std::size_t>(G.mul(x, z))];
                bool c_conj = orbit_of.at(y) == orbit_of.at(z);
                if (g_conj != c_conj) fail(report.part_iv, "G- and C_G(x)-conjugacy differ on xY_d(x)");
            }
    }

    // label-level sections
    auto label_sections = sections(G.n(), G.q(), d, variant);
    std::map<GLClassLabel, SectionLabel> section_of_class;
    for (const auto& [s, members] : label_sections)
        for (const auto& c : members) section_of_class.emplace(c, s);
    for (int g = 0; g < order; ++g) {
        SectionLabel element_level{xy_decompose(label_of(xy[static_cast<std::size_t>(g)].x), d, variant).x_part};
        auto it = section_of_class.find(label_of(g));
        if (it == section_of_class.end() || !(it->second == element_level))
            fail(report.labels_match, "section mismatch at " + to_string(G.element(g)));
        if (is_d_regular(label_of(g), d, variant)) ++report.d_regular_elements;
    }
    std::size_t identity_section_elements = 0;
    for (int g = 0; g < order; ++g)
        if (xy[static_cast<std::size_t>(g)].x == G.identity()) ++identity_section_elements;
    if (identity_section_elements != report.d_regular_elements) fail(report.identity_section, "identity section size differs from the d-regular count");
    return report;
}

}  // namespace glblocks::oracle
