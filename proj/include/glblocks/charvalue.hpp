#pragma once

// Values of the unipotent class functions χ^ν on all classes of GL(n,q):
// Kostka–Foulkes polynomials by charge, Green polynomials, and the
// Fong–Srinivasan recursion peeling primary components.

#include "glblocks/exact.hpp"
#include "glblocks/glclass.hpp"
#include "glblocks/memo.hpp"
#include "glblocks/partition.hpp"
#include "glblocks/qarith.hpp"
#include "glblocks/symchar.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace glblocks {

/// Integer polynomial, ascending coefficients, no trailing zeros.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

    static IntPolynomial monomial(int degree, BigInt coeff = 1)
    {
        std::vector<BigInt> c(static_cast<std::size_t>(degree + 1));
        c.back() = std::move(coeff);
        return IntPolynomial(std::move(c));
    }

    const std::vector<BigInt>& coefficients() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    BigInt coefficient(int i) const { return i >= 0 && i <= degree() ? c_[static_cast<std::size_t>(i)] : BigInt(0); }

    IntPolynomial& operator+=(const IntPolynomial& other)
    {
        if (other.c_.size() > c_.size()) c_.resize(other.c_.size());
        for (std::size_t i = 0; i < other.c_.size(); ++i) c_[i] += other.c_[i];
        trim();
        return *this;
    }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        return IntPolynomial(std::move(out));
    }

    BigInt operator()(const BigInt& t) const
    {
        BigInt value = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) value = value * t + *it;
        return value;
    }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<BigInt> c_;
};

inline std::string to_string(const IntPolynomial& p, const std::string& var = "t")
{
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        BigInt c = p.coefficient(i);
        if (c == 0) continue;
        std::string mag = (c < 0 ? BigInt(-c) : c).str();
        std::string term = i == 0 ? mag : (mag == "1" ? "" : mag) + var + (i > 1 ? "^" + std::to_string(i) : "");
        out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        out += term;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Kostka–Foulkes polynomials

namespace detail {

// Charge of a word whose content is a partition (letters 1..k).
inline int charge(std::vector<int> word)
{
    int total = 0;
    while (!word.empty()) {
        int top = *std::max_element(word.begin(), word.end());
        std::vector<bool> used(word.size(), false);
        int pos = static_cast<int>(word.size());
        int index = 0;
        int size = static_cast<int>(word.size());
        for (int letter = 1; letter <= top; ++letter) {
            // move left cyclically from pos to the next occurrence of letter
            bool wrapped = false;
            int found = -1;
            for (int step = 1; step <= size; ++step) {
                int i = pos - step;
                if (i < 0) {
                    i += size;
                    wrapped = true;
                }
                if (!used[static_cast<std::size_t>(i)] && word[static_cast<std::size_t>(i)] == letter) {
                    found = i;
                    break;
                }
            }
            if (found < 0) break;
            if (letter > 1 && wrapped) ++index;
            total += index;
            used[static_cast<std::size_t>(found)] = true;
            pos = found;
        }
        std::vector<int> rest;
        for (std::size_t i = 0; i < word.size(); ++i)
            if (!used[i]) rest.push_back(word[i]);
        word = std::move(rest);
    }
    return total;
}

// Semistandard tableaux of shape lambda and content mu; letter k is placed as
// a horizontal strip bounded by the fill of the row above before k.
inline void for_each_ssyt(const Partition& lambda, const Partition& mu, const std::function<void(const std::vector<std::vector<int>>&)>& visit)
{
    std::size_t rows_n = static_cast<std::size_t>(lambda.length());
    std::vector<std::vector<int>> rows(rows_n);
    for (std::size_t r = 0; r < rows_n; ++r) rows[r].assign(static_cast<std::size_t>(lambda[static_cast<int>(r)]), 0);
    std::vector<int> filled(rows_n, 0);
    std::function<void(int)> place = [&](int letter) {
        if (letter > mu.length()) {
            visit(rows);
            return;
        }
        std::vector<int> before = filled;
        std::function<void(std::size_t, int)> strip = [&](std::size_t row, int remaining) {
            if (row == rows_n) {
                if (remaining == 0) place(letter + 1);
                return;
            }
            int have = filled[row];
            int limit = row == 0 ? lambda[0] : std::min(lambda[static_cast<int>(row)], before[row - 1]);
            for (int add = std::min(remaining, limit - have); add >= 0; --add) {
                for (int j = have; j < have + add; ++j) rows[row][static_cast<std::size_t>(j)] = letter;
                filled[row] += add;
                strip(row + 1, remaining - add);
                filled[row] -= add;
            }
        };
        strip(0, mu[letter - 1]);
    };
    place(1);
}

}  // namespace detail

/// K_{λμ}(t) = Σ_T t^{charge(T)} over SSYT of shape λ and content μ.
inline IntPolynomial kostka_foulkes(const Partition& lambda, const Partition& mu)
{
    if (lambda.size() != mu.size())
        throw std::invalid_argument("kostka_foulkes: |" + to_string(lambda) + "| != |" + to_string(mu) + "|");
    static detail::Memo<std::pair<Partition, Partition>, IntPolynomial> memo;
    return memo.get_or_compute({lambda, mu}, [&] {
        IntPolynomial total;
        detail::for_each_ssyt(lambda, mu, [&](const std::vector<std::vector<int>>& rows) {
            std::vector<int> word;
            for (auto r = rows.rbegin(); r != rows.rend(); ++r) word.insert(word.end(), r->begin(), r->end());
            total += IntPolynomial::monomial(detail::charge(word));
        });
        return total;
    });
}

/// Q^μ_ρ(Q) = Σ_λ φ_λ(ρ) Q^{n(μ)} K_{λμ}(Q^{-1}), evaluated at the integer Q.
inline BigInt green_polynomial(const Partition& mu, const CycleType& rho, const BigInt& Q)
{
    if (mu.size() != rho.size())
        throw std::invalid_argument("green_polynomial: |" + to_string(mu) + "| != |" + to_string(rho) + "|");
    int top = mu.n_statistic();
    BigInt total = 0;
    for (const auto& lambda : partitions_of(mu.size())) {
        auto K = kostka_foulkes(lambda, mu);
        if (K.is_zero()) continue;
        BigInt modified = 0;
        for (int i = 0; i <= K.degree(); ++i) modified += K.coefficient(i) * ipow(Q, static_cast<unsigned>(top - i));
        total += sn_char(lambda, rho) * modified;
    }
    return total;
}

inline BigInt green_polynomial(const Partition& mu, const CycleType& rho, int q) { return green_polynomial(mu, rho, BigInt(q)); }

/// χ^ν on the unipotent class of Jordan type μ: Σ_ρ z_ρ^{-1} φ_ν(ρ) Q^μ_ρ(q).
inline BigInt unipotent_value_on_unipotent(const Partition& nu, const Partition& mu, const BigInt& q)
{
    if (nu.size() != mu.size())
        throw std::invalid_argument("unipotent_value_on_unipotent: |" + to_string(nu) + "| != |" + to_string(mu) + "|");
    if (nu.empty()) return 1;
    static detail::Memo<std::tuple<Partition, Partition, BigInt>, BigInt> memo;
    return memo.get_or_compute({nu, mu, q}, [&] {
        Rational total = 0;
        for (const auto& rho : partitions_of(nu.size()))
            total += Rational(sn_char(nu, rho) * green_polynomial(mu, rho, q), z_alpha(rho));
        return to_integer(total);
    });
}

// ---------------------------------------------------------------------------
// The recursion over primary components

/// a^ρ_{νλ} for a primary class ρ over an f ≠ X−1 of degree δ with partition κ:
/// Σ_{α ⊢ |κ|} z_α^{-1} Q^κ_α(q^δ) ε φ_{ν|λ}(α), keyed by λ; zero entries dropped.
inline std::map<Partition, BigInt> mn_step(const Partition& nu, int delta, const Partition& kappa, int q)
{
    if (kappa.empty() || delta < 1) throw std::invalid_argument("mn_step needs a nonempty primary component");
    using Key = std::tuple<Partition, int, Partition, int>;
    static detail::Memo<Key, std::map<Partition, BigInt>> memo;
    return memo.get_or_compute({nu, delta, kappa, q}, [&] {
        BigInt Q = ipow(BigInt(q), static_cast<unsigned>(delta));
        std::map<Partition, Rational> acc;
        for (const auto& alpha : partitions_of(kappa.size())) {
            auto layer = phi_coeffs(nu, alpha, delta);
            if (layer.empty()) continue;
            Rational weight(green_polynomial(kappa, alpha, Q), z_alpha(alpha));
            for (const auto& [lambda, coeff] : layer) acc[lambda] += weight * coeff;
        }
        std::map<Partition, BigInt> out;
        for (const auto& [lambda, value] : acc)
            if (value != 0) out.emplace(lambda, to_integer(value));
        return out;
    });
}

/// Composition of mn_step over the components of x (all f ≠ X−1), in x's
/// canonical order: α^x_{μλ} keyed by λ.
inline std::map<Partition, BigInt> alpha_coefficients(const Partition& mu, const GLClassLabel& x)
{
    std::map<Partition, BigInt> current{{mu, 1}};
    for (const auto& [f, kappa] : x.assignment) {
        if (is_x_minus_one(f)) throw std::invalid_argument("alpha_coefficients: X-1 component in " + to_string(x));
        std::map<Partition, BigInt> next;
        for (const auto& [lambda, coeff] : current) {
            if (lambda.size() < f.degree * kappa.size()) continue;
            for (const auto& [target, a] : mn_step(lambda, f.degree, kappa, x.q)) next[target] += coeff * a;
        }
        current.clear();
        for (auto& [lambda, coeff] : next)
            if (coeff != 0) current.emplace(lambda, std::move(coeff));
    }
    return current;
}

/// χ^ν(c): peel every f ≠ X−1 component, then evaluate on the unipotent remainder.
inline BigInt unipotent_value(const Partition& nu, const GLClassLabel& c)
{
    if (nu.size() != c.n)
        throw std::invalid_argument("unipotent_value: |" + to_string(nu) + "| != n = " + std::to_string(c.n));
    static detail::Memo<std::pair<Partition, GLClassLabel>, BigInt> memo;
    return memo.get_or_compute({nu, c}, [&] {
        std::vector<std::pair<PolyLabel, Partition>> semisimple_side;
        Partition unipotent_part;
        for (const auto& entry : c.assignment) {
            if (is_x_minus_one(entry.first)) unipotent_part = entry.second;
            else semisimple_side.push_back(entry);
        }
        GLClassLabel x(c.q, semisimple_side);
        BigInt total = 0;
        for (const auto& [lambda, coeff] : alpha_coefficients(nu, x)) {
            if (lambda.size() != unipotent_part.size()) continue;
            total += coeff * unipotent_value_on_unipotent(lambda, unipotent_part, BigInt(c.q));
        }
        return total;
    });
}

/// Sign making the value at the identity positive.
inline int char_sign(const Partition& nu, int q)
{
    BigInt degree = unipotent_value(nu, identity_class(nu.size(), q));
    if (degree == 0) throw std::logic_error("zero degree for " + to_string(nu));
    return degree > 0 ? 1 : -1;
}

/// q^{n(ν)} Π_{i≤n}(q^i − 1) / Π_{hooks h}(q^h − 1): the unipotent degree
/// from the hook formula, kept separate from the recursion.
inline BigInt unipotent_degree_hook_formula(const Partition& nu, int q)
{
    BigInt num = ipow(BigInt(q), static_cast<unsigned>(nu.n_statistic())) * gl_order_p_prime(nu.size(), q);
    BigInt den = 1;
    auto conj = nu.conjugate();
    for (int i = 0; i < nu.length(); ++i)
        for (int j = 0; j < nu[i]; ++j) {
            int hook = nu[i] - j + conj[j] - i - 1;
            den *= ipow(BigInt(q), static_cast<unsigned>(hook)) - 1;
        }
    return num / den;
}

/// χ^ν on every class of GL(n,q), with signs.
struct CharValueTable {
    int n = 0;
    int q = 2;
    std::vector<Partition> labels;           // partitions of n, decreasing lexicographic
    std::vector<GLClassLabel> classes;       // all_classes(n, q)
    std::vector<std::vector<BigInt>> value;  // value[i][j] = χ^{labels[i]}(classes[j])
    std::vector<int> sign;

    static CharValueTable build(int n, int q)
    {
        CharValueTable t;
        t.n = n;
        t.q = q;
        t.labels = partitions_of(n);
        t.classes = all_classes(n, q);
        for (const auto& nu : t.labels) {
            std::vector<BigInt> row;
            row.reserve(t.classes.size());
            for (const auto& c : t.classes) row.push_back(unipotent_value(nu, c));
            t.value.push_back(std::move(row));
            t.sign.push_back(char_sign(nu, q));
        }
        return t;
    }

    std::size_t label_index(const Partition& nu) const
    {
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == nu) return i;
        throw std::invalid_argument(to_string(nu) + " is not a partition of " + std::to_string(n));
    }

    std::size_t class_index(const GLClassLabel& c) const
    {
        auto it = std::lower_bound(classes.begin(), classes.end(), c);
        if (it == classes.end() || *it != c) throw std::invalid_argument("class " + to_string(c) + " not in table");
        return static_cast<std::size_t>(it - classes.begin());
    }

    /// Rows ν, columns class labels; values of χ^ν.
    std::string to_csv() const
    {
        std::string out = "nu";
        for (const auto& c : classes) out += ",\"" + to_string(c) + "\"";
        out += "\n";
        for (std::size_t i = 0; i < labels.size(); ++i) {
            out += "\"" + to_string(labels[i]) + "\"";
            for (const auto& v : value[i]) out += "," + v.str();
            out += "\n";
        }
        return out;
    }
};

namespace detail {

inline Memo<std::pair<int, int>, std::shared_ptr<const CharValueTable>>& char_value_tables()
{
    static Memo<std::pair<int, int>, std::shared_ptr<const CharValueTable>> cache;
    return cache;
}

}  // namespace detail

inline const CharValueTable& char_value_table(int n, int q)
{
    return *detail::char_value_tables().get_or_compute({n, q}, [&] { return std::make_shared<const CharValueTable>(CharValueTable::build(n, q)); });
}

/// Installs a table loaded from elsewhere; its classes must be all_classes(n, q).
inline const CharValueTable& seed_char_value_table(CharValueTable t)
{
    if (t.classes != all_classes(t.n, t.q) || t.labels != partitions_of(t.n) || t.value.size() != t.labels.size())
        throw std::invalid_argument("seeded table does not match the class and character lists");
    int n = t.n, q = t.q;
    return *detail::char_value_tables().insert({n, q}, std::make_shared<const CharValueTable>(std::move(t)));
}

}  // namespace glblocks
