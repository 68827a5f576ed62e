#pragma once

// Elements of Z[ζ_e] as integer combinations of ζ_e^0..ζ_e^{e-1}; equality is
// decided after reduction modulo the cyclotomic polynomial Φ_e.

#include "glblocks/memo.hpp"

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace glblocks::oracle {

using Coeff = std::int64_t;

namespace detail {

inline std::vector<Coeff> poly_divide_monic(std::vector<Coeff> num, const std::vector<Coeff>& den, std::vector<Coeff>* quotient)
{
    int dn = static_cast<int>(num.size()) - 1, dd = static_cast<int>(den.size()) - 1;
    std::vector<Coeff> quot(static_cast<std::size_t>(std::max(dn - dd + 1, 0)), 0);
    for (int k = dn; k >= dd; --k) {
        Coeff c = num[static_cast<std::size_t>(k)];
        if (!c) continue;
        quot[static_cast<std::size_t>(k - dd)] = c;
        for (int j = 0; j <= dd; ++j) num[static_cast<std::size_t>(k - dd + j)] -= c * den[static_cast<std::size_t>(j)];
    }
    num.resize(static_cast<std::size_t>(std::max(dd, 0)));
    if (quotient) *quotient = std::move(quot);
    return num;
}

}  // namespace detail

/// Φ_e, ascending coefficients; cached.
inline const std::vector<Coeff>& cyclotomic_polynomial(int e)
{
    static glblocks::detail::Memo<int, std::shared_ptr<const std::vector<Coeff>>> cache;
    if (e < 1) throw std::invalid_argument("cyclotomic order must be positive");
    return *cache.get_or_compute(e, [&] {
        std::vector<Coeff> p(static_cast<std::size_t>(e + 1), 0);
        p[0] = -1;
        p[static_cast<std::size_t>(e)] = 1;
        for (int d = 1; d < e; ++d) {
            if (e % d) continue;
            std::vector<Coeff> q;
            auto rem = detail::poly_divide_monic(p, cyclotomic_polynomial(d), &q);
            for (auto r : rem)
                if (r) throw std::logic_error("cyclotomic division left a remainder");
            p = std::move(q);
        }
        return std::make_shared<const std::vector<Coeff>>(std::move(p));
    });
}

class Cyclotomic {
public:
    Cyclotomic() = default;
    explicit Cyclotomic(int e, Coeff constant = 0) : e_(e), c_(static_cast<std::size_t>(e), 0) { c_[0] = constant; }

    static Cyclotomic root_power(int e, int m, Coeff coeff = 1)
    {
        Cyclotomic z(e);
        z.c_[static_cast<std::size_t>(((m % e) + e) % e)] = coeff;
        return z;
    }

    int order() const { return e_; }
    Coeff coefficient(int m) const { return c_[static_cast<std::size_t>(m)]; }

    Cyclotomic& operator+=(const Cyclotomic& o)
    {
        check(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    Cyclotomic& operator-=(const Cyclotomic& o)
    {
        check(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }

    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b)
    {
        a.check(b);
        Cyclotomic out(a.e_);
        for (int i = 0; i < a.e_; ++i) {
            Coeff ai = a.c_[static_cast<std::size_t>(i)];
            if (!ai) continue;
            for (int j = 0; j < a.e_; ++j) {
                Coeff bj = b.c_[static_cast<std::size_t>(j)];
                if (bj) out.c_[static_cast<std::size_t>((i + j) % a.e_)] += ai * bj;
            }
        }
        return out;
    }

    Cyclotomic scaled(Coeff k) const
    {
        Cyclotomic out = *this;
        for (auto& v : out.c_) v *= k;
        return out;
    }

    /// Complex conjugate: ζ^m ↦ ζ^{-m}.
    Cyclotomic conj() const
    {
        Cyclotomic out(e_);
        for (int m = 0; m < e_; ++m) out.c_[static_cast<std::size_t>((e_ - m) % e_)] = c_[static_cast<std::size_t>(m)];
        return out;
    }

    /// Canonical coefficients of degree < φ(e).
    std::vector<Coeff> reduced() const
    {
        return detail::poly_divide_monic(c_, cyclotomic_polynomial(e_), nullptr);
    }

    bool is_zero() const
    {
        for (auto v : reduced())
            if (v) return false;
        return true;
    }

    bool is_integer() const
    {
        auto r = reduced();
        for (std::size_t i = 1; i < r.size(); ++i)
            if (r[i]) return false;
        return true;
    }

    Coeff integer_value() const
    {
        if (!is_integer()) throw std::domain_error("cyclotomic value is not an integer");
        auto r = reduced();
        return r.empty() ? 0 : r[0];
    }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return (a - b).is_zero(); }

    std::string to_string() const
    {
        auto r = reduced();
        std::string out;
        for (std::size_t m = 0; m < r.size(); ++m) {
            if (!r[m]) continue;
            std::string term = m == 0 ? std::to_string(r[m]) : (r[m] == 1 ? "" : r[m] == -1 ? "-" : std::to_string(r[m]) + "*") + "z" + std::to_string(e_) + "^" + std::to_string(m);
            if (!out.empty() && term[0] != '-') out += "+";
            out += term;
        }
        return out.empty() ? "0" : out;
    }

private:
    void check(const Cyclotomic& o) const
    {
        if (o.e_ != e_) throw std::invalid_argument("cyclotomic orders differ");
    }

    int e_ = 1;
    std::vector<Coeff> c_{0};
};

}  // namespace glblocks::oracle
