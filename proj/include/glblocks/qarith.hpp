#pragma once

// Finite fields F_q (q = p^e small), monic irreducible polynomials over F_q
// and the order formulas of GL(n,q).

#include "glblocks/exact.hpp"
#include "glblocks/memo.hpp"
#include "glblocks/partition.hpp"
#include "glblocks/symchar.hpp"

#include <compare>
#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace glblocks {

struct PrimePower {
    int p = 2;
    int e = 1;
    int q = 2;

    static PrimePower of(int q)
    {
        if (q < 2) throw std::invalid_argument("q must be a prime power, got " + std::to_string(q));
        int p = 2;
        while (q % p != 0) ++p;
        int e = 0;
        int rest = q;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        if (rest != 1) throw std::invalid_argument("q must be a prime power, got " + std::to_string(q));
        return PrimePower{p, e, q};
    }

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

inline int mobius(int n)
{
    int result = 1;
    for (int f = 2; f * f <= n; ++f) {
        if (n % f) continue;
        n /= f;
        if (n % f == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

// ---------------------------------------------------------------------------
// F_q arithmetic

/// F_{p^e} with elements 0..q-1 read as base-p coefficient vectors modulo a
/// fixed monic irreducible of degree e over F_p. 0 and 1 are the field's zero
/// and one; p-1 is -1.
class FiniteField {
public:
    explicit FiniteField(PrimePower pq) : pq_(pq), q_(pq.q)
    {
        std::size_t q = static_cast<std::size_t>(q_);
        add_.assign(q * q, 0);
        mul_.assign(q * q, 0);
        neg_.assign(q, 0);
        inv_.assign(q, 0);
        modulus_ = prime_field_modulus(pq.p, pq.e);
        for (int a = 0; a < q_; ++a)
            for (int b = 0; b < q_; ++b) {
                add_[idx(a, b)] = add_digits(a, b);
                mul_[idx(a, b)] = mul_digits(a, b);
            }
        for (int a = 0; a < q_; ++a)
            for (int b = 0; b < q_; ++b) {
                if (add_[idx(a, b)] == 0) neg_[static_cast<std::size_t>(a)] = b;
                if (mul_[idx(a, b)] == 1) inv_[static_cast<std::size_t>(a)] = b;
            }
    }

    int q() const { return q_; }
    int characteristic() const { return pq_.p; }
    PrimePower prime_power() const { return pq_; }

    int add(int a, int b) const { return add_[idx(a, b)]; }
    int sub(int a, int b) const { return add_[idx(a, neg_[static_cast<std::size_t>(b)])]; }
    int mul(int a, int b) const { return mul_[idx(a, b)]; }
    int neg(int a) const { return neg_[static_cast<std::size_t>(a)]; }
    int inv(int a) const
    {
        if (a == 0) throw std::domain_error("inverse of zero");
        return inv_[static_cast<std::size_t>(a)];
    }
    int minus_one() const { return neg(1); }

private:
    std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * static_cast<std::size_t>(q_) + static_cast<std::size_t>(b); }

    std::vector<int> digits(int a) const
    {
        std::vector<int> out(static_cast<std::size_t>(pq_.e));
        for (int i = 0; i < pq_.e; ++i) {
            out[static_cast<std::size_t>(i)] = a % pq_.p;
            a /= pq_.p;
        }
        return out;
    }

    int from_digits(const std::vector<int>& digits) const
    {
        int value = 0;
        for (int i = pq_.e - 1; i >= 0; --i) value = value * pq_.p + digits[static_cast<std::size_t>(i)];
        return value;
    }

    int add_digits(int a, int b) const
    {
        auto da = digits(a), db = digits(b);
        for (int i = 0; i < pq_.e; ++i)
            da[static_cast<std::size_t>(i)] = (da[static_cast<std::size_t>(i)] + db[static_cast<std::size_t>(i)]) % pq_.p;
        return from_digits(da);
    }

    int mul_digits(int a, int b) const
    {
        int p = pq_.p, e = pq_.e;
        auto da = digits(a), db = digits(b);
        std::vector<int> prod(static_cast<std::size_t>(2 * e), 0);
        for (int i = 0; i < e; ++i)
            for (int j = 0; j < e; ++j)
                prod[static_cast<std::size_t>(i + j)] =
                    (prod[static_cast<std::size_t>(i + j)] + da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) % p;
        // reduce by the monic modulus x^e - Σ ... : modulus_ holds low coefficients of x^e
        for (int k = 2 * e - 1; k >= e; --k) {
            int c = prod[static_cast<std::size_t>(k)];
            if (!c) continue;
            prod[static_cast<std::size_t>(k)] = 0;
            for (int j = 0; j < e; ++j)
                prod[static_cast<std::size_t>(k - e + j)] =
                    ((prod[static_cast<std::size_t>(k - e + j)] - c * modulus_[static_cast<std::size_t>(j)]) % p + p) % p;
        }
        prod.resize(static_cast<std::size_t>(e));
        return from_digits(prod);
    }

    // Low coefficients of the first monic irreducible of degree e over F_p.
    static std::vector<int> prime_field_modulus(int p, int e)
    {
        if (e == 1) return {0};
        int count = 1;
        for (int i = 0; i < e; ++i) count *= p;
        for (int code = 0; code < count; ++code) {
            std::vector<int> f(static_cast<std::size_t>(e + 1));
            int c = code;
            for (int i = 0; i < e; ++i) {
                f[static_cast<std::size_t>(i)] = c % p;
                c /= p;
            }
            f[static_cast<std::size_t>(e)] = 1;
            if (prime_irreducible(f, p)) return std::vector<int>(f.begin(), f.end() - 1);
        }
        throw std::logic_error("no irreducible modulus found");
    }

    // Irreducibility over F_p (small degree) by trial division by monic polynomials.
    static bool prime_irreducible(const std::vector<int>& f, int p)
    {
        int deg = static_cast<int>(f.size()) - 1;
        for (int dg = 1; 2 * dg <= deg; ++dg) {
            int count = 1;
            for (int i = 0; i < dg; ++i) count *= p;
            for (int code = 0; code < count; ++code) {
                std::vector<int> g(static_cast<std::size_t>(dg + 1));
                int c = code;
                for (int i = 0; i < dg; ++i) {
                    g[static_cast<std::size_t>(i)] = c % p;
                    c /= p;
                }
                g[static_cast<std::size_t>(dg)] = 1;
                auto r = f;
                for (int k = deg; k >= dg; --k) {
                    int lead = r[static_cast<std::size_t>(k)] % p;
                    if (!lead) continue;
                    for (int j = 0; j <= dg; ++j)
                        r[static_cast<std::size_t>(k - dg + j)] =
                            ((r[static_cast<std::size_t>(k - dg + j)] - lead * g[static_cast<std::size_t>(j)]) % p + p) % p;
                }
                bool zero = true;
                for (int j = 0; j < dg; ++j)
                    if (r[static_cast<std::size_t>(j)] % p) zero = false;
                if (zero) return false;
            }
        }
        return true;
    }

    PrimePower pq_;
    int q_;
    std::vector<int> modulus_;
    std::vector<int> add_, mul_, neg_, inv_;
};

inline const FiniteField& field(int q)
{
    static detail::Memo<int, std::shared_ptr<const FiniteField>> cache;
    auto ptr = cache.get_or_compute(q, [&] { return std::make_shared<const FiniteField>(PrimePower::of(q)); });
    return *ptr;
}

// ---------------------------------------------------------------------------
// Polynomials over F_q (coefficients lowest degree first)

using FqPoly = std::vector<int>;

inline void trim(FqPoly& f)
{
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline FqPoly poly_mod(FqPoly f, const FqPoly& g, const FiniteField& F)
{
    trim(f);
    int dg = static_cast<int>(g.size()) - 1;
    int lead_inv = F.inv(g.back());
    while (static_cast<int>(f.size()) - 1 >= dg && !f.empty()) {
        int shift = static_cast<int>(f.size()) - 1 - dg;
        int c = F.mul(f.back(), lead_inv);
        for (int j = 0; j <= dg; ++j) {
            auto& slot = f[static_cast<std::size_t>(shift + j)];
            slot = F.sub(slot, F.mul(c, g[static_cast<std::size_t>(j)]));
        }
        trim(f);
    }
    return f;
}

inline FqPoly poly_mul(const FqPoly& a, const FqPoly& b, const FiniteField& F)
{
    if (a.empty() || b.empty()) return {};
    FqPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
    trim(out);
    return out;
}

/// Monic irreducible over F_q, ≠ X; identified by (q, degree, index) where the
/// index orders monic polynomials of a degree by Σ c_i q^i (constant term
/// varying fastest).
struct PolyLabel {
    int q = 2;
    int degree = 1;
    int index = 0;
    FqPoly coeffs;  // monic, lowest degree first; empty when not enumerated

    friend bool operator==(const PolyLabel& a, const PolyLabel& b)
    {
        return a.q == b.q && a.degree == b.degree && a.index == b.index;
    }
    friend std::strong_ordering operator<=>(const PolyLabel& a, const PolyLabel& b)
    {
        if (auto c = a.q <=> b.q; c != 0) return c;
        if (auto c = a.degree <=> b.degree; c != 0) return c;
        return a.index <=> b.index;
    }
};

inline bool is_x_minus_one(const PolyLabel& f)
{
    if (f.degree != 1) return false;
    const FiniteField& F = field(f.q);
    if (!f.coeffs.empty()) return f.coeffs[0] == F.minus_one();
    return false;
}

/// Human form such as "x^2+x+1"; non-prime fields print element codes in braces.
inline std::string to_string(const PolyLabel& f)
{
    if (f.coeffs.empty()) return "f[" + std::to_string(f.degree) + "," + std::to_string(f.index) + "]";
    bool prime = PrimePower::of(f.q).e == 1;
    std::string out;
    for (int k = f.degree; k >= 0; --k) {
        int c = f.coeffs[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        std::string coeff = prime ? std::to_string(c) : "{" + std::to_string(c) + "}";
        std::string term;
        if (k == 0) term = coeff;
        else {
            term = (c == 1 ? "" : coeff) + "x";
            if (k > 1) term += "^" + std::to_string(k);
        }
        out += (out.empty() ? "" : "+") + term;
    }
    return out;
}

enum class Distinguished { x, x_minus_one };

/// (1/d) Σ_{e|d} μ(e) q^{d/e}, minus excluded degree-1 polynomials when d = 1.
inline BigInt count_irreducibles(int q, int d, const std::set<Distinguished>& exclusions = {Distinguished::x})
{
    PrimePower::of(q);
    if (d < 1) throw std::invalid_argument("degree must be positive");
    BigInt total = 0;
    for (int e = 1; e <= d; ++e)
        if (d % e == 0) total += mobius(e) * ipow(BigInt(q), static_cast<unsigned>(d / e));
    total /= d;
    if (d == 1) total -= static_cast<int>(exclusions.size());
    return total;
}

inline constexpr long long kEnumerationGuard = 1'000'000;

struct ScaleGuard : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Monic irreducibles of degree d other than X, in index order; cached per (q, d).
inline const std::vector<PolyLabel>& enumerate_irreducibles(int q, int d)
{
    using List = std::shared_ptr<const std::vector<PolyLabel>>;
    static detail::Memo<std::pair<int, int>, List> cache;
    if (d < 1) throw std::invalid_argument("degree must be positive");
    long long total = 1;
    for (int i = 0; i < d; ++i) {
        total *= q;
        if (total > kEnumerationGuard)
            throw ScaleGuard("enumeration of degree-" + std::to_string(d) + " polynomials over F_" + std::to_string(q) +
                             " exceeds the q^d <= 10^6 guard");
    }
    auto list = cache.get_or_compute({q, d}, [&]() -> List {
        const FiniteField& F = field(q);
        std::vector<PolyLabel> divisors;
        for (int e = 1; 2 * e <= d; ++e) {
            const auto& lower = enumerate_irreducibles(q, e);
            divisors.insert(divisors.end(), lower.begin(), lower.end());
        }
        if (d >= 2) divisors.push_back(PolyLabel{q, 1, -1, {0, 1}});  // X itself
        auto out = std::make_shared<std::vector<PolyLabel>>();
        for (long long code = 0; code < total; ++code) {
            FqPoly f(static_cast<std::size_t>(d + 1));
            long long c = code;
            for (int i = 0; i < d; ++i) {
                f[static_cast<std::size_t>(i)] = static_cast<int>(c % q);
                c /= q;
            }
            f[static_cast<std::size_t>(d)] = 1;
            if (d == 1 && f[0] == 0) continue;  // X
            bool irreducible = true;
            for (const auto& g : divisors)
                if (poly_mod(f, g.coeffs, F).empty()) {
                    irreducible = false;
                    break;
                }
            if (irreducible) out->push_back(PolyLabel{q, d, static_cast<int>(out->size()), f});
        }
        return out;
    });
    return *list;
}

inline PolyLabel x_minus_one(int q)
{
    for (const auto& f : enumerate_irreducibles(q, 1))
        if (is_x_minus_one(f)) return f;
    throw std::logic_error("X-1 missing from the degree-1 list");
}

// ---------------------------------------------------------------------------
// Orders

/// Π_{i=0}^{n-1} (q^n - q^i)
inline BigInt gl_order(int n, int q)
{
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    BigInt order = 1;
    BigInt qn = ipow(BigInt(q), static_cast<unsigned>(n));
    for (int i = 0; i < n; ++i) order *= qn - ipow(BigInt(q), static_cast<unsigned>(i));
    return order;
}

/// |GL(n,q)|_{p'} = Π_{i=1}^{n} (q^i - 1)
inline BigInt gl_order_p_prime(int n, int q)
{
    BigInt order = 1;
    for (int i = 1; i <= n; ++i) order *= ipow(BigInt(q), static_cast<unsigned>(i)) - 1;
    return order;
}

/// |T_ᾱ| = Π_i (q^{d α_i} - 1)
inline BigInt torus_order(const CycleType& alpha, int d, int q)
{
    if (alpha.empty()) throw std::invalid_argument("torus_order needs a nonempty cycle type");
    BigInt order = 1;
    for (int part : alpha.parts()) order *= ipow(BigInt(q), static_cast<unsigned>(d * part)) - 1;
    return order;
}

/// a_λ(t) = t^{|λ|+2n(λ)} Π_i Π_{j=1}^{m_i} (1 - t^{-j}): the centralizer order
/// of a primary element with partition λ over a polynomial of degree δ, t = q^δ.
inline BigInt primary_centralizer_order(const Partition& lambda, const BigInt& t)
{
    int exponent = lambda.size() + 2 * lambda.n_statistic();
    BigInt product = 1;
    for (int part = 1; part <= (lambda.empty() ? 0 : lambda[0]); ++part) {
        int m = lambda.multiplicity(part);
        for (int j = 1; j <= m; ++j) {
            product *= ipow(t, static_cast<unsigned>(j)) - 1;
            exponent -= j;
        }
    }
    return product * ipow(t, static_cast<unsigned>(exponent));
}

}  // namespace glblocks
