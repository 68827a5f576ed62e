#pragma once

// Full character tables of small explicit groups by the Dixon–Schneider method
// (common eigenvectors of the class matrices modulo a prime p ≡ 1 mod exp(G)),
// lifted to exact cyclotomic values; the Borel permutation character and the
// unipotent constituents.

#include "glblocks/charvalue.hpp"
#include "glblocks/oracle/classes.hpp"
#include "glblocks/oracle/cyclotomic.hpp"
#include "glblocks/oracle/matrix_group.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace glblocks::oracle {

using Mod = std::int64_t;

namespace detail {

inline Mod pow_mod(Mod base, Mod exp, Mod p)
{
    Mod result = 1;
    base %= p;
    if (base < 0) base += p;
    while (exp > 0) {
        if (exp & 1) result = result * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return result;
}

inline Mod inv_mod(Mod a, Mod p) { return pow_mod(a, p - 2, p); }

inline bool is_prime(Mod n)
{
    if (n < 2) return false;
    for (Mod f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

inline Mod primitive_root(Mod p)
{
    std::vector<Mod> factors;
    Mod m = p - 1;
    for (Mod f = 2; f * f <= m; ++f)
        if (m % f == 0) {
            factors.push_back(f);
            while (m % f == 0) m /= f;
        }
    if (m > 1) factors.push_back(m);
    for (Mod g = 2; g < p; ++g) {
        bool ok = true;
        for (Mod f : factors)
            if (pow_mod(g, (p - 1) / f, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root");
}

using ModMatrix = std::vector<std::vector<Mod>>;

// Reduced row echelon form mod p; returns pivot columns.
inline std::vector<int> rref_mod(ModMatrix& rows, int cols, Mod p)
{
    std::vector<int> pivots;
    std::size_t rank = 0;
    for (int c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][static_cast<std::size_t>(c)] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        Mod inv = inv_mod(rows[rank][static_cast<std::size_t>(c)], p);
        for (auto& v : rows[rank]) v = v * inv % p;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank) continue;
            Mod f = rows[r][static_cast<std::size_t>(c)];
            if (!f) continue;
            for (int j = 0; j < cols; ++j)
                rows[r][static_cast<std::size_t>(j)] = ((rows[r][static_cast<std::size_t>(j)] - f * rows[rank][static_cast<std::size_t>(j)]) % p + p) % p;
        }
        pivots.push_back(c);
        ++rank;
    }
    return pivots;
}

// Null space of an m×m matrix mod p, as row vectors.
inline ModMatrix null_space_mod(ModMatrix m, Mod p)
{
    int cols = static_cast<int>(m.empty() ? 0 : m[0].size());
    auto pivots = rref_mod(m, cols, p);
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    ModMatrix basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<Mod> v(static_cast<std::size_t>(cols), 0);
        v[static_cast<std::size_t>(free)] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<std::size_t>(pivots[r])] = (p - m[r][static_cast<std::size_t>(free)]) % p;
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace detail

struct CharacterTable {
    int exponent = 1;
    Mod prime = 0;
    std::vector<std::vector<Cyclotomic>> values;  // [character][class]
    std::vector<Coeff> degrees;
    int primes_tried = 0;

    std::size_t size() const { return values.size(); }
};

inline constexpr std::size_t kDixonClassGuard = 40;
inline constexpr int kDixonPrimeBudget = 8;

namespace detail {

// One attempt at prime p; nullopt when the eigenspace splitting or the
// exactness checks fail.
inline std::optional<CharacterTable> dixon_attempt(const MatrixGroup& G, const OracleClassData& cd,
                                                   const std::vector<std::vector<std::vector<Mod>>>& c, int e, Mod p)
{
    std::size_t k = cd.class_count();
    Mod order = static_cast<Mod>(G.order());
    std::vector<Mod> h(k);
    for (std::size_t j = 0; j < k; ++j) h[j] = static_cast<Mod>(cd.classes[j].members.size());
    std::vector<std::size_t> inv_class(k);
    for (std::size_t j = 0; j < k; ++j)
        inv_class[j] = static_cast<std::size_t>(cd.class_of[static_cast<std::size_t>(G.inverse(cd.classes[j].representative))]);

    // split F_p^k into common eigenspaces of the A_i, (A_i)_{jl} = c_{ijl}
    std::vector<ModMatrix> spaces;  // each: basis rows
    {
        ModMatrix all(k, std::vector<Mod>(k, 0));
        for (std::size_t i = 0; i < k; ++i) all[i][i] = 1;
        spaces.push_back(std::move(all));
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (static_cast<int>(i) == cd.identity_class) continue;
        std::vector<ModMatrix> next;
        for (auto& W : spaces) {
            std::size_t m = W.size();
            if (m == 1) {
                next.push_back(std::move(W));
                continue;
            }
            // images A_i w, expressed in the basis W (W is in rref)
            ModMatrix rref = W;
            auto pivots = rref_mod(rref, static_cast<int>(k), p);
            ModMatrix C(m, std::vector<Mod>(m, 0));  // C[r][s]: coefficient of basis s in A_i w_r
            for (std::size_t r = 0; r < m; ++r) {
                std::vector<Mod> image(k, 0);
                for (std::size_t j = 0; j < k; ++j) {
                    Mod s = 0;
                    for (std::size_t l = 0; l < k; ++l) s = (s + c[i][j][l] * rref[r][l]) % p;
                    image[j] = s;
                }
                for (std::size_t s = 0; s < m; ++s) C[r][s] = image[static_cast<std::size_t>(pivots[s])];
            }
            // eigenvectors: row vectors a with a C = λ a
            std::size_t found = 0;
            for (Mod lambda = 0; lambda < p && found < m; ++lambda) {
                ModMatrix T(m, std::vector<Mod>(m, 0));  // transpose of (C - λ)
                for (std::size_t r = 0; r < m; ++r)
                    for (std::size_t s = 0; s < m; ++s) T[s][r] = ((C[r][s] - (r == s ? lambda : 0)) % p + p) % p;
                auto kernel = null_space_mod(T, p);
                if (kernel.empty()) continue;
                found += kernel.size();
                ModMatrix eigen;
                for (const auto& a : kernel) {
                    std::vector<Mod> v(k, 0);
                    for (std::size_t r = 0; r < m; ++r)
                        for (std::size_t j = 0; j < k; ++j) v[j] = (v[j] + a[r] * rref[r][j]) % p;
                    eigen.push_back(std::move(v));
                }
                next.push_back(std::move(eigen));
            }
            if (found != m) return std::nullopt;
        }
        spaces = std::move(next);
    }
    if (spaces.size() != k) return std::nullopt;

    Mod root = pow_mod(primitive_root(p), (p - 1) / e, p);
    Mod sqrt_bound = 1;
    while ((sqrt_bound + 1) * (sqrt_bound + 1) <= order) ++sqrt_bound;
    CharacterTable table;
    table.exponent = e;
    table.prime = p;
    std::size_t id = static_cast<std::size_t>(cd.identity_class);
    for (const auto& W : spaces) {
        std::vector<Mod> omega = W[0];
        if (omega[id] == 0) return std::nullopt;
        Mod scale = inv_mod(omega[id], p);
        for (auto& v : omega) v = v * scale % p;
        Mod S = 0;
        for (std::size_t j = 0; j < k; ++j) S = (S + omega[j] * omega[inv_class[j]] % p * inv_mod(h[j] % p, p)) % p;
        if (S == 0) return std::nullopt;
        Mod deg_sq = order % p * inv_mod(S, p) % p;
        Mod degree = 0;
        for (Mod f = 1; f <= sqrt_bound; ++f)
            if (f * f % p == deg_sq) {
                degree = f;
                break;
            }
        if (!degree) return std::nullopt;
        std::vector<Mod> chi(k);
        for (std::size_t j = 0; j < k; ++j) chi[j] = omega[j] * degree % p * inv_mod(h[j] % p, p) % p;
        // eigenvalue multiplicities on each class give exact values
        std::vector<Cyclotomic> row;
        for (std::size_t j = 0; j < k; ++j) {
            int o = cd.classes[j].element_order;
            int step = e / o;
            Cyclotomic value(e);
            Coeff total = 0;
            for (int m = 0; m < e; m += step) {
                Mod s = 0;
                for (int t = 0; t < o; ++t) {
                    Mod zt = pow_mod(root, static_cast<Mod>((e - (static_cast<long long>(m) * t) % e) % e), p);
                    s = (s + chi[static_cast<std::size_t>(cd.power_map[j][static_cast<std::size_t>(t)])] * zt) % p;
                }
                Mod mult = s * inv_mod(o, p) % p;
                if (mult > degree) return std::nullopt;
                value += Cyclotomic::root_power(e, m, mult);
                total += mult;
            }
            if (total != degree) return std::nullopt;
            row.push_back(std::move(value));
        }
        table.values.push_back(std::move(row));
        table.degrees.push_back(degree);
    }

    // exact orthogonality, rows and columns
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a; b < k; ++b) {
            Cyclotomic s(e);
            for (std::size_t j = 0; j < k; ++j) s += (table.values[a][j] * table.values[b][j].conj()).scaled(h[j]);
            if (!(s == Cyclotomic(e, a == b ? order : 0))) return std::nullopt;
        }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) {
            Cyclotomic s(e);
            for (std::size_t a = 0; a < k; ++a) s += table.values[a][i] * table.values[a][j].conj();
            if (!(s == Cyclotomic(e, i == j ? order / h[i] : 0))) return std::nullopt;
        }

    // deterministic order: by degree, then by reduced values
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    auto key = [&](std::size_t a) {
        std::vector<std::vector<Coeff>> r;
        for (const auto& v : table.values[a]) r.push_back(v.reduced());
        return std::make_pair(table.degrees[a], r);
    };
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
    CharacterTable sorted;
    sorted.exponent = e;
    sorted.prime = p;
    for (auto a : perm) {
        sorted.values.push_back(table.values[a]);
        sorted.degrees.push_back(table.degrees[a]);
    }
    return sorted;
}

}  // namespace detail

inline CharacterTable dixon_table(const MatrixGroup& G, const OracleClassData& cd)
{
    std::size_t k = cd.class_count();
    if (k > kDixonClassGuard) throw ScaleGuard("class count " + std::to_string(k) + " exceeds the Dixon guard of 40");
    int e = 1;
    for (const auto& cls : cd.classes) e = std::lcm(e, cls.element_order);

    // c[i][j][l] = #{(x, y) ∈ C_i × C_j : xy = z_l}
    std::vector<std::vector<std::vector<Mod>>> c(k, std::vector<std::vector<Mod>>(k, std::vector<Mod>(k, 0)));
    for (std::size_t l = 0; l < k; ++l) {
        int z = cd.classes[l].representative;
        for (int x = 0; x < static_cast<int>(G.order()); ++x) {
            int y = G.mul(G.inverse(x), z);
            ++c[static_cast<std::size_t>(cd.class_of[static_cast<std::size_t>(x)])][static_cast<std::size_t>(cd.class_of[static_cast<std::size_t>(y)])][l];
        }
    }
    Mod order = static_cast<Mod>(G.order());
    Mod p = e + 1;
    int tried = 0;
    while (tried < kDixonPrimeBudget) {
        while (!detail::is_prime(p) || p * p <= 4 * order) p += e;
        ++tried;
        auto cm = c;
        for (auto& a : cm)
            for (auto& b : a)
                for (auto& v : b) v %= p;
        if (auto table = detail::dixon_attempt(G, cd, cm, e, p)) {
            table->primes_tried = tried;
            return *table;
        }
        p += e;
    }
    throw std::runtime_error("Dixon-Schneider failed for " + std::to_string(kDixonPrimeBudget) + " primes");
}

// ---------------------------------------------------------------------------
// Borel permutation character

/// Canonical column form of the coset hB (B upper triangular): each column is
/// reduced against earlier pivots and scaled to pivot 1.
inline std::vector<int> flag_form(const Mat& h, const FiniteField& F)
{
    int n = h.n;
    std::vector<std::vector<int>> cols(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = h(i, j);
    std::vector<int> pivots;
    for (int j = 0; j < n; ++j) {
        auto& col = cols[static_cast<std::size_t>(j)];
        for (int i = 0; i < j; ++i) {
            int piv = pivots[static_cast<std::size_t>(i)];
            int f = col[static_cast<std::size_t>(piv)];
            if (!f) continue;
            const auto& prev = cols[static_cast<std::size_t>(i)];
            for (int r = 0; r < n; ++r) col[static_cast<std::size_t>(r)] = F.sub(col[static_cast<std::size_t>(r)], F.mul(f, prev[static_cast<std::size_t>(r)]));
        }
        int piv = 0;
        while (col[static_cast<std::size_t>(piv)] == 0) ++piv;
        int inv = F.inv(col[static_cast<std::size_t>(piv)]);
        for (auto& v : col) v = F.mul(v, inv);
        pivots.push_back(piv);
    }
    std::vector<int> out;
    for (const auto& col : cols) out.insert(out.end(), col.begin(), col.end());
    return out;
}

/// Number of fixed cosets of B, per class.
inline std::vector<Coeff> borel_permutation_character(const MatrixGroup& G, const OracleClassData& cd)
{
    const FiniteField& F = G.F();
    std::set<std::vector<int>> flags;
    std::vector<Mat> reps;
    for (int g = 0; g < static_cast<int>(G.order()); ++g)
        if (flags.insert(flag_form(G.element(g), F)).second) reps.push_back(G.element(g));
    std::vector<Coeff> out;
    for (const auto& cls : cd.classes) {
        Coeff fixed = 0;
        const Mat& g = G.element(cls.representative);
        for (const auto& h : reps)
            if (flag_form(mul(g, h, F), F) == flag_form(h, F)) ++fixed;
        out.push_back(fixed);
    }
    return out;
}

struct BorelConstituents {
    std::vector<Coeff> permutation_character;
    std::vector<Coeff> multiplicity;            // per table row
    std::map<Partition, std::size_t> labeled;   // λ ↦ table row
    std::vector<std::string> ties;
};

/// Decomposes the Borel permutation character and labels each constituent by
/// the partition with matching degree and multiplicity φ_λ(1).
inline BorelConstituents borel_unipotent_constituents(const MatrixGroup& G, const OracleClassData& cd, const CharacterTable& table)
{
    BorelConstituents out;
    out.permutation_character = borel_permutation_character(G, cd);
    std::size_t k = cd.class_count();
    int e = table.exponent;
    Coeff order = static_cast<Coeff>(G.order());
    for (std::size_t a = 0; a < table.size(); ++a) {
        Cyclotomic s(e);
        for (std::size_t j = 0; j < k; ++j)
            s += table.values[a][j].conj().scaled(out.permutation_character[j] * static_cast<Coeff>(cd.classes[j].members.size()));
        Coeff total = s.integer_value();
        if (total % order) throw std::logic_error("non-integral multiplicity in the Borel character");
        out.multiplicity.push_back(total / order);
    }
    int n = G.n();
    Partition identity_type(std::vector<int>(static_cast<std::size_t>(n), 1));
    for (const auto& lambda : partitions_of(n)) {
        Coeff degree = static_cast<Coeff>(unipotent_degree_hook_formula(lambda, G.q()));
        Coeff mult = static_cast<Coeff>(sn_char(lambda, identity_type));
        std::vector<std::size_t> candidates;
        for (std::size_t a = 0; a < table.size(); ++a)
            if (out.multiplicity[a] == mult && table.degrees[a] == degree) candidates.push_back(a);
        if (candidates.size() == 1) out.labeled.emplace(lambda, candidates.front());
        else out.ties.push_back(to_string(lambda) + ": " + std::to_string(candidates.size()) + " candidates");
    }
    return out;
}

struct DualityReport {
    bool nonvanishing = true;
    bool unipotent_identity = true;
    bool unipotent_count = true;
    std::size_t characters = 0;
    std::vector<std::string> failures;

    bool ok() const { return nonvanishing && unipotent_identity && unipotent_count; }
};

/// <χ, 1>_{G_u} ≠ 0 for every irreducible χ, and <χ_λ, 1>_{G_u} = χ_{λ*}(1)/|G|_{p'}.
inline DualityReport check_d1_duality_identity(const MatrixGroup& G, const OracleClassData& cd, const CharacterTable& table,
                                               const BorelConstituents& borel)
{
    DualityReport report;
    int e = table.exponent;
    Coeff order = static_cast<Coeff>(G.order());
    std::vector<std::size_t> unipotent;
    Coeff unipotent_elements = 0;
    for (std::size_t j = 0; j < cd.class_count(); ++j) {
        const auto& label = cd.classes[j].label;
        if (label.assignment.size() == 1 && is_x_minus_one(label.assignment[0].first)) {
            unipotent.push_back(j);
            unipotent_elements += static_cast<Coeff>(cd.classes[j].members.size());
        }
    }
    int n = G.n();
    if (BigInt(unipotent_elements) != ipow(BigInt(G.q()), static_cast<unsigned>(n * (n - 1)))) {
        report.unipotent_count = false;
        report.failures.push_back("unipotent count " + std::to_string(unipotent_elements));
    }
    std::vector<Cyclotomic> sums;
    for (std::size_t a = 0; a < table.size(); ++a) {
        Cyclotomic s(e);
        for (auto j : unipotent) s += table.values[a][j].scaled(static_cast<Coeff>(cd.classes[j].members.size()));
        if (s.is_zero()) {
            report.nonvanishing = false;
            report.failures.push_back("vanishing sum for character " + std::to_string(a));
        }
        sums.push_back(std::move(s));
    }
    report.characters = table.size();
    Coeff p_prime = static_cast<Coeff>(gl_order_p_prime(n, G.q()));
    for (const auto& [lambda, row] : borel.labeled) {
        auto star = borel.labeled.find(lambda.conjugate());
        if (star == borel.labeled.end()) {
            report.unipotent_identity = false;
            report.failures.push_back("no constituent for " + to_string(lambda.conjugate()));
            continue;
        }
        // Σ_u χ_λ(u) / |G| = χ_{λ*}(1) / |G|_{p'}
        if (!(sums[row].scaled(p_prime) == Cyclotomic(e, order * table.degrees[star->second]))) {
            report.unipotent_identity = false;
            report.failures.push_back("identity fails for " + to_string(lambda));
        }
    }
    return report;
}

}  // namespace glblocks::oracle
