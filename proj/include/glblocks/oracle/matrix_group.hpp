#pragma once

// Explicit matrices over F_q and the full group GL(n,q) for small n, q.

#include "glblocks/exact.hpp"
#include "glblocks/qarith.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace glblocks::oracle {

/// Square matrix over F_q, row-major with field element codes.
struct Mat {
    int n = 0;
    std::vector<int> a;

    Mat() = default;
    explicit Mat(int n_) : n(n_), a(static_cast<std::size_t>(n_ * n_), 0) {}

    int& operator()(int i, int j) { return a[static_cast<std::size_t>(i * n + j)]; }
    int operator()(int i, int j) const { return a[static_cast<std::size_t>(i * n + j)]; }

    static Mat identity(int n)
    {
        Mat m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    friend bool operator==(const Mat&, const Mat&) = default;
};

inline Mat mul(const Mat& x, const Mat& y, const FiniteField& F)
{
    Mat out(x.n);
    for (int i = 0; i < x.n; ++i)
        for (int k = 0; k < x.n; ++k) {
            int xik = x(i, k);
            if (!xik) continue;
            for (int j = 0; j < x.n; ++j) out(i, j) = F.add(out(i, j), F.mul(xik, y(k, j)));
        }
    return out;
}

inline Mat add(const Mat& x, const Mat& y, const FiniteField& F)
{
    Mat out(x.n);
    for (std::size_t i = 0; i < x.a.size(); ++i) out.a[i] = F.add(x.a[i], y.a[i]);
    return out;
}

inline Mat sub(const Mat& x, const Mat& y, const FiniteField& F)
{
    Mat out(x.n);
    for (std::size_t i = 0; i < x.a.size(); ++i) out.a[i] = F.sub(x.a[i], y.a[i]);
    return out;
}

/// f(g) for a polynomial with coefficients lowest degree first (Horner).
inline Mat evaluate(const FqPoly& f, const Mat& g, const FiniteField& F)
{
    Mat out(g.n);
    for (auto it = f.rbegin(); it != f.rend(); ++it) {
        out = mul(out, g, F);
        for (int i = 0; i < g.n; ++i) out(i, i) = F.add(out(i, i), *it);
    }
    return out;
}

/// Reduced row echelon form in place, pivots sought in the first `cols`
/// columns (rows may be longer, e.g. augmented); returns the rank.
inline int row_reduce(std::vector<std::vector<int>>& rows, int cols, const FiniteField& F, std::vector<int>* pivots = nullptr)
{
    int rank = 0;
    int nrows = static_cast<int>(rows.size());
    for (int c = 0; c < cols && rank < nrows; ++c) {
        int pivot = -1;
        for (int r = rank; r < nrows; ++r)
            if (rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(pivot)]);
        auto& pr = rows[static_cast<std::size_t>(rank)];
        int inv = F.inv(pr[static_cast<std::size_t>(c)]);
        for (auto& v : pr) v = F.mul(v, inv);
        for (int r = 0; r < nrows; ++r) {
            if (r == rank) continue;
            auto& row = rows[static_cast<std::size_t>(r)];
            int factor = row[static_cast<std::size_t>(c)];
            if (!factor) continue;
            for (std::size_t j = 0; j < row.size(); ++j) row[j] = F.sub(row[j], F.mul(factor, pr[j]));
        }
        if (pivots) pivots->push_back(c);
        ++rank;
    }
    return rank;
}

inline std::vector<std::vector<int>> rows_of(const Mat& m)
{
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(m.n), std::vector<int>(static_cast<std::size_t>(m.n)));
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, j);
    return rows;
}

inline int rank(const Mat& m, const FiniteField& F)
{
    auto rows = rows_of(m);
    return row_reduce(rows, m.n, F);
}

/// Basis of {v : m v = 0}, as column vectors.
inline std::vector<std::vector<int>> kernel(const Mat& m, const FiniteField& F)
{
    auto rows = rows_of(m);
    std::vector<int> pivots;
    row_reduce(rows, m.n, F, &pivots);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.n), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<int>> basis;
    for (int free = 0; free < m.n; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<int> v(static_cast<std::size_t>(m.n), 0);
        v[static_cast<std::size_t>(free)] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<std::size_t>(pivots[r])] = F.neg(rows[r][static_cast<std::size_t>(free)]);
        basis.push_back(std::move(v));
    }
    return basis;
}

inline Mat inverse(const Mat& m, const FiniteField& F)
{
    int n = m.n;
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(2 * n), 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, j);
        rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + i)] = 1;
    }
    if (row_reduce(rows, n, F) != n) throw std::domain_error("singular matrix");
    Mat out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + j)];
    return out;
}

/// Matrix whose columns are the given vectors.
inline Mat from_columns(const std::vector<std::vector<int>>& cols)
{
    Mat m(static_cast<int>(cols.size()));
    for (int j = 0; j < m.n; ++j)
        for (int i = 0; i < m.n; ++i) m(i, j) = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    return m;
}

inline std::string to_string(const Mat& m)
{
    std::string out = "[";
    for (int i = 0; i < m.n; ++i) {
        if (i) out += ";";
        for (int j = 0; j < m.n; ++j) out += (j ? " " : "") + std::to_string(m(i, j));
    }
    return out + "]";
}

inline constexpr long long kGroupOrderGuard = 25000;

/// Every invertible n×n matrix over F_q, indexed; products looked up by code.
class MatrixGroup {
public:
    MatrixGroup(int n, int q) : n_(n), q_(q), field_(&field(q))
    {
        BigInt order = gl_order(n, q);
        if (order > kGroupOrderGuard)
            throw ScaleGuard("|GL(" + std::to_string(n) + "," + std::to_string(q) + ")| = " + order.str() + " exceeds the 25000 guard");
        std::uint64_t total = 1;
        for (int i = 0; i < n * n; ++i) total *= static_cast<std::uint64_t>(q);
        for (std::uint64_t code = 0; code < total; ++code) {
            Mat m = decode(code);
            if (rank(m, *field_) == n) {
                index_.emplace(code, static_cast<int>(elements_.size()));
                elements_.push_back(std::move(m));
            }
        }
        if (BigInt(elements_.size()) != order) throw std::logic_error("matrix enumeration disagrees with |GL(n,q)|");
        identity_ = index_of(Mat::identity(n));
        inverse_.resize(elements_.size());
        for (std::size_t i = 0; i < elements_.size(); ++i) inverse_[i] = index_of(glblocks::oracle::inverse(elements_[i], *field_));
    }

    int n() const { return n_; }
    int q() const { return q_; }
    const FiniteField& F() const { return *field_; }
    std::size_t order() const { return elements_.size(); }
    const Mat& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }
    int identity() const { return identity_; }
    int inverse(int i) const { return inverse_[static_cast<std::size_t>(i)]; }

    std::uint64_t encode(const Mat& m) const
    {
        std::uint64_t code = 0;
        for (auto it = m.a.rbegin(); it != m.a.rend(); ++it) code = code * static_cast<std::uint64_t>(q_) + static_cast<std::uint64_t>(*it);
        return code;
    }

    int index_of(const Mat& m) const
    {
        auto it = index_.find(encode(m));
        if (it == index_.end()) throw std::invalid_argument("matrix is not invertible");
        return it->second;
    }

    int mul(int a, int b) const { return index_of(glblocks::oracle::mul(element(a), element(b), *field_)); }

    /// h^{-1} g h
    int conjugate(int g, int h) const { return mul(inverse(h), mul(g, h)); }

private:
    Mat decode(std::uint64_t code) const
    {
        Mat m(n_);
        for (auto& v : m.a) {
            v = static_cast<int>(code % static_cast<std::uint64_t>(q_));
            code /= static_cast<std::uint64_t>(q_);
        }
        return m;
    }

    int n_, q_;
    const FiniteField* field_;
    std::vector<Mat> elements_;
    std::unordered_map<std::uint64_t, int> index_;
    std::vector<int> inverse_;
    int identity_ = 0;
};

inline MatrixGroup build_group(int n, int q) { return MatrixGroup(n, q); }

}  // namespace glblocks::oracle
