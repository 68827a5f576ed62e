#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

namespace glblocks::detail {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

    std::size_t find(std::size_t x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

/// Connected components of {0..n-1} under `linked(i, j)` (queried for i < j),
/// each sorted, ordered by smallest member.
template <class Linked>
std::vector<std::vector<std::size_t>> connected_components(std::size_t n, Linked&& linked)
{
    UnionFind uf(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (uf.find(i) != uf.find(j) && linked(i, j)) uf.unite(i, j);
    std::vector<std::vector<std::size_t>> groups(n);
    for (std::size_t i = 0; i < n; ++i) groups[uf.find(i)].push_back(i);
    std::erase_if(groups, [](const auto& g) { return g.empty(); });
    return groups;
}

}  // namespace glblocks::detail
