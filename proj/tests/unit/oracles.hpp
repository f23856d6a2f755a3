#pragma once

// Brute-force reference implementations. Nothing here calls into the search
// code under test; inputs are read through SimpleGraph::adjacent only.

#include "nhr/graph.hpp"
#include "nhr/rng.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

using nhr::Mask;
using Adj = std::vector<std::vector<bool>>;

inline Adj adjacency(const nhr::SimpleGraph& g)
{
    const int n = g.order();
    Adj a(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = i != j && g.adjacent(i, j);
    return a;
}

inline int size_of(Mask m)
{
    int c = 0;
    for (; m; m &= m - 1) ++c;
    return c;
}

inline bool independent(const Adj& a, Mask s)
{
    const int n = static_cast<int>(a.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((s >> i & 1) && (s >> j & 1) && a[i][j]) return false;
    return true;
}

inline int alpha(const nhr::SimpleGraph& g)
{
    const auto a = adjacency(g);
    const int n = g.order();
    int best = 0;
    for (Mask s = 0; s < (Mask{1} << n); ++s)
        if (size_of(s) > best && independent(a, s)) best = size_of(s);
    return best;
}

inline std::vector<std::vector<int>> distances(const Adj& a)
{
    const int n = static_cast<int>(a.size());
    const int inf = n + 1;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (int i = 0; i < n; ++i) {
        d[i][i] = 0;
        for (int j = 0; j < n; ++j)
            if (a[i][j]) d[i][j] = 1;
    }
    for (int m = 0; m < n; ++m)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][m] + d[m][j]);
    return d;
}

inline bool two_independent(const nhr::SimpleGraph& g, Mask s)
{
    const auto d = distances(adjacency(g));
    const int n = g.order();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((s >> i & 1) && (s >> j & 1) && d[i][j] < 3) return false;
    return true;
}

inline int max_two_independent(const nhr::SimpleGraph& g)
{
    const int n = g.order();
    int best = 0;
    for (Mask s = 0; s < (Mask{1} << n); ++s)
        if (size_of(s) > best && two_independent(g, s)) best = size_of(s);
    return best;
}

/// Every injective map of pattern into host (restricted to `allowed`), by
/// plain permutation enumeration with an edge check at the end.
inline void each_map(const nhr::SimpleGraph& host, const nhr::SimpleGraph& pattern, Mask allowed,
                     const std::function<bool(const std::vector<int>&)>& visit)
{
    const auto ha = adjacency(host);
    const auto pa = adjacency(pattern);
    const int k = pattern.order();
    std::vector<int> pool;
    for (int v = 0; v < host.order(); ++v)
        if (allowed >> v & 1) pool.push_back(v);
    std::vector<int> map(k);
    std::vector<bool> used(pool.size(), false);
    bool stop = false;
    std::function<void(int)> rec = [&](int i) {
        if (stop) return;
        if (i == k) {
            for (int a = 0; a < k; ++a)
                for (int b = 0; b < k; ++b)
                    if (pa[a][b] && !ha[map[a]][map[b]]) return;
            if (!visit(map)) stop = true;
            return;
        }
        for (std::size_t p = 0; p < pool.size(); ++p) {
            if (used[p]) continue;
            used[p] = true;
            map[i] = pool[p];
            rec(i + 1);
            used[p] = false;
        }
    };
    rec(0);
}

inline bool has_copy(const nhr::SimpleGraph& host, const nhr::SimpleGraph& pattern, Mask allowed = ~Mask{0})
{
    bool found = false;
    each_map(host, pattern, allowed, [&](const std::vector<int>&) {
        found = true;
        return false;
    });
    return found;
}

/// Distinct vertex sets carrying a copy.
inline std::vector<Mask> copy_sets(const nhr::SimpleGraph& host, const nhr::SimpleGraph& pattern,
                                   Mask allowed = ~Mask{0})
{
    std::vector<Mask> sets;
    each_map(host, pattern, allowed, [&](const std::vector<int>& m) {
        Mask s = 0;
        for (int v : m) s |= Mask{1} << v;
        sets.push_back(s);
        return true;
    });
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    return sets;
}

/// Largest number of pairwise disjoint sets from `sets`.
inline int max_disjoint(const std::vector<Mask>& sets, std::size_t from = 0, Mask used = 0)
{
    int best = 0;
    for (std::size_t i = from; i < sets.size(); ++i)
        if (!(sets[i] & used)) best = std::max(best, 1 + max_disjoint(sets, i + 1, used | sets[i]));
    return best;
}

inline int max_packing(const nhr::SimpleGraph& host, const nhr::SimpleGraph& pattern, Mask allowed = ~Mask{0})
{
    return max_disjoint(copy_sets(host, pattern, allowed));
}

/// Some packing of copies inside s leaves at most |s| mod k vertices.
/// Pivot on the lowest vertex: it is either left over or covered by a copy
/// through it. Copy sets are enumerated naively per pivot.
inline bool tileable(const nhr::SimpleGraph& host, const nhr::SimpleGraph& pattern, Mask s, int spare = -1)
{
    const int k = pattern.order();
    if (spare < 0) spare = size_of(s) % k;
    if (s == 0) return true;
    int v = 0;
    while (!(s >> v & 1)) ++v;
    if (spare > 0 && tileable(host, pattern, s & ~(Mask{1} << v), spare - 1)) return true;
    bool found = false;
    std::vector<Mask> through;
    each_map(host, pattern, s, [&](const std::vector<int>& m) {
        Mask img = 0;
        for (int w : m) img |= Mask{1} << w;
        if (img >> v & 1) through.push_back(img);
        return true;
    });
    std::sort(through.begin(), through.end());
    through.erase(std::unique(through.begin(), through.end()), through.end());
    for (Mask c : through)
        if (!found && tileable(host, pattern, s & ~c, spare)) found = true;
    return found;
}

inline nhr::SimpleGraph random_graph(int n, std::uint64_t num, std::uint64_t den, nhr::Rng& rng)
{
    nhr::SimpleGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.chance(num, den)) g.add_edge(i, j);
    return g;
}

inline nhr::TwoColouring colouring_from_bits(int n, std::uint64_t bits)
{
    nhr::SimpleGraph red(n);
    int e = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++e)
            if (bits >> e & 1) red.add_edge(i, j);
    return nhr::TwoColouring::from_red_graph(red);
}

/// Every colouring of K_n contains `copies` disjoint monochromatic copies.
inline bool every_colouring_forces(int n, const nhr::SimpleGraph& pattern, int copies)
{
    const int e = n * (n - 1) / 2;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << e); ++bits) {
        const auto col = colouring_from_bits(n, bits);
        if (max_packing(col.red(), pattern) < copies && max_packing(col.blue(), pattern) < copies) return false;
    }
    return true;
}

/// Smallest n at which every colouring forces the target.
inline int ramsey(const nhr::SimpleGraph& pattern, int copies, int n_max)
{
    for (int n = 1; n <= n_max; ++n)
        if (every_colouring_forces(n, pattern, copies)) return n;
    return -1;
}

inline long long cross_edges(const Adj& a, Mask x, Mask y)
{
    long long c = 0;
    const int n = static_cast<int>(a.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if ((x >> i & 1) && (y >> j & 1) && a[i][j]) ++c;
    return c;
}

/// Disjoint X, Y with |X|,|Y| >= t and e(X,Y) < gamma |X||Y|, gamma = gn/gd.
inline bool bi_dense(const nhr::SimpleGraph& g, int t, long long gn, long long gd)
{
    const auto a = adjacency(g);
    const int n = g.order();
    std::vector<int> side(n, 0);
    // Ternary enumeration: 0 none, 1 in X, 2 in Y.
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    for (long long code = 0; code < total; ++code) {
        Mask x = 0, y = 0;
        long long c = code;
        for (int i = 0; i < n; ++i, c /= 3) {
            if (c % 3 == 1) x |= Mask{1} << i;
            if (c % 3 == 2) y |= Mask{1} << i;
        }
        if (size_of(x) < t || size_of(y) < t) continue;
        if (cross_edges(a, x, y) * gd < gn * size_of(x) * size_of(y)) return false;
    }
    return true;
}

/// Every X with |X| >= max(t, 2) has e(X) >= gamma C(|X|, 2).
inline bool dense(const nhr::SimpleGraph& g, int t, long long gn, long long gd)
{
    const auto a = adjacency(g);
    const int n = g.order();
    for (Mask x = 0; x < (Mask{1} << n); ++x) {
        const long long s = size_of(x);
        if (s < std::max(t, 2)) continue;
        const long long e = cross_edges(a, x, x) / 2;
        if (e * 2 * gd < gn * s * (s - 1)) return false;
    }
    return true;
}

inline int common_neighbours(const Adj& a, const std::vector<int>& vs)
{
    int c = 0;
    const int n = static_cast<int>(a.size());
    for (int w = 0; w < n; ++w) {
        bool all = true;
        for (int v : vs) all = all && a[v][w];
        c += all;
    }
    return c;
}

inline bool pairs_have_common(const nhr::SimpleGraph& g, Mask u, int m)
{
    const auto a = adjacency(g);
    const int n = g.order();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((u >> i & 1) && (u >> j & 1) && common_neighbours(a, {i, j}) < m) return false;
    return true;
}

}  // namespace oracle
