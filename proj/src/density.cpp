#include "nhr/density.hpp"

#include "nhr/error.hpp"
#include "nhr/rng.hpp"

#include <algorithm>
#include <array>

namespace nhr {

namespace {

    void check_parameters(const Rational& eps, const Rational& gamma)
    {
        require(eps > 0 && eps <= 1, ErrorKind::Precondition, "eps must lie in (0, 1]");
        require(gamma >= 0 && gamma <= 1, ErrorKind::Precondition, "gamma must lie in [0, 1]");
    }

    Mask random_subset(Rng& rng, Mask from, int size)
    {
        auto items = to_vector(from);
        std::span<int> view(items);
        rng.shuffle(view);
        Mask out = 0;
        for (int i = 0; i < size; ++i) out |= bit(items[i]);
        return out;
    }

    // For a fixed X the sparsest partner is the s outside vertices with the
    // fewest neighbours in X.
    std::pair<long, Mask> sparsest_partner(const SimpleGraph& g, Mask universe, Mask x, int s)
    {
        std::array<std::pair<int, int>, kMaxVertices> deg{};
        int count = 0;
        for_each_bit(universe & ~x, [&](int v) { deg[count++] = {g.degree_in(v, x), v}; });
        std::partial_sort(deg.begin(), deg.begin() + s, deg.begin() + count);
        long edges = 0;
        Mask y = 0;
        for (int i = 0; i < s; ++i) {
            edges += deg[i].first;
            y |= bit(deg[i].second);
        }
        return {edges, y};
    }

    // Smallest bi-density violation inside `universe`, if any.
    std::optional<std::pair<Mask, Mask>> bi_violation(const SimpleGraph& g, Mask universe, const Rational& eps,
                                                      const Rational& gamma)
    {
        const int n = popcount(universe);
        const int s = std::max(1, density_threshold(eps, n));
        if (2 * s > n) return std::nullopt;
        const Rational bound = gamma * s * s;
        std::optional<std::pair<Mask, Mask>> found;
        for_each_subset(universe, s, [&](Mask x) {
            auto [edges, y] = sparsest_partner(g, universe, x, s);
            if (Rational(edges) < bound) {
                found.emplace(x, y);
                return false;
            }
            return true;
        });
        return found;
    }

}  // namespace

Rational pair_density(const SimpleGraph& g, Mask x, Mask y)
{
    require(x != 0 && y != 0, ErrorKind::EmptySet, "density needs non-empty sets");
    require((x & y) == 0, ErrorKind::OverlappingSets, "density sets must be disjoint");
    long edges = 0;
    for_each_bit(x, [&](int v) { edges += g.degree_in(v, y); });
    return Rational(edges, static_cast<long>(popcount(x)) * popcount(y));
}

int density_threshold(const Rational& eps, int n) { return static_cast<int>(ceil(eps * n)); }

DensityVerdict is_bi_dense(const SimpleGraph& g, const Rational& eps, const Rational& gamma, DensityMode mode,
                           std::uint64_t seed, std::uint64_t samples)
{
    check_parameters(eps, gamma);
    DensityVerdict verdict;
    verdict.mode = mode;
    verdict.seed = seed;
    const int n = g.order();
    if (mode == DensityMode::Exact) {
        require(n <= kExactDensityLimit, ErrorKind::SizeLimit, "exact density check limited to 24 vertices");
        verdict.witness = bi_violation(g, g.all(), eps, gamma);
        verdict.holds = !verdict.witness;
        return verdict;
    }
    verdict.samples = samples;
    const int s = std::max(1, density_threshold(eps, n));
    if (2 * s > n) return verdict;
    const Rational bound = gamma * s * s;
    Rng rng(seed);
    for (std::uint64_t i = 0; i < samples; ++i) {
        const Mask x = random_subset(rng, g.all(), s);
        auto [edges, y] = sparsest_partner(g, g.all(), x, s);
        if (Rational(edges) < bound) {
            verdict.holds = false;
            verdict.witness.emplace(x, y);
            return verdict;
        }
    }
    return verdict;
}

DensityVerdict is_dense(const SimpleGraph& g, const Rational& eps, const Rational& gamma, DensityMode mode,
                        std::uint64_t seed, std::uint64_t samples)
{
    check_parameters(eps, gamma);
    DensityVerdict verdict;
    verdict.mode = mode;
    verdict.seed = seed;
    const int n = g.order();
    // Density of a set needs a pair; sets of one vertex are not constrained.
    const int s = std::max(2, density_threshold(eps, n));
    if (s > n) return verdict;
    const Rational bound = gamma * (s * (s - 1) / 2);
    auto violates = [&](Mask x) { return Rational(static_cast<long>(g.edge_count_in(x))) < bound; };
    if (mode == DensityMode::Exact) {
        require(n <= kExactDensityLimit, ErrorKind::SizeLimit, "exact density check limited to 24 vertices");
        for_each_subset(g.all(), s, [&](Mask x) {
            if (violates(x)) {
                verdict.holds = false;
                verdict.witness.emplace(x, Mask{0});
                return false;
            }
            return true;
        });
        return verdict;
    }
    verdict.samples = samples;
    Rng rng(seed);
    for (std::uint64_t i = 0; i < samples; ++i) {
        const Mask x = random_subset(rng, g.all(), s);
        if (violates(x)) {
            verdict.holds = false;
            verdict.witness.emplace(x, Mask{0});
            return verdict;
        }
    }
    return verdict;
}

Mask extract_bidense(const SimpleGraph& g, const Rational& eps, const Rational& gamma, int target_size,
                     std::uint64_t seed, int restarts, Budget* budget)
{
    check_parameters(eps, gamma);
    const int n = g.order();
    require(target_size >= 0 && target_size <= n, ErrorKind::Precondition, "target size exceeds the graph");
    require(n <= kExactDensityLimit, ErrorKind::SizeLimit, "certification limited to 24 vertices");
    const Rational half = gamma / 2;
    auto certified = [&](Mask u) {
        if (budget) budget->charge();
        return !bi_violation(g, u, eps, half);
    };

    Rng rng(seed);
    for (int attempt = 0; attempt < restarts; ++attempt) {
        Mask u = g.all();
        // Restart 0 starts from the whole graph, later ones from a random superset of the target.
        if (attempt > 0) u = random_subset(rng, g.all(), target_size + static_cast<int>(rng.below(n - target_size + 1)));
        while (popcount(u) > target_size) {
            if (budget) budget->charge();
            // Score vertices by how many violating (X, Y) pairs they sit in.
            const int size = popcount(u);
            const int s = std::max(1, density_threshold(eps, size));
            std::array<long, kMaxVertices> score{};
            bool any = false;
            if (2 * s <= size) {
                const Rational bound = half * s * s;
                for_each_subset(u, s, [&](Mask x) {
                    auto [edges, y] = sparsest_partner(g, u, x, s);
                    if (Rational(edges) < bound) {
                        any = true;
                        for_each_bit(x | y, [&](int v) { ++score[v]; });
                    }
                    return true;
                });
            }
            int drop = -1;
            if (any) {
                long best = -1;
                for_each_bit(u, [&](int v) {
                    if (score[v] > best) {
                        best = score[v];
                        drop = v;
                    }
                });
            } else {
                const auto items = to_vector(u);
                drop = items[rng.below(items.size())];
            }
            u &= ~bit(drop);
        }
        if (certified(u)) return u;
    }
    if (n <= 20) {
        std::optional<Mask> found;
        for_each_subset(g.all(), target_size, [&](Mask u) {
            if (certified(u)) {
                found = u;
                return false;
            }
            return true;
        });
        if (found) return *found;
    }
    throw Error(ErrorKind::BudgetExhausted, "no certified bi-dense set of the requested size found");
}

Rational drc_lhs(const SimpleGraph& g, int t, int r, int m)
{
    const int n = g.order();
    require(n > 0 && t >= 1 && r >= 1 && m >= 0, ErrorKind::Precondition, "invalid dependent random choice input");
    const Rational d(BigInt(2 * g.edge_count()), BigInt(n));
    BigInt binom = 1;
    for (int i = 0; i < r; ++i) binom = binom * (n - i) / (i + 1);
    return pow(d, t) / pow(Rational(n), t - 1) - Rational(binom) * pow(Rational(m, n), t);
}

bool every_subset_has_common_neighbours(const SimpleGraph& g, Mask u, int r, int m)
{
    return for_each_subset(u, r, [&](Mask s) {
        Mask common = g.all();
        for_each_bit(s, [&](int v) { common &= g.neighbours(v); });
        return popcount(common) >= m;
    });
}

Mask dependent_random_choice(const SimpleGraph& g, int t, int r, int m, int a, std::uint64_t seed, int attempts)
{
    const int n = g.order();
    require(n > 0, ErrorKind::Precondition, "empty graph");
    const Rational lhs = drc_lhs(g, t, r, m);
    if (lhs < a) throw Error(ErrorKind::HypothesisFails, "inequality fails: lhs = " + to_string(lhs));
    Rng rng(seed);
    for (int attempt = 0; attempt < attempts; ++attempt) {
        Mask u = g.all();
        for (int i = 0; i < t; ++i) u &= g.neighbours(static_cast<int>(rng.below(n)));
        // Delete one vertex from every bad r-subset.
        Mask keep = u;
        for_each_subset(u, r, [&](Mask s) {
            if ((s & keep) != s) return true;
            Mask common = g.all();
            for_each_bit(s, [&](int v) { common &= g.neighbours(v); });
            if (popcount(common) < m) keep &= ~bit(lowest(s));
            return true;
        });
        if (popcount(keep) >= a && every_subset_has_common_neighbours(g, keep, r, m)) return keep;
    }
    throw Error(ErrorKind::BudgetExhausted, "dependent random choice retries exhausted");
}

}  // namespace nhr
