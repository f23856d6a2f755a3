#pragma once

#include "nhr/budget.hpp"
#include "nhr/graph.hpp"
#include "nhr/rational.hpp"

#include <cstdint>
#include <optional>
#include <utility>

namespace nhr {

enum class DensityMode { Exact, Sampled };

struct DensityVerdict {
    bool holds = true;
    /// Violating pair (for single-set density the second set is empty).
    std::optional<std::pair<Mask, Mask>> witness;
    DensityMode mode = DensityMode::Exact;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

inline constexpr int kExactDensityLimit = 24;
inline constexpr std::uint64_t kDefaultSamples = 10'000;

/// e(X, Y) / (|X||Y|).
Rational pair_density(const SimpleGraph& g, Mask x, Mask y);

/// Smallest subset size counted: ⌈eps·n⌉.
int density_threshold(const Rational& eps, int n);

DensityVerdict is_bi_dense(const SimpleGraph& g, const Rational& eps, const Rational& gamma, DensityMode mode,
                           std::uint64_t seed = 0, std::uint64_t samples = kDefaultSamples);

DensityVerdict is_dense(const SimpleGraph& g, const Rational& eps, const Rational& gamma, DensityMode mode,
                        std::uint64_t seed = 0, std::uint64_t samples = kDefaultSamples);

/// A set U of exactly `target_size` vertices whose induced graph is certified
/// bi-(eps, gamma/2)-dense; BudgetExhausted if none is found.
Mask extract_bidense(const SimpleGraph& g, const Rational& eps, const Rational& gamma, int target_size,
                     std::uint64_t seed, int restarts = 64, Budget* budget = nullptr);

/// d^t / n^{t-1} - C(n, r) (m/n)^t, evaluated exactly.
Rational drc_lhs(const SimpleGraph& g, int t, int r, int m);

/// True if every r-subset of U has at least m common neighbours in g.
bool every_subset_has_common_neighbours(const SimpleGraph& g, Mask u, int r, int m);

/// Dependent random choice with exhaustive verification of the result.
Mask dependent_random_choice(const SimpleGraph& g, int t, int r, int m, int a, std::uint64_t seed,
                             int attempts = 64);

/// Calls f on each k-subset of `from` in colex order; stops when f returns false.
template <class F>
bool for_each_subset(Mask from, int k, F&& f)
{
    const auto items = to_vector(from);
    const int n = static_cast<int>(items.size());
    if (k < 0 || k > n) return true;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        Mask m = 0;
        for (int i : idx) m |= bit(items[i]);
        if (!f(m)) return false;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return true;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace nhr
