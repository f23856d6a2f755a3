#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace nhr {

/// Vertex set over at most 64 vertices; bit i set means vertex i is present.
using Mask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr Mask bit(int i) { return Mask{1} << i; }

constexpr Mask low_bits(int n) { return n >= 64 ? ~Mask{0} : (bit(n) - 1); }

constexpr int popcount(Mask m) { return std::popcount(m); }

constexpr int lowest(Mask m) { return std::countr_zero(m); }

constexpr bool contains(Mask m, int i) { return (m >> i) & 1U; }

template <class F>
constexpr void for_each_bit(Mask m, F&& f)
{
    while (m) {
        f(lowest(m));
        m &= m - 1;
    }
}

inline std::vector<int> to_vector(Mask m)
{
    std::vector<int> out;
    out.reserve(popcount(m));
    for_each_bit(m, [&](int v) { out.push_back(v); });
    return out;
}

template <class Range>
Mask to_mask(const Range& vertices)
{
    Mask m = 0;
    for (int v : vertices) m |= bit(v);
    return m;
}

}  // namespace nhr
