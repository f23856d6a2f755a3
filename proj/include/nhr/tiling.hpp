#pragma once

#include "nhr/budget.hpp"
#include "nhr/embed.hpp"

#include <optional>
#include <vector>

namespace nhr {

struct Tiling {
    std::vector<Embedding> copies;
    Mask leftover = 0;
};

/// Pairwise disjoint copies, each valid in `host`.
bool is_valid_packing(const SimpleGraph& host, const SimpleGraph& pattern, const Tiling& t);

/// Exactly `count` disjoint copies of `pattern` inside `avail`, or none.
/// Complete search: a none-verdict is a certificate.
/// `orbit_reps` may carry precomputed vertex-orbit representatives of the pattern.
std::optional<std::vector<Mask>> pack_copies(const SimpleGraph& host, const SimpleGraph& pattern, Mask avail,
                                             int count, Budget* budget = nullptr,
                                             std::span<const int> orbit_reps = {});

/// One vertex per Aut(pattern) orbit.
std::vector<int> orbit_representatives(const SimpleGraph& pattern);

/// H-tiling of host[target]: leaves at most |target| mod k vertices, none
/// when `perfect` (which requires k to divide |target|).
std::optional<Tiling> find_tiling(const SimpleGraph& host, const PatternGraph& h, Mask target, bool perfect,
                                  Budget* budget = nullptr);
std::optional<Tiling> find_tiling(const TwoColouring& col, Colour colour, const PatternGraph& h, Mask target,
                                  bool perfect, Budget* budget = nullptr);

/// n disjoint monochromatic copies in the given colour, or none.
std::optional<Tiling> find_disjoint_mono(const TwoColouring& col, const PatternGraph& h, int n, Colour colour,
                                         Budget* budget = nullptr, Mask within = ~Mask{0});

/// Host vertices outside the copy that can stand in for pattern vertex v.
Mask alias_set(const SimpleGraph& host, const SimpleGraph& pattern, std::span<const int> map, int v);
Mask alias_set(const TwoColouring& col, const SimpleGraph& pattern, const Embedding& copy, int v);

/// Turns vertex sets known to carry a copy into explicit embeddings.
std::vector<Embedding> embed_sets(const SimpleGraph& host, const SimpleGraph& pattern, const std::vector<Mask>& sets,
                                  std::optional<Colour> colour = std::nullopt);

}  // namespace nhr
