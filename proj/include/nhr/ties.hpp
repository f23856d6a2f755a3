#pragma once

#include "nhr/budget.hpp"
#include "nhr/embed.hpp"

#include <optional>
#include <string>

namespace nhr {

/// A red and a blue copy of H spanning exactly 2k−α vertices. The tie's
/// edge set is the union of the two copies' edges.
struct Tie {
    Mask vertices = 0;
    Embedding red_copy;
    Embedding blue_copy;
};

struct TieCheck {
    std::optional<Tie> tie;
    std::string reason;  // "size", "missing red copy", "missing blue copy", "copies do not span"
    bool accepted() const { return tie.has_value(); }
};

TieCheck is_tie(const TwoColouring& col, Mask s, const PatternGraph& h);

/// Tie edge set is exactly the witness union and no edge of it is redundant.
bool tie_is_edge_minimal(const Tie& t, const PatternGraph& h);

enum class TieMode { Direct, Guided };

/// A tie whose red-only part lies in R and blue-only part in B.
/// Throws NoneFound when the complete search finds nothing.
Tie find_tie(const TwoColouring& col, Mask r, Mask b, const PatternGraph& h, TieMode mode,
             int size_floor = -1, Budget* budget = nullptr);

struct Join {
    Embedding red_copy;
    Embedding blue_copy;
};

bool is_valid_join(const TwoColouring& col, const PatternGraph& h, const Join& j);

/// Red H in R and blue H in B with every pair between them red.
std::optional<Join> find_join(const TwoColouring& col, Mask r, Mask b, const PatternGraph& h,
                              Budget* budget = nullptr);

struct Ladder {
    Mask large_red = 0;   // L_r
    Mask large_blue = 0;  // L_b
    Mask small_red = 0;   // S_r
    Mask small_blue = 0;  // S_b
    Mask r4 = 0;
    Mask b4 = 0;
};

/// Throws LadderStuck with the 1-based step index as detail when no vertex
/// qualifies.
Ladder clique_ladder(const TwoColouring& col, Mask r, Mask b, const PatternGraph& h);

/// Clique sizes used by the ladder: ⌈√m/2⌉ and ⌈√m/4⌉.
int ceil_sqrt_over(std::size_t m, int divisor);

}  // namespace nhr
