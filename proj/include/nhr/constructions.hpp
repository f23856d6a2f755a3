#pragma once

#include "nhr/graph.hpp"
#include "nhr/pattern.hpp"

#include <string>

namespace nhr {

/// Vertex blocks of a constructed colouring: R first, then B, then E.
struct ColouringPartition {
    Mask r = 0;
    Mask b = 0;
    Mask e = 0;
};

struct ConstructionSpec {
    std::string kind;
    std::string pattern;
    int n = 0;
    int ell = 0;
    int r_size = 0;
    int b_size = 0;
    int e_size = 0;
};

struct Construction {
    TwoColouring colouring;
    ColouringPartition partition;
    ConstructionSpec spec;
};

/// R red clique of (k−α)n−1 vertices, B blue clique of kn−1, [R,B] red.
Construction lower_bound_colouring(const PatternGraph& h, int n);

/// Square of C_{3ℓ+4} with the edges inside one vertex's neighbourhood removed.
PatternGraph build_Hk(int ell);

/// R red (k−α−2)n−1, B blue kn−1, E blue ℓ; [E,R] blue, [E,B] red, [R,B] red.
Construction prop1_colouring(int ell, int n);

/// Fewest vertices a red copy of h must place in R when B is red-independent
/// and E is red-adjacent only to B.
int min_red_core(const SimpleGraph& h);

/// Counting argument for a prop1 colouring: upper bounds on the number of
/// disjoint red and blue copies, without search.
struct StructuralBound {
    int max_red_copies = 0;
    int max_blue_copies = 0;
};
StructuralBound prop1_structural_bound(const Construction& c, const PatternGraph& h);

}  // namespace nhr
