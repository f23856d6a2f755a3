#pragma once

#include "nhr/budget.hpp"
#include "nhr/graph.hpp"
#include "nhr/pattern.hpp"
#include "nhr/rational.hpp"

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace nhr {

/// Injective map pattern vertex -> host vertex. `colour` is empty when the
/// host is an uncoloured graph.
struct Embedding {
    std::vector<int> host_map;
    std::optional<Colour> colour;

    Mask image() const { return to_mask(host_map); }
    friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// Independent validity checks, deliberately not sharing code with the search.
bool is_valid_embedding(const SimpleGraph& host, const SimpleGraph& pattern, std::span<const int> map);
bool is_valid_embedding(const TwoColouring& col, const SimpleGraph& pattern, const Embedding& e);

struct MatchOptions {
    /// Host vertices the copy may use.
    Mask allowed = ~Mask{0};
    /// Optional per-pattern-vertex host sets (empty = unrestricted).
    std::vector<Mask> domains;
    /// Interchangeable host vertices are tried once per node. Valid for
    /// existence only; enumeration ignores it.
    bool twin_pruning = true;
    Budget* budget = nullptr;
};

/// Some monomorphism of `pattern` into `host`, or none (complete search).
std::optional<std::vector<int>> find_copy(const SimpleGraph& host, const SimpleGraph& pattern,
                                          const MatchOptions& options = {});

/// Calls `visit` on every monomorphism until it returns false.
void for_each_copy(const SimpleGraph& host, const SimpleGraph& pattern, const MatchOptions& options,
                   const std::function<bool(std::span<const int>)>& visit);

/// Distinct vertex sets of copies; each returned mask is the image of some copy.
std::vector<Mask> copy_vertex_sets(const SimpleGraph& host, const SimpleGraph& pattern, const MatchOptions& options);

std::optional<Embedding> find_mono_copy(const TwoColouring& col, const PatternGraph& h, Colour colour,
                                        Budget* budget = nullptr, Mask within = ~Mask{0});

/// Orbit id (lowest member) of every vertex under Aut(g).
std::vector<int> vertex_orbits(const SimpleGraph& g);
/// One representative per orbit of ordered edges (a, b) under Aut(g).
std::vector<Edge> ordered_edge_orbit_representatives(const SimpleGraph& g);

/// Lemma-style greedy placement into common neighbourhoods.
Embedding greedy_embed(const SimpleGraph& g, const PatternGraph& h);

struct AliasedEmbedding {
    Embedding base;
    /// Pattern vertex in I -> host vertices that can replace its image.
    std::map<int, Mask> aliases;
};

struct CandidateEmbedParams {
    std::vector<Mask> targets;  // V_i per pattern vertex
    Mask independent = 0;       // I, independent in H
    Rational gamma;
    Rational eps;
};

/// Checks the exact size precondition only (density is checked separately).
bool candidate_sizes_ok(int host_order, const PatternGraph& h, const CandidateEmbedParams& p);

/// Candidate-set embedding with aliases for the I-vertices.
AliasedEmbedding candidate_embed(const SimpleGraph& g, const PatternGraph& h, const CandidateEmbedParams& p);

/// Placement order: descending number of already placed neighbours, I last,
/// ties by index.
std::vector<int> placement_order(const SimpleGraph& pattern, Mask last);

}  // namespace nhr
