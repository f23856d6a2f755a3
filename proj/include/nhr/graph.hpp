#pragma once

#include "nhr/bits.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace nhr {

using Edge = std::pair<int, int>;

/// Undirected simple graph on at most 64 vertices, one bitset row per vertex.
/// Rows are kept symmetric and loop-free by every mutator.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n);

    static SimpleGraph complete(int n);
    static SimpleGraph empty(int n) { return SimpleGraph(n); }
    static SimpleGraph path(int n);
    static SimpleGraph cycle(int n);
    static SimpleGraph from_edges(int n, std::span<const Edge> edges);

    int order() const { return n_; }
    Mask all() const { return low_bits(n_); }
    Mask neighbours(int v) const { return adj_[v]; }
    const std::vector<Mask>& rows() const { return adj_; }
    bool adjacent(int u, int v) const { return contains(adj_[u], v); }
    int degree(int v) const { return popcount(adj_[v]); }
    int degree_in(int v, Mask within) const { return popcount(adj_[v] & within); }
    int max_degree() const;
    int min_degree() const;
    std::size_t edge_count() const;
    std::size_t edge_count_in(Mask within) const;
    std::vector<Edge> edges() const;

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    /// Induced subgraph, relabelled 0..|vertices|-1 in the given order.
    SimpleGraph induced(std::span<const int> vertices) const;
    SimpleGraph induced(Mask vertices) const;
    SimpleGraph complement() const;
    /// Graph on the same vertices joining pairs at distance one or two.
    SimpleGraph square() const;

    bool is_independent(Mask s) const;
    bool is_clique(Mask s) const;

    friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<Mask> adj_;
};

SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b);

/// Vertex sets of the connected components, ordered by lowest vertex.
std::vector<Mask> connected_components(const SimpleGraph& g, Mask within);
inline std::vector<Mask> connected_components(const SimpleGraph& g)
{
    return connected_components(g, g.all());
}

/// Canonical adjacency form: two graphs are isomorphic iff their forms are
/// equal. Degree refinement followed by individualisation backtracking with
/// twin pruning; intended for the small graphs of pattern families.
struct CanonicalForm {
    int n = 0;
    std::vector<Mask> rows;

    std::string key() const;
    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const SimpleGraph& g);
bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b);

enum class Colour : std::uint8_t { Red = 0, Blue = 1 };

constexpr Colour other(Colour c) { return c == Colour::Red ? Colour::Blue : Colour::Red; }
const char* to_string(Colour c);

/// Red/blue colouring of every edge of K_n. Stored as the two colour classes,
/// which are edge-disjoint and together form the complete graph.
class TwoColouring {
public:
    TwoColouring() = default;
    explicit TwoColouring(int n, Colour fill = Colour::Blue);

    static TwoColouring from_red_graph(const SimpleGraph& red);

    int order() const { return red_.order(); }
    Colour colour(int u, int v) const { return red_.adjacent(u, v) ? Colour::Red : Colour::Blue; }
    void set(int u, int v, Colour c);

    const SimpleGraph& red() const { return red_; }
    const SimpleGraph& blue() const { return blue_; }
    const SimpleGraph& graph(Colour c) const { return c == Colour::Red ? red_ : blue_; }

    TwoColouring induced(std::span<const int> vertices) const;
    TwoColouring swapped() const;

    friend bool operator==(const TwoColouring&, const TwoColouring&) = default;

private:
    SimpleGraph red_;
    SimpleGraph blue_;
};

}  // namespace nhr
