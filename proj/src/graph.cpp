#include "nhr/graph.hpp"

#include "nhr/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

namespace nhr {

SimpleGraph::SimpleGraph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0)), 0)
{
    require(n >= 0 && n <= kMaxVertices, ErrorKind::SizeLimit,
            "graph order " + std::to_string(n) + " outside [0, 64]");
}

SimpleGraph SimpleGraph::complete(int n)
{
    SimpleGraph g(n);
    for (int v = 0; v < n; ++v) g.adj_[v] = g.all() & ~bit(v);
    return g;
}

SimpleGraph SimpleGraph::path(int n)
{
    SimpleGraph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

SimpleGraph SimpleGraph::cycle(int n)
{
    require(n >= 3, ErrorKind::Precondition, "cycle needs at least 3 vertices");
    SimpleGraph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

SimpleGraph SimpleGraph::from_edges(int n, std::span<const Edge> edges)
{
    SimpleGraph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void SimpleGraph::check_vertex(int v) const
{
    require(v >= 0 && v < n_, ErrorKind::Precondition,
            "vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
}

int SimpleGraph::max_degree() const
{
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

int SimpleGraph::min_degree() const
{
    if (n_ == 0) return 0;
    int d = n_;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

std::size_t SimpleGraph::edge_count() const { return edge_count_in(all()); }

std::size_t SimpleGraph::edge_count_in(Mask within) const
{
    std::size_t twice = 0;
    for_each_bit(within, [&](int v) { twice += popcount(adj_[v] & within); });
    return twice / 2;
}

std::vector<Edge> SimpleGraph::edges() const
{
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        for_each_bit(adj_[u] & ~low_bits(u + 1), [&](int v) { out.emplace_back(u, v); });
    return out;
}

void SimpleGraph::add_edge(int u, int v)
{
    check_vertex(u);
    check_vertex(v);
    require(u != v, ErrorKind::Precondition, "self-loop at vertex " + std::to_string(u));
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
}

void SimpleGraph::remove_edge(int u, int v)
{
    check_vertex(u);
    check_vertex(v);
    adj_[u] &= ~bit(v);
    adj_[v] &= ~bit(u);
}

SimpleGraph SimpleGraph::induced(std::span<const int> vertices) const
{
    SimpleGraph g(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (adjacent(vertices[i], vertices[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

SimpleGraph SimpleGraph::induced(Mask vertices) const
{
    const auto list = to_vector(vertices);
    return induced(std::span<const int>(list));
}

SimpleGraph SimpleGraph::complement() const
{
    SimpleGraph g(n_);
    for (int v = 0; v < n_; ++v) g.adj_[v] = all() & ~adj_[v] & ~bit(v);
    return g;
}

SimpleGraph SimpleGraph::square() const
{
    SimpleGraph g(n_);
    for (int v = 0; v < n_; ++v) {
        Mask reach = adj_[v];
        for_each_bit(adj_[v], [&](int u) { reach |= adj_[u]; });
        g.adj_[v] = reach & ~bit(v);
    }
    return g;
}

bool SimpleGraph::is_independent(Mask s) const
{
    bool ok = true;
    for_each_bit(s, [&](int v) { ok = ok && (adj_[v] & s) == 0; });
    return ok;
}

bool SimpleGraph::is_clique(Mask s) const
{
    bool ok = true;
    for_each_bit(s, [&](int v) { ok = ok && (adj_[v] & s) == (s & ~bit(v)); });
    return ok;
}

SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b)
{
    SimpleGraph g(a.order() + b.order());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(a.order() + u, a.order() + v);
    return g;
}

std::vector<Mask> connected_components(const SimpleGraph& g, Mask within)
{
    std::vector<Mask> out;
    Mask left = within;
    while (left) {
        Mask comp = bit(lowest(left));
        Mask frontier = comp;
        while (frontier) {
            Mask next = 0;
            for_each_bit(frontier, [&](int v) { next |= g.neighbours(v); });
            next &= within & ~comp;
            comp |= next;
            frontier = next;
        }
        out.push_back(comp);
        left &= ~comp;
    }
    return out;
}

namespace {

    // Colour refinement to the coarsest equitable partition. Cell ids are
    // assigned by sorting signatures, so the result is label-independent.
    std::vector<int> refine(const SimpleGraph& g, std::vector<int> colour)
    {
        const int n = g.order();
        int cells = colour.empty() ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;
        for (;;) {
            std::vector<std::pair<std::vector<int>, int>> sig(n);
            for (int v = 0; v < n; ++v) {
                std::vector<int> counts(cells + 1, 0);
                counts[0] = colour[v];
                for_each_bit(g.neighbours(v), [&](int u) { ++counts[colour[u] + 1]; });
                sig[v] = {std::move(counts), v};
            }
            std::vector<std::vector<int>> distinct;
            distinct.reserve(n);
            for (auto& s : sig) distinct.push_back(s.first);
            std::sort(distinct.begin(), distinct.end());
            distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
            std::vector<int> next(n);
            for (int v = 0; v < n; ++v)
                next[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v].first) -
                                           distinct.begin());
            const int new_cells = static_cast<int>(distinct.size());
            if (new_cells == cells) return next;
            colour = std::move(next);
            cells = new_cells;
        }
    }

    std::vector<Mask> relabel(const SimpleGraph& g, const std::vector<int>& position)
    {
        std::vector<Mask> rows(g.order(), 0);
        for (int v = 0; v < g.order(); ++v)
            for_each_bit(g.neighbours(v), [&](int u) { rows[position[v]] |= bit(position[u]); });
        return rows;
    }

    void search_canonical(const SimpleGraph& g, const std::vector<int>& colour, std::vector<Mask>& best,
                          bool& have_best)
    {
        const int n = g.order();
        std::vector<int> size(n, 0);
        for (int c : colour) ++size[c];
        int target = -1;
        for (int c = 0; c < n; ++c)
            if (size[c] > 1) {
                target = c;
                break;
            }
        if (target < 0) {
            auto rows = relabel(g, colour);
            if (!have_best || rows < best) {
                best = std::move(rows);
                have_best = true;
            }
            return;
        }
        Mask cell = 0;
        for (int v = 0; v < n; ++v)
            if (colour[v] == target) cell |= bit(v);
        Mask tried = 0;
        for_each_bit(cell, [&](int v) {
            // Twins inside the cell give isomorphic subtrees.
            bool twin_of_tried = false;
            for_each_bit(tried, [&](int u) {
                if ((g.neighbours(u) & ~bit(v)) == (g.neighbours(v) & ~bit(u))) twin_of_tried = true;
            });
            if (twin_of_tried) return;
            tried |= bit(v);
            std::vector<int> next(n);
            for (int u = 0; u < n; ++u) next[u] = 2 * colour[u] + ((colour[u] == target && u != v) ? 1 : 0);
            search_canonical(g, refine(g, next), best, have_best);
        });
    }

}  // namespace

std::string CanonicalForm::key() const
{
    std::ostringstream out;
    out << "n" << n;
    for (int v = 0; v < n; ++v) out << ':' << std::hex << (rows[v] & low_bits(v));
    return out.str();
}

CanonicalForm canonical_form(const SimpleGraph& g)
{
    CanonicalForm form;
    form.n = g.order();
    if (g.order() == 0) return form;
    bool have = false;
    search_canonical(g, refine(g, std::vector<int>(g.order(), 0)), form.rows, have);
    return form;
}

bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b)
{
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

const char* to_string(Colour c) { return c == Colour::Red ? "red" : "blue"; }

TwoColouring::TwoColouring(int n, Colour fill)
    : red_(fill == Colour::Red ? SimpleGraph::complete(n) : SimpleGraph(n)),
      blue_(fill == Colour::Blue ? SimpleGraph::complete(n) : SimpleGraph(n))
{
}

TwoColouring TwoColouring::from_red_graph(const SimpleGraph& red)
{
    TwoColouring c(red.order(), Colour::Blue);
    c.red_ = red;
    c.blue_ = red.complement();
    return c;
}

void TwoColouring::set(int u, int v, Colour c)
{
    if (c == Colour::Red) {
        blue_.remove_edge(u, v);
        red_.add_edge(u, v);
    } else {
        red_.remove_edge(u, v);
        blue_.add_edge(u, v);
    }
}

TwoColouring TwoColouring::induced(std::span<const int> vertices) const
{
    return from_red_graph(red_.induced(vertices));
}

TwoColouring TwoColouring::swapped() const { return from_red_graph(blue_); }

}  // namespace nhr
