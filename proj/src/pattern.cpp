#include "nhr/pattern.hpp"

#include "nhr/error.hpp"

#include <algorithm>

namespace nhr {

namespace {

    void check_size(const SimpleGraph& g)
    {
        require(g.order() <= kMaxVertices, ErrorKind::SizeLimit, "exact path limited to 64 vertices");
    }

    // Max clique in `adj` restricted to P (Tomita-style colouring bound).
    struct CliqueSearch {
        const std::vector<Mask>& adj;
        Mask best = 0;
        int best_size = 0;

        void expand(Mask current, int size, Mask candidates)
        {
            if (candidates == 0) {
                if (size > best_size) {
                    best_size = size;
                    best = current;
                }
                return;
            }
            // Greedy colouring of candidates gives an upper bound per vertex.
            std::vector<int> order;
            std::vector<int> bound;
            Mask uncoloured = candidates;
            int colour = 0;
            while (uncoloured) {
                ++colour;
                Mask available = uncoloured;
                while (available) {
                    int v = lowest(available);
                    available &= ~bit(v) & ~adj[v];
                    uncoloured &= ~bit(v);
                    order.push_back(v);
                    bound.push_back(colour);
                }
            }
            for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
                if (size + bound[i] <= best_size) return;
                const int v = order[i];
                expand(current | bit(v), size + 1, candidates & adj[v]);
                candidates &= ~bit(v);
            }
        }
    };

    void bron_kerbosch(const std::vector<Mask>& adj, Mask r, Mask p, Mask x, std::vector<Mask>& out)
    {
        if (p == 0 && x == 0) {
            out.push_back(r);
            return;
        }
        const Mask px = p | x;
        int pivot = lowest(px);
        int best = -1;
        for_each_bit(px, [&](int u) {
            int c = popcount(p & adj[u]);
            if (c > best) {
                best = c;
                pivot = u;
            }
        });
        for_each_bit(p & ~adj[pivot], [&](int v) {
            bron_kerbosch(adj, r | bit(v), p & adj[v], x & adj[v], out);
            p &= ~bit(v);
            x |= bit(v);
        });
    }

}  // namespace

IndependenceResult independence_number(const SimpleGraph& g)
{
    check_size(g);
    const SimpleGraph comp = g.complement();
    CliqueSearch search{comp.rows()};
    search.expand(0, 0, g.all());
    return {search.best_size, search.best};
}

Mask two_independent_set(const SimpleGraph& g)
{
    check_size(g);
    return independence_number(g.square()).witness;
}

std::vector<Mask> maximal_independent_sets(const SimpleGraph& g)
{
    check_size(g);
    std::vector<Mask> out;
    if (g.order() == 0) return {Mask{0}};
    const SimpleGraph comp = g.complement();
    bron_kerbosch(comp.rows(), 0, g.all(), 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

PatternGraph::PatternGraph(SimpleGraph g, std::string name) : graph_(std::move(g)), name_(std::move(name))
{
    delta_ = graph_.max_degree();
    const auto ind = independence_number(graph_);
    alpha_ = ind.alpha;
    max_ind_set_ = ind.witness;
    require(popcount(max_ind_set_) == alpha_ && graph_.is_independent(max_ind_set_), ErrorKind::Defect,
            "independence witness inconsistent");
    two_ind_set_ = two_independent_set(graph_);
    edges_ = graph_.edge_count();
}

bool PatternGraph::has_isolated_vertex() const
{
    for (int v = 0; v < k(); ++v)
        if (graph_.degree(v) == 0) return true;
    return false;
}

GraphFamily::GraphFamily(std::vector<SimpleGraph> graphs)
{
    for (const auto& g : graphs) add(g);
}

bool GraphFamily::add(const SimpleGraph& g)
{
    std::string k = canonical_form(g).key();
    if (std::find(keys_.begin(), keys_.end(), k) != keys_.end()) return false;
    keys_.push_back(std::move(k));
    members_.push_back(g);
    return true;
}

bool GraphFamily::contains(const SimpleGraph& g) const
{
    const std::string k = canonical_form(g).key();
    return std::find(keys_.begin(), keys_.end(), k) != keys_.end();
}

std::string GraphFamily::key() const
{
    std::vector<std::string> sorted = keys_;
    std::sort(sorted.begin(), sorted.end());
    std::string out = "{";
    for (std::size_t i = 0; i < sorted.size(); ++i) out += (i ? "," : "") + sorted[i];
    return out + "}";
}

bool GraphFamily::subset_of(const GraphFamily& other) const
{
    return std::all_of(members_.begin(), members_.end(), [&](const SimpleGraph& g) { return other.contains(g); });
}

DerivedFamilies derived_families(const SimpleGraph& g)
{
    require(g.order() > 0, ErrorKind::Precondition, "derived families need a non-empty graph");
    const int alpha = independence_number(g).alpha;
    DerivedFamilies out;
    for (Mask s : maximal_independent_sets(g)) {
        const Mask rest = g.all() & ~s;
        const SimpleGraph minus = g.induced(rest);
        out.d.add(minus);
        const bool maximum = popcount(s) == alpha;
        if (maximum) out.d_prime.add(minus);
        for (Mask comp : connected_components(minus)) {
            const SimpleGraph piece = minus.induced(comp);
            out.d_c.add(piece);
            if (maximum) out.d_c_prime.add(piece);
        }
    }
    return out;
}

}  // namespace nhr
