#include "nhr/constructions.hpp"

#include "nhr/error.hpp"

namespace nhr {

namespace {

    Mask block(int start, int size) { return size == 0 ? 0 : (low_bits(size) << start); }

    void colour_block(TwoColouring& c, Mask x, Mask y, Colour colour)
    {
        for_each_bit(x, [&](int u) {
            for_each_bit(y, [&](int v) {
                if (u != v) c.set(u, v, colour);
            });
        });
    }

}  // namespace

Construction lower_bound_colouring(const PatternGraph& h, int n)
{
    require(n >= 1, ErrorKind::Precondition, "n must be positive");
    require(!h.has_isolated_vertex(), ErrorKind::Precondition, "pattern has an isolated vertex");
    const int k = h.k();
    const int a = h.alpha();
    const int r = (k - a) * n - 1;
    const int b = k * n - 1;
    require(r >= 0, ErrorKind::Precondition, "negative red block");
    require(r + b <= kMaxVertices, ErrorKind::SizeLimit, "colouring exceeds 64 vertices");
    Construction out;
    out.colouring = TwoColouring(r + b, Colour::Red);
    out.partition.r = block(0, r);
    out.partition.b = block(r, b);
    colour_block(out.colouring, out.partition.b, out.partition.b, Colour::Blue);
    out.spec = {"lower_bound", h.name(), n, 0, r, b, 0};
    return out;
}

PatternGraph build_Hk(int ell)
{
    require(ell >= 4, ErrorKind::Precondition, "H_k needs ell >= 4");
    const int k = 3 * ell + 4;
    require(k <= kMaxVertices, ErrorKind::SizeLimit, "H_k exceeds 64 vertices");
    SimpleGraph g(k);
    for (int v = 0; v < k; ++v) {
        g.add_edge(v, (v + 1) % k);
        g.add_edge(v, (v + 2) % k);
    }
    const Mask nb = g.neighbours(0);
    for_each_bit(nb, [&](int u) {
        for_each_bit(nb & g.neighbours(u), [&](int w) { g.remove_edge(u, w); });
    });
    PatternGraph h(g, "Hk" + std::to_string(ell));
    if (h.max_degree() != 4)
        throw Error(ErrorKind::ParameterMismatch, "H_k max degree is not 4", h.max_degree());
    if (h.alpha() != ell + 3)
        throw Error(ErrorKind::ParameterMismatch, "H_k independence number differs from ell+3", h.alpha());
    return h;
}

Construction prop1_colouring(int ell, int n)
{
    require(ell >= 4, ErrorKind::Precondition, "prop1 colouring needs ell >= 4");
    require(n >= 1 && 2 * (n + 1) <= ell, ErrorKind::Precondition, "prop1 colouring needs 1 <= n <= ell/2 - 1");
    const int k = 3 * ell + 4;
    const int a = ell + 3;
    const int r = (k - a - 2) * n - 1;
    const int b = k * n - 1;
    const int e = ell;
    require(r + b + e <= kMaxVertices, ErrorKind::SizeLimit, "colouring exceeds 64 vertices");
    require(r + b + e >= (2 * k - a) * n - 1, ErrorKind::Defect, "prop1 size arithmetic");
    Construction out;
    out.colouring = TwoColouring(r + b + e, Colour::Red);
    out.partition.r = block(0, r);
    out.partition.b = block(r, b);
    out.partition.e = block(r + b, e);
    colour_block(out.colouring, out.partition.b, out.partition.b, Colour::Blue);
    colour_block(out.colouring, out.partition.e, out.partition.e, Colour::Blue);
    colour_block(out.colouring, out.partition.e, out.partition.r, Colour::Blue);
    out.spec = {"prop1", "Hk" + std::to_string(ell), n, ell, r, b, e};
    return out;
}

int min_red_core(const SimpleGraph& h)
{
    // Vertices sent to B form an independent set I; vertices sent to E need
    // all neighbours in I. Everything else must go to R.
    int best = 0;
    const auto sets = maximal_independent_sets(h);
    for (Mask i : sets) {
        Mask j = 0;
        for_each_bit(h.all() & ~i, [&](int v) {
            if ((h.neighbours(v) & ~i) == 0) j |= bit(v);
        });
        best = std::max(best, popcount(i) + popcount(j));
    }
    return h.order() - best;
}

StructuralBound prop1_structural_bound(const Construction& c, const PatternGraph& h)
{
    const int k = h.k();
    const int r = popcount(c.partition.r);
    const int b = popcount(c.partition.b);
    const int e = popcount(c.partition.e);
    StructuralBound out;
    const int core = min_red_core(h.graph());
    out.max_red_copies = core == 0 ? (r + b + e) / k : r / core;
    // Blue components are B and E ∪ R; inside E ∪ R a copy meets R in an
    // independent set, so it needs k − α vertices of E.
    const bool connected = connected_components(h.graph()).size() == 1;
    out.max_blue_copies = b / k;
    if (e >= k - h.alpha()) out.max_blue_copies += (r + e) / k;
    if (!connected) out.max_blue_copies = (r + b + e) / k;
    return out;
}

}  // namespace nhr
