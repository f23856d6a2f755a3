#include "nhr/ties.hpp"

#include "nhr/density.hpp"
#include "nhr/error.hpp"

#include <algorithm>

namespace nhr {

namespace {

    std::optional<std::vector<int>> copy_in(const SimpleGraph& g, const PatternGraph& h, Mask allowed,
                                            Budget* budget, std::vector<Mask> domains = {})
    {
        MatchOptions opt;
        opt.allowed = allowed;
        opt.budget = budget;
        opt.domains = std::move(domains);
        opt.twin_pruning = true;
        return find_copy(g, h.graph(), opt);
    }

    // A copy of h in g using all of `must` (|must| = j) plus k − j vertices of `rest`.
    std::optional<std::vector<int>> copy_covering(const SimpleGraph& g, const PatternGraph& h, Mask must, Mask rest,
                                                  Budget* budget)
    {
        const int j = popcount(must);
        const int k = h.k();
        if (j > k) return std::nullopt;
        std::optional<std::vector<int>> found;
        for_each_subset(h.graph().all(), j, [&](Mask slots) {
            std::vector<Mask> dom(k, rest & ~must);
            for_each_bit(slots, [&](int p) { dom[p] = must; });
            found = copy_in(g, h, must | rest, budget, dom);
            return !found;
        });
        return found;
    }

    int tie_size(const PatternGraph& h) { return 2 * h.k() - h.alpha(); }

    std::optional<Tie> make_tie(const TwoColouring& col, const PatternGraph& h, std::vector<int> red,
                                std::vector<int> blue)
    {
        Tie t;
        t.red_copy = Embedding{std::move(red), Colour::Red};
        t.blue_copy = Embedding{std::move(blue), Colour::Blue};
        t.vertices = t.red_copy.image() | t.blue_copy.image();
        if (!is_valid_embedding(col, h.graph(), t.red_copy) || !is_valid_embedding(col, h.graph(), t.blue_copy))
            return std::nullopt;
        return t;
    }

    // Red copy: k−α vertices of `red_only` plus α shared; blue copy: k vertices of `blue_side`.
    std::optional<Tie> search_type(const TwoColouring& col, const PatternGraph& h, Mask red_only, Mask blue_side,
                                   Colour full, Budget* budget)
    {
        const Colour partial = other(full);
        const int k = h.k();
        const int a = h.alpha();
        std::optional<Tie> out;
        MatchOptions opt;
        opt.allowed = blue_side;
        opt.budget = budget;
        for (Mask full_set : copy_vertex_sets(col.graph(full), h.graph(), opt)) {
            for_each_subset(full_set, a, [&](Mask shared) {
                for_each_subset(red_only, k - a, [&](Mask own) {
                    auto part = copy_covering(col.graph(partial), h, shared | own, 0, budget);
                    if (!part) return true;
                    MatchOptions o2;
                    o2.allowed = full_set;
                    auto whole = find_copy(col.graph(full), h.graph(), o2);
                    if (full == Colour::Blue)
                        out = make_tie(col, h, *part, *whole);
                    else
                        out = make_tie(col, h, *whole, *part);
                    return !out;
                });
                return !out;
            });
            if (out) return out;
        }
        return out;
    }

}  // namespace

TieCheck is_tie(const TwoColouring& col, Mask s, const PatternGraph& h)
{
    TieCheck check;
    if (popcount(s) != tie_size(h) || (s & ~col.red().all()) != 0) {
        check.reason = "size";
        return check;
    }
    if (!copy_in(col.red(), h, s, nullptr)) {
        check.reason = "missing red copy";
        return check;
    }
    if (!copy_in(col.blue(), h, s, nullptr)) {
        check.reason = "missing blue copy";
        return check;
    }
    const int a = h.alpha();
    MatchOptions opt;
    opt.allowed = s;
    for (Mask red_set : copy_vertex_sets(col.red(), h.graph(), opt)) {
        const Mask outside = s & ~red_set;
        // The blue copy must take every vertex outside the red copy and α inside it.
        if (popcount(outside) != h.k() - a) continue;
        std::optional<std::vector<int>> blue;
        for_each_subset(red_set, a, [&](Mask shared) {
            MatchOptions o2;
            o2.allowed = outside | shared;
            blue = find_copy(col.blue(), h.graph(), o2);
            return !blue;
        });
        if (!blue) continue;
        MatchOptions o3;
        o3.allowed = red_set;
        auto red = find_copy(col.red(), h.graph(), o3);
        check.tie = make_tie(col, h, *red, *blue);
        if (check.tie) return check;
    }
    check.reason = "copies do not span";
    return check;
}

bool tie_is_edge_minimal(const Tie& t, const PatternGraph& h)
{
    // Build the tie's own edge sets and confirm that deleting any one edge
    // destroys the copy of that colour inside the tie.
    std::vector<Edge> red_edges;
    std::vector<Edge> blue_edges;
    for (auto [a, b] : h.graph().edges()) {
        red_edges.emplace_back(t.red_copy.host_map[a], t.red_copy.host_map[b]);
        blue_edges.emplace_back(t.blue_copy.host_map[a], t.blue_copy.host_map[b]);
    }
    int order = 0;
    for_each_bit(t.vertices, [&](int v) { order = std::max(order, v + 1); });
    auto survives = [&](const std::vector<Edge>& edges, std::size_t skip) {
        SimpleGraph g(order);
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (i != skip) g.add_edge(edges[i].first, edges[i].second);
        MatchOptions opt;
        opt.allowed = t.vertices;
        return find_copy(g, h.graph(), opt).has_value();
    };
    for (const auto* edges : {&red_edges, &blue_edges}) {
        if (!survives(*edges, edges->size())) return false;
        for (std::size_t i = 0; i < edges->size(); ++i)
            if (survives(*edges, i)) return false;
    }
    // Red and blue edges are disjoint, so the union has exactly 2 e(H) edges.
    for (auto e : red_edges)
        if (std::find(blue_edges.begin(), blue_edges.end(), e) != blue_edges.end() ||
            std::find(blue_edges.begin(), blue_edges.end(), Edge{e.second, e.first}) != blue_edges.end())
            return false;
    return true;
}

Tie find_tie(const TwoColouring& col, Mask r, Mask b, const PatternGraph& h, TieMode mode, int size_floor,
             Budget* budget)
{
    require((r & b) == 0, ErrorKind::OverlappingSets, "R and B must be disjoint");
    const int floor = size_floor < 0 ? 4 * h.k() : size_floor;
    require(popcount(r) >= floor && popcount(b) >= floor, ErrorKind::Precondition, "R or B below the size floor");
    require(!find_mono_copy(col, h, Colour::Blue, budget, r), ErrorKind::Precondition, "R contains a blue copy");
    require(!find_mono_copy(col, h, Colour::Red, budget, b), ErrorKind::Precondition, "B contains a red copy");

    auto accept = [&](std::optional<Tie> t) -> std::optional<Tie> {
        if (!t) return t;
        auto check = is_tie(col, t->vertices, h);
        require(check.accepted(), ErrorKind::Defect, "search produced a non-tie: " + check.reason);
        return t;
    };

    if (mode == TieMode::Guided) {
        // Case split on the cross colour: red-heavy crossings route the red
        // copy through B, blue-heavy ones route the blue copy through R.
        long red_cross = 0;
        for_each_bit(r, [&](int v) { red_cross += col.red().degree_in(v, b); });
        const long pairs = static_cast<long>(popcount(r)) * popcount(b);
        const Rational gamma(1, 32 * std::max(1, h.max_degree()));
        const bool red_heavy = Rational(red_cross, pairs) >= gamma * 4;
        // Greedy attempt: prefer R vertices with the most red neighbours in B
        // (or B vertices with the most blue neighbours in R).
        const Mask side = red_heavy ? r : b;
        const Mask across = red_heavy ? b : r;
        const Colour cross_colour = red_heavy ? Colour::Red : Colour::Blue;
        std::vector<std::pair<int, int>> ranked;
        for_each_bit(side, [&](int v) { ranked.emplace_back(-col.graph(cross_colour).degree_in(v, across), v); });
        std::sort(ranked.begin(), ranked.end());
        Mask shortlist = 0;
        for (std::size_t i = 0; i < ranked.size() && i < static_cast<std::size_t>(2 * h.k()); ++i)
            shortlist |= bit(ranked[i].second);
        std::optional<Tie> t = red_heavy ? search_type(col, h, shortlist, b, Colour::Blue, budget)
                                         : search_type(col, h, shortlist, r, Colour::Red, budget);
        if (t) return *accept(t);
    }
    if (auto t = accept(search_type(col, h, r, b, Colour::Blue, budget))) return *t;
    if (auto t = accept(search_type(col, h, b, r, Colour::Red, budget))) return *t;
    throw Error(ErrorKind::NoneFound, "no tie between R and B");
}

bool is_valid_join(const TwoColouring& col, const PatternGraph& h, const Join& j)
{
    if (!is_valid_embedding(col, h.graph(), j.red_copy) || !is_valid_embedding(col, h.graph(), j.blue_copy))
        return false;
    if (*j.red_copy.colour != Colour::Red || *j.blue_copy.colour != Colour::Blue) return false;
    const Mask a = j.red_copy.image();
    const Mask c = j.blue_copy.image();
    if (a & c) return false;
    bool ok = true;
    for_each_bit(a, [&](int u) { ok = ok && (col.red().neighbours(u) & c) == c; });
    return ok;
}

std::optional<Join> find_join(const TwoColouring& col, Mask r, Mask b, const PatternGraph& h, Budget* budget)
{
    require((r & b) == 0, ErrorKind::OverlappingSets, "R and B must be disjoint");
    if (popcount(r) < h.k() || popcount(b) < h.k()) return std::nullopt;
    MatchOptions opt;
    opt.allowed = r;
    opt.budget = budget;
    for (Mask red_set : copy_vertex_sets(col.red(), h.graph(), opt)) {
        Mask common = b;
        for_each_bit(red_set, [&](int u) { common &= col.red().neighbours(u); });
        auto blue = copy_in(col.blue(), h, common, budget);
        if (!blue) continue;
        MatchOptions o2;
        o2.allowed = red_set;
        Join j{Embedding{*find_copy(col.red(), h.graph(), o2), Colour::Red}, Embedding{*blue, Colour::Blue}};
        require(is_valid_join(col, h, j), ErrorKind::Defect, "join failed validation");
        return j;
    }
    return std::nullopt;
}

int ceil_sqrt_over(std::size_t m, int divisor)
{
    // Smallest t with divisor·t >= √m.
    int t = 0;
    while (static_cast<std::size_t>(divisor) * divisor * t * t < m) ++t;
    return t;
}

Ladder clique_ladder(const TwoColouring& col, Mask r, Mask b, const PatternGraph& h)
{
    require((r & b) == 0, ErrorKind::OverlappingSets, "R and B must be disjoint");
    require(!find_mono_copy(col, h, Colour::Blue, nullptr, r), ErrorKind::Precondition, "R contains a blue copy");
    require(!find_mono_copy(col, h, Colour::Red, nullptr, b), ErrorKind::Precondition, "B contains a red copy");
    const int k = h.k();
    const std::size_t m = h.edge_count();
    const int large = ceil_sqrt_over(m, 2);
    const int small = ceil_sqrt_over(m, 4);

    struct Phase {
        bool from_r;     // clique grows inside R (else inside B)
        Colour into_r;   // colour of edges kept towards R
        Colour into_b;   // colour of edges kept towards B
        int size;
    };
    const Phase phases[4] = {
        {true, Colour::Red, Colour::Blue, large},   // L_r
        {false, Colour::Red, Colour::Blue, large},  // L_b
        {true, Colour::Red, Colour::Red, small},    // S_r
        {false, Colour::Blue, Colour::Blue, small}, // S_b
    };
    Ladder out;
    Mask* cliques[4] = {&out.large_red, &out.large_blue, &out.small_red, &out.small_blue};
    Mask cur_r = r;
    Mask cur_b = b;
    long step = 0;
    for (int ph = 0; ph < 4; ++ph) {
        const Phase& p = phases[ph];
        for (int i = 0; i < p.size; ++i) {
            ++step;
            const Mask pool = p.from_r ? cur_r : cur_b;
            int pick = -1;
            for_each_bit(pool, [&](int v) {
                if (pick >= 0) return;
                const Mask nr = col.graph(p.into_r).neighbours(v) & cur_r;
                const Mask nb = col.graph(p.into_b).neighbours(v) & cur_b;
                if (static_cast<long>(popcount(nr)) * (2 * k + 2) >= popcount(cur_r) &&
                    static_cast<long>(popcount(nb)) * (2 * k + 2) >= popcount(cur_b))
                    pick = v;
            });
            if (pick < 0) throw Error(ErrorKind::LadderStuck, "no qualifying vertex", step);
            *cliques[ph] |= bit(pick);
            cur_r &= col.graph(p.into_r).neighbours(pick);
            cur_b &= col.graph(p.into_b).neighbours(pick);
        }
    }
    out.r4 = cur_r;
    out.b4 = cur_b;

    // Re-verify the cliques and the cross colours of the final sets.
    auto clique_in = [&](Mask s, Colour c) { return col.graph(c).is_clique(s); };
    auto uniform = [&](Mask s, Mask t, Colour c) {
        bool ok = true;
        for_each_bit(s, [&](int v) { ok = ok && (col.graph(c).neighbours(v) & t) == (t & ~bit(v)); });
        return ok;
    };
    require(clique_in(out.large_red, Colour::Red) && clique_in(out.small_red, Colour::Red) &&
                clique_in(out.large_blue, Colour::Blue) && clique_in(out.small_blue, Colour::Blue),
            ErrorKind::Defect, "ladder clique not monochromatic");
    require(uniform(out.small_red, out.r4, Colour::Red) && uniform(out.small_red, out.b4, Colour::Red) &&
                uniform(out.small_blue, out.r4, Colour::Blue) && uniform(out.small_blue, out.b4, Colour::Blue) &&
                uniform(out.large_red, out.r4, Colour::Red) && uniform(out.large_red, out.b4, Colour::Blue) &&
                uniform(out.large_blue, out.r4, Colour::Red) && uniform(out.large_blue, out.b4, Colour::Blue),
            ErrorKind::Defect, "ladder cross colours wrong");
    return out;
}

}  // namespace nhr
