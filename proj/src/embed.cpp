#include "nhr/embed.hpp"

#include "nhr/density.hpp"
#include "nhr/error.hpp"

#include <algorithm>
#include <set>

namespace nhr {

bool is_valid_embedding(const SimpleGraph& host, const SimpleGraph& pattern, std::span<const int> map)
{
    if (static_cast<int>(map.size()) != pattern.order()) return false;
    for (std::size_t i = 0; i < map.size(); ++i) {
        if (map[i] < 0 || map[i] >= host.order()) return false;
        for (std::size_t j = 0; j < i; ++j)
            if (map[i] == map[j]) return false;
    }
    for (auto [a, b] : pattern.edges())
        if (!host.adjacent(map[a], map[b])) return false;
    return true;
}

bool is_valid_embedding(const TwoColouring& col, const SimpleGraph& pattern, const Embedding& e)
{
    if (!e.colour) return false;
    if (static_cast<int>(e.host_map.size()) != pattern.order()) return false;
    for (auto [a, b] : pattern.edges()) {
        const int u = e.host_map[a];
        const int v = e.host_map[b];
        if (u < 0 || v < 0 || u >= col.order() || v >= col.order() || u == v) return false;
        if (col.colour(u, v) != *e.colour) return false;
    }
    return is_valid_embedding(col.graph(*e.colour), pattern, e.host_map);
}

namespace {

    class Matcher {
    public:
        Matcher(const SimpleGraph& host, const SimpleGraph& pattern, const MatchOptions& opt, bool existence)
            : host_(host), pat_(pattern), k_(pattern.order()), budget_(opt.budget),
              twins_(existence && opt.twin_pruning)
        {
            const Mask allowed = opt.allowed & host.all();
            initial_.assign(k_, allowed);
            if (!opt.domains.empty()) {
                require(static_cast<int>(opt.domains.size()) == k_, ErrorKind::Precondition,
                        "one domain per pattern vertex required");
                for (int p = 0; p < k_; ++p) initial_[p] &= opt.domains[p];
            }
            Mask universe = 0;
            for (Mask d : initial_) universe |= d;
            for (int p = 0; p < k_; ++p) {
                const int need = pat_.degree(p);
                Mask keep = 0;
                for_each_bit(initial_[p], [&](int v) {
                    if (host_.degree_in(v, universe) >= need) keep |= bit(v);
                });
                initial_[p] = keep;
            }
            universe_ = 0;
            for (Mask d : initial_) universe_ |= d;
            if (twins_) compute_twins();
            domains_.assign(static_cast<std::size_t>(k_) * (k_ + 1), 0);
            map_.assign(k_, -1);
        }

        /// Returns false if stopped by the visitor.
        bool run(const std::function<bool(std::span<const int>)>& visit)
        {
            visit_ = &visit;
            if (k_ == 0) return visit(map_);
            const bool connected = connected_components(pat_).size() == 1;
            if (!connected) {
                std::copy(initial_.begin(), initial_.end(), domains_.begin());
                return search(0, 0);
            }
            // A connected pattern lives inside one host component.
            for (const Mask comp : connected_components(host_, universe_)) {
                if (popcount(comp) < k_) continue;
                bool viable = true;
                for (int p = 0; p < k_; ++p) {
                    domains_[p] = initial_[p] & comp;
                    viable = viable && domains_[p] != 0;
                }
                if (viable && !search(0, 0)) return false;
            }
            return true;
        }

    private:
        void compute_twins()
        {
            twin_.assign(host_.order(), 0);
            for_each_bit(universe_, [&](int w) {
                for_each_bit(universe_ & ~low_bits(w + 1), [&](int x) {
                    const Mask nw = host_.neighbours(w) & universe_ & ~bit(x);
                    const Mask nx = host_.neighbours(x) & universe_ & ~bit(w);
                    if (nw != nx) return;
                    for (Mask d : initial_)
                        if (contains(d, w) != contains(d, x)) return;
                    twin_[w] |= bit(x);
                    twin_[x] |= bit(w);
                });
            });
        }

        bool search(int level, Mask used)
        {
            if (budget_) budget_->charge();
            if (level == k_) return (*visit_)(map_);
            const Mask* dom = &domains_[static_cast<std::size_t>(level) * k_];

            int pick = -1;
            int pick_size = 65;
            Mask pool = 0;
            for (int p = 0; p < k_; ++p) {
                if (map_[p] >= 0) continue;
                const Mask live = dom[p] & ~used;
                const int size = popcount(live);
                if (size == 0) return true;
                pool |= live;
                if (size < pick_size || (size == pick_size && pat_.degree(p) > pat_.degree(pick))) {
                    pick = p;
                    pick_size = size;
                }
            }
            if (popcount(pool) < k_ - level) return true;

            Mask* next = &domains_[static_cast<std::size_t>(level + 1) * k_];
            Mask tried = 0;
            Mask candidates = dom[pick] & ~used;
            while (candidates) {
                const int c = lowest(candidates);
                candidates &= candidates - 1;
                if (twins_ && (twin_[c] & tried)) continue;
                tried |= bit(c);
                for (int q = 0; q < k_; ++q) next[q] = dom[q];
                const Mask hn = host_.neighbours(c);
                for_each_bit(pat_.neighbours(pick), [&](int q) { next[q] &= hn; });
                map_[pick] = c;
                const bool go_on = search(level + 1, used | bit(c));
                map_[pick] = -1;
                if (!go_on) return false;
            }
            return true;
        }

        const SimpleGraph& host_;
        const SimpleGraph& pat_;
        int k_;
        Budget* budget_;
        bool twins_;
        std::vector<Mask> initial_;
        Mask universe_ = 0;
        std::vector<Mask> twin_;
        std::vector<Mask> domains_;
        std::vector<int> map_;
        const std::function<bool(std::span<const int>)>* visit_ = nullptr;
    };

}  // namespace

std::optional<std::vector<int>> find_copy(const SimpleGraph& host, const SimpleGraph& pattern,
                                          const MatchOptions& options)
{
    if (pattern.order() > popcount(options.allowed & host.all())) return std::nullopt;
    std::optional<std::vector<int>> found;
    Matcher m(host, pattern, options, true);
    m.run([&](std::span<const int> map) {
        found.emplace(map.begin(), map.end());
        return false;
    });
    return found;
}

void for_each_copy(const SimpleGraph& host, const SimpleGraph& pattern, const MatchOptions& options,
                   const std::function<bool(std::span<const int>)>& visit)
{
    if (pattern.order() > popcount(options.allowed & host.all())) return;
    Matcher m(host, pattern, options, false);
    m.run(visit);
}

std::vector<Mask> copy_vertex_sets(const SimpleGraph& host, const SimpleGraph& pattern, const MatchOptions& options)
{
    std::set<Mask> seen;
    for_each_copy(host, pattern, options, [&](std::span<const int> map) {
        seen.insert(to_mask(map));
        return true;
    });
    return {seen.begin(), seen.end()};
}

std::optional<Embedding> find_mono_copy(const TwoColouring& col, const PatternGraph& h, Colour colour, Budget* budget,
                                        Mask within)
{
    MatchOptions opt;
    opt.allowed = within;
    opt.budget = budget;
    auto map = find_copy(col.graph(colour), h.graph(), opt);
    if (!map) return std::nullopt;
    Embedding e{std::move(*map), colour};
    require(is_valid_embedding(col, h.graph(), e), ErrorKind::Defect, "search returned an invalid copy");
    return e;
}

std::vector<int> vertex_orbits(const SimpleGraph& g)
{
    const int n = g.order();
    std::vector<int> orbit(n, -1);
    for (int a = 0; a < n; ++a) {
        if (orbit[a] >= 0) continue;
        orbit[a] = a;
        for (int b = a + 1; b < n; ++b) {
            if (orbit[b] >= 0 || g.degree(a) != g.degree(b)) continue;
            MatchOptions opt;
            opt.domains.assign(n, g.all());
            opt.domains[a] = bit(b);
            // Monomorphism of g onto itself is an automorphism.
            if (find_copy(g, g, opt)) orbit[b] = a;
        }
    }
    return orbit;
}

std::vector<Edge> ordered_edge_orbit_representatives(const SimpleGraph& g)
{
    const int n = g.order();
    std::vector<Edge> reps;
    std::vector<Edge> ordered;
    for (auto [a, b] : g.edges()) {
        ordered.emplace_back(a, b);
        ordered.emplace_back(b, a);
    }
    std::sort(ordered.begin(), ordered.end());
    for (auto [a, b] : ordered) {
        bool known = false;
        for (auto [c, d] : reps) {
            if (g.degree(a) != g.degree(c) || g.degree(b) != g.degree(d)) continue;
            MatchOptions opt;
            opt.domains.assign(n, g.all());
            opt.domains[c] = bit(a);
            opt.domains[d] = bit(b);
            if (find_copy(g, g, opt)) {
                known = true;
                break;
            }
        }
        if (!known) reps.emplace_back(a, b);
    }
    return reps;
}

std::vector<int> placement_order(const SimpleGraph& pattern, Mask last)
{
    std::vector<int> order;
    Mask placed = 0;
    for (int phase = 0; phase < 2; ++phase) {
        const Mask group = (phase == 0 ? ~last : last) & pattern.all();
        while ((group & ~placed) != 0) {
            int best = -1;
            int best_score = -1;
            for_each_bit(group & ~placed, [&](int p) {
                const int score = popcount(pattern.neighbours(p) & placed);
                if (score > best_score) {
                    best = p;
                    best_score = score;
                }
            });
            order.push_back(best);
            placed |= bit(best);
        }
    }
    return order;
}

Embedding greedy_embed(const SimpleGraph& g, const PatternGraph& h)
{
    const int k = h.k();
    const int n = g.order();
    require(n >= 4 * k, ErrorKind::HypothesisFails, "host must have at least 4k vertices");
    if (h.max_degree() > 0) {
        // e(G) / C(n,2) >= 1 - 1/(8Δ), compared exactly.
        const Rational density(BigInt(g.edge_count()), BigInt(n) * (n - 1) / 2);
        require(density >= Rational(1) - Rational(1, 8 * h.max_degree()), ErrorKind::HypothesisFails,
                "host density " + to_string(density) + " below 1 - 1/(8*Delta)");
    }
    const std::vector<int> order = placement_order(h.graph(), 0);
    std::vector<int> map(k, -1);
    std::function<bool(int, Mask)> place = [&](int idx, Mask used) {
        if (idx == k) return true;
        const int p = order[idx];
        Mask cand = g.all() & ~used;
        for_each_bit(h.graph().neighbours(p), [&](int q) {
            if (map[q] >= 0) cand &= g.neighbours(map[q]);
        });
        while (cand) {
            const int v = lowest(cand);
            cand &= cand - 1;
            map[p] = v;
            if (place(idx + 1, used | bit(v))) return true;
            map[p] = -1;
        }
        return false;
    };
    require(place(0, 0), ErrorKind::Defect, "greedy embedding failed under its hypotheses");
    require(is_valid_embedding(g, h.graph(), map), ErrorKind::Defect, "greedy embedding invalid");
    return Embedding{map, std::nullopt};
}

bool candidate_sizes_ok(int host_order, const PatternGraph& h, const CandidateEmbedParams& p)
{
    const int delta = h.max_degree();
    for (int i = 0; i < h.k(); ++i)
        for (int r = 0; r <= delta; ++r) {
            const Rational lhs = pow(p.gamma, static_cast<unsigned>(delta - r)) * popcount(p.targets[i]) -
                                 Rational(2 * r) * p.eps * host_order;
            if (lhs < h.k()) return false;
        }
    return true;
}

AliasedEmbedding candidate_embed(const SimpleGraph& g, const PatternGraph& h, const CandidateEmbedParams& p)
{
    const int k = h.k();
    const SimpleGraph& pat = h.graph();
    require(static_cast<int>(p.targets.size()) == k, ErrorKind::Precondition, "one target set per pattern vertex");
    require(pat.is_independent(p.independent), ErrorKind::HypothesisFails, "I is not independent in H");
    require(p.gamma > 0 && p.eps > 0, ErrorKind::HypothesisFails, "gamma and eps must be positive");
    require(candidate_sizes_ok(g.order(), h, p), ErrorKind::HypothesisFails, "target sets too small");
    const DensityVerdict dense = is_bi_dense(g, p.eps, 2 * p.gamma, DensityMode::Exact);
    require(dense.holds, ErrorKind::HypothesisFails, "host is not bi-(eps, 2 gamma)-dense");

    const std::vector<int> order = placement_order(pat, p.independent);
    std::vector<Mask> cand(p.targets.begin(), p.targets.end());
    for (auto& c : cand) c &= g.all();
    std::vector<int> map(k, -1);
    Mask used = 0;
    for (int p_vertex : order) {
        const Mask later = pat.neighbours(p_vertex);
        Mask pending = 0;
        for_each_bit(later, [&](int q) {
            if (map[q] < 0) pending |= bit(q);
        });
        int chosen = -1;
        Mask options = cand[p_vertex] & ~used;
        while (options && chosen < 0) {
            const int v = lowest(options);
            options &= options - 1;
            bool good = true;
            for_each_bit(pending, [&](int q) {
                // |N(v) ∩ C_q| >= γ |C_q|
                if (good && Rational(popcount(g.neighbours(v) & cand[q])) < p.gamma * popcount(cand[q])) good = false;
            });
            if (good) chosen = v;
        }
        if (chosen < 0)
            throw Error(ErrorKind::InternalExhaustion, "no admissible image for pattern vertex", p_vertex);
        map[p_vertex] = chosen;
        used |= bit(chosen);
        for_each_bit(pending, [&](int q) { cand[q] &= g.neighbours(chosen); });
    }

    AliasedEmbedding out;
    out.base = Embedding{map, std::nullopt};
    require(is_valid_embedding(g, pat, map), ErrorKind::Defect, "candidate embedding invalid");
    for_each_bit(p.independent, [&](int i) {
        Mask alias = cand[i] & ~used;
        // Re-validate every alias by substitution.
        for_each_bit(alias, [&](int u) {
            std::vector<int> swapped = map;
            swapped[i] = u;
            require(is_valid_embedding(g, pat, swapped), ErrorKind::Defect, "alias failed substitution");
        });
        out.aliases[i] = alias;
    });
    return out;
}

}  // namespace nhr
