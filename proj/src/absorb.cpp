#include "nhr/absorb.hpp"

#include "nhr/density.hpp"
#include "nhr/embed.hpp"
#include "nhr/error.hpp"
#include "nhr/rng.hpp"

#include <algorithm>
#include <numeric>

namespace nhr {

namespace {

    bool try_augment(const std::vector<Mask>& left, int i, Mask& seen, std::vector<int>& owner,
                     std::vector<int>& match)
    {
        Mask options = left[i] & ~seen;
        while (options) {
            const int z = lowest(options);
            options &= options - 1;
            seen |= bit(z);
            if (owner[z] < 0 || try_augment(left, owner[z], seen, owner, match)) {
                owner[z] = i;
                match[i] = z;
                return true;
            }
        }
        return false;
    }

    std::uint64_t binomial(int n, int k)
    {
        if (k < 0 || k > n) return 0;
        std::uint64_t out = 1;
        for (int i = 1; i <= k; ++i) out = out * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
        return out;
    }

    Mask pick_random(Rng& rng, Mask from, int count)
    {
        auto items = to_vector(from);
        require(static_cast<int>(items.size()) >= count, ErrorKind::BudgetExhausted, "not enough vertices to sample");
        rng.shuffle(std::span<int>(items));
        Mask out = 0;
        for (int i = 0; i < count; ++i) out |= bit(items[i]);
        return out;
    }

    // Local absorber for the k-set S inside `free`: first a single copy L of
    // H with host[L + S] perfectly tileable, then the switcher construction.
    std::optional<Mask> local_absorber_in(const SimpleGraph& host, const PatternGraph& h, Mask s, Mask free,
                                          Budget* budget)
    {
        std::optional<Mask> found;
        MatchOptions opt;
        opt.allowed = free;
        opt.budget = budget;
        opt.twin_pruning = false;
        for_each_copy(host, h.graph(), opt, [&](std::span<const int> copy) {
            const Mask l = to_mask(copy);
            if (find_tiling(host, h, l | s, true, budget)) found = l;
            return !found;
        });
        if (found) return found;

        // Switchers: one copy u_1..u_k of H, and for each pair (u_i, v_i) a
        // copy of H in their common neighbourhood minus one vertex.
        const auto base = find_copy(host, h.graph(), opt);
        if (!base) return std::nullopt;
        Mask core = to_mask(*base);
        const auto targets = to_vector(s);
        for (std::size_t i = 0; i < targets.size(); ++i) {
            const int ui = (*base)[i];
            const int vi = targets[i];
            MatchOptions sw;
            sw.allowed = free & ~core & host.neighbours(ui) & host.neighbours(vi);
            sw.budget = budget;
            const auto w = find_copy(host, h.graph(), sw);
            if (!w) return std::nullopt;
            core |= to_mask(*w) & ~bit((*w)[0]);
        }
        if (!find_tiling(host, h, core, true, budget) || !find_tiling(host, h, core | s, true, budget))
            return std::nullopt;
        return core;
    }

    int copy_of(const std::vector<Embedding>& copies, int vertex, int& slot)
    {
        for (std::size_t c = 0; c < copies.size(); ++c)
            for (std::size_t p = 0; p < copies[c].host_map.size(); ++p)
                if (copies[c].host_map[p] == vertex) {
                    slot = static_cast<int>(p);
                    return static_cast<int>(c);
                }
        return -1;
    }

    bool can_replace(const SimpleGraph& host, const SimpleGraph& pattern, const Embedding& copy, int slot, int z)
    {
        bool ok = !contains(copy.image(), z);
        for_each_bit(pattern.neighbours(slot), [&](int q) { ok = ok && host.adjacent(z, copy.host_map[q]); });
        return ok;
    }

}  // namespace

std::vector<int> bipartite_matching(const std::vector<Mask>& left)
{
    std::vector<int> match(left.size(), -1);
    std::vector<int> owner(kMaxVertices, -1);
    for (std::size_t i = 0; i < left.size(); ++i) {
        Mask seen = 0;
        try_augment(left, static_cast<int>(i), seen, owner, match);
    }
    return match;
}

SwitcherCheck verify_switcher(const SimpleGraph& s, int u, int v, const PatternGraph& h)
{
    SwitcherCheck out;
    const int k = h.k();
    if (k == 0 || s.order() == 0 || (s.order() - 1) % k != 0) return out;
    require(u >= 0 && u < s.order() && v >= 0 && v < s.order() && u != v, ErrorKind::Precondition,
            "switcher endpoints out of range");
    out.without_u = find_tiling(s, h, s.all() & ~bit(u), true);
    if (!out.without_u) return out;
    out.without_v = find_tiling(s, h, s.all() & ~bit(v), true);
    out.ok = out.without_v.has_value();
    return out;
}

Switcher build_switcher(const PatternGraph& h)
{
    const int k = h.k();
    require(k >= 1, ErrorKind::Precondition, "empty pattern");
    SimpleGraph s(k + 1);
    // Pattern vertex 0 -> u or v, pattern vertex p > 0 -> p + 1.
    auto place = [](int p, int end) { return p == 0 ? end : p + 1; };
    for (auto [a, b] : h.graph().edges()) {
        s.add_edge(place(a, 0), place(b, 0));
        s.add_edge(place(a, 1), place(b, 1));
    }
    auto check = verify_switcher(s, 0, 1, h);
    if (!check.ok) throw Error(ErrorKind::ConstructionFailed, "switcher gadget failed verification");
    return Switcher{std::move(s), 0, 1, std::move(*check.without_u), std::move(*check.without_v)};
}

LocalAbsorber build_local_absorber(const PatternGraph& h, int external_size)
{
    const int k = h.k();
    require(k >= 1 && external_size == k, ErrorKind::Precondition,
            "external set must have exactly k = " + std::to_string(k) + " vertices");
    const int order = k + k + k * (k - 1);
    require(order <= kMaxVertices, ErrorKind::SizeLimit, "local absorber needs " + std::to_string(order) + " vertices");

    LocalAbsorber out;
    out.graph = SimpleGraph(order);
    out.external = low_bits(k);
    out.core = out.graph.all() & ~out.external;
    const auto edges = h.graph().edges();
    for (auto [a, b] : edges) out.graph.add_edge(k + a, k + b);
    for (int i = 0; i < k; ++i) {
        // Switcher between x_i and y_i on W_i: pattern vertex 0 is the
        // swapped end, the others live in W_i.
        const int w0 = 2 * k + i * (k - 1);
        auto place = [&](int p, int end) { return p == 0 ? end : w0 + p - 1; };
        for (auto [a, b] : edges) {
            out.graph.add_edge(place(a, i), place(b, i));
            out.graph.add_edge(place(a, k + i), place(b, k + i));
        }
    }
    auto core = find_tiling(out.graph, h, out.core, true);
    auto full = find_tiling(out.graph, h, out.graph.all(), true);
    if (!core || !full) throw Error(ErrorKind::ConstructionFailed, "local absorber failed verification");
    out.core_tiling = std::move(*core);
    out.full_tiling = std::move(*full);
    return out;
}

TemplateCheck verify_template(const Template& t)
{
    const int ell = t.ell;
    require(ell >= 1, ErrorKind::Precondition, "template needs ell >= 1");
    require(binomial(2 * ell, ell) <= kTemplateSubsetLimit, ErrorKind::SizeLimit,
            "C(2l, l) exceeds the subset limit");
    require(t.graph.order() == 7 * ell, ErrorKind::Precondition, "template order must be 7l");
    const Mask left_side = t.x() | t.y();
    for (int v = 0; v < t.graph.order(); ++v) {
        const Mask side = contains(left_side, v) ? left_side : t.z();
        require((t.graph.neighbours(v) & side) == 0, ErrorKind::Precondition, "template is not bipartite");
    }

    TemplateCheck out;
    out.valid = true;
    for_each_subset(t.x(), ell, [&](Mask xs) {
        ++out.subsets_checked;
        std::vector<Mask> left;
        for_each_bit(xs | t.y(), [&](int v) { left.push_back(t.graph.neighbours(v)); });
        const auto match = bipartite_matching(left);
        if (std::find(match.begin(), match.end(), -1) != match.end()) {
            out.valid = false;
            out.failing_subset = xs;
            return false;
        }
        return true;
    });
    return out;
}

Template build_template(int ell, int max_degree_cap, std::uint64_t seed, TemplateMode mode, int attempts)
{
    require(ell >= 1, ErrorKind::Precondition, "template needs ell >= 1");
    require(7 * ell <= kMaxVertices, ErrorKind::SizeLimit, "template on " + std::to_string(7 * ell) + " vertices");
    Template t{ell, SimpleGraph(7 * ell)};
    const auto left = to_vector(t.x() | t.y());
    const auto right = to_vector(t.z());

    if (mode == TemplateMode::Complete) {
        for (int a : left)
            for (int b : right) t.graph.add_edge(a, b);
        if (!verify_template(t).valid) throw Error(ErrorKind::Defect, "complete template failed verification");
        return t;
    }

    require(max_degree_cap >= 1, ErrorKind::Precondition, "degree cap must be positive");
    std::vector<Edge> pairs;
    for (int a : left)
        for (int b : right) pairs.emplace_back(a, b);
    Rng rng(seed);
    for (int attempt = 0; attempt < attempts; ++attempt) {
        rng.shuffle(std::span<Edge>(pairs));
        SimpleGraph g(7 * ell);
        for (auto [a, b] : pairs)
            if (g.degree(a) < max_degree_cap && g.degree(b) < max_degree_cap) g.add_edge(a, b);
        Template candidate{ell, std::move(g)};
        if (verify_template(candidate).valid) return candidate;
    }
    throw Error(ErrorKind::BudgetExhausted, "no random template passed verification");
}

AbsorberVerdict verify_absorber(const SimpleGraph& host, Mask a, Mask u, int r, const PatternGraph& h,
                                std::uint64_t subset_limit, Budget* budget)
{
    require(r >= 0, ErrorKind::Precondition, "negative absorption radius");
    require(((a | u) & ~host.all()) == 0, ErrorKind::Precondition, "sets leave the host");
    const int un = popcount(u);
    std::uint64_t total = 0;
    for (int i = 0; i <= std::min(r, un); ++i) total += binomial(un, i);
    require(total <= subset_limit, ErrorKind::SizeLimit,
            std::to_string(total) + " subsets exceed the limit of " + std::to_string(subset_limit));

    AbsorberVerdict out;
    AbsorberCertificate cert{a, u, r, h.graph(), h.name(), {}, true};
    bool ok = true;
    for (int size = 0; ok && size <= std::min(r, un); ++size) {
        for_each_subset(u, size, [&](Mask rs) {
            ++out.subsets_checked;
            auto t = find_tiling(host, h, a | rs, false, budget);
            if (!t) {
                ok = false;
                out.failing = rs;
                return false;
            }
            cert.log.push_back({rs, std::move(*t)});
            return true;
        });
    }
    if (ok) out.certificate = std::move(cert);
    return out;
}

AssembledAbsorber assemble_general_absorber(const TwoColouring& kcol, const PatternGraph& g, const PatternGraph& h,
                                            const AbsorberScale& scale)
{
    const int n = kcol.order();
    const int k = std::max(g.k(), h.k());
    require(n <= 60, ErrorKind::SizeLimit, "desk scale allows at most 60 vertices");
    require(scale.r >= 0 && scale.r <= 2, ErrorKind::Precondition, "desk scale allows r <= 2");
    require(scale.ell >= 1 && scale.u_size >= 2 * scale.ell, ErrorKind::Precondition, "U must hold X of size 2l");
    require(h.k() >= 2, ErrorKind::Precondition, "pattern needs at least two vertices");

    const Colour other_colour = other(scale.colour);
    if (find_mono_copy(kcol, g, other_colour))
        throw Error(ErrorKind::HypothesisFails,
                    std::string(to_string(other_colour)) + " class contains " + g.name());

    const SimpleGraph& host = kcol.graph(scale.colour);
    const int cap = scale.max_order > 0 ? scale.max_order : n;
    const int m = scale.drc_m > 0 ? scale.drc_m : k;

    AssembledAbsorber out;
    Rng seeds(scale.seed);
    for (int attempt = 0; attempt < scale.attempts; ++attempt) {
        const std::uint64_t seed = seeds.next();
        Rng rng(seed);
        std::vector<std::string> trace;
        try {
            Mask pool = dependent_random_choice(host, 2, 2, m, scale.u_size, seed, 1);
            trace.push_back("pool " + std::to_string(popcount(pool)));

            int marks = 0;
            for (;;) {
                const int size = popcount(pool);
                int low = -1;
                for_each_bit(pool, [&](int v) {
                    if (low < 0 && host.degree_in(v, pool) * k <= size - k) low = v;
                });
                if (low < 0) break;
                if (++marks >= k)
                    throw Error(ErrorKind::Defect, "k marked vertices form an independent set");
                pool &= ~(bit(low) | host.neighbours(low));
            }
            trace.push_back("marked " + std::to_string(marks));

            const Mask u = pick_random(rng, pool, scale.u_size);
            const Mask x = pick_random(rng, u, 2 * scale.ell);
            Mask outside = (pool & ~u) ? (pool & ~u) : (host.all() & ~u);
            if (popcount(outside) < 2 * scale.ell + 3 * scale.ell * (h.k() - 1)) outside = host.all() & ~u;
            const Mask y = pick_random(rng, outside, 2 * scale.ell);
            const Mask zs = pick_random(rng, outside & ~y, 3 * scale.ell * (h.k() - 1));
            std::vector<Mask> z_parts(3 * scale.ell, 0);
            {
                const auto zl = to_vector(zs);
                for (std::size_t i = 0; i < zl.size(); ++i) z_parts[i / (h.k() - 1)] |= bit(zl[i]);
            }

            Template tpl;
            try {
                tpl = build_template(scale.ell, scale.template_cap, seed, TemplateMode::Random);
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::BudgetExhausted) throw;
                tpl = build_template(scale.ell, 0, seed, TemplateMode::Complete);
            }
            trace.push_back("template edges " + std::to_string(tpl.graph.edge_count()));

            // Template vertex -> host set: X and Y one vertex each, Z parts.
            const auto xl = to_vector(x);
            const auto yl = to_vector(y);
            auto side = [&](int tv) -> Mask {
                if (tv < 2 * scale.ell) return bit(xl[tv]);
                if (tv < 4 * scale.ell) return bit(yl[tv - 2 * scale.ell]);
                return z_parts[tv - 4 * scale.ell];
            };
            Mask a = x | y | zs;
            for (auto [tv, tz] : tpl.graph.edges()) {
                const Mask s = side(tv) | side(tz);
                Budget local(kDefaultNodeBudget / 100);
                const auto l = local_absorber_in(host, h, s, host.all() & ~a & ~u, &local);
                if (!l) throw Error(ErrorKind::StepFailed, "no local absorber for a template edge");
                a |= *l;
            }
            trace.push_back("absorber order " + std::to_string(popcount(a)));
            if (popcount(a) > cap)
                throw Error(ErrorKind::Defect, "absorber order " + std::to_string(popcount(a)) + " exceeds cap " +
                                                   std::to_string(cap));

            auto verdict = verify_absorber(host, a, u, scale.r, h);
            if (!verdict.holds()) {
                trace.push_back("verification failed");
                continue;
            }
            out.certificate = std::move(*verdict.certificate);
            out.pool = pool;
            out.attempts_used = attempt + 1;
            out.trace = std::move(trace);
            return out;
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::Defect || e.kind() == ErrorKind::HypothesisFails) throw;
        }
    }
    throw Error(ErrorKind::BudgetExhausted, "absorber assembly failed for every seed");
}

Tiling absorb_via_alias_bank(const SimpleGraph& host, const PatternGraph& h, const AliasBank& bank, Mask x,
                             Budget* budget)
{
    const SimpleGraph& pattern = h.graph();
    const int k = h.k();
    require(k >= 1, ErrorKind::Precondition, "empty pattern");
    require(pattern.is_independent(bank.independent) && bank.independent != 0, ErrorKind::Precondition,
            "I must be a non-empty independent set of H");

    std::vector<Embedding> copies = bank.copies;
    Mask covered = 0;
    Mask w_i = 0;
    for (const auto& c : copies) {
        require(is_valid_embedding(host, pattern, c.host_map), ErrorKind::Precondition, "stored copy is invalid");
        require((covered & c.image()) == 0, ErrorKind::Precondition, "stored copies overlap");
        covered |= c.image();
        for_each_bit(bank.independent, [&](int p) { w_i |= bit(c.host_map[p]); });
    }
    require((bank.bank & covered) == 0, ErrorKind::Precondition, "bank meets the stored copies");
    require((x & ~w_i) == 0, ErrorKind::Precondition, "X must lie in W_I");
    for (const auto& [b, targets] : bank.alias_of) {
        require(contains(bank.bank, b), ErrorKind::Precondition, "alias source outside the bank");
        for_each_bit(targets, [&](int w) {
            int slot = -1;
            const int c = copy_of(copies, w, slot);
            require(c >= 0 && contains(bank.independent, slot) && can_replace(host, pattern, copies[c], slot, b),
                    ErrorKind::Precondition, "unverified alias entry");
        });
    }

    if (x == 0) return Tiling{copies, bank.bank};

    // Distinct aliases for X.
    const auto xl = to_vector(x);
    std::vector<Mask> left;
    for (int xv : xl) {
        Mask sources = 0;
        for (const auto& [b, targets] : bank.alias_of)
            if (contains(targets, xv)) sources |= bit(b);
        left.push_back(sources);
    }
    const auto match = bipartite_matching(left);
    Mask remaining = bank.bank;
    for (std::size_t i = 0; i < xl.size(); ++i) {
        if (match[i] < 0)
            throw Error(ErrorKind::BankExhausted, "no distinct alias left for vertex " + std::to_string(xl[i]),
                        xl[i]);
        int slot = -1;
        const int c = copy_of(copies, xl[i], slot);
        copies[c].host_map[slot] = match[i];
        remaining &= ~bit(match[i]);
    }

    // Move bank vertices in: an H-copy on current I-slot occupants, each of
    // which hands its slot to a distinct bank vertex.
    while (popcount(remaining) >= k) {
        Mask slots = 0;
        for (auto& c : copies) for_each_bit(bank.independent, [&](int p) { slots |= bit(c.host_map[p]); });
        std::vector<int> chosen;
        std::vector<int> givers;
        MatchOptions opt;
        opt.allowed = slots;
        opt.budget = budget;
        for_each_copy(host, pattern, opt, [&](std::span<const int> phi) {
            std::vector<Mask> cand;
            for (int w : phi) {
                int slot = -1;
                const int c = copy_of(copies, w, slot);
                Mask ok = 0;
                for_each_bit(remaining, [&](int b) {
                    if (can_replace(host, pattern, copies[c], slot, b)) ok |= bit(b);
                });
                cand.push_back(ok);
            }
            const auto m = bipartite_matching(cand);
            if (std::find(m.begin(), m.end(), -1) != m.end()) return true;
            chosen.assign(phi.begin(), phi.end());
            givers = m;
            return false;
        });
        if (chosen.empty())
            throw Error(ErrorKind::BankExhausted, "bank cannot be moved into the tiling", lowest(remaining));
        for (std::size_t i = 0; i < chosen.size(); ++i) {
            int slot = -1;
            const int c = copy_of(copies, chosen[i], slot);
            copies[c].host_map[slot] = givers[i];
            remaining &= ~bit(givers[i]);
        }
        copies.push_back(Embedding{chosen, std::nullopt});
    }

    Tiling out{std::move(copies), remaining};
    if (!is_valid_packing(host, pattern, out))
        throw Error(ErrorKind::Defect, "alias-bank tiling failed verification");
    Mask used = 0;
    for (const auto& c : out.copies) used |= c.image();
    if ((used | out.leftover) != ((covered | bank.bank) & ~x))
        throw Error(ErrorKind::Defect, "alias-bank tiling does not cover W minus X");
    return out;
}

}  // namespace nhr
