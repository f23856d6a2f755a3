#include "nhr/tiling.hpp"

#include "nhr/error.hpp"

#include <set>
#include <unordered_set>

namespace nhr {

bool is_valid_packing(const SimpleGraph& host, const SimpleGraph& pattern, const Tiling& t)
{
    Mask seen = 0;
    for (const auto& e : t.copies) {
        if (!is_valid_embedding(host, pattern, e.host_map)) return false;
        if (seen & e.image()) return false;
        seen |= e.image();
    }
    return (seen & t.leftover) == 0;
}

namespace {

    struct PackKey {
        Mask avail;
        int count;
        friend bool operator==(const PackKey&, const PackKey&) = default;
    };

    struct PackKeyHash {
        std::size_t operator()(const PackKey& k) const
        {
            return std::hash<Mask>()(k.avail * 0x9E3779B97F4A7C15ULL ^ static_cast<Mask>(k.count));
        }
    };

    class Packer {
    public:
        Packer(const SimpleGraph& host, const SimpleGraph& pattern, Budget* budget, std::span<const int> reps)
            : host_(host), pat_(pattern), k_(pattern.order()), min_deg_(pattern.min_degree()), budget_(budget),
              reps_(reps.begin(), reps.end())
        {
            if (reps_.empty()) reps_ = orbit_representatives(pattern);
        }

        bool solve(Mask avail, int count)
        {
            if (budget_) budget_->charge();
            if (count == 0) return true;
            // Vertices of too small degree cannot lie in any copy.
            for (;;) {
                Mask low = 0;
                for_each_bit(avail, [&](int v) {
                    if (host_.degree_in(v, avail) < min_deg_) low |= bit(v);
                });
                if (!low) break;
                avail &= ~low;
            }
            const int size = popcount(avail);
            if (size < count * k_) return false;
            if (failed_.count({avail, count})) return false;
            bool ok = false;
            if (count == 1) {
                MatchOptions opt;
                opt.allowed = avail;
                opt.budget = budget_;
                if (auto map = find_copy(host_, pat_, opt)) {
                    chosen_.push_back(to_mask(*map));
                    ok = true;
                }
            } else {
                const int x = lowest(avail);
                const auto classes = twin_classes(avail);
                for (Mask set : sets_through(x, avail)) {
                    // Twins are interchangeable: keep the set that uses the
                    // lowest members of each class.
                    bool canonical = true;
                    for (Mask t : classes) {
                        const Mask used = set & t;
                        Mask prefix = 0, rest = t;
                        for (int i = popcount(used); i > 0; --i) {
                            prefix |= rest & (~rest + 1);
                            rest &= rest - 1;
                        }
                        if (used != prefix) canonical = false;
                    }
                    if (!canonical) continue;
                    chosen_.push_back(set);
                    if (solve(avail & ~set, count - 1)) {
                        ok = true;
                        break;
                    }
                    chosen_.pop_back();
                }
                // Otherwise x stays uncovered, and so do its twins: a packing
                // using a twin but not x would swap into the branch above.
                if (!ok) {
                    const Mask rest = avail & ~twins(x, avail);
                    if (popcount(rest) >= count * k_) ok = solve(rest, count);
                }
            }
            if (!ok) failed_.insert({avail, count});
            return ok;
        }

        const std::vector<Mask>& chosen() const { return chosen_; }

    private:
        // x together with every y in avail with N(x) − y = N(y) − x there.
        Mask twins(int x, Mask avail) const
        {
            Mask out = bit(x);
            const Mask nx = host_.neighbours(x) & avail;
            for_each_bit(avail & ~bit(x), [&](int y) {
                if ((nx & ~bit(y)) == (host_.neighbours(y) & avail & ~bit(x))) out |= bit(y);
            });
            return out;
        }

        // Classes of pairwise twins within avail, so any permutation of a
        // class is an automorphism of host[avail].
        std::vector<Mask> twin_classes(Mask avail) const
        {
            std::vector<Mask> out;
            Mask left = avail;
            while (left) {
                const int x = lowest(left);
                Mask cls = bit(x);
                for_each_bit(twins(x, avail) & left & ~bit(x), [&](int y) {
                    bool all = true;
                    for_each_bit(cls, [&](int z) { all = all && contains(twins(z, avail), y); });
                    if (all) cls |= bit(y);
                });
                left &= ~cls;
                if (popcount(cls) > 1) out.push_back(cls);
            }
            return out;
        }

        std::vector<Mask> sets_through(int x, Mask avail)
        {
            std::set<Mask> sets;
            for (int p : reps_) {
                MatchOptions opt;
                opt.allowed = avail;
                opt.domains.assign(k_, avail);
                opt.domains[p] = bit(x);
                opt.budget = budget_;
                for_each_copy(host_, pat_, opt, [&](std::span<const int> map) {
                    sets.insert(to_mask(map));
                    return true;
                });
            }
            return {sets.begin(), sets.end()};
        }

        const SimpleGraph& host_;
        const SimpleGraph& pat_;
        int k_;
        int min_deg_;
        Budget* budget_;
        std::vector<int> reps_;
        std::vector<Mask> chosen_;
        std::unordered_set<PackKey, PackKeyHash> failed_;
    };

}  // namespace

std::vector<int> orbit_representatives(const SimpleGraph& pattern)
{
    const auto orbit = vertex_orbits(pattern);
    std::vector<int> reps;
    for (int p = 0; p < pattern.order(); ++p)
        if (orbit[p] == p) reps.push_back(p);
    return reps;
}

std::optional<std::vector<Mask>> pack_copies(const SimpleGraph& host, const SimpleGraph& pattern, Mask avail,
                                             int count, Budget* budget, std::span<const int> orbit_reps)
{
    require(count >= 0, ErrorKind::Precondition, "negative copy count");
    avail &= host.all();
    if (count == 0) return std::vector<Mask>{};
    if (pattern.order() == 0) return std::vector<Mask>(count, Mask{0});
    Packer packer(host, pattern, budget, orbit_reps);
    if (!packer.solve(avail, count)) return std::nullopt;
    return packer.chosen();
}

std::vector<Embedding> embed_sets(const SimpleGraph& host, const SimpleGraph& pattern, const std::vector<Mask>& sets,
                                  std::optional<Colour> colour)
{
    std::vector<Embedding> out;
    for (Mask s : sets) {
        MatchOptions opt;
        opt.allowed = s;
        auto map = find_copy(host, pattern, opt);
        require(map.has_value(), ErrorKind::Defect, "packing set carries no copy");
        out.push_back(Embedding{std::move(*map), colour});
    }
    return out;
}

std::optional<Tiling> find_tiling(const SimpleGraph& host, const PatternGraph& h, Mask target, bool perfect,
                                  Budget* budget)
{
    require((target & ~host.all()) == 0, ErrorKind::Precondition, "target outside the host");
    const int size = popcount(target);
    const int k = h.k();
    require(k > 0, ErrorKind::Precondition, "tiling needs a non-empty pattern");
    require(!perfect || size % k == 0, ErrorKind::Precondition,
            "perfect tiling needs |target| divisible by k");
    auto sets = pack_copies(host, h.graph(), target, size / k, budget);
    if (!sets) return std::nullopt;
    Tiling t;
    t.copies = embed_sets(host, h.graph(), *sets);
    Mask covered = 0;
    for (Mask s : *sets) covered |= s;
    t.leftover = target & ~covered;
    require(is_valid_packing(host, h.graph(), t), ErrorKind::Defect, "tiling failed validation");
    return t;
}

std::optional<Tiling> find_tiling(const TwoColouring& col, Colour colour, const PatternGraph& h, Mask target,
                                  bool perfect, Budget* budget)
{
    auto t = find_tiling(col.graph(colour), h, target, perfect, budget);
    if (t)
        for (auto& e : t->copies) e.colour = colour;
    return t;
}

std::optional<Tiling> find_disjoint_mono(const TwoColouring& col, const PatternGraph& h, int n, Colour colour,
                                         Budget* budget, Mask within)
{
    const SimpleGraph& g = col.graph(colour);
    auto sets = pack_copies(g, h.graph(), within & g.all(), n, budget);
    if (!sets) return std::nullopt;
    Tiling t;
    t.copies = embed_sets(g, h.graph(), *sets, colour);
    Mask covered = 0;
    for (Mask s : *sets) covered |= s;
    t.leftover = within & g.all() & ~covered;
    for (const auto& e : t.copies)
        require(is_valid_embedding(col, h.graph(), e), ErrorKind::Defect, "packing copy invalid");
    require(is_valid_packing(g, h.graph(), t), ErrorKind::Defect, "packing failed validation");
    return t;
}

Mask alias_set(const SimpleGraph& host, const SimpleGraph& pattern, std::span<const int> map, int v)
{
    const Mask image = to_mask(map);
    Mask out = host.all() & ~image;
    for_each_bit(pattern.neighbours(v), [&](int q) { out &= host.neighbours(map[q]); });
    return out;
}

Mask alias_set(const TwoColouring& col, const SimpleGraph& pattern, const Embedding& copy, int v)
{
    require(copy.colour.has_value(), ErrorKind::Precondition, "coloured copy expected");
    return alias_set(col.graph(*copy.colour), pattern, copy.host_map, v);
}

}  // namespace nhr
