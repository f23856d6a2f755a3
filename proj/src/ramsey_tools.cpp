#include "nhr/embed.hpp"
#include "nhr/error.hpp"
#include "nhr/ramsey.hpp"
#include "nhr/ties.hpp"

#include <algorithm>

namespace nhr {

namespace {

    std::string edge_text(int u, int v) { return "(" + std::to_string(u) + "," + std::to_string(v) + ")"; }

    // First pair (u in s, v in t, u != v) whose colour differs from `want`.
    std::optional<Edge> off_colour(const TwoColouring& col, Mask s, Mask t, Colour want)
    {
        std::optional<Edge> bad;
        for_each_bit(s, [&](int u) {
            if (bad) return;
            for_each_bit(t & ~bit(u), [&](int v) {
                if (!bad && col.colour(u, v) != want) bad = Edge{std::min(u, v), std::max(u, v)};
            });
        });
        return bad;
    }

    Tiling greedy_packing(const TwoColouring& col, const PatternGraph& h, Colour colour, Mask within, Budget* budget)
    {
        Tiling t;
        for (;;) {
            auto e = find_mono_copy(col, h, colour, budget, within);
            if (!e) break;
            within &= ~e->image();
            t.copies.push_back(std::move(*e));
        }
        t.leftover = within;
        return t;
    }

}  // namespace

std::optional<int> family_ramsey(const GraphFamily& red, const GraphFamily& blue, int n_hi,
                                 const RamseyOptions& options)
{
    RamseyQuery q{RamseyTarget::family(red), RamseyTarget::family(blue), 0, n_hi, options};
    auto res = ramsey_search(q);
    if (!res.exact) return std::nullopt;
    return res.value;
}

const char* to_string(BulletStatus s)
{
    switch (s) {
    case BulletStatus::Pass: return "pass";
    case BulletStatus::Fail: return "fail";
    case BulletStatus::Unverifiable: return "unverifiable";
    }
    return "?";
}

bool CriticalReport::holds() const
{
    return std::all_of(bullets.begin(), bullets.end(), [](const BulletReport& b) { return b.status == BulletStatus::Pass; });
}

CriticalReport verify_critical_structure(const TwoColouring& col, const CriticalPartition& part,
                                         const PatternGraph& h, std::optional<int> r_of_h, Budget* budget)
{
    const Mask all = low_bits(col.order());
    require((part.r & part.b) == 0 && (part.r & part.e) == 0 && (part.b & part.e) == 0, ErrorKind::OverlappingSets,
            "R, B, E must be disjoint");
    require((part.r | part.b | part.e) == all, ErrorKind::Precondition, "R, B, E must cover the colouring");
    const int k = h.k();
    const int e_size = popcount(part.e);
    CriticalReport out;

    {
        BulletReport b{1, BulletStatus::Pass, {}};
        std::string r_part;
        if (e_size <= k) {
            r_part = "|E| = " + std::to_string(e_size) + " <= k <= r(H)";
        } else {
            if (!r_of_h) {
                RamseyOptions opt;
                opt.budget = 10'000'000;
                auto res = ramsey_search(RamseyQuery{RamseyTarget::of(h), RamseyTarget::of(h), k, 14, opt});
                if (res.exact) r_of_h = res.value;
                else if (e_size < res.value) r_part = "|E| < " + std::to_string(res.value) + " <= r(H)";
            }
            if (r_of_h) {
                r_part = "|E| = " + std::to_string(e_size) + ", r(H) = " + std::to_string(*r_of_h);
                if (e_size > *r_of_h) b.status = BulletStatus::Fail;
            } else if (r_part.empty()) {
                r_part = "r(H) unknown";
                b.status = BulletStatus::Unverifiable;
            }
        }
        const long long need = static_cast<long long>(k) * (e_size + 1);
        const bool sizes = popcount(part.r) >= need && popcount(part.b) >= need;
        if (!sizes) b.status = BulletStatus::Fail;
        b.detail = r_part + "; |R| = " + std::to_string(popcount(part.r)) + ", |B| = " +
                   std::to_string(popcount(part.b)) + ", need " + std::to_string(need);
        out.bullets.push_back(std::move(b));
    }

    {
        BulletReport b{2, BulletStatus::Pass, "interiors monochromatic"};
        if (auto e = off_colour(col, part.r, part.r, Colour::Red)) {
            b.status = BulletStatus::Fail;
            b.detail = "blue edge " + edge_text(e->first, e->second) + " inside R";
        } else if (auto e2 = off_colour(col, part.b, part.b, Colour::Blue)) {
            b.status = BulletStatus::Fail;
            b.detail = "red edge " + edge_text(e2->first, e2->second) + " inside B";
        }
        out.bullets.push_back(std::move(b));
    }

    {
        BulletReport b{3, BulletStatus::Pass, "cross colours uniform"};
        std::optional<Edge> bad;
        std::string what;
        if (part.r && part.b) {
            const Colour rb = col.colour(lowest(part.r), lowest(part.b));
            if ((bad = off_colour(col, part.r, part.b, rb))) what = "[R,B] not uniform at ";
            else b.detail = std::string("[R,B] ") + to_string(rb);
        }
        if (!bad && (bad = off_colour(col, part.r, part.e, Colour::Blue))) what = "red [R,E] edge ";
        if (!bad && (bad = off_colour(col, part.b, part.e, Colour::Red))) what = "blue [B,E] edge ";
        if (bad) {
            b.status = BulletStatus::Fail;
            b.detail = what + edge_text(bad->first, bad->second);
        }
        out.bullets.push_back(std::move(b));
    }

    {
        BulletReport b{4, BulletStatus::Pass, "no tie meets E"};
        if (part.e != 0) {
            const int size = 2 * k - h.alpha();
            MatchOptions opt;
            opt.budget = budget;
            // A tie needs both a red and a blue copy somewhere; the pruned
            // existence search settles most sweeps before any enumeration.
            const bool both = find_copy(col.red(), h.graph(), opt) && find_copy(col.blue(), h.graph(), opt);
            opt.twin_pruning = false;
            const auto reds = both ? copy_vertex_sets(col.red(), h.graph(), opt) : std::vector<Mask>{};
            const auto blues = both ? copy_vertex_sets(col.blue(), h.graph(), opt) : std::vector<Mask>{};
            require(static_cast<std::uint64_t>(reds.size()) * blues.size() <= kTieSweepLimit, ErrorKind::SizeLimit,
                    "tie sweep over " + std::to_string(reds.size()) + " x " + std::to_string(blues.size()) +
                        " copy pairs");
            bool found = false;
            for (Mask rs : reds) {
                for (Mask bs : blues) {
                    const Mask s = rs | bs;
                    if (popcount(s) != size || (s & part.e) == 0) continue;
                    ++out.tie_candidates;
                    if (is_tie(col, s, h).accepted()) {
                        b.status = BulletStatus::Fail;
                        b.detail = "tie on " + std::to_string(size) + " vertices meets E at vertex " +
                                   std::to_string(lowest(s & part.e));
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (!found)
                b.detail = "no tie meets E (" + std::to_string(reds.size()) + " red and " +
                           std::to_string(blues.size()) + " blue copy sets)";
        }
        out.bullets.push_back(std::move(b));
    }
    return out;
}

bool special_case_applies(const SimpleGraph& h)
{
    const int alpha = independence_number(h).alpha;
    for (Mask i : maximal_independent_sets(h)) {
        if (popcount(i) != alpha) continue;
        for (int v = 0; v < h.order(); ++v)
            if ((h.neighbours(v) & ~i) == 0) return true;
    }
    return false;
}

Sandwich bounds_sandwich(const PatternGraph& h, const RamseyOptions& options)
{
    require(h.edge_count() > 0, ErrorKind::Precondition, "derived families need an edge");
    const auto fam = derived_families(h.graph());
    const auto lower = family_ramsey(fam.d_c, fam.d, 10, options);
    const auto upper = family_ramsey(fam.d_c_prime, fam.d_prime, 10, options);
    if (!lower || !upper) throw Error(ErrorKind::Undecidable, "family Ramsey number out of desk reach");
    return Sandwich{*lower - 2, *upper - 2};
}

FormulaRecord evaluate_formulas(const PatternGraph& h, int n, const std::optional<PatternGraph>& g,
                                const RamseyOptions& options)
{
    require(n >= 1, ErrorKind::Precondition, "n must be positive");
    FormulaRecord rec;
    rec.k = h.k();
    rec.alpha = h.alpha();
    rec.n = n;
    rec.symmetric = static_cast<long long>(2 * rec.k - rec.alpha) * n;
    rec.special_case = special_case_applies(h.graph());
    if (rec.special_case) rec.special_prediction = rec.symmetric - 1;

    if (g) {
        require(g->edge_count() > 0, ErrorKind::Precondition, "G needs an edge");
        GraphFamily blue;
        blue.add(h.graph());
        rec.derived_ramsey = family_ramsey(derived_families(g->graph()).d, blue, 10, options);
        if (rec.derived_ramsey)
            rec.asymmetric = static_cast<long long>(n) * h.k() + *rec.derived_ramsey - 1;
        else
            rec.symbolic.push_back("r(D(G),H)");
    }
    if (h.edge_count() > 0) {
        try {
            auto s = bounds_sandwich(h, options);
            rec.sandwich_lower = s.lower;
            rec.sandwich_upper = s.upper;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::Undecidable) throw;
            rec.symbolic.push_back("sandwich");
        }
    }
    return rec;
}

PipelineResult run_asymmetric_pipeline(const TwoColouring& col, const PatternGraph& g, const PatternGraph& h,
                                       const AbsorberCertificate& absorber, int threshold, Budget* budget)
{
    const Mask all = low_bits(col.order());
    require(threshold >= 1, ErrorKind::Precondition, "threshold must be positive");
    require(((absorber.a | absorber.u) & ~all) == 0, ErrorKind::Precondition, "absorber leaves the colouring");
    require(are_isomorphic(absorber.pattern, h.graph()), ErrorKind::Precondition, "absorber built for another pattern");
    require(!find_mono_copy(col, g, Colour::Red, budget), ErrorKind::Precondition, "colouring contains a red G");
    require(verify_absorber(col.blue(), absorber.a, absorber.u, absorber.r, h, kAbsorberSubsetLimit, budget).holds(),
            ErrorKind::Precondition, "certificate does not absorb its reservoir in this colouring");

    PipelineResult out;
    auto step = [&](std::string id, std::string detail) { out.trace.push_back({std::move(id), std::move(detail)}); };
    const auto sz = [](Mask m) { return std::to_string(popcount(m)); };

    const Mask a = absorber.a;
    Mask b = absorber.u & ~a;
    Tiling c = greedy_packing(col, h, Colour::Blue, all & ~a & ~b, budget);
    Mask d = c.leftover;
    step("cover", "|A| = " + sz(a) + ", |B| = " + sz(b) + ", |C| = " + std::to_string(c.copies.size() * h.k()) +
                      ", |D| = " + sz(d));
    if (popcount(d) >= threshold) {
        step("residual", "|D| = " + sz(d) + " >= threshold " + std::to_string(threshold));
        out.failed_step = "residual";
        return out;
    }
    step("residual", "|D| = " + sz(d) + " < threshold " + std::to_string(threshold));

    // Promote D-vertices with many blue neighbours in B.
    int promoted = 0;
    for (bool moved = true; moved;) {
        moved = false;
        for_each_bit(d, [&](int v) {
            if (moved || col.blue().degree_in(v, b) < threshold) return;
            auto e = find_mono_copy(col, h, Colour::Blue, budget, b & col.blue().neighbours(v));
            if (!e) return;
            // The replaced vertex stays in B.
            const int dropped = e->host_map[0];
            b = (b & ~e->image()) | bit(dropped);
            e->host_map[0] = v;
            d &= ~bit(v);
            c.copies.push_back(std::move(*e));
            ++promoted;
            moved = true;
        });
    }
    step("promote", std::to_string(promoted) + " promoted, |B'| = " + sz(b) + ", |D'| = " + sz(d));

    const auto fam = derived_families(g.graph());
    for (const auto& m : fam.d.members()) {
        if (m.order() == 0) continue;
        if (auto e = find_mono_copy(col, PatternGraph(m), Colour::Red, budget, d)) {
            step("derived", "red member of D(G) on " + std::to_string(m.order()) + " vertices inside D'");
            out.failed_step = "derived";
            return out;
        }
    }
    step("derived", "no red member of D(G) in D'");

    Tiling inner = greedy_packing(col, h, Colour::Blue, b, budget);
    const Mask rest = inner.leftover;
    step("tile-b", std::to_string(inner.copies.size()) + " copies in B', remainder " + sz(rest));
    if (popcount(rest) > absorber.r) {
        step("absorb", "remainder " + sz(rest) + " > radius " + std::to_string(absorber.r));
        out.failed_step = "absorb";
        return out;
    }
    auto absorbed = find_tiling(col.blue(), h, a | rest, false, budget);
    if (!absorbed) {
        step("absorb", "no tiling of A with the remainder");
        out.failed_step = "absorb";
        return out;
    }
    step("absorb", std::to_string(absorbed->copies.size()) + " copies cover A and the remainder");

    out.tiling.copies = std::move(c.copies);
    for (auto& e : inner.copies) out.tiling.copies.push_back(std::move(e));
    for (auto& e : absorbed->copies) {
        e.colour = Colour::Blue;
        out.tiling.copies.push_back(std::move(e));
    }
    Mask covered = 0;
    for (const auto& e : out.tiling.copies) covered |= e.image();
    out.tiling.leftover = all & ~covered;
    out.copies = static_cast<int>(out.tiling.copies.size());
    if (!is_valid_packing(col.blue(), h.graph(), out.tiling))
        throw Error(ErrorKind::Defect, "pipeline produced an invalid packing");
    step("result", "blue " + std::to_string(out.copies) + h.name());
    return out;
}

}  // namespace nhr
