#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nhr/absorb.hpp"
#include "nhr/error.hpp"
#include "oracles.hpp"

#include <numeric>

using namespace nhr;

namespace {

ErrorKind kind_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::Defect;
}

// Brute-force H-tiling test: some packing covers all but |S| mod k.
bool tileable(const SimpleGraph& g, const SimpleGraph& h, Mask s) { return oracle::tileable(g, h, s); }

bool perfectly_tileable(const SimpleGraph& g, const SimpleGraph& h, Mask s)
{
    return popcount(s) % h.order() == 0 && tileable(g, h, s);
}

// Perfect matching of X' ∪ Y into Z by trying every injective assignment.
bool brute_matching(const SimpleGraph& g, const std::vector<int>& left, Mask right, std::size_t i = 0)
{
    if (i == left.size()) return true;
    for (int z = 0; z < g.order(); ++z)
        if (contains(right, z) && g.adjacent(left[i], z) && brute_matching(g, left, right & ~bit(z), i + 1))
            return true;
    return false;
}

bool template_oracle(const Template& t)
{
    const auto xs = to_vector(t.x());
    const auto ys = to_vector(t.y());
    bool ok = true;
    const int n = static_cast<int>(xs.size());
    for (Mask pick = 0; pick < (Mask{1} << n) && ok; ++pick) {
        if (popcount(pick) != t.ell) continue;
        std::vector<int> left = ys;
        for (int i = 0; i < n; ++i)
            if (contains(pick, i)) left.push_back(xs[i]);
        ok = brute_matching(t.graph, left, t.z());
    }
    return ok;
}

// Toy K_3 absorber: A = {a, b} adjacent, both joined to every reservoir vertex.
SimpleGraph toy_host(int reservoir)
{
    SimpleGraph g(2 + reservoir);
    g.add_edge(0, 1);
    for (int u = 2; u < 2 + reservoir; ++u) {
        g.add_edge(0, u);
        g.add_edge(1, u);
    }
    return g;
}

TwoColouring triangle_free_red(int n, std::uint64_t seed, int tries)
{
    Rng rng(seed);
    SimpleGraph red(n);
    for (int i = 0; i < tries; ++i) {
        const int a = static_cast<int>(rng.below(n));
        const int b = static_cast<int>(rng.below(n));
        if (a == b || red.adjacent(a, b)) continue;
        if (red.neighbours(a) & red.neighbours(b)) continue;
        red.add_edge(a, b);
    }
    return TwoColouring::from_red_graph(red);
}

}  // namespace

TEST_CASE("switcher examples")
{
    const PatternGraph k4(SimpleGraph::complete(4));
    const PatternGraph k3(SimpleGraph::complete(3));
    for (int u = 0; u < 5; ++u)
        for (int v = 0; v < 5; ++v)
            if (u != v) CHECK(verify_switcher(SimpleGraph::complete(5), u, v, k4).ok);
    const auto chk = verify_switcher(SimpleGraph::complete(4), 0, 3, k3);
    CHECK(chk.ok);
    REQUIRE(chk.without_u);
    CHECK(chk.without_u->copies.size() == 1);
    // C_5 minus a vertex is P_4: not divisible by 3 is irrelevant, no triangle at all.
    CHECK_FALSE(verify_switcher(SimpleGraph::cycle(5), 0, 1, k3).ok);
    CHECK_FALSE(oracle::has_copy(SimpleGraph::cycle(5), k3.graph()));
}

TEST_CASE("built switchers pass the brute-force tiling check")
{
    for (const auto& g : {SimpleGraph::complete(2), SimpleGraph::complete(3), SimpleGraph::complete(4),
                          SimpleGraph::path(3), SimpleGraph::cycle(4), SimpleGraph::cycle(5)}) {
        const PatternGraph h(g);
        const auto sw = build_switcher(h);
        CHECK(sw.graph.order() == h.k() + 1);
        CHECK(perfectly_tileable(sw.graph, g, sw.graph.all() & ~bit(sw.u)));
        CHECK(perfectly_tileable(sw.graph, g, sw.graph.all() & ~bit(sw.v)));
    }
}

TEST_CASE("local absorbers for K2, K3 and K4")
{
    for (int k = 2; k <= 4; ++k) {
        const PatternGraph h(SimpleGraph::complete(k));
        const auto la = build_local_absorber(h, k);
        CHECK(la.external == low_bits(k));
        CHECK((la.core & la.external) == 0);
        CHECK(perfectly_tileable(la.graph, h.graph(), la.core));
        CHECK(perfectly_tileable(la.graph, h.graph(), la.core | la.external));
        CHECK(is_valid_packing(la.graph, h.graph(), la.core_tiling));
        CHECK(is_valid_packing(la.graph, h.graph(), la.full_tiling));
        CHECK(la.core_tiling.leftover == 0);
        CHECK(la.full_tiling.leftover == 0);
    }
}

TEST_CASE("local absorbers for other patterns")
{
    for (const auto& g : {SimpleGraph::path(3), SimpleGraph::cycle(4)}) {
        const PatternGraph h(g);
        const auto la = build_local_absorber(h, h.k());
        CHECK(perfectly_tileable(la.graph, g, la.core));
        CHECK(perfectly_tileable(la.graph, g, la.core | la.external));
    }
}

TEST_CASE("template examples")
{
    const auto full = build_template(3, 0, 1, TemplateMode::Complete);
    const auto check = verify_template(full);
    CHECK(check.valid);
    CHECK(check.subsets_checked == 20);

    const auto rnd = build_template(4, 6, 7, TemplateMode::Random);
    const auto rc = verify_template(rnd);
    CHECK(rc.valid);
    CHECK(rc.subsets_checked == 70);
    CHECK(rnd.graph.max_degree() <= 6);
    CHECK(template_oracle(rnd));

    CHECK(kind_of([] { build_template(2, 1, 1, TemplateMode::Random); }) == ErrorKind::BudgetExhausted);
}

TEST_CASE("template with a starved X vertex reports the failing subset")
{
    auto t = build_template(2, 0, 1, TemplateMode::Complete);
    for_each_bit(t.z(), [&](int z) { t.graph.remove_edge(0, z); });
    const auto check = verify_template(t);
    CHECK_FALSE(check.valid);
    REQUIRE(check.failing_subset);
    CHECK(contains(*check.failing_subset, 0));
    CHECK_FALSE(template_oracle(t));
}

TEST_CASE("template verdicts match brute force and are monotone under edge addition")
{
    Rng rng(60);
    int valid = 0;
    for (int trial = 0; trial < 80; ++trial) {
        const int ell = 1 + static_cast<int>(rng.below(2));
        Template t{ell, SimpleGraph(7 * ell)};
        const Mask left = t.x() | t.y();
        for_each_bit(left, [&](int a) {
            for_each_bit(t.z(), [&](int z) {
                if (rng.chance(1, 2)) t.graph.add_edge(a, z);
            });
        });
        const bool ok = verify_template(t).valid;
        CHECK(ok == template_oracle(t));
        valid += ok;
        Template more = t;
        for_each_bit(left, [&](int a) {
            for_each_bit(t.z(), [&](int z) {
                if (rng.chance(1, 3)) more.graph.add_edge(a, z);
            });
        });
        if (ok) CHECK(verify_template(more).valid);
    }
    CHECK(valid > 5);
}

TEST_CASE("bipartite matching sizes")
{
    const auto m = bipartite_matching({0b011, 0b001, 0b110});
    CHECK(m[0] == 1);
    CHECK(m[1] == 0);
    CHECK(m[2] == 2);
    const auto blocked = bipartite_matching({0b1, 0b1});
    CHECK(std::count(blocked.begin(), blocked.end(), -1) == 1);
}

TEST_CASE("absorber verification examples")
{
    const PatternGraph k3(SimpleGraph::complete(3));
    SimpleGraph g = disjoint_union(SimpleGraph::complete(3), SimpleGraph::complete(3));
    g = disjoint_union(g, SimpleGraph(3));
    for (int u = 6; u < 9; ++u)
        for (int v = 0; v < 9; ++v)
            if (u != v) g.add_edge(u, v);
    const auto v0 = verify_absorber(g, low_bits(6), 0b111000000, 0, k3);
    CHECK(v0.holds());
    CHECK(v0.subsets_checked == 1);

    const PatternGraph k4(SimpleGraph::complete(4));
    const auto la = build_local_absorber(k4, 4);
    const auto v4 = verify_absorber(la.graph, la.core, la.external, 4, k4);
    CHECK(v4.holds());
    CHECK(v4.subsets_checked == 16);
    for (Mask r : {Mask{0}, la.external}) CHECK(tileable(la.graph, k4.graph(), la.core | r));
}

TEST_CASE("toy absorber and its single-edge mutation")
{
    const PatternGraph k3(SimpleGraph::complete(3));
    auto host = toy_host(6);
    const Mask a = 0b11;
    const Mask u = low_bits(8) & ~a;
    const auto ok = verify_absorber(host, a, u, 2, k3);
    REQUIRE(ok.holds());
    CHECK(ok.subsets_checked == 22);
    CHECK(ok.certificate->log.size() == 22);
    for (const auto& w : ok.certificate->log) CHECK(tileable(host, k3.graph(), a | w.r));

    host.remove_edge(0, 5);
    const auto bad = verify_absorber(host, a, u, 2, k3);
    CHECK_FALSE(bad.holds());
    REQUIRE(bad.failing);
    CHECK(*bad.failing == bit(5));
    CHECK_FALSE(tileable(host, k3.graph(), a | *bad.failing));
}

TEST_CASE("switcher-edge mutations in a local absorber are caught")
{
    const PatternGraph k3(SimpleGraph::complete(3));
    const auto la = build_local_absorber(k3, 3);
    int caught = 0;
    for (const auto& [p, q] : la.graph.edges()) {
        if (!contains(la.external, p) && !contains(la.external, q)) continue;
        SimpleGraph broken = la.graph;
        broken.remove_edge(p, q);
        const auto v = verify_absorber(broken, la.core, la.external, 3, k3);
        if (v.holds()) continue;
        ++caught;
        REQUIRE(v.failing);
        CHECK_FALSE(tileable(broken, k3.graph(), la.core | *v.failing));
    }
    CHECK(caught > 0);
}

TEST_CASE("absorber success is monotone in the radius")
{
    Rng rng(70);
    const PatternGraph p3(SimpleGraph::path(3));
    for (int trial = 0; trial < 40; ++trial) {
        const auto g = oracle::random_graph(10, 1, 2, rng);
        const Mask a = low_bits(6);
        const Mask u = low_bits(10) & ~a;
        bool failed = false;
        for (int r = 0; r <= 3; ++r) {
            const bool holds = verify_absorber(g, a, u, r, p3).holds();
            if (failed) CHECK_FALSE(holds);
            failed = failed || !holds;
        }
    }
}

TEST_CASE("absorber verification refuses huge enumerations")
{
    const PatternGraph k2(SimpleGraph::complete(2));
    CHECK(kind_of([&] { verify_absorber(SimpleGraph::complete(60), 0b11, low_bits(60) & ~Mask{3}, 5, k2); }) ==
          ErrorKind::SizeLimit);
}

TEST_CASE("assembled absorber in an all-blue host")
{
    const PatternGraph k3(SimpleGraph::complete(3));
    AbsorberScale scale;
    scale.u_size = 6;
    scale.r = 1;
    scale.max_order = 40;
    const auto out = assemble_general_absorber(TwoColouring(40, Colour::Blue), k3, k3, scale);
    const auto& cert = out.certificate;
    CHECK(popcount(cert.u) == 6);
    CHECK(cert.log.size() == 7);
    CHECK(popcount(cert.a) <= 40);
    // Witness tilings checked copy by copy against the host.
    const auto host = SimpleGraph::complete(40);
    for (const auto& w : cert.log) {
        CHECK(is_valid_packing(host, k3.graph(), w.tiling));
        Mask used = 0;
        for (const auto& c : w.tiling.copies) {
            CHECK(oracle::has_copy(host, k3.graph(), c.image()));
            used |= c.image();
        }
        CHECK((used | w.tiling.leftover) == (cert.a | w.r));
        CHECK(popcount(w.tiling.leftover) == popcount(cert.a | w.r) % 3);
    }
}

TEST_CASE("assembled absorber in a blue-dominated host")
{
    const PatternGraph k3(SimpleGraph::complete(3));
    const auto col = triangle_free_red(50, 5, 400);
    REQUIRE_FALSE(oracle::has_copy(col.red(), k3.graph()));
    AbsorberScale scale;
    scale.u_size = 5;
    scale.r = 2;
    const auto out = assemble_general_absorber(col, k3, k3, scale);
    CHECK(out.certificate.log.size() == 16);
    const auto again = verify_absorber(col.blue(), out.certificate.a, out.certificate.u, 2, k3);
    CHECK(again.holds());
}

TEST_CASE("assembly refuses a host with a red G")
{
    const PatternGraph k4(SimpleGraph::complete(4));
    SimpleGraph red(30);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) red.add_edge(i, j);
    CHECK(kind_of([&] { assemble_general_absorber(TwoColouring::from_red_graph(red), k4, k4, AbsorberScale{}); }) ==
          ErrorKind::HypothesisFails);
}

TEST_CASE("alias bank absorption")
{
    const PatternGraph k3(SimpleGraph::complete(3));
    SimpleGraph host(15);
    AliasBank bank;
    for (int c = 0; c < 4; ++c) {
        const int b = 3 * c;
        host.add_edge(b, b + 1);
        host.add_edge(b, b + 2);
        host.add_edge(b + 1, b + 2);
        bank.copies.push_back(Embedding{{b, b + 1, b + 2}, std::nullopt});
    }
    for (int w = 12; w < 15; ++w)
        for (int v = 0; v < 15; ++v)
            if (v != w) host.add_edge(w, v);
    bank.independent = 0b1;
    bank.bank = 0b111 << 12;
    const Mask w_i = 0b001001001001;
    for (int w = 12; w < 15; ++w) bank.alias_of[w] = w_i;

    const auto same = absorb_via_alias_bank(host, k3, bank, 0);
    CHECK(same.copies == bank.copies);
    CHECK(same.leftover == bank.bank);

    const Mask x = bit(3);
    const auto t = absorb_via_alias_bank(host, k3, bank, x);
    CHECK(is_valid_packing(host, k3.graph(), t));
    Mask used = 0;
    for (const auto& c : t.copies) used |= c.image();
    CHECK((used & x) == 0);
    CHECK((used | t.leftover) == (low_bits(15) & ~x));
    const Mask rest = low_bits(15) & ~x;
    CHECK(static_cast<int>(t.copies.size()) == oracle::max_packing(host, k3.graph(), rest));
    CHECK(popcount(t.leftover) < 3);

    try {
        absorb_via_alias_bank(host, k3, bank, w_i);
        FAIL("expected BankExhausted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BankExhausted);
        REQUIRE(e.detail());
        CHECK(contains(w_i, static_cast<int>(*e.detail())));
    }
}

TEST_CASE("alias bank refuses unverified entries")
{
    const PatternGraph k3(SimpleGraph::complete(3));
    SimpleGraph host = disjoint_union(SimpleGraph::complete(3), SimpleGraph(1));
    AliasBank bank;
    bank.copies.push_back(Embedding{{0, 1, 2}, std::nullopt});
    bank.independent = 1;
    bank.bank = bit(3);
    bank.alias_of[3] = bit(0);
    CHECK(kind_of([&] { absorb_via_alias_bank(host, k3, bank, bit(0)); }) == ErrorKind::Precondition);
}
