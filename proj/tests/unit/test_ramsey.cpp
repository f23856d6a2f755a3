#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nhr/constructions.hpp"
#include "nhr/density.hpp"
#include "nhr/error.hpp"
#include "nhr/ramsey.hpp"
#include "nhr/ties.hpp"
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

RamseyResult search(const PatternGraph& h, int copies, EdgeOrder order = EdgeOrder::Column, int threads = 1)
{
    RamseyQuery q{RamseyTarget::of(h, copies), RamseyTarget::of(h, copies), 0, 14, {}};
    q.options.order = order;
    q.options.threads = threads;
    return ramsey_search(q);
}

// Independent check: no `copies` disjoint copies in either colour.
bool avoids_oracle(const TwoColouring& col, const SimpleGraph& h, int copies)
{
    return oracle::max_packing(col.red(), h) < copies && oracle::max_packing(col.blue(), h) < copies;
}

}  // namespace

TEST_CASE("avoidance examples")
{
    const PatternGraph k3(SimpleGraph::complete(3));
    const auto pentagon = TwoColouring::from_red_graph(SimpleGraph::cycle(5));
    for (Colour c : {Colour::Red, Colour::Blue}) CHECK(colouring_avoids(pentagon, RamseyTarget::of(k3), c).holds);

    const auto lb = lower_bound_colouring(k3, 2);
    for (Colour c : {Colour::Red, Colour::Blue}) CHECK(colouring_avoids(lb.colouring, RamseyTarget::of(k3, 2), c).holds);
    CHECK(avoids_oracle(lb.colouring, k3.graph(), 2));

    const TwoColouring red6(6, Colour::Red);
    const auto v = colouring_avoids(red6, RamseyTarget::of(k3), Colour::Red);
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness);
    REQUIRE(v.witness->copies.size() == 1);
    CHECK(oracle::has_copy(red6.red(), k3.graph(), v.witness->copies[0].image()));
}

TEST_CASE("avoidance agrees with the packing oracle")
{
    Rng rng(90);
    const std::vector<PatternGraph> pats = {PatternGraph(SimpleGraph::complete(3)), PatternGraph(SimpleGraph::path(3)),
                                            PatternGraph(SimpleGraph::cycle(4))};
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 4 + static_cast<int>(rng.below(6));
        const auto col = TwoColouring::from_red_graph(oracle::random_graph(n, 1, 2, rng));
        const auto& h = pats[trial % pats.size()];
        const int copies = 1 + static_cast<int>(rng.below(2));
        for (Colour c : {Colour::Red, Colour::Blue})
            CHECK(colouring_avoids(col, RamseyTarget::of(h, copies), c).holds ==
                  (oracle::max_packing(col.graph(c), h.graph()) < copies));
    }
}

TEST_CASE("small exact Ramsey numbers")
{
    const PatternGraph k3(SimpleGraph::complete(3));
    const auto r = search(k3, 1);
    REQUIRE(r.exact);
    CHECK(r.value == 6);
    CHECK(r.lower_witness.order() == 5);
    CHECK(avoids_oracle(r.lower_witness, k3.graph(), 1));
    CHECK(oracle::ramsey(k3.graph(), 1, 6) == 6);

    const PatternGraph p3(SimpleGraph::path(3));
    const auto s = search(p3, 1);
    REQUIRE(s.exact);
    CHECK(s.value == 3);
    CHECK(oracle::ramsey(p3.graph(), 1, 5) == 3);

    const auto t = search(p3, 2);
    REQUIRE(t.exact);
    CHECK(t.lower_witness.order() == t.value - 1);
    CHECK(avoids_oracle(t.lower_witness, p3.graph(), 2));
    if (t.value <= 6) CHECK(oracle::every_colouring_forces(t.value, p3.graph(), 2));
    CHECK_FALSE(oracle::every_colouring_forces(std::min(t.value - 1, 6), p3.graph(), 2));
}

TEST_CASE("two disjoint triangles")
{
    const PatternGraph k3(SimpleGraph::complete(3));
    const auto r = search(k3, 2);
    REQUIRE(r.exact);
    CHECK(r.value == 10);
    CHECK(r.lower_witness.order() == 9);
    CHECK(avoids_oracle(r.lower_witness, k3.graph(), 2));
}

TEST_CASE("search verdicts are monotone in the order")
{
    const PatternGraph k3(SimpleGraph::complete(3));
    const auto t = RamseyTarget::of(k3);
    bool none = false;
    for (int n = 1; n <= 7; ++n) {
        const auto c = find_avoiding_colouring(t, t, n);
        if (none) CHECK_FALSE(c);
        none = none || !c;
        if (c) {
            // Restriction keeps avoidance.
            std::vector<int> keep(n - 1);
            std::iota(keep.begin(), keep.end(), 0);
            if (n > 1) CHECK(avoids_oracle(c->induced(keep), k3.graph(), 1));
        }
    }
}

TEST_CASE("edge order and thread count do not change exact values")
{
    const std::vector<std::pair<PatternGraph, int>> cases = {
        {PatternGraph(SimpleGraph::complete(3)), 1},
        {PatternGraph(SimpleGraph::path(3)), 1},
        {PatternGraph(SimpleGraph::path(3)), 2},
        {PatternGraph(SimpleGraph::complete(3)), 2},
    };
    for (const auto& [h, copies] : cases) {
        const auto col = search(h, copies, EdgeOrder::Column);
        const auto par = search(h, copies, EdgeOrder::Column, 4);
        REQUIRE(col.exact);
        REQUIRE(par.exact);
        // Row order runs without symmetry breaking; K_10 for 2K3 is out of
        // its reach, so it is compared on the smaller targets only.
        if (col.value <= 7) {
            const auto row = search(h, copies, EdgeOrder::Row);
            REQUIRE(row.exact);
            CHECK(col.value == row.value);
        }
        CHECK(col.value == par.value);
        CHECK(col.lower_witness == par.lower_witness);
    }
}

TEST_CASE("asymmetric family numbers")
{
    GraphFamily k2, k3;
    k2.add(SimpleGraph::complete(2));
    k3.add(SimpleGraph::complete(3));
    CHECK(family_ramsey(k2, k3) == 3);
    CHECK(family_ramsey(k3, k3) == 6);
    GraphFamily k1;
    k1.add(SimpleGraph(1));
    CHECK(family_ramsey(k1, k3) == 1);
}

TEST_CASE("critical structure of constructed colourings")
{
    const PatternGraph k3(SimpleGraph::complete(3));
    const auto lb = lower_bound_colouring(k3, 3);
    const auto rep = verify_critical_structure(lb.colouring, lb.partition, k3);
    REQUIRE(rep.bullets.size() == 4);
    CHECK(rep.holds());

    const auto hk = build_Hk(4);
    const auto p1 = prop1_colouring(4, 1);
    const auto rep1 = verify_critical_structure(p1.colouring, p1.partition, hk);
    REQUIRE(rep1.bullets.size() == 4);
    // |R| = 6 is far below k(|E| + 1) = 80.
    CHECK(rep1.bullets[0].status == BulletStatus::Fail);
    CHECK(rep1.bullets[1].status == BulletStatus::Pass);
    CHECK(rep1.bullets[2].status == BulletStatus::Pass);
    CHECK(rep1.bullets[3].status == BulletStatus::Pass);

    auto flipped = p1.colouring;
    const int a = lowest(p1.partition.r);
    const int b = lowest(p1.partition.r & ~bit(a));
    flipped.set(a, b, Colour::Blue);
    const auto rep2 = verify_critical_structure(flipped, p1.partition, hk);
    CHECK(rep2.bullets[1].status == BulletStatus::Fail);
    CHECK(rep2.bullets[1].detail.find("(" + std::to_string(a) + "," + std::to_string(b) + ")") != std::string::npos);

    // Bullets do not depend on each other: the flip leaves bullet 3 alone.
    CHECK(rep2.bullets[2].status == rep1.bullets[2].status);
}

TEST_CASE("a tie through E is reported")
{
    // R red K6, B blue K6, E a single vertex red to everything: E with two
    // R-vertices forms a red K3, and with a blue K3 in B a tie appears only
    // if the sizes fit; check the verdict against is_tie directly.
    const PatternGraph k3(SimpleGraph::complete(3));
    SimpleGraph red(13);
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) red.add_edge(i, j);
    for (int i = 0; i < 6; ++i)
        for (int j = 6; j < 12; ++j) red.add_edge(i, j);
    for (int v = 0; v < 12; ++v) red.add_edge(12, v);
    const auto col = TwoColouring::from_red_graph(red);
    const ColouringPartition part{low_bits(6), low_bits(12) & ~low_bits(6), bit(12)};
    const auto rep = verify_critical_structure(col, part, k3, 6);

    bool tie = false;
    for_each_subset(low_bits(13), 5, [&](Mask s) {
        if (contains(s, 12) && is_tie(col, s, k3).accepted()) tie = true;
        return true;
    });
    CHECK((rep.bullets[3].status == BulletStatus::Fail) == tie);
}

TEST_CASE("formula evaluation")
{
    const PatternGraph k3(SimpleGraph::complete(3));
    const auto f = evaluate_formulas(k3, 2);
    CHECK(f.symmetric == 10);
    CHECK_FALSE(f.special_case);

    const PatternGraph p3(SimpleGraph::path(3));
    const auto g = evaluate_formulas(p3, 2);
    CHECK(g.special_case);
    CHECK(g.special_prediction == 7);

    const auto a = evaluate_formulas(k3, 2, k3);
    CHECK(a.derived_ramsey == 3);
    CHECK(a.asymmetric == 8);
}

TEST_CASE("special case agrees with maximum independent set enumeration")
{
    Rng rng(91);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(9));
        const auto h = oracle::random_graph(n, 1, 2, rng);
        const auto adj = oracle::adjacency(h);
        const int alpha = oracle::alpha(h);
        bool expect = false;
        for (Mask s = 0; s < (Mask{1} << n) && !expect; ++s) {
            if (oracle::size_of(s) != alpha || !oracle::independent(adj, s)) continue;
            for (int v = 0; v < n && !expect; ++v) {
                bool inside = true;
                for (int w = 0; w < n; ++w)
                    if (adj[v][w] && !(s >> w & 1)) inside = false;
                expect = inside;
            }
        }
        CHECK(special_case_applies(h) == expect);
    }
}

TEST_CASE("sandwich bounds")
{
    const auto k3 = bounds_sandwich(PatternGraph(SimpleGraph::complete(3)));
    CHECK(k3.lower == 0);
    CHECK(k3.upper == 0);
    CHECK(k3.tight());

    const auto c4 = bounds_sandwich(PatternGraph(SimpleGraph::cycle(4)));
    CHECK(c4.lower == -1);
    CHECK(c4.upper == -1);

    // D'(P3) = {K1}: the upper endpoint is r(D_c'(P3), K1) - 2 = -1.
    const auto p3 = bounds_sandwich(PatternGraph(SimpleGraph::path(3)));
    CHECK(p3.upper == -1);
    CHECK(p3.lower <= p3.upper);
}

TEST_CASE("asymmetric pipeline")
{
    const PatternGraph k3(SimpleGraph::complete(3));
    AbsorberCertificate toy;
    toy.a = 0b111;
    toy.u = 0b111111000;
    toy.r = 2;
    toy.pattern = k3.graph();

    const TwoColouring blue20(20, Colour::Blue);
    const auto run = run_asymmetric_pipeline(blue20, k3, k3, toy, 3);
    CHECK_FALSE(run.failed_step);
    CHECK(run.copies == 6);
    CHECK(is_valid_packing(blue20.blue(), k3.graph(), run.tiling));
    CHECK(oracle::size_of(run.tiling.leftover) == 2);
    CHECK(!run.trace.empty());

    // R = {0,1} red to everything, B = {2..10} blue clique.
    SimpleGraph red(11);
    red.add_edge(0, 1);
    for (int i = 0; i < 2; ++i)
        for (int j = 2; j < 11; ++j) red.add_edge(i, j);
    const auto split = TwoColouring::from_red_graph(red);
    AbsorberCertificate inside;
    inside.a = 0b11100;
    inside.u = 0b11111100000;
    inside.r = 2;
    inside.pattern = k3.graph();
    const PatternGraph k4(SimpleGraph::complete(4));
    const auto halt = run_asymmetric_pipeline(split, k4, k3, inside, 2);
    CHECK(halt.failed_step == "residual");
    bool saw = false;
    for (const auto& s : halt.trace)
        if (s.id == "residual") saw = s.detail.find("|D| = 2") != std::string::npos;
    CHECK(saw);

    // A = {2..6} with R = {0}: six vertices, and 0 has no blue edge.
    AbsorberCertificate wrong = inside;
    wrong.a = 0b1111100;
    wrong.u = 0b110000001;
    wrong.r = 1;
    CHECK(kind_of([&] { run_asymmetric_pipeline(split, k4, k3, wrong, 2); }) == ErrorKind::Precondition);
    CHECK(kind_of([&] { run_asymmetric_pipeline(blue20, k3, k3, toy, 0); }) == ErrorKind::Precondition);
}
