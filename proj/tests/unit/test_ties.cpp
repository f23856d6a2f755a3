#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nhr/error.hpp"
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

TwoColouring bowtie()
{
    SimpleGraph red(5);
    red.add_edge(0, 1);
    red.add_edge(0, 2);
    red.add_edge(1, 2);
    return TwoColouring::from_red_graph(red);
}

// A red copy set and a blue copy set inside S that together cover S.
bool tie_oracle(const TwoColouring& col, Mask s, const PatternGraph& h)
{
    if (popcount(s) != 2 * h.k() - h.alpha()) return false;
    const auto reds = oracle::copy_sets(col.red(), h.graph(), s);
    const auto blues = oracle::copy_sets(col.blue(), h.graph(), s);
    for (Mask a : reds)
        for (Mask c : blues)
            if ((a | c) == s) return true;
    return false;
}

// Smallest number of coloured edges on 5 vertices that holds a red and a
// blue triangle: every pair is red, blue or uncoloured.
int min_coloured_edges_for_bowtie()
{
    std::vector<Edge> pairs;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) pairs.emplace_back(i, j);
    int best = 100;
    int total = 1;
    for (std::size_t i = 0; i < pairs.size(); ++i) total *= 3;
    const auto k3 = SimpleGraph::complete(3);
    for (int code = 0; code < total; ++code) {
        SimpleGraph red(5), blue(5);
        int c = code, used = 0;
        for (auto [a, b] : pairs) {
            if (c % 3 == 1) red.add_edge(a, b);
            if (c % 3 == 2) blue.add_edge(a, b);
            used += c % 3 != 0;
            c /= 3;
        }
        if (used >= best) continue;
        if (oracle::has_copy(red, k3) && oracle::has_copy(blue, k3)) best = used;
    }
    return best;
}

TwoColouring split(int nr, int nb, Colour cross)
{
    SimpleGraph red(nr + nb);
    for (int i = 0; i < nr; ++i)
        for (int j = i + 1; j < nr; ++j) red.add_edge(i, j);
    if (cross == Colour::Red)
        for (int i = 0; i < nr; ++i)
            for (int j = nr; j < nr + nb; ++j) red.add_edge(i, j);
    return TwoColouring::from_red_graph(red);
}

}  // namespace

TEST_CASE("tie recognition examples")
{
    const PatternGraph k3(SimpleGraph::complete(3));
    const auto col = bowtie();
    const auto check = is_tie(col, low_bits(5), k3);
    REQUIRE(check.accepted());
    CHECK(tie_oracle(col, low_bits(5), k3));
    CHECK(tie_is_edge_minimal(*check.tie, k3));
    CHECK(min_coloured_edges_for_bowtie() == 6);

    CHECK(is_tie(TwoColouring(5, Colour::Red), low_bits(5), k3).reason == "missing blue copy");
    CHECK(is_tie(col, low_bits(4), k3).reason == "size");
}

TEST_CASE("tie recognition matches the copy-union oracle")
{
    Rng rng(80);
    const std::vector<PatternGraph> patterns = {PatternGraph(SimpleGraph::complete(3)),
                                                PatternGraph(SimpleGraph::path(3)),
                                                PatternGraph(SimpleGraph::complete(2))};
    int accepted = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const auto& h = patterns[trial % patterns.size()];
        const int n = 2 * h.k() - h.alpha();
        const auto col = TwoColouring::from_red_graph(oracle::random_graph(n, 1, 2, rng));
        const auto check = is_tie(col, low_bits(n), h);
        CHECK(check.accepted() == tie_oracle(col, low_bits(n), h));
        accepted += check.accepted();
        if (check.accepted()) CHECK(tie_is_edge_minimal(*check.tie, h));

        // Relabelling keeps the verdict.
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        rng.shuffle(std::span<int>(perm));
        CHECK(is_tie(col.induced(perm), low_bits(n), h).accepted() == check.accepted());
    }
    CHECK(accepted > 20);
}

TEST_CASE("direct tie search between a red and a blue clique")
{
    const PatternGraph k3(SimpleGraph::complete(3));
    // Default size floor is 4k = 12.
    const auto col = split(12, 12, Colour::Red);
    const Mask r = low_bits(12), b = low_bits(24) & ~r;
    CHECK(kind_of([&] { find_tie(split(10, 10, Colour::Red), low_bits(10), low_bits(20) & ~low_bits(10), k3,
                                 TieMode::Direct); }) == ErrorKind::Precondition);
    const auto t = find_tie(col, r, b, k3, TieMode::Direct);
    CHECK(popcount(t.vertices) == 5);
    CHECK(tie_oracle(col, t.vertices, k3));
    CHECK(is_valid_embedding(col, k3.graph(), t.red_copy));
    CHECK(is_valid_embedding(col, k3.graph(), t.blue_copy));
    CHECK((t.blue_copy.image() & ~b) == 0);
}

TEST_CASE("tie search checks its preconditions")
{
    const PatternGraph k3(SimpleGraph::complete(3));
    auto col = split(12, 12, Colour::Red);
    col.set(0, 1, Colour::Blue);
    col.set(0, 2, Colour::Blue);
    col.set(1, 2, Colour::Blue);
    const Mask r = low_bits(12), b = low_bits(24) & ~r;
    CHECK(kind_of([&] { find_tie(col, r, b, k3, TieMode::Direct); }) == ErrorKind::Precondition);
    CHECK(kind_of([&] { find_tie(col, r, r, k3, TieMode::Direct); }) == ErrorKind::OverlappingSets);
}

TEST_CASE("guided and direct tie search agree on existence")
{
    const PatternGraph p3(SimpleGraph::path(3));
    int found = 0, none = 0;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Rng rng(seed);
        SimpleGraph red(40);
        const Mask r = low_bits(20), b = low_bits(40) & ~r;
        // R red apart from a blue matching; B blue apart from a red matching.
        for (int i = 0; i < 20; ++i)
            for (int j = i + 1; j < 20; ++j)
                if (!(j == i + 1 && i % 2 == 0 && rng.chance(1, 2))) red.add_edge(i, j);
        for (int i = 20; i < 40; i += 2)
            if (rng.chance(1, 2)) red.add_edge(i, i + 1);
        // Cross edges: mostly one colour, decided per seed.
        const std::uint64_t p = seed % 3 == 0 ? 0 : (seed % 3 == 1 ? 20 : 1);
        for (int i = 0; i < 20; ++i)
            for (int j = 20; j < 40; ++j)
                if (rng.chance(p, 20)) red.add_edge(i, j);
        const auto col = TwoColouring::from_red_graph(red);

        std::optional<Tie> direct, guided;
        try {
            direct = find_tie(col, r, b, p3, TieMode::Direct);
        } catch (const Error& e) {
            REQUIRE(e.kind() == ErrorKind::NoneFound);
        }
        try {
            guided = find_tie(col, r, b, p3, TieMode::Guided);
        } catch (const Error& e) {
            REQUIRE(e.kind() == ErrorKind::NoneFound);
        }
        CHECK(direct.has_value() == guided.has_value());
        if (direct) {
            ++found;
            CHECK(tie_oracle(col, direct->vertices, p3));
            CHECK(tie_oracle(col, guided->vertices, p3));
        } else {
            ++none;
        }
    }
    CHECK(found > 0);
}

TEST_CASE("join examples")
{
    const PatternGraph k3(SimpleGraph::complete(3));
    const auto col = split(6, 6, Colour::Red);
    const Mask r = low_bits(6), b = low_bits(12) & ~r;
    const auto j = find_join(col, r, b, k3);
    REQUIRE(j);
    CHECK(is_valid_join(col, k3, *j));
    for (int u : j->red_copy.host_map)
        for (int v : j->blue_copy.host_map) CHECK(col.colour(u, v) == Colour::Red);

    auto tight = split(3, 3, Colour::Red);
    CHECK(find_join(tight, 0b111, 0b111000, k3));
    tight.set(0, 3, Colour::Blue);
    CHECK_FALSE(find_join(tight, 0b111, 0b111000, k3));

    const PatternGraph k7(SimpleGraph::complete(7));
    CHECK_FALSE(find_join(col, r, b, k7));
}

TEST_CASE("clique ladder")
{
    const PatternGraph c16(SimpleGraph::cycle(16));
    const Mask r = low_bits(30), b = low_bits(60) & ~r;

    // All-red crossings leave no R vertex with blue neighbours in B.
    try {
        clique_ladder(split(30, 30, Colour::Red), r, b, c16);
        FAIL("expected LadderStuck");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::LadderStuck);
        CHECK(e.detail() == 1);
    }

    // Fair coin crossings.
    Rng rng(11);
    SimpleGraph red(60);
    for (int i = 0; i < 30; ++i)
        for (int j = i + 1; j < 30; ++j) red.add_edge(i, j);
    for (int i = 0; i < 30; ++i)
        for (int j = 30; j < 60; ++j)
            if (rng.chance(1, 2)) red.add_edge(i, j);
    const auto col = TwoColouring::from_red_graph(red);
    const auto ladder = clique_ladder(col, r, b, c16);
    CHECK(ladder.r4 != 0);
    CHECK(ladder.b4 != 0);
    const auto all_coloured = [&](Mask s, Mask t, Colour c) {
        for (int u = 0; u < 60; ++u)
            for (int v = 0; v < 60; ++v)
                if ((s >> u & 1) && (t >> v & 1) && u != v && col.colour(u, v) != c) return false;
        return true;
    };
    CHECK(all_coloured(ladder.large_red, ladder.r4, Colour::Red));
    CHECK(all_coloured(ladder.large_red, ladder.b4, Colour::Blue));
    CHECK(all_coloured(ladder.large_blue, ladder.r4, Colour::Red));
    CHECK(all_coloured(ladder.large_blue, ladder.b4, Colour::Blue));
    CHECK(all_coloured(ladder.small_red, ladder.r4 | ladder.b4, Colour::Red));
    CHECK(all_coloured(ladder.small_blue, ladder.r4 | ladder.b4, Colour::Blue));
    CHECK(popcount(ladder.large_red) == 2);
    CHECK(popcount(ladder.large_blue) == 2);
    CHECK(popcount(ladder.small_red) == 1);
    CHECK(popcount(ladder.small_blue) == 1);
    CHECK(col.red().is_clique(ladder.large_red));
    CHECK(col.blue().is_clique(ladder.large_blue));
    CHECK((ladder.large_red & ~r) == 0);
    CHECK((ladder.large_blue & ~b) == 0);

    // Blue crossings: L_r is fine, but no B vertex has a red neighbour in R.
    const auto blue_cross = split(30, 30, Colour::Blue);
    try {
        clique_ladder(blue_cross, r, b, c16);
        FAIL("expected LadderStuck");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::LadderStuck);
        CHECK(e.detail() == 3);
        for (int v = 30; v < 60; ++v) CHECK((blue_cross.red().neighbours(v) & r) == 0);
    }

    const PatternGraph k2(SimpleGraph::complete(2));
    CHECK(ceil_sqrt_over(1, 2) == 1);
    CHECK(ceil_sqrt_over(1, 4) == 1);
    CHECK(ceil_sqrt_over(16, 2) == 2);
    CHECK(ceil_sqrt_over(16, 4) == 1);
    const auto small = clique_ladder(col, r, b, k2);
    CHECK(popcount(small.large_red) == 1);
    CHECK(popcount(small.small_blue) == 1);
}
