#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "wmscss/digraph.hpp"
#include "wmscss/maxflow.hpp"

#include <algorithm>

using namespace wmscss;

namespace {

Digraph three_cycle() {
    Digraph g(3);
    g.add_arc(0, 1, Rational(1));
    g.add_arc(1, 2, Rational(1));
    g.add_arc(2, 0, Rational(1));
    return g;
}

// arcs: 0->1, 1->0, 1->2, 2->1, 2->0, 0->2
Digraph bidirected_triangle() {
    Digraph g(3);
    g.add_arc(0, 1, Rational(1));
    g.add_arc(1, 0, Rational(1));
    g.add_arc(1, 2, Rational(1));
    g.add_arc(2, 1, Rational(1));
    g.add_arc(2, 0, Rational(1));
    g.add_arc(0, 2, Rational(1));
    return g;
}

}  // namespace

TEST_CASE("construction rejects self-loops, bad endpoints and negative weights") {
    Digraph g(2);
    CHECK_THROWS_AS(g.add_arc(0, 0, Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(g.add_arc(0, 2, Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(g.add_arc(-1, 0, Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(g.add_arc(0, 1, Rational(-1)), std::invalid_argument);
    CHECK(g.add_arc(0, 1, Rational(0)) == 0);  // zero weights are fine
}

TEST_CASE("strong connectivity basics") {
    CHECK(is_strongly_connected(three_cycle()));
    Digraph two(2);
    two.add_arc(0, 1, Rational(1));
    CHECK(!is_strongly_connected(two));
    CHECK(is_strongly_connected(Digraph(1)));
}

TEST_CASE("strong connectivity agrees with brute-force reachability") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);  // up to 8
        int m = static_cast<int>(rng() % (2 * n + 1));
        auto g = oracles::random_digraph(rng, n, m, false);
        CHECK(is_strongly_connected(g) == oracles::strongly_connected(g));
    }
}

TEST_CASE("delta_plus and delta_minus") {
    auto g = three_cycle();
    CHECK(delta_plus(g, VertexSet(3, {0})) == std::vector<int>{0});
    CHECK(delta_plus(g, VertexSet(3, {0, 1})) == std::vector<int>{1});
    CHECK(delta_minus(g, VertexSet(3, {0})) == std::vector<int>{2});

    auto b = bidirected_triangle();
    CHECK(delta_plus(b, VertexSet(3, {0})) == std::vector<int>{0, 5});

    CHECK_THROWS_AS(delta_plus(g, VertexSet(3)), std::invalid_argument);
    CHECK_THROWS_AS(delta_plus(g, VertexSet(3, {0, 1, 2})), std::invalid_argument);
}

TEST_CASE("delta_plus on g equals delta_minus on reverse(g)") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        auto g = oracles::random_digraph(rng, n, n + static_cast<int>(rng() % 6), true);
        auto r = reverse(g);
        for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
            VertexSet s(n);
            for (int v = 0; v < n; ++v)
                if (mask >> v & 1) s.insert(v);
            CHECK(delta_plus(g, s) == delta_minus(r, s));
        }
    }
}

TEST_CASE("reverse is an involution that keeps ids") {
    auto g = three_cycle();
    auto r = reverse(g);
    CHECK(r.arc(0).tail == 1);
    CHECK(r.arc(0).head == 0);
    auto rr = reverse(r);
    for (int id = 0; id < g.arc_count(); ++id) {
        CHECK(rr.arc(id).tail == g.arc(id).tail);
        CHECK(rr.arc(id).head == g.arc(id).head);
        CHECK(rr.arc(id).weight == g.arc(id).weight);
    }

    Digraph single(2);
    single.add_arc(0, 1, Rational(3, 7));
    auto rs = reverse(single);
    CHECK(rs.arc(0).tail == 1);
    CHECK(rs.arc(0).head == 0);
    CHECK(rs.arc(0).weight == Rational(3, 7));
}

TEST_CASE("merge_vertices") {
    SUBCASE("three-cycle merge {1,2}") {
        auto [merged, vmap, origin] = merge_vertices(three_cycle(), VertexSet(3, {1, 2}));
        CHECK(merged.vertex_count() == 2);
        CHECK(vmap == std::vector<int>{0, 1, 1});
        REQUIRE(merged.arc_count() == 2);  // 0->m and m->0; 1->2 dropped
        CHECK(merged.arc(0).tail == 0);
        CHECK(merged.arc(0).head == 1);
        CHECK(merged.arc(1).tail == 1);
        CHECK(merged.arc(1).head == 0);
        CHECK(origin == std::vector<int>{0, 2});
    }
    SUBCASE("singleton merge is an isomorphism") {
        auto g = bidirected_triangle();
        auto [merged, vmap, origin] = merge_vertices(g, VertexSet(3, {1}));
        CHECK(merged.vertex_count() == 3);
        CHECK(merged.arc_count() == g.arc_count());
        for (int id = 0; id < g.arc_count(); ++id) {
            CHECK(merged.arc(id).tail == vmap[g.arc(id).tail]);
            CHECK(merged.arc(id).head == vmap[g.arc(id).head]);
        }
    }
    SUBCASE("bidirected triangle merge {0,1} keeps parallels") {
        auto [merged, vmap, origin] = merge_vertices(bidirected_triangle(), VertexSet(3, {0, 1}));
        CHECK(merged.vertex_count() == 2);
        REQUIRE(merged.arc_count() == 4);
        int to_outside = 0, from_outside = 0;
        for (const Arc& a : merged.arcs())
            (a.tail == vmap[0] ? to_outside : from_outside)++;
        CHECK(to_outside == 2);
        CHECK(from_outside == 2);
    }
}

TEST_CASE("min_cut worked examples") {
    SUBCASE("three-cycle unit capacities") {
        auto g = three_cycle();
        std::vector<Rational> cap(3, Rational(1));
        auto r = min_cut(g, cap, 0, 2);
        CHECK(r.value == 1);
        CHECK(r.cut.side.contains(0));
        CHECK(!r.cut.side.contains(2));
    }
    SUBCASE("bidirected triangle at one half") {
        auto g = bidirected_triangle();
        std::vector<Rational> cap(6, Rational(1, 2));
        auto r = min_cut(g, cap, 0, 1);
        CHECK(r.value == 1);  // frozen from subset enumeration below
        CHECK(r.value == oracles::min_cut_value(g, cap, 0, 1));
    }
    SUBCASE("parallel arcs add up") {
        Digraph g(2);
        g.add_arc(0, 1, Rational(1));
        g.add_arc(0, 1, Rational(1));
        g.add_arc(1, 0, Rational(1));
        std::vector<Rational> cap{Rational(1, 3), Rational(1, 4), Rational(1)};
        CHECK(min_cut(g, cap, 0, 1).value == Rational(7, 12));
    }
    SUBCASE("preconditions") {
        auto g = three_cycle();
        std::vector<Rational> cap(3, Rational(1));
        CHECK_THROWS_AS(min_cut(g, cap, 1, 1), std::invalid_argument);
        CHECK_THROWS_AS(min_cut(g, {Rational(1)}, 0, 1), std::invalid_argument);
    }
}

TEST_CASE("min_cut certificate invariants and exhaustive agreement") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);  // up to 8
        int m = n + static_cast<int>(rng() % (2 * n));
        auto g = oracles::random_digraph(rng, n, m, trial % 2 == 0);
        std::vector<Rational> cap;
        for (int id = 0; id < g.arc_count(); ++id)
            cap.emplace_back(static_cast<int>(rng() % 5), 1 + static_cast<int>(rng() % 3));
        int source = static_cast<int>(rng() % n);
        int sink = static_cast<int>(rng() % (n - 1));
        if (sink >= source) ++sink;

        auto r = min_cut(g, cap, source, sink);
        CHECK(r.value == oracles::min_cut_value(g, cap, source, sink));
        // certificate: side realizes the value, crossing arcs are delta_plus
        CHECK(r.cut.side.contains(source));
        CHECK(!r.cut.side.contains(sink));
        CHECK(r.cut.crossing_arcs == delta_plus(g, r.cut.side));
        Rational sum = 0;
        for (int id : r.cut.crossing_arcs) sum += cap[id];
        CHECK(sum == r.value);
    }
}

TEST_CASE("zero cut witness") {
    Digraph g(3);
    g.add_arc(0, 1, Rational(1));
    g.add_arc(1, 2, Rational(1));
    auto cut = zero_cut_witness(g);
    CHECK(cut.value == 0);
    CHECK(cut.crossing_arcs.empty());
    CHECK(!cut.side.empty());
    CHECK(!cut.side.full());
    CHECK(delta_plus(g, cut.side).empty());
}
