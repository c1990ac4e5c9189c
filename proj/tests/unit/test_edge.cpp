#include <doctest.h>

#include "spiralcolor/bench.hpp"
#include "spiralcolor/edge.hpp"
#include "spiralcolor/error.hpp"

#include <algorithm>
#include <random>

using namespace spiralcolor;

TEST_CASE("small instances reach the chromatic index")
{
    struct Case {
        const char* name;
        int colors;
    };
    for (Case c : {Case{"k4", 3}, Case{"star3", 3}, Case{"octahedron", 4}, Case{"cube", 3}, Case{"icosahedron", 5}}) {
        CAPTURE(c.name);
        auto g = named_instance(c.name);
        auto r = spiral_edge_color(g, decompose(g));
        CHECK(verify_edge(g, r.coloring).empty());
        CHECK(r.stats.palette_used == c.colors);
        CHECK(r.stats.palette_used == chromatic_index_exact(g, 32, {14, 30}));
    }
}

TEST_CASE("corpus: proper, at most D+1, exactly D once D >= 7")
{
    for (const auto& spec : corpus_specs({GenKind::Maximal, 80, 4, 150, 300})) {
        auto g = generate(spec);
        auto r = spiral_edge_color(g, decompose(g));
        const int delta = g.max_degree();
        CAPTURE(spec.seed);
        CHECK(verify_edge(g, r.coloring).empty());
        CHECK(r.stats.palette_used <= delta + 1);
        if (delta >= 7)
            CHECK(r.stats.palette_used == delta);
        CHECK(r.stats.overflow_elements == (r.stats.palette_used > delta ? r.stats.overflow_elements : 0));
    }
}

TEST_CASE("spiral edge order lists every edge once")
{
    for (std::uint64_t s = 1; s <= 10; ++s) {
        auto g = gen_maximal_planar({GenKind::Maximal, 50, s});
        auto order = spiral_edge_order(g, decompose(g));
        REQUIRE(static_cast<int>(order.size()) == g.num_edges());
        std::sort(order.begin(), order.end());
        for (EdgeId e = 0; e < g.num_edges(); ++e)
            CHECK(order[e] == e);
    }
    // innermost vertex first, its fan starts at the edge to its chain predecessor
    auto k4 = named_instance("k4");
    auto order = spiral_edge_order(k4, decompose(k4));
    CHECK(order.front() == k4.edge_id(3, 2));
}

TEST_CASE("edge Kempe switch is an involution and keeps the colouring proper")
{
    std::mt19937_64 rng(11);
    int switched = 0;
    for (std::uint64_t s = 1; s <= 40; ++s) {
        auto g = gen_maximal_planar({GenKind::Maximal, 30, s});
        auto c = spiral_edge_color(g, decompose(g)).coloring;
        const EdgeId e = static_cast<EdgeId>(rng() % g.num_edges());
        const int k = c.colors_used();
        Color other = static_cast<Color>(rng() % k) + 1;
        if (other == c.edge[e])
            other = other % k + 1;
        auto path = edge_kempe_path(c, g, e, {c.edge[e], other});
        CHECK(std::find(path.edges.begin(), path.edges.end(), e) != path.edges.end());
        auto once = kempe_switch_edge(c, g, e, {c.edge[e], other});
        CHECK(verify_edge(g, once).empty());
        CHECK(once.edge[e] == other);
        CHECK(kempe_switch_edge(once, g, e, {c.edge[e], other}) == c);
        ++switched;
    }
    CHECK(switched == 40);
    auto k4 = named_instance("k4");
    auto c = spiral_edge_color(k4, decompose(k4)).coloring;
    try {
        kempe_switch_edge(c, k4, 0, {c.edge[0] % 3 + 1, (c.edge[0] + 1) % 3 + 1});
        FAIL("accepted");
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::ColorNotInPair);
    }
}

TEST_CASE("resolve_impasse repairs a planted impasse")
{
    // uncolour e = vu, then switch a (c,d) path at u: v misses c, u misses d
    std::mt19937_64 rng(3);
    int impasses = 0, nontrivial = 0;
    for (std::uint64_t s = 1; s <= 80; ++s) {
        auto g = gen_maximal_planar({GenKind::Maximal, 40, s});
        auto d = decompose(g);
        auto c = spiral_edge_color(g, d).coloring;
        const int cap = c.colors_used();
        const EdgeId e = static_cast<EdgeId>(rng() % g.num_edges());
        auto [v, u] = g.edge(e);
        const Color missing = c.edge[e];
        c.edge[e] = 0;
        EdgeId f = -1;
        for (EdgeId h : g.incident_edges(u))
            if (h != e && (f < 0 || c.edge[h] < c.edge[f]))
                f = h;
        c = kempe_switch_edge(c, g, f, {c.edge[f], missing});
        bool common = false;
        for (Color k = 1; k <= cap; ++k) {
            bool at_v = false, at_u = false;
            for (EdgeId h : g.incident_edges(v))
                at_v |= c.edge[h] == k;
            for (EdgeId h : g.incident_edges(u))
                at_u |= c.edge[h] == k;
            common |= !at_v && !at_u;
        }
        impasses += !common;
        auto r = resolve_impasse(c, g, d, v, cap);
        REQUIRE(r.mechanism != ImpasseMechanism::Unresolved);
        CHECK(r.coloring.edge[e] > 0);
        CHECK(verify_edge(g, r.coloring).empty());
        CHECK(r.coloring.colors_used() <= cap);
        if (!common)
            CHECK(r.mechanism != ImpasseMechanism::None);
        nontrivial += r.mechanism != ImpasseMechanism::None;
    }
    CHECK(impasses > 0);
    CHECK(nontrivial >= impasses);
    auto k4 = named_instance("k4");
    auto d = decompose(k4);
    auto full = spiral_edge_color(k4, d).coloring;
    auto same = resolve_impasse(full, k4, d, 0, 3);
    CHECK(same.mechanism == ImpasseMechanism::None);
    CHECK(same.coloring == full);
}

TEST_CASE("impasses at D colours are resolved by the repair ladder")
{
    // removing all edges at a max-degree vertex and recolouring within D
    int resolved = 0, tried = 0;
    for (std::uint64_t s = 1; s <= 40; ++s) {
        auto g = gen_maximal_planar({GenKind::Maximal, 60, s});
        const int delta = g.max_degree();
        if (delta < 7)
            continue;
        auto d = decompose(g);
        auto c = spiral_edge_color(g, d).coloring;
        VertexId v = 0;
        while (g.degree(v) != delta)
            ++v;
        for (EdgeId e : g.incident_edges(v))
            c.edge[e] = 0;
        ++tried;
        auto r = resolve_impasse(c, g, d, v, delta);
        if (r.mechanism != ImpasseMechanism::Unresolved) {
            ++resolved;
            CHECK(verify_edge(g, r.coloring).empty());
            CHECK(r.coloring.colors_used() <= delta);
        }
    }
    CHECK(tried > 0);
    CHECK(resolved == tried);
}
