#include <doctest.h>

#include "spiralcolor/bench.hpp"
#include "spiralcolor/composite.hpp"
#include "spiralcolor/error.hpp"

#include <random>

using namespace spiralcolor;

namespace {

PlanarEmbedding star(int leaves)
{
    RotationSystem r;
    r.neighbors.push_back({});
    for (int i = 1; i <= leaves; ++i) {
        r.neighbors[0].push_back(i);
        r.neighbors.push_back({0});
    }
    return PlanarEmbedding::build(r);
}

ErrorKind thrown_kind(auto&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::InvalidArgument;
}

} // namespace

TEST_CASE("total colouring of the reference set")
{
    struct Case {
        const char* name;
        int colors;
    };
    for (Case c : {Case{"k4", 5}, Case{"star3", 4}, Case{"octahedron", 6}, Case{"icosahedron", 7}}) {
        CAPTURE(c.name);
        auto g = named_instance(c.name);
        auto r = total_color(g, decompose(g));
        CHECK(verify_total(g, r.coloring).empty());
        CHECK(r.stats.palette_used == c.colors);
        CHECK(r.stats.palette_used <= g.max_degree() + 2);
    }
    CHECK(total_chromatic_exact(named_instance("k4")) == 5);
    for (int k = 2; k <= 8; ++k) {
        auto s = star(k);
        auto r = total_color(s, decompose(s));
        CHECK(verify_total(s, r.coloring).empty());
        CHECK(r.stats.palette_used == k + 1);
    }
}

TEST_CASE("total colouring on a corpus stays within D+3 and mostly D+2")
{
    int within = 0, count = 0;
    for (const auto& spec : corpus_specs({GenKind::Maximal, 60, 4, 120, 700})) {
        auto g = generate(spec);
        auto r = total_color(g, decompose(g));
        CAPTURE(spec.seed);
        CHECK(verify_total(g, r.coloring).empty());
        CHECK(r.stats.palette_used <= g.max_degree() + 3);
        within += r.stats.palette_used <= g.max_degree() + 2;
        ++count;
    }
    CHECK(within * 100 >= count * 99);
}

TEST_CASE("entire colouring of the reference set")
{
    auto k4 = named_instance("k4");
    auto r = entire_color(k4, decompose(k4));
    CHECK(verify_entire(k4, r.coloring).empty());
    CHECK(r.stats.palette_used == 7);
    CHECK(entire_chromatic_exact(k4) == 7);
    for (const char* name : {"star3", "octahedron", "icosahedron", "cube", "w4"}) {
        CAPTURE(name);
        auto g = named_instance(name);
        auto e = entire_color(g, decompose(g));
        CHECK(verify_entire(g, e.coloring).empty());
        CHECK(e.stats.palette_used <= g.max_degree() + 4);
    }
    for (int k = 3; k <= 8; ++k) {
        auto s = star(k);
        auto e = entire_color(s, decompose(s));
        CHECK(verify_entire(s, e.coloring).empty());
        CHECK(e.stats.palette_used <= k + 4);
    }
}

TEST_CASE("degree preconditions")
{
    auto k2 = PlanarEmbedding::build({{{1}, {0}}});
    CHECK(thrown_kind([&] { total_color(k2, decompose(k2)); }) == ErrorKind::PreconditionViolated);
    auto k3 = named_instance("k3");
    CHECK(thrown_kind([&] { entire_color(k3, decompose(k3)); }) == ErrorKind::PreconditionViolated);
}

TEST_CASE("m-Kempe switch applied twice restores the colouring")
{
    std::mt19937_64 rng(17);
    int found = 0;
    for (int trial = 0; trial < 200; ++trial) {
        auto g = gen_maximal_planar({GenKind::Maximal, 12 + trial % 30, static_cast<std::uint64_t>(trial + 1)});
        auto total = total_color(g, decompose(g)).coloring;
        const VertexId p0 = static_cast<VertexId>(rng() % g.num_vertices());
        const auto& inc = g.incident_edges(p0);
        const EdgeId first = inc[rng() % inc.size()];
        const int k = total.colors_used();
        Color other = static_cast<Color>(rng() % k) + 1;
        if (other == total.edge[first])
            other = other % k + 1;
        auto chain = find_m_kempe_chain(total, g, p0, first, other);
        if (!chain)
            continue;
        ++found;
        validate_m_kempe_chain(total, g, *chain);
        auto once = m_kempe_switch(total, g, *chain);
        CHECK(verify_total(g, once).empty());
        MKempeChain back = *chain;
        std::swap(back.ci, back.cj);
        auto twice = m_kempe_switch(once, g, back);
        CHECK(twice == total);
    }
    CHECK(found > 0);
}

TEST_CASE("invalid m-Kempe chains are rejected")
{
    auto k4 = named_instance("k4");
    auto total = total_color(k4, decompose(k4)).coloring;
    MKempeChain bogus{{0, 1}, {k4.edge_id(0, 1)}, total.edge[k4.edge_id(0, 1)], total.edge[k4.edge_id(0, 1)]};
    CHECK(thrown_kind([&] { validate_m_kempe_chain(total, k4, bogus); }) == ErrorKind::NotAnMChain);
    MKempeChain broken{{0, 2}, {k4.edge_id(0, 1)}, 1, 2};
    CHECK(thrown_kind([&] { m_kempe_switch(total, k4, broken); }) == ErrorKind::NotAnMChain);
}
