#include <doctest.h>

#include "spiralcolor/error.hpp"
#include "spiralcolor/generate.hpp"
#include "spiralcolor/verify.hpp"

using namespace spiralcolor;

TEST_CASE("n=4 maximal instance is K4 for every seed")
{
    for (std::uint64_t s = 1; s <= 10; ++s) {
        auto g = gen_maximal_planar({GenKind::Maximal, 4, s});
        CHECK(g.num_edges() == 6);
        CHECK(is_maximal_planar(g));
    }
}

TEST_CASE("n=12 seed=7 maximal instance is frozen")
{
    auto g = gen_maximal_planar({GenKind::Maximal, 12, 7});
    CHECK(g.num_edges() == 30);
    CHECK(g.num_faces() == 20);
    // SplitMix64 stream; any change to the generator shows up here
    CHECK(to_rot(g) == "12\n"
                       "0: 2 5 6 3\n"
                       "1: 4 5 7 9\n"
                       "2: 0 3 9 7 5\n"
                       "3: 0 6 10 8 9 2\n"
                       "4: 1 9 5\n"
                       "5: 0 2 7 1 4 9 6\n"
                       "6: 0 5 9 10 3\n"
                       "7: 1 5 2 9\n"
                       "8: 3 10 11 9\n"
                       "9: 1 7 2 3 8 11 10 6 5 4\n"
                       "10: 3 6 9 11 8\n"
                       "11: 8 10 9\n");
    CHECK(to_rot(gen_maximal_planar({GenKind::Maximal, 12, 7})) == to_rot(g));
}

TEST_CASE("maximal generator keeps m = 3n - 6 and minimum degree 3")
{
    for (std::uint64_t s = 1; s <= 60; ++s) {
        const int n = 4 + static_cast<int>(s % 57);
        auto g = gen_maximal_planar({GenKind::Maximal, n, s});
        CAPTURE(s);
        CHECK(g.num_vertices() == n);
        CHECK(g.num_edges() == 3 * n - 6);
        CHECK(is_maximal_planar(g));
        for (VertexId v = 0; v < n; ++v)
            CHECK(g.degree(v) >= 3);
    }
}

TEST_CASE("seeds change the instance, flips change the degree spread")
{
    auto a = gen_maximal_planar({GenKind::Maximal, 40, 1});
    auto b = gen_maximal_planar({GenKind::Maximal, 40, 2});
    CHECK(to_rot(a) != to_rot(b));
    auto stacked = gen_maximal_planar({GenKind::Maximal, 40, 1, 0});
    CHECK(is_maximal_planar(stacked));
    CHECK(to_rot(stacked) != to_rot(a));
}

TEST_CASE("triangle-free generator")
{
    auto g8 = gen_triangle_free({GenKind::TriangleFree, 8, 1});
    CHECK(is_triangle_free(g8));
    CHECK(g8.num_vertices() == 8);
    auto g30 = gen_triangle_free({GenKind::TriangleFree, 30, 3});
    CHECK(g30.num_vertices() - g30.num_edges() + g30.num_faces() == 2);
    for (const auto& f : g30.faces())
        CHECK(f.length() >= 4);
    for (std::uint64_t s = 1; s <= 40; ++s) {
        auto g = gen_triangle_free({GenKind::TriangleFree, 5 + static_cast<int>(s * 5 % 150), s});
        CHECK(is_triangle_free(g));
    }
}

TEST_CASE("named instances")
{
    auto k4 = named_instance("k4");
    CHECK(max_degree(k4) == 3);
    CHECK(is_maximal_planar(k4));
    auto ico = named_instance("icosahedron");
    CHECK(ico.num_vertices() == 12);
    CHECK(ico.num_edges() == 30);
    CHECK(max_degree(ico) == 5);
    CHECK(is_maximal_planar(ico));
    auto dod = named_instance("dodecahedron");
    CHECK(dod.num_vertices() == 20);
    CHECK(dod.num_edges() == 30);
    CHECK(chromatic_number_exact(named_instance("c5")) == 3);
    CHECK(chromatic_number_exact(named_instance("cube")) == 2);
    try {
        named_instance("petersen");
        FAIL("unknown name accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnknownName);
    }
}

TEST_CASE("maximal outerplanar generator")
{
    for (int n = 3; n <= 30; ++n) {
        auto g = gen_maximal_outerplanar(n, static_cast<std::uint64_t>(n));
        CHECK(g.num_edges() == 2 * n - 3);
        CHECK(g.face(g.outer_face()).length() == n);
        for (FaceId f = 0; f < g.num_faces(); ++f)
            if (f != g.outer_face())
                CHECK(g.face(f).length() == 3);
    }
}

TEST_CASE("generate dispatches on the kind")
{
    CHECK(to_rot(generate({GenKind::Named, 0, 0, -1, "octahedron"})) == to_rot(named_instance("octahedron")));
    CHECK(to_rot(generate({GenKind::TriangleFree, 20, 5})) == to_rot(gen_triangle_free({GenKind::TriangleFree, 20, 5})));
}
