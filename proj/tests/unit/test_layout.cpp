#include <doctest.h>

#include "spiralcolor/chromatic.hpp"
#include "spiralcolor/composite.hpp"
#include "spiralcolor/generate.hpp"
#include "spiralcolor/layout.hpp"

#include <algorithm>
#include <cmath>
#include <string>

using namespace spiralcolor;

namespace {

int count(const std::string& s, const std::string& what)
{
    int k = 0;
    for (auto p = s.find(what); p != std::string::npos; p = s.find(what, p + 1))
        ++k;
    return k;
}

} // namespace

TEST_CASE("K4 inner vertex sits at the centroid of the outer triangle")
{
    auto k4 = named_instance("k4");
    auto l = tutte_layout(k4);
    CHECK(l.three_connected);
    CHECK(l.outer.size() == 3);
    VertexId inner = 0;
    while (std::find(l.outer.begin(), l.outer.end(), inner) != l.outer.end())
        ++inner;
    double cx = 0, cy = 0;
    for (VertexId v : l.outer) {
        cx += l.position[v].x / 3;
        cy += l.position[v].y / 3;
    }
    CHECK(std::abs(l.position[inner].x - cx) < 1e-9);
    CHECK(std::abs(l.position[inner].y - cy) < 1e-9);
}

TEST_CASE("3-connected inputs are drawn without crossings")
{
    for (const char* name : {"octahedron", "icosahedron", "cube", "dodecahedron"}) {
        auto g = named_instance(name);
        auto l = tutte_layout(g);
        CHECK(l.three_connected);
        CHECK(l.residual < 1e-9);
        CHECK_FALSE(has_crossings(g, l));
    }
    for (std::uint64_t s = 1; s <= 10; ++s) {
        auto g = gen_maximal_planar({GenKind::Maximal, 50, s});
        CHECK_FALSE(has_crossings(g, tutte_layout(g)));
    }
}

TEST_CASE("layout is deterministic")
{
    auto g = gen_maximal_planar({GenKind::Maximal, 60, 4});
    auto a = tutte_layout(g), b = tutte_layout(g);
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        CHECK(std::abs(a.position[v].x - b.position[v].x) <= 1e-12);
        CHECK(std::abs(a.position[v].y - b.position[v].y) <= 1e-12);
    }
}

TEST_CASE("non-3-connected inputs raise the warning")
{
    auto c5 = named_instance("c5");
    auto l = tutte_layout(c5);
    CHECK_FALSE(l.three_connected);
    REQUIRE(l.warnings.size() == 1);
    CHECK(l.warnings[0].find("NotThreeConnectedWarning") == 0);
    CHECK_FALSE(is_three_connected(named_instance("star3")));
    CHECK(is_three_connected(named_instance("icosahedron")));
}

TEST_CASE("SVG has one element per graph element")
{
    auto k4 = named_instance("k4");
    auto d = decompose(k4);
    auto svg = render_svg(k4, tutte_layout(k4), nullptr, &d);
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(count(svg, "<circle") == 4);
    CHECK(count(svg, "<line") == 6);
    CHECK(count(svg, "stroke-dasharray") == 3);
    CHECK(svg.find("</svg>") != std::string::npos);

    auto oct = named_instance("octahedron");
    auto od = decompose(oct);
    auto entire = entire_color(oct, od).coloring;
    auto osvg = render_svg(oct, tutte_layout(oct), &entire, &od);
    CHECK(count(osvg, "<polygon") == oct.num_faces() - 1);
    CHECK(count(osvg, "<line") == 12);
    CHECK(osvg == render_svg(oct, tutte_layout(oct), &entire, &od));

    auto q = gen_triangle_free({GenKind::TriangleFree, 20, 2});
    auto qd = decompose(q);
    auto three = three_color_triangle_free(q, qd).coloring;
    auto qsvg = render_svg(q, tutte_layout(q), &three, &qd);
    CHECK(count(qsvg, "<circle") == 20);
    CHECK(count(qsvg, "<line") == q.num_edges());
}
