#include <doctest.h>

#include "spiralcolor/chromatic.hpp"
#include "spiralcolor/composite.hpp"
#include "spiralcolor/error.hpp"
#include "spiralcolor/generate.hpp"
#include "spiralcolor/io.hpp"

using namespace spiralcolor;

TEST_CASE("decomposition JSON for K4")
{
    auto k4 = named_instance("k4");
    auto j = decomposition_to_json(k4, decompose(k4));
    CHECK(j["n"] == 4);
    CHECK(j["m"] == 6);
    CHECK(j["chains"].size() == 1);
    CHECK(j["chains"][0]["vertices"] == Json::array({0, 1, 2, 3}));
    CHECK(j["census"]["alpha"] == 0);
    CHECK(j["census"]["beta"] == 2);
    CHECK(j["census"]["gamma"] == 1);
    int spiral = 0;
    for (const auto& e : j["edges"])
        spiral += e["spiral"].get<bool>();
    CHECK(spiral == 3);
    CHECK(j["faces"][k4.outer_face()]["class"].is_null());
    CHECK(j["direction"] == "clockwise");
}

TEST_CASE("non-maximal inputs omit the census")
{
    auto cube = named_instance("cube");
    auto j = decomposition_to_json(cube, decompose(cube));
    CHECK_FALSE(j.contains("census"));
    for (const auto& f : j["faces"])
        CHECK(f["class"].is_null());
}

TEST_CASE("colouring round trip and deterministic dumps")
{
    auto g = gen_maximal_planar({GenKind::Maximal, 30, 2});
    auto r = entire_color(g, decompose(g));
    auto j = result_to_json(r);
    CHECK(coloring_from_json(j) == r.coloring);
    CHECK(coloring_from_json(j["coloring"]) == r.coloring);
    CHECK_FALSE(j["stats"].contains("wall_ms"));
    CHECK(result_to_json(r, true)["stats"].contains("wall_ms"));
    auto again = entire_color(g, decompose(g));
    CHECK(dump(result_to_json(again)) == dump(j));
    CHECK(dump(j).back() == '\n');
}

TEST_CASE("malformed colouring documents")
{
    CHECK_THROWS_AS(coloring_from_json(Json::array({1, 2})), Error);
    CHECK_THROWS_AS(coloring_from_json(Json{{"vertex", Json::array({1, "x"})}}), Error);
    CHECK_THROWS_AS(coloring_from_json(Json{{"vertex", Json::array({1})}, {"palette", "4"}}), Error);
}

TEST_CASE("violations JSON")
{
    auto k4 = named_instance("k4");
    auto c = four_color(k4, decompose(k4)).coloring;
    c.vertex[3] = c.vertex[2];
    auto j = violations_to_json(verify_vertex(k4, c));
    REQUIRE(j.size() == 1);
    CHECK(j[0]["kind"] == "vertex-vertex");
    CHECK(j[0]["first"]["id"] == 2);
    CHECK(j[0]["second"]["id"] == 3);
}
