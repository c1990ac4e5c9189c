#include <doctest.h>

#include "spiralcolor/bench.hpp"
#include "spiralcolor/error.hpp"

using namespace spiralcolor;

TEST_CASE("corpus specs are deterministic and within range")
{
    auto a = corpus_specs({GenKind::Maximal, 50, 4, 60, 1});
    auto b = corpus_specs({GenKind::Maximal, 50, 4, 60, 1});
    REQUIRE(a.size() == 50);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].n == b[i].n);
        CHECK(a[i].seed == 1 + i);
        CHECK(a[i].n >= 4);
        CHECK(a[i].n <= 60);
    }
    CHECK_THROWS_AS(corpus_specs({GenKind::Maximal, 5, 10, 4, 1}), Error);
}

TEST_CASE("100 maximal instances: four_color always valid within four colours")
{
    auto rep = run_corpus(corpus_specs({GenKind::Maximal, 100, 4, 60, 1}), Algorithm::Vertex, {}, 4, 24);
    CHECK(rep.instances.size() == 100);
    CHECK(rep.valid == 100);
    CHECK(rep.target_met == 100);
    CHECK(rep.errors == 0);
    for (std::size_t i = 0; i < rep.instances.size(); ++i)
        CHECK(rep.instances[i].id == static_cast<int>(i));
    CHECK(rep.oracle_checked > 0);
}

TEST_CASE("100 triangle-free instances: three colours")
{
    auto rep = run_corpus(corpus_specs({GenKind::TriangleFree, 100, 8, 120, 1}), Algorithm::Three, {}, 4);
    CHECK(rep.valid == 100);
    CHECK(rep.target_met == 100);
}

TEST_CASE("empty corpus gives an empty report")
{
    auto rep = run_corpus({}, Algorithm::Vertex);
    CHECK(rep.instances.empty());
    auto j = report_to_json(rep);
    CHECK(j["aggregate"]["count"] == 0);
    CHECK(j["instances"].empty());
}

TEST_CASE("failures are recorded, not thrown, and threads do not change the report")
{
    auto rep = run_corpus(corpus_specs({GenKind::Maximal, 6, 4, 10, 1}), Algorithm::Three);
    CHECK(rep.errors == 6);
    CHECK(rep.instances[0].error == "PreconditionViolated");
    auto specs = corpus_specs({GenKind::Maximal, 24, 10, 80, 9});
    auto one = run_corpus(specs, Algorithm::Edge, {}, 1);
    auto many = run_corpus(specs, Algorithm::Edge, {}, 6);
    CHECK(dump(report_to_json(one)) == dump(report_to_json(many)));
    CHECK(report_table(one) == report_table(many));
}

TEST_CASE("algorithm names")
{
    for (auto a : {Algorithm::Vertex, Algorithm::Edge, Algorithm::Total, Algorithm::Entire, Algorithm::Three})
        CHECK(parse_algorithm(to_string(a)) == a);
    CHECK_THROWS_AS(parse_algorithm("face"), Error);
}
