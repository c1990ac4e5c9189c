import pytest

import spiralcolor as sc


def test_k4_decomposition():
    k4 = sc.named("k4")
    assert (k4.num_vertices, k4.num_edges, k4.num_faces) == (4, 6, 4)
    d = sc.decompose(k4)
    assert d["chains"][0]["vertices"] == [0, 1, 2, 3]
    assert d["census"] == {"alpha": 0, "beta": 2, "gamma": 1, "total": 3}


def test_colorings_verify_clean():
    g = sc.maximal(30, seed=4)
    for alg, bound in [("vertex", 4), ("edge", g.max_degree + 1), ("total", g.max_degree + 3)]:
        r = sc.color(g, alg)
        assert r["stats"]["palette_used"] <= bound
        assert sc.verify(g, r["coloring"], alg) == []


def test_k4_reference_values():
    k4 = sc.named("k4")
    assert sc.color(k4, "total")["stats"]["palette_used"] == 5
    assert sc.color(k4, "entire")["stats"]["palette_used"] == 7
    assert sc.exact(k4, "vertex") == 4
    assert sc.exact(k4, "edge") == 3


def test_three_coloring_and_violation_report():
    g = sc.triangle_free(40, seed=2)
    r = sc.color(g, "three")
    assert r["stats"]["palette_used"] <= 3
    bad = r["coloring"]
    u, v = g.edges[0]
    bad["vertex"][u] = bad["vertex"][v]
    out = sc.verify(g, bad, "vertex")
    assert out and out[0]["kind"] == "vertex-vertex"


def test_errors_carry_kind():
    with pytest.raises(sc.Error) as info:
        sc.color(sc.named("k4"), "three")
    assert info.value.kind == "PreconditionViolated"
    with pytest.raises(sc.Error):
        sc.Embedding([[1], [0], []])


def test_rot_round_trip_and_svg():
    g = sc.maximal(12, seed=7)
    h = sc.parse_rot(g.to_rot())
    assert h.rotation == g.rotation
    svg = sc.render_svg(g, sc.color(g, "vertex")["coloring"])
    assert "<svg" in svg and svg.rstrip().endswith("</svg>") and svg.count("<circle") == 12
    assert sc.render_svg(g) == sc.render_svg(g)
    assert not sc.layout(sc.named("c5"))["three_connected"]
