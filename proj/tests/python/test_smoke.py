import os

import pytest

import kgrcalc

G2 = """kgraph 1
k 2
vertex v
edge e color=1 range=v source=v
edge f color=2 range=v source=v
square e f = f e
"""

G3 = """kgraph 1
k 2
vertex v
edge a1 color=1 range=v source=v
edge a2 color=1 range=v source=v
edge b1 color=2 range=v source=v
edge b2 color=2 range=v source=v
square a1 b1 = b1 a1
square a1 b2 = b2 a2
square a2 b1 = b2 a1
square a2 b2 = b1 a2
"""


@pytest.fixture
def g2():
    return kgrcalc.load_graph(G2)


@pytest.fixture
def g3():
    return kgrcalc.load_graph(G3)


def test_load_and_paths(g2):
    assert g2.rank == 2
    assert g2.vertices() == ["v"]
    assert g2.compose("f", "e") == "e.f"  # normalized through the square
    assert g2.degree("e.f") == [1, 1]
    assert g2.segment("e.f", [0, 1], [1, 1]) == "e"


def test_lambda_min_and_exhaustive(g3):
    assert g3.lambda_min("a1", "b1") == [("b1", "a1")]
    res = g3.is_exhaustive("v", ["a1"])
    assert not res["exhaustive"]
    assert res["witness"] == "a2"
    assert g3.is_exhaustive("v", ["a1", "a2"])["exhaustive"]


def test_set_algebra(g3):
    a = g3.basic("v", ["a1"])
    b = g3.basic("v", ["b1"])
    inter = g3.intersect(a, b)
    assert g3.set_str(inter) == "{[v - b1,a1]}"
    assert g3.is_empty(g3.basic("v", ["a1", "a2"]))
    assert not g3.condition_K(g3.basic("v", ["a1"]), 1)


def test_module_operations(g2):
    xe = g2.indicator([1, 0], g2.basic("e"))
    ip = g2.inner_product(xe, xe)
    assert g2.func_equal(ip, g2.indicator([0, 0], g2.basic("v")))
    prod = g2.multiply(xe, g2.indicator([0, 1], g2.basic("f")))
    assert prod.slice == [1, 1]
    assert g2.func_equal(prod, g2.indicator([1, 1], g2.basic("e.f")))


def test_compact_alignment(g2):
    pe = g2.theta([1, 0], g2.basic("e"), g2.basic("e"))
    pf = g2.theta([0, 1], g2.basic("f"), g2.basic("f"))
    aligned = g2.compact_align(pe, pf)
    assert aligned.slice == [1, 1]
    assert len(aligned) == 1
    assert "e.f" in g2.op_str(aligned)
    # sequential elevation agrees with the expansion on a spanning vector
    fef = g2.indicator([1, 1], g2.basic("e.f"))
    sequential = g2.iota(pe, [1, 1], g2.iota(pf, [1, 1], fef))
    assert g2.func_equal(g2.apply_compact(aligned, fef), sequential)


def test_slice_containment(g2):
    assert g2.contained_in_slice(g2.basic("e"), [0, 1])
    assert not g2.avoids_slice(g2.basic("v"), 1, route="kernel")
    assert not g2.avoids_slice(g2.basic("v"), 1, route="extensional")
    assert g2.spanning_XI([1, 0], [1, 0], [1, 1], 1)


def test_dynamics(g3):
    assert g3.detect_regularity() == [2, 2]
    xv = g3.indicator([0, 0], g3.basic("v"))
    pulled = g3.alpha([1, 1], xv)
    back = g3.transfer([1, 1], pulled, weights="regular")
    assert g3.func_equal(back, xv)


def test_check_suites(g2):
    rows = g2.ck_check(cap=[1, 1])
    assert rows and all(r["status"] == "OK" for r in rows)
    rows = g2.exel_check(n=[1, 0], weights="uniform", cap=[1, 1])
    assert rows and all(r["status"] == "OK" for r in rows)
    rows = g2.oracle_check(degree=[2, 2], cap=[1, 1])
    assert rows and all(r["status"] == "OK" for r in rows)


def test_graph_file_loading():
    graph_dir = os.environ.get("KGR_GRAPH_DIR")
    if not graph_dir:
        pytest.skip("KGR_GRAPH_DIR not set")
    g = kgrcalc.load_graph_file(os.path.join(graph_dir, "g4_twovertex_edge.kg"))
    assert g.rank == 1
    assert g.lambda_min("e", "u") == [("v", "e")]


def test_errors_are_typed(g2):
    with pytest.raises(kgrcalc.KgrError):
        g2.compose("e", "zed")
    with pytest.raises(kgrcalc.KgrError):
        kgrcalc.load_graph("kgraph 1\nk 2\nvertex v\nedge e color=1 range=v source=v\nedge f color=2 range=v source=v\n")
