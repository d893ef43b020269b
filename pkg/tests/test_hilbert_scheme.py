"""Component census, specialization graph, and connectedness."""

import pytest

from doubleplane.intfn import choose2
from doubleplane.hilbert_scheme import (
    component_graph,
    components,
    graph_dot,
    graph_json_payload,
    is_connected,
    nonempty,
)
from doubleplane.triples import Triple, component_dim, curve_class


def census_by_enumeration(d, g):
    """Independent census: try every residual degree and keep valid triples."""
    found = []
    for y in range(0, d // 2 + 1):
        p = d - y
        if p < 1 or p < y:
            continue
        z = choose2(d - 2) - g - (y - 1) * (d - y - 2)
        if z < 0 or (y == 0 and z != 0):
            continue
        found.append(Triple(z, y, p))
    return found


def test_nonempty_bounds():
    with pytest.raises(ValueError):
        nonempty(0, 0)
    assert nonempty(1, 0)
    assert not nonempty(1, 1)
    assert nonempty(2, 0)
    assert not nonempty(2, 1)
    assert nonempty(3, 1)  # planar cubic
    assert nonempty(3, 0)
    assert nonempty(3, -1)  # nothing caps the genus from below
    assert nonempty(4, 3)
    assert not nonempty(4, 2)
    assert nonempty(4, 1)


def test_nonempty_matches_enumeration():
    for d in range(1, 14):
        top = choose2(d - 1)
        for g in range(top - 60, top + 3):
            assert nonempty(d, g) == bool(census_by_enumeration(d, g)), (d, g)


def test_components_match_enumeration():
    for d in range(1, 12):
        top = choose2(d - 1)
        for g in range(top - 45, top + 1):
            if not nonempty(d, g):
                continue
            got = components(d, g)
            assert sorted(map(str, got)) == sorted(map(str, census_by_enumeration(d, g)))
            for t in got:
                assert curve_class(t).d == d and curve_class(t).g == g


def test_components_ordering():
    # ascending y, with the planar component listed last
    assert [str(t) for t in components(2, 0)] == ["(0,1,1)", "(0,0,2)"]
    assert [str(t) for t in components(4, 0)] == ["(1,1,3)", "(1,2,2)"]
    got = components(6, 0)
    ys = [t.y for t in got]
    assert ys == sorted(ys)


def test_only_two_kinds_coexist_at_conic():
    # the planar component and a non-planar one share a class only at (2,0)
    for d in range(1, 14):
        g = choose2(d - 1)
        comps = components(d, g)
        planar = [t for t in comps if t.y == 0]
        assert len(planar) == 1
        if d != 2:
            assert len(comps) == 1, (d, g, comps)
    assert len(components(2, 0)) == 2


def test_components_of_empty_and_unbounded_classes():
    # genus strictly between the non-planar and planar maxima: nothing there
    assert components(4, 2) == []
    # no lower bound on the genus: large z soaks up arbitrary deficit
    assert components(3, -5) == [Triple(5, 1, 2)]


def test_graph_edges_target_smaller_y():
    for d in range(2, 11):
        top = choose2(d - 2)
        for g in range(top - 25, top + 1):
            if not nonempty(d, g):
                continue
            graph = component_graph(d, g)
            payload = graph_json_payload(graph)
            nodes = {f"{n['z']},{n['y']},{n['p']}" for n in payload["nodes"]}
            for e in payload["edges"]:
                assert e["source"] in nodes and e["target"] in nodes
                sy = int(e["source"].split(",")[1])
                ty = int(e["target"].split(",")[1])
                assert ty == sy - 1


def test_specialization_edge_written_out():
    # (z,y,p) -> (z+p-y, y-1, p+1) for y >= 2
    graph = component_graph(4, 0)
    payload = graph_json_payload(graph)
    assert payload["edges"] == [{"source": "1,2,2", "target": "1,1,3"}]


def test_conic_edge_present():
    payload = graph_json_payload(component_graph(2, 0))
    assert {"source": "0,1,1", "target": "0,0,2"} in payload["edges"]


def test_connectedness_everywhere():
    for d in range(1, 13):
        top = choose2(d - 1)
        for g in range(top - 40, top + 1):
            if nonempty(d, g):
                assert is_connected(d, g), (d, g)


def test_is_connected_raises_on_empty():
    with pytest.raises(ValueError):
        is_connected(2, 1)


def test_dot_output_shape():
    dot = graph_dot(component_graph(4, 0))
    assert dot.startswith("digraph components {")
    assert dot.rstrip().endswith("}")
    assert '"1,2,2" [label="1,2,2/dim=10"];' in dot
    assert '"1,2,2" -> "1,1,3";' in dot


def test_json_payload_dims():
    payload = graph_json_payload(component_graph(4, 0))
    assert payload["d"] == 4 and payload["g"] == 0
    for node in payload["nodes"]:
        t = Triple(node["z"], node["y"], node["p"])
        assert node["dim"] == component_dim(t)
