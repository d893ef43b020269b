"""Irreducible components of the Hilbert scheme of curves on a double plane.

For each (d, g) the curves of degree d and genus g on the double plane form
finitely many irreducible families, one per admissible triple.  This module
enumerates them, computes the specialization relation between adjacent
families, and decides connectedness of the resulting graph.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .intfn import choose2
from .triples import Triple, component_dim, triple_from_class

# the one (d, g) carrying both a planar and a non-planar family
_CONIC_CLASS = (2, 0)
_CONIC_EDGE = (Triple(0, 1, 1), Triple(0, 0, 2))


def planar_genus(d: int) -> int:
    """Genus (d-1)(d-2)/2 of a plane curve of degree d."""
    return choose2(d - 1)


def nonempty(d: int, g: int) -> bool:
    """Whether any curve of degree d and genus g lies on the double plane."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    if g == planar_genus(d):
        return True
    return d >= 2 and g <= choose2(d - 2)


def components(d: int, g: int) -> list[Triple]:
    """Triples of the irreducible families of degree-d genus-g curves.

    Non-planar families are listed by increasing residual degree y; the
    planar family (0, 0, d), when it exists, comes last.  Both kinds occur
    together only for (d, g) = (2, 0).
    """
    if d < 1:
        raise ValueError("degree must be >= 1")
    out: list[Triple] = []
    if d >= 2 and g <= choose2(d - 2):
        for y in range(1, d // 2 + 1):
            t = triple_from_class(d, g, y)
            if t is not None:
                out.append(t)
    if g == planar_genus(d):
        out.append(Triple(0, 0, d))
    return out


def count_components(d: int, g: int) -> int:
    return len(components(d, g))


def specialization_target(t: Triple) -> Triple:
    """The adjacent triple that the family of t specializes into.

    Trading one degree of the residual curve for a larger plane curve sends
    (z, y, p) to (z + p - y, y - 1, p + 1); degree and genus are preserved.
    Requires y >= 2.
    """
    if t.y < 2:
        raise ValueError("specialization needs residual degree y >= 2")
    return Triple(t.z + t.p - t.y, t.y - 1, t.p + 1)


@dataclass(frozen=True)
class ComponentGraph:
    """Specialization graph on the components of one (d, g)."""

    d: int
    g: int
    nodes: tuple[Triple, ...]
    edges: tuple[tuple[Triple, Triple], ...]


def component_graph(d: int, g: int) -> ComponentGraph:
    """Nodes are the components; each y >= 2 family points at its target.

    For (d, g) = (2, 0) the double line additionally degenerates onto the
    planar conic family, giving the single extra edge (0,1,1) -> (0,0,2).
    """
    nodes = components(d, g)
    nodeset = set(nodes)
    edges: list[tuple[Triple, Triple]] = []
    for t in nodes:
        if t.y >= 2:
            target = specialization_target(t)
            if target in nodeset:
                edges.append((t, target))
    if (d, g) == _CONIC_CLASS and _CONIC_EDGE[0] in nodeset and _CONIC_EDGE[1] in nodeset:
        edges.append(_CONIC_EDGE)
    return ComponentGraph(d, g, tuple(nodes), tuple(edges))


def is_connected(d: int, g: int) -> bool:
    """Connectedness of the component graph, treated as undirected."""
    graph = component_graph(d, g)
    if not graph.nodes:
        raise ValueError(f"no curves of degree {d} and genus {g} on the double plane")
    adjacency: dict[Triple, set[Triple]] = {t: set() for t in graph.nodes}
    for a, b in graph.edges:
        adjacency[a].add(b)
        adjacency[b].add(a)
    seen = {graph.nodes[0]}
    stack = [graph.nodes[0]]
    while stack:
        for nxt in adjacency[stack.pop()]:
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return len(seen) == len(graph.nodes)


def _node_id(t: Triple) -> str:
    return f"{t.z},{t.y},{t.p}"


def graph_json_payload(graph: ComponentGraph) -> dict:
    """Edge-list representation used by the CLI JSON output."""
    return {
        "d": graph.d,
        "g": graph.g,
        "nodes": [
            {"z": t.z, "y": t.y, "p": t.p, "dim": component_dim(t)} for t in graph.nodes
        ],
        "edges": [
            {"source": _node_id(a), "target": _node_id(b)} for a, b in graph.edges
        ],
    }


def graph_json(graph: ComponentGraph) -> str:
    return json.dumps(graph_json_payload(graph), indent=2)


def graph_dot(graph: ComponentGraph) -> str:
    """DOT text; each node is labelled "z,y,p/dim=D"."""
    lines = ["digraph components {"]
    for t in graph.nodes:
        lines.append(f'  "{_node_id(t)}" [label="{_node_id(t)}/dim={component_dim(t)}"];')
    for a, b in graph.edges:
        lines.append(f'  "{_node_id(a)}" -> "{_node_id(b)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
