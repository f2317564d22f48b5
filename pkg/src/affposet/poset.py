"""Intervals in the dominance order and the basic cells of untwisted type A.

An interval is computed by walking cocovers downward from the top; since the
interval is order convex, covers taken inside it are covers of the full
poset.  ``basic_cell`` builds the predicted shape of the interval under a
weight and the meet of two of its cocovers (diamond, pentagon, or double
pentagon depending on the supports of the two cover roots), then checks the
prediction against the actual interval and raises ``CellMismatchError`` when
they disagree instead of papering over the difference.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass

from .cartan import build_affine, parse_type_id
from .covering import CoverEdge, cocovers
from .roots import CoverKind, RootVector
from .weights import (
    Weight,
    add_root,
    delta_shift,
    dominance_leq,
    format_shift,
    labels,
    meet,
    parse_shift,
    sort_key,
    weight_from_labels,
)

__all__ = [
    "IncomparableError",
    "CellMismatchError",
    "CellShape",
    "PosetGraph",
    "Cell",
    "interval",
    "basic_cell",
    "export_graph",
    "graph_from_json",
]


class IncomparableError(ValueError):
    """The requested endpoints are not comparable in the dominance order."""


class CellMismatchError(ValueError):
    """The predicted cell differs from the actual interval."""


class CellShape(enum.Enum):
    DIAMOND = "diamond"
    PENTAGON = "pentagon"
    DOUBLE_PENTAGON = "double_pentagon"


@dataclass(frozen=True)
class PosetGraph:
    """Nodes and cover edges of a finite piece of the dominance order."""

    nodes: tuple
    edges: tuple

    def __post_init__(self) -> None:
        object.__setattr__(self, "nodes", tuple(self.nodes))
        object.__setattr__(self, "edges", tuple(self.edges))


@dataclass(frozen=True)
class Cell:
    shape: CellShape
    case: str
    graph: PosetGraph


def interval(top: Weight, bottom: Weight, max_nodes: int = 100000) -> PosetGraph:
    """Hasse diagram of every dominant weight between bottom and top."""
    if top == bottom:
        return PosetGraph((top,), ())
    if not dominance_leq(bottom, top):
        raise IncomparableError(f"{bottom} does not lie below {top}")
    seen = {top}
    frontier = [top]
    edges = []
    while frontier:
        nxt = []
        for node in frontier:
            for edge in cocovers(node):
                if not dominance_leq(bottom, edge.lower):
                    continue
                edges.append(edge)
                if edge.lower not in seen:
                    seen.add(edge.lower)
                    nxt.append(edge.lower)
                    if len(seen) > max_nodes:
                        raise ValueError(f"interval exceeds {max_nodes} nodes")
        frontier = nxt
    nodes = tuple(sorted(seen, key=sort_key))
    edges = tuple(sorted(edges, key=lambda e: (sort_key(e.upper), sort_key(e.lower))))
    return PosetGraph(nodes, edges)


def _cycle_neighbors(diagram, i):
    return set(diagram.neighbors(i))


def _path_ends(diagram, subset):
    # ends of a connected path inside the type A cycle
    return sorted(v for v in subset if len(_cycle_neighbors(diagram, v) & subset) <= 1)


def _predict(lam, edge_a, edge_b):
    """Node set, edge pair set, shape, and case tag for the predicted cell."""
    diagram = lam.diagram
    ka = set(edge_a.root.support())
    kb = set(edge_b.root.support())
    mu_a, mu_b = edge_a.lower, edge_b.lower
    union = ka | kb
    bottom = add_root(
        lam,
        -RootVector(
            diagram, [1 if j in union else 0 for j in diagram.vertices]
        ),
    )

    if len(ka) == 1 and len(kb) == 1:
        case = "1a"
    elif ka & kb:
        case = "1c"
    elif not diagram.is_connected(sorted(union)):
        case = "1b"
    elif len(ka) == 1 or len(kb) == 1:
        case = "2"
    else:
        case = "3"

    if case in ("1a", "1b", "1c"):
        nodes = {lam, mu_a, mu_b, bottom}
        pairs = {(lam, mu_a), (lam, mu_b), (mu_a, bottom), (mu_b, bottom)}
        return nodes, pairs, CellShape.DIAMOND, case

    if case == "2":
        if len(ka) == 1:
            i = next(iter(ka))
            mu_s, mu_p, path, gamma_p = mu_a, mu_b, kb, edge_b.root
        else:
            i = next(iter(kb))
            mu_s, mu_p, path, gamma_p = mu_b, mu_a, ka, edge_a.root
        ends = [v for v in _path_ends(diagram, path) if i in _cycle_neighbors(diagram, v)]
        i1 = min(ends)
        e_i = RootVector(diagram, [1 if j == i else 0 for j in diagram.vertices])
        e_i1 = RootVector(diagram, [1 if j == i1 else 0 for j in diagram.vertices])
        x = add_root(lam, -(e_i + e_i1))
        nodes = {lam, mu_s, mu_p, x, bottom}
        pairs = {(lam, mu_s), (lam, mu_p), (mu_s, x), (x, bottom), (mu_p, bottom)}
        return nodes, pairs, CellShape.PENTAGON, case

    contacts = [
        (u, v)
        for u in _path_ends(diagram, ka)
        for v in _path_ends(diagram, kb)
        if v in _cycle_neighbors(diagram, u)
    ]
    i, i2 = min(contacts)
    e_i = RootVector(diagram, [1 if j == i else 0 for j in diagram.vertices])
    e_i2 = RootVector(diagram, [1 if j == i2 else 0 for j in diagram.vertices])
    y = add_root(lam, -(e_i + e_i2))
    p = add_root(lam, -(edge_a.root + e_i2)) if i in ka else add_root(
        lam, -(edge_b.root + e_i2)
    )
    q = add_root(lam, -(edge_b.root + e_i)) if i in ka else add_root(
        lam, -(edge_a.root + e_i)
    )
    mu, mu2 = (mu_a, mu_b) if i in ka else (mu_b, mu_a)
    nodes = {lam, mu, y, mu2, p, q, bottom}
    pairs = {
        (lam, mu),
        (lam, y),
        (lam, mu2),
        (mu, p),
        (y, p),
        (y, q),
        (mu2, q),
        (p, bottom),
        (q, bottom),
    }
    return nodes, pairs, CellShape.DOUBLE_PENTAGON, case


def _node_tag(weight: Weight) -> str:
    labs = ",".join(str(int(v)) for v in labels(weight))
    return f"{labs}|{format_shift(delta_shift(weight))}"


def basic_cell(lam: Weight, mu: Weight, mu2: Weight) -> Cell:
    """Interval between a weight and the meet of two of its cocovers.

    Only untwisted type A is classified.  Both lower arguments must be
    distinct cocovers of the top weight along finite cover roots; the delta
    edge never bounds a cell.
    """
    tid = lam.diagram.type_id
    if tid.family != "A" or tid.twist != 1:
        raise ValueError(f"basic cells are classified for A(n,1) only, not {tid}")
    if mu == mu2:
        raise ValueError("the two cocovers must be distinct")
    by_lower = {}
    for edge in cocovers(lam):
        if edge.kind is not CoverKind.DELTA:
            by_lower[edge.lower] = edge
    if mu not in by_lower or mu2 not in by_lower:
        raise ValueError(
            "both weights must be cocovers of the top along finite roots"
        )
    edge_a, edge_b = by_lower[mu], by_lower[mu2]
    nodes, pairs, shape, case = _predict(lam, edge_a, edge_b)
    bottom = meet(mu, mu2)
    actual = interval(lam, bottom)
    actual_nodes = set(actual.nodes)
    actual_pairs = {(e.upper, e.lower) for e in actual.edges}
    if nodes != actual_nodes or pairs != actual_pairs:
        predicted_tags = sorted(_node_tag(w) for w in nodes)
        actual_tags = sorted(_node_tag(w) for w in actual_nodes)
        raise CellMismatchError(
            f"case {case} predicts nodes {predicted_tags} "
            f"({len(pairs)} edges) but the interval has {actual_tags} "
            f"({len(actual_pairs)} edges)"
        )
    return Cell(shape, case, actual)


def export_graph(graph: PosetGraph, fmt: str = "json"):
    """Render a graph as a JSON-ready dict or as DOT text."""
    if graph.nodes:
        diagram = graph.nodes[0].diagram
        for node in graph.nodes:
            if node.diagram != diagram:
                raise ValueError("graph mixes diagrams")
    else:
        diagram = None
    if fmt == "json":
        index = {node: k for k, node in enumerate(graph.nodes)}
        nodes = [
            {
                "labels": [int(v) for v in labels(node)],
                "delta_shift": format_shift(delta_shift(node)),
            }
            for node in graph.nodes
        ]
        edges = []
        for edge in graph.edges:
            if edge.upper not in index or edge.lower not in index:
                raise ValueError("edge endpoint missing from the node list")
            edges.append(
                {
                    "upper": index[edge.upper],
                    "lower": index[edge.lower],
                    "kind": edge.kind.value,
                    "root": list(edge.root.coeffs),
                    "case": edge.case,
                }
            )
        return {
            "type": str(diagram.type_id) if diagram is not None else None,
            "nodes": nodes,
            "edges": edges,
        }
    if fmt == "dot":
        lines = ["digraph poset {", "  rankdir=TB;"]
        for node in sorted(graph.nodes, key=sort_key):
            lines.append(f'  "{_node_tag(node)}";')
        for edge in sorted(
            graph.edges, key=lambda e: (sort_key(e.upper), sort_key(e.lower))
        ):
            lines.append(
                f'  "{_node_tag(edge.upper)}" -> "{_node_tag(edge.lower)}"'
                f' [label="{edge.case}", kind="{edge.kind.value}"];'
            )
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}, expected 'json' or 'dot'")


def graph_from_json(data) -> PosetGraph:
    """Inverse of the JSON export."""
    if isinstance(data, str):
        data = json.loads(data)
    if data.get("type") is None:
        if data.get("nodes"):
            raise ValueError("nonempty graph without a type")
        return PosetGraph((), ())
    diagram = build_affine(parse_type_id(data["type"]))
    nodes = tuple(
        weight_from_labels(
            diagram, entry["labels"], parse_shift(entry["delta_shift"])
        )
        for entry in data["nodes"]
    )
    edges = []
    for entry in data["edges"]:
        edges.append(
            CoverEdge(
                upper=nodes[entry["upper"]],
                lower=nodes[entry["lower"]],
                kind=CoverKind(entry["kind"]),
                root=RootVector(diagram, entry["root"]),
                case=entry["case"],
            )
        )
    return PosetGraph(nodes, tuple(edges))
