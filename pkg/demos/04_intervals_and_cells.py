"""
Intervals, basic cells, and DOT output
======================================

An interval is the full Hasse diagram between two comparable weights.  For
untwisted type A the interval under a weight and the meet of two of its
cocovers is predicted to be a diamond, a pentagon, or a double pentagon;
``basic_cell`` checks that prediction against the actual interval and
refuses to return a wrong picture.
"""

from affposet import build_affine, parse_type_id
from affposet.covering import CoverKind, cocovers
from affposet.poset import CellMismatchError, basic_cell, export_graph, interval
from affposet.weights import labels, weight_from_labels


def finite_lowers(lam):
    return [e.lower for e in cocovers(lam) if e.kind is not CoverKind.DELTA]


d3 = build_affine(parse_type_id("A3-1"))
top = weight_from_labels(d3, (0, 2, 1, 1))
bottom = weight_from_labels(d3, (2, 1, 1, 0))
graph = interval(top, bottom)
print(f"interval has {len(graph.nodes)} nodes and {len(graph.edges)} edges")
print(export_graph(graph, "dot"))

# the same five nodes form a pentagon cell
mu, mu2 = finite_lowers(top)
cell = basic_cell(top, mu, mu2)
print(f"cell shape {cell.shape.value}, case {cell.case}")

# a double pentagon needs disjoint path supports meeting at one junction
d4 = build_affine(parse_type_id("A4-1"))
lam = weight_from_labels(d4, (1, 1, 1, 1, 0))
lows = finite_lowers(lam)
by_labels = {tuple(int(v) for v in labels(w)): w for w in lows}
cell = basic_cell(lam, by_labels[(0, 0, 2, 1, 1)], by_labels[(1, 2, 0, 0, 1)])
print(f"cell shape {cell.shape.value}, case {cell.case}, "
      f"{len(cell.graph.nodes)} nodes")

# when the two supports wrap around the whole cycle the prediction is wrong
# and the check says so instead of returning the bad picture
d2 = build_affine(parse_type_id("A2-1"))
lam = weight_from_labels(d2, (1, 1, 1))
lows = finite_lowers(lam)
try:
    basic_cell(lam, lows[0], lows[1])
except CellMismatchError as exc:
    print(f"\nwrap-around pair rejected:\n  {exc}")
