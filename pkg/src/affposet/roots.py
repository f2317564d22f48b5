"""Root lattice vectors, reflections, and the cover difference candidates.

Every covering relation between dominant weights of positive level drops by
one of finitely many root vectors: a simple root, the highest short root of
a proper connected subdiagram, delta, or one of a handful of exceptional
vectors on the two triply laced diagrams.  :func:`cover_root_set` enumerates
these candidates once per diagram.
"""

from __future__ import annotations

import enum
import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction

from .cartan import AffineDiagram

__all__ = [
    "CoverKind",
    "RootVector",
    "CoverCandidate",
    "simple_root",
    "delta_root",
    "coroot_pairing",
    "simple_reflection",
    "highest_short_root",
    "is_real_root",
    "cover_root_set",
    "cover_root_lookup",
]


class CoverKind(enum.Enum):
    """How a cover difference arises."""

    SIMPLE = "simple"
    SHORT = "short"  # highest short root of a proper connected subdiagram
    DELTA = "delta"
    EXCEPTIONAL = "exceptional"


@dataclass(frozen=True)
class RootVector:
    """An integer vector in the simple root basis of one diagram."""

    diagram: AffineDiagram
    coeffs: tuple

    def __post_init__(self) -> None:
        coeffs = tuple(int(c) for c in self.coeffs)
        if len(coeffs) != self.diagram.n + 1:
            raise ValueError(
                f"expected {self.diagram.n + 1} coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "coeffs", coeffs)

    def support(self) -> frozenset:
        return frozenset(i for i, c in enumerate(self.coeffs) if c != 0)

    def height(self) -> int:
        return sum(self.coeffs)

    def _check_same(self, other: "RootVector") -> None:
        if self.diagram != other.diagram:
            raise ValueError("root vectors live on different diagrams")

    def __add__(self, other: "RootVector") -> "RootVector":
        self._check_same(other)
        return RootVector(
            self.diagram,
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __sub__(self, other: "RootVector") -> "RootVector":
        self._check_same(other)
        return RootVector(
            self.diagram,
            tuple(a - b for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __neg__(self) -> "RootVector":
        return RootVector(self.diagram, tuple(-a for a in self.coeffs))

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coeffs) + ")"


def simple_root(diagram: AffineDiagram, i: int) -> RootVector:
    if i not in diagram.vertices:
        raise ValueError(f"no vertex {i} in {diagram}")
    return RootVector(diagram, tuple(1 if j == i else 0 for j in diagram.vertices))


def delta_root(diagram: AffineDiagram) -> RootVector:
    return RootVector(diagram, diagram.marks)


def coroot_pairing(root: RootVector, j: int) -> int:
    """Value of the vector on the j-th simple coroot."""
    row = root.diagram.cartan[j]
    return sum(row[i] * c for i, c in enumerate(root.coeffs))


def simple_reflection(root: RootVector, j: int) -> RootVector:
    p = coroot_pairing(root, j)
    coeffs = list(root.coeffs)
    coeffs[j] -= p
    return RootVector(root.diagram, tuple(coeffs))


def sym_length_sq(root: RootVector) -> Fraction:
    """Squared length under the normalized invariant form."""
    b = root.diagram.sym_form
    c = root.coeffs
    total = Fraction(0)
    for i, ci in enumerate(c):
        if ci == 0:
            continue
        for j, cj in enumerate(c):
            if cj:
                total += ci * cj * b[i][j]
    return total


@functools.lru_cache(maxsize=None)
def _highest_short_root_cached(diagram: AffineDiagram, subset: tuple) -> RootVector:
    lens = diagram.root_length_sq
    seed = min(subset, key=lambda i: (lens[i], i))
    beta = simple_root(diagram, seed)
    for _ in range(4096):
        j = next((v for v in subset if coroot_pairing(beta, v) < 0), None)
        if j is None:
            break
        beta = simple_reflection(beta, j)
    else:
        raise AssertionError(f"reflection climb did not stabilize on {subset}")
    assert beta.support() == frozenset(subset)
    assert sym_length_sq(beta) == min(lens[i] for i in subset)
    return beta


def highest_short_root(diagram: AffineDiagram, subset) -> RootVector:
    """Highest short root of the finite subsystem on a proper connected set.

    Starting from a shortest simple root, repeatedly reflecting at a vertex
    with negative pairing climbs inside the short roots (reflections preserve
    length) and stops exactly at the unique locally dominant one.
    """
    k = tuple(sorted(set(subset)))
    if not k:
        raise ValueError("empty vertex set")
    if any(v not in diagram.vertices for v in k):
        raise ValueError(f"vertices {list(k)} out of range for {diagram}")
    if len(k) == diagram.n + 1:
        raise ValueError("subdiagram must be proper")
    if not diagram.is_connected(k):
        raise ValueError(f"vertex set {list(k)} is not connected in {diagram}")
    return _highest_short_root_cached(diagram, k)


def is_real_root(root: RootVector) -> bool:
    """Whether the vector lies in the Weyl orbit of a simple root.

    Positive vectors descend by reflecting at a vertex with positive pairing;
    a real root reaches a simple root this way, anything else either develops
    mixed signs or stalls with no positive pairing (imaginary vectors).
    """
    coeffs = list(root.coeffs)
    if all(c == 0 for c in coeffs):
        return False
    if any(c > 0 for c in coeffs) and any(c < 0 for c in coeffs):
        return False
    if all(c <= 0 for c in coeffs):
        coeffs = [-c for c in coeffs]
    diagram = root.diagram
    rows = diagram.cartan
    budget = 10 * sum(coeffs) + 10
    for _ in range(budget):
        supp = [i for i, c in enumerate(coeffs) if c != 0]
        if len(supp) == 1:
            return coeffs[supp[0]] == 1
        j = None
        for v in diagram.vertices:
            if sum(rows[v][i] * c for i, c in enumerate(coeffs)) > 0:
                j = v
                break
        if j is None:
            return False
        p = sum(rows[j][i] * c for i, c in enumerate(coeffs))
        coeffs[j] -= p
        if coeffs[j] < 0:
            return False
    raise AssertionError(f"descent from {root} exceeded its budget")


@dataclass(frozen=True)
class CoverCandidate:
    root: RootVector
    kind: CoverKind


def _connected_proper_subsets(diagram: AffineDiagram):
    verts = list(diagram.vertices)
    for size in range(1, len(verts)):
        for combo in itertools.combinations(verts, size):
            if diagram.is_connected(combo):
                yield combo


_EXTRA_BY_TYPE = {
    # three diagrams carry cover differences that are not locally short
    # dominant roots: the sum over the triple bond pair (plus, for G2-1, the
    # sum of all three simple roots), and the sum over the quadruple bond
    # pair of the rank one twisted diagram
    "G2-1": ((0, 1, 1), (1, 1, 1)),
    "D4-3": ((0, 1, 1),),
    "A2-2": ((1, 1),),
}


@functools.lru_cache(maxsize=None)
def cover_root_set(diagram: AffineDiagram) -> tuple:
    """All candidate cover differences, sorted by height then coefficients."""
    out = []
    for subset in _connected_proper_subsets(diagram):
        root = highest_short_root(diagram, subset)
        kind = CoverKind.SIMPLE if len(subset) == 1 else CoverKind.SHORT
        out.append(CoverCandidate(root, kind))
    out.append(CoverCandidate(delta_root(diagram), CoverKind.DELTA))
    for coeffs in _EXTRA_BY_TYPE.get(str(diagram.type_id), ()):
        out.append(CoverCandidate(RootVector(diagram, coeffs), CoverKind.EXCEPTIONAL))
    seen = set()
    for cand in out:
        if cand.root.coeffs in seen:
            raise AssertionError(f"duplicate cover candidate {cand.root}")
        seen.add(cand.root.coeffs)
    out.sort(key=lambda cand: (cand.root.height(), cand.root.coeffs))
    return tuple(out)


@functools.lru_cache(maxsize=None)
def cover_root_lookup(diagram: AffineDiagram) -> dict:
    """Coefficient tuple to candidate map for membership tests."""
    return {cand.root.coeffs: cand for cand in cover_root_set(diagram)}
