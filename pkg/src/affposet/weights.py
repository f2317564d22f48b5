"""Exact weights for an affine diagram and the lattice operations on them.

A weight is stored as its level m (the coefficient on the fundamental weight
attached to vertex 0) plus rational coefficients on the simple roots.  That
pair pins the weight down uniquely, and all arithmetic is exact through
fractions.Fraction.

Two dominant weights are comparable only when they share a level and differ
by an integer root vector; within such a component the componentwise minimum
of the coefficients is again dominant and is the meet, while the join is the
componentwise maximum repaired upward until dominant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .cartan import AffineDiagram
from .roots import CoverKind, RootVector

__all__ = [
    "ComponentMismatchError",
    "Weight",
    "CoverKind",
    "evaluate",
    "labels",
    "level",
    "delta_shift",
    "weight_from_labels",
    "fundamental_weight",
    "is_dominant",
    "difference",
    "dominance_leq",
    "add_root",
    "meet",
    "join",
    "sort_key",
    "format_shift",
    "parse_shift",
    "weight_to_json",
    "weight_from_json",
]


class ComponentMismatchError(ValueError):
    """Raised when weights do not live in one lattice component."""


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an int or Fraction, got {value!r}")


@dataclass(frozen=True)
class Weight:
    diagram: AffineDiagram
    m: int
    coeffs: tuple

    def __post_init__(self) -> None:
        coeffs = tuple(_as_fraction(c) for c in self.coeffs)
        if len(coeffs) != self.diagram.n + 1:
            raise ValueError(
                f"expected {self.diagram.n + 1} coefficients, got {len(coeffs)}"
            )
        m = _as_fraction(self.m)
        object.__setattr__(self, "m", int(m) if m.denominator == 1 else m)
        object.__setattr__(self, "coeffs", coeffs)

    def __str__(self) -> str:
        labs = ",".join(str(v) for v in labels(self))
        return f"[{labs} @ {format_shift(delta_shift(self))}]"


def evaluate(weight: Weight, j: int) -> Fraction:
    """Value of the weight on the j-th simple coroot."""
    row = weight.diagram.cartan[j]
    total = Fraction(weight.m) if j == 0 else Fraction(0)
    for i, c in enumerate(weight.coeffs):
        if c:
            total += row[i] * c
    return total


def labels(weight: Weight) -> tuple:
    return tuple(evaluate(weight, j) for j in weight.diagram.vertices)


def level(weight: Weight):
    """The level; identical to the pairing with the central element."""
    diag = weight.diagram
    total = sum(
        diag.comarks[j] * evaluate(weight, j) for j in diag.vertices
    )
    assert total == weight.m
    return weight.m


def delta_shift(weight: Weight) -> Fraction:
    return Fraction(weight.coeffs[0], weight.diagram.marks[0])


def _solve_interior(diagram: AffineDiagram, labs) -> list:
    """Solve for root coefficients 1..n given all coroot values, coeff 0 = 0."""
    n = diagram.n
    rows = [
        [Fraction(diagram.cartan[j][i]) for i in range(1, n + 1)]
        + [Fraction(labs[j])]
        for j in range(1, n + 1)
    ]
    for col in range(n):
        piv = next(r for r in range(col, n) if rows[r][col] != 0)
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
        head = rows[col][col]
        rows[col] = [v / head for v in rows[col]]
        for r in range(n):
            if r != col and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[col])]
    return [Fraction(0)] + [rows[r][n] for r in range(n)]


def weight_from_labels(diagram: AffineDiagram, labs, shift=0) -> Weight:
    """The unique weight with the given coroot values and delta shift."""
    labs = tuple(_as_fraction(v) for v in labs)
    if len(labs) != diagram.n + 1:
        raise ValueError(
            f"expected {diagram.n + 1} labels, got {len(labs)}"
        )
    shift = _as_fraction(shift)
    m = sum(diagram.comarks[j] * labs[j] for j in diagram.vertices)
    coeffs = _solve_interior(diagram, labs)
    coeffs = [c + shift * a for c, a in zip(coeffs, diagram.marks)]
    weight = Weight(diagram, m, tuple(coeffs))
    assert labels(weight) == labs
    return weight


def fundamental_weight(diagram: AffineDiagram, i: int) -> Weight:
    if i not in diagram.vertices:
        raise ValueError(f"no vertex {i} in {diagram}")
    return weight_from_labels(
        diagram, tuple(1 if j == i else 0 for j in diagram.vertices)
    )


def is_dominant(weight: Weight) -> bool:
    """Dominant and integral: every coroot value a nonnegative integer."""
    return all(
        v.denominator == 1 and v >= 0 for v in labels(weight)
    )


def _require_same_diagram(a: Weight, b: Weight) -> None:
    if a.diagram != b.diagram:
        raise ComponentMismatchError(
            f"weights on different diagrams: {a.diagram} and {b.diagram}"
        )


def difference(a: Weight, b: Weight) -> tuple:
    """Coefficientwise difference a - b, defined only at equal level."""
    _require_same_diagram(a, b)
    if a.m != b.m:
        raise ComponentMismatchError(
            f"levels differ: {a.m} and {b.m}"
        )
    return tuple(x - y for x, y in zip(a.coeffs, b.coeffs))


def dominance_leq(lower: Weight, upper: Weight) -> bool:
    """Whether upper - lower is a nonnegative integer root vector."""
    _require_same_diagram(lower, upper)
    if lower.m != upper.m:
        return False
    return all(
        (x - y).denominator == 1 and x >= y
        for x, y in zip(upper.coeffs, lower.coeffs)
    )


def add_root(weight: Weight, root: RootVector) -> Weight:
    if weight.diagram != root.diagram:
        raise ComponentMismatchError("weight and root on different diagrams")
    return Weight(
        weight.diagram,
        weight.m,
        tuple(c + r for c, r in zip(weight.coeffs, root.coeffs)),
    )


def _require_component(a: Weight, b: Weight) -> None:
    _require_same_diagram(a, b)
    if a.m != b.m:
        raise ComponentMismatchError(f"levels differ: {a.m} and {b.m}")
    for i, (x, y) in enumerate(zip(a.coeffs, b.coeffs)):
        if (x - y).denominator != 1:
            raise ComponentMismatchError(
                f"coefficient {i} differs by the non-integer {x - y}"
            )


def meet(a: Weight, b: Weight) -> Weight:
    """Greatest lower bound: the componentwise coefficient minimum.

    At each vertex the minimum agrees with one argument while the other
    coefficients only drop, and off-diagonal Cartan entries are nonpositive,
    so every coroot value of the minimum dominates that argument's value.
    """
    _require_component(a, b)
    if not (is_dominant(a) and is_dominant(b)):
        raise ValueError("meet is defined for dominant integral weights")
    result = Weight(
        a.diagram, a.m, tuple(min(x, y) for x, y in zip(a.coeffs, b.coeffs))
    )
    assert is_dominant(result)
    return result


def join(a: Weight, b: Weight) -> Weight:
    """Least upper bound: componentwise maximum, repaired upward.

    While some coroot value e of the candidate is negative, any dominant
    upper bound exceeds the candidate at that vertex by at least
    ceil(-e / 2), so raising by exactly that amount keeps the candidate
    below every upper bound and terminates at the least one.
    """
    _require_component(a, b)
    if not (is_dominant(a) and is_dominant(b)):
        raise ValueError("join is defined for dominant integral weights")
    coeffs = [max(x, y) for x, y in zip(a.coeffs, b.coeffs)]
    current = Weight(a.diagram, a.m, tuple(coeffs))
    while True:
        pending = None
        for j in a.diagram.vertices:
            e = evaluate(current, j)
            if e < 0:
                pending = (j, e)
                break
        if pending is None:
            break
        j, e = pending
        assert e.denominator == 1
        step = (-int(e) + 1) // 2
        coeffs[j] += step
        current = Weight(a.diagram, a.m, tuple(coeffs))
    assert is_dominant(current)
    return current


def sort_key(weight: Weight) -> tuple:
    return (weight.m, labels(weight), delta_shift(weight))


def format_shift(value: Fraction) -> str:
    value = _as_fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_shift(text: str) -> Fraction:
    parts = text.split("/")
    if len(parts) != 2:
        raise ValueError(
            f"malformed shift {text!r}, expected 'p/q' with q > 0"
        )
    try:
        num, den = int(parts[0]), int(parts[1])
    except ValueError:
        raise ValueError(f"malformed shift {text!r}") from None
    if den <= 0:
        raise ValueError(f"shift denominator must be positive in {text!r}")
    if math.gcd(num, den) != 1:
        raise ValueError(f"shift {text!r} is not in lowest terms")
    return Fraction(num, den)


def weight_to_json(weight: Weight) -> dict:
    labs = labels(weight)
    if any(v.denominator != 1 for v in labs):
        raise ValueError("only integral weights serialize to JSON")
    return {
        "type": str(weight.diagram.type_id),
        "labels": [int(v) for v in labs],
        "delta_shift": format_shift(delta_shift(weight)),
    }


def weight_from_json(data: dict) -> Weight:
    from .cartan import build_affine

    diagram = build_affine(data["type"])
    return weight_from_labels(
        diagram,
        tuple(int(v) for v in data["labels"]),
        parse_shift(data["delta_shift"]),
    )
