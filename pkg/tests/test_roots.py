import random
from fractions import Fraction

import pytest

from affposet.cartan import build_affine, catalog_types, parse_type_id
from affposet.roots import (
    CoverKind,
    RootVector,
    cover_root_lookup,
    cover_root_set,
    coroot_pairing,
    delta_root,
    highest_short_root,
    is_real_root,
    simple_reflection,
    simple_root,
    sym_length_sq,
)

ALL_TYPES = [str(t) for t in catalog_types()]


def D(name):
    return build_affine(parse_type_id(name))


def test_root_vector_basics():
    d = D("A2-1")
    r = RootVector(d, (1, 0, 2))
    assert r.support() == frozenset({0, 2})
    assert r.height() == 3
    s = simple_root(d, 1)
    assert (r + s).coeffs == (1, 1, 2)
    assert (r - s).coeffs == (1, -1, 2)
    assert (-r).coeffs == (-1, 0, -2)
    with pytest.raises(ValueError):
        RootVector(d, (1, 0))
    with pytest.raises(ValueError):
        r + RootVector(D("A3-1"), (0, 0, 0, 1))


def test_delta_equals_marks():
    for name in ALL_TYPES:
        d = D(name)
        assert delta_root(d).coeffs == d.marks
        # delta pairs to zero against every coroot
        for j in d.vertices:
            assert coroot_pairing(delta_root(d), j) == 0


def test_simple_reflection():
    d = D("A1-1")
    a0 = simple_root(d, 0)
    # reflecting alpha_0 at vertex 1 climbs to alpha_0 + 2 alpha_1
    assert simple_reflection(a0, 1).coeffs == (1, 2)
    assert simple_reflection(simple_reflection(a0, 1), 1) == a0


def test_sym_length_sq():
    g2 = D("G2-1")
    assert sym_length_sq(simple_root(g2, 1)) == 2
    assert sym_length_sq(simple_root(g2, 2)) == Fraction(2, 3)
    assert sym_length_sq(delta_root(g2)) == 0
    a22 = D("A2-2")
    assert sym_length_sq(RootVector(a22, (1, 1))) == 1


def test_highest_short_root_frozen():
    assert highest_short_root(D("G2-1"), {1, 2}).coeffs == (0, 1, 2)
    assert highest_short_root(D("D4-3"), {1, 2}).coeffs == (0, 2, 1)
    assert highest_short_root(D("C3-1"), {1, 2, 3}).coeffs == (0, 1, 2, 1)
    assert highest_short_root(D("D4-2"), {1, 2, 3}).coeffs == (0, 1, 1, 1)
    assert highest_short_root(D("A5-2"), {1, 2, 3}).coeffs == (0, 1, 2, 1)
    assert highest_short_root(D("A3-1"), {1}).coeffs == (0, 1, 0, 0)


def test_highest_short_root_properties():
    rng = random.Random(11)
    for name in ALL_TYPES:
        d = D(name)
        subsets = [
            s for s in _proper_connected(d) if len(s) <= 4
        ]
        rng.shuffle(subsets)
        for subset in subsets[:12]:
            hsr = highest_short_root(d, subset)
            assert hsr.support() == frozenset(subset)
            assert is_real_root(hsr)
            lengths = [
                sym_length_sq(hsr),
                min(sym_length_sq(simple_root(d, j)) for j in subset),
            ]
            assert lengths[0] == lengths[1]


def _proper_connected(d):
    import itertools

    out = []
    verts = list(d.vertices)
    for size in range(1, d.n + 1):
        for sub in itertools.combinations(verts, size):
            if d.is_connected(sub):
                out.append(sub)
    return out


def test_is_real_root():
    a1 = D("A1-1")
    assert is_real_root(simple_root(a1, 0))
    assert is_real_root(RootVector(a1, (1, 2)))
    assert is_real_root(RootVector(a1, (-1, -2)))
    assert not is_real_root(delta_root(a1))
    assert not is_real_root(RootVector(a1, (0, 0)))
    assert not is_real_root(RootVector(a1, (2, 0)))
    a42 = D("A4-2")
    assert is_real_root(RootVector(a42, (1, 2, 1)))
    assert not is_real_root(RootVector(a42, (2, 2, 0)))
    a2 = D("A2-1")
    assert is_real_root(RootVector(a2, (1, 0, 1)) + delta_root(a2))
    assert is_real_root(RootVector(a2, (1, 1, 0)))
    assert not is_real_root(RootVector(a2, (2, 0, 1)))


def test_cover_root_set_frozen():
    a1 = {c.root.coeffs for c in cover_root_set(D("A1-1"))}
    assert a1 == {(1, 0), (0, 1), (1, 1)}
    a2 = {c.root.coeffs for c in cover_root_set(D("A2-1"))}
    assert a2 == {
        (1, 0, 0), (0, 1, 0), (0, 0, 1),
        (1, 1, 0), (0, 1, 1), (1, 0, 1), (1, 1, 1),
    }
    g2 = {c.root.coeffs for c in cover_root_set(D("G2-1"))}
    assert g2 == {
        (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0),
        (0, 1, 2), (0, 1, 1), (1, 1, 1), (1, 2, 3),
    }
    d43 = {c.root.coeffs for c in cover_root_set(D("D4-3"))}
    assert d43 == {
        (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0),
        (0, 2, 1), (0, 1, 1), (1, 2, 1),
    }
    a22 = {c.root.coeffs for c in cover_root_set(D("A2-2"))}
    assert a22 == {(1, 0), (0, 1), (1, 1), (2, 1)}


def test_cover_root_kinds():
    lookup = cover_root_lookup(D("G2-1"))
    assert lookup[(1, 0, 0)].kind is CoverKind.SIMPLE
    assert lookup[(0, 1, 2)].kind is CoverKind.SHORT
    assert lookup[(0, 1, 1)].kind is CoverKind.EXCEPTIONAL
    assert lookup[(1, 1, 1)].kind is CoverKind.EXCEPTIONAL
    assert lookup[(1, 2, 3)].kind is CoverKind.DELTA
    lookup = cover_root_lookup(D("A2-2"))
    assert lookup[(1, 1)].kind is CoverKind.EXCEPTIONAL
    assert lookup[(2, 1)].kind is CoverKind.DELTA


def test_cover_roots_bounded_by_marks():
    for name in ALL_TYPES:
        d = D(name)
        for cand in cover_root_set(d):
            assert all(
                0 <= c <= m for c, m in zip(cand.root.coeffs, d.marks)
            ), (name, cand.root.coeffs)
            if cand.kind is not CoverKind.DELTA:
                assert is_real_root(cand.root), (name, cand.root.coeffs)


def test_cover_root_set_sorted_and_unique():
    for name in ALL_TYPES:
        cands = cover_root_set(D(name))
        keys = [(c.root.height(), c.root.coeffs) for c in cands]
        assert keys == sorted(keys)
        assert len({c.root.coeffs for c in cands}) == len(cands)
