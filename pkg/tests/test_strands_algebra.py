"""Strands algebra: enumeration, crossings, products and the differential."""

from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from strands_decat import corpus
from strands_decat.arc_diagram import CIRCLE
from strands_decat.strands_algebra import (
    DomainError,
    Geometry,
    StrandsAlgebra,
    StrandsPicture,
    weight,
)

P = StrandsPicture.make


@pytest.fixture(scope="module")
def algebras():
    return {name: StrandsAlgebra(corpus.diagram(name)) for name in corpus.DIAGRAMS}


# -- crossings against a brute-force count on the universal cover ---------------


def brute_crossings(s, t, per):
    """Straight segments (0, a) -> (1, b); count translates of t met transversally."""
    if s[0] != t[0]:
        return 0
    shifts = range(-40, 41) if per else [0]
    n = 0
    for k in shifts:
        lo = s[1] - t[1] - k * per
        hi = s[2] - t[2] - k * per
        n += lo * hi < 0
    return n


@given(st.integers(0, 4), st.integers(0, 6), st.integers(0, 4), st.integers(0, 6))
def test_circle_crossings_match_brute_force(a1, len1, a2, len2):
    g = Geometry(corpus.diagram("D5"))
    per = g.period[1]
    s, t = (1, a1 % per, a1 % per + len1), (1, a2 % per, a2 % per + len2)
    assert g.pair_crossings(s, t) == brute_crossings(s, t, per)
    assert len(g.translates(s, t)) == brute_crossings(s, t, per)


@given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
def test_interval_crossings_match_brute_force(a1, b1, a2, b2):
    g = Geometry(corpus.diagram("D2"))
    s, t = (0, a1, max(a1, b1)), (0, a2, max(a2, b2))
    assert g.pair_crossings(s, t) == brute_crossings(s, t, 0)


def test_nested_strands_cross_and_staggered_do_not(algebras):
    a = algebras["D2"]
    assert a.crossing_count(P(solids=[(1, 4), (2, 3)])) == 1
    assert a.crossing_count(P(solids=[(1, 3), (2, 4)])) == 0


# -- enumeration against generate-and-filter ------------------------------------


def oracle_basis(d, k, cap):
    """Every subset of candidate strands, kept when the picture rules hold."""
    loc, partner = d.location, d.partner
    strands = []
    for ci, c in enumerate(d.components):
        for s, e in itertools.product(c.points, repeat=2):
            if c.kind == CIRCLE:
                strands += [(s, e, w) for w in range(cap + 1) if not (s == e and w == 0)]
            elif loc[s][1] < loc[e][1]:
                strands.append((s, e, 0))
    out = set()
    for n_dot in range(k + 1):
        for dots in itertools.combinations(d.pairs, n_dot):
            dotted = {p for pair in dots for p in pair}
            for sol in itertools.combinations(strands, k - n_dot):
                lefts = [s for s, _, _ in sol] + sorted(dotted)
                rights = [e for _, e, _ in sol] + sorted(dotted)
                ok = True
                for side in (lefts, rights):
                    if len(set(side)) != len(side):
                        ok = False
                    # a solid end and its partner may not both be occupied
                    solid_ends = side[: len(sol)]
                    if any(partner[p] in side for p in solid_ends):
                        ok = False
                    if not ok:
                        break
                if ok:
                    out.add(P(dotted, sol))
    return out


@pytest.mark.parametrize("name", corpus.DIAGRAMS)
def test_enumeration_matches_oracle(algebras, name):
    a = algebras[name]
    d = a.diagram
    for k in range(d.n_pairs + 1):
        got = a.enumerate_basis(k, 1)
        assert len(got) == len(set(got))
        assert set(got) == oracle_basis(d, k, 1)
        assert all(weight(x) == k and a.is_valid(x) for x in got)


def test_basis_sizes(algebras):
    sizes = {
        name: [len(a.enumerate_basis(k)) for k in range(a.diagram.n_pairs + 1)]
        for name, a in algebras.items()
    }
    assert sizes["D1"] == [1, 2]
    assert sizes["D2"] == [1, 8, 7]
    assert sizes["D4"] == [1, 1]


def test_invalid_pictures_are_rejected(algebras):
    a = algebras["D2"]
    assert not a.is_valid(P(dotted=[1]))
    assert not a.is_valid(P(solids=[(3, 1)]))
    assert not a.is_valid(P(solids=[(1, 2), (3, 4)]))  # both ends of pair {1,3} start a strand
    with pytest.raises(DomainError):
        a.multiply(P(solids=[(3, 1)]), P(dotted=[1, 3]))


# -- products -------------------------------------------------------------------


def test_d1_products(algebras):
    a = algebras["D1"]
    e, x = P(dotted=[1, 2]), P(solids=[(1, 2)])
    assert a.multiply(e, x) == {x}
    assert a.multiply(x, e) == {x}
    assert a.multiply(x, x) == frozenset()
    assert a.multiply(e, e) == {e}


def test_d2_concatenation(algebras):
    a = algebras["D2"]
    assert a.multiply(P(solids=[(1, 2)]), P(solids=[(2, 3)])) == {P(solids=[(1, 3)])}
    assert a.multiply(P(solids=[(1, 4)]), P(solids=[(2, 3)])) == frozenset()


def test_double_crossing_vanishes(algebras):
    # 1->3 over a horizontal strand at 2, then 2->4 over a horizontal strand at 3:
    # the composite 1->3, 2->4 has no crossing, so two crossings were lost.
    a = algebras["D2"]
    x = P(dotted=[2, 4], solids=[(1, 3)])
    y = P(dotted=[1, 3], solids=[(2, 4)])
    assert a.right_idempotent(x) == a.left_idempotent(y)
    assert a.crossing_count(x) == a.crossing_count(y) == 1
    assert a.multiply(x, y) == frozenset()


@pytest.mark.parametrize("name", corpus.DIAGRAMS)
def test_idempotents_act_as_units(algebras, name):
    a = algebras[name]
    idem = a.idempotents()
    assert len(idem) == 2 ** a.diagram.n_pairs
    for x in a.full_basis(1):
        lam, rho = a.left_idempotent(x), a.right_idempotent(x)
        assert a.multiply(lam, x) == {x} and a.multiply(x, rho) == {x}
        for e in idem:
            if e != lam:
                assert a.multiply(e, x) == frozenset()
            if e != rho:
                assert a.multiply(x, e) == frozenset()


@pytest.mark.parametrize("name", ["D2", "D3", "D5"])
def test_products_preserve_weight_and_idempotents(algebras, name):
    a = algebras[name]
    basis = a.full_basis(1)
    for x, y in itertools.product(basis, repeat=2):
        for z in a.multiply(x, y):
            assert weight(z) == weight(x) == weight(y)
            assert a.left_idempotent(z) == a.left_idempotent(x)
            assert a.right_idempotent(z) == a.right_idempotent(y)


# -- differential ---------------------------------------------------------------


def test_resolving_nested_strands(algebras):
    a = algebras["D2"]
    assert a.differential(P(solids=[(1, 4), (2, 3)])) == {P(solids=[(1, 3), (2, 4)])}
    assert a.differential(P(solids=[(1, 3), (2, 4)])) == frozenset()


@pytest.mark.parametrize("name", corpus.DIAGRAMS)
def test_differential_drops_one_crossing(algebras, name):
    a = algebras[name]
    # with dotted pairs the count sees both halves, so only undotted pictures qualify
    for x in (x for x in a.full_basis(1) if not x.dotted):
        cx = a.crossing_count(x)
        for z in a.differential(x):
            assert a.crossing_count(z) == cx - 1
            assert a.left_idempotent(z) == a.left_idempotent(x)
            assert a.right_idempotent(z) == a.right_idempotent(x)


@pytest.mark.parametrize("name", ["D2", "D3", "D5"])
def test_d_squared_and_leibniz(algebras, name):
    a = algebras[name]
    basis = a.full_basis(1)
    for x in basis:
        assert a.d(a.differential(x)) == frozenset()
    for x, y in itertools.product(basis, repeat=2):
        xy = a.multiply(x, y)
        rhs = a.mul(a.differential(x), [y]) ^ a.mul([x], a.differential(y))
        assert a.d(xy) == rhs


def test_circle_winding_strand(algebras):
    a = algebras["D5"]
    full_turn = P(solids=[(5, 5, 1)])
    assert a.is_valid(full_turn)
    assert a.left_idempotent(full_turn) == a.right_idempotent(full_turn) == P(dotted=[1, 5])
    half = P(solids=[(5, 6)])
    other = P(solids=[(6, 5)])
    assert a.multiply(half, other) == {full_turn}
