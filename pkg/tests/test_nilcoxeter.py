"""NilCoxeter algebras and their action on E^m."""

from __future__ import annotations

import itertools
import math

import pytest

from strands_decat import corpus
from strands_decat.e_bimodule import EBimodule
from strands_decat.nilcoxeter import (
    NoWitnessError,
    acyclicity_witness,
    identity,
    length,
    nc_act,
    nc_basis,
    nc_d,
    nc_differential,
    nc_mul,
    nc_multiply,
    reduced_word,
    simple,
    word_to_perm,
)

NS = range(1, 6)


def covers_below(w):
    """Oracle: w t over transpositions t with length exactly one less."""
    n = len(w)
    out = set()
    for i, j in itertools.combinations(range(n), 2):
        v = list(w)
        v[i], v[j] = v[j], v[i]
        v = tuple(v)
        if length(v) == length(w) - 1:
            out.add(v)
    return frozenset(out)


@pytest.mark.parametrize("n", NS)
def test_dimension_is_factorial(n):
    assert len(nc_basis(n)) == math.factorial(n)
    assert len(set(nc_basis(n))) == math.factorial(n)


@pytest.mark.parametrize("n", range(2, 6))
def test_generators_square_to_zero_and_braid(n):
    s = [simple(n, i) for i in range(1, n)]
    for t in s:
        assert nc_multiply(t, t) == frozenset()
    for i in range(n - 2):
        a, b = s[i], s[i + 1]
        assert nc_mul(nc_mul([a], [b]), [a]) == nc_mul(nc_mul([b], [a]), [b]) != frozenset()
    for i, j in itertools.combinations(range(n - 1), 2):
        if j - i > 1:
            assert nc_multiply(s[i], s[j]) == nc_multiply(s[j], s[i])


def test_crossing_differential_is_identity():
    assert nc_differential(simple(2, 1)) == {identity(2)}
    assert nc_differential(identity(3)) == frozenset()


def test_longest_element_of_nc3():
    assert nc_differential((3, 2, 1)) == {(2, 3, 1), (3, 1, 2)}


@pytest.mark.parametrize("n", NS)
def test_differential_matches_cover_oracle(n):
    for w in nc_basis(n):
        assert nc_differential(w) == covers_below(w)


@pytest.mark.parametrize("n", NS)
def test_d_squared_zero(n):
    for w in nc_basis(n):
        assert nc_d(nc_differential(w)) == frozenset()


@pytest.mark.parametrize("n", range(1, 5))
def test_leibniz_and_associativity(n):
    basis = nc_basis(n)
    for a, b in itertools.product(basis, repeat=2):
        ab = nc_multiply(a, b)
        assert nc_d(ab) == nc_mul(nc_differential(a), [b]) ^ nc_mul([a], nc_differential(b))
    if n <= 3:
        for a, b, c in itertools.product(basis, repeat=3):
            assert nc_mul(nc_mul([a], [b]), [c]) == nc_mul([a], nc_mul([b], [c]))


@pytest.mark.parametrize("n", NS)
def test_reduced_words(n):
    for w in nc_basis(n):
        word = reduced_word(w)
        assert len(word) == length(w)
        assert word_to_perm(n, word) == w


@pytest.mark.parametrize("n", range(2, 6))
def test_acyclicity_witness(n):
    h = acyclicity_witness(n)
    assert nc_differential(h) == {identity(n)}


def test_no_witness_below_two():
    for n in (0, 1):
        with pytest.raises(NoWitnessError):
            acyclicity_witness(n)


def test_length_mismatch():
    with pytest.raises(ValueError):
        nc_multiply((1, 2), (1, 2, 3))


# -- action on E^2 -------------------------------------------------------------


@pytest.fixture(scope="module")
def e2():
    return EBimodule(corpus.diagram("D2"), 0, m=2)


def test_tau_acts_on_e2(e2):
    tau, one = simple(2, 1), identity(2)
    basis = e2.basis()
    assert basis
    moved = 0
    for x in basis:
        assert nc_act(one, x, e2) == {x}
        tx = nc_act(tau, x, e2)
        moved += bool(tx)
        # tau^2 = 0
        assert nc_act([tau], tx, e2) == frozenset()
        # d(tau x) = d(tau) x + tau d(x) = x + tau d(x)
        assert e2.d(tx) == frozenset({x}) ^ nc_act([tau], e2.differential(x), e2)
    assert moved > 0


def test_tau_commutes_with_right_action(e2):
    tau = simple(2, 1)
    alg = e2.algebra
    for x in e2.basis():
        for a in alg.full_basis():
            left = nc_act([tau], e2.right_act(x, a), e2)
            right = e2.rmul(nc_act(tau, x, e2), [a])
            assert left == right
