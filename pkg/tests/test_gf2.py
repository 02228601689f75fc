"""Packed GF(2) linear algebra against a plain numpy elimination."""

from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strands_decat.gf2 import (
    GF2Matrix,
    GF2Vector,
    ShapeError,
    cokernel_basis,
    mat_mul,
    nullspace,
    rank,
)


def naive_rank(a: np.ndarray) -> int:
    a = a.copy() % 2
    r = 0
    for c in range(a.shape[1]):
        hits = [i for i in range(r, a.shape[0]) if a[i, c]]
        if not hits:
            continue
        a[[r, hits[0]]] = a[[hits[0], r]]
        for i in range(a.shape[0]):
            if i != r and a[i, c]:
                a[i] ^= a[r]
        r += 1
    return r


def arrays(max_side=7):
    return st.tuples(st.integers(0, max_side), st.integers(0, max_side)).flatmap(
        lambda s: st.lists(
            st.lists(st.integers(0, 1), min_size=s[1], max_size=s[1]), min_size=s[0], max_size=s[0]
        ).map(lambda rows, s=s: np.array(rows, dtype=np.uint8).reshape(s))
    )


@given(arrays())
def test_rank_matches_naive(a):
    m = GF2Matrix.from_array(a)
    assert rank(m) == naive_rank(a) == m.rank()


@given(arrays(), st.integers(0, 6), st.randoms(use_true_random=False))
def test_product_matches_numpy(a, k, rnd):
    b = np.array([[rnd.randint(0, 1) for _ in range(k)] for _ in range(a.shape[1])], dtype=np.uint8)
    b = b.reshape(a.shape[1], k)
    got = mat_mul(GF2Matrix.from_array(a), GF2Matrix.from_array(b)).to_array()
    assert np.array_equal(got, (a.astype(int) @ b.astype(int)) % 2)


@given(arrays())
def test_nullspace_is_kernel_of_full_size(a):
    m = GF2Matrix.from_array(a)
    basis = nullspace(m)
    assert len(basis) == a.shape[1] - naive_rank(a)
    for v in basis:
        assert m.apply_bits(v) == 0
    cols = np.array([[(v >> j) & 1 for j in range(a.shape[1])] for v in basis], dtype=np.uint8)
    if basis:
        assert naive_rank(cols) == len(basis)


@given(arrays())
def test_cokernel_projection_kills_image(a):
    m = GF2Matrix.from_array(a)
    proj, dim = cokernel_basis(m)
    assert dim == a.shape[0] - naive_rank(a)
    assert proj.shape == (dim, a.shape[0])
    assert (proj @ m).is_zero()
    if dim:
        assert proj.rank() == dim


@settings(max_examples=50)
@given(arrays(6))
def test_inverse(a):
    n = min(a.shape)
    sq = a[:n, :n]
    m = GF2Matrix.from_array(sq)
    if naive_rank(sq) == n:
        assert m.is_invertible()
        assert m @ m.inverse() == GF2Matrix.identity(n)
    else:
        assert not m.is_invertible()
        with pytest.raises(ZeroDivisionError):
            m.inverse()


def test_kron_matches_numpy():
    a = np.array([[1, 1], [0, 1]], dtype=np.uint8)
    b = np.array([[0, 1, 1], [1, 0, 0]], dtype=np.uint8)
    got = GF2Matrix.from_array(a).kron(GF2Matrix.from_array(b)).to_array()
    assert np.array_equal(got, np.kron(a, b) % 2)


def test_columns_and_strings_roundtrip():
    m = GF2Matrix.from_columns([0b01, 0b11, 0b00], 2)
    assert m.to_strings() == ["110", "010"]
    assert GF2Matrix.from_strings(m.to_strings()) == m
    assert m.columns() == [0b01, 0b11, 0b00]


def test_vector_basics():
    v = GF2Vector.from_list([1, 0, 1])
    assert v.support() == [0, 2]
    assert (v + v).is_zero()
    assert v.dot(GF2Vector.unit(2, 3)) == 1


def test_shape_errors():
    with pytest.raises(ShapeError):
        GF2Matrix(2, 2, (0,))
    with pytest.raises(ShapeError):
        GF2Matrix(1, 2, (0b100,))
    with pytest.raises(ShapeError):
        GF2Matrix.zeros(2, 3) @ GF2Matrix.zeros(2, 3)
