"""K0 and the operator Phi_I."""

from __future__ import annotations

import itertools

import numpy as np
import pytest

from strands_decat import corpus
from strands_decat.arc_diagram import INTERVAL, InvalidIntervalError, make_diagram
from strands_decat.decat import (
    graded_block,
    k0_dimension,
    k0_e_matrix,
    phi_matrix,
    u_algebra_check,
    verify_main_theorem,
    wedge_dimension,
)
from strands_decat.e_bimodule import EBimodule
from strands_decat.gf2 import GF2Matrix
from strands_decat.strands_algebra import StrandsAlgebra

PAIRS = [(name, i) for name in corpus.DIAGRAMS for i in corpus.diagram(name).intervals()]


def contraction_oracle(d, interval):
    """Interior product with the boundary covector, on wedge monomials as sorted tuples."""
    n = d.n_pairs
    pairs = sorted(d.matching, key=min)
    cov = [sum(d.location[p][0] == interval for p in pair) % 2 for pair in pairs]
    mono = [s for k in range(n + 1) for s in itertools.combinations(range(n), k)]
    index = {s: sum(1 << i for i in s) for s in mono}
    out = np.zeros((1 << n, 1 << n), dtype=np.uint8)
    for s in mono:
        for j, i in enumerate(s):
            if cov[i]:
                rest = s[:j] + s[j + 1:]
                out[index[rest], index[s]] ^= 1
    return out


def cartan_oracle(d, interval):
    """[E (x) -] from dimensions alone: dim e E e' = sum_f dim(e A f) M[f, e'] over Z."""
    alg = StrandsAlgebra(d)
    e = EBimodule(d, interval, algebra=alg)
    n = 1 << d.n_pairs
    cartan = np.zeros((n, n))
    for x in alg.full_basis():
        cartan[alg.idempotent_mask(alg.left_idempotent(x)), alg.idempotent_mask(alg.right_idempotent(x))] += 1
    dims = np.zeros((n, n))
    for x in e.basis():
        dims[alg.idempotent_mask(alg.left_idempotent(x)), alg.idempotent_mask(alg.right_idempotent(x))] += 1
    m = np.linalg.solve(cartan, dims)
    rounded = np.rint(m)
    assert np.allclose(m, rounded)
    return rounded.astype(int) % 2


@pytest.mark.parametrize("name", corpus.DIAGRAMS)
def test_k0_dimension(name):
    d = corpus.diagram(name)
    assert k0_dimension(d) == wedge_dimension(d) == 2 ** d.n_pairs


@pytest.mark.parametrize("key", PAIRS)
def test_phi_matches_contraction(key):
    d = corpus.diagram(key[0])
    assert np.array_equal(phi_matrix(d, key[1]).to_array(), contraction_oracle(d, key[1]))


EXTRA = {
    "two_bands": make_diagram([(INTERVAL, [1, 2]), (INTERVAL, [3, 4])], [(1, 3), (2, 4)]),
    "crossed_bands": make_diagram([(INTERVAL, [1, 2]), (INTERVAL, [3, 4])], [(1, 4), (2, 3)]),
    "three_intervals": make_diagram(
        [(INTERVAL, [1, 2]), (INTERVAL, [3]), (INTERVAL, [4])], [(1, 3), (2, 4)]
    ),
}


# the ungraded Cartan matrix is singular for D2, D3 and crossed bands; D5's basis is infinite
@pytest.mark.parametrize(
    "d,interval",
    [(corpus.diagram(n), i) for n in ("D1", "D4") for i in corpus.diagram(n).intervals()]
    + [(EXTRA[k], i) for k in ("two_bands", "three_intervals") for i in EXTRA[k].intervals()],
)
def test_k0_matrix_matches_cartan_oracle(d, interval):
    assert np.array_equal(k0_e_matrix(d, interval).to_array(), cartan_oracle(d, interval))


@pytest.mark.parametrize("d", EXTRA.values(), ids=EXTRA.keys())
def test_main_theorem_off_corpus(d):
    assert all(verify_main_theorem(d, i).ok for i in d.intervals())


@pytest.mark.parametrize("key", PAIRS)
def test_main_theorem(key):
    d = corpus.diagram(key[0])
    rep = verify_main_theorem(d, key[1])
    assert rep.ok
    assert set(rep.blocks_equal) == set(range(1, d.n_pairs + 1))


def test_single_band_between_intervals():
    d = corpus.diagram("D4")
    for i in (0, 1):
        assert k0_e_matrix(d, i).to_strings() == ["01", "00"]


def test_one_interval_with_all_pairs_acts_by_zero():
    # every pair has both ends on the interval, so no class has odd boundary there
    for name in ("D1", "D2", "D3"):
        d = corpus.diagram(name)
        assert k0_e_matrix(d, 0).is_zero() and phi_matrix(d, 0).is_zero()


def test_nonzero_on_mixed_diagram():
    d = corpus.diagram("D5")
    m = k0_e_matrix(d, 0)
    assert not m.is_zero()
    assert (m @ m).is_zero()


@pytest.mark.parametrize("key", PAIRS)
def test_squares_vanish(key):
    d = corpus.diagram(key[0])
    for m in (k0_e_matrix(d, key[1]), phi_matrix(d, key[1])):
        assert (m @ m).is_zero()


def test_distinct_intervals_commute():
    d = corpus.diagram("D4")
    a, b = phi_matrix(d, 0), phi_matrix(d, 1)
    assert a @ b == b @ a


def test_graded_block_shape():
    m = GF2Matrix.identity(8)
    assert graded_block(m, 3, 2).shape == (3, 3)
    assert graded_block(m, 3, 0).shape == (0, 1)


def test_u_algebra():
    assert u_algebra_check().ok


def test_circle_is_not_an_interval():
    with pytest.raises(InvalidIntervalError):
        k0_e_matrix(corpus.diagram("D5"), 1)
