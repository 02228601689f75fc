"""NilCoxeter dg algebras NC_n over F2.

A basis element is a permutation in one-line notation (a tuple of 1..n),
drawn as n strands from bottom to top with strand i ending at position
w(i).  ``a*b`` stacks ``a`` below ``b``, so as functions it is ``b`` after
``a``; the product vanishes unless lengths add.  The differential resolves
one crossing of a reduced word and keeps the terms that stay reduced.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable

__all__ = [
    "Perm",
    "length",
    "identity",
    "simple",
    "nc_basis",
    "nc_multiply",
    "nc_differential",
    "nc_mul",
    "nc_d",
    "reduced_word",
    "word_to_perm",
    "acyclicity_witness",
    "nc_act",
    "NoWitnessError",
]

Perm = tuple[int, ...]


class NoWitnessError(ValueError):
    """NC_0 and NC_1 have zero differential, so d(h) = 1 has no solution."""


@lru_cache(maxsize=None)
def length(w: Perm) -> int:
    """Inversion count, equal to the number of crossings of a reduced diagram."""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def simple(n: int, i: int) -> Perm:
    """The simple transposition s_i swapping i and i+1 (1-based)."""
    if not 1 <= i < n:
        raise ValueError(f"s_{i} does not exist in NC_{n}")
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def nc_basis(n: int) -> list[Perm]:
    return sorted(itertools.permutations(range(1, n + 1)), key=lambda w: (length(w), w))


def _compose(a: Perm, b: Perm) -> Perm:
    """a stacked below b: i -> b(a(i))."""
    return tuple(b[a[i] - 1] for i in range(len(a)))


def nc_multiply(a: Perm, b: Perm) -> frozenset[Perm]:
    if len(a) != len(b):
        raise ValueError(f"NC_{len(a)} and NC_{len(b)} elements cannot be multiplied")
    c = _compose(a, b)
    if length(c) != length(a) + length(b):
        return frozenset()
    return frozenset({c})


def word_to_perm(n: int, word: Iterable[int]) -> Perm:
    """Product s_{i1} s_{i2} ... (first letter at the bottom); no length check."""
    w = identity(n)
    for i in word:
        w = _compose(w, simple(n, i))
    return w


@lru_cache(maxsize=None)
def reduced_word(w: Perm) -> tuple[int, ...]:
    """Lexicographically smallest reduced word for w."""
    n = len(w)
    if length(w) == 0:
        return ()
    for i in range(1, n):
        # w = s_i * w' with l(w') = l(w) - 1 iff the strands at i, i+1 are inverted
        if w[i - 1] > w[i]:
            rest = _compose(simple(n, i), w)
            return (i,) + reduced_word(rest)
    raise AssertionError("unreachable: a non-identity permutation has a descent")


@lru_cache(maxsize=None)
def nc_differential(w: Perm) -> frozenset[Perm]:
    n = len(w)
    word = reduced_word(w)
    target = len(word) - 1
    out: set[Perm] = set()
    for pos in range(len(word)):
        v = word_to_perm(n, word[:pos] + word[pos + 1:])
        if length(v) == target:
            out ^= {v}
    return frozenset(out)


def nc_mul(a: Iterable[Perm], b: Iterable[Perm]) -> frozenset[Perm]:
    out: set[Perm] = set()
    b = list(b)
    for x in a:
        for y in b:
            out ^= nc_multiply(x, y)
    return frozenset(out)


def nc_d(a: Iterable[Perm]) -> frozenset[Perm]:
    out: set[Perm] = set()
    for x in a:
        out ^= nc_differential(x)
    return frozenset(out)


def acyclicity_witness(n: int) -> Perm:
    """An h with d(h) = 1; multiplication by it contracts every NC_n-module."""
    if n < 2:
        raise NoWitnessError(f"NC_{n} has zero differential")
    h = simple(n, 1)
    assert nc_differential(h) == {identity(n)}
    return h


def nc_act(w: Iterable[Perm] | Perm, x, bimodule) -> frozenset:
    """Act by an NC_m element on an E^m picture (or sum of pictures).

    ``bimodule`` is the :class:`~strands_decat.e_bimodule.EBimodule` that
    owns the pictures.
    """
    terms = [w] if w and isinstance(next(iter(w)), int) else list(w)
    xs = [x] if hasattr(x, "specials") else list(x)
    out: set = set()
    for perm in terms:
        for pic in xs:
            out ^= bimodule.nc_act(perm, pic)
    return frozenset(out)
