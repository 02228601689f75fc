"""The bimodule E over A(Z) for an S+ interval I, and its tensor powers.

A basis element of E^m is a strands picture with m extra "special" strands.
Special strand j enters at the initial end P of I and ends at a point of
I; it behaves like a solid strand except that it has no left endpoint.  In
the internal model special strand j starts at coordinate -j on I, so the
specials start below every point and strand 1 starts highest (it entered
first).  The left A(Z)-action and the NC_m action both attach on the left,
the right A(Z)-action on the right.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable

from .arc_diagram import INTERVAL, ArcDiagram, InvalidIntervalError
from .gf2 import row_space_reduce
from .nilcoxeter import length as perm_length
from .strands_algebra import (
    DEFAULT_WINDING_CAP,
    DomainError,
    PictureCodec,
    Strand,
    StrandsAlgebra,
    StrandsPicture,
    concat_terms,
    weight,
    xor_into,
)

__all__ = [
    "EPicture",
    "SpecialElement",
    "EBimodule",
    "e_basis",
    "special_set",
    "factor",
    "filtration_check",
    "tensor_iso",
    "FiltrationReport",
    "TensorIsoReport",
]


@dataclass(frozen=True)
class EPicture:
    dotted: frozenset[int] = frozenset()
    solids: frozenset[Strand] = frozenset()
    specials: tuple[int, ...] = ()

    @classmethod
    def make(cls, dotted: Iterable[int] = (), solids: Iterable = (), specials: Iterable[int] = ()):
        return cls(frozenset(dotted), frozenset(Strand(*s) for s in solids), tuple(specials))

    def base(self) -> StrandsPicture:
        """The ordinary (non-special) part as an algebra picture."""
        return StrandsPicture(self.dotted, self.solids)

    def sort_key(self):
        return (weight(self), self.specials, tuple(sorted(self.dotted)), tuple(sorted(self.solids)))

    def __repr__(self) -> str:
        parts = ["P->" + ",".join(map(str, self.specials))]
        if self.dotted:
            parts.append("dotted={" + ",".join(map(str, sorted(self.dotted))) + "}")
        for s in sorted(self.solids):
            w = f"+{s.winding}" if s.winding else ""
            parts.append(f"{s.start}->{s.end}{w}")
        return "EPic(" + " ".join(parts) + ")"


def _e_factory(dotted, solids, specials):
    return EPicture(frozenset(dotted), frozenset(solids), specials)


@dataclass(frozen=True)
class SpecialElement:
    """An element of S: the special strand is the only moving strand."""

    picture: EPicture
    degree: int

    @property
    def end(self) -> int:
        return self.picture.specials[0]


class EBimodule:
    """E^m for interval component ``interval`` of ``diagram`` (E itself when m = 1)."""

    def __init__(self, diagram: ArcDiagram, interval: int, m: int = 1, algebra: StrandsAlgebra | None = None):
        if not 0 <= interval < len(diagram.components) or diagram.components[interval].kind != INTERVAL:
            raise InvalidIntervalError(f"component {interval} is not an interval")
        if m < 0:
            raise ValueError("m must be non-negative")
        self.diagram = diagram
        self.interval = interval
        self.m = m
        self.algebra = algebra if algebra is not None else StrandsAlgebra(diagram)
        self.geom = self.algebra.geom
        self.codec = PictureCodec(self.geom, interval)
        self._d_cache: dict = {}
        self._checked: set = set()

    # -- basis ------------------------------------------------------------

    def special_ends(self) -> list[tuple[int, ...]]:
        """Ordered tuples of m distinct points of I using m distinct pairs."""
        pts = self.diagram.components[self.interval].points
        pidx = self.diagram.pair_index
        out = []
        for ends in itertools.permutations(pts, self.m):
            if len({pidx[q] for q in ends}) == self.m:
                out.append(ends)
        return out

    def basis(self, k: int | None = None, winding_cap: int = DEFAULT_WINDING_CAP) -> list[EPicture]:
        """Basis pictures of weight k (all weights when k is None)."""
        weights = range(self.m, self.m + self.diagram.n_pairs + 1) if k is None else [k]
        pidx = self.diagram.pair_index
        out = []
        for ends in self.special_ends():
            blocked = frozenset(pidx[q] for q in ends)
            for w in weights:
                if w < self.m:
                    continue
                for dot, sol in self.algebra.raw_pictures(w - self.m, winding_cap, blocked):
                    out.append(EPicture(dot, sol, ends))
        out.sort(key=EPicture.sort_key)
        return out

    def is_valid(self, x: EPicture) -> bool:
        if len(x.specials) != self.m:
            return False
        pts = set(self.diagram.components[self.interval].points)
        if not all(q in pts for q in x.specials):
            return False
        return self.algebra.is_valid(x)

    def left_idempotent(self, x: EPicture) -> StrandsPicture:
        return self.algebra.left_idempotent(x)

    def right_idempotent(self, x: EPicture) -> StrandsPicture:
        return self.algebra.right_idempotent(x)

    # -- structure maps ---------------------------------------------------

    def _check_m(self, x: EPicture) -> None:
        if x in self._checked:
            return
        if len(x.specials) != self.m:
            raise DomainError(f"{x} has {len(x.specials)} special strands, expected {self.m}")
        if not self.is_valid(x):
            raise DomainError(f"{x} is not a basis element of E^{self.m}")
        self._checked.add(x)

    def left_act(self, a: StrandsPicture, x: EPicture) -> frozenset:
        self._check_m(x)
        self.algebra.check(a)
        terms = concat_terms(self.geom, self.codec.expand(a), self.codec.expand(x))
        return frozenset(self.codec.fold(terms, _e_factory))

    def right_act(self, x: EPicture, a: StrandsPicture) -> frozenset:
        self._check_m(x)
        self.algebra.check(a)
        terms = concat_terms(self.geom, self.codec.expand(x), self.codec.expand(a))
        return frozenset(self.codec.fold(terms, _e_factory))

    def differential(self, x: EPicture) -> frozenset:
        cached = self._d_cache.get(x)
        if cached is not None:
            return cached
        self._check_m(x)
        terms: set = set()
        for big in self.codec.expand(x):
            xor_into(terms, self.geom.resolve(big))
        result = frozenset(self.codec.fold(terms, _e_factory))
        self._d_cache[x] = result
        return result

    def nc_act(self, w: tuple[int, ...], x: EPicture) -> frozenset:
        """NC_m picture w stacked on the left of x.

        Special strand i of the result follows strand i of w to lane w(i) and
        then strand w(i) of x.  Zero if a double crossing forms.
        """
        self._check_m(x)
        if len(w) != self.m:
            raise DomainError(f"NC_{len(w)} cannot act on E^{self.m}")
        lw = perm_length(w)
        inv = {w[i]: i + 1 for i in range(self.m)}
        terms: set = set()
        for big in self.codec.expand(x):
            out = []
            for c, a, b in big:
                if a < 0:
                    out.append((c, -inv[-a], b))
                else:
                    out.append((c, a, b))
            comp = tuple(sorted(out))
            if self.geom.crossings(comp) == self.geom.crossings(big) + lw:
                xor_into(terms, (comp,))
        return frozenset(self.codec.fold(terms, _e_factory))

    # linear extensions
    def d(self, xs: Iterable[EPicture]) -> frozenset:
        acc: set = set()
        for x in xs:
            xor_into(acc, self.differential(x))
        return frozenset(acc)

    def lmul(self, a: Iterable[StrandsPicture], xs: Iterable[EPicture]) -> frozenset:
        acc: set = set()
        xs = list(xs)
        for p in a:
            for x in xs:
                xor_into(acc, self.left_act(p, x))
        return frozenset(acc)

    def rmul(self, xs: Iterable[EPicture], a: Iterable[StrandsPicture]) -> frozenset:
        acc: set = set()
        a = list(a)
        for x in xs:
            for p in a:
                xor_into(acc, self.right_act(x, p))
        return frozenset(acc)

    # -- the special set and the factorization (m = 1) ------------------------

    def _require_single(self) -> None:
        if self.m != 1:
            raise ValueError("the special set and factorization are defined for E (m = 1)")

    def degree(self, q: int) -> int:
        """Points of I passed by a special strand ending at q."""
        return self.diagram.location[q][1]

    def special_set(self) -> list[SpecialElement]:
        """S sorted by increasing degree."""
        self._require_single()
        d = self.diagram
        out = []
        for (q,) in self.special_ends():
            others = [i for i in range(d.n_pairs) if i != d.pair_index[q]]
            for r in range(len(others) + 1):
                for sub in itertools.combinations(others, r):
                    dotted = frozenset(p for i in sub for p in d.pairs[i])
                    out.append(SpecialElement(EPicture(dotted, frozenset(), (q,)), self.degree(q)))
        out.sort(key=lambda y: (y.degree, y.picture.sort_key()))
        return out

    def factor(self, x: EPicture) -> tuple[StrandsPicture, SpecialElement]:
        """The unique (a, y) with a in A(Z), y in S and a*y = x."""
        self._require_single()
        self._check_m(x)
        a = x.base()
        ends = set(a.dotted) | {s.end for s in a.solids}
        dotted = self.algebra._closure(ends)
        (q,) = x.specials
        y = SpecialElement(EPicture(dotted, frozenset(), (q,)), self.degree(q))
        return a, y

    def filtration_check(self, winding_cap: int = DEFAULT_WINDING_CAP) -> FiltrationReport:
        """Every term of d(y), y in S, factors as a*y' with deg y' < deg y."""
        report = FiltrationReport()
        for y in self.special_set():
            for term in sorted(self.differential(y.picture), key=EPicture.sort_key):
                _, y2 = self.factor(term)
                report.terms += 1
                if y2.degree < y.degree:
                    report.decreasing += 1
                else:
                    report.violations.append((y.picture, term))
        return report

    def factor_bijection_check(self, winding_cap: int = DEFAULT_WINDING_CAP) -> list[str]:
        """Round trip x -> (a, y) -> a*y, plus the counting identity for the bijection."""
        problems = []
        seen = set()
        basis = self.basis(winding_cap=winding_cap)
        for x in basis:
            a, y = self.factor(x)
            if not self.algebra.is_valid(a):
                problems.append(f"{x}: factor {a} is not a picture")
                continue
            if self.algebra.right_idempotent(a) != self.left_idempotent(y.picture):
                problems.append(f"{x}: rho(a) != lambda(y)")
            if self.left_act(a, y.picture) != {x}:
                problems.append(f"{x}: a*y = {sorted(self.left_act(a, y.picture), key=EPicture.sort_key)}")
            seen.add((a, y.picture))
        if len(seen) != len(basis):
            problems.append("factorization is not injective")
        # surjectivity: count pairs (a, y) with rho(a) = lambda(y)
        by_right: dict = {}
        for a in self.algebra.full_basis(winding_cap):
            e = self.algebra.right_idempotent(a)
            by_right[e] = by_right.get(e, 0) + 1
        expected = sum(by_right.get(self.left_idempotent(y.picture), 0) for y in self.special_set())
        if expected != len(basis):
            problems.append(f"|basis E| = {len(basis)} but pairs (a, y) number {expected}")
        return problems


@dataclass
class FiltrationReport:
    terms: int = 0
    decreasing: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def e_basis(diagram: ArcDiagram, interval: int, m: int = 1, winding_cap: int = DEFAULT_WINDING_CAP):
    return EBimodule(diagram, interval, m).basis(winding_cap=winding_cap)


def special_set(diagram: ArcDiagram, interval: int) -> list[SpecialElement]:
    return EBimodule(diagram, interval).special_set()


def factor(diagram: ArcDiagram, interval: int, x: EPicture):
    return EBimodule(diagram, interval).factor(x)


def filtration_check(diagram: ArcDiagram, interval: int) -> FiltrationReport:
    return EBimodule(diagram, interval).filtration_check()


# -- E (x)_A E versus E^2 --------------------------------------------------------


@dataclass
class TensorIsoReport:
    generators: int
    relation_rank: int
    quotient_dim: int
    target_dim: int
    map_rank: int
    kills_relations: bool
    commutes_with_d: bool
    left_linear: bool
    right_linear: bool

    @property
    def ok(self) -> bool:
        return (
            self.kills_relations
            and self.commutes_with_d
            and self.left_linear
            and self.right_linear
            and self.quotient_dim == self.target_dim == self.map_rank
        )


def _rank(vectors: Iterable[int]) -> int:
    return len(row_space_reduce(vectors))


def tensor_iso(diagram: ArcDiagram, interval: int, m: int = 2) -> TensorIsoReport:
    """Check that concatenation induces E^(m-1) (x)_A E = E^m as dg bimodules.

    The tensor product is presented as the span of x (x) y with rho(x) =
    lambda(y), modulo (x a) (x) y + x (x) (a y).  Diagrams must have no
    circle components (the bases are then finite).
    """
    if diagram.circles():
        raise ValueError("tensor_iso needs a diagram without circle components")
    if m < 1:
        raise ValueError("m must be at least 1")
    alg = StrandsAlgebra(diagram)
    target = EBimodule(diagram, interval, m, alg)
    t_basis = target.basis()
    t_index = {x: i for i, x in enumerate(t_basis)}
    if m == 1:
        n = len(t_basis)
        return TensorIsoReport(n, 0, n, n, n, True, True, True, True)
    left = EBimodule(diagram, interval, m - 1, alg)
    right = EBimodule(diagram, interval, 1, alg)
    lb, rb = left.basis(), right.basis()
    a_basis = alg.full_basis()
    gens = [
        (x, y) for x in lb for y in rb
        if alg.right_idempotent(x) == alg.left_idempotent(y)
    ]
    g_index = {g: i for i, g in enumerate(gens)}
    shift = m - 1

    def gen_vec(xs: Iterable[EPicture], ys: Iterable[EPicture]) -> int:
        v = 0
        for x in xs:
            for y in ys:
                i = g_index.get((x, y))
                if i is not None:
                    v ^= 1 << i
        return v

    def mu(x: EPicture, y: EPicture) -> int:
        ybigs = []
        for big in right.codec.expand(y):
            ybigs.append(tuple(sorted((c, a - shift if a < 0 else a, b) for c, a, b in big)))
        xbigs = target.codec.expand(x)
        terms = concat_terms(alg.geom, xbigs, ybigs)
        v = 0
        for pic in target.codec.fold(terms, _e_factory):
            v ^= 1 << t_index[pic]
        return v

    def mu_vec(v: int) -> int:
        out = 0
        i = 0
        while v:
            if v & 1:
                out ^= mu_cache[i]
            v >>= 1
            i += 1
        return out

    def t_vec(pics: Iterable[EPicture]) -> int:
        v = 0
        for p in pics:
            v ^= 1 << t_index[p]
        return v

    mu_cache = [mu(x, y) for x, y in gens]

    relations = []
    for x in lb:
        rx = alg.right_idempotent(x)
        for a in a_basis:
            if alg.left_idempotent(a) != rx:
                continue
            xa = left.right_act(x, a)
            ra = alg.right_idempotent(a)
            for y in rb:
                if alg.left_idempotent(y) != ra:
                    continue
                v = gen_vec(xa, [y]) ^ gen_vec([x], right.left_act(a, y))
                if v:
                    relations.append(v)

    relation_rank = _rank(relations)
    kills = all(mu_vec(r) == 0 for r in relations)
    commutes = True
    left_linear = True
    right_linear = True
    for i, (x, y) in enumerate(gens):
        dgen = gen_vec(left.differential(x), [y]) ^ gen_vec([x], right.differential(y))
        if mu_vec(dgen) != t_vec(target.d(_single(mu_cache[i], t_basis))):
            commutes = False
    for i, (x, y) in enumerate(gens):
        image = _single(mu_cache[i], t_basis)
        for a in a_basis:
            lv = gen_vec(left.lmul([a], [x]), [y])
            if mu_vec(lv) != t_vec(target.lmul([a], image)):
                left_linear = False
            rv = gen_vec([x], right.rmul([y], [a]))
            if mu_vec(rv) != t_vec(target.rmul(image, [a])):
                right_linear = False
    map_rank = _rank(mu_cache)
    return TensorIsoReport(
        generators=len(gens),
        relation_rank=relation_rank,
        quotient_dim=len(gens) - relation_rank,
        target_dim=len(t_basis),
        map_rank=map_rank,
        kills_relations=kills,
        commutes_with_d=commutes,
        left_linear=left_linear,
        right_linear=right_linear,
    )


def _single(v: int, basis: list) -> list:
    out = []
    i = 0
    while v:
        if v & 1:
            out.append(basis[i])
        v >>= 1
        i += 1
    return out
