"""The strands algebra A(Z) of an arc diagram, over F2.

Basis elements are strands pictures: matched pairs of dotted (horizontal)
strands together with solid strands that move forward along Z.  Products
and differentials are computed in the unsymmetrized strands model, where a
dotted pair {p, p'} stands for the sum of a single horizontal strand at p
and a single horizontal strand at p'.  In that model concatenation and
crossing resolution are plain operations on strand sets, and the
double-crossing rule is the statement that crossing counts of taut
representatives add.  Results are folded back into dotted-pair pictures.

Coordinates: the k-th point of a component sits at coordinate k.  On a
circle with r points a strand is stored by its lift to the universal cover,
``(component, start, end)`` with ``0 <= start < r`` and ``end >= start``;
on an interval the lift is the strand itself.  Special strands of the
bimodule E (see :mod:`strands_decat.e_bimodule`) start at negative
coordinates below every point of their interval.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .arc_diagram import CIRCLE, ArcDiagram, _require_valid

__all__ = [
    "Strand",
    "StrandsPicture",
    "StrandsAlgebra",
    "ClosureError",
    "DomainError",
    "weight",
]

DEFAULT_WINDING_CAP = 2

# internal strand: (component, lifted start, lifted end)
Lift = tuple[int, int, int]
Big = tuple[Lift, ...]


class DomainError(ValueError):
    """Pictures that do not live over the same diagram."""


class ClosureError(ArithmeticError):
    """A computed sum is not a combination of dotted-pair pictures."""


class Strand(NamedTuple):
    start: int
    end: int
    winding: int = 0


@dataclass(frozen=True, order=False)
class StrandsPicture:
    dotted: frozenset[int] = frozenset()
    solids: frozenset[Strand] = frozenset()

    @classmethod
    def make(cls, dotted: Iterable[int] = (), solids: Iterable = ()) -> StrandsPicture:
        return cls(frozenset(dotted), frozenset(Strand(*s) for s in solids))

    @property
    def specials(self) -> tuple[int, ...]:
        return ()

    def sort_key(self):
        return (weight(self), tuple(sorted(self.dotted)), tuple(sorted(self.solids)))

    def __repr__(self) -> str:
        parts = []
        if self.dotted:
            parts.append("dotted=" + "{" + ",".join(map(str, sorted(self.dotted))) + "}")
        for s in sorted(self.solids):
            w = f"+{s.winding}" if s.winding else ""
            parts.append(f"{s.start}->{s.end}{w}")
        return "Pic(" + " ".join(parts) + ")"


def weight(x) -> int:
    """Solid strands (specials included) plus half the dotted strands."""
    return len(x.solids) + len(x.specials) + len(x.dotted) // 2


def xor_into(acc: set, terms: Iterable) -> None:
    for t in terms:
        if t in acc:
            acc.remove(t)
        else:
            acc.add(t)


class Geometry:
    """Coordinates of a diagram's points and the crossing arithmetic on lifts."""

    def __init__(self, diagram: ArcDiagram):
        self.diagram = diagram
        self.period = [len(c.points) if c.kind == CIRCLE else 0 for c in diagram.components]
        self.point_at = {}
        for p, (ci, k) in diagram.location.items():
            self.point_at[(ci, k)] = p

    # -- conversions ------------------------------------------------------

    def lift_strand(self, s: Strand) -> Lift:
        ci, a = self.diagram.location[s.start]
        cj, e = self.diagram.location[s.end]
        if ci != cj:
            raise ValueError(f"strand {s} joins different components")
        per = self.period[ci]
        if per:
            return (ci, a, a + (e - a) % per + s.winding * per)
        return (ci, a, e)

    def end_point(self, lift: Lift) -> int:
        ci, _, b = lift
        per = self.period[ci]
        return self.point_at[(ci, b % per if per else b)]

    def strand_of(self, lift: Lift) -> Strand:
        ci, a, b = lift
        per = self.period[ci]
        return Strand(self.point_at[(ci, a)], self.end_point(lift), (b - a) // per if per else 0)

    # -- crossings --------------------------------------------------------

    def pair_crossings(self, s: Lift, t: Lift) -> int:
        if s[0] != t[0]:
            return 0
        lo, hi = s[1] - t[1], s[2] - t[2]
        per = self.period[s[0]]
        if not per:
            return 1 if lo * hi < 0 else 0
        if lo > hi:
            lo, hi = hi, lo
        if lo == hi:
            return 0
        # integers k with lo < k*per < hi
        return -((-hi) // per) - (lo // per) - 1

    def crossings(self, big: Big) -> int:
        total = 0
        n = len(big)
        for i in range(n):
            si = big[i]
            for j in range(i + 1, n):
                total += self.pair_crossings(si, big[j])
        return total

    def translates(self, s: Lift, t: Lift) -> range:
        """Values k for which s crosses t shifted by k turns."""
        per = self.period[s[0]]
        lo, hi = s[1] - t[1], s[2] - t[2]
        if not per:
            return range(0, 1) if lo * hi < 0 else range(0)
        if lo > hi:
            lo, hi = hi, lo
        return range(lo // per + 1, -((-hi) // per))

    # -- the unsymmetrized model -----------------------------------------

    def end_key(self, lift: Lift) -> tuple[int, int]:
        per = self.period[lift[0]]
        return (lift[0], lift[2] % per if per else lift[2])

    def concat(self, x: Big, y: Big) -> Big | None:
        """Concatenate x then y; None if the endpoints do not match or a
        double crossing forms.  Strands of y starting at negative
        coordinates (special strands) pass through untouched."""
        starts = {}
        passing = []
        for t in y:
            if t[1] < 0:
                passing.append(t)
            else:
                starts[(t[0], t[1])] = t
        if len(starts) != len(x):
            return None
        out = passing
        for s in x:
            t = starts.get(self.end_key(s))
            if t is None:
                return None
            out.append((s[0], s[1], s[2] + t[2] - t[1]))
        composite = tuple(sorted(out))
        if self.crossings(composite) != self.crossings(x) + self.crossings(y):
            return None
        return composite

    def resolve(self, x: Big) -> list[Big]:
        """All single-crossing resolutions that lose exactly one crossing."""
        base = self.crossings(x)
        out = []
        n = len(x)
        for i in range(n):
            s = x[i]
            for j in range(i + 1, n):
                t = x[j]
                if s[0] != t[0]:
                    continue
                per = self.period[s[0]]
                for k in self.translates(s, t):
                    shift = k * per
                    s2 = (s[0], s[1], t[2] + shift)
                    t2 = (t[0], t[1], s[2] - shift)
                    rest = [x[m] for m in range(n) if m != i and m != j]
                    cand = tuple(sorted(rest + [s2, t2]))
                    if self.crossings(cand) == base - 1:
                        out.append(cand)
        return out


def concat_terms(geom: Geometry, xs: list[Big], ys: list[Big]) -> set:
    """Sum over all concatenations of an expansion of x with one of y."""
    terms: set = set()
    if not xs or not ys:
        return terms
    by_left: dict = {}
    for t in ys:
        key = frozenset((s[0], s[1]) for s in t if s[1] >= 0)
        by_left.setdefault(key, []).append(t)
    for sx in xs:
        key = frozenset(geom.end_key(s) for s in sx)
        for ty in by_left.get(key, ()):
            c = geom.concat(sx, ty)
            if c is not None:
                xor_into(terms, (c,))
    return terms


class PictureCodec:
    """Translation between dotted-pair pictures and unsymmetrized terms.

    ``interval`` is the component hosting special strands (E pictures only).
    """

    def __init__(self, geometry: Geometry, interval: int | None = None):
        self.geom = geometry
        self.diagram = geometry.diagram
        self.interval = interval
        self._expand_cache: dict = {}

    def fixed_part(self, x) -> list[Lift]:
        lifts = [self.geom.lift_strand(s) for s in x.solids]
        for j, q in enumerate(x.specials, start=1):
            lifts.append((self.interval, -j, self.diagram.location[q][1]))
        return lifts

    def expand(self, x) -> list[Big]:
        cached = self._expand_cache.get(x)
        if cached is not None:
            return cached
        fixed = self.fixed_part(x)
        loc = self.diagram.location
        pairs = sorted({tuple(sorted((p, self.diagram.partner[p]))) for p in x.dotted})
        out = []
        for choice in itertools.product(*pairs):
            lifts = fixed + [(loc[p][0], loc[p][1], loc[p][1]) for p in choice]
            out.append(tuple(sorted(lifts)))
        self._expand_cache[x] = out
        return out

    def fold_one(self, big: Big, factory):
        dotted = set()
        solids = []
        specials = {}
        for lift in big:
            ci, a, b = lift
            if a < 0:
                specials[-a] = self.geom.end_point(lift)
            elif a == b:
                p = self.geom.point_at[(ci, a)]
                dotted.add(p)
                dotted.add(self.diagram.partner[p])
            else:
                solids.append(self.geom.strand_of(lift))
        return factory(dotted, solids, tuple(specials[j] for j in sorted(specials)))

    def fold(self, terms: set, factory) -> set:
        """Fold a set of unsymmetrized terms (F2 coefficients) into pictures."""
        groups: dict = {}
        for big in terms:
            pic = self.fold_one(big, factory)
            groups.setdefault(pic, 0)
            groups[pic] += 1
        out = set()
        for pic, count in groups.items():
            full = 1 << (len(pic.dotted) // 2)
            if count == full:
                out.add(pic)
            elif count:
                raise ClosureError(f"{pic} appears with {count} of {full} horizontal choices")
        return out


def _algebra_factory(dotted, solids, specials):
    if specials:
        raise ClosureError("special strand appeared in an algebra computation")
    return StrandsPicture(frozenset(dotted), frozenset(solids))


class StrandsAlgebra:
    """A(Z) for a fixed arc diagram.

    Elements are sets of basis pictures (coefficients in F2); ``frozenset()``
    is zero.
    """

    def __init__(self, diagram: ArcDiagram):
        _require_valid(diagram)
        self.diagram = diagram
        self.geom = Geometry(diagram)
        self.codec = PictureCodec(self.geom)
        self._points = frozenset(diagram.points)
        self._mul_cache: dict = {}
        self._d_cache: dict = {}
        self._checked: set = set()

    # -- validity ---------------------------------------------------------

    def picture_problems(self, x) -> list[str]:
        """Violated picture rules; empty when ``x`` is a valid basis element."""
        d = self.diagram
        out = []
        for p in x.dotted:
            if p not in self._points:
                out.append(f"dotted point {p} is not on the diagram")
            elif d.partner[p] not in x.dotted:
                out.append(f"dotted strand at {p} lacks its matched partner")
        lefts = [p for p in x.dotted if p in self._points]
        rights = list(lefts)
        solid_lefts, solid_rights = [], []
        for s in x.solids:
            if s.start not in self._points or s.end not in self._points:
                out.append(f"solid {s} leaves the diagram")
                continue
            (ci, a), (cj, b) = d.location[s.start], d.location[s.end]
            if ci != cj:
                out.append(f"solid {s} joins different components")
                continue
            if s.winding < 0:
                out.append(f"solid {s} has negative winding")
            if d.components[ci].kind == CIRCLE:
                if s.start == s.end and s.winding < 1:
                    out.append(f"solid {s} is horizontal")
            else:
                if s.winding:
                    out.append(f"solid {s} winds on an interval")
                if b <= a:
                    out.append(f"solid {s} does not move forward")
            solid_lefts.append(s.start)
            solid_rights.append(s.end)
        for q in x.specials:
            if q not in self._points:
                out.append(f"special strand ends off the diagram at {q}")
            else:
                solid_rights.append(q)
        for side, solid, dotted in (("left", solid_lefts, lefts), ("right", solid_rights, rights)):
            ends = solid + dotted
            if len(ends) != len(set(ends)):
                out.append(f"a point hosts two {side} endpoints")
            taken = set(ends)
            for p in solid:
                if d.partner[p] in taken:
                    out.append(f"{side} endpoint at {p} and at its partner {d.partner[p]}")
        return out

    def is_valid(self, x) -> bool:
        return not self.picture_problems(x)

    def check(self, x) -> None:
        if x in self._checked:
            return
        problems = self.picture_problems(x)
        if problems:
            raise DomainError(f"{x} is not a picture over this diagram: {problems[0]}")
        self._checked.add(x)

    # -- basis ------------------------------------------------------------

    def solid_candidates(self, winding_cap: int = DEFAULT_WINDING_CAP) -> list[Strand]:
        out = []
        for ci, comp in enumerate(self.diagram.components):
            pts = comp.points
            if comp.kind == CIRCLE:
                for s in pts:
                    for e in pts:
                        for w in range(winding_cap + 1):
                            if s == e and w == 0:
                                continue
                            out.append(Strand(s, e, w))
            else:
                for i, s in enumerate(pts):
                    for e in pts[i + 1:]:
                        out.append(Strand(s, e, 0))
        return sorted(out)

    def enumerate_basis(self, k: int, winding_cap: int = DEFAULT_WINDING_CAP) -> list[StrandsPicture]:
        """All pictures of weight k with windings at most ``winding_cap``."""
        out = [StrandsPicture(dot, sol) for dot, sol in self.raw_pictures(k, winding_cap)]
        out.sort(key=StrandsPicture.sort_key)
        return out

    def raw_pictures(self, k: int, winding_cap: int, right_blocked: frozenset[int] = frozenset()):
        """(dotted, solids) of weight k whose right ends avoid the pairs in ``right_blocked``."""
        pairs = self.diagram.pairs
        pidx = self.diagram.pair_index
        cands = [(s, pidx[s.start], pidx[s.end]) for s in self.solid_candidates(winding_cap)]
        free = [i for i in range(len(pairs)) if i not in right_blocked]
        for n_dot in range(min(k, len(free)) + 1):
            n_sol = k - n_dot
            for dot in itertools.combinations(free, n_dot):
                blocked = set(dot)
                usable = [
                    c for c in cands
                    if c[1] not in blocked and c[2] not in blocked and c[2] not in right_blocked
                ]
                dotted = frozenset(p for i in dot for p in pairs[i])
                for combo in itertools.combinations(usable, n_sol):
                    if len({c[1] for c in combo}) != n_sol or len({c[2] for c in combo}) != n_sol:
                        continue
                    yield dotted, frozenset(c[0] for c in combo)

    def full_basis(self, winding_cap: int = DEFAULT_WINDING_CAP) -> list[StrandsPicture]:
        out = []
        for k in range(self.diagram.n_pairs + 1):
            out += self.enumerate_basis(k, winding_cap)
        return out

    def idempotents(self) -> list[StrandsPicture]:
        """Purely dotted pictures, indexed by bitmask over the sorted pairs."""
        pairs = self.diagram.pairs
        out = []
        for mask in range(1 << len(pairs)):
            dotted = frozenset(p for i, pair in enumerate(pairs) if mask >> i & 1 for p in pair)
            out.append(StrandsPicture(dotted))
        return out

    def idempotent_mask(self, e: StrandsPicture) -> int:
        mask = 0
        for p in e.dotted:
            mask |= 1 << self.diagram.pair_index[p]
        return mask

    def _closure(self, points: Iterable[int]) -> frozenset[int]:
        partner = self.diagram.partner
        out = set()
        for p in points:
            out.add(p)
            out.add(partner[p])
        return frozenset(out)

    def left_idempotent(self, x) -> StrandsPicture:
        return StrandsPicture(self._closure(set(x.dotted) | {s.start for s in x.solids}))

    def right_idempotent(self, x) -> StrandsPicture:
        ends = set(x.dotted) | {s.end for s in x.solids} | set(getattr(x, "specials", ()))
        return StrandsPicture(self._closure(ends))

    # -- structure maps ---------------------------------------------------

    def crossing_count(self, x) -> int:
        """Crossings of the picture as drawn, both strands of each dotted pair included."""
        loc = self.diagram.location
        lifts = self.codec.fixed_part(x) + [(loc[p][0], loc[p][1], loc[p][1]) for p in x.dotted]
        return self.geom.crossings(tuple(sorted(lifts)))

    def multiply(self, x: StrandsPicture, y: StrandsPicture) -> frozenset:
        key = (x, y)
        cached = self._mul_cache.get(key)
        if cached is not None:
            return cached
        self.check(x)
        self.check(y)
        result = frozenset(self.codec.fold(self._big_product(x, y), _algebra_factory))
        self._mul_cache[key] = result
        return result

    def _big_product(self, x, y) -> set:
        return concat_terms(self.geom, self.codec.expand(x), self.codec.expand(y))

    def differential(self, x: StrandsPicture) -> frozenset:
        cached = self._d_cache.get(x)
        if cached is not None:
            return cached
        self.check(x)
        terms: set = set()
        for big in self.codec.expand(x):
            xor_into(terms, self.geom.resolve(big))
        result = frozenset(self.codec.fold(terms, _algebra_factory))
        self._d_cache[x] = result
        return result

    # linear extensions
    def mul(self, a: Iterable, b: Iterable) -> frozenset:
        acc: set = set()
        b = list(b)
        for x in a:
            for y in b:
                xor_into(acc, self.multiply(x, y))
        return frozenset(acc)

    def d(self, a: Iterable) -> frozenset:
        acc: set = set()
        for x in a:
            xor_into(acc, self.differential(x))
        return frozenset(acc)
