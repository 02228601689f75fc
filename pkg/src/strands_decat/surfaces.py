"""Combinatorial sutured surfaces.

A surface is recorded up to homeomorphism: per connected component a genus
and a list of boundary circles.  A boundary circle is either entirely S+,
entirely S-, or alternates between S+ and S- arcs; in the last case we keep
the labels of its S+ intervals in boundary-orientation order, which is all
the data later gluings need.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

__all__ = [
    "SutureCircle",
    "SurfaceComponent",
    "SuturedSurfaceType",
    "surface_from_dict",
    "load_surface",
    "make_surface",
]

ALTERNATING = "alternating"
FULLY_PLUS = "fully_plus"
FULLY_MINUS = "fully_minus"


@dataclass(frozen=True)
class SutureCircle:
    """One boundary circle.

    ``ident`` names the circle; for a fully-S+ circle it doubles as the name
    of the S+ component it forms.
    """

    ident: str
    kind: str = ALTERNATING
    intervals: tuple[str, ...] = ()

    def __post_init__(self):
        if self.kind not in (ALTERNATING, FULLY_PLUS, FULLY_MINUS):
            raise ValueError(f"unknown circle kind {self.kind!r}")
        if self.kind == ALTERNATING and not self.intervals:
            raise ValueError("an alternating circle needs at least one S+ interval")
        if self.kind != ALTERNATING and self.intervals:
            raise ValueError("only alternating circles carry S+ intervals")

    @property
    def fully_plus(self) -> bool:
        return self.kind == FULLY_PLUS

    @property
    def fully_minus(self) -> bool:
        return self.kind == FULLY_MINUS

    @property
    def plus_intervals(self) -> int:
        return len(self.intervals)

    @property
    def minus_intervals(self) -> int:
        return len(self.intervals)

    @property
    def meets_minus(self) -> bool:
        return self.kind != FULLY_PLUS

    def pattern(self):
        if self.kind == ALTERNATING:
            return {"plus": self.plus_intervals, "minus": self.minus_intervals}
        return self.kind

    def relabel(self, prefix: str) -> SutureCircle:
        return SutureCircle(prefix + self.ident, self.kind, tuple(prefix + i for i in self.intervals))


@dataclass(frozen=True)
class SurfaceComponent:
    genus: int
    boundary: tuple[SutureCircle, ...] = ()

    @property
    def beta_minus(self) -> int:
        """Boundary circles meeting S-."""
        return sum(1 for c in self.boundary if c.meets_minus)

    @property
    def sigma_plus(self) -> int:
        """Number of S+ components (intervals and fully-S+ circles)."""
        return sum(c.plus_intervals + (1 if c.fully_plus else 0) for c in self.boundary)

    def plus_vertices(self) -> list[str]:
        """Names of the S+ components, intervals first in circle order."""
        out = []
        for c in self.boundary:
            out.extend(c.intervals)
        out.extend(c.ident for c in self.boundary if c.fully_plus)
        return out

    def h1_rank(self) -> int:
        """Rank of H_1(F, S+; F2) for this component."""
        b = len(self.boundary)
        if self.sigma_plus == 0:
            return 2 * self.genus + max(b - 1, 0)
        if self.beta_minus == 0:
            return 2 * self.genus + b - 1
        n_int = sum(c.plus_intervals for c in self.boundary)
        return 2 * self.genus + b - 2 + n_int

    def pattern(self):
        return {"genus": self.genus, "boundary": [c.pattern() for c in self.boundary]}


@dataclass(frozen=True)
class SuturedSurfaceType:
    components: tuple[SurfaceComponent, ...] = field(default_factory=tuple)

    def __post_init__(self):
        names = [v for comp in self.components for v in comp.plus_vertices()]
        if len(names) != len(set(names)):
            raise ValueError("S+ component labels must be unique")
        idents = [c.ident for comp in self.components for c in comp.boundary]
        if len(idents) != len(set(idents)):
            raise ValueError("boundary circle identifiers must be unique")

    def intervals(self) -> list[str]:
        return [i for comp in self.components for c in comp.boundary for i in c.intervals]

    def locate(self, label: str) -> tuple[int, int, int]:
        """(component, circle, position) of an S+ interval."""
        for ci, comp in enumerate(self.components):
            for bi, circ in enumerate(comp.boundary):
                if label in circ.intervals:
                    return ci, bi, circ.intervals.index(label)
        raise KeyError(f"{label!r} is not an S+ interval of this surface")

    def h1_rank(self) -> int:
        return sum(c.h1_rank() for c in self.components)

    def relabel(self, prefix: str) -> SuturedSurfaceType:
        return SuturedSurfaceType(
            tuple(
                SurfaceComponent(c.genus, tuple(b.relabel(prefix) for b in c.boundary))
                for c in self.components
            )
        )

    def disjoint_union(self, other: SuturedSurfaceType) -> SuturedSurfaceType:
        return SuturedSurfaceType(self.components + other.components)

    def pattern(self):
        """Labels stripped; what a homeomorphism type comparison needs."""
        return [c.pattern() for c in self.components]

    def canonical(self):
        """Pattern with components and circles sorted, for order-free comparison."""
        def key(p):
            return json.dumps(p, sort_keys=True)

        comps = []
        for c in self.components:
            circles = sorted((b.pattern() for b in c.boundary), key=key)
            comps.append({"genus": c.genus, "boundary": circles})
        return sorted(comps, key=key)

    def to_dict(self) -> dict:
        return {
            "components": [
                {
                    "genus": c.genus,
                    "boundary": [
                        {"ident": b.ident, "kind": b.kind, "intervals": list(b.intervals)}
                        for b in c.boundary
                    ],
                }
                for c in self.components
            ]
        }


def _circle_from_json(entry, ci: int, bi: int) -> SutureCircle:
    ident = f"c{ci}.{bi}"
    if entry == FULLY_PLUS or entry == FULLY_MINUS:
        return SutureCircle(ident, entry)
    if isinstance(entry, dict):
        if "labels" in entry:
            labels = tuple(str(x) for x in entry["labels"])
            if any(int(entry.get(k, len(labels))) != len(labels) for k in ("plus", "minus")):
                raise ValueError(f"circle {ci}.{bi}: labels disagree with the plus/minus counts")
            if not labels:
                raise ValueError(f"circle {ci}.{bi}: an alternating circle needs an S+ interval")
        else:
            plus, minus = int(entry["plus"]), int(entry["minus"])
            if plus != minus or plus < 1:
                raise ValueError(f"circle {ci}.{bi}: plus and minus counts must agree and be >= 1")
            labels = tuple(f"{ci}.{bi}.{k}" for k in range(plus))
        return SutureCircle(str(entry.get("ident", ident)), ALTERNATING, labels)
    raise ValueError(f"bad boundary entry {entry!r}")


def surface_from_dict(data: dict) -> SuturedSurfaceType:
    """Parse the surface JSON schema.

    Intervals are labelled ``"<component>.<circle>.<interval>"`` unless a
    circle supplies its own ``labels`` list.
    """
    comps = []
    for ci, comp in enumerate(data["components"]):
        genus = int(comp.get("genus", 0))
        if genus < 0:
            raise ValueError("genus must be non-negative")
        circles = tuple(_circle_from_json(e, ci, bi) for bi, e in enumerate(comp.get("boundary", [])))
        comps.append(SurfaceComponent(genus, circles))
    return SuturedSurfaceType(tuple(comps))


def load_surface(path: str | Path) -> SuturedSurfaceType:
    with open(path) as fh:
        return surface_from_dict(json.load(fh))


def make_surface(components: Iterable[tuple[int, Iterable]]) -> SuturedSurfaceType:
    """Shorthand: ``[(genus, [circle_spec, ...]), ...]`` with specs as in the JSON schema."""
    return surface_from_dict(
        {"components": [{"genus": g, "boundary": list(b)} for g, b in components]}
    )
