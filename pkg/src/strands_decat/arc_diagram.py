"""Arc diagrams: oriented intervals and circles with matched marked points.

A diagram presents a sutured surface: thicken each component ``Z_i`` to
``Z_i x [0, 1]``, attach an orientable 1-handle at ``Z x {1}`` for each
matched pair, and take ``S+ = Z x {0}``.  :func:`surface_type` recovers the
homeomorphism type by tracing the boundary of that handle complex.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

from .surfaces import (
    ALTERNATING,
    FULLY_MINUS,
    FULLY_PLUS,
    SurfaceComponent,
    SutureCircle,
    SuturedSurfaceType,
)

__all__ = [
    "INTERVAL",
    "CIRCLE",
    "Component",
    "ArcDiagram",
    "HomologyClassBasis",
    "InvalidIntervalError",
    "validate",
    "surface_type",
    "homology_basis",
    "phi_pairing",
    "diagram_from_dict",
    "load_diagram",
]

INTERVAL = "interval"
CIRCLE = "circle"


class InvalidIntervalError(ValueError):
    """A component id does not name an interval of the diagram."""


@dataclass(frozen=True)
class Component:
    kind: str
    points: tuple[int, ...] = ()

    @property
    def is_circle(self) -> bool:
        return self.kind == CIRCLE


@dataclass(frozen=True)
class ArcDiagram:
    components: tuple[Component, ...]
    matching: tuple[tuple[int, int], ...]

    def __post_init__(self):
        # normalise pair order so equal diagrams compare equal
        pairs = tuple(sorted(tuple(sorted(p)) for p in self.matching))
        object.__setattr__(self, "matching", pairs)

    # The caches below assume validate(self) is ok; invalid diagrams should
    # only be passed to validate().

    @cached_property
    def points(self) -> tuple[int, ...]:
        return tuple(p for c in self.components for p in c.points)

    @cached_property
    def location(self) -> dict[int, tuple[int, int]]:
        """point id -> (component index, position along the component)."""
        return {p: (ci, k) for ci, c in enumerate(self.components) for k, p in enumerate(c.points)}

    @cached_property
    def partner(self) -> dict[int, int]:
        out = {}
        for a, b in self.matching:
            out[a] = b
            out[b] = a
        return out

    @cached_property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        """Matched pairs sorted by minimum point id (the homology basis order)."""
        return tuple(sorted(self.matching, key=lambda p: (min(p), max(p))))

    @cached_property
    def pair_index(self) -> dict[int, int]:
        """point id -> index of its pair in :attr:`pairs`."""
        return {p: i for i, pair in enumerate(self.pairs) for p in pair}

    @property
    def n_pairs(self) -> int:
        return len(self.matching)

    def intervals(self) -> list[int]:
        return [i for i, c in enumerate(self.components) if c.kind == INTERVAL]

    def circles(self) -> list[int]:
        return [i for i, c in enumerate(self.components) if c.kind == CIRCLE]

    def to_dict(self) -> dict:
        return {
            "components": [{"kind": c.kind, "points": list(c.points)} for c in self.components],
            "matching": [list(p) for p in self.pairs],
        }

    def relabel(self, mapping: dict[int, int]) -> ArcDiagram:
        return ArcDiagram(
            tuple(Component(c.kind, tuple(mapping[p] for p in c.points)) for c in self.components),
            tuple((mapping[a], mapping[b]) for a, b in self.matching),
        )


@dataclass(frozen=True)
class HomologyClassBasis:
    pairs: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.pairs)


def diagram_from_dict(data: dict) -> ArcDiagram:
    comps = []
    for entry in data["components"]:
        kind = entry["kind"]
        if kind not in (INTERVAL, CIRCLE):
            raise ValueError(f"unknown component kind {kind!r}")
        comps.append(Component(kind, tuple(int(p) for p in entry.get("points", []))))
    matching = []
    for pair in data.get("matching", []):
        if len(pair) != 2:
            raise ValueError(f"matching entry {pair!r} is not a pair")
        matching.append((int(pair[0]), int(pair[1])))
    return ArcDiagram(tuple(comps), tuple(matching))


def load_diagram(path: str | Path) -> ArcDiagram:
    with open(path) as fh:
        return diagram_from_dict(json.load(fh))


def make_diagram(components: Iterable[tuple[str, Sequence[int]]], matching) -> ArcDiagram:
    return ArcDiagram(
        tuple(Component(k, tuple(pts)) for k, pts in components),
        tuple(tuple(p) for p in matching),
    )


def validate(d: ArcDiagram) -> list[str]:
    """All invariant violations of ``d``; an empty list means the diagram is valid."""
    problems = []
    seen: dict[int, int] = {}
    for ci, comp in enumerate(d.components):
        if comp.kind not in (INTERVAL, CIRCLE):
            problems.append(f"component {ci}: unknown kind {comp.kind!r}")
        for p in comp.points:
            if not isinstance(p, int) or p <= 0:
                problems.append(f"component {ci}: point id {p!r} is not a positive integer")
            if p in seen:
                problems.append(f"point {p} appears more than once")
            seen[p] = ci
    matched: dict[int, int] = {}
    for pair in d.matching:
        a, b = pair
        if a == b:
            problems.append(f"pair {pair}: pair is not two distinct points")
            continue
        for p in (a, b):
            matched[p] = matched.get(p, 0) + 1
            if p not in seen:
                problems.append(f"point {p}: unplaced point (in the matching but on no component)")
    for p in seen:
        count = matched.get(p, 0)
        if count == 0:
            problems.append(f"point {p}: unmatched point")
        elif count > 1:
            problems.append(f"point {p}: matched {count} times")
    for p, count in matched.items():
        if count > 1 and p not in seen:
            problems.append(f"point {p}: matched {count} times")
    return problems


def _require_valid(d: ArcDiagram) -> None:
    problems = validate(d)
    if problems:
        raise ValueError("invalid arc diagram: " + "; ".join(problems))


def homology_basis(d: ArcDiagram) -> HomologyClassBasis:
    """One basis element of H_1(F, S+; F2) per matched pair, sorted by minimum point id."""
    _require_valid(d)
    return HomologyClassBasis(d.pairs)


def phi_pairing(d: ArcDiagram, pair: tuple[int, int], interval: int) -> int:
    """Boundary of the class of ``pair`` paired with the interval component."""
    if not 0 <= interval < len(d.components) or d.components[interval].kind != INTERVAL:
        raise InvalidIntervalError(f"component {interval} is not an interval")
    on_interval = sum(1 for p in pair if d.location[p][0] == interval)
    return on_interval % 2


# -- boundary tracing ---------------------------------------------------------
#
# The top edge of each thickened component is cut by the handle feet into
# segments.  Segment j of a component with points p_1..p_r runs between p_j
# and p_{j+1} (p_0, p_{r+1} being the interval ends); the boundary orientation
# traverses the top edge against the orientation of Z, so segment j is walked
# from p_{j+1} down to p_j.  Arriving at a handle foot p we cross the band to
# the partner of p and continue on the segment just below it.  Arriving at
# the lower end of an interval we run down its side, along its bottom edge
# (an S+ interval) and back up to its top-most segment.


def _trace_boundary(d: ArcDiagram):
    """Boundary circles of the handle complex.

    Returns a list of (component indices touched, S+ intervals met in order)
    for every circle other than the bottoms of circle components.
    """
    succ: dict[tuple[int, int], tuple[int, int]] = {}
    passes: dict[tuple[int, int], int] = {}
    for ci, comp in enumerate(d.components):
        r = len(comp.points)
        if comp.kind == INTERVAL:
            for j in range(r + 1):
                if j == 0:
                    succ[(ci, 0)] = (ci, r)
                    passes[(ci, 0)] = ci
                else:
                    foot = comp.points[j - 1]
                    cj, k = d.location[d.partner[foot]]
                    succ[(ci, j)] = (cj, _segment_below(d, cj, k))
        else:
            for j in range(r):
                foot = comp.points[j]
                cj, k = d.location[d.partner[foot]]
                succ[(ci, j)] = (cj, _segment_below(d, cj, k))

    circles = []
    seen = set()
    for start in succ:
        if start in seen:
            continue
        comps, met = set(), []
        node = start
        while node not in seen:
            seen.add(node)
            comps.add(node[0])
            if node in passes:
                met.append(passes[node])
            node = succ[node]
        circles.append((comps, met))
    for ci in d.circles():
        if not d.components[ci].points:
            circles.append(({ci}, []))
    return circles


def _segment_below(d: ArcDiagram, ci: int, k: int) -> int:
    """Top segment immediately below point position k of component ci."""
    comp = d.components[ci]
    if comp.kind == INTERVAL:
        return k
    # circle segment j runs from p_j to p_{j+1}; the one below p_k is k-1
    return (k - 1) % len(comp.points)


def surface_type(d: ArcDiagram, interval_label=None) -> SuturedSurfaceType:
    """Reconstruct the sutured surface presented by ``d``.

    S+ intervals are labelled ``interval_label(component index)``, by
    default ``"Z<index>"``; fully-S+ circles are named ``"Zc<index>"``.
    """
    _require_valid(d)
    if interval_label is None:
        def interval_label(ci):
            return f"Z{ci}"

    parent = list(range(len(d.components)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in d.matching:
        ra, rb = find(d.location[a][0]), find(d.location[b][0])
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    roots = sorted({find(i) for i in range(len(d.components))})
    circles_by_root: dict[int, list[SutureCircle]] = {r: [] for r in roots}
    traced = _trace_boundary(d)
    minus_count = 0
    # deterministic order: by smallest component index touched, then first S+ met
    traced.sort(key=lambda t: (min(t[0]), t[1][:1] or [len(d.components)], sorted(t[0])))
    for comps, met in traced:
        root = find(next(iter(comps)))
        if met:
            circ = SutureCircle(
                "b" + ".".join(str(ci) for ci in met),
                ALTERNATING,
                tuple(interval_label(ci) for ci in met),
            )
        else:
            circ = SutureCircle(f"m{minus_count}", FULLY_MINUS)
            minus_count += 1
        circles_by_root[root].append(circ)
    for ci in d.circles():
        circles_by_root[find(ci)].append(SutureCircle(f"Zc{ci}", FULLY_PLUS))

    comps_out = []
    for root in roots:
        members = [i for i in range(len(d.components)) if find(i) == root]
        n_int = sum(1 for i in members if d.components[i].kind == INTERVAL)
        n_pairs = sum(1 for a, _ in d.matching if find(d.location[a][0]) == root)
        chi = n_int - n_pairs
        b = len(circles_by_root[root])
        twice_genus = 2 - chi - b
        if twice_genus < 0 or twice_genus % 2:
            raise ArithmeticError(f"inconsistent Euler characteristic on component {root}")
        comps_out.append(SurfaceComponent(twice_genus // 2, tuple(circles_by_root[root])))
    return SuturedSurfaceType(tuple(comps_out))
