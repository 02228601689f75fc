"""Decategorified gluing of sutured surfaces.

A standard basis of H_1(F, S+; F2) consists of two circles per handle, a
circle around all but one boundary circle meeting S-, and the edges of a
tree with one vertex on each S+ component.  Subsets of the basis give a
basis of the exterior algebra, on which the interval I acts by removing a
factor that is an edge with exactly one end on I.  Closed circles are never
removed.

Module actions are matrices acting on column vectors, rows and columns
indexed by bitmasks over the ordered basis elements.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from .gf2 import GF2Matrix, cokernel_basis, nullspace, row_space_reduce
from .surfaces import (
    ALTERNATING,
    FULLY_MINUS,
    SurfaceComponent,
    SutureCircle,
    SuturedSurfaceType,
)

__all__ = [
    "ComponentBasis",
    "StandardBasis",
    "BasisMismatchError",
    "EModule",
    "GluingSpec",
    "default_basis",
    "check_basis",
    "wedge_module",
    "glue_self",
    "tensor_reduce",
    "tensor_reduce_presentation",
    "tensor_product",
    "glue_modules",
    "adapted_bases",
    "constructive_iso",
    "rank_profile",
    "find_intertwiner",
    "verify_gluing",
    "gluing_case",
    "pants_surface",
    "pants_module",
    "pants_table_check",
    "coassociativity_check",
    "hopf_tensor_check",
]

TORUS = "torus"
BOUNDARY = "boundary"
EDGE = "edge"

CASE_DISTINCT = "distinct_components"
CASE_SAME_CIRCLE = "same_circle"
CASE_SAME_CIRCLE_ONLY = "same_circle_only"
CASE_DIFFERENT_CIRCLES = "different_circles"
CASE_DIFFERENT_CIRCLES_ONLY = "different_circles_only"
ALL_CASES = (
    CASE_DISTINCT,
    CASE_SAME_CIRCLE,
    CASE_SAME_CIRCLE_ONLY,
    CASE_DIFFERENT_CIRCLES,
    CASE_DIFFERENT_CIRCLES_ONLY,
)


class BasisMismatchError(ValueError):
    """A standard basis that does not fit its surface."""


# -- standard bases -------------------------------------------------------------


@dataclass(frozen=True)
class ComponentBasis:
    torus: tuple[str, ...] = ()
    boundary: tuple[str, ...] = ()  # idents of circled boundary circles
    edges: tuple[tuple[str, str], ...] = ()
    designated: str | None = None  # the S- meeting circle left uncircled


@dataclass(frozen=True)
class StandardBasis:
    components: tuple[ComponentBasis, ...]

    @property
    def elements(self) -> tuple[tuple[str, str, tuple[str, ...]], ...]:
        """(kind, name, edge ends) in basis order."""
        out = []
        for comp in self.components:
            out += [(TORUS, t, ()) for t in comp.torus]
            out += [(BOUNDARY, "c:" + b, ()) for b in comp.boundary]
            out += [(EDGE, f"{u}-{v}", (u, v)) for u, v in comp.edges]
        return tuple(out)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(e[1] for e in self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def torus_circles(self) -> list[str]:
        return [t for c in self.components for t in c.torus]

    @property
    def boundary_circles(self) -> list[str]:
        return [b for c in self.components for b in c.boundary]

    @property
    def tree_edges(self) -> list[tuple[str, str]]:
        return [e for c in self.components for e in c.edges]


def _meets_minus(comp: SurfaceComponent) -> list[str]:
    return [c.ident for c in comp.boundary if c.meets_minus]


def _star(vertices: Sequence[str], center: str) -> tuple[tuple[str, str], ...]:
    return tuple((center, v) for v in vertices if v != center)


def default_basis(s: SuturedSurfaceType) -> StandardBasis:
    """Designate the first S- meeting circle; the tree is a star on the last S+ vertex."""
    comps = []
    for ci, comp in enumerate(s.components):
        minus = _meets_minus(comp)
        designated = minus[0] if minus else None
        verts = comp.plus_vertices()
        edges = _star(verts, verts[-1]) if verts else ()
        comps.append(
            ComponentBasis(
                torus=tuple(f"t{ci}.{k}" for k in range(2 * comp.genus)),
                boundary=tuple(m for m in minus if m != designated),
                edges=edges,
                designated=designated,
            )
        )
    return StandardBasis(tuple(comps))


def check_basis(s: SuturedSurfaceType, basis: StandardBasis) -> None:
    """Raise BasisMismatchError unless ``basis`` is a standard basis of ``s``."""
    if len(basis.components) != len(s.components):
        raise BasisMismatchError("component counts differ")
    names = basis.names
    if len(set(names)) != len(names):
        raise BasisMismatchError("basis element names are not unique")
    for ci, (comp, cb) in enumerate(zip(s.components, basis.components)):
        if len(cb.torus) != 2 * comp.genus:
            raise BasisMismatchError(f"component {ci}: needs {2 * comp.genus} torus circles")
        minus = _meets_minus(comp)
        if minus:
            if cb.designated not in minus:
                raise BasisMismatchError(f"component {ci}: designated circle must meet S-")
            if sorted(cb.boundary) != sorted(m for m in minus if m != cb.designated):
                raise BasisMismatchError(f"component {ci}: circle every S- meeting circle but one")
        elif cb.boundary or cb.designated is not None:
            raise BasisMismatchError(f"component {ci}: no circle meets S-")
        verts = comp.plus_vertices()
        if len(cb.edges) != max(len(verts) - 1, 0):
            raise BasisMismatchError(f"component {ci}: tree needs {max(len(verts) - 1, 0)} edges")
        parent = {v: v for v in verts}

        def find(v):
            while parent[v] != v:
                v = parent[v]
            return v

        for u, v in cb.edges:
            if u not in parent or v not in parent:
                raise BasisMismatchError(f"component {ci}: edge {u}-{v} leaves the S+ vertices")
            ru, rv = find(u), find(v)
            if ru == rv:
                raise BasisMismatchError(f"component {ci}: edges contain a cycle")
            parent[ru] = rv


# -- modules over tensor powers of F2[E]/(E^2) ---------------------------------------


@dataclass(frozen=True)
class EModule:
    dim: int
    actions: dict[str, GF2Matrix]
    basis_tags: tuple[str, ...] = ()
    # maps recording where the module came from (set by tensor_reduce)
    projection: GF2Matrix | None = field(default=None, compare=False, repr=False)
    section: GF2Matrix | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        for label, a in self.actions.items():
            if a.shape != (self.dim, self.dim):
                raise ValueError(f"action {label} has shape {a.shape}, expected {(self.dim, self.dim)}")
            if not (a @ a).is_zero():
                raise ValueError(f"action {label} does not square to zero")
        labels = sorted(self.actions)
        for i, p in enumerate(labels):
            for q in labels[i + 1:]:
                a, b = self.actions[p], self.actions[q]
                if a @ b != b @ a:
                    raise ValueError(f"actions {p} and {q} do not commute")

    @property
    def labels(self) -> list[str]:
        return sorted(self.actions)

    def action(self, label: str) -> GF2Matrix:
        try:
            return self.actions[label]
        except KeyError:
            raise KeyError(f"module has no action labelled {label!r}") from None

    def same_as(self, other: EModule) -> bool:
        """Equal dimension, labels and action matrices."""
        return self.dim == other.dim and self.actions == other.actions

    def conjugate(self, x: GF2Matrix) -> EModule:
        """Actions transported along an invertible x: a -> x a x^-1."""
        inv = x.inverse()
        return EModule(self.dim, {k: x @ a @ inv for k, a in self.actions.items()})

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "actions": {k: self.actions[k].to_strings() for k in self.labels},
            "basis": list(self.basis_tags),
        }


def wedge_module(s: SuturedSurfaceType, basis: StandardBasis | None = None) -> EModule:
    if basis is None:
        basis = default_basis(s)
    check_basis(s, basis)
    elems = basis.elements
    n = len(elems)
    dim = 1 << n
    actions = {}
    for label in s.intervals():
        removable = [
            i for i, (kind, _, ends) in enumerate(elems)
            if kind == EDGE and sum(1 for v in ends if v == label) == 1
        ]
        cols = [0] * dim
        for mask in range(dim):
            for i in removable:
                if mask >> i & 1:
                    cols[mask] ^= 1 << (mask & ~(1 << i))
        actions[label] = GF2Matrix.from_columns(cols, dim)
    tags = tuple(
        "^".join(elems[i][1] for i in range(n) if mask >> i & 1) or "1" for mask in range(dim)
    )
    return EModule(dim, actions, tags)


def _section(m: GF2Matrix) -> GF2Matrix:
    """Inclusion of the complement chosen by cokernel_basis."""
    pivots = row_space_reduce(m.columns())
    free = [i for i in range(m.nrows) if i not in pivots]
    return GF2Matrix.from_columns([1 << i for i in free], m.nrows) if free else GF2Matrix.zeros(m.nrows, 0)


def tensor_reduce(m: EModule, i1: str, i2: str) -> EModule:
    """M (x) over the I1, I2 actions with F2[E]/(E^2) by multiplication.

    The kernel of multiplication F2[E]/(E^2)^(x2) -> F2[E]/(E^2) is
    generated by E(x)1 + 1(x)E, so the result is the cokernel of
    E_I1 + E_I2 with the remaining actions induced.
    """
    if i1 == i2:
        raise ValueError("glued labels must differ")
    t = m.action(i1) + m.action(i2)
    proj, dim = cokernel_basis(t)
    sec = _section(t)
    actions = {k: proj @ a @ sec for k, a in m.actions.items() if k not in (i1, i2)}
    tags = ()
    if m.basis_tags:
        tags = tuple(
            m.basis_tags[(sec.column_bits(j)).bit_length() - 1] for j in range(dim)
        )
    return EModule(dim, actions, tags, proj, sec)


def tensor_reduce_presentation(m: EModule, i1: str, i2: str) -> tuple[EModule, GF2Matrix]:
    """Oracle: M (x)_F2 A modulo (E_I1 x) (x) a = x (x) E a and likewise for I2.

    Returns the quotient module (actions of the other labels on the M
    factor) and the matrix of x -> [x (x) 1] from M to it.
    """
    n = m.dim
    # coordinates of M (x) A: index 2*i + j, j = 0 for 1 and 1 for E
    ident = GF2Matrix.identity(2)
    e_alg = GF2Matrix.from_rows([[0, 0], [1, 0]])
    relations = GF2Matrix.zeros(2 * n, 0)
    for label in (i1, i2):
        rel = m.action(label).kron(ident) + GF2Matrix.identity(n).kron(e_alg)
        relations = relations.hstack(rel)
    proj, dim = cokernel_basis(relations)
    sec = _section(relations)
    actions = {
        k: proj @ a.kron(ident) @ sec for k, a in m.actions.items() if k not in (i1, i2)
    }
    unit = GF2Matrix.from_columns([1 << (2 * i) for i in range(n)], 2 * n)
    return EModule(dim, actions), proj @ unit


def tensor_product(m1: EModule, m2: EModule) -> EModule:
    """M1 (x)_F2 M2; basis index i * dim(M2) + k."""
    clash = set(m1.actions) & set(m2.actions)
    if clash:
        raise ValueError(f"labels {sorted(clash)} occur in both modules")
    i1, i2 = GF2Matrix.identity(m1.dim), GF2Matrix.identity(m2.dim)
    actions = {k: a.kron(i2) for k, a in m1.actions.items()}
    actions.update({k: i1.kron(a) for k, a in m2.actions.items()})
    tags = ()
    if m1.basis_tags and m2.basis_tags:
        tags = tuple(f"{a}|{b}" for a in m1.basis_tags for b in m2.basis_tags)
    return EModule(m1.dim * m2.dim, actions, tags)


@dataclass(frozen=True)
class GluingSpec:
    pairs: tuple[tuple[str, str], ...]

    def __post_init__(self):
        for side in (0, 1):
            labels = [p[side] for p in self.pairs]
            if len(labels) != len(set(labels)):
                raise ValueError("gluing labels on each side must be distinct")

    @classmethod
    def parse(cls, text: str) -> GluingSpec:
        pairs = []
        for item in filter(None, (t.strip() for t in text.split(","))):
            left, sep, right = item.partition(":")
            if not sep or not left or not right:
                raise ValueError(f"bad pair {item!r}; expected label:label")
            pairs.append((left, right))
        return cls(tuple(pairs))


def glue_modules(m1: EModule, m2: EModule | None, spec: GluingSpec) -> EModule:
    """Tensor over F2 (skipped when m2 is None), then reduce once per pair.

    The returned module's ``projection``/``section`` relate it to the plain
    tensor product.
    """
    m = m1 if m2 is None else tensor_product(m1, m2)
    proj = GF2Matrix.identity(m.dim)
    sec = GF2Matrix.identity(m.dim)
    for a, b in spec.pairs:
        m = tensor_reduce(m, a, b)
        proj = m.projection @ proj
        sec = sec @ m.section
    return EModule(m.dim, m.actions, m.basis_tags, proj, sec)


# -- surfaces ------------------------------------------------------------------------


@dataclass(frozen=True)
class GlueInfo:
    case: str
    component: int  # index of the affected component in the glued surface
    merged: str | None = None  # ident of a merged circle
    after: str | None = None  # circle holding the boundary run from I1 to I2
    before: str | None = None  # the other circle of a split


def _rotate_after(labels: tuple[str, ...], label: str) -> tuple[str, ...]:
    i = labels.index(label)
    return labels[i + 1:] + labels[:i]


def _circle(ident: str, intervals: tuple[str, ...]) -> SutureCircle:
    if intervals:
        return SutureCircle(ident, ALTERNATING, intervals)
    return SutureCircle(ident, FULLY_MINUS)


def gluing_case(s: SuturedSurfaceType, i1: str, i2: str) -> str:
    c1, b1, _ = s.locate(i1)
    c2, b2, _ = s.locate(i2)
    if c1 != c2:
        return CASE_DISTINCT
    others = s.components[c1].sigma_plus > 2
    if b1 == b2:
        return CASE_SAME_CIRCLE if others else CASE_SAME_CIRCLE_ONLY
    return CASE_DIFFERENT_CIRCLES if others else CASE_DIFFERENT_CIRCLES_ONLY


def _glue(s: SuturedSurfaceType, i1: str, i2: str) -> tuple[SuturedSurfaceType, GlueInfo]:
    if i1 == i2:
        raise ValueError("cannot glue an interval to itself")
    c1, b1, _ = s.locate(i1)
    c2, b2, _ = s.locate(i2)
    case = gluing_case(s, i1, i2)
    comps = list(s.components)
    if c1 != c2:
        f1, f2 = comps[c1], comps[c2]
        C1, C2 = f1.boundary[b1], f2.boundary[b2]
        merged = _circle(
            f"{C1.ident}+{C2.ident}",
            _rotate_after(C1.intervals, i1) + _rotate_after(C2.intervals, i2),
        )
        rest1 = tuple(c for k, c in enumerate(f1.boundary) if k != b1)
        rest2 = tuple(c for k, c in enumerate(f2.boundary) if k != b2)
        new = SurfaceComponent(f1.genus + f2.genus, (merged,) + rest1 + rest2)
        lo, hi = min(c1, c2), max(c1, c2)
        comps[lo] = new
        del comps[hi]
        return SuturedSurfaceType(tuple(comps)), GlueInfo(case, lo, merged=merged.ident)
    f = comps[c1]
    bound = list(f.boundary)
    if b1 == b2:
        C = bound[b1]
        run = _rotate_after(C.intervals, i1)
        j = run.index(i2)
        after = _circle(C.ident + "/a", run[:j])
        before = _circle(C.ident + "/b", run[j + 1:])
        bound[b1:b1 + 1] = [after, before]
        comps[c1] = SurfaceComponent(f.genus, tuple(bound))
        info = GlueInfo(case, c1, after=after.ident, before=before.ident)
        return SuturedSurfaceType(tuple(comps)), info
    C1, C2 = bound[b1], bound[b2]
    merged = _circle(
        f"{C1.ident}+{C2.ident}",
        _rotate_after(C1.intervals, i1) + _rotate_after(C2.intervals, i2),
    )
    bound[b1] = merged
    del bound[b2]
    comps[c1] = SurfaceComponent(f.genus + 1, tuple(bound))
    return SuturedSurfaceType(tuple(comps)), GlueInfo(case, c1, merged=merged.ident)


def glue_self(s: SuturedSurfaceType, i1: str, i2: str) -> SuturedSurfaceType:
    """The surface obtained by gluing S+ intervals I1 and I2 of ``s``."""
    return _glue(s, i1, i2)[0]


# -- adapted bases and the constructive isomorphisms ---------------------------------


def _star_avoiding(verts: list[str], avoid: Iterable[str]) -> tuple[str | None, tuple[tuple[str, str], ...]]:
    avoid = set(avoid)
    centers = [v for v in verts if v not in avoid]
    if not centers:
        return None, ()
    q = centers[-1]
    return q, _star(verts, q)


@dataclass(frozen=True)
class AdaptedBases:
    case: str
    before: StandardBasis
    after: StandardBasis
    glued: SuturedSurfaceType
    rule: Callable[[frozenset[str]], frozenset[str] | None]


def adapted_bases(s: SuturedSurfaceType, i1: str, i2: str) -> AdaptedBases:
    """Standard bases of s and of the glued surface adapted to the gluing,
    together with the basis-level rule of the gluing case.

    ``rule`` maps a set of basis names of s to a set of basis names of the
    glued surface, or None for zero.
    """
    glued, info = _glue(s, i1, i2)
    base = default_basis(s)
    c1, b1, _ = s.locate(i1)
    c2, b2, _ = s.locate(i2)
    comps = list(base.components)

    if info.case == CASE_DISTINCT:
        f1, f2 = s.components[c1], s.components[c2]
        q1, edges1 = _star_avoiding(f1.plus_vertices(), [i1])
        q2, edges2 = _star_avoiding(f2.plus_vertices(), [i2])
        cb1 = ComponentBasis(
            comps[c1].torus,
            tuple(m for m in _meets_minus(f1) if m != f1.boundary[b1].ident),
            edges1,
            f1.boundary[b1].ident,
        )
        cb2 = ComponentBasis(
            comps[c2].torus,
            tuple(m for m in _meets_minus(f2) if m != f2.boundary[b2].ident),
            edges2,
            f2.boundary[b2].ident,
        )
        comps[c1], comps[c2] = cb1, cb2
        before = StandardBasis(tuple(comps))
        e1 = f"{q1}-{i1}" if q1 else None
        e2 = f"{q2}-{i2}" if q2 else None
        kept = [e for e in edges1 + edges2 if i1 not in e and i2 not in e]
        joined = f"{q1}-{q2}" if q1 and q2 else None
        if joined:
            kept.append((q1, q2))
        merged = ComponentBasis(
            cb1.torus + cb2.torus,
            cb1.boundary + cb2.boundary,
            tuple(kept),
            info.merged,
        )
        new = list(comps)
        lo, hi = min(c1, c2), max(c1, c2)
        new[lo] = merged
        del new[hi]
        after = StandardBasis(tuple(new))

        def rule(names: frozenset[str]) -> frozenset[str] | None:
            has1 = e1 in names if e1 else None
            has2 = e2 in names if e2 else None
            omega = names - {e1, e2}
            present = [h for h in (has1, has2) if h is not None]
            if not present:
                return omega
            if len(present) == 2:
                if has1 and has2:
                    return omega | {joined}
                if has1 or has2:
                    return omega
                return None
            return omega if present[0] else None

    else:
        f = s.components[c1]
        verts = f.plus_vertices()
        q, edges = _star_avoiding(verts, [i1, i2])
        only = q is None
        if only:
            edges = ((i1, i2),)
        minus = _meets_minus(f)
        designated = f.boundary[b1].ident
        comps[c1] = ComponentBasis(
            comps[c1].torus, tuple(m for m in minus if m != designated), edges, designated
        )
        before = StandardBasis(tuple(comps))
        kept = tuple(e for e in edges if i1 not in e and i2 not in e)
        e1 = f"{q}-{i1}" if not only else f"{i1}-{i2}"
        e2 = f"{q}-{i2}" if not only else None
        if info.case in (CASE_SAME_CIRCLE, CASE_SAME_CIRCLE_ONLY):
            sigma = "c:" + info.after
            new_comp = ComponentBasis(
                comps[c1].torus,
                tuple(m for m in minus if m != designated) + (info.after,),
                kept,
                info.before,
            )
            extra = sigma
        else:
            sigma_ident = f.boundary[b2].ident
            tau = f"tau[{i1}~{i2}]"
            new_comp = ComponentBasis(
                comps[c1].torus + ("c:" + sigma_ident, tau),
                tuple(m for m in minus if m not in (designated, sigma_ident)),
                kept,
                info.merged,
            )
            extra = tau
        new = list(comps)
        new[c1] = new_comp
        after = StandardBasis(tuple(new))

        if only:
            def rule(names: frozenset[str]) -> frozenset[str] | None:
                if e1 in names:
                    return (names - {e1}) | {extra}
                return names
        else:
            def rule(names: frozenset[str]) -> frozenset[str] | None:
                has1, has2 = e1 in names, e2 in names
                omega = names - {e1, e2}
                if has1 and has2:
                    return omega | {extra}
                if has1 or has2:
                    return omega
                return None

    check_basis(s, before)
    check_basis(glued, after)
    return AdaptedBases(info.case, before, after, glued, rule)


@dataclass
class IsoReport:
    case: str
    matrix: GF2Matrix
    invertible: bool
    factors_through_quotient: bool
    intertwines: dict[str, bool]
    dims: tuple[int, int]

    @property
    def ok(self) -> bool:
        return self.invertible and self.factors_through_quotient and all(self.intertwines.values())

    def to_dict(self) -> dict:
        return {
            "case": self.case,
            "dims": list(self.dims),
            "invertible": self.invertible,
            "factors_through_quotient": self.factors_through_quotient,
            "intertwines": dict(sorted(self.intertwines.items())),
            "matrix": self.matrix.to_strings(),
            "status": "pass" if self.ok else "fail",
        }


def constructive_iso(s: SuturedSurfaceType, i1: str, i2: str) -> IsoReport:
    """The basis-level bijection of the gluing case.

    It is returned as a map from the reduced module to the glued one.
    """
    ad = adapted_bases(s, i1, i2)
    m = wedge_module(s, ad.before)
    q = tensor_reduce(m, i1, i2)
    n = wedge_module(ad.glued, ad.after)
    src_names = ad.before.names
    dst_index = {name: k for k, name in enumerate(ad.after.names)}
    cols = []
    for mask in range(m.dim):
        names = frozenset(src_names[i] for i in range(len(src_names)) if mask >> i & 1)
        image = ad.rule(names)
        if image is None:
            cols.append(0)
            continue
        out = 0
        for name in image:
            out |= 1 << dst_index[name]
        cols.append(1 << out)
    full = GF2Matrix.from_columns(cols, n.dim)
    t = m.action(i1) + m.action(i2)
    factors = (full @ t).is_zero()
    psi = full @ q.section
    invertible = psi.nrows == psi.ncols and psi.is_invertible()
    inter = {label: psi @ q.action(label) == n.action(label) @ psi for label in q.labels}
    if set(q.labels) != set(n.labels):
        inter["labels"] = False
    return IsoReport(ad.case, psi, invertible, factors, inter, (q.dim, n.dim))


# -- invariants and intertwiner search -----------------------------------------------


def rank_profile(m: EModule, max_degree: int | None = None) -> dict[str, int]:
    """Ranks of all square-free monomials in the actions, keyed "A*B*..."."""
    labels = m.labels
    top = len(labels) if max_degree is None else min(max_degree, len(labels))
    out = {"1": m.dim}
    for r in range(1, top + 1):
        for combo in itertools.combinations(labels, r):
            prod = GF2Matrix.identity(m.dim)
            for label in combo:
                prod = prod @ m.actions[label]
            out["*".join(combo)] = prod.rank()
    return out


def find_intertwiner(
    a: EModule, b: EModule, max_exhaustive: int = 16, samples: int = 20000, seed: int = 0
) -> GF2Matrix | None:
    """An invertible X with X A_J = B_J X for every label J, or None if not found.

    Solutions form a subspace; it is enumerated when its dimension is at
    most ``max_exhaustive`` and sampled otherwise (then None is not proof
    of non-isomorphism).
    """
    if a.dim != b.dim or set(a.actions) != set(b.actions):
        return None
    n = a.dim
    if n == 0:
        return GF2Matrix.zeros(0, 0)
    # unknown X[r][c] is bit r*n + c
    eqs = []
    for label in a.labels:
        am, bm = a.actions[label].to_lists(), b.actions[label].to_lists()
        for i in range(n):
            for j in range(n):
                v = 0
                for k in range(n):
                    if am[k][j]:
                        v ^= 1 << (i * n + k)
                    if bm[i][k]:
                        v ^= 1 << (k * n + j)
                if v:
                    eqs.append(v)
    system = GF2Matrix(len(eqs), n * n, tuple(eqs)) if eqs else GF2Matrix.zeros(0, n * n)
    sols = nullspace(system)

    def as_matrix(v: int) -> GF2Matrix:
        mask = (1 << n) - 1
        return GF2Matrix(n, n, tuple((v >> (r * n)) & mask for r in range(n)))

    if len(sols) <= max_exhaustive:
        v = 0
        for g in range(1, 1 << len(sols)):
            # Gray code: flip one generator per step
            bit = (g & -g).bit_length() - 1
            v ^= sols[bit]
            x = as_matrix(v)
            if x.is_invertible():
                return x
        return None
    rng = np.random.default_rng(seed)
    for _ in range(samples):
        pick = rng.integers(0, 2, size=len(sols))
        v = 0
        for flag, s in zip(pick, sols):
            if flag:
                v ^= s
        x = as_matrix(v)
        if x.is_invertible():
            return x
    return None


# -- verification --------------------------------------------------------------------


def _disjoint(s1: SuturedSurfaceType, s2: SuturedSurfaceType, spec: GluingSpec):
    """Disjoint union, prefixing labels with "1/" and "2/" if they clash."""
    names1 = {v for c in s1.components for v in c.plus_vertices()} | {
        b.ident for c in s1.components for b in c.boundary
    }
    names2 = {v for c in s2.components for v in c.plus_vertices()} | {
        b.ident for c in s2.components for b in c.boundary
    }
    if names1 & names2:
        s1, s2 = s1.relabel("1/"), s2.relabel("2/")
        spec = GluingSpec(tuple(("1/" + a, "2/" + b) for a, b in spec.pairs))
    return s1, s2, spec


@dataclass
class GluingReport:
    dims: tuple[int, int]
    expected_dim: int
    profiles_equal: bool
    profile: dict[str, int]
    steps: list[IsoReport]
    intertwiner: bool | None  # None: not searched
    glued: SuturedSurfaceType

    @property
    def ok(self) -> bool:
        return (
            self.dims[0] == self.dims[1] == self.expected_dim
            and self.profiles_equal
            and all(st.ok for st in self.steps)
            and self.intertwiner is not False
        )

    def to_dict(self) -> dict:
        return {
            "dims": list(self.dims),
            "expected_dim": self.expected_dim,
            "rank_profile": self.profile,
            "profiles_equal": self.profiles_equal,
            "steps": [st.to_dict() for st in self.steps],
            "intertwiner_found": self.intertwiner,
            "glued_surface": self.glued.canonical(),
            "status": "pass" if self.ok else "fail",
        }


def verify_gluing(
    s1: SuturedSurfaceType,
    s2: SuturedSurfaceType | None,
    spec: GluingSpec,
    search_limit: int = 16,
) -> GluingReport:
    """Compare the glued module with the module of the glued surface.

    ``s2`` None means the pairs are self-gluings of ``s1``.
    """
    if s2 is not None:
        s1, s2, spec = _disjoint(s1, s2, spec)
        union = s1.disjoint_union(s2)
        glued_mod = glue_modules(wedge_module(s1), wedge_module(s2), spec)
    else:
        flat = [x for p in spec.pairs for x in p]
        if len(flat) != len(set(flat)):
            raise ValueError("self-gluing labels must be distinct")
        union = s1
        glued_mod = glue_modules(wedge_module(s1), None, spec)
    for a, b in spec.pairs:
        for label in (a, b):
            if label not in union.intervals():
                raise KeyError(f"{label!r} is not an S+ interval")
    steps = []
    surface = union
    for a, b in spec.pairs:
        steps.append(constructive_iso(surface, a, b))
        surface = glue_self(surface, a, b)
    target = wedge_module(surface)
    p1, p2 = rank_profile(glued_mod), rank_profile(target)
    inter = None
    if glued_mod.dim <= search_limit:
        inter = find_intertwiner(glued_mod, target) is not None
    return GluingReport(
        (glued_mod.dim, target.dim),
        2 ** surface.h1_rank(),
        p1 == p2,
        p1,
        steps,
        inter,
        surface,
    )


# -- the open pair of pants -----------------------------------------------------------


def pants_surface(labels: Sequence[str] = ("I1", "I2", "I3")) -> SuturedSurfaceType:
    """A disk whose boundary alternates between three S+ and three S- arcs."""
    return SuturedSurfaceType(
        (SurfaceComponent(0, (SutureCircle("P", ALTERNATING, tuple(labels)),)),)
    )


def pants_module(labels: Sequence[str] = ("I1", "I2", "I3")) -> EModule:
    """Basis (1, e1, e2, e1^e2) with e1, e2 the arcs from the output to the inputs."""
    return wedge_module(pants_surface(labels))


PANTS_TABLE = {
    # label: images of (1, e1, e2, e1^e2) as sets of basis indices
    "I1": ((), (0,), (), (2,)),
    "I2": ((), (), (0,), (1,)),
    "I3": ((), (0,), (0,), (1, 2)),
}


def pants_table_check() -> dict[str, bool]:
    m = pants_module()
    out = {}
    for label, images in PANTS_TABLE.items():
        cols = [sum(1 << i for i in img) for img in images]
        out[label] = m.action(label) == GF2Matrix.from_columns(cols, 4)
    return out


def coassociativity_check() -> dict[str, bool]:
    """Glue the output of one pair of pants into either input of another."""
    pa = pants_surface(("A1", "A2", "A3"))
    pb = pants_surface(("B1", "B2", "B3"))
    ma, mb = wedge_module(pa), wedge_module(pb)
    out = {}
    for name, target, other in (("left", "B1", "B2"), ("right", "B2", "B1")):
        q = glue_modules(ma, mb, GluingSpec((("A3", target),)))
        total = q.action("A1") + q.action("A2") + q.action(other)
        out[name] = total == q.action("B3")
    return out


@dataclass
class HopfReport:
    invertible: bool
    output_is_coproduct: bool
    inputs_match: dict[str, bool]

    @property
    def ok(self) -> bool:
        return self.invertible and self.output_is_coproduct and all(self.inputs_match.values())


def hopf_tensor_check(
    s1: SuturedSurfaceType, j1: str, s2: SuturedSurfaceType, j2: str
) -> HopfReport:
    """Glue s1 along j1 and s2 along j2 into the pants inputs.

    The map m1 (x) m2 -> [e1^e2 (x) m1 (x) m2] must be an isomorphism onto
    the glued module carrying I3 to E(x)1 + 1(x)E and every other action to
    the corresponding factor action.
    """
    spec = GluingSpec((("I1", j1), ("I2", j2)))
    if {"I1", "I2", "I3"} & set(s1.intervals() + s2.intervals()):
        raise ValueError("pants labels I1, I2, I3 are reserved")
    m1, m2 = wedge_module(s1), wedge_module(s2)
    outer = tensor_product(m1, m2)
    pants = pants_module()
    glued = glue_modules(pants, outer, spec)
    top = 3  # index of e1^e2 in the pants basis
    cols = [1 << (top * outer.dim + k) for k in range(outer.dim)]
    embed = GF2Matrix.from_columns(cols, pants.dim * outer.dim)
    theta = glued.projection @ embed
    invertible = theta.nrows == theta.ncols and theta.is_invertible()
    out_ok = False
    inputs = {}
    if invertible:
        inv = theta.inverse()
        pulled = {k: inv @ a @ theta for k, a in glued.actions.items()}
        expected = outer.action(j1) + outer.action(j2)
        out_ok = pulled["I3"] == expected
        for label in outer.labels:
            if label in (j1, j2):
                continue
            inputs[label] = pulled[label] == outer.action(label)
    return HopfReport(invertible, out_ok, inputs)
