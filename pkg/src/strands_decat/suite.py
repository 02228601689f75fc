"""Checks over the built-in corpus, one per acceptance criterion.

Every check returns a JSON-ready dict with a ``status`` of "pass" or
"fail".  Reports carry no timings, so repeated runs are byte-identical.
"""

from __future__ import annotations

import contextlib
import itertools
import math
import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable

import numpy as np

from . import corpus
from .arc_diagram import ArcDiagram, homology_basis, surface_type
from .decat import k0_dimension, k0_e_matrix, phi_matrix, verify_main_theorem, wedge_dimension
from .e_bimodule import EBimodule, tensor_iso
from .gf2 import GF2Matrix
from .gluing import (
    EModule,
    hopf_tensor_check,
    coassociativity_check,
    pants_module,
    pants_table_check,
    tensor_reduce,
    tensor_reduce_presentation,
    verify_gluing,
    wedge_module,
)
from .nilcoxeter import (
    acyclicity_witness,
    identity,
    nc_basis,
    nc_d,
    nc_differential,
    nc_mul,
    nc_multiply,
    simple,
)
from .strands_algebra import Geometry, StrandsAlgebra
from .surfaces import make_surface

__all__ = ["CHECKS", "run_suite", "algebra_checks", "thread_count", "inject_fault"]


def thread_count() -> int:
    try:
        n = int(os.environ.get("STRANDS_DECAT_THREADS", "1"))
    except ValueError:
        n = 1
    return max(n, 1)


def _status(ok: bool) -> str:
    return "pass" if ok else "fail"


# -- criterion 1 -------------------------------------------------------------------------


def algebra_checks(
    d: ArcDiagram, winding_cap: int = 2, k: int | None = None, assoc_weight: int | None = None
) -> dict:
    """d^2, Leibniz and associativity on the enumerated basis.

    Products vanish between different weights, so pairs and triples are
    taken within one weight.  ``assoc_weight`` bounds the weights used for
    triples (None: all).
    """
    alg = StrandsAlgebra(d)
    weights = range(d.n_pairs + 1) if k is None else [k]
    sizes = {}
    d2 = leib = assoc = 0
    n_d2 = n_leib = n_assoc = 0
    example = None
    for w in weights:
        basis = alg.enumerate_basis(w, winding_cap)
        sizes[str(w)] = len(basis)
        for x in basis:
            n_d2 += 1
            if alg.d(alg.differential(x)):
                d2 += 1
                example = example or f"d^2 {x}"
        for x in basis:
            dx = alg.differential(x)
            for y in basis:
                prod = alg.multiply(x, y)
                if not prod:
                    continue
                n_leib += 1
                rhs = alg.mul(dx, [y]) ^ alg.mul([x], alg.differential(y))
                if alg.d(prod) != rhs:
                    leib += 1
                    example = example or f"Leibniz {x} {y}"
        if assoc_weight is not None and w > assoc_weight:
            continue
        for x in basis:
            for y in basis:
                xy = alg.multiply(x, y)
                for z in basis:
                    n_assoc += 1
                    if alg.mul(xy, [z]) != alg.mul([x], alg.multiply(y, z)):
                        assoc += 1
                        example = example or f"associativity {x} {y} {z}"
    return {
        "basis_sizes": sizes,
        "d_squared": {"checked": n_d2, "failures": d2},
        "leibniz": {"checked": n_leib, "failures": leib},
        "associativity": {"checked": n_assoc, "failures": assoc},
        "counterexample": example,
        "status": _status(d2 == leib == assoc == 0),
    }


def check_algebra_axioms() -> dict:
    details = {}
    for name in corpus.DIAGRAMS:
        assoc = None if name in ("D1", "D4") else 2
        details[name] = algebra_checks(corpus.diagram(name), 2, None, assoc)
    ok = all(v["status"] == "pass" for v in details.values())
    return {"details": details, "status": _status(ok)}


# -- criterion 2 -------------------------------------------------------------------------


def check_nilcoxeter() -> dict:
    dims = {str(n): len(nc_basis(n)) == math.factorial(n) for n in range(1, 6)}
    tau = simple(2, 1)
    tau_sq = nc_multiply(tau, tau) == frozenset()
    a, b = simple(3, 2), simple(3, 1)  # 1(x)tau and tau(x)1
    braid = nc_mul(nc_mul([a], [b]), [a]) == nc_mul(nc_mul([b], [a]), [b]) != frozenset()
    d_tau = nc_differential(tau) == {identity(2)}
    d2 = {str(n): all(not nc_d(nc_differential(w)) for w in nc_basis(n)) for n in range(1, 6)}
    witness = {str(n): nc_differential(acyclicity_witness(n)) == {identity(n)} for n in range(2, 6)}
    ok = all(dims.values()) and tau_sq and braid and d_tau and all(d2.values()) and all(witness.values())
    return {
        "details": {
            "dimension_is_factorial": dims,
            "tau_squared_zero": tau_sq,
            "braid_relation": braid,
            "d_tau_is_identity": d_tau,
            "d_squared_zero": d2,
            "acyclicity_witness": witness,
        },
        "status": _status(ok),
    }


# -- criteria 3-6 ------------------------------------------------------------------------


def check_k0_dimensions() -> dict:
    details = {}
    ok = True
    for name in corpus.DIAGRAMS:
        d = corpus.diagram(name)
        k0, wedge = k0_dimension(d), wedge_dimension(d)
        h1 = surface_type(d).h1_rank()
        good = k0 == wedge == 2 ** d.n_pairs == 2 ** h1 and len(homology_basis(d)) == h1
        details[name] = {"k0": k0, "wedge": wedge, "surface_h1_rank": h1, "ok": good}
        ok = ok and good
    return {"details": details, "status": _status(ok)}


def check_main_theorem() -> dict:
    details = {}
    ok = True
    for name in corpus.DIAGRAMS:
        d = corpus.diagram(name)
        for interval in d.intervals():
            rep = verify_main_theorem(d, interval)
            details[f"{name}/{interval}"] = rep.to_dict()
            ok = ok and rep.ok
    return {"details": details, "status": _status(ok)}


def check_e_structure() -> dict:
    details = {}
    ok = True
    for name in corpus.DIAGRAMS:
        d = corpus.diagram(name)
        for interval in d.intervals():
            E = EBimodule(d, interval)
            problems = E.factor_bijection_check()
            filt = E.filtration_check()
            entry = {
                "basis_size": len(E.basis()),
                "special_set_size": len(E.special_set()),
                "factorization_problems": problems[:3],
                "filtration_terms": filt.terms,
                "filtration_decreasing": filt.decreasing,
                "filtration_violations": [repr(v) for v in filt.violations[:3]],
            }
            good = not problems and filt.ok
            entry["ok"] = good
            details[f"{name}/{interval}"] = entry
            ok = ok and good
    iso = {}
    for name in ("D1", "D4", "D2", "D3"):
        d = corpus.diagram(name)
        for interval in d.intervals():
            rep = tensor_iso(d, interval, 2)
            iso[f"{name}/{interval}"] = {
                "generators": rep.generators,
                "quotient_dim": rep.quotient_dim,
                "target_dim": rep.target_dim,
                "map_rank": rep.map_rank,
                "ok": rep.ok,
            }
            ok = ok and rep.ok
    return {"details": {"factor_and_filtration": details, "tensor_iso": iso}, "status": _status(ok)}


def check_square_zero() -> dict:
    details = {}
    ok = True
    for name in corpus.DIAGRAMS:
        d = corpus.diagram(name)
        ks = {i: k0_e_matrix(d, i) for i in d.intervals()}
        phis = {i: phi_matrix(d, i) for i in d.intervals()}
        entry = {
            "k0_squared_zero": all((m @ m).is_zero() for m in ks.values()),
            "phi_squared_zero": all((m @ m).is_zero() for m in phis.values()),
        }
        commute = True
        for i, j in itertools.combinations(sorted(ks), 2):
            commute = commute and ks[i] @ ks[j] == ks[j] @ ks[i] and phis[i] @ phis[j] == phis[j] @ phis[i]
        entry["distinct_intervals_commute"] = commute
        details[name] = entry
        ok = ok and all(entry.values())
    for s_name in ("pants", "annulus"):
        m = wedge_module(corpus.surface(s_name))
        details[s_name] = {"module_axioms": True, "labels": m.labels}
    return {"details": details, "status": _status(ok)}


# -- criteria 7-9 ------------------------------------------------------------------------


def check_pants_table() -> dict:
    table = pants_table_check()
    m = pants_module()
    return {
        "details": {
            "matches": table,
            "basis": list(m.basis_tags),
            "actions": {k: m.actions[k].to_strings() for k in m.labels},
        },
        "status": _status(all(table.values())),
    }


def small_modules(seed: int = 0) -> list[tuple[str, EModule]]:
    """Standard-model modules of dim <= 16 with at least two labels, each
    also conjugated by a random change of basis."""
    rng = np.random.default_rng(seed)
    shapes = []
    for genus in (0, 1):
        for ncirc in (1, 2, 3):
            for counts in itertools.product(range(4), repeat=ncirc):
                if counts != tuple(sorted(counts, reverse=True)):
                    continue
                for plus_circle in (False, True):
                    circles = [{"plus": c, "minus": c} if c else "fully_minus" for c in counts]
                    if plus_circle:
                        circles.append("fully_plus")
                    shapes.append([(genus, circles)])
    shapes.append([(0, [{"plus": 1, "minus": 1}]), (0, [{"plus": 2, "minus": 2}])])
    shapes.append([(0, [{"plus": 2, "minus": 2}]), (0, [{"plus": 1, "minus": 1}, "fully_minus"])])
    out = []
    for spec in shapes:
        s = make_surface(spec)
        if len(s.intervals()) < 2 or s.h1_rank() > 4:
            continue
        m = wedge_module(s)
        name = repr(s.canonical())
        out.append((name, m))
        while True:
            x = GF2Matrix.from_array(rng.integers(0, 2, size=(m.dim, m.dim)))
            if x.is_invertible():
                break
        out.append((name + " conjugated", m.conjugate(x)))
    return out


def reduction_matches_oracle(m: EModule, i1: str, i2: str) -> bool:
    q = tensor_reduce(m, i1, i2)
    oracle, unit = tensor_reduce_presentation(m, i1, i2)
    if q.dim != oracle.dim:
        return False
    t = m.action(i1) + m.action(i2)
    if not (unit @ t).is_zero():
        return False
    phi = unit @ q.section
    if not phi.is_invertible():
        return False
    return all(phi @ q.action(k) == oracle.action(k) @ phi for k in q.labels)


def check_gluing() -> dict:
    cases = {}
    seen = set()
    ok = True
    for name, s1, s2, spec in corpus.gluing_cases():
        rep = verify_gluing(s1, s2, spec)
        cases[name] = rep.to_dict()
        seen.update(st.case for st in rep.steps)
        ok = ok and rep.ok
    oracle = {"modules": 0, "pairs": 0, "failures": []}
    for name, m in small_modules():
        oracle["modules"] += 1
        for i1, i2 in itertools.permutations(m.labels, 2):
            oracle["pairs"] += 1
            if not reduction_matches_oracle(m, i1, i2):
                oracle["failures"].append(f"{name}: {i1},{i2}")
    from .gluing import ALL_CASES

    all_cases = sorted(seen) == sorted(ALL_CASES)
    ok = ok and all_cases and not oracle["failures"]
    return {
        "details": {"gluings": cases, "cases_covered": sorted(seen), "presentation_oracle": oracle},
        "status": _status(ok),
    }


def hopf_inputs() -> list[tuple[str, str, str, str]]:
    """(diagram or surface, interval label, other, label) pairs glued into the pants."""
    return [("D2", "Z0", "D4", "Z0"), ("D5", "Z0", "D4", "Z1"), ("annulus", "0.0.0", "D3", "Z0")]


def _labelled(name: str, prefix: str):
    if name in corpus.DIAGRAMS:
        return surface_type(corpus.diagram(name)).relabel(prefix)
    return corpus.surface(name).relabel(prefix)


def check_hopf() -> dict:
    details = {}
    ok = True
    for a, ja, b, jb in hopf_inputs():
        s1, s2 = _labelled(a, "x"), _labelled(b, "y")
        rep = hopf_tensor_check(s1, "x" + ja, s2, "y" + jb)
        details[f"{a}:{ja}+{b}:{jb}"] = {
            "invertible": rep.invertible,
            "output_is_coproduct": rep.output_is_coproduct,
            "other_actions_match": dict(sorted(rep.inputs_match.items())),
        }
        ok = ok and rep.ok
    coassoc = coassociativity_check()
    details["coassociativity"] = coassoc
    ok = ok and all(coassoc.values())
    return {"details": details, "status": _status(ok)}


CHECKS: dict[int, tuple[str, Callable[[], dict]]] = {
    1: ("algebra axioms", check_algebra_axioms),
    2: ("nilCoxeter", check_nilcoxeter),
    3: ("K0 dimensions", check_k0_dimensions),
    4: ("main theorem", check_main_theorem),
    5: ("E structure", check_e_structure),
    6: ("square zero", check_square_zero),
    7: ("pants table", check_pants_table),
    8: ("gluing", check_gluing),
    9: ("Hopf tensor product", check_hopf),
}


@contextlib.contextmanager
def inject_fault(kind: str):
    """Deliberately break a rule, so the suite can be seen to fail."""
    if kind != "double_crossing":
        raise ValueError(f"unknown fault {kind!r}")
    original = Geometry.concat

    def sloppy(self, x, y):
        self.crossings = lambda big: 0
        try:
            return original(self, x, y)
        finally:
            del self.crossings

    Geometry.concat = sloppy
    try:
        yield
    finally:
        Geometry.concat = original


def run_suite(only: list[int] | None = None, fault: str | None = None) -> dict:
    """Run the checks (criterion 10, determinism, is a property of this output)."""
    numbers = sorted(CHECKS) if only is None else sorted(only)
    ctx = inject_fault(fault) if fault else contextlib.nullcontext()
    with ctx:
        with ThreadPoolExecutor(max_workers=thread_count()) as pool:
            futures = {n: pool.submit(CHECKS[n][1]) for n in numbers}
            results = {}
            for n in numbers:
                try:
                    results[n] = futures[n].result()
                except Exception as exc:  # reported, not raised
                    results[n] = {"status": "error", "details": {"error": f"{type(exc).__name__}: {exc}"}}
    criteria = {str(n): {"name": CHECKS[n][0], **results[n]} for n in numbers}
    ok = all(r["status"] == "pass" for r in results.values())
    return {"criteria": criteria, "status": _status(ok)}
