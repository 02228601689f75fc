"""Command-line driver: ``strands-decat {validate,algebra,decat,glue,suite}``.

Each command prints a short text summary and, with ``--json PATH``, writes
the full report (``-`` for standard output).  The exit code is 0 when the
report status is "pass", 1 for "fail" and 2 for "error".
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import corpus
from .arc_diagram import ArcDiagram, diagram_from_dict, surface_type, validate
from .decat import verify_main_theorem
from .gluing import GluingSpec, constructive_iso, glue_self, verify_gluing
from .suite import algebra_checks, run_suite
from .surfaces import SuturedSurfaceType

__all__ = ["main", "build_parser"]

EXIT = {"pass": 0, "fail": 1, "error": 2}


class InputError(Exception):
    """Unreadable or malformed input."""


def _load_json(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from None


def _diagram(path: str) -> ArcDiagram:
    data = _load_json(path)
    try:
        return diagram_from_dict(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{path}: not an arc diagram ({exc})") from None


def _surface(path: str) -> SuturedSurfaceType:
    """A surface file, or a diagram file standing for its surface."""
    data = _load_json(path)
    try:
        obj = corpus.load_any(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{path}: not a surface or diagram ({exc})") from None
    if isinstance(obj, ArcDiagram):
        problems = validate(obj)
        if problems:
            raise InputError(f"{path}: invalid diagram: {'; '.join(problems)}")
        return surface_type(obj)
    return obj


def _report(command: str, inputs: dict, status: str, details: dict) -> dict:
    return {"command": command, "inputs": inputs, "status": status, "details": details}


# -- commands -----------------------------------------------------------------------------


def cmd_validate(args) -> dict:
    d = _diagram(args.diagram)
    problems = validate(d)
    details = {"violations": problems}
    if not problems:
        details["surface"] = surface_type(d).to_dict()
        details["components"] = [
            {"id": i, "kind": c.kind, "points": list(c.points)} for i, c in enumerate(d.components)
        ]
    return _report("validate", {"diagram": args.diagram}, "fail" if problems else "pass", details)


def cmd_algebra(args) -> dict:
    d = _diagram(args.diagram)
    problems = validate(d)
    inputs = {"diagram": args.diagram, "k": args.k, "winding_cap": args.winding_cap}
    if problems:
        return _report("algebra", inputs, "error", {"violations": problems})
    if args.k is not None and args.k > d.n_pairs:
        return _report("algebra", inputs, "pass", {"basis_sizes": {str(args.k): 0}})
    assoc = None if d.n_pairs <= 2 else 2
    details = algebra_checks(d, args.winding_cap, args.k, assoc)
    return _report("algebra", inputs, details.pop("status"), details)


def cmd_decat(args) -> dict:
    d = _diagram(args.diagram)
    problems = validate(d)
    inputs = {"diagram": args.diagram, "interval": args.interval}
    if problems:
        return _report("decat", inputs, "error", {"violations": problems})
    intervals = d.intervals() if args.interval is None else [args.interval]
    if args.interval is not None and args.interval not in d.intervals():
        return _report("decat", inputs, "error", {"error": f"component {args.interval} is not an interval"})
    details = {}
    ok = True
    for i in intervals:
        rep = verify_main_theorem(d, i)
        details[str(i)] = rep.to_dict()
        ok = ok and rep.ok
    return _report("decat", inputs, "pass" if ok else "fail", details)


def cmd_glue(args) -> dict:
    spec = GluingSpec.parse(args.pairs or "")
    inputs = {"surfaces": args.surfaces, "pairs": [list(p) for p in spec.pairs], "self": args.self}
    if args.self:
        if len(args.surfaces) != 1:
            raise InputError("--self takes exactly one surface")
        s = _surface(args.surfaces[0])
        steps = []
        surface = s
        for a, b in spec.pairs:
            steps.append(constructive_iso(surface, a, b).to_dict())
            surface = glue_self(surface, a, b)
        rep = verify_gluing(s, None, spec)
        details = rep.to_dict()
        details["constructive"] = steps
        ok = rep.ok and all(st["status"] == "pass" for st in steps)
        return _report("glue", inputs, "pass" if ok else "fail", details)
    if len(args.surfaces) != 2:
        raise InputError("glue takes two surfaces (or one with --self)")
    s1, s2 = (_surface(p) for p in args.surfaces)
    rep = verify_gluing(s1, s2, spec)
    return _report("glue", inputs, "pass" if rep.ok else "fail", rep.to_dict())


def cmd_suite(args) -> dict:
    result = run_suite()
    return _report("suite", {}, result["status"], result["criteria"])


# -- plumbing -----------------------------------------------------------------------------


def _summary(report: dict) -> str:
    lines = [f"{report['command']}: {report['status']}"]
    details = report["details"]
    if report["command"] == "suite":
        for n, crit in details.items():
            lines.append(f"  {n:>2} {crit['name']:<22} {crit['status']}")
    elif report["command"] == "decat":
        for i, rep in details.items():
            if not isinstance(rep, dict) or "k0_e_matrix" not in rep:
                continue
            lines.append(f"  interval {i}: {rep['status']}")
            lines.append("    [E(x)-] = " + " ".join(rep["k0_e_matrix"]))
            lines.append("    Phi_I   = " + " ".join(rep["phi_matrix"]))
    elif report["command"] == "algebra" and "basis_sizes" in details:
        sizes = ", ".join(f"k={k}: {v}" for k, v in details["basis_sizes"].items())
        lines.append(f"  basis sizes {sizes}")
        for key in ("d_squared", "leibniz", "associativity"):
            if key in details:
                lines.append(f"  {key}: {details[key]['checked']} checked, {details[key]['failures']} failures")
    elif report["command"] == "glue" and "dims" in details:
        lines.append(f"  dims {details['dims']}, expected {details['expected_dim']}")
        lines.append(f"  rank profiles equal: {details['profiles_equal']}")
        for st in details["steps"]:
            lines.append(f"  step {st['case']}: {st['status']}")
    elif report["command"] == "validate":
        for v in details.get("violations", []):
            lines.append(f"  {v}")
        if "surface" in details:
            for c in details["surface"]["components"]:
                kinds = ", ".join(
                    b["kind"] if b["kind"] != "alternating" else f"{len(b['intervals'])}+/{len(b['intervals'])}-"
                    for b in c["boundary"]
                )
                lines.append(f"  genus {c['genus']}: {kinds}")
    if "error" in details:
        lines.append(f"  error: {details['error']}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="strands-decat", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def with_json(sp):
        sp.add_argument("--json", metavar="PATH", help="write the JSON report here ('-' for stdout)")
        return sp

    v = with_json(sub.add_parser("validate", help="validate a diagram and report its surface"))
    v.add_argument("diagram")
    v.set_defaults(func=cmd_validate)

    a = with_json(sub.add_parser("algebra", help="basis sizes and algebra axioms"))
    a.add_argument("diagram")
    a.add_argument("--k", type=int, default=None, help="only this weight")
    a.add_argument("--winding-cap", type=int, default=2)
    a.set_defaults(func=cmd_algebra)

    d = with_json(sub.add_parser("decat", help="compare [E (x) -] with Phi_I"))
    d.add_argument("diagram")
    d.add_argument("--interval", type=int, default=None, help="component id (default: every interval)")
    d.set_defaults(func=cmd_decat)

    g = with_json(sub.add_parser("glue", help="verify a gluing"))
    g.add_argument("surfaces", nargs="+")
    g.add_argument("--pairs", default="", help="label:label,...")
    g.add_argument("--self", action="store_true", help="glue pairs of intervals of one surface")
    g.set_defaults(func=cmd_glue)

    s = with_json(sub.add_parser("suite", help="run every acceptance check on the built-in corpus"))
    s.set_defaults(func=cmd_suite)
    return p


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report = args.func(args)
    except (InputError, KeyError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else str(exc)
        report = _report(args.command, {}, "error", {"error": msg})
    print(_summary(report))
    if args.json:
        text = dumps(report)
        if args.json == "-":
            sys.stdout.write(text)
        else:
            Path(args.json).write_text(text)
    return EXIT[report["status"]]


if __name__ == "__main__":
    sys.exit(main())
