"""The built-in corpus of diagrams and surfaces."""

from __future__ import annotations

import json
from importlib import resources

from .arc_diagram import ArcDiagram, diagram_from_dict
from .gluing import GluingSpec, pants_surface
from .surfaces import SuturedSurfaceType, make_surface, surface_from_dict

__all__ = ["DIAGRAMS", "diagram", "surface", "gluing_cases", "load_any"]

DIAGRAMS = ("D1", "D2", "D3", "D4", "D5")


def _read(name: str) -> dict:
    text = resources.files("strands_decat").joinpath("data").joinpath(f"{name}.json").read_text()
    return json.loads(text)


def diagram(name: str) -> ArcDiagram:
    return diagram_from_dict(_read(name))


def surface(name: str) -> SuturedSurfaceType:
    return surface_from_dict(_read(name))


def load_any(data: dict):
    """A diagram (has "matching") or a surface (has "genus" entries)."""
    if "matching" in data:
        return diagram_from_dict(data)
    return surface_from_dict(data)


def gluing_cases() -> list[tuple[str, SuturedSurfaceType, SuturedSurfaceType | None, GluingSpec]]:
    """(name, surface, second surface or None, spec): one per gluing case and a few more."""

    def one(genus, circles):
        return make_surface([(genus, circles)])

    out = [
        (
            "distinct_components",
            one(0, [{"labels": ["a", "b"]}]),
            one(0, [{"labels": ["c", "d"]}]),
            GluingSpec((("b", "c"),)),
        ),
        (
            "distinct_components_annuli",
            surface("annulus"),
            surface("annulus"),
            GluingSpec((("0.0.0", "0.0.0"),)),
        ),
        ("same_circle", pants_surface(), None, GluingSpec((("I1", "I2"),))),
        ("same_circle_only", one(0, [{"labels": ["a", "b"]}]), None, GluingSpec((("a", "b"),))),
        (
            "different_circles",
            one(0, [{"labels": ["a", "b"]}, {"labels": ["c"]}]),
            None,
            GluingSpec((("a", "c"),)),
        ),
        (
            "different_circles_only",
            one(0, [{"labels": ["a"]}, {"labels": ["c"]}]),
            None,
            GluingSpec((("a", "c"),)),
        ),
        (
            "two_annuli_to_torus",
            surface("annulus"),
            surface("annulus"),
            GluingSpec((("0.0.0", "0.0.0"), ("0.1.0", "0.1.0"))),
        ),
        ("two_disks", surface("disk"), surface("disk"), GluingSpec((("0.0.0", "0.0.0"),))),
    ]
    return out
