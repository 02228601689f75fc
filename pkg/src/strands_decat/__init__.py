"""Strands algebras of arc diagrams over F2, the bimodule E, and their
decategorification and gluing."""

from __future__ import annotations

from .arc_diagram import ArcDiagram, Component, homology_basis, phi_pairing, surface_type, validate
from .decat import k0_e_matrix, phi_matrix, verify_main_theorem
from .e_bimodule import EBimodule, EPicture
from .gf2 import GF2Matrix, GF2Vector, cokernel_basis, mat_mul, rank
from .gluing import EModule, GluingSpec, glue_modules, glue_self, tensor_reduce, verify_gluing, wedge_module
from .strands_algebra import Strand, StrandsAlgebra, StrandsPicture, weight
from .surfaces import SuturedSurfaceType

__version__ = "0.1.0"

__all__ = [
    "ArcDiagram",
    "Component",
    "EBimodule",
    "EModule",
    "EPicture",
    "GF2Matrix",
    "GF2Vector",
    "GluingSpec",
    "Strand",
    "StrandsAlgebra",
    "StrandsPicture",
    "SuturedSurfaceType",
    "cokernel_basis",
    "glue_modules",
    "glue_self",
    "homology_basis",
    "k0_e_matrix",
    "mat_mul",
    "phi_matrix",
    "phi_pairing",
    "rank",
    "surface_type",
    "tensor_reduce",
    "validate",
    "verify_gluing",
    "verify_main_theorem",
    "wedge_module",
    "weight",
]
