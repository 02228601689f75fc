"""Grothendieck groups over F2 and the map induced by E.

K0 of A(Z) has the idempotents as a basis; idempotent e is indexed by the
bitmask of the matched pairs it dots (bit i = ``diagram.pairs[i]``).  The
exterior algebra on H_1(F, S+; F2) uses the same pairs as its basis, so a
subset X of pairs indexes both the wedge of its classes and the idempotent
dotting it.  Matrices act on column vectors: ``M[row=out, col=in]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .arc_diagram import INTERVAL, ArcDiagram, InvalidIntervalError, homology_basis, phi_pairing
from .e_bimodule import EBimodule
from .gf2 import GF2Matrix
from .nilcoxeter import NoWitnessError, acyclicity_witness, identity, nc_differential

__all__ = [
    "k0_dimension",
    "wedge_dimension",
    "k0_e_matrix",
    "phi_matrix",
    "graded_block",
    "verify_main_theorem",
    "u_algebra_check",
    "MainTheoremReport",
    "UAlgebraReport",
]


def _check_interval(d: ArcDiagram, interval: int) -> None:
    if not 0 <= interval < len(d.components) or d.components[interval].kind != INTERVAL:
        raise InvalidIntervalError(f"component {interval} is not an interval")


def k0_dimension(d: ArcDiagram) -> int:
    """Number of idempotents of A(Z)."""
    from .strands_algebra import StrandsAlgebra

    return len(StrandsAlgebra(d).idempotents())


def wedge_dimension(d: ArcDiagram) -> int:
    """dim of the exterior algebra on the homology basis."""
    return 2 ** len(homology_basis(d))


def k0_e_matrix(d: ArcDiagram, interval: int, weight: int | None = None) -> GF2Matrix:
    """[E (x) -] on K0, read off the special set of E.

    The class of Hom(e, -) goes to the sum of [Hom(lambda(y), -)] over y in
    S with rho(y) = e.  With ``weight`` given, only E(weight) contributes.
    """
    _check_interval(d, interval)
    E = EBimodule(d, interval)
    alg = E.algebra
    n = 1 << d.n_pairs
    cols = [0] * n
    for y in E.special_set():
        rho = alg.idempotent_mask(E.right_idempotent(y.picture))
        if weight is not None and bin(rho).count("1") != weight:
            continue
        lam = alg.idempotent_mask(E.left_idempotent(y.picture))
        cols[rho] ^= 1 << lam
    return GF2Matrix.from_columns(cols, n)


def phi_matrix(d: ArcDiagram, interval: int) -> GF2Matrix:
    """Phi_I: remove one wedge factor whose class has odd boundary on I."""
    _check_interval(d, interval)
    pairs = homology_basis(d).pairs
    odd = [phi_pairing(d, p, interval) for p in pairs]
    n = 1 << len(pairs)
    cols = [0] * n
    for mask in range(n):
        for i, flag in enumerate(odd):
            if flag and mask >> i & 1:
                cols[mask] ^= 1 << (mask & ~(1 << i))
    return GF2Matrix.from_columns(cols, n)


def graded_block(m: GF2Matrix, n_pairs: int, k: int) -> GF2Matrix:
    """The block of m from subsets of size k to subsets of size k - 1."""
    masks = range(1 << n_pairs)
    rows = [s for s in masks if bin(s).count("1") == k - 1]
    cols = [s for s in masks if bin(s).count("1") == k]
    return m.submatrix(rows, cols)


@dataclass
class MainTheoremReport:
    interval: int
    k0_matrix: GF2Matrix
    phi_matrix: GF2Matrix
    blocks_equal: dict[int, bool] = field(default_factory=dict)
    outside_blocks_zero: bool = True

    @property
    def ok(self) -> bool:
        return (
            self.k0_matrix == self.phi_matrix
            and all(self.blocks_equal.values())
            and self.outside_blocks_zero
        )

    def to_dict(self) -> dict:
        return {
            "interval": self.interval,
            "k0_e_matrix": self.k0_matrix.to_strings(),
            "phi_matrix": self.phi_matrix.to_strings(),
            "blocks_equal": {str(k): v for k, v in sorted(self.blocks_equal.items())},
            "outside_blocks_zero": self.outside_blocks_zero,
            "basis": "bitmask over matched pairs sorted by minimum point id",
            "status": "pass" if self.ok else "fail",
        }


def verify_main_theorem(d: ArcDiagram, interval: int) -> MainTheoremReport:
    k0 = k0_e_matrix(d, interval)
    phi = phi_matrix(d, interval)
    report = MainTheoremReport(interval, k0, phi)
    n = d.n_pairs
    for k in range(1, n + 1):
        ek = k0_e_matrix(d, interval, weight=k)
        report.blocks_equal[k] = graded_block(ek, n, k) == graded_block(phi, n, k)
    # nothing outside the k -> k-1 blocks
    for row in range(1 << n):
        for col in range(1 << n):
            if k0[row, col] and bin(row).count("1") != bin(col).count("1") - 1:
                report.outside_blocks_zero = False
    return report


@dataclass
class UAlgebraReport:
    e_squared_zero: bool
    basis_size: int
    witnesses: dict[int, bool]

    @property
    def ok(self) -> bool:
        return self.e_squared_zero and self.basis_size == 2 and all(self.witnesses.values())


def u_algebra_check(max_n: int = 5) -> UAlgebraReport:
    """F2[E]/(E^2) via its regular representation, plus NC_n witnesses."""
    # basis (1, E); E sends 1 -> E, E -> 0
    e = GF2Matrix.from_rows([[0, 0], [1, 0]])
    witnesses = {}
    for n in range(2, max_n + 1):
        try:
            h = acyclicity_witness(n)
            witnesses[n] = nc_differential(h) == {identity(n)}
        except NoWitnessError:
            witnesses[n] = False
    return UAlgebraReport((e @ e).is_zero(), e.nrows, witnesses)
