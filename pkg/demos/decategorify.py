"""
E on the Grothendieck group
===========================

For every interval of every corpus diagram, the map induced by the
bimodule E on K0 is printed next to the operator that removes one wedge
factor with odd boundary on that interval.  Columns and rows are indexed by
bitmasks over the matched pairs.
"""

from strands_decat import corpus
from strands_decat.decat import k0_e_matrix, phi_matrix, verify_main_theorem

for name in corpus.DIAGRAMS:
    d = corpus.diagram(name)
    for i in d.intervals():
        e, phi = k0_e_matrix(d, i), phi_matrix(d, i)
        ok = verify_main_theorem(d, i).ok
        print(f"{name} interval {i}: equal={e == phi} graded={ok}")
        if not e.is_zero():
            for row_e, row_phi in zip(e.to_strings(), phi.to_strings()):
                print(f"    {row_e}   {row_phi}")
