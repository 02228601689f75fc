"""
Strands pictures and their products
===================================

A tour of the strands algebra of one small arc diagram: an interval with
points 1..4 and matching {1,3}, {2,4}.  Its surface is a torus with one
boundary circle.
"""

from strands_decat import StrandsAlgebra, StrandsPicture, corpus
from strands_decat.arc_diagram import surface_type

d = corpus.diagram("D2")
print(surface_type(d).canonical())

A = StrandsAlgebra(d)
for k in range(d.n_pairs + 1):
    print(f"weight {k}: {len(A.enumerate_basis(k))} pictures")

# %%
# Concatenation: 1->2 followed by 2->3 is 1->3.
P = StrandsPicture.make
print(A.multiply(P(solids=[(1, 2)]), P(solids=[(2, 3)])))

# %%
# A product that vanishes although the ends line up: each factor has one
# crossing against a horizontal strand, the composite has none.
x = P(dotted=[2, 4], solids=[(1, 3)])
y = P(dotted=[1, 3], solids=[(2, 4)])
print(A.crossing_count(x), A.crossing_count(y), A.multiply(x, y))

# %%
# The differential resolves one crossing: nested strands become staggered.
print(A.differential(P(solids=[(1, 4), (2, 3)])))
