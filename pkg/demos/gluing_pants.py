"""
Gluing and the pair of pants
============================

The exterior algebra on H1(F, S+) carries one square-zero action per S+
interval.  Gluing two intervals corresponds to tensoring over the two
actions; the pair of pants turns that into a tensor product of modules.
"""

from strands_decat import corpus
from strands_decat.gluing import (
    GluingSpec,
    glue_modules,
    hopf_tensor_check,
    pants_module,
    verify_gluing,
    wedge_module,
)
from strands_decat.surfaces import make_surface

pants = pants_module()
print(pants.basis_tags)
for label in pants.labels:
    print(label, pants.action(label).to_strings())

# %%
# Two annuli glued along both pairs of intervals give a torus with two
# fully-S- boundary circles.
ann = corpus.surface("annulus")
rep = verify_gluing(ann, ann, GluingSpec((("0.0.0", "0.0.0"), ("0.1.0", "0.1.0"))))
print(rep.glued.canonical(), rep.dims, rep.ok)

# %%
# Gluing along the two inputs of the pants leaves the output acting by zero.
reduced = glue_modules(pants, None, GluingSpec((("I1", "I2"),)))
print(reduced.dim, reduced.action("I3").is_zero())

# %%
# Two disks with two S+ intervals each, glued into the pants inputs: the
# output acts by E(x)1 + 1(x)E on the tensor product.
left = make_surface([(0, [{"labels": ["a", "b"]}])])
right = make_surface([(0, [{"labels": ["c", "d"]}])])
print(wedge_module(left).dim, wedge_module(right).dim, hopf_tensor_check(left, "a", right, "c").ok)
