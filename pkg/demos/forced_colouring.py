"""
Random partial colourings and the forcing process
=================================================

Each vertex takes each of lam colours with probability p and stays blank
with probability 1 - lam p. We ask three questions of the result: is it a
proper partial colouring (PC), does it extend to a lam-colouring (EC), and
does repeatedly filling in forced vertices finish the job (FC)?
"""

# %%
from fractions import Fraction

import numpy as np

from graphpoly import chromatic_poly, complete, cycle
from graphpoly.graph import LabelledGraph
from graphpoly.partial import (PartialAssignment, ec_poly_fixed, fc_labelled, fc_poly_fixed,
                               forcing_closure, pc_poly)

# A forcing run on the triangle: two colours fix the third vertex.
f = PartialAssignment((1, 2, 0), 3)
print("closure of", f.colours, "->", forcing_closure(complete(3), f).colours)

# %%
g, lam = cycle(4), 3
pc = pc_poly(g).subs(l=lam)
ec, fc = ec_poly_fixed(g, lam), fc_poly_fixed(g, lam)
print("PC =", pc)
print("EC =", ec)
print("FC =", fc)

# %%
# FC <= EC <= PC on the whole model range, with equality at p = 1/lam where
# every vertex is coloured and all three reduce to P(G; lam) / lam^n.
for p in np.linspace(0, 1 / lam, 7):
    at = {"p": Fraction(p).limit_denominator(1000)}
    print(f"p={float(p):.3f}  FC={float(fc.evaluate(at)):.4f}  "
          f"EC={float(ec.evaluate(at)):.4f}  PC={float(pc.evaluate(at)):.4f}")
print("P(C4;3)/3^4 =", chromatic_poly(g).evaluate({"q": 3}) / 3 ** 4)

# %%
# Labels: insisting that vertex 0 is coloured and vertex 2 is blank.
print("FC with C={0}, U={2}:", fc_labelled(LabelledGraph(g, {0}, {2}), lam))
