"""
The quotient poset of a bounded universe
========================================

Enumerate every formula up to a depth, identify formulas that entail each
other, and check that ``(A -> B) -> B`` is the least upper bound of ``A``
and ``B`` for every pair of classes.
"""

import numpy as np

from peirce.lindenbaum import (
    build_poset,
    check_join,
    check_top_bottom,
    enumerate_universe,
    export_dot,
    order_laws,
)
from peirce.formula import render

u = enumerate_universe(2, 3)
ps = build_poset(u)
print(len(u), "formulas in", len(ps), "classes")

# each class is a truth table; the representative is the first formula found
for k, c in enumerate(ps.classes):
    print(k, c.bits, render(c.representative), len(c.members))

# the order matrix and its laws
print(ps.leq.astype(int))
print(order_laws(ps))

# the join table, with proof witnesses checked by the kernel
join = check_join(ps, u)
print(np.array(join.join))
print("ok:", join.ok, "| intro proofs:", join.intro_witnesses, "| elim proofs:", join.elim_witnesses)

# a top but no bottom: p and q are only minimal because the universe is finite
tb = check_top_bottom(ps)
print("top:", render(ps.classes[tb.top].representative))
print("minimal:", [render(ps.classes[k].representative) for k in tb.minimal])

# Hasse diagram for graphviz
print(export_dot(ps))
