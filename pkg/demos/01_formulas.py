"""
Formulas, truth tables and the disjunction abbreviation
=======================================================

Implication is the only connective.  Disjunction is shorthand for
``(A -> B) -> B``.
"""

# parse, render and look at the tree
from peirce import parse, render
from peirce.formula import countervaluation, is_tautology, or_of, truth_table, variables

f = parse("p \\/ q")
print(render(f))
print(repr(f))

# arrows associate to the right, so these parentheses go away
print(render(parse("p -> (q -> r)")))
print(render(parse("(p -> q) -> r")))

# Peirce's law holds on all four valuations
peirce = parse("((p -> q) -> p) -> p")
print(truth_table(peirce).astype(int))
print(is_tautology(peirce))

# (p -> q) -> q is not a tautology, and p = q = 0 is the witness
print(countervaluation(parse("(p -> q) -> q")))

# the disjunction behaves like classical "or", row by row
a, b = parse("p -> q"), parse("q")
names = variables(or_of(a, b))
print(names)
print(truth_table(a, names).astype(int))
print(truth_table(b, names).astype(int))
print(truth_table(or_of(a, b), names).astype(int))
