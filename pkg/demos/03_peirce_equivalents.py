"""
Peirce's law and its equivalents
================================

Every construction here is an ordinary proof object, checked by the kernel,
and the report shows which axiom schemes each one actually uses.
"""

from peirce import CONSTRUCTORS, check_proof, parse, verify_paper
from peirce.kernel import Basis, ProofError, axioms_used

p, q, r = parse("p"), parse("q"), parse("r")

# Peirce's law gives the stronger scheme P' ...
fwd = CONSTRUCTORS["t1-forward"].run(A=p, B=q, Q=r)
print(check_proof(fwd), len(fwd), "steps")

# ... and P' gives Peirce back in seven steps
rev = CONSTRUCTORS["t1-reverse"].run(A=p, B=q)
print(check_proof(rev), sorted(s.value for s in axioms_used(rev)))

# introducing a disjunction needs nothing beyond K and S
for name in ("or-intro-left", "or-intro-right"):
    pr = CONSTRUCTORS[name].run(A=p, B=q)
    print(name, check_proof(pr, Basis.of("K", "S")))

# eliminating one needs Peirce
elim = CONSTRUCTORS["or-elim"].run(A=p, B=q, Q=r)
print(check_proof(elim))
try:
    check_proof(elim, Basis.of("K", "S"))
except ProofError as exc:
    print("without P:", exc)

# an elimination rule, taken as primitive, proves Peirce without P
t4 = CONSTRUCTORS["t4-reverse"].run(A=p, B=q)
print(check_proof(t4), sorted(s.value for s in axioms_used(t4)))

# the whole table, on (p, q, r) and a few random instances
print(verify_paper(trials=5).format())
