"""
Checking proofs and discharging hypotheses
==========================================

A proof is a list of steps that each state their formula.  The kernel
re-checks every step, and the deduction theorem turns a proof from
``Γ, a`` into a proof of ``a -> C`` from ``Γ``.
"""

from peirce import Basis, Hyp, MP, Proof, check_proof, discharge, identity_proof, parse
from peirce.kernel import ProofError
from peirce.proofio import dumps

p, q = parse("p"), parse("q")
KS = Basis.of("K", "S")

# the five-step proof of p -> p
ident = identity_proof(p)
print(dumps(ident))
print(check_proof(ident))

# the same proof without S in the basis
try:
    check_proof(ident, Basis.of("K"))
except ProofError as exc:
    print("rejected:", exc)

# modus ponens from two hypotheses
mp = Proof((parse("p -> q"), p), (Hyp(parse("p -> q"), 1), Hyp(p, 2), MP(q, 1, 2)), KS)
print(check_proof(mp))

# discharge p; every step gets lifted under "p ->"
lifted = discharge(mp, p)
print(check_proof(lifted), f"({len(mp)} steps became {len(lifted)})")

# discharging something that is not a hypothesis just weakens the conclusion
print(check_proof(discharge(mp, parse("r"))))
