"""Implicational propositional calculus around Peirce's law.

Formulas and truth tables (:mod:`peirce.formula`), a proof kernel
(:mod:`peirce.kernel`), the deduction theorem as a proof transformation
(:mod:`peirce.deduction`), proof constructors for the Peirce equivalents
(:mod:`peirce.theorems`) and the quotient poset of formulas under
equivalence (:mod:`peirce.lindenbaum`).
"""

from .formula import (
    Formula,
    Imp,
    ParseError,
    Scheme,
    TooLargeError,
    Var,
    countervaluation,
    evaluate,
    instantiate,
    is_tautology,
    or_of,
    parse,
    render,
    truth_table,
    variables,
)
from .kernel import MP, Ax, Basis, Hyp, Judgment, Proof, ProofError, VeeE, check_proof, conclusion_of
from .deduction import concat_mp, discharge, hypothetical_syllogism, identity_proof, weaken
from .theorems import (
    CONSTRUCTORS,
    lift_or_elim,
    prove_or_elim,
    prove_or_intro_left,
    prove_or_intro_right,
    prove_peirce_implies_prime,
    prove_prime_implies_peirce,
    prove_vee_e_implies_peirce,
    verify_paper,
)

__version__ = "0.1.0"
