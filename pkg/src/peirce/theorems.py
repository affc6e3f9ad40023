"""Proof constructors for the Peirce equivalences and the disjunction rules.

Each constructor returns a proof whose basis is exactly the one its result
needs; :func:`verify_paper` re-checks all of them and tabulates which axiom
schemes each one actually uses.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from .deduction import ProofBuilder, cut, discharge, hypothetical_syllogism, identity_proof, restate
from .formula import Formula, Imp, Scheme, instantiate, is_tautology, or_of, render
from .kernel import MP, Ax, Basis, Hyp, Judgment, Proof, ProofError, VeeE, axioms_used, check_proof, uses_vee_e

__all__ = [
    "prove_peirce_implies_prime",
    "prove_prime_implies_peirce",
    "prove_or_intro_left",
    "prove_or_intro_right",
    "prove_or_elim",
    "lift_or_elim",
    "prove_vee_e_implies_peirce",
    "replace_scheme",
    "CONSTRUCTORS",
    "Construction",
    "verify_paper",
    "PaperReport",
]

PKS = Basis.of(Scheme.P, Scheme.K, Scheme.S)
PPRIME_KS = Basis.of(Scheme.P_PRIME, Scheme.K, Scheme.S)
KS = Basis.of(Scheme.K, Scheme.S)
KS_VE = Basis.of(Scheme.K, Scheme.S, vee_e=True)


def _declare(p: Proof, basis: Basis) -> Proof:
    if not axioms_used(p) <= basis.schemes or (uses_vee_e(p) and not basis.vee_e):
        raise AssertionError(f"construction needs more than {basis}")
    return Proof(p.hypotheses, p.steps, basis)


def prove_peirce_implies_prime(a: Formula, b: Formula, q: Formula) -> Proof:
    """``⊢ (a -> q) -> (((a -> b) -> q) -> q)`` from Peirce's law."""
    aq, ab_q = Imp(a, q), Imp(Imp(a, b), q)
    qb = Imp(q, b)
    # [a -> q] ⊢ (q -> b) -> (a -> b)
    lifted = discharge(hypothetical_syllogism(a, q, b), qb)
    # [a -> q, (a -> b) -> q] ⊢ (q -> b) -> q
    chained = cut(lifted, hypothetical_syllogism(qb, Imp(a, b), q))
    out = ProofBuilder([aq, ab_q])
    n = out.include(chained)
    peirce = out.ax(Scheme.P, A=q, B=b)
    out.mp(peirce, n)
    proof = discharge(discharge(out.build(), ab_q), aq)
    return _declare(restate(proof, []), PKS)


def prove_prime_implies_peirce(a: Formula, b: Formula) -> Proof:
    """``⊢ ((a -> b) -> a) -> a`` from the primed scheme with its third slot set to ``a``."""
    out = ProofBuilder()
    prime = out.ax(Scheme.P_PRIME, A=a, B=b, Q=a)
    ident = out.include(identity_proof(a))
    out.mp(prime, ident)
    return _declare(out.build(), PPRIME_KS)


def prove_or_intro_left(a: Formula, b: Formula) -> Proof:
    ab = Imp(a, b)
    out = ProofBuilder([a, ab])
    x = out.hyp(a)
    out.mp(out.hyp(ab), x)
    return _declare(restate(discharge(out.build(), ab), [a]), KS)


def prove_or_intro_right(a: Formula, b: Formula) -> Proof:
    out = ProofBuilder([b])
    k = out.ax(Scheme.K, A=b, B=Imp(a, b))
    out.mp(k, out.hyp(b))
    return _declare(out.build(), KS)


def prove_or_elim(a: Formula, b: Formula, q: Formula) -> Proof:
    """``[a -> q, b -> q] ⊢ (a \\/ b) -> q``, routed through the primed scheme."""
    aq, bq, disj = Imp(a, q), Imp(b, q), or_of(a, b)
    lemma = prove_peirce_implies_prime(a, b, q)
    lemma_f = lemma.steps[-1].formula
    out = ProofBuilder([aq, bq, disj])
    m = out.mp(out.hyp(lemma_f), out.hyp(aq))  # ((a -> b) -> q) -> q
    n = out.include(hypothetical_syllogism(Imp(a, b), b, q))  # (a -> b) -> q
    out.mp(m, n)
    # the lemma enters as a hypothesis and is cut in after discharging
    proof = cut(lemma, discharge(out.build(), disj))
    return _declare(restate(proof, [aq, bq]), PKS)


def lift_or_elim(pa: Proof, pb: Proof) -> Proof:
    """From ``[a] ⊢ q`` and ``[b] ⊢ q`` build ``[a \\/ b] ⊢ q``."""
    ja, jb = check_proof(pa), check_proof(pb)
    if len(ja.hypotheses) != 1 or len(jb.hypotheses) != 1:
        raise ProofError("shape", "both deductions must have exactly one hypothesis")
    if ja.conclusion != jb.conclusion:
        raise ProofError("shape", f"conclusions differ: {render(ja.conclusion)} vs {render(jb.conclusion)}")
    a, b, q = ja.hypotheses[0], jb.hypotheses[0], ja.conclusion
    closed = cut(discharge(pb, b), cut(discharge(pa, a), prove_or_elim(a, b, q)))
    disj = or_of(a, b)
    out = ProofBuilder([disj], pa.basis | pb.basis | PKS)
    n = out.include(closed)
    out.mp(n, out.hyp(disj))
    return _declare(out.build([disj]), pa.basis | pb.basis | PKS)


def prove_vee_e_implies_peirce(a: Formula, b: Formula) -> Proof:
    """``⊢ ((a -> b) -> a) -> a`` using primitive VE and no Peirce axiom.

    The single VE step has closed premises ``a -> ((b -> a) -> a)`` and
    ``b -> ((b -> a) -> a)``; the open hypothesis ``(a -> b) -> a`` is only
    used afterwards, so the final discharge never crosses VE.
    """
    h = Imp(Imp(a, b), a)
    ba = Imp(b, a)
    target = Imp(ba, a)

    closed = ProofBuilder()
    left = closed.ax(Scheme.K, A=a, B=ba)
    right = closed.include(discharge(prove_or_intro_left(b, a), b))
    closed.vee_e(left, right, a, b, target)
    lemma = closed.build()
    lemma_f = lemma.steps[-1].formula  # (a \/ b) -> ((b -> a) -> a)

    out = ProofBuilder([h, lemma_f])
    k = out.ax(Scheme.K, A=b, B=a)  # b -> (a -> b)
    b_to_a = out.include(hypothetical_syllogism(b, Imp(a, b), a), replace={Imp(b, Imp(a, b)): k})
    body = ProofBuilder([h, Imp(a, b)])
    x = body.mp(body.hyp(h), body.hyp(Imp(a, b)))
    body.mp(body.hyp(Imp(a, b)), x)
    disj = out.include(discharge(body.build(), Imp(a, b)))  # (a -> b) -> b
    y = out.mp(out.hyp(lemma_f), disj)
    out.mp(y, b_to_a)
    proof = cut(lemma, discharge(out.build(), h))
    return _declare(restate(proof, []), KS_VE)


def replace_scheme(p: Proof, scheme: Scheme, prover: Callable[..., Proof], basis: Basis) -> Proof:
    """Swap every ``scheme`` axiom step of ``p`` for a derivation of the same instance.

    ``prover`` receives the instance's metavariable bindings as keyword
    arguments.  Used to turn a Peirce-based proof into a P'-based one and
    back.
    """
    out = ProofBuilder(p.hypotheses, Basis(frozenset(), p.basis.vee_e))
    where: list[int] = []
    for step in p.steps:
        if isinstance(step, Ax) and step.scheme is scheme:
            where.append(out.include(prover(**step.subst)))
        elif isinstance(step, Hyp):
            where.append(out._push(step))
        elif isinstance(step, Ax):
            where.append(out.ax(step.scheme, **step.subst))
        elif isinstance(step, MP):
            where.append(out.mp(where[step.imp - 1], where[step.ant - 1]))
        else:
            where.append(out.vee_e(where[step.left - 1], where[step.right - 1], step.a, step.b, step.q))
    return _declare(out.build(), basis)


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Construction:
    name: str
    label: str
    build: Callable[..., Proof]
    metavariables: tuple[str, ...]
    basis: Basis
    # (a, b, q) -> (hypotheses, conclusion)
    contract: Callable[..., tuple[tuple, Formula]]

    def judgment(self, **kw: Formula) -> Judgment:
        hyps, concl = self.contract(**kw)
        return Judgment(tuple(hyps), concl, self.basis)

    def run(self, **kw: Formula) -> Proof:
        return self.build(*(kw[m] for m in self.metavariables))


def _hs(A, B, C):
    return hypothetical_syllogism(A, B, C)


CONSTRUCTORS: dict[str, Construction] = {
    c.name: c
    for c in [
        Construction("identity", "A -> A without Peirce", identity_proof, ("A",), KS,
                     lambda A: ((), Imp(A, A))),
        Construction("hs", "Hypothetical Syllogism", _hs, ("A", "B", "C"), KS,
                     lambda A, B, C: ((Imp(A, B), Imp(B, C)), Imp(A, C))),
        Construction("t1-forward", "Theorem 1 (Peirce gives P')", prove_peirce_implies_prime,
                     ("A", "B", "Q"), PKS,
                     lambda A, B, Q: ((), instantiate(Scheme.P_PRIME, {"A": A, "B": B, "Q": Q}))),
        Construction("t1-reverse", "Theorem 1 (P' gives Peirce)", prove_prime_implies_peirce,
                     ("A", "B"), PPRIME_KS,
                     lambda A, B: ((), instantiate(Scheme.P, {"A": A, "B": B}))),
        Construction("or-intro-left", "Theorem 2 (left)", prove_or_intro_left, ("A", "B"), KS,
                     lambda A, B: ((A,), or_of(A, B))),
        Construction("or-intro-right", "Theorem 2 (right)", prove_or_intro_right, ("A", "B"), KS,
                     lambda A, B: ((B,), or_of(A, B))),
        Construction("or-elim", "Theorem 3", prove_or_elim, ("A", "B", "Q"), PKS,
                     lambda A, B, Q: ((Imp(A, Q), Imp(B, Q)), Imp(or_of(A, B), Q))),
        Construction("t4-reverse", "Theorem 4 (VE gives Peirce)", prove_vee_e_implies_peirce,
                     ("A", "B"), KS_VE,
                     lambda A, B: ((), instantiate(Scheme.P, {"A": A, "B": B}))),
    ]
}


@dataclass
class ReportRow:
    name: str
    label: str
    judgment: str
    basis: str
    axioms: str
    vee_e_steps: int
    steps: int
    trials: int
    ok: bool
    error: str = ""


@dataclass
class PaperReport:
    rows: list[ReportRow] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows)

    def row(self, name: str) -> ReportRow:
        return next(r for r in self.rows if r.name == name)

    def format(self) -> str:
        lines = [f"{'construction':<15} {'basis':<10} {'axioms used':<12} {'VE':>3} {'steps':>6} "
                 f"{'trials':>6}  status  judgment"]
        for r in self.rows:
            lines.append(f"{r.name:<15} {r.basis:<10} {r.axioms:<12} {r.vee_e_steps:>3} {r.steps:>6} "
                         f"{r.trials:>6}  {'ok' if r.ok else 'FAIL':<6}  {r.judgment}"
                         + (f"  ({r.error})" if r.error else ""))
        lines.extend(self.notes)
        return "\n".join(lines)


def check_construction(c: Construction, **kw: Formula) -> Proof:
    """Run ``c`` and verify the result against its contract; raise on any mismatch."""
    proof = c.run(**kw)
    got = check_proof(proof)
    want = c.judgment(**kw)
    if got.hypotheses != want.hypotheses or got.conclusion != want.conclusion:
        raise ProofError("shape", f"{c.name}: proved {got}, expected {want}")
    if got.basis != c.basis:
        raise ProofError("basis", f"{c.name}: declared basis {got.basis}, expected {c.basis}")
    if not got.hypotheses and not is_tautology(got.conclusion):
        raise ProofError("shape", f"{c.name}: conclusion {render(got.conclusion)} is not a tautology")
    return proof


def verify_paper(trials: int = 25, seed: int = 0, max_depth: int = 3) -> PaperReport:
    """Check every construction on ``(p, q, r)`` and on random instances."""
    from .formula import Var
    from .sampling import random_formula

    rng = random.Random(seed)
    fixed = {"A": Var("p"), "B": Var("q"), "C": Var("r"), "Q": Var("r")}
    names = ["p", "q", "r"]
    report = PaperReport()
    for c in CONSTRUCTORS.values():
        kw = {m: fixed[m] for m in c.metavariables}
        row = ReportRow(c.name, c.label, str(c.judgment(**kw)), str(c.basis), "", 0, 0, 0, True)
        try:
            proof = check_construction(c, **kw)
            used = axioms_used(proof)
            row.axioms = ",".join(s.value for s in (Scheme.K, Scheme.S, Scheme.P, Scheme.P_PRIME) if s in used)
            row.vee_e_steps = sum(isinstance(s, VeeE) for s in proof.steps)
            row.steps = len(proof)
            for _ in range(trials):
                rkw = {m: random_formula(rng, max_depth, names) for m in c.metavariables}
                check_construction(c, **rkw)
                row.trials += 1
        except (ProofError, AssertionError) as exc:
            row.ok = False
            row.error = str(exc)
        report.rows.append(row)

    def peirce_free(name):
        r = report.row(name)
        return r.ok and "P" not in r.axioms.split(",")

    if peirce_free("or-intro-left") and peirce_free("or-intro-right"):
        report.notes.append("Theorem 2: Peirce-free")
    if report.row("or-elim").ok and "P" in report.row("or-elim").axioms.split(","):
        report.notes.append("Theorem 3: uses Peirce (P)")
    r4 = report.row("t4-reverse")
    if peirce_free("t4-reverse") and r4.vee_e_steps == 1:
        report.notes.append("Theorem 4 reverse: uses VE, Peirce-free")
    r1 = report.row("t1-reverse")
    if r1.ok and r1.axioms.split(",").count("P") == 0 and "P'" in r1.axioms:
        report.notes.append("Theorem 1 reverse: uses P' only, no P")
    return report
