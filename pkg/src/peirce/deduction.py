"""The deduction theorem as a proof transformation, and derived-rule helpers.

Everything here produces ordinary :class:`~peirce.kernel.Proof` objects;
nothing is trusted, and callers are free to re-check the results.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .formula import Formula, Imp, Scheme, instantiate, render
from .kernel import MP, Ax, Basis, Hyp, Proof, ProofError, VeeE, check_proof

__all__ = [
    "ProofBuilder",
    "identity_proof",
    "discharge",
    "weaken",
    "restate",
    "cut",
    "concat_mp",
    "hypothetical_syllogism",
]

KS = Basis.of(Scheme.K, Scheme.S)


class ProofBuilder:
    """Append-only assembly of a proof.

    Every method returns the 1-based number of the step it added (or, for
    :meth:`include`, the number of the step carrying the included
    conclusion).  Hypotheses are added on first use.
    """

    def __init__(self, hypotheses: Iterable[Formula] = (), basis: Basis = KS):
        self.hypotheses: list[Formula] = list(hypotheses)
        self.steps: list = []
        self.basis = basis

    def __len__(self):
        return len(self.steps)

    def formula(self, n: int) -> Formula:
        return self.steps[n - 1].formula

    def _push(self, step) -> int:
        self.steps.append(step)
        return len(self.steps)

    def hyp_index(self, f: Formula) -> int:
        try:
            return self.hypotheses.index(f) + 1
        except ValueError:
            self.hypotheses.append(f)
            return len(self.hypotheses)

    def hyp(self, f: Formula) -> int:
        return self._push(Hyp(f, self.hyp_index(f)))

    def ax(self, scheme: Scheme, **subst: Formula) -> int:
        self.basis = self.basis | Basis(frozenset({scheme}))
        return self._push(Ax(instantiate(scheme, subst), scheme, dict(subst)))

    def mp(self, imp: int, ant: int) -> int:
        major, minor = self.formula(imp), self.formula(ant)
        if not isinstance(major, Imp) or major.antecedent != minor:
            raise ProofError("shape", f"cannot apply modus ponens: {render(major)} to {render(minor)}")
        return self._push(MP(major.consequent, imp, ant))

    def vee_e(self, left: int, right: int, a: Formula, b: Formula, q: Formula) -> int:
        if self.formula(left) != Imp(a, q) or self.formula(right) != Imp(b, q):
            raise ProofError("shape", "VE premises must state A -> Q and B -> Q")
        self.basis = self.basis | Basis(frozenset(), vee_e=True)
        return self._push(VeeE(Imp(Imp(Imp(a, b), b), q), left, right, a, b, q))

    def include(self, p: Proof, replace: Mapping[Formula, int] | None = None) -> int:
        """Copy the steps of ``p``, renumbering references.

        Hypothesis steps of ``p`` whose formula is a key of ``replace`` are not
        copied; references to them point at the given existing step instead.
        """
        replace = replace or {}
        for f, n in replace.items():
            if self.formula(n) != f:
                raise ProofError("shape", f"step {n} does not state {render(f)}")
        self.basis = self.basis | p.basis
        where: list[int] = []
        for step in p.steps:
            if isinstance(step, Hyp):
                if step.formula in replace:
                    where.append(replace[step.formula])
                else:
                    where.append(self.hyp(step.formula))
            elif isinstance(step, Ax):
                where.append(self._push(step))
            elif isinstance(step, MP):
                where.append(self._push(MP(step.formula, where[step.imp - 1], where[step.ant - 1])))
            else:
                where.append(self._push(VeeE(step.formula, where[step.left - 1], where[step.right - 1],
                                             step.a, step.b, step.q)))
        return where[-1]

    def build(self, hypotheses: Sequence[Formula] | None = None) -> Proof:
        p = Proof(tuple(self.hypotheses), tuple(self.steps), self.basis)
        return p if hypotheses is None else restate(p, hypotheses)


def identity_proof(a: Formula) -> Proof:
    """The five-step K/S derivation of ``a -> a``."""
    b = ProofBuilder()
    s1 = b.ax(Scheme.S, A=a, B=Imp(a, a), C=a)
    s2 = b.ax(Scheme.K, A=a, B=Imp(a, a))
    s3 = b.mp(s1, s2)
    s4 = b.ax(Scheme.K, A=a, B=a)
    b.mp(s3, s4)
    return b.build()


def restate(p: Proof, hypotheses: Sequence[Formula]) -> Proof:
    """Re-index ``p`` against a new hypothesis list that covers every used hypothesis."""
    hypotheses = tuple(hypotheses)
    steps = []
    for step in p.steps:
        if isinstance(step, Hyp):
            try:
                index = hypotheses.index(step.formula) + 1
            except ValueError:
                raise ProofError("hypothesis",
                                 f"hypothesis {render(step.formula)} is used but not declared") from None
            step = Hyp(step.formula, index)
        steps.append(step)
    return Proof(hypotheses, tuple(steps), p.basis)


def weaken(p: Proof, extra: Iterable[Formula]) -> Proof:
    check_proof(p)
    return Proof(p.hypotheses + tuple(extra), p.steps, p.basis)


def discharge(p: Proof, a: Formula) -> Proof:
    """Turn a proof of ``Γ ⊢ C`` into a proof of ``Γ minus a ⊢ a -> C``.

    Every occurrence of ``a`` is dropped from the hypotheses.  Steps stating
    ``a`` become an inlined identity proof, axioms and remaining hypotheses
    are lifted with K, and modus ponens steps are lifted with S.  Proofs
    containing a primitive VE step are rejected.
    """
    check_proof(p)
    if any(isinstance(s, VeeE) for s in p.steps):
        raise ProofError("discharge", "cannot discharge across primitive ∨E")
    out = ProofBuilder([h for h in p.hypotheses if h != a], p.basis.with_ks())
    lifted: list[int] = []
    for step in p.steps:
        f = step.formula
        if f == a:
            lifted.append(out.include(identity_proof(a)))
        elif isinstance(step, (Hyp, Ax)):
            n = out.hyp(f) if isinstance(step, Hyp) else out._push(step)
            k = out.ax(Scheme.K, A=f, B=a)
            lifted.append(out.mp(k, n))
        else:
            minor = p.steps[step.ant - 1].formula
            s = out.ax(Scheme.S, A=a, B=minor, C=f)
            m = out.mp(s, lifted[step.imp - 1])
            lifted.append(out.mp(m, lifted[step.ant - 1]))
    out.basis = p.basis.with_ks()
    return out.build()


def cut(lemma: Proof, p: Proof) -> Proof:
    """Replace hypothesis steps of ``p`` stating the lemma's conclusion by the lemma's proof."""
    check_proof(lemma)
    check_proof(p)
    h = lemma.steps[-1].formula
    rest = [x for x in p.hypotheses if x != h]
    out = ProofBuilder(rest + [x for x in lemma.hypotheses if x not in rest], p.basis | lemma.basis)
    n = out.include(lemma)
    out.include(p, replace={h: n})
    return out.build()


def _merge(*lists: Iterable[Formula]) -> list[Formula]:
    merged: list[Formula] = []
    for hs in lists:
        for h in hs:
            if h not in merged:
                merged.append(h)
    return merged


def concat_mp(p_imp: Proof, p_ant: Proof) -> Proof:
    """Combine proofs of ``X -> Y`` and ``X`` into a proof of ``Y``."""
    check_proof(p_imp)
    check_proof(p_ant)
    major, minor = p_imp.steps[-1].formula, p_ant.steps[-1].formula
    if not isinstance(major, Imp) or major.antecedent != minor:
        raise ProofError("shape", f"conclusion {render(major)} is not an implication with antecedent "
                         f"{render(minor)}")
    out = ProofBuilder(_merge(p_imp.hypotheses, p_ant.hypotheses), p_imp.basis | p_ant.basis)
    i = out.include(p_imp)
    j = out.include(p_ant)
    out.mp(i, j)
    return out.build()


def hypothetical_syllogism(a: Formula, b: Formula, c: Formula) -> Proof:
    """``[a -> b, b -> c] ⊢ a -> c`` by two modus ponens steps and one discharge."""
    ab, bc = Imp(a, b), Imp(b, c)
    out = ProofBuilder([ab, bc, a])
    x = out.hyp(a)
    y = out.mp(out.hyp(ab), x)
    out.mp(out.hyp(bc), y)
    return restate(discharge(out.build(), a), [ab, bc])
