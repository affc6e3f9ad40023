"""Trusted checker for Hilbert-style proofs over a configurable axiom basis.

A proof is a list of steps, each stating its formula and how it is
justified.  The checker never infers anything: it re-instantiates axiom
schemes, compares stated formulas structurally and gates every scheme and
the primitive disjunction-elimination rule on the basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Union

from .formula import Formula, Imp, Scheme, SubstitutionError, instantiate, or_of, render

__all__ = [
    "Basis",
    "Hyp",
    "Ax",
    "MP",
    "VeeE",
    "Step",
    "Proof",
    "Judgment",
    "ProofError",
    "check_proof",
    "conclusion_of",
    "axioms_used",
    "uses_vee_e",
]


@dataclass(frozen=True)
class Basis:
    schemes: frozenset = frozenset({Scheme.K, Scheme.S})
    vee_e: bool = False

    def __post_init__(self):
        object.__setattr__(self, "schemes", frozenset(self.schemes))

    @classmethod
    def of(cls, *schemes: Scheme | str, vee_e: bool = False) -> Basis:
        return cls(frozenset(s if isinstance(s, Scheme) else Scheme.from_name(s) for s in schemes), vee_e)

    @classmethod
    def parse(cls, text: str) -> Basis:
        """Read ``"K,S,P"``, ``"K S P' +VE"`` or ``"K,S+VE"``."""
        vee_e = False
        cleaned = text.replace("+VE", " ").replace("+ve", " ")
        if cleaned != text:
            vee_e = True
        names = [t for t in cleaned.replace(",", " ").split() if t]
        return cls.of(*names, vee_e=vee_e)

    def __or__(self, other: Basis) -> Basis:
        return Basis(self.schemes | other.schemes, self.vee_e or other.vee_e)

    def __le__(self, other: Basis) -> bool:
        return self.schemes <= other.schemes and (other.vee_e or not self.vee_e)

    def with_ks(self) -> Basis:
        return Basis(self.schemes | {Scheme.K, Scheme.S}, self.vee_e)

    def names(self) -> list[str]:
        order = [Scheme.K, Scheme.S, Scheme.P, Scheme.P_PRIME]
        return [s.value for s in order if s in self.schemes]

    def __str__(self) -> str:
        return " ".join(self.names()) + (" +VE" if self.vee_e else "")


# Steps -------------------------------------------------------------------


@dataclass(frozen=True)
class Hyp:
    formula: Formula
    index: int  # 1-based into Proof.hypotheses


@dataclass(frozen=True)
class Ax:
    formula: Formula
    scheme: Scheme
    subst: Mapping[str, Formula]

    def __hash__(self):
        return hash((self.formula, self.scheme, tuple(sorted(self.subst.items(), key=lambda kv: kv[0]))))


@dataclass(frozen=True)
class MP:
    formula: Formula
    imp: int  # step stating X -> Y
    ant: int  # step stating X


@dataclass(frozen=True)
class VeeE:
    formula: Formula
    left: int   # step stating a -> q
    right: int  # step stating b -> q
    a: Formula
    b: Formula
    q: Formula


Step = Union[Hyp, Ax, MP, VeeE]


@dataclass(frozen=True)
class Proof:
    hypotheses: tuple
    steps: tuple
    basis: Basis = field(default_factory=Basis)

    def __post_init__(self):
        object.__setattr__(self, "hypotheses", tuple(self.hypotheses))
        object.__setattr__(self, "steps", tuple(self.steps))

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def conclusion(self) -> Formula:
        return conclusion_of(self)


@dataclass(frozen=True)
class Judgment:
    hypotheses: tuple
    conclusion: Formula
    basis: Basis

    def __str__(self) -> str:
        hyps = ", ".join(render(h) for h in self.hypotheses)
        return f"{hyps} ⊢ {render(self.conclusion)}" if hyps else f"⊢ {render(self.conclusion)}"


class ProofError(Exception):
    """A step failed to validate.

    ``kind`` is one of ``empty``, ``reference``, ``hypothesis``, ``mismatch``,
    ``basis``, ``substitution``, ``mp-shape``, ``vee-disabled``,
    ``vee-shape``, ``discharge``, ``shape``.
    """

    def __init__(self, kind: str, message: str, step: int | None = None):
        super().__init__(message)
        self.kind = kind
        self.step = step


def conclusion_of(p: Proof) -> Formula:
    if not p.steps:
        raise ProofError("empty", "proof has no steps")
    return p.steps[-1].formula


def _ref(n: int, target: int) -> None:
    if not isinstance(target, int) or target < 1 or target >= n:
        raise ProofError("reference", f"step {n} references step {target}", n)


def check_proof(p: Proof, basis: Basis | None = None) -> Judgment:
    """Validate every step of ``p`` and return the judgment it establishes.

    ``basis`` overrides ``p.basis`` when given.  Raises :class:`ProofError`
    on the first failing step.
    """
    basis = p.basis if basis is None else basis
    if not p.steps:
        raise ProofError("empty", "proof has no steps")
    hyps = p.hypotheses
    stated: list[Formula] = []
    for n, step in enumerate(p.steps, start=1):
        f = step.formula
        if not isinstance(f, Formula):
            raise ProofError("mismatch", f"step {n} does not state a formula", n)
        if isinstance(step, Hyp):
            if not 1 <= step.index <= len(hyps):
                raise ProofError("hypothesis", f"hypothesis index {step.index} out of range at step {n}", n)
            if hyps[step.index - 1] != f:
                raise ProofError("mismatch", f"step {n} states {render(f)} but hypothesis {step.index} is "
                                 f"{render(hyps[step.index - 1])}", n)
        elif isinstance(step, Ax):
            if step.scheme not in basis.schemes:
                raise ProofError("basis", f"axiom scheme {step.scheme} not in basis at step {n}", n)
            try:
                expected = instantiate(step.scheme, step.subst)
            except SubstitutionError as exc:
                raise ProofError("substitution", f"step {n}: {exc}", n) from None
            if expected != f:
                raise ProofError("mismatch", f"step {n} states {render(f)} but the {step.scheme} instance is "
                                 f"{render(expected)}", n)
        elif isinstance(step, MP):
            _ref(n, step.imp)
            _ref(n, step.ant)
            major, minor = stated[step.imp - 1], stated[step.ant - 1]
            if not isinstance(major, Imp) or major.antecedent != minor:
                raise ProofError("mp-shape", f"step {n}: step {step.imp} is not an implication with "
                                 f"antecedent stated by step {step.ant}", n)
            if major.consequent != f:
                raise ProofError("mismatch", f"step {n} states {render(f)} but modus ponens yields "
                                 f"{render(major.consequent)}", n)
        elif isinstance(step, VeeE):
            if not basis.vee_e:
                raise ProofError("vee-disabled", f"rule VE used at step {n} but not enabled in basis", n)
            _ref(n, step.left)
            _ref(n, step.right)
            if stated[step.left - 1] != Imp(step.a, step.q) or stated[step.right - 1] != Imp(step.b, step.q):
                raise ProofError("vee-shape", f"step {n}: premises {step.left}, {step.right} do not state "
                                 f"A -> Q and B -> Q", n)
            expected = Imp(or_of(step.a, step.b), step.q)
            if expected != f:
                raise ProofError("mismatch", f"step {n} states {render(f)} but VE yields {render(expected)}", n)
        else:
            raise ProofError("mismatch", f"step {n} has unknown justification {type(step).__name__}", n)
        stated.append(f)
    return Judgment(tuple(hyps), stated[-1], basis)


def axioms_used(p: Proof) -> frozenset:
    return frozenset(s.scheme for s in p.steps if isinstance(s, Ax))


def uses_vee_e(p: Proof) -> bool:
    return any(isinstance(s, VeeE) for s in p.steps)


def hypotheses_used(p: Proof) -> list[Formula]:
    idx = sorted({s.index for s in p.steps if isinstance(s, Hyp)})
    return [p.hypotheses[i - 1] for i in idx]

