"""Random formulas and random kernel-valid proofs, for property tests and sweeps."""

from __future__ import annotations

import random
from typing import Sequence

from .formula import Formula, Imp, Scheme, Var, instantiate
from .kernel import MP, Ax, Basis, Hyp, Proof

__all__ = ["random_formula", "random_proof"]


def random_formula(rng: random.Random, max_depth: int, names: Sequence[str] = ("p", "q", "r")) -> Formula:
    if max_depth <= 0 or rng.random() < 0.3:
        return Var(rng.choice(names))
    return Imp(random_formula(rng, max_depth - 1, names), random_formula(rng, max_depth - 1, names))


def random_proof(
    rng: random.Random,
    max_steps: int = 20,
    names: Sequence[str] = ("p", "q", "r"),
    schemes: Sequence[Scheme] = (Scheme.K, Scheme.S, Scheme.P),
    max_depth: int = 2,
) -> Proof:
    """Forward-generate a valid proof with 1 to ``max_steps`` steps.

    Modus ponens is taken whenever some pair of earlier steps allows it and a
    coin says so; axiom instances are often built around earlier formulas so
    that later modus ponens steps become available.
    """
    hyps = [random_formula(rng, max_depth, names) for _ in range(rng.randint(1, 3))]
    if rng.random() < 0.3:
        # an implication hypothesis whose antecedent is also a hypothesis
        hyps.append(Imp(rng.choice(hyps), random_formula(rng, max_depth, names)))
    steps: list = []
    n_steps = rng.randint(1, max_steps)

    def pick() -> Formula:
        if steps and rng.random() < 0.5:
            return rng.choice(steps).formula
        return random_formula(rng, max_depth, names)

    while len(steps) < n_steps:
        pairs = [(i, j) for i, si in enumerate(steps) if isinstance(si.formula, Imp)
                 for j, sj in enumerate(steps) if sj.formula == si.formula.antecedent]
        roll = rng.random()
        if pairs and roll < 0.45:
            i, j = rng.choice(pairs)
            steps.append(MP(steps[i].formula.consequent, i + 1, j + 1))
        elif roll < 0.7:
            k = rng.randrange(len(hyps))
            steps.append(Hyp(hyps[k], k + 1))
        else:
            scheme = rng.choice(list(schemes))
            if scheme is Scheme.K:
                sub = {"A": pick(), "B": pick()}
            elif scheme is Scheme.S:
                sub = {"A": pick(), "B": pick(), "C": pick()}
            elif scheme is Scheme.P:
                sub = {"A": pick(), "B": pick()}
            else:
                sub = {"A": pick(), "B": pick(), "Q": pick()}
            steps.append(Ax(instantiate(scheme, sub), scheme, sub))
    return Proof(tuple(hyps), tuple(steps), Basis(frozenset(schemes) | {Scheme.K, Scheme.S}))
