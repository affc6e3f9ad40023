"""Quotient poset of a bounded formula universe under provable equivalence.

Classes are computed from truth tables, which presumes the classical
completeness of {P, K, S} for the implicational fragment: ``a <= b`` is
read as "``a -> b`` is a tautology".  The join checks additionally build
kernel-checked proofs for the upper-bound and leastness halves, and those do
not depend on that assumption.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .formula import Formula, Imp, Var, evaluate, is_tautology, or_of, render, truth_table
from .kernel import ProofError, check_proof

__all__ = [
    "MAX_FORMULAS",
    "BoundsError",
    "Universe",
    "EquivClass",
    "Poset",
    "variable_names",
    "universe_size",
    "enumerate_universe",
    "semantic_leq",
    "build_poset",
    "order_laws",
    "check_join",
    "check_top_bottom",
    "leq_witness",
    "export_dot",
    "poset_report",
]

MAX_FORMULAS = 10**6
MAX_VARIABLES = 16


class BoundsError(ValueError):
    pass


def variable_names(n: int) -> list[str]:
    letters = "pqrstuvw"
    return [letters[k] if k < len(letters) else f"p{k}" for k in range(n)]


def universe_size(variable_count: int, max_depth: int) -> int:
    """Number of distinct formulas with nesting depth at most ``max_depth``."""
    total = variable_count
    for _ in range(max_depth):
        total = variable_count + total * total
        if total > MAX_FORMULAS:
            # stop growing; only the comparison with the cap matters past here
            return total
    return total


@dataclass
class Universe:
    variable_count: int
    max_depth: int
    formulas: list
    names: list
    depths: np.ndarray
    tables: np.ndarray  # (len(formulas), 2**variable_count) bool

    def __len__(self):
        return len(self.formulas)


def enumerate_universe(variable_count: int, max_depth: int) -> Universe:
    """All implicational formulas over the first ``variable_count`` variables up to ``max_depth``.

    Formulas come in order of increasing depth; those of depth ``d`` are the
    pairs ``Imp(x, y)`` with at least one component of depth ``d - 1``,
    ordered lexicographically by the positions of ``x`` and ``y``.
    """
    if variable_count < 1 or max_depth < 0:
        raise BoundsError("need at least one variable and a non-negative depth")
    if variable_count > MAX_VARIABLES:
        raise BoundsError(f"at most {MAX_VARIABLES} variables are supported")
    count = universe_size(variable_count, max_depth)
    if count > MAX_FORMULAS:
        raise BoundsError(f"universe ({variable_count} variables, depth {max_depth}) exceeds "
                          f"{MAX_FORMULAS} formulas")

    names = variable_names(variable_count)
    formulas: list[Formula] = [Var(x) for x in names]
    depths = np.zeros(variable_count, dtype=np.int64)
    tables = np.stack([truth_table(f, names) for f in formulas])
    for d in range(1, max_depth + 1):
        m = len(formulas)
        i, j = np.meshgrid(np.arange(m), np.arange(m), indexing="ij")
        i, j = i.ravel(), j.ravel()
        keep = (depths[i] == d - 1) | (depths[j] == d - 1)
        i, j = i[keep], j[keep]
        formulas.extend(Imp(formulas[x], formulas[y]) for x, y in zip(i.tolist(), j.tolist()))
        depths = np.concatenate([depths, np.full(len(i), d)])
        tables = np.concatenate([tables, ~tables[i] | tables[j]])
    return Universe(variable_count, max_depth, formulas, names, depths, tables)


def semantic_leq(a: Formula, b: Formula) -> bool:
    return is_tautology(Imp(a, b))


@dataclass
class EquivClass:
    representative: Formula
    members: list
    truth_table: np.ndarray

    @property
    def bits(self) -> str:
        return "".join("1" if v else "0" for v in self.truth_table)


@dataclass
class Poset:
    names: list
    classes: list
    leq: np.ndarray
    hasse_edges: list = field(default_factory=list)

    def __len__(self):
        return len(self.classes)

    def class_of(self, f: Formula) -> int | None:
        """Index of the class with ``f``'s truth table, or None if absent."""
        key = truth_table(f, self.names).tobytes()
        return self._index.get(key)

    def __post_init__(self):
        self._index = {c.truth_table.tobytes(): k for k, c in enumerate(self.classes)}


def build_poset(u: Universe) -> Poset:
    first: dict[bytes, int] = {}
    members: list[list[Formula]] = []
    tables = []
    for f, row in zip(u.formulas, u.tables):
        key = row.tobytes()
        k = first.get(key)
        if k is None:
            first[key] = k = len(members)
            members.append([])
            tables.append(row.copy())
        members[k].append(f)
    classes = [EquivClass(ms[0], ms, t) for ms, t in zip(members, tables)]
    n = len(classes)
    leq = np.zeros((n, n), dtype=bool)
    for x in range(n):
        for y in range(n):
            leq[x, y] = semantic_leq(classes[x].representative, classes[y].representative)
    strict = leq & ~np.eye(n, dtype=bool)
    s = strict.astype(np.int64)
    cover = strict & ~((s @ s) > 0)
    edges = [(int(x), int(y)) for x, y in zip(*np.nonzero(cover))]
    return Poset(list(u.names), classes, leq, edges)


def order_laws(ps: Poset) -> dict[str, bool]:
    leq = ps.leq
    s = leq.astype(np.int64)
    return {
        "reflexive": bool(np.all(np.diag(leq))),
        "antisymmetric": not bool(np.any(leq & leq.T & ~np.eye(len(ps), dtype=bool))),
        "transitive": bool(np.all(leq | ~((s @ s) > 0))),
    }


@dataclass
class JoinReport:
    pairs: int = 0
    join: list = field(default_factory=list)  # join[i][j] = class index or None
    violations: list = field(default_factory=list)
    intro_witnesses: int = 0
    elim_witnesses: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations


def check_join(ps: Poset, u: Universe | None = None, witnesses: bool = True) -> JoinReport:
    """Check that the class of ``(a -> b) -> b`` is the least upper bound of ``[a]`` and ``[b]``.

    With ``witnesses``, every upper-bound relation is backed by a checked
    introduction proof and every leastness relation by a checked elimination
    proof on the representatives.
    """
    from .theorems import check_construction, CONSTRUCTORS

    n = len(ps)
    report = JoinReport(join=[[None] * n for _ in range(n)])
    leq = ps.leq
    for i in range(n):
        a = ps.classes[i].representative
        for j in range(n):
            b = ps.classes[j].representative
            report.pairs += 1
            c = ps.class_of(or_of(a, b))
            report.join[i][j] = c
            if c is None:
                report.violations.append(f"[{render(a)}] v [{render(b)}]: join class not in universe")
                continue
            if not (leq[i, c] and leq[j, c]):
                report.violations.append(f"[{render(a)}] v [{render(b)}] is not an upper bound")
            for k in np.flatnonzero(leq[i] & leq[j]):
                if not leq[c, k]:
                    report.violations.append(f"[{render(a)}] v [{render(b)}] is not below "
                                             f"[{render(ps.classes[k].representative)}]")
            if not witnesses:
                continue
            try:
                check_construction(CONSTRUCTORS["or-intro-left"], A=a, B=b)
                check_construction(CONSTRUCTORS["or-intro-right"], A=a, B=b)
                report.intro_witnesses += 2
                for k in np.flatnonzero(leq[i] & leq[j]):
                    check_construction(CONSTRUCTORS["or-elim"], A=a, B=b, Q=ps.classes[k].representative)
                    report.elim_witnesses += 1
            except ProofError as exc:
                report.violations.append(f"witness for [{render(a)}] v [{render(b)}] failed: {exc}")
    return report


@dataclass
class TopBottomReport:
    top: int | None
    top_is_maximum: bool
    top_unique: bool
    all_ones: bool
    fresh_variable: str
    entails_fresh: list
    minimal: list

    @property
    def ok(self) -> bool:
        return self.top is not None and self.top_is_maximum and self.top_unique and self.all_ones \
            and not self.entails_fresh


def _fresh(names: list[str]) -> str:
    for cand in ["z", "zz", "fresh"]:
        if cand not in names:
            return cand
    k = 0
    while f"z{k}" in names:
        k += 1
    return f"z{k}"


def check_top_bottom(ps: Poset) -> TopBottomReport:
    p = Var(ps.names[0])
    top = ps.class_of(Imp(p, p))
    dominating = [k for k in range(len(ps)) if ps.leq[:, k].all()]
    ones = {x: 1 for x in ps.names}
    z = Var(_fresh(ps.names))
    reps = [c.representative for c in ps.classes]
    return TopBottomReport(
        top=top,
        top_is_maximum=top is not None and bool(ps.leq[:, top].all()),
        top_unique=dominating == ([top] if top is not None else []),
        all_ones=all(evaluate(f, ones) == 1 for f in reps),
        fresh_variable=z.name,
        entails_fresh=[k for k, f in enumerate(reps) if semantic_leq(f, z)],
        minimal=[k for k in range(len(ps)) if not any(ps.leq[j, k] for j in range(len(ps)) if j != k)],
    )


def _dot_label(f: Formula) -> str:
    return json.dumps(render(f), ensure_ascii=False)


def leq_witness(a: Formula, b: Formula):
    """A checked proof of ``[a] ⊢ b`` when the pair has a shape the theorem library covers, else None.

    Covered shapes: ``b == a``; ``b == x -> a`` (K); ``b == a \\/ x`` and
    ``b == x \\/ a`` (disjunction introduction); ``a == (b -> x) -> b``
    (Peirce); and ``b`` an instance of K, S or Peirce, or of the form ``x -> x``.
    """
    from .deduction import ProofBuilder, identity_proof
    from .formula import Scheme, match_scheme
    from .theorems import prove_or_intro_left, prove_or_intro_right

    out = ProofBuilder([a])
    if b == a:
        out.hyp(a)
    elif isinstance(b, Imp) and b.consequent == a:
        k = out.ax(Scheme.K, A=a, B=b.antecedent)
        out.mp(k, out.hyp(a))
    elif isinstance(b, Imp) and isinstance(b.antecedent, Imp) and b.antecedent.antecedent == a \
            and b.antecedent.consequent == b.consequent:
        out.include(prove_or_intro_left(a, b.consequent))
    elif isinstance(b, Imp) and isinstance(b.antecedent, Imp) and b.consequent == a \
            and b.antecedent.consequent == a:
        out.include(prove_or_intro_right(b.antecedent.antecedent, a))
    elif match_scheme(Scheme.P, Imp(a, b)) is not None:
        sub = match_scheme(Scheme.P, Imp(a, b))
        n = out.ax(Scheme.P, **sub)
        out.mp(n, out.hyp(a))
    elif isinstance(b, Imp) and b.antecedent == b.consequent:
        out.include(identity_proof(b.antecedent))
    else:
        for scheme in (Scheme.K, Scheme.S, Scheme.P):
            sub = match_scheme(scheme, b)
            if sub is not None:
                out.ax(scheme, **sub)
                break
        else:
            return None
    proof = out.build([a])
    check_proof(proof)
    return proof


def export_dot(ps: Poset) -> str:
    """Hasse diagram as a DOT digraph; edges point from lower to upper class."""
    lines = ["digraph lindenbaum {", "  rankdir=BT;"]
    for k, c in enumerate(ps.classes):
        lines.append(f"  n{k} [label={_dot_label(c.representative)}];")
    for x, y in ps.hasse_edges:
        lines.append(f"  n{x} -> n{y};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def poset_report(u: Universe, ps: Poset, join: JoinReport, tb: TopBottomReport) -> dict:
    """JSON-serialisable summary with a fixed key order."""
    return {
        "variables": list(u.names),
        "max_depth": u.max_depth,
        "formula_count": len(u),
        "class_count": len(ps),
        "classes": [
            {
                "index": k,
                "representative": render(c.representative),
                "size": len(c.members),
                "truth_table": c.bits,
            }
            for k, c in enumerate(ps.classes)
        ],
        "leq": [[int(v) for v in row] for row in ps.leq],
        "hasse_edges": [list(e) for e in ps.hasse_edges],
        "order_laws": order_laws(ps),
        "join": join.join,
        "join_pairs_checked": join.pairs,
        "witnesses": {"intro": join.intro_witnesses, "elim": join.elim_witnesses},
        "top": tb.top,
        "top_unique": tb.top_unique,
        "minimal": tb.minimal,
        "fresh_variable": tb.fresh_variable,
        "entails_fresh": tb.entails_fresh,
        "violations": list(join.violations),
    }
