"""Implicational formulas: syntax trees, concrete syntax, schemes and truth tables.

The only connective is the conditional.  ``a \\/ b`` is accepted by the parser
but is rewritten on the spot to ``(a -> b) -> b``; no disjunction node exists.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping

import numpy as np

__all__ = [
    "Formula",
    "Var",
    "Imp",
    "ParseError",
    "TooLargeError",
    "Scheme",
    "SubstitutionError",
    "parse",
    "render",
    "or_of",
    "instantiate",
    "match_scheme",
    "scheme_metavariables",
    "evaluate",
    "truth_table",
    "is_tautology",
    "countervaluation",
    "variables",
    "depth",
    "size",
]

MAX_TAUTOLOGY_VARS = 24

_NAME_RE = re.compile(r"[a-z][a-z0-9]*\Z")


class Formula:
    """Base class of :class:`Var` and :class:`Imp`."""

    __slots__ = ()

    def __rshift__(self, other: Formula) -> Imp:
        # p >> q builds Imp(p, q); handy in tests and demos
        return Imp(self, other)

    def __str__(self) -> str:
        return render(self)


@dataclass(frozen=True, slots=True, eq=True)
class Var(Formula):
    name: str
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.name, str) or not _NAME_RE.match(self.name):
            raise ValueError(f"invalid variable name {self.name!r}")
        object.__setattr__(self, "_hash", hash(("var", self.name)))

    def __hash__(self) -> int:
        return self._hash


@dataclass(frozen=True, slots=True, eq=True)
class Imp(Formula):
    antecedent: Formula
    consequent: Formula
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.antecedent, Formula) or not isinstance(self.consequent, Formula):
            raise TypeError("Imp takes two formulas")
        object.__setattr__(self, "_hash", hash(("imp", self.antecedent, self.consequent)))

    def __hash__(self) -> int:
        return self._hash


class ParseError(ValueError):
    """Malformed concrete syntax.  ``offset`` is a 0-based character index."""

    def __init__(self, message: str, offset: int):
        super().__init__(message)
        self.offset = offset


class TooLargeError(ValueError):
    pass


class SubstitutionError(ValueError):
    pass


# ---------------------------------------------------------------------------
# concrete syntax

_TOKEN_RE = re.compile(r"\s*(?:(?P<var>[a-z][a-z0-9]*)|(?P<imp>->)|(?P<or>\\/)|(?P<lp>\()|(?P<rp>\)))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos:].strip() == "":
            break
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            bad = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ParseError(f"syntax error at offset {bad}: unexpected character {text[bad]!r}", bad)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def offset(self) -> int:
        tok = self.peek()
        return tok[2] if tok else len(self.text)

    def fail(self, what: str):
        raise ParseError(f"syntax error at offset {self.offset()}: {what}", self.offset())

    # disj := imp ("\/" disj)?      (looser, right-associative)
    def disj(self) -> Formula:
        left = self.imp()
        tok = self.peek()
        if tok and tok[0] == "or":
            self.i += 1
            right = self.disj()
            return or_of(left, right)
        return left

    # imp := atom ("->" imp)?
    def imp(self) -> Formula:
        left = self.atom()
        tok = self.peek()
        if tok and tok[0] == "imp":
            self.i += 1
            return Imp(left, self.imp())
        return left

    def atom(self) -> Formula:
        tok = self.peek()
        if tok is None:
            self.fail("expected formula, got end of input")
        kind, value, _ = tok
        if kind == "var":
            self.i += 1
            return Var(value)
        if kind == "lp":
            self.i += 1
            inner = self.disj()
            closing = self.peek()
            if closing is None or closing[0] != "rp":
                self.fail("expected ')'")
            self.i += 1
            return inner
        self.fail(f"expected formula, got {value!r}")


def _check_parens(text: str) -> None:
    stack = []
    for pos, ch in enumerate(text):
        if ch == "(":
            stack.append(pos)
        elif ch == ")":
            if not stack:
                raise ParseError(f"unbalanced parenthesis at offset {pos}", pos)
            stack.pop()
    if stack:
        raise ParseError(f"unbalanced parenthesis at offset {stack[-1]}", stack[-1])


def parse(text: str) -> Formula:
    """Parse concrete syntax into a :class:`Formula`.

    ``->`` is right-associative; ``\\/`` is right-associative and binds looser
    than ``->``.

    >>> render(parse("p \\\\/ q"))
    '(p -> q) -> q'
    """
    if not text.strip():
        raise ParseError("syntax error at offset 0: empty input", 0)
    _check_parens(text)
    p = _Parser(text)
    f = p.disj()
    if p.peek() is not None:
        p.fail(f"unexpected {p.peek()[1]!r}")
    return f


def render(f: Formula) -> str:
    if isinstance(f, Var):
        return f.name
    left = render(f.antecedent)
    if isinstance(f.antecedent, Imp):
        left = f"({left})"
    return f"{left} -> {render(f.consequent)}"


def or_of(a: Formula, b: Formula) -> Imp:
    """The abbreviation ``a \\/ b := (a -> b) -> b``."""
    return Imp(Imp(a, b), b)


# ---------------------------------------------------------------------------
# schemes


class Scheme(enum.Enum):
    P = "P"        # Peirce: ((A -> B) -> A) -> A
    K = "K"        # A -> (B -> A)
    S = "S"        # (A -> (B -> C)) -> ((A -> B) -> (A -> C))
    P_PRIME = "P'"  # (A -> Q) -> (((A -> B) -> Q) -> Q)

    @classmethod
    def from_name(cls, name: str) -> Scheme:
        name = name.strip().replace("′", "'")
        for s in cls:
            if s.value == name:
                return s
        raise ValueError(f"unknown axiom scheme {name!r}")

    def __str__(self) -> str:
        return self.value


_METAVARS = {
    Scheme.P: ("A", "B"),
    Scheme.K: ("A", "B"),
    Scheme.S: ("A", "B", "C"),
    Scheme.P_PRIME: ("A", "B", "Q"),
}


def scheme_metavariables(scheme: Scheme) -> tuple[str, ...]:
    return _METAVARS[scheme]


def instantiate(scheme: Scheme, subst: Mapping[str, Formula]) -> Formula:
    """Replace the metavariables of ``scheme`` by the formulas in ``subst``.

    ``subst`` must bind exactly the scheme's metavariables.
    """
    need = set(_METAVARS[scheme])
    have = set(subst)
    if need != have:
        missing = sorted(need - have)
        extra = sorted(have - need)
        parts = []
        if missing:
            parts.append("missing " + ", ".join(missing))
        if extra:
            parts.append("unexpected " + ", ".join(extra))
        raise SubstitutionError(f"bad substitution for scheme {scheme}: " + "; ".join(parts))
    for key, value in subst.items():
        if not isinstance(value, Formula):
            raise SubstitutionError(f"binding for {key} is not a formula")

    if scheme is Scheme.K:
        a, b = subst["A"], subst["B"]
        return Imp(a, Imp(b, a))
    if scheme is Scheme.S:
        a, b, c = subst["A"], subst["B"], subst["C"]
        return Imp(Imp(a, Imp(b, c)), Imp(Imp(a, b), Imp(a, c)))
    if scheme is Scheme.P:
        a, b = subst["A"], subst["B"]
        return Imp(Imp(Imp(a, b), a), a)
    a, b, q = subst["A"], subst["B"], subst["Q"]
    return Imp(Imp(a, q), Imp(Imp(Imp(a, b), q), q))


def _bind(env: dict, name: str, f: Formula) -> bool:
    if name in env:
        return env[name] == f
    env[name] = f
    return True


def match_scheme(scheme: Scheme, f: Formula) -> dict[str, Formula] | None:
    """Recover the substitution that makes ``scheme`` equal to ``f``, if any."""
    env: dict[str, Formula] = {}
    try:
        if scheme is Scheme.K:
            ok = _bind(env, "A", f.antecedent) and _bind(env, "B", f.consequent.antecedent) \
                and _bind(env, "A", f.consequent.consequent)
        elif scheme is Scheme.P:
            ok = _bind(env, "A", f.consequent) and _bind(env, "A", f.antecedent.consequent) \
                and _bind(env, "A", f.antecedent.antecedent.antecedent) \
                and _bind(env, "B", f.antecedent.antecedent.consequent)
        elif scheme is Scheme.S:
            left, right = f.antecedent, f.consequent
            ok = _bind(env, "A", left.antecedent) and _bind(env, "B", left.consequent.antecedent) \
                and _bind(env, "C", left.consequent.consequent) \
                and _bind(env, "A", right.antecedent.antecedent) \
                and _bind(env, "B", right.antecedent.consequent) \
                and _bind(env, "A", right.consequent.antecedent) \
                and _bind(env, "C", right.consequent.consequent)
        else:
            left, right = f.antecedent, f.consequent
            ok = _bind(env, "A", left.antecedent) and _bind(env, "Q", left.consequent) \
                and _bind(env, "A", right.antecedent.antecedent.antecedent) \
                and _bind(env, "B", right.antecedent.antecedent.consequent) \
                and _bind(env, "Q", right.antecedent.consequent) \
                and _bind(env, "Q", right.consequent)
    except AttributeError:
        return None
    if not ok:
        return None
    return env if instantiate(scheme, env) == f else None


# ---------------------------------------------------------------------------
# semantics


def variables(f: Formula) -> list[str]:
    """Distinct variable names in left-to-right first-occurrence order."""
    seen: dict[str, None] = {}
    stack = [f]
    while stack:
        g = stack.pop()
        if isinstance(g, Var):
            seen.setdefault(g.name, None)
        else:
            stack.append(g.consequent)
            stack.append(g.antecedent)
    return list(seen)


def depth(f: Formula) -> int:
    if isinstance(f, Var):
        return 0
    return 1 + max(depth(f.antecedent), depth(f.consequent))


def size(f: Formula) -> int:
    if isinstance(f, Var):
        return 1
    return 1 + size(f.antecedent) + size(f.consequent)


def evaluate(f: Formula, valuation: Mapping[str, int | bool]) -> int:
    if isinstance(f, Var):
        try:
            value = valuation[f.name]
        except KeyError:
            raise KeyError(f"valuation does not assign variable {f.name!r}") from None
        return 1 if value else 0
    if evaluate(f.antecedent, valuation) and not evaluate(f.consequent, valuation):
        return 0
    return 1


def truth_table(f: Formula, names: Iterable[str] | None = None) -> np.ndarray:
    """Values of ``f`` under every valuation of ``names``, as a boolean array.

    Entry ``i`` is the valuation whose binary expansion, most significant bit
    first, gives the values of ``names`` in order.
    """
    names = variables(f) if names is None else list(names)
    n = len(names)
    if n > MAX_TAUTOLOGY_VARS:
        raise TooLargeError(f"{n} variables exceeds the limit of {MAX_TAUTOLOGY_VARS}")
    missing = set(variables(f)) - set(names)
    if missing:
        raise KeyError(f"valuation does not assign variable {sorted(missing)[0]!r}")
    index = np.arange(1 << n, dtype=np.uint32)
    columns = {name: ((index >> (n - 1 - k)) & 1).astype(bool) for k, name in enumerate(names)}
    memo: dict[Formula, np.ndarray] = {}

    def table(g: Formula) -> np.ndarray:
        if isinstance(g, Var):
            return columns[g.name]
        out = memo.get(g)
        if out is None:
            out = ~table(g.antecedent) | table(g.consequent)
            memo[g] = out
        return out

    return table(f)


def is_tautology(f: Formula) -> bool:
    return bool(truth_table(f).all())


def countervaluation(f: Formula) -> dict[str, int] | None:
    """First falsifying valuation in table order, or None for a tautology."""
    names = variables(f)
    tt = truth_table(f, names)
    bad = np.flatnonzero(~tt)
    if bad.size == 0:
        return None
    i = int(bad[0])
    n = len(names)
    return {name: (i >> (n - 1 - k)) & 1 for k, name in enumerate(names)}
