"""Line-based text format for proofs.

::

    basis: K S P +VE
    hyp 1: p -> q
    hyp 2: p
    1. p -> q    hyp 1
    2. p    hyp 2
    3. q    mp 1 2
    4. <formula>    ax K A=<formula> B=<formula>
    5. <formula>    ve 2 3 A=<formula> B=<formula> Q=<formula>

``#`` starts a comment.  Every step states its formula; the justification
follows it.
"""

from __future__ import annotations

import re

from .formula import Formula, ParseError, Scheme, Var, parse, render, scheme_metavariables
from .kernel import MP, Ax, Basis, Hyp, Proof, VeeE

__all__ = ["ProofFormatError", "dumps", "loads", "read_proof", "write_proof"]


class ProofFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


_STEP_RE = re.compile(r"(\d+)\.\s+(.*)\Z")
_HYP_RE = re.compile(r"hyp\s+(\d+)\s*:\s*(.*)\Z")
_JUST_RE = re.compile(
    r"\s(?P<just>hyp\s+\d+|mp\s+\d+\s+\d+|ax\s+\S+(?:\s+[ABCQ]=.*)?|ve\s+\d+\s+\d+(?:\s+[ABCQ]=.*)?)\s*\Z"
)
_ASSIGN_SPLIT = re.compile(r"(?:^|\s+)([ABCQ])=")


def _justification(formula: Formula, just: str, line: int):
    head, *rest = just.split(None, 1)
    tail = rest[0] if rest else ""
    if head == "hyp":
        return Hyp(formula, int(tail))
    if head == "mp":
        imp, ant = tail.split()
        return MP(formula, int(imp), int(ant))
    # ax / ve: positional fields followed by Name=<formula> assignments
    m = _ASSIGN_SPLIT.search(tail)
    positional = tail[: m.start()].split() if m else tail.split()
    assigns = {}
    if m:
        parts = _ASSIGN_SPLIT.split(tail[m.start():])
        for name, text in zip(parts[1::2], parts[2::2]):
            if name in assigns:
                raise ProofFormatError(f"metavariable {name} assigned twice", line)
            try:
                assigns[name] = parse(text)
            except ParseError as exc:
                raise ProofFormatError(f"bad formula for {name}: {exc}", line) from None
    if head == "ax":
        if len(positional) != 1:
            raise ProofFormatError("ax takes a scheme name", line)
        try:
            scheme = Scheme.from_name(positional[0])
        except ValueError as exc:
            raise ProofFormatError(str(exc), line) from None
        return Ax(formula, scheme, assigns)
    if len(positional) != 2 or set(assigns) != {"A", "B", "Q"}:
        raise ProofFormatError("ve takes two step numbers and A=, B=, Q=", line)
    return VeeE(formula, int(positional[0]), int(positional[1]), assigns["A"], assigns["B"], assigns["Q"])


def _parse_step(body: str, line: int):
    # try every place a justification could start; the formula must parse
    candidates = []
    for m in re.finditer(r"\s(?=hyp\s|mp\s|ax\s|ve\s)", body):
        jm = _JUST_RE.match(body, m.start())
        if jm:
            candidates.append((body[: m.start()], jm.group("just")))
    errors = []
    for text, just in candidates:
        try:
            formula = parse(text)
        except ParseError as exc:
            errors.append(str(exc))
            continue
        return _justification(formula, just, line)
    if errors:
        raise ProofFormatError(errors[-1], line)
    raise ProofFormatError("missing or malformed justification", line)


def loads(text: str) -> Proof:
    basis = None
    hyps: dict[int, Formula] = {}
    steps = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("basis:"):
            if basis is not None:
                raise ProofFormatError("duplicate basis line", lineno)
            try:
                basis = Basis.parse(line[len("basis:"):])
            except ValueError as exc:
                raise ProofFormatError(str(exc), lineno) from None
            continue
        m = _HYP_RE.match(line)
        if m:
            k = int(m.group(1))
            if k != len(hyps) + 1:
                raise ProofFormatError(f"hypothesis {k} out of order", lineno)
            try:
                hyps[k] = parse(m.group(2))
            except ParseError as exc:
                raise ProofFormatError(str(exc), lineno) from None
            continue
        m = _STEP_RE.match(line)
        if m:
            k = int(m.group(1))
            if k != len(steps) + 1:
                raise ProofFormatError(f"step {k} out of order", lineno)
            steps.append(_parse_step(" " + m.group(2), lineno))
            continue
        raise ProofFormatError(f"unrecognised line {line!r}", lineno)
    if basis is None:
        raise ProofFormatError("missing basis line")
    return Proof(tuple(hyps[k] for k in sorted(hyps)), tuple(steps), basis)


def _operand(f: Formula) -> str:
    return f.name if isinstance(f, Var) else f"({render(f)})"


def _assign(names, values) -> str:
    return " ".join(f"{n}={_operand(values[n])}" for n in names)


def dumps(p: Proof) -> str:
    lines = [f"basis: {p.basis}"]
    for k, h in enumerate(p.hypotheses, start=1):
        lines.append(f"hyp {k}: {render(h)}")
    for k, s in enumerate(p.steps, start=1):
        if isinstance(s, Hyp):
            just = f"hyp {s.index}"
        elif isinstance(s, Ax):
            just = f"ax {s.scheme} {_assign(scheme_metavariables(s.scheme), s.subst)}"
        elif isinstance(s, MP):
            just = f"mp {s.imp} {s.ant}"
        else:
            just = f"ve {s.left} {s.right} {_assign('ABQ', {'A': s.a, 'B': s.b, 'Q': s.q})}"
        lines.append(f"{k}. {render(s.formula)}    {just}")
    return "\n".join(lines) + "\n"


def read_proof(path) -> Proof:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def write_proof(p: Proof, path) -> None:
    import os
    import tempfile

    text = dumps(p)
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".proof-")
    with os.fdopen(fd, "w", encoding="utf-8") as fh:
        fh.write(text)
    os.replace(tmp, path)
