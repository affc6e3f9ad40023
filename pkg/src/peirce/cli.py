"""Command-line entry point.

Exit codes: 0 success, 2 usage or parse error, 3 proof error, 4 failed
verification.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import lindenbaum as lb
from .deduction import discharge
from .formula import Formula, Imp, ParseError, TooLargeError, countervaluation, parse, render
from .kernel import Basis, ProofError, check_proof
from .proofio import ProofFormatError, dumps, read_proof, write_proof
from .theorems import CONSTRUCTORS, verify_paper

EXIT_OK, EXIT_USAGE, EXIT_PROOF, EXIT_VERIFY = 0, 2, 3, 4


class _Usage(Exception):
    pass


def _formula(text: str) -> Formula:
    try:
        return parse(text)
    except ParseError as exc:
        raise _Usage(str(exc)) from None


def _tree(f: Formula) -> str:
    if isinstance(f, Imp):
        return f"Imp({_tree(f.antecedent)}, {_tree(f.consequent)})"
    return f.name


def cmd_parse(args) -> int:
    f = _formula(args.expr)
    print(render(f))
    print(f"tree: {_tree(f)}")
    return EXIT_OK


def cmd_taut(args) -> int:
    f = _formula(args.expr)
    try:
        cv = countervaluation(f)
    except TooLargeError as exc:
        raise _Usage(str(exc)) from None
    if cv is None:
        print("tautology")
    else:
        print("countervaluation " + " ".join(f"{k}={v}" for k, v in cv.items()))
    return EXIT_OK


def _load(path):
    try:
        return read_proof(path)
    except OSError as exc:
        raise _Usage(f"cannot read {path}: {exc.strerror}") from None
    except ProofFormatError as exc:
        raise _Usage(f"{path}: {exc}") from None


def _basis(text):
    try:
        return Basis.parse(text)
    except ValueError as exc:
        raise _Usage(str(exc)) from None


def cmd_check(args) -> int:
    proof = _load(args.file)
    basis = _basis(args.basis) if args.basis else None
    judgment = check_proof(proof, basis)
    print(judgment)
    return EXIT_OK


def _emit(proof, out) -> None:
    if out:
        write_proof(proof, out)
    else:
        sys.stdout.write(dumps(proof))


def cmd_prove(args) -> int:
    c = CONSTRUCTORS[args.name]
    kw = {}
    for m in c.metavariables:
        value = getattr(args, m)
        if value is None:
            raise _Usage(f"{args.name} needs --{m}")
        kw[m] = _formula(value)
    proof = c.run(**kw)
    judgment = check_proof(proof)
    print(judgment)
    _emit(proof, args.out)
    return EXIT_OK


def cmd_discharge(args) -> int:
    proof = _load(args.file)
    out = discharge(proof, _formula(args.formula))
    print(check_proof(out))
    _emit(out, args.out)
    return EXIT_OK


def _write(path, text):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def cmd_poset(args) -> int:
    try:
        u = lb.enumerate_universe(args.vars, args.depth)
    except lb.BoundsError as exc:
        raise _Usage(str(exc)) from None
    ps = lb.build_poset(u)
    laws = lb.order_laws(ps)
    join = lb.check_join(ps, u, witnesses=not args.no_witnesses)
    tb = lb.check_top_bottom(ps)
    if args.dot:
        _write(args.dot, lb.export_dot(ps))
    if args.json:
        _write(args.json, json.dumps(lb.poset_report(u, ps, join, tb), indent=2, ensure_ascii=False) + "\n")

    n = len(ps)
    print(f"{len(u)} formulas, {n} classes, {len(ps.hasse_edges)} Hasse edges")
    print("order laws: " + ", ".join(f"{k}={'ok' if v else 'FAIL'}" for k, v in laws.items()))
    if join.ok:
        print(f"sup = [(A->B)->B] verified for {n}^2 = {join.pairs} pairs "
              f"({join.intro_witnesses} intro and {join.elim_witnesses} elim proofs checked)")
    else:
        print(f"join check FAILED: {len(join.violations)} violations")
        for v in join.violations[:20]:
            print(f"  {v}")
    top = render(ps.classes[tb.top].representative) if tb.top is not None else "none"
    print(f"top: [{top}] ({'unique maximum' if tb.top_is_maximum and tb.top_unique else 'NOT a unique maximum'})")
    minimal = ", ".join(f"[{render(ps.classes[k].representative)}]" for k in tb.minimal)
    print(f"minimal in this bounded universe: {minimal} (not a bottom of the full poset)")
    print(f"all-ones valuation: {'every class true' if tb.all_ones else 'FAIL'}; "
          f"classes entailing fresh {tb.fresh_variable}: {len(tb.entails_fresh)}")
    ok = all(laws.values()) and join.ok and tb.ok
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_verify_paper(args) -> int:
    report = verify_paper(trials=args.trials, seed=args.seed)
    print(report.format())
    u = lb.enumerate_universe(2, 3)
    ps = lb.build_poset(u)
    join = lb.check_join(ps, u)
    tb = lb.check_top_bottom(ps)
    laws = lb.order_laws(ps)
    poset_ok = all(laws.values()) and join.ok and tb.ok
    print(f"Theorem 5 on (2 variables, depth 3): {len(ps)} classes, {join.pairs} pairs, "
          f"{'ok' if poset_ok else 'FAIL'}")
    return EXIT_OK if report.ok and poset_ok else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="peirce", description="Implicational calculus toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="parse and render a formula")
    p.add_argument("expr")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("taut", help="decide tautology-hood by truth table")
    p.add_argument("expr")
    p.set_defaults(func=cmd_taut)

    p = sub.add_parser("check", help="check a proof file")
    p.add_argument("file")
    p.add_argument("--basis", help="override basis, e.g. K,S,P or K,S+VE")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("prove", help="run a proof constructor")
    p.add_argument("name", choices=sorted(CONSTRUCTORS))
    for m in "ABCQ":
        p.add_argument(f"--{m}", dest=m, metavar="FORMULA")
    p.add_argument("--out", help="write the proof here instead of stdout")
    p.set_defaults(func=cmd_prove)

    p = sub.add_parser("discharge", help="apply the deduction theorem to a proof file")
    p.add_argument("file")
    p.add_argument("formula")
    p.add_argument("--out")
    p.set_defaults(func=cmd_discharge)

    p = sub.add_parser("poset", help="build the quotient poset of a bounded universe")
    p.add_argument("--vars", type=int, default=2)
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("--dot")
    p.add_argument("--json")
    p.add_argument("--no-witnesses", action="store_true", help="skip the proof witnesses for joins")
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser("verify-paper", help="check every construction and the join theorem")
    p.add_argument("--trials", type=int, default=25)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify_paper)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Usage as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ProofError as exc:
        print(f"proof error: {exc}", file=sys.stderr)
        return EXIT_PROOF


if __name__ == "__main__":
    sys.exit(main())
