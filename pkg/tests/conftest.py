import itertools
import random

import pytest
from hypothesis import strategies as st

import peirce
import peirce.cli
import peirce.deduction
import peirce.kernel
import peirce.lindenbaum
import peirce.theorems
from peirce.formula import Imp, Var, evaluate, variables

NAMES = ["p", "q", "r"]

# Every proof the kernel accepts during the session lands here, so that the
# soundness sweep can look at all of them.
ACCEPTED = {"closed": 0, "open": 0, "unsound": []}


def brute_tautology(f):
    """Independent oracle: enumerate valuations with itertools and evaluate()."""
    names = variables(f)
    return all(evaluate(f, dict(zip(names, bits))) for bits in itertools.product((0, 1), repeat=len(names)))


def _recording(check):
    def wrapper(p, basis=None):
        j = check(p, basis)
        if j.hypotheses:
            ACCEPTED["open"] += 1
        else:
            ACCEPTED["closed"] += 1
            if len(variables(j.conclusion)) <= 10 and not brute_tautology(j.conclusion):
                ACCEPTED["unsound"].append(j)
        return j

    wrapper.__wrapped__ = check
    return wrapper


# Installed at import time so that test modules importing check_proof by name
# also get the recording version.
_ORIGINAL_CHECK = peirce.kernel.check_proof
_RECORDING_CHECK = _recording(_ORIGINAL_CHECK)
for _mod in (peirce, peirce.kernel, peirce.deduction, peirce.theorems, peirce.lindenbaum, peirce.cli):
    _mod.check_proof = _RECORDING_CHECK


def formulas(max_leaves=12, names=NAMES):
    return st.recursive(
        st.sampled_from(names).map(Var),
        lambda inner: st.builds(Imp, inner, inner),
        max_leaves=max_leaves,
    )


def random_formula(rng, max_depth, names=NAMES):
    from peirce.sampling import random_formula as rf

    return rf(rng, max_depth, names)


@pytest.fixture
def rng():
    return random.Random(20261016)


p, q, r = Var("p"), Var("q"), Var("r")


# Acceptance criteria register one line each here; the terminal summary prints them.
ACCEPTANCE = []


def pytest_configure(config):
    config.addinivalue_line("markers", "run_last: run after every other test in the session")


def pytest_collection_modifyitems(session, config, items):
    items.sort(key=lambda item: item.get_closest_marker("run_last") is not None)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
