import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_tautology, formulas, p, q, r
from peirce.formula import (
    Imp,
    ParseError,
    Scheme,
    SubstitutionError,
    TooLargeError,
    Var,
    countervaluation,
    evaluate,
    instantiate,
    is_tautology,
    match_scheme,
    or_of,
    parse,
    render,
    truth_table,
    variables,
)


class TestParse:
    def test_right_associative(self):
        assert parse("p -> q -> p") == Imp(p, Imp(q, p))

    def test_peirce_instance(self):
        assert parse("((p -> q) -> p) -> p") == instantiate(Scheme.P, {"A": p, "B": q})

    def test_disjunction_is_desugared(self):
        assert parse("p \\/ q") == Imp(Imp(p, q), q)

    def test_disjunction_binds_looser(self):
        assert parse("p -> q \\/ r") == or_of(Imp(p, q), r)
        assert parse("p \\/ q -> r") == or_of(p, Imp(q, r))

    def test_disjunction_right_associative(self):
        assert parse("p \\/ q \\/ r") == or_of(p, or_of(q, r))

    def test_whitespace_insignificant(self):
        assert parse("  (p->q)->\tq ") == parse("(p -> q) -> q")

    def test_identifiers(self):
        assert parse("foo1 -> bar") == Imp(Var("foo1"), Var("bar"))

    @pytest.mark.parametrize(
        "text, offset",
        [
            ("p ->", 4),
            ("", 0),
            ("   ", 0),
            ("(p ->", 0),
            ("p -> q)", 6),
            ("p q", 2),
            ("p -> -> q", 5),
            ("p & q", 2),
            ("P -> q", 0),
        ],
    )
    def test_errors_carry_offset(self, text, offset):
        with pytest.raises(ParseError) as info:
            parse(text)
        assert info.value.offset == offset

    def test_trailing_arrow_message(self):
        with pytest.raises(ParseError, match="offset 4"):
            parse("p ->")

    def test_unbalanced_message(self):
        with pytest.raises(ParseError, match="unbalanced parenthesis"):
            parse("(p ->")


class TestRender:
    @pytest.mark.parametrize(
        "f, text",
        [
            (Imp(p, Imp(q, p)), "p -> q -> p"),
            (Imp(Imp(p, q), q), "(p -> q) -> q"),
            (p, "p"),
            (Imp(Imp(Imp(p, q), p), p), "((p -> q) -> p) -> p"),
        ],
    )
    def test_examples(self, f, text):
        assert render(f) == text

    @given(formulas(max_leaves=30))
    @settings(max_examples=300)
    def test_round_trip(self, f):
        assert parse(render(f)) == f


class TestOrOf:
    def test_examples(self):
        assert or_of(p, q) == parse("(p -> q) -> q")
        assert or_of(p, p) == parse("(p -> p) -> p")
        assert or_of(Imp(p, q), r) == parse("((p -> q) -> r) -> r")

    @given(formulas(), formulas(), st.lists(st.booleans(), min_size=3, max_size=3))
    def test_agrees_with_classical_or(self, a, b, bits):
        v = dict(zip(["p", "q", "r"], bits))
        assert evaluate(or_of(a, b), v) == (evaluate(a, v) or evaluate(b, v))


class TestInstantiate:
    def test_k(self):
        assert instantiate(Scheme.K, {"A": p, "B": q}) == parse("p -> (q -> p)")

    def test_s(self):
        assert instantiate(Scheme.S, {"A": p, "B": q, "C": r}) == parse("(p -> (q -> r)) -> ((p -> q) -> (p -> r))")

    def test_p_prime(self):
        assert instantiate(Scheme.P_PRIME, {"A": p, "B": q, "Q": r}) == parse("(p -> r) -> (((p -> q) -> r) -> r)")

    def test_missing_binding(self):
        with pytest.raises(SubstitutionError, match="missing C"):
            instantiate(Scheme.S, {"A": p, "B": q})

    def test_extra_binding(self):
        with pytest.raises(SubstitutionError, match="unexpected Q"):
            instantiate(Scheme.K, {"A": p, "B": q, "Q": r})

    @given(st.sampled_from(list(Scheme)), st.data())
    def test_instance_determines_substitution(self, scheme, data):
        from peirce.formula import scheme_metavariables

        sub = {m: data.draw(formulas(max_leaves=6)) for m in scheme_metavariables(scheme)}
        assert match_scheme(scheme, instantiate(scheme, sub)) == sub

    def test_match_rejects_non_instances(self):
        assert match_scheme(Scheme.K, parse("p -> q -> q")) is None
        assert match_scheme(Scheme.P, p) is None

    def test_scheme_names(self):
        assert Scheme.from_name("P'") is Scheme.P_PRIME
        assert Scheme.from_name("P′") is Scheme.P_PRIME
        with pytest.raises(ValueError):
            Scheme.from_name("X")


class TestSemantics:
    def test_conditional_table(self):
        assert evaluate(Imp(p, q), {"p": 1, "q": 0}) == 0

    @pytest.mark.parametrize("bits", list(itertools.product((0, 1), repeat=2)))
    def test_peirce_true_everywhere(self, bits):
        v = dict(zip("pq", bits))
        assert evaluate(parse("((p -> q) -> p) -> p"), v) == 1

    def test_or_false_when_both_false(self):
        assert evaluate(parse("(p -> q) -> q"), {"p": 0, "q": 0}) == 0

    def test_unbound_variable(self):
        with pytest.raises(KeyError):
            evaluate(Imp(p, q), {"p": 1})

    @pytest.mark.parametrize(
        "text, expected",
        [("((p -> q) -> p) -> p", True), ("p -> (q -> p)", True), ("(p -> q) -> q", False)],
    )
    def test_tautology_examples(self, text, expected):
        assert is_tautology(parse(text)) is expected

    def test_countervaluation(self):
        assert countervaluation(parse("(p -> q) -> q")) == {"p": 0, "q": 0}
        assert countervaluation(parse("p -> p")) is None

    def test_too_many_variables(self):
        f = Var("x0")
        for k in range(1, 25):
            f = Imp(Var(f"x{k}"), f)
        with pytest.raises(TooLargeError):
            is_tautology(f)

    def test_table_order_msb_first(self):
        assert truth_table(p, ["p", "q"]).tolist() == [False, False, True, True]
        assert truth_table(q, ["p", "q"]).tolist() == [False, True, False, True]

    @given(formulas(max_leaves=16))
    @settings(max_examples=200)
    def test_vectorised_table_matches_brute_force(self, f):
        assert is_tautology(f) == brute_tautology(f)
        names = variables(f)
        expected = [evaluate(f, dict(zip(names, bits))) for bits in itertools.product((0, 1), repeat=len(names))]
        assert truth_table(f).astype(int).tolist() == expected

    @given(formulas(max_leaves=20))
    def test_all_ones_valuation(self, f):
        assert evaluate(f, {x: 1 for x in variables(f)}) == 1
        assert bool(truth_table(f)[-1])


class TestVariables:
    @pytest.mark.parametrize(
        "text, names", [("(p -> q) -> p", ["p", "q"]), ("p", ["p"]), ("(q -> p) -> q", ["q", "p"])]
    )
    def test_first_occurrence_order(self, text, names):
        assert variables(parse(text)) == names


def test_structural_equality_and_hash():
    assert parse("p -> q") == Imp(p, q)
    assert hash(parse("p -> q")) == hash(Imp(p, q))
    assert parse("p -> q") != parse("q -> p")
    assert len({parse("p -> q"), Imp(p, q), or_of(p, q)}) == 2


def test_bad_variable_name():
    with pytest.raises(ValueError):
        Var("P")
    with pytest.raises(TypeError):
        Imp(p, "q")


def test_truth_table_is_numpy_bool():
    tt = truth_table(parse("p -> q"))
    assert tt.dtype == np.bool_ and tt.tolist() == [True, True, False, True]
