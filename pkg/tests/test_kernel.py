import itertools

import pytest

from conftest import brute_tautology, p, q, r
from peirce.formula import Imp, Scheme, evaluate, instantiate, is_tautology, or_of, parse, variables
from peirce.kernel import MP, Ax, Basis, Hyp, Judgment, Proof, ProofError, VeeE, check_proof, conclusion_of
from peirce.sampling import random_proof

KS = Basis.of("K", "S")


def identity_steps():
    pp = Imp(p, p)
    return (
        Ax(instantiate(Scheme.S, {"A": p, "B": pp, "C": p}), Scheme.S, {"A": p, "B": pp, "C": p}),
        Ax(instantiate(Scheme.K, {"A": p, "B": pp}), Scheme.K, {"A": p, "B": pp}),
        MP(parse("(p -> p -> p) -> p -> p"), 1, 2),
        Ax(instantiate(Scheme.K, {"A": p, "B": p}), Scheme.K, {"A": p, "B": p}),
        MP(pp, 3, 4),
    )


def mp_proof():
    return Proof((p, Imp(p, q)), (Hyp(p, 1), Hyp(Imp(p, q), 2), MP(q, 2, 1)), KS)


class TestExamples:
    def test_identity(self):
        j = check_proof(Proof((), identity_steps(), KS))
        assert j == Judgment((), parse("p -> p"), KS)
        assert str(j) == "⊢ p -> p"

    def test_peirce_not_in_basis(self):
        inst = instantiate(Scheme.P, {"A": p, "B": q})
        with pytest.raises(ProofError, match="axiom scheme P not in basis at step 1") as info:
            check_proof(Proof((), (Ax(inst, Scheme.P, {"A": p, "B": q}),), KS))
        assert info.value.kind == "basis"

    def test_single_mp(self):
        j = check_proof(mp_proof())
        assert j.hypotheses == (p, Imp(p, q)) and j.conclusion == q
        assert str(j) == "p, p -> q ⊢ q"

    def test_vee_e_accepted(self):
        steps = identity_steps() + (Hyp(Imp(q, p), 1), VeeE(parse("((p -> q) -> q) -> p"), 5, 6, p, q, p))
        j = check_proof(Proof((Imp(q, p),), steps, Basis.of("K", "S", vee_e=True)))
        assert j.conclusion == Imp(or_of(p, q), p)


class TestDiagnostics:
    def test_forward_reference(self):
        pr = Proof((p,), (Hyp(p, 1), MP(q, 3, 1), Hyp(p, 1)), KS)
        with pytest.raises(ProofError, match="step 2 references step 3") as info:
            check_proof(pr)
        assert info.value.kind == "reference" and info.value.step == 2

    def test_self_reference(self):
        with pytest.raises(ProofError, match="step 1 references step 1"):
            check_proof(Proof((), (MP(q, 1, 1),), KS))

    def test_hypothesis_out_of_range(self):
        with pytest.raises(ProofError) as info:
            check_proof(Proof((p,), (Hyp(p, 2),), KS))
        assert info.value.kind == "hypothesis"

    def test_stated_formula_mismatch(self):
        with pytest.raises(ProofError) as info:
            check_proof(Proof((p,), (Hyp(q, 1),), KS))
        assert info.value.kind == "mismatch"

    def test_axiom_mismatch(self):
        with pytest.raises(ProofError) as info:
            check_proof(Proof((), (Ax(parse("p -> q -> q"), Scheme.K, {"A": p, "B": q}),), KS))
        assert info.value.kind == "mismatch"

    def test_bad_substitution(self):
        with pytest.raises(ProofError) as info:
            check_proof(Proof((), (Ax(parse("p -> q -> p"), Scheme.K, {"A": p}),), KS))
        assert info.value.kind == "substitution"

    def test_mp_shape(self):
        with pytest.raises(ProofError) as info:
            check_proof(Proof((p, q), (Hyp(p, 1), Hyp(q, 2), MP(q, 1, 2)), KS))
        assert info.value.kind == "mp-shape"

    def test_mp_wrong_conclusion(self):
        pr = Proof((p, Imp(p, q)), (Hyp(p, 1), Hyp(Imp(p, q), 2), MP(r, 2, 1)), KS)
        with pytest.raises(ProofError) as info:
            check_proof(pr)
        assert info.value.kind == "mismatch"

    def test_vee_e_disabled(self):
        steps = (Hyp(Imp(p, r), 1), Hyp(Imp(q, r), 2), VeeE(Imp(or_of(p, q), r), 1, 2, p, q, r))
        with pytest.raises(ProofError) as info:
            check_proof(Proof((Imp(p, r), Imp(q, r)), steps, KS))
        assert info.value.kind == "vee-disabled"
        j = check_proof(Proof((Imp(p, r), Imp(q, r)), steps, Basis.of("K", "S", vee_e=True)))
        assert j.conclusion == Imp(or_of(p, q), r)

    def test_vee_e_shape(self):
        steps = (Hyp(Imp(p, r), 1), Hyp(Imp(q, r), 2), VeeE(Imp(or_of(q, p), r), 1, 2, q, p, r))
        with pytest.raises(ProofError) as info:
            check_proof(Proof((Imp(p, r), Imp(q, r)), steps, Basis.of("K", "S", vee_e=True)))
        assert info.value.kind == "vee-shape"

    def test_empty(self):
        with pytest.raises(ProofError):
            check_proof(Proof((), (), KS))
        with pytest.raises(ProofError):
            conclusion_of(Proof((), (), KS))


class TestConclusionOf:
    def test_examples(self):
        assert conclusion_of(Proof((), identity_steps(), KS)) == parse("p -> p")
        assert conclusion_of(mp_proof()) == q
        assert conclusion_of(Proof((p,), (Hyp(p, 1),), KS)) == p

    def test_does_not_validate(self):
        assert conclusion_of(Proof((), (Hyp(r, 7),), KS)) == r


class TestBasis:
    def test_parse(self):
        assert Basis.parse("K,S,P") == Basis.of("K", "S", "P")
        assert Basis.parse("K,S+VE") == Basis.of("K", "S", vee_e=True)
        assert Basis.parse("K S P' +VE") == Basis.of("K", "S", "P'", vee_e=True)
        assert str(Basis.parse("P,S,K+VE")) == "K S P +VE"

    def test_order(self):
        assert KS <= Basis.of("K", "S", "P")
        assert not Basis.of("K", "S", vee_e=True) <= Basis.of("K", "S", "P")


def _valuations(names):
    for bits in itertools.product((0, 1), repeat=len(names)):
        yield dict(zip(names, bits))


class TestProperties:
    def test_soundness_and_relative_soundness(self, rng):
        for _ in range(300):
            pr = random_proof(rng, max_steps=20)
            j = check_proof(pr)
            names = sorted(set().union(*(variables(h) for h in j.hypotheses), variables(j.conclusion)))
            for v in _valuations(names):
                if all(evaluate(h, v) for h in j.hypotheses):
                    assert evaluate(j.conclusion, v) == 1
            for s in pr.steps:
                if isinstance(s, Ax):
                    assert brute_tautology(s.formula)

    def test_monotone_in_basis(self, rng):
        big = Basis.of("K", "S", "P", "P'", vee_e=True)
        for _ in range(100):
            pr = random_proof(rng, max_steps=15)
            assert check_proof(pr, big).conclusion == check_proof(pr).conclusion

    def test_deterministic(self, rng):
        bad = Proof((p,), (Hyp(p, 1), MP(q, 1, 1)), KS)
        msgs = set()
        for _ in range(5):
            with pytest.raises(ProofError) as info:
                check_proof(bad)
            msgs.add((info.value.kind, str(info.value), info.value.step))
        assert len(msgs) == 1
        pr = random_proof(rng)
        assert check_proof(pr) == check_proof(pr)

    def test_closed_random_proofs_are_tautologies(self, rng):
        for _ in range(200):
            pr = random_proof(rng, max_steps=20)
            closed = Proof((), tuple(s for s in pr.steps if isinstance(s, Ax)), pr.basis)
            if closed.steps:
                assert is_tautology(check_proof(closed).conclusion)
