from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from protoalg import fixtures as fx
from protoalg.errors import EvaluationError, TheoryError
from protoalg.termlang import (
    App,
    Identity,
    Var,
    check_identity,
    eval_term,
    load_preset,
    parse_term,
    parse_theory,
    preset_catalog,
)

V1 = """theory v1
op theta 2
op alpha 2
const e
axiom alpha(a, a) = e
axiom theta(alpha(a, b), b) = a
"""


def test_parse_v1():
    th = parse_theory(V1)
    assert th.name == "v1"
    assert len(th.axioms) == 2
    assert th.axioms[0] == Identity(App("alpha", (Var("a"), Var("a"))), App("e"))


def test_undeclared_application_is_an_error():
    with pytest.raises(TheoryError, match="undeclared") as info:
        parse_theory("theory t\naxiom f(x) = x\n")
    assert (info.value.line, info.value.column) == (2, 7)


@pytest.mark.parametrize(
    "text,msg",
    [
        ("theory t\nop f 1\naxiom f(x, y) = x\n", "arity mismatch"),
        ("theory t\nop f 1\naxiom f = x\n", "arity mismatch"),
        ("theory t\nop f 1\nop f 2\n", "duplicate operation"),
        ("theory t\nop f 1\naxiom f(x = x\n", "expected"),
        ("theory t\nop f 1\naxiom f(x) x\n", "expected '='"),
        ("theory t\nop f 1\naxiom f(x) = x )\n", "unexpected"),
        ("theory t\nop f one\n", "non-negative integer"),
        ("theory t\nlemma f\n", "unknown directive"),
        ("op f 1\n", "missing 'theory"),
    ],
)
def test_parse_errors(text, msg):
    with pytest.raises(TheoryError, match=msg):
        parse_theory(text)


def test_rc2_preset_adds_two_axioms():
    base = load_preset("v2")
    rc = load_preset("rc2")
    assert rc.axioms[: len(base.axioms)] == base.axioms
    assert len(rc.axioms) == len(base.axioms) + 2


def test_v1_preset_matches_handwritten():
    assert load_preset("v1").axioms == parse_theory(V1).axioms


@pytest.mark.parametrize("name", sorted(preset_catalog()))
def test_bundled_presets_match_generator(name):
    assert load_preset(name) == parse_theory(preset_catalog()[name])


def test_eval_term_examples(e32, e33):
    t = parse_term("theta(alpha(x, y), y)", {"theta": 2, "alpha": 2})
    assert eval_term(e32.model, t, {"x": 2, "y": 1}) == 2
    assert eval_term(e32.model, Var("x"), {"x": 1}) == 1
    t = parse_term("theta(e1, e2, x)", {"theta": 3, "e1": 0, "e2": 0})
    assert eval_term(e33.model, t, {"x": 0}) == 0


def test_eval_term_errors(e32):
    t = parse_term("theta(x, y)", {"theta": 2})
    with pytest.raises(EvaluationError, match="unbound"):
        eval_term(e32.model, t, {"x": 0})
    with pytest.raises(EvaluationError, match="unknown symbol"):
        check_identity(e32.model, Identity(App("phi", (Var("x"),)), Var("x")))


def test_check_identity_examples(e32, bool2, triv1):
    v1 = load_preset("v1")
    assert check_identity(e32.model, v1.axioms[1])
    rc2 = load_preset("rc2")
    verdict = check_identity(bool2.model, rc2.axioms[-1])
    assert not verdict
    cex = verdict.counterexample
    assert tuple(cex[v] for v in ("a1", "a2", "a1'", "a2'", "b", "b'")) == (0, 0, 0, 1, 0, 1)
    for ax in load_preset("rc1").axioms + load_preset("groupterm1").axioms:
        assert check_identity(triv1.model, ax)


def _double_loop(model, identity):
    names = identity.variables
    for env in product(range(model.size), repeat=len(names)):
        assignment = dict(zip(names, env))
        if eval_term(model, identity.lhs, assignment) != eval_term(model, identity.rhs, assignment):
            return assignment
    return None


@settings(max_examples=40, deadline=None)
@given(
    name=st.sampled_from(["e32", "e33", "e34", "bool2", "gz3"]),
    preset=st.sampled_from(["v", "rc", "strict", "consoc", "oneassoc", "malcev"]),
)
def test_check_identity_agrees_with_double_loop(name, preset):
    frame = fx.BUILDERS[name]()
    if frame.n == 3 and preset in ("rc", "oneassoc", "malcev"):
        return  # 4**7 and larger assignment spaces; covered by the fast checkers
    theory = load_preset(f"{preset}{frame.n}")
    for ax in theory.axioms:
        verdict = check_identity(frame.model, ax)
        expected = _double_loop(frame.model, ax)
        assert verdict.holds == (expected is None)
        assert verdict.counterexample == expected
