"""Acceptance criteria, one test each; the terminal summary prints a PASS/FAIL line per criterion."""
import subprocess
import sys
from itertools import product

import pytest

import oracles
from protoalg.groups import CATALOG, GroupTable, identify_small_group
from protoalg.protomod import (
    check_consociative,
    check_protomodular,
    check_right_cancellable,
    check_simplified_rc,
    check_strict,
    classify_n1,
    derive_malcev,
)
from protoalg.reconstruct import (
    from_action_quadruple,
    from_group_triple,
    group_at,
    group_to_malcev,
    identity_triple,
    malcev_to_group,
    to_action_quadruple,
    to_group_triple,
)
from protoalg.search import SearchSpec, enumerate_frames
from protoalg.termlang import check_theory, load_preset
from protoalg.translations import distinct_translations, translation_group, translation_of
from test_reconstruct import check_group_laws
from test_translations import check_translation_laws

acceptance = pytest.mark.acceptance
RC_SHAPES = [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2)]


@acceptance(1, "E32 is a right-cancellable left semi-loop, not a group under theta")
def test_e32_left_semi_loop(e32):
    assert check_protomodular(e32) and check_right_cancellable(e32) and check_strict(e32)
    assert classify_n1(e32) == {"left-semi-loop"}
    assert e32.es == (0,) and e32.th((1,), 0) == 2


@acceptance(2, "E33 is right-cancellable for n=2 and not strict, witness i=1")
def test_e33(e33):
    assert e33.n == 2
    assert check_protomodular(e33) and check_right_cancellable(e33)
    strict = check_strict(e33)
    assert not strict and strict.index == 1


@acceptance(3, "E34 has four translations forming V4")
def test_e34(e34):
    assert e34.n == 3
    assert check_protomodular(e34) and check_right_cancellable(e34)
    assert len(distinct_translations(e34)) == 4
    tg = translation_group(e34)
    assert tg.order == 4 and identify_small_group(tg.as_group_table()) == "V4"
    s, t = translation_of(e34, (1, 2, 1)).map, translation_of(e34, (3, 0, 2)).map
    assert s != t
    for m in (s, t):
        assert m != tuple(range(4)) and tuple(m[m[x]] for x in range(4)) == tuple(range(4))


@acceptance(4, "BOOL2 is protomodular, not right-cancellable, simplified (iii) fails at i=2, a=(0,0)")
def test_bool2(bool2):
    assert check_protomodular(bool2)
    assert not check_right_cancellable(bool2)
    assert not oracles.is_right_cancellable(bool2)
    _, iii = check_simplified_rc(bool2)
    assert not iii and iii.index == 2 and iii.witness[:2] == (0, 0)


@acceptance(5, "group_at(E32, u) is a group with unit u for every u, cyclic of order 3 at u=0")
def test_group_extraction(e32):
    for u in range(3):
        g = group_at(e32, u)
        assert g.law_failure() is None and g.unit == u
        assert oracles.is_group_table(3, g.mul) == u
    g = group_at(e32, 0)
    # direct evaluation: a.b = theta(alpha(a, 0), b)
    expected = tuple(e32.th((e32.al(0, a, 0),), b) for a, b in product(range(3), repeat=2))
    assert g.op == expected
    assert g.mul(1, 1) == 2 and g.mul(1, 2) == 0
    assert identify_small_group(g) == "Z3"


@acceptance(6, "translation and group lemmas hold on every enumerated right-cancellable frame")
def test_property_suites(small_rc_frames):
    shapes = {(f.n, f.k) for f in small_rc_frames}
    assert shapes == set(RC_SHAPES)
    for frame in small_rc_frames:
        check_translation_laws(frame)
        check_group_laws(frame)


@acceptance(7, "action quadruple and group triple round trips are the identity")
def test_round_trips(small_rc_frames, rc_fixture_frames):
    for frame in [*small_rc_frames, *rc_fixture_frames.values()]:
        assert from_action_quadruple(to_action_quadruple(frame), frame.n) == frame
        for u in range(frame.k):
            assert from_group_triple(to_group_triple(frame, u), frame.n) == frame


@acceptance(8, "no right-cancellable non-strict frame for n=1, size<=3")
def test_rc_implies_strict():
    for k in (1, 2, 3):
        spec = SearchSpec(1, k, required={"right-cancellable"}, forbidden={"strict"})
        assert list(enumerate_frames(spec)) == []


@acceptance(9, "for n=1, size<=3: right-cancellable with theta(a,e)=a iff a group under theta")
def test_group_under_theta():
    seen = 0
    for k in (1, 2, 3):
        for frame in enumerate_frames(SearchSpec(1, k)):
            e = frame.es[0]
            lhs = oracles.is_right_cancellable(frame) and all(frame.th((a,), e) == a for a in range(k))
            rhs = oracles.is_group_table(k, lambda a, b: frame.th((a,), b)) is not None
            assert lhs == rhs == ("group-under-theta" in classify_n1(frame))
            seen += lhs
    assert seen > 0


@acceptance(10, "Mal'cev operations and groups correspond on small groups and fixtures")
def test_malcev_bijection(rc_fixture_frames):
    for k in (1, 2, 3, 4):
        tables = oracles.all_labeled_groups(k)
        assert len(tables) == {1: 1, 2: 2, 3: 3, 4: 16}[k]
        for table in tables:
            g = GroupTable.from_op(k, table)
            p = group_to_malcev(g)
            assert malcev_to_group(p, g.unit) == g
            assert group_to_malcev(malcev_to_group(p, (g.unit + 1) % k)) == p
    for frame in rc_fixture_frames.values():
        p = derive_malcev(frame)
        for u in range(frame.k):
            assert group_to_malcev(malcev_to_group(p, u)) == p


@acceptance(11, "frames from Z2, Z3, Z4, V4 are consociative and satisfy the group identity")
def test_groups_consociative():
    theory = load_preset("groupterm1")
    for name in ("Z2", "Z3", "Z4", "V4"):
        frame = from_group_triple(identity_triple(CATALOG[name]), 1)
        assert check_consociative(frame) and oracles.is_consociative(frame)
        assert all(v for _, v in check_theory(frame.model, theory))


@acceptance(12, "census --n 1 --size 3 output is byte-identical across runs and worker counts")
def test_census_determinism():
    outputs = []
    for workers in ("1", "1", "1", "2", "8"):
        proc = subprocess.run(
            [sys.executable, "-m", "protoalg", "census", "--n", "1", "--size", "3", "--workers", workers],
            capture_output=True, check=True,
        )
        outputs.append(proc.stdout)
    assert outputs[0].startswith(b"census n=1 size=3\ntotal 24\n")
    assert len(set(outputs)) == 1
