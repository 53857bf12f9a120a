import subprocess
import sys

import pytest

from protoalg import fixtures as fx
from protoalg.cli import main, run
from protoalg.groups import cyclic
from protoalg.model import parse_algebra, serialize_algebra
from protoalg.reconstruct import (
    identity_triple,
    serialize_action_quadruple,
    serialize_group_triple,
    to_action_quadruple,
)


@pytest.fixture
def fx_path(fixture_dir):
    return lambda name: str(fixture_dir / f"{name}.pmalg")


def test_check_e34_passes(fx_path):
    r = run(["check", fx_path("e34"), "--props", "protomodular,right-cancellable"])
    assert r.exit_code == 0
    assert r.output.splitlines()[1:] == ["protomodular: holds", "right-cancellable: holds"]


def test_check_bool2_fails_with_witness(fx_path):
    r = run(["check", fx_path("bool2"), "--props", "right-cancellable"])
    assert r.exit_code == 1
    assert "right-cancellable: FAILS  i=2 a1=0 a2=0 a'1=0 a'2=1 b=0 b'=1" in r.output


def test_check_default_props_and_class(fx_path):
    r = run(["check", fx_path("e32")])
    lines = r.output.splitlines()
    assert len(lines) == 10
    assert lines[-1] == "class: left-semi-loop"
    assert r.exit_code == 1  # not consociative
    assert "strict: holds  (theta_b bijective: yes)" in lines


def test_group_e32(fx_path):
    r = run(["group", fx_path("e32"), "--unit", "0"])
    assert r.exit_code == 0
    assert "label: Z3" in r.output
    assert "  0 1 2\n  1 2 0\n  2 0 1\n" in r.output


def test_group_bad_unit_and_non_rc(fx_path):
    assert run(["group", fx_path("e32"), "--unit", "3"]).exit_code == 2
    assert run(["group", fx_path("bool2"), "--unit", "0"]).exit_code == 1


def test_translations(fx_path):
    r = run(["translations", fx_path("e34")])
    assert r.exit_code == 0
    assert r.output.startswith("distinct translations: 4\n")
    assert "label: V4" in r.output and "principal action: yes" in r.output
    r = run(["translations", fx_path("loop6")])
    # six sharply transitive maps, but not closed under composition
    assert r.exit_code == 1 and "principal action: yes" in r.output
    assert "right-cancellable: FAILS" in r.output


def test_construct_from_group(tmp_path):
    path = tmp_path / "z3.pmgrp"
    path.write_text(serialize_group_triple(identity_triple(cyclic(3))))
    r = run(["construct", "from-group", str(path), "--n", "1"])
    assert r.exit_code == 0
    assert parse_algebra(r.output) == fx.gz3()
    assert run(["construct", "from-group", str(path), "--n", "2"]).exit_code == 2


def test_construct_from_action(tmp_path):
    path = tmp_path / "e34.pmact"
    path.write_text(serialize_action_quadruple(to_action_quadruple(fx.e34())))
    r = run(["construct", "from-action", str(path)])
    assert r.exit_code == 0
    assert r.output == serialize_algebra(fx.e34())


def test_search_emit(tmp_path):
    out = tmp_path / "frames"
    r = run(["search", "--n", "1", "--size", "3", "--require", "right-cancellable", "--emit", str(out)])
    assert r.exit_code == 0
    names = sorted(p.name for p in out.iterdir())
    assert names == [f"frame_{i:04d}.pmalg" for i in range(1, 7)]
    emitted = [parse_algebra((out / name).read_text()) for name in names]
    assert fx.e32() in emitted


def test_search_listing_and_limit():
    r = run(["search", "--n", "1", "--size", "2", "--limit", "1"])
    assert r.output.splitlines()[0] == "search n=1 size=2: 1 frame(s)"


def test_census_and_bounds():
    r = run(["census", "--n", "1", "--size", "3"])
    assert r.exit_code == 0 and "total 24" in r.output
    assert run(["census", "--n", "1", "--size", "4"]).exit_code == 2
    assert run(["census", "--n", "2", "--size", "2", "--forbid", "nonsense"]).exit_code == 2


def test_identity_preset_and_file(tmp_path, fx_path):
    r = run(["identity", "preset:rc2", fx_path("bool2")])
    assert r.exit_code == 1 and "FAILS:" in r.output
    assert run(["identity", "preset:v2", fx_path("bool2")]).exit_code == 0
    theory = tmp_path / "comm.thy"
    theory.write_text("theory comm\nop theta 2\nop alpha 2\nconst e\naxiom theta(x, y) = theta(y, x)\n")
    r = run(["identity", str(theory), fx_path("gz3")])
    assert r.exit_code == 0, r.output
    assert run(["identity", "preset:nope", fx_path("gz3")]).exit_code == 2


def test_usage_errors(tmp_path, fx_path):
    assert run([]).exit_code == 2
    assert run(["frobnicate"]).exit_code == 2
    assert run(["check", str(tmp_path / "missing.pmalg")]).exit_code == 2
    bad = tmp_path / "bad.pmalg"
    bad.write_text("pmalg 1\nn 1\nsize 2\ntheta\n0 1\n")
    r = run(["check", str(bad)])
    assert r.exit_code == 2 and "line" in r.output
    assert run(["check", fx_path("e32"), "--props", "wibble"]).exit_code == 2


def test_main_streams(capsys, fx_path):
    assert main(["group", fx_path("e32"), "--unit", "0"]) == 0
    assert "label: Z3" in capsys.readouterr().out
    assert main(["census", "--n", "9", "--size", "2"]) == 2
    assert "error" in capsys.readouterr().err


def test_module_entry_point(fx_path):
    proc = subprocess.run(
        [sys.executable, "-m", "protoalg", "check", fx_path("e34"), "--props", "protomodular"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout.endswith("protomodular: holds\n")
