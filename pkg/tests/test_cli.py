import json
import random
import subprocess
import sys
from pathlib import Path

import pytest

from symsquare import ns_lattice as ns
from symsquare import obstruction as ob
from symsquare import sym_cohomology as sc
from symsquare.cli import COMMANDS, run
from symsquare.curve_model import CurveProfile, PencilData, riemann_roch_complete
from symsquare.textdoc import dumps, loads

FIXTURES = Path(__file__).parent / "fixtures"
CASES = json.loads((FIXTURES / "cli_cases.json").read_text())


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name):
    case = CASES[name]
    resp, code = run(case["argv"])
    assert code == case["exit"]
    assert resp.document() == (FIXTURES / "cli" / f"{name}.txt").read_text()


def test_golden_covers_every_subcommand():
    assert {case["argv"][0] for case in CASES.values()} == set(COMMANDS)


@pytest.mark.parametrize("name", sorted(CASES))
def test_round_trip(name):
    text = (FIXTURES / "cli" / f"{name}.txt").read_text()
    assert dumps(loads(text)) == text


def test_process_exit_codes():
    def call(*argv):
        return subprocess.run([sys.executable, "-m", "symsquare", *argv], capture_output=True, text=True)

    ok = call("i2", "--g", "4")
    assert ok.returncode == 0 and "result = 1" in ok.stdout
    bad = call("i2", "--g", "2")
    assert bad.returncode == 1 and "status = error" in bad.stdout
    usage = call("i2")
    assert usage.returncode == 2 and "--g" in usage.stdout


@pytest.mark.parametrize(
    "argv",
    [
        ["pair", "--g", "4.0", "--a1", "1", "--b1", "0", "--a2", "1", "--b2", "0"],
        ["pair", "--g", "1e3", "--a1", "1", "--b1", "0", "--a2", "1", "--b2", "0"],
        ["i2", "--g", "4", "--colour", "red"],
        ["oracle", "--n", "2", "--h0", "1", "--h1", "1", "--isotype", "standard"],
        ["verdict", "--g", "4", "--d", "5", "--base-point-free", "yes"],
        ["nonsense"],
        [],
    ],
)
def test_usage_errors(argv):
    resp, code = run(argv)
    assert code == 2
    assert resp.status == "error" and resp.message


def test_validation_error_has_message():
    resp, code = run(["seq-2delta", "--g", "4", "--degree", "6", "--h0", "4", "--rank-mu0", "10"])
    assert code == 1
    assert "S^2 H^0(E)" in resp.message


def test_brill_noether_warning_surfaces_as_note():
    resp, code = run(["verdict", "--g", "6", "--d", "5", "--h0", "3"])
    assert code == 0
    assert any(note.startswith("warning:") for note in resp.notes)


def _result(argv):
    resp, code = run(argv)
    assert code == 0, resp.message
    return dict(loads(resp.document()))


@pytest.mark.filterwarnings("ignore::symsquare.curve_model.BrillNoetherWarning")
def test_cli_matches_library_on_random_corpus():
    rng = random.Random(20261015)
    for _ in range(150):
        g = rng.randint(4, 12)
        a1, b1, a2, b2 = (rng.randint(-20, 20) for _ in range(4))
        out = _result(["pair", "--g", str(g), "--a1", str(a1), "--b1", str(b1), "--a2", str(a2), "--b2", str(b2)])
        assert int(out["result"]) == ns.pair(ns.NSClass(a1, b1, g), ns.NSClass(a2, b2, g))

        d = rng.randint(2, 30)
        assert int(_result(["genus-x", "--g", str(g), "--d", str(d)])["result"]) == ns.arithmetic_genus_X(g, d)

        degree = rng.randint(0, 3 * g)
        h0 = max(0, degree - g + 1) + (rng.randint(0, 1) if 0 < degree < g else 0)
        n = rng.randint(1, 5)
        E = riemann_roch_complete(g, degree, h0)
        for cmd, fn in (("cohom", sc.cohomology_invariant), ("cohom-skew", sc.cohomology_skew)):
            out = _result([cmd, "--n", str(n), "--g", str(g), "--degree", str(degree), "--h0", str(h0)])
            assert tuple(int(out[f"result.{i}"]) for i in range(n + 1)) == fn(n, E).dims

        assert int(_result(["i2", "--g", str(g)])["result"]) == sc.i2_dimension(g)

        d = rng.randint(3, 12)
        h0 = max(2, d - g + 1) + rng.randint(0, 1)
        try:
            L = PencilData(d, h0_L=h0)
            expected = ob.verdict(CurveProfile(g, pencils=(L,)), L).label.value
        except ValueError:
            continue
        out = _result(["verdict", "--g", str(g), "--d", str(d), "--h0", str(h0)])
        assert out["result.label"] == expected


def test_long_usage_message_stays_on_one_line():
    resp, code = run(["verdict", "--g", "4", "--d", "5", "--bogus", "1"])
    assert code == 2
    assert "\n" not in resp.message
    assert resp.document().count("\n") == 3
