"""Tests for the command-line front end.

The CLI is exercised through ``main(argv)`` directly so exit codes and
output bytes are both visible. Golden outputs are frozen here; every
printed ring element must reparse to an equal value.
"""

import json

import pytest

from cycloquant import (
    BraidWord,
    LENS_SPACE_2_1_LEVEL_5,
    gauss_sum,
    j_invariant,
    parse_laurent,
    parse_ring_element,
    powers_of_A_char0,
    quantum_int,
    reduce,
)
from cycloquant.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_json(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload), encoding="utf-8")
    return str(path)


# ---------------------------------------------------------------------------
# ring arithmetic subcommands


def test_phi_15_golden(capsys):
    code, out, _ = run_cli(capsys, "phi", "15")
    assert code == 0
    assert out == "1 - A + A^3 - A^4 + A^5 - A^7 + A^8\n"


def test_phi_small_orders(capsys):
    code, out, _ = run_cli(capsys, "phi", "1")
    assert code == 0
    assert out == "-1 + A\n"
    code, out, _ = run_cli(capsys, "phi", "2")
    assert code == 0
    assert out == "1 + A\n"


def test_reduce_round_trip(capsys):
    code, out, _ = run_cli(capsys, "reduce", "--order", "15", "--poly", "A^8")
    assert code == 0
    printed = parse_ring_element(out.strip(), 15)
    assert printed == reduce(parse_laurent("A^8"), 15)


def test_qint_round_trip(capsys):
    code, out, _ = run_cli(capsys, "qint", "3", "--order", "15")
    assert code == 0
    assert parse_ring_element(out.strip(), 15) == quantum_int(3, 15)


def test_gauss_golden_and_round_trip(capsys):
    code, out, _ = run_cli(capsys, "gauss", "--a", "1", "--n", "3", "--order", "3")
    assert code == 0
    assert out == "1 + 2A\n"
    assert parse_ring_element(out.strip(), 3) == gauss_sum(1, 3, 3)


def test_gr_prints_value_and_sign(capsys):
    code, out, _ = run_cli(capsys, "gr", "--r", "5")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "G_5 = 1 - A^2 + A^3 + A^6 - A^7"
    assert lines[1] == "epsilon = -1"
    # The printed value reparses to the ninth power of A in the quotient.
    value = parse_ring_element(lines[0].split(" = ", 1)[1], 15)
    assert value == -parse_ring_element("A^-36", 15)


def test_powers_listing_round_trips(capsys):
    code, out, _ = run_cli(capsys, "powers", "--r", "5")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 15
    expected = powers_of_A_char0(5)
    for s, line in enumerate(lines):
        label, text = line.split(" = ", 1)
        assert label == f"A^{s}"
        assert parse_ring_element(text, 15) == expected[s]


# ---------------------------------------------------------------------------
# braid and matrix subcommands


def test_jinv_golden(capsys, tmp_path):
    path = write_json(
        tmp_path, "hopf.json", {"strands": 2, "word": [1, 1], "framings": [0, 0]}
    )
    code, out, _ = run_cli(capsys, "jinv", "--braid", path)
    assert code == 0
    assert parse_laurent(out.strip()) == j_invariant(BraidWord(2, (1, 1)))


def test_jinv_default_framings(capsys, tmp_path):
    path = write_json(tmp_path, "unknot.json", {"strands": 1, "word": []})
    code, out, _ = run_cli(capsys, "jinv", "--braid", path)
    assert code == 0
    assert out == "A^-6 + 1 + A^6\n"


def test_lkmatrix_golden(capsys, tmp_path):
    path = write_json(
        tmp_path, "hopf.json", {"strands": 2, "word": [1, 1], "framings": [0, 0]}
    )
    code, out, _ = run_cli(capsys, "lkmatrix", "--braid", path)
    assert code == 0
    assert out == '{"matrix": [[0, 1], [1, 0]]}\n'


def test_signature_output(capsys, tmp_path):
    path = write_json(tmp_path, "m.json", {"matrix": [[2, 0, 0], [0, -3, 0], [0, 0, 0]]})
    code, out, _ = run_cli(capsys, "signature", "--matrix", path)
    assert code == 0
    assert out == "sigma_plus = 1\nsigma_minus = 1\nnullity = 1\n"


def test_moo_golden(capsys, tmp_path):
    path = write_json(tmp_path, "one.json", {"matrix": [[1]]})
    code, out, _ = run_cli(capsys, "moo", "--n", "3", "--matrix", path)
    assert code == 0
    assert out == "1\n"


def test_moo_fast_matches(capsys, tmp_path):
    path = write_json(tmp_path, "m.json", {"matrix": [[2, 1], [1, -2]]})
    code, slow, _ = run_cli(capsys, "moo", "--n", "15", "--matrix", path)
    assert code == 0
    code, fast, _ = run_cli(capsys, "moo", "--n", "15", "--matrix", path, "--fast")
    assert code == 0
    assert slow == fast


def test_moo_half_integer_print(capsys, tmp_path):
    path = write_json(tmp_path, "zero.json", {"matrix": [[0]]})
    code, out, _ = run_cli(capsys, "moo", "--n", "5", "--matrix", path)
    assert code == 0
    assert out == "5 * 5^(-1/2)\n"


# ---------------------------------------------------------------------------
# obstruction subcommands and exit codes


def test_check_cor12_consistent(capsys):
    code, out, _ = run_cli(capsys, "check-cor12", "--v", "1", "--r", "5", "--p", "11")
    assert code == 0
    assert out == "CONSISTENT epsilon=1 s=0 alpha=0\n"


def test_check_cor12_obstructed(capsys):
    code, out, _ = run_cli(
        capsys, "check-cor12", "--v", str(LENS_SPACE_2_1_LEVEL_5), "--r", "5", "--p", "11"
    )
    assert code == 1
    assert out == "OBSTRUCTED\n"


def test_check_thm11_consistent(capsys):
    code, out, _ = run_cli(
        capsys, "check-thm11", "--vm", "1", "--vmbar", "1", "--r", "5", "--p", "11"
    )
    assert code == 0
    assert out.startswith("CONSISTENT")


def test_check_thm41_paths(capsys, tmp_path):
    lift = write_json(tmp_path, "lift.json", {"strands": 2, "word": [1, 1, 1]})
    quot = write_json(tmp_path, "quot.json", {"strands": 2, "word": [1]})
    code, out, _ = run_cli(
        capsys, "check-thm41", "--lift", lift, "--quotient", quot, "--p", "3"
    )
    assert code == 0
    assert out == "CONSISTENT\n"

    hopf = write_json(tmp_path, "hopf.json", {"strands": 2, "word": [1, 1]})
    unknot = write_json(tmp_path, "unknot.json", {"strands": 1, "word": []})
    code, out, _ = run_cli(
        capsys, "check-thm41", "--lift", unknot, "--quotient", hopf, "--p", "3"
    )
    assert code == 1
    assert out == "OBSTRUCTED\n"


def test_check_thm51_paths(capsys, tmp_path):
    b = write_json(tmp_path, "b.json", {"matrix": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]})
    bbar = write_json(tmp_path, "bbar.json", {"matrix": [[1]]})
    code, out, _ = run_cli(
        capsys, "check-thm51", "--b", b, "--bbar", bbar, "--p", "3", "--n", "5"
    )
    assert code == 0
    assert out.startswith("CONSISTENT")

    b2 = write_json(tmp_path, "b2.json", {"matrix": [[2]]})
    bbar2 = write_json(tmp_path, "bbar2.json", {"matrix": [[3]]})
    code, out, _ = run_cli(
        capsys, "check-thm51", "--b", b2, "--bbar", bbar2, "--p", "5", "--n", "9"
    )
    assert code == 1
    assert out == "OBSTRUCTED\n"


def test_check_thm51_fast_flag(capsys, tmp_path):
    b = write_json(tmp_path, "b.json", {"matrix": [[-1, 0], [0, -1]]})
    bbar = write_json(tmp_path, "bbar.json", {"matrix": [[-1]]})
    code, out, _ = run_cli(
        capsys, "check-thm51", "--b", b, "--bbar", bbar, "--p", "2", "--n", "7", "--fast"
    )
    code2, out2, _ = run_cli(
        capsys, "check-thm51", "--b", b, "--bbar", bbar, "--p", "2", "--n", "7"
    )
    assert (code, out) == (code2, out2)


# ---------------------------------------------------------------------------
# reproduction pipeline


def test_repro_remark13_passes(capsys):
    code, out, _ = run_cli(capsys, "repro-remark13")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "Phi_15 = 1 - A + A^3 - A^4 + A^5 - A^7 + A^8"
    assert lines[9] == "A^8 = -1 + A - A^3 + A^4 - A^5 + A^7"
    for p in (11, 19, 29, 31):
        assert (
            f"p = {p}: OBSTRUCTED (L(2,1) is not the {p}-fold cyclic "
            f"branched cover of S^3 along any knot)" in lines
        )
    assert lines[-1] == "summary: PASS (all four primes obstructed)"


def test_repro_remark13_deterministic(capsys):
    _, first, _ = run_cli(capsys, "repro-remark13")
    _, second, _ = run_cli(capsys, "repro-remark13")
    assert first == second


# ---------------------------------------------------------------------------
# error handling


def test_bad_poly_exits_2(capsys):
    code, _, err = run_cli(capsys, "reduce", "--order", "15", "--poly", "A^^2")
    assert code == 2
    assert err.startswith("error:")
    assert err.count("\n") == 1


def test_missing_file_exits_2(capsys, tmp_path):
    code, _, err = run_cli(capsys, "jinv", "--braid", str(tmp_path / "nope.json"))
    assert code == 2
    assert err.startswith("error:")


def test_even_level_exits_2(capsys, tmp_path):
    path = write_json(tmp_path, "one.json", {"matrix": [[1]]})
    code, _, err = run_cli(capsys, "moo", "--n", "4", "--matrix", path)
    assert code == 2
    assert err.startswith("error:")


def test_bad_prime_pair_exits_2(capsys):
    code, _, err = run_cli(capsys, "check-cor12", "--v", "1", "--r", "5", "--p", "7")
    assert code == 2
    assert err.startswith("error:")


def test_unknown_subcommand_exits_2(capsys):
    code, _, _ = run_cli(capsys, "no-such-command")
    assert code == 2


def test_malformed_json_exits_2(capsys, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json", encoding="utf-8")
    code, _, err = run_cli(capsys, "jinv", "--braid", str(path))
    assert code == 2
    assert err.startswith("error:")


def test_braid_missing_strands_exits_2(capsys, tmp_path):
    path = write_json(tmp_path, "bad.json", {"word": [1]})
    code, _, err = run_cli(capsys, "jinv", "--braid", str(path))
    assert code == 2
    assert err.startswith("error:")


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-v"]))
