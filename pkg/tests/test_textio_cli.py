from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toricsat.cli import parse_config, run
from toricsat.forge import example_enss, fundamental_enss, verify_enss
from toricsat.lattice import is_saturated
from toricsat.textio import (
    ParseError,
    emit_certificate,
    load_certificate,
    load_certificate_text,
    parse_vectors,
    write_certificate,
)


def test_parse_vectors():
    vs = parse_vectors("# header\n1 2/3\n\n-1 0  # trailing\n")
    assert [tuple(map(str, v)) for v in vs] == [("1", "2/3"), ("-1", "0")]
    with pytest.raises(ParseError, match="line 2"):
        parse_vectors("1 2\n1 2 3\n")
    with pytest.raises(ParseError, match="line 1, field vector"):
        parse_vectors("1 x\n")


@pytest.mark.parametrize("key", [(1, None), (2, None), (3, 5), (4, 3), (5, None), (6, None), (7, None), (8, None), (9, None)])
def test_certificate_round_trip(key):
    c = example_enss(*key)
    assert load_certificate_text(emit_certificate(c)) == c


def test_round_trip_plain_and_routed():
    c = is_saturated([(2, -2), (3, -3)]).witness
    assert load_certificate_text(emit_certificate(c)) == c
    c = fundamental_enss(15, 6)
    assert load_certificate_text(emit_certificate(c)) == c


def test_load_example_six_and_verify(tmp_path):
    path = tmp_path / "ex6.cert"
    write_certificate(example_enss(6), path)
    assert verify_enss(load_certificate(path)).ok


def test_field_order_fixed():
    keys = [line.split(":")[0] for line in emit_certificate(example_enss(1)).splitlines()
            if not line.startswith(" ")]
    assert keys == ["dimension", "coordinates", "highest_weight", "generators", "witness",
                    "cone_combination", "lattice_combination", "disc_fn", "provenance"]


def test_rational_lattice_coefficient_rejected():
    text = emit_certificate(example_enss(2))
    lines = text.splitlines()
    i = next(j for j, line in enumerate(lines) if line.startswith("lattice_combination"))
    lines[i] = "lattice_combination: 0:1/2"
    with pytest.raises(ParseError) as err:
        load_certificate_text("\n".join(lines))
    assert err.value.field == "lattice_combination" and err.value.line == i + 1


@pytest.mark.parametrize("mutate,fld", [
    (lambda s: s.replace("dimension: 7", "dimension: seven"), "dimension"),
    (lambda s: s.replace("coordinates: quasi", "coordinates: usual"), "coordinates"),
    (lambda s: s.replace("witness: 1 1 1 0 0 0 0", "witness: 1 1 1"), "witness"),
    (lambda s: s.replace("cone_combination: ", "cone_combination: 99:1/2 "), "cone_combination"),
    (lambda s: s.replace("provenance: ", "provenance: unquoted "), "provenance"),
    (lambda s: s.replace("disc_fn: -2 5 5", "disc_fn: -2 5 6"), "disc_fn"),
    (lambda s: s.split("provenance")[0], "provenance"),
])
def test_parse_errors_name_field(mutate, fld):
    text = mutate(emit_certificate(example_enss(1)))
    with pytest.raises(ParseError) as err:
        load_certificate_text(text)
    assert err.value.field == fld


@settings(max_examples=40, deadline=None)
@given(st.text(max_size=60))
def test_provenance_survives_any_text(s):
    c = example_enss(8)
    c2 = c.with_context(c.highest_weight, provenance=s)
    assert load_certificate_text(emit_certificate(c2)).provenance == s


# -- CLI ----------------------------------------------------------------------------


def _run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(parse_config(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_cli_classify_positive():
    code, out, _ = _run(["classify", "-n", "6", "--highest", "pi3"])
    assert code == 0 and "exceptional-table-row" in out


def test_cli_classify_negative_writes_certificate(tmp_path):
    path = tmp_path / "c.cert"
    code, out, _ = _run(["classify", "-n", "7", "--highest", "pi2", "-o", str(path)])
    assert code == 1
    c = load_certificate(path)
    assert verify_enss(c).ok and c.provenance.startswith("Example 1")
    code, out, _ = _run(["verify", "--file", str(path)])
    assert code == 0 and "verified" in out


def test_cli_saturated_files(tmp_path):
    indep = tmp_path / "indep.txt"
    indep.write_text("1 0 0\n0 1 0\n0 0 1\n")
    assert _run(["saturated", "--file", str(indep)])[0] == 0
    nss = tmp_path / "nss.txt"
    nss.write_text("2 -2\n3 -3\n")
    code, out, _ = _run(["saturated", "--file", str(nss), "--format", "structured"])
    rec = json.loads(out)
    assert code == 1 and rec["saturated"] is False
    assert load_certificate_text(rec["certificate"]).witness == (1, -1)


def test_cli_exit_codes(tmp_path, monkeypatch):
    assert _run(["classify", "-n", "3", "--highest", "0 1 2"])[0] == 2
    assert _run(["classify", "-n", "3"])[0] == 2
    assert _run(["saturated", "--file", str(tmp_path / "missing.txt")])[0] == 2
    assert _run(["scan", "-n", "4", "--highest", "2 1 1 0", "--subset-cap", "5"])[0] == 3
    monkeypatch.setenv("TORICSAT_SUBSET_CAP", "5")
    assert _run(["scan", "-n", "4", "--highest", "2 1 1 0"])[0] == 3
    bad = tmp_path / "bad.cert"
    bad.write_text("dimension: 2\n")
    code, _, err = _run(["verify", "--file", str(bad)])
    assert code == 2 and "field coordinates" in err


def test_cli_bad_flag_exits_two():
    with pytest.raises(SystemExit) as exc:
        parse_config(["scan", "--threads", "0"])
    assert exc.value.code == 2


def test_cli_scan_and_weights():
    code, out, err = _run(["scan", "-n", "4", "--highest", "pi2", "--format", "structured"])
    rec = json.loads(out)
    assert code == 0 and rec["saturated"] and rec["subsets_enumerated"] == 27
    assert "orbit representatives" in err  # progress goes to the status channel only
    code, out, _ = _run(["weights", "-n", "3", "--highest", "2 1 0", "--format", "structured"])
    assert code == 0 and len(json.loads(out)["weights"]) == 7


def test_cli_forge(tmp_path):
    code, out, _ = _run(["forge", "--example", "4", "-k", "3"])
    assert code == 1 and verify_enss(load_certificate_text(out)).ok
    code, out, _ = _run(["forge", "-n", "4", "--highest", "2 0 0 0"])
    assert code == 1 and verify_enss(load_certificate_text(out)).ok
    code, out, _ = _run(["forge", "-n", "5", "--highest", "pi2"])
    assert code == 0 and "normal" in out


def test_cli_main_theorem_deterministic():
    a = _run(["main-theorem", "--max-n", "5", "--format", "structured", "--threads", "1"])
    b = _run(["main-theorem", "--max-n", "5", "--format", "structured", "--threads", "3"])
    assert a[0] == b[0] == 0 and a[1] == b[1]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "toricsat", "classify", "-n", "5", "--highest", "pi2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "exceptional-table-row" in proc.stdout
