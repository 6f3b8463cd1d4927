import json
from importlib import resources
from pathlib import Path

import pytest

from bux import golden
from bux.cli import BUDGET_LIMITED, INPUT_ERROR, OK, VERIFY_FAILED, main
from bux.complex import complete_graph
from bux.io import (
    FormatError,
    certificate_to_obj,
    dump_certificate,
    dump_complex,
    load_certificate,
    load_complex,
    parse_certificate,
    parse_complex,
)

DATA = Path(str(resources.files("bux").joinpath("data")))
COMPLEXES = sorted((DATA / "complexes").glob("*.json"))
CERTS = sorted((DATA / "certificates").glob("*_gf2.json")) + sorted((DATA / "certificates").glob("*_int.json"))


def run(capsys, *argv):
    rc = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return rc, out, err


# --- formats ------------------------------------------------------------------------


@pytest.mark.parametrize("path", COMPLEXES, ids=lambda p: p.stem)
def test_complex_round_trip(path):
    text = path.read_text()
    cf = parse_complex(text, str(path))
    extra = cf.extra or {}
    assert dump_complex(cf.complex, cf.name, **extra) == text


@pytest.mark.parametrize("path", CERTS, ids=lambda p: p.stem)
def test_certificate_round_trip(path):
    cf = load_certificate(path)
    assert dump_certificate(cf.char_map(), cf.complex_ref) == path.read_text()


def test_inline_certificate_round_trip():
    cf = load_certificate(DATA / "certificates" / "boundary_simplex_3_gf2.json")
    text = dump_certificate(cf.char_map())
    again = parse_certificate(text)
    assert again.char_map() == cf.char_map()


def test_format_errors_name_the_location():
    with pytest.raises(FormatError) as e:
        parse_complex('{"m": 3, "facets": [[0, 1],\n [1, x]]}', "f.json")
    assert e.value.where.startswith("f.json:2:")
    with pytest.raises(FormatError) as e:
        parse_complex('{"m": 3, "facets": [[0, 1], [1, "a"]]}', "f.json")
    assert e.value.where == "f.json.facets[1]"
    with pytest.raises(FormatError):
        parse_complex('{"m": 3}')
    obj = certificate_to_obj(load_certificate(DATA / "certificates" / "boundary_simplex_3_gf2.json").char_map())
    obj["vectors"][2] = "012"
    with pytest.raises(FormatError) as e:
        parse_certificate(json.dumps(obj), "c.json")
    assert e.value.where == "c.json.vectors[2]"


def test_golden_files_are_current():
    assert golden.main([]) == 0


def test_spread_files_match():
    from bux.invariants import is_q_regular_real

    for path in (DATA / "certificates").glob("spread_*.json"):
        obj = json.loads(path.read_text())
        assert is_q_regular_real(obj["l"], obj["colors"], obj["q"])
        assert len(obj["colors"]) == (1 << obj["l"]) - 1


# --- cli ----------------------------------------------------------------------------


def test_cli_invariants_grotzsch(capsys):
    rc, out, _ = run(capsys, "invariants", DATA / "complexes" / "grotzsch.json")
    rep = json.loads(out)["report"]
    assert rc == OK and rep["r_real"] == [3, 3] and rep["gamma"] == [4, 4]


def test_cli_invariants_simplex(capsys):
    rc, out, _ = run(capsys, "invariants", DATA / "complexes" / "simplex_5.json")
    rep = json.loads(out)["report"]
    assert rc == OK and rep["r_real"] == [5, 5] and rep["s_real"] == [0, 0]


def test_cli_invariants_deltask(capsys):
    rc, out, _ = run(capsys, "invariants", DATA / "complexes" / "deltask_62_2.json", "--q-list", "2")
    rep = json.loads(out)["report"]
    assert rc == OK and rep["gamma_q"]["2"] == [32, 32]
    assert rep["obstruction_lower_bound"] == 7 and rep["r_real"][0] >= 7


def test_cli_reports_are_byte_identical(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for out in (a, b):
        assert run(capsys, "invariants", DATA / "complexes" / "petersen.json", "-o", out)[0] == OK
    assert a.read_bytes() == b.read_bytes()


def test_cli_budget_limited(capsys):
    rc, out, _ = run(capsys, "invariants", DATA / "complexes" / "grotzsch_k4.json", "--budget", "100")
    assert rc == BUDGET_LIMITED
    assert json.loads(out)["report"]["exact"] is False


def test_cli_verify_golden(capsys):
    rc, out, _ = run(
        capsys, "verify", DATA / "complexes" / "grotzsch_k4.json", DATA / "certificates" / "counterexample_gf2.json"
    )
    assert rc == OK and out.startswith("valid gf2")
    rc, out, _ = run(
        capsys, "verify", DATA / "complexes" / "grotzsch_k4.json", DATA / "certificates" / "counterexample_int.json"
    )
    assert rc == OK and out.startswith("valid int")


def test_cli_verify_tampered(tmp_path, capsys):
    src = DATA / "certificates" / "counterexample_gf2.json"
    obj = json.loads(src.read_text())
    obj["complex"] = str(DATA / "complexes" / "grotzsch_k4.json")
    obj["vectors"][11] = obj["vectors"][12]
    cert = tmp_path / "bad.json"
    cert.write_text(json.dumps(obj))
    rc, out, _ = run(capsys, "verify", DATA / "complexes" / "grotzsch_k4.json", cert)
    assert rc == VERIFY_FAILED
    assert "invalid: facet [" in out and "11" in out


def test_cli_verify_zeroed_vector(tmp_path, capsys):
    src = DATA / "certificates" / "counterexample_gf2.json"
    obj = json.loads(src.read_text())
    obj["complex"] = str(DATA / "complexes" / "grotzsch_k4.json")
    obj["vectors"][0] = "00000"
    cert = tmp_path / "zero.json"
    cert.write_text(json.dumps(obj))
    rc, out, _ = run(capsys, "verify", DATA / "complexes" / "grotzsch_k4.json", cert)
    assert rc == VERIFY_FAILED
    assert "facet [0, " in out and "00000" in out


def test_cli_verify_field_mismatch(capsys):
    args = ["verify", DATA / "complexes" / "grotzsch_k4.json", DATA / "certificates" / "counterexample_gf2.json"]
    rc, _, err = run(capsys, *args, "--field", "int")
    assert rc == INPUT_ERROR and "--lift" in err
    rc, out, _ = run(capsys, *args, "--field", "int", "--lift")
    assert rc == OK


def test_cli_verify_wrong_complex(capsys):
    rc, _, err = run(
        capsys, "verify", DATA / "complexes" / "k4.json", DATA / "certificates" / "counterexample_gf2.json"
    )
    assert rc == INPUT_ERROR


def test_cli_universal(capsys):
    rc, out, _ = run(capsys, "universal", "--l", "3", "--dim", "1")
    U = parse_complex(out).complex
    assert rc == OK and U == complete_graph(7)
    rc, out, _ = run(capsys, "universal", "--l", "2")
    obj = json.loads(out)
    assert obj["m"] == 3 and len(obj["facets"]) == 3 and obj["vertex_vectors"] == ["10", "01", "11"]
    rc, _, _ = run(capsys, "universal", "--l", "13")
    assert rc == INPUT_ERROR
    rc, out, _ = run(capsys, "universal", "--l", "2", "--format", "table")
    assert rc == OK and "# 2 = 11" in out


def test_cli_charmap(capsys, tmp_path):
    k4 = DATA / "complexes" / "k4.json"
    rc, out, _ = run(capsys, "charmap", k4, "--l", "3")
    assert rc == OK
    cert = tmp_path / "k4.json"
    cert.write_text(out)
    assert run(capsys, "verify", k4, cert)[0] == OK
    assert run(capsys, "charmap", k4, "--l", "2")[0] == VERIFY_FAILED
    assert run(capsys, "charmap", k4, "--l", "3", "--field", "int")[0] == OK


def test_cli_gamma_join_link(capsys, tmp_path):
    rc, out, _ = run(capsys, "gamma", DATA / "complexes" / "grotzsch.json")
    assert rc == OK and out.strip() == "gamma_1 = 4"
    rc, out, _ = run(capsys, "gamma", DATA / "complexes" / "deltask_62_2.json", "-q", "2")
    assert rc == OK and out.strip() == "gamma_2 = 32"
    rc, out, _ = run(capsys, "join", DATA / "complexes" / "grotzsch.json", DATA / "complexes" / "k4.json")
    assert rc == OK
    assert parse_complex(out).complex == load_complex(DATA / "complexes" / "grotzsch_k4.json").complex
    rc, out, _ = run(capsys, "link", DATA / "complexes" / "boundary_simplex_3.json", "--simplex", "0")
    assert rc == OK and json.loads(out)["vertex_index"] == [1, 2, 3]
    rc, _, _ = run(capsys, "link", DATA / "complexes" / "c5.json", "--simplex", "0,2")
    assert rc == INPUT_ERROR


def test_cli_goodpair(capsys):
    pair = ["--S", "1000,0100", "--T", "0010,0001"]
    assert run(capsys, "goodpair", "check", *pair)[0] == OK
    assert run(capsys, "goodpair", "check", "--S", "10,01", "--T", "11")[0] == VERIFY_FAILED
    rc, out, _ = run(capsys, "goodpair", "mix", *pair, "--index", "0,0")
    assert rc == OK and out.splitlines() == ["S = 1000, 0110", "T = 0010, 1001"]
    rc, out, _ = run(capsys, "goodpair", "shift", *pair, "--index", "0,1,0,1")
    assert rc == OK and out.splitlines() == ["S = 1000, 0100", "T = 0110, 0101"]
    rc, out, _ = run(capsys, "goodpair", "one", *pair, "--index", "0", "--side", "1")
    assert rc == OK and out.splitlines()[0] == "S = 1000, 1100"
    rc, out, _ = run(capsys, "goodpair", "push", *pair, "--coordinate", "0")
    assert rc == OK and out.startswith("T lies")
    rc, _, _ = run(capsys, "goodpair", "mix", "--S", "00001,11111,11101,10001", "--T", "11010,01111", "--index", "0,0")
    assert rc == VERIFY_FAILED
    rc, out, _ = run(capsys, "goodpair", "additivity", "--p", "3", "--q", "3")
    assert rc == OK and "= 4" in out


def test_cli_demos(capsys):
    rc, out, _ = run(capsys, "demo", "counterexample")
    assert rc == OK and "r_R = r = 5 < 6" in out and "[FAIL]" not in out
    rc, out, _ = run(capsys, "demo", "spreads")
    assert rc == OK and out.count("[PASS]") == 5
    rc, out, _ = run(capsys, "demo", "graph-formula")
    assert rc == OK and "Grotzsch" in out
    with pytest.raises(SystemExit):
        main(["demo", "nope"])


def test_budget_env(monkeypatch, capsys):
    monkeypatch.setenv("BUX_BUDGET", "50")
    rc, out, _ = run(capsys, "invariants", DATA / "complexes" / "grotzsch_k4.json")
    assert rc == BUDGET_LIMITED and json.loads(out)["budget"] == 50
