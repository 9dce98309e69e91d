import json
import warnings

import pytest

from malcev.cli import main
from malcev.core import algebra_to_json, catalog
from malcev.envelope import env_from_json, el_monomial, parse_monomial, product, EnvContext

with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    from fastapi.testclient import TestClient

from malcev.service import app, run_crosscheck

client = TestClient(app)


def test_catalog_endpoint():
    resp = client.get("/catalog")
    assert resp.status_code == 200
    entries = resp.json()
    names = [e["name"] for e in entries]
    assert names == ["S", "T", "A4", "M_nonsplit", "M_split", "sl2", "LV5", "octonions"]
    assert entries[0]["labels"] == ["a", "b", "c", "d"]


def test_verify_endpoint_pass_and_fail():
    ok = client.post("/verify", json={"algebra": "S", "variety": "malcev"})
    assert ok.status_code == 200 and ok.json()["passed"]
    bad = client.post("/verify", json={"algebra": "S", "variety": "jacobi"})
    assert bad.status_code == 200
    body = bad.json()
    assert not body["passed"]
    assert any("-6d" in f["detail"] for f in body["failures"])


def test_verify_unknown_algebra_and_variety():
    resp = client.post("/verify", json={"algebra": "nope", "variety": "malcev"})
    assert resp.status_code == 400
    resp = client.post("/verify", json={"algebra": "S", "variety": "unknown"})
    assert resp.status_code == 422  # schema-level enum


def test_verify_inline_algebra_json():
    payload = algebra_to_json(catalog("sl2"))
    resp = client.post("/verify", json={"algebra_json": payload, "variety": "malcev"})
    assert resp.status_code == 200 and resp.json()["passed"]
    resp = client.post("/verify", json={"algebra_json": {"broken": 1}, "variety": "malcev"})
    assert resp.status_code == 400


def test_multiply_engines_agree_and_roundtrip():
    for engine in ("generic", "closedform"):
        resp = client.post(
            "/multiply",
            json={"algebra": "S", "engine": engine, "m1": "abc", "m2": "bc"},
        )
        assert resp.status_code == 200
        body = resp.json()
        assert body["pretty"] == "ab^2c^2 - 2abcd + 2d^2"
        S = catalog("S")
        ctx = EnvContext(S)
        direct = product(
            ctx,
            el_monomial(parse_monomial(S.labels, "abc")),
            el_monomial(parse_monomial(S.labels, "bc")),
        )
        assert env_from_json(body["element"]) == direct


def test_multiply_errors():
    resp = client.post(
        "/multiply", json={"algebra": "LV5", "engine": "closedform", "m1": "x", "m2": "y"}
    )
    assert resp.status_code == 400
    resp = client.post(
        "/multiply", json={"algebra": "S", "engine": "generic", "m1": "zz", "m2": "a"}
    )
    assert resp.status_code == 400
    # octonions are not anticommutative: the envelope engine must refuse
    resp = client.post(
        "/multiply", json={"algebra": "octonions", "engine": "generic", "m1": "e1", "m2": "e2"}
    )
    assert resp.status_code == 400


def test_multiply_quotient_engine():
    resp = client.post(
        "/multiply", json={"algebra": "S", "engine": "quotient", "m1": "ab", "m2": "ac"}
    )
    assert resp.status_code == 200
    assert resp.json()["pretty"] == "a^2bc + abc - 3ad + d"
    # non-survivor input is rejected
    resp = client.post(
        "/multiply", json={"algebra": "S", "engine": "quotient", "m1": "bd", "m2": "a"}
    )
    assert resp.status_code == 400


def test_alternators_endpoint():
    resp = client.post("/alternators", json={"algebra": "S"})
    assert resp.status_code == 200
    got = {e["name"]: e["pretty"] for e in resp.json()}
    assert got == {
        "(a,bc,bc)": "2d^2",
        "(b,ac,ac)": "cd",
        "(c,ab,ab)": "-bd",
    }
    assert all(e["reduced_pretty"] == "0" for e in resp.json())
    resp = client.post("/alternators", json={"algebra": "T"})
    got = {e["name"]: e["pretty"] for e in resp.json()}
    assert got == {"(ab,ab,d)": "-1/6ce", "(bd,bd,a^2)": "1/18e^2"}


def test_crosscheck_endpoint_and_jobs_determinism():
    r1 = client.post("/crosscheck", json={"algebra": "S", "cap": 2, "jobs": 1})
    r4 = client.post("/crosscheck", json={"algebra": "S", "cap": 2, "jobs": 4})
    assert r1.status_code == r4.status_code == 200
    assert r1.json() == r4.json()
    assert r1.json()["passed"] and r1.json()["checks"] == 225
    bad = client.post("/crosscheck", json={"algebra": "sl2", "cap": 2})
    assert bad.status_code == 400


def test_run_crosscheck_direct():
    rep = run_crosscheck(catalog("T"), cap=1, jobs=2)
    assert rep.passed and rep.checks == 36


def test_crosscheck_mismatch_diff_names_first_monomial():
    from fractions import Fraction

    from malcev.closedform import product_diff

    closed = {(1, 0, 0, 0): Fraction(1), (0, 0, 0, 2): Fraction(3)}
    engine = {(1, 0, 0, 0): Fraction(1), (0, 0, 0, 2): Fraction(2)}
    msg = product_diff(("a", "b", "c", "d"), closed, engine)
    assert msg == "first differing monomial d^2: closed 3, engine 2"
    assert product_diff(("a", "b", "c", "d"), closed, dict(closed)) == "no difference"


def test_quotient_table_endpoint():
    resp = client.post("/quotient-table", json={"algebra": "S", "cap": 1})
    assert resp.status_code == 200
    entries = {(e["left"], e["right"]): e["pretty"] for e in resp.json()}
    assert entries[("c", "b")] == "bc - 2d"
    assert entries[("d", "d")] == "0"
    assert entries[("d", "a")] == "ad - d"


def test_octonion_verify_endpoint():
    resp = client.post("/octonion-verify", json={})
    assert resp.status_code == 200
    body = resp.json()
    assert body["chain"]["passed"]
    assert body["isomorphism_found"]
    assert sorted(j for j, _ in body["mapping"]) == list(range(7))
    assert all(s in (1, -1) for _, s in body["mapping"])


def test_identities_endpoint():
    resp = client.post("/identities", json={"decompose_g": True})
    assert resp.status_code == 200
    body = resp.json()
    assert body["bol_octonions"]["passed"]
    assert body["bol_lts"]["passed"]
    assert body["full_space_dim"] == 120
    dec = body["decomposition"]
    assert dec["member"] and dec["recombined"] and dec["span_dim"] == 82
    assert dec["coefficients"]
    # coefficients are exact rational strings
    from fractions import Fraction

    for entry in dec["coefficients"]:
        Fraction(entry["coefficient"])


def test_cli_verify_exit_codes(capsys):
    assert main(["verify", "--algebra", "S", "--variety", "malcev"]) == 0
    assert main(["verify", "--algebra", "S", "--variety", "jacobi"]) == 1
    out = capsys.readouterr().out
    assert "pass" in out and "FAIL" in out and "-6d" in out


def test_cli_usage_errors(capsys):
    assert main(["verify", "--algebra", "missing.json", "--variety", "malcev"]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--algebra", "S"])  # missing --variety
    assert exc.value.code == 2
    with pytest.raises(SystemExit):
        main(["not-a-command"])


def test_cli_multiply_text_and_json(capsys, tmp_path):
    assert main(["multiply", "--algebra", "S", "abc", "bc"]) == 0
    assert capsys.readouterr().out.strip() == "ab^2c^2 - 2abcd + 2d^2"
    assert main(["multiply", "--algebra", "S", "--format", "json", "abc", "bc"]) == 0
    body = json.loads(capsys.readouterr().out)
    assert body["pretty"] == "ab^2c^2 - 2abcd + 2d^2"
    # user-supplied algebra file goes through the same path
    f = tmp_path / "sl2.json"
    f.write_text(json.dumps(algebra_to_json(catalog("sl2"))))
    assert main(["multiply", "--algebra", str(f), "x", "h"]) == 0
    out = capsys.readouterr().out.strip()
    assert out == "hx - 2x"
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["multiply", "--algebra", str(bad), "x", "h"]) == 2


def test_cli_catalog_and_quotient_table(capsys):
    assert main(["catalog-list"]) == 0
    out = capsys.readouterr().out
    assert "octonions" in out and "M_nonsplit" in out
    assert main(["quotient-table", "--algebra", "S", "--cap", "1"]) == 0
    out = capsys.readouterr().out
    assert "(c) (b) = bc - 2d" in out


def test_cli_alternators(capsys):
    assert main(["alternators", "--algebra", "T"]) == 0
    out = capsys.readouterr().out
    assert "-1/6ce" in out and "1/18e^2" in out


def test_cli_crosscheck(capsys):
    assert main(["crosscheck", "--algebra", "S", "--cap", "1", "--jobs", "2"]) == 0
    out = capsys.readouterr().out
    assert "pass (25 checks)" in out
