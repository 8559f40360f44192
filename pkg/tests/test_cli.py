import io
import json
import random
import subprocess
import sys

import pytest

from hopf_forge.cli import ParseError, parse, parse_scalar, run
from hopf_forge.hopf import random_elements
from hopf_forge.pbw import element_from_json, get_algebra, normal_form, render_element
from hopf_forge.qfield import GENERIC, cyclotomic_field, scalar_from_json

U = get_algebra("U")
q = GENERIC.q


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def cli_json(*argv):
    code, out, err = cli("--format", "json", *argv)
    assert err == ""
    return code, json.loads(out)


# -- the parser ------------------------------------------------------------------------


def test_parse_examples():
    d = (q - q ** -1).inverse()
    assert parse("E1*F1 - F1*E1", U) == (U.gen("K1") - U.gen("K1^-1")).scale(d)
    assert parse("qbinom(2,1)*K1", U) == U.gen("K1").scale(q + q ** -1)
    assert parse("E1^3", get_algebra("u", 3)).is_zero()
    assert parse("E2*E1", U) == normal_form(["E2", "E1"], U)
    assert parse("K1^-2", U) == U.word(["K1^-1", "K1^-1"])
    assert parse("q^-1*E1/2", U) == U.gen("E1").scale(q ** -1 / 2)
    assert parse("-(E1 + F1)", U) == -(U.gen("E1") + U.gen("F1"))
    assert parse("qint(3) - qfac(3)/qint(2)", U).is_zero()


def test_parse_scalar():
    f = cyclotomic_field(5)
    assert parse_scalar("q^5", f) == 1
    assert parse_scalar("qint(2)^2", GENERIC) == (q + q ** -1) ** 2
    with pytest.raises(ParseError):
        parse_scalar("E1", GENERIC)


@pytest.mark.parametrize(
    "text,column",
    [("E1 +", 5), ("E1 ** F1", 5), ("E3", 1), ("(E1", 4), ("E1 $ F1", 4)],
)
def test_parse_errors_have_positions(text, column):
    with pytest.raises(ParseError) as info:
        parse(text, U)
    assert info.value.line == 1
    assert info.value.column == column


def test_parse_semantic_errors():
    with pytest.raises(ParseError, match="negative exponent"):
        parse("E1^-1", U)
    with pytest.raises(ParseError, match="non-scalar"):
        parse("E1/F1", U)
    with pytest.raises(ParseError, match="division by zero"):
        parse("E1/(q - q)", U)
    with pytest.raises(ParseError, match="not legal"):
        parse("F1", get_algebra("uGeq0", 3))
    with pytest.raises(ParseError, match="cap"):
        parse("E1^65", U)
    with pytest.raises(ParseError, match="argument"):
        parse("qbinom(2)", U)


def test_exponent_cap_env(monkeypatch):
    monkeypatch.setenv("HOPF_FORGE_CAP", "3")
    with pytest.raises(ParseError):
        parse("E1^4", U)
    assert parse("E1^3", U) == U.word(["E1"] * 3)


@pytest.mark.parametrize("kind,l", [("U", None), ("u", 3), ("Dphi", 5), ("uLeq0", 3)])
def test_render_parse_round_trip(kind, l):
    alg = get_algebra(kind, l)
    xs = random_elements(alg, 50, max_degree=4, rng=random.Random(f"{kind}{l}"))
    # quotients of q-integers give non-Laurent coefficients too
    xs += [x.scale(q_like(alg)) for x in xs[:10]]
    for x in xs:
        assert parse(render_element(x), alg) == x


def q_like(alg):
    f = alg.field
    return (f.q + 2).inverse() if alg.l is None else (f.q - 2).inverse()


# -- subcommands ---------------------------------------------------------------------------


def test_nf_text():
    code, out, err = cli("nf", "--algebra", "U", "E2*E1")
    assert (code, out, err) == (0, "-q*E12 + q*E1*E2\n", "")


def test_nf_json_round_trips():
    code, data = cli_json("nf", "--algebra", "U", "E1*F1 - F1*E1")
    assert code == 0 and data["command"] == "nf" and data["ok"]
    x = element_from_json(data["result"]["element"])
    assert x == parse("E1*F1 - F1*E1", U)


def test_mul_delta_antipode_counit():
    assert cli("mul", "--algebra", "U", "E2", "E1")[1] == "-q*E12 + q*E1*E2\n"
    assert cli("delta", "--algebra", "U", "K1")[1] == "K1 (x) K1\n"
    assert cli("antipode", "--algebra", "U", "K1")[1] == "K1^-1\n"
    assert cli("counit", "--algebra", "U", "3 + E1")[1] == "3\n"
    code, data = cli_json("delta", "--l", "3", "--algebra", "u", "E1")
    assert code == 0 and len(data["result"]["tensor"]["terms"]) == 2


def test_pair():
    code, data = cli_json("pair", "--l", "3", "E1", "F1")
    f = cyclotomic_field(3)
    assert scalar_from_json(data["result"]["scalar"]) == (f.q ** 2 - 1).inverse()
    code, data = cli_json("pair", "--l", "3", "--normalization", "symmetric", "E1", "F1")
    assert scalar_from_json(data["result"]["scalar"]) == (f.q - f.q ** -1).inverse()
    code, data = cli_json("pair", "--l", "3", "--inverse", "K1", "K2")
    assert scalar_from_json(data["result"]["scalar"]) == f.q


def test_double_mul_and_pi_z():
    code, out, _ = cli("double-mul", "--l", "3", "1", "F1", "E1", "1")
    assert code == 0 and out.strip()
    code, out, _ = cli("pi-z", "--l", "3", "--z", "1", "0", "E1")
    # q^2 = -q - 1 in the cyclotomic field
    assert (code, out) == (0, "pi_z: (-q - 1)*E1\neps_z: 0\n")


def test_module_commands():
    code, data = cli_json("simple", "--l", "3", "--m1", "1", "--m2", "0")
    assert code == 0 and data["ok"]
    code, data = cli_json("hwv", "--l", "3", "--m1", "2", "--m2", "1")
    assert code == 0
    code, data = cli_json("verma", "--lam1", "q^2", "--lam2", "1", "--n", "2")
    assert code == 0 and data["ok"]
    code, data = cli_json("cg", "--m", "1", "--n", "1")
    assert code == 0 and data["ok"]
    code, data = cli_json("tensor", "--l", "3", "--left", "1", "0", "--right", "1", "0")
    assert code == 0
    code, data = cli_json("pullback", "--l", "3", "--m1", "1", "--m2", "0", "--z", "1", "0")
    assert code == 0 and data["ok"]


def test_idem_commands():
    code, data = cli_json("idem", "decompose-u1", "--l", "3")
    assert code == 0 and data["ok"] and data["command"] == "idem decompose-u1"
    assert len(data["result"]["summands"]) == 6
    code, data = cli_json("idem", "solve", "--l", "3", "--i", "0")
    assert code == 0 and len(data["result"]["solutions"]) == 4
    sol = data["result"]["solutions"][1]
    code, verdict = cli_json("idem", "verify", "--l", "3", json.dumps(sol))
    assert code == 0 and verdict["ok"]


def test_idem_verify_rejects_non_idempotent():
    bad = {"i": 0, "l": 3, "coeffs": [{"l": 3, "zeta": ["1", "0"]}, {"l": 3, "zeta": ["1", "0"]}, {"l": 3, "zeta": ["0", "0"]}]}
    code, out, err = cli("idem", "verify", json.dumps(bad))
    assert code == 1 or (code == 2 and "error" in json.loads(err))


def test_congruence():
    code, data = cli_json("congruence", "--l", "5", "--m1", "1", "--m2", "0")
    assert code == 0
    assert data["result"]["solutions"][0]["t2"] == 1 and data["result"]["solutions"][0]["t3"] == 2
    code, data = cli_json("congruence", "--l", "7")
    assert code == 0 and len(data["result"]["solutions"]) == 49


def test_selftest():
    code, data = cli_json("selftest")
    assert code == 0 and data["ok"]


# -- errors and determinism ------------------------------------------------------------------


def test_errors_are_structured():
    cases = [
        (["nf", "--algebra", "U", "E1 +"], "ParseError"),
        (["nf", "--bogus", "x"], "UsageError"),
        (["idem", "verify", "{bad"], "UsageError"),
        (["congruence", "--l", "3", "--m1", "1", "--m2", "0"], "ValueError"),
        (["nf", "--algebra", "u", "E1"], None),
        (["frobnicate"], "UsageError"),
    ]
    for argv, kind in cases:
        code, out, err = cli(*argv)
        assert code == 2 and out == "", argv
        payload = json.loads(err)
        assert set(payload) == {"error"} and "message" in payload["error"]
        if kind:
            assert payload["error"]["type"] == kind
    code, out, err = cli("nf", "--algebra", "U", "E1 +")
    assert json.loads(err)["error"]["column"] == 5


def test_output_is_deterministic():
    argv = ["--format", "json", "idem", "solve", "--l", "3", "--i", "2"]
    first = cli(*argv)[1]
    assert all(cli(*argv)[1] == first for _ in range(3))
    # also across processes (hash seeds differ)
    outs = {
        subprocess.run([sys.executable, "-m", "hopf_forge", *argv], capture_output=True, text=True, check=True).stdout
        for _ in range(2)
    }
    assert outs == {first}
