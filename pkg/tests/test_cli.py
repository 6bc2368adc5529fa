import io
import json

import pytest
from hypothesis import given, strategies as st

from strategies import (cqx_elements, dq_elements, heis_elements, oq_elements, torus_a,
                        torus_a_prime, torus_elements, uq_elements)
from uqtorus import cli, maps, oq, uq
from uqtorus.cli import ParseError, parse, parse_element
from uqtorus.scalar import q_power, root_order, set_root_order

q = q_power(1)


def test_parse_examples():
    assert parse("E*F - F*E", "uq-sl2") is not None
    assert parse("x11*x22 - q*x12*x21", "oq-sl2") is not None
    assert parse_element("E*F - F*E", "uq-sl2") == uq.E() * uq.F() - uq.F() * uq.E()
    assert parse_element("x11*x22 - q*x12*x21", "oq-sl2") == oq.OQ.one()


def test_implicit_multiplication_and_division():
    assert parse_element("x11 x22", "oq-sl2") == parse_element("x11*x22", "oq-sl2")
    assert parse_element("E/(q - q^-1)", "uq-sl2") == uq.E().scale((q - q ** -1).inverse())


def test_half_power_rejected_for_integral_generator():
    with pytest.raises(ParseError) as exc:
        parse_element("u^(1/2)", "qtorus:A")
    assert exc.value.pos == 1
    assert "column 2" in str(exc.value)
    assert parse_element("v^(1/2)", "qtorus:A'") * parse_element("v^(1/2)", "qtorus:A'") == \
        parse_element("v", "qtorus:A'")


@pytest.mark.parametrize("text,alg,pos", [
    ("E*", "uq-sl2", 2),
    ("Y", "uq-sl2", 0),
    ("x11 + x33", "oq-sl2", 6),
    ("E^x", "uq-sl2", 2),
    ("(E", "uq-sl2", 2),
    ("E $ F", "uq-sl2", 2),
])
def test_error_positions(text, alg, pos):
    with pytest.raises(ParseError) as exc:
        parse_element(text, alg)
    assert exc.value.pos == pos


def test_unknown_algebra():
    with pytest.raises(cli.AlgebraError):
        parse_element("E", "no-such-algebra")


def _w0_t_elements():
    return st.tuples(oq_elements(oq.OQ_W0), st.integers(-2, 2)).map(
        lambda p: maps.OQ_W0_T.embed(p[0], p[1]))


ROUND_TRIP = {
    "uq-sl2": uq_elements,
    "oq-sl2": oq_elements(oq.OQ),
    "oq-sl2-w0": oq_elements(oq.OQ_W0),
    "oq-sl2-w0w0": oq_elements(oq.OQ_W0W0),
    "oq-sl2-w0-t": _w0_t_elements(),
    "heis-sl2": heis_elements,
    "cqx-sl2": cqx_elements,
    "dq-sl2": dq_elements,
    "qtorus:A": torus_a,
    "qtorus:A'": torus_a_prime,
    maps.T4.name: torus_elements(maps.T4),
}


def test_round_trip_covers_builtin_registry():
    builtin = {k for k, e in cli.REGISTRY.items() if e.description != "torus from file"}
    assert set(ROUND_TRIP) == builtin


@pytest.mark.parametrize("alg", sorted(ROUND_TRIP))
def test_print_parse_round_trip(alg):
    @given(ROUND_TRIP[alg])
    def check(x):
        once = parse_element(str(x), alg)
        assert once == x
        assert parse_element(str(once), alg) == once
    check()


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_normalize_commutator(capsys):
    code, out, _ = run(capsys, "normalize", "--algebra", "uq-sl2", "F*E")
    assert code == 0
    expected = uq.E() * uq.F() - (uq.K(2) - uq.K(-2)).scale((q - q ** -1).inverse())
    assert parse_element(out.strip(), "uq-sl2") == expected


def test_normalize_from_stdin(capsys, monkeypatch):
    code, out, _ = run(capsys, "normalize", "--algebra", "oq-sl2", "-", stdin="x11 x22\n",
                       monkeypatch=monkeypatch)
    assert code == 0 and out.strip() == "q*x12*x21 + 1"


def test_map_phi_prime_on_f(capsys):
    code, out, _ = run(capsys, "map", "--name", "phiP", "F")
    assert code == 0
    want = parse_element("u*z", "qtorus:A'").scale((q ** -1 - q).inverse())
    assert parse_element(out.strip(), "qtorus:A'") == want


def test_map_j(capsys):
    code, out, _ = run(capsys, "map", "--name", "J", "x22")
    assert code == 0
    assert parse_element(out.strip(), "uq-sl2") == parse_element("K + q*Ehat*Fhat", "uq-sl2")


def test_mul_pair_eval(capsys):
    assert run(capsys, "mul", "--algebra", "oq-sl2", "x11", "x22")[1].strip() == "q*x12*x21 + 1"
    code, out, _ = run(capsys, "pair", "E", "F")
    assert code == 0 and parse_element(out.strip(), "uq-sl2") == uq.UQ.one().scale((q ** -1 - q).inverse())
    code, out, _ = run(capsys, "pair", "--algebra", "oq-sl2", "x11", "x11")
    assert out.strip() == "q^(-1/2)"
    assert run(capsys, "eval", "x12", "E")[1].strip() == "1"


def test_exit_codes(capsys):
    code, _, err = run(capsys, "normalize", "E*")
    assert code == 2 and "column 3" in err
    code, _, err = run(capsys, "verify", "--suite", "nope")
    assert code == 1 and "unknown suite" in err
    code, _, err = run(capsys, "map", "--name", "Jinv", "E")
    assert code == 1 and "graded piece" in err
    assert run(capsys)[0] == 2


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "phi-prime-relations")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert rows and all(set(r) == {"suite", "check", "status", "residual", "millis"} for r in rows)
    assert all(r["status"] == "pass" and r["residual"] == "0" for r in rows)


def test_verify_text(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "hc-factorization", "--text")
    assert code == 0 and out.startswith("[PASS] hc-factorization")


def test_verify_reports_failures(capsys, monkeypatch):
    from uqtorus import suites
    monkeypatch.setitem(suites.SUITES, "broken", lambda: [("one is zero", lambda: uq.UQ.one()),
                                                          ("raises", lambda: 1 / 0)])
    code, out, _ = run(capsys, "verify", "--suite", "broken")
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 1
    assert [r["status"] for r in rows] == ["fail", "fail"]
    assert rows[0]["residual"] == "1" and "ZeroDivisionError" in rows[1]["residual"]


def test_list_algebras(capsys):
    code, out, _ = run(capsys, "--list-algebras")
    names = [line.split("\t")[0] for line in out.splitlines()]
    assert code == 0 and "uq-sl2" in names and "qtorus:A'" in names


@pytest.fixture
def restore_root_order():
    n = root_order()
    yield
    set_root_order(n)


def test_root_order(capsys, restore_root_order):
    assert run(capsys, "normalize", "q^(1/8)*E")[0] == 2
    code, out, _ = run(capsys, "--root-order", "8", "normalize", "q^(1/8)*E")
    assert code == 0 and out.strip() == "q^(1/8)*E"
    assert run(capsys, "--root-order", "0", "normalize", "E")[0] == 2


def test_torus_from_file(tmp_path):
    path = tmp_path / "pair.txt"
    path.write_text("generators: a b\nskew:\n  0 1\n  -1 0\n")
    x = parse_element("a*b", f"qtorus:{path}")
    assert x == parse_element("q*b*a", f"qtorus:{path}")


def test_suite_alias(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "section8-tables")
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and rows and {r["suite"] for r in rows} == {"rank-one-tables"}
