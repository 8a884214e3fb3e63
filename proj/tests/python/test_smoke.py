import json
import math
from fractions import Fraction

import pytest

import qpbc


def test_classical_numbers():
    assert qpbc.classical_number("polyBernoulli", 1, 1) == Fraction(1, 2)
    assert qpbc.classical_number("polyCauchy1", 2, 1) == Fraction(-1, 6)
    assert qpbc.classical_number("polyCauchy2", 2, 1) == Fraction(5, 6)


def test_family_values_are_exact_polynomials():
    c1 = qpbc.poly_cauchy1(1, 1)
    assert str(c1) == "(1)/(1 + q) + (-1)*z"
    assert qpbc.ParamPoly(str(c1)) == c1
    assert c1.degree("z") == 1
    assert c1.at_q1().substitute("rho", 1).substitute("z", 0).as_fraction() == Fraction(1, 2)
    assert c1.evaluate(q=0.5, rho=1.0, z=0.0) == pytest.approx(2 / 3)
    b = qpbc.family_value("polyBernoulli", 3, -1)
    assert qpbc.ParamPoly(str(b)) == b


def test_generating_function_matches_closed_form():
    coeffs = qpbc.generating_function("polyCauchy2", 2, 6)
    assert len(coeffs) == 7
    for n, value in enumerate(coeffs):
        assert value == qpbc.poly_cauchy2(n, 2)


def test_stirling_numbers():
    assert qpbc.stirling1(3, 1) == 2
    assert qpbc.stirling2(3, 2) == 3
    assert qpbc.weighted_stirling(2, 2, 1) == [1, 2]
    assert qpbc.weighted_stirling(1, 2, 0) == [0, 1, 1]
    big = qpbc.stirling1(30, 1)
    assert big == math.factorial(29)


def test_jackson_oracle():
    value, tail = qpbc.jackson_integral(lambda x: x * x, 0.5)
    assert value == pytest.approx(1 / 1.75, abs=1e-12)
    assert tail < 1e-9
    closed = qpbc.poly_cauchy1(3, 2).evaluate(q=0.3, rho=2.0, z=1 / 3)
    assert qpbc.oracle_family("polyCauchy1", 3, 2, 2.0, 1 / 3, q=0.3) == pytest.approx(closed, abs=1e-9)
    with pytest.raises(qpbc.NonconvergedTruncation):
        qpbc.oracle_family("polyCauchy1", 3, 1, 1.0, 0.0, q=0.9, truncation=20)


def test_identity_sweep():
    reports = qpbc.identity_sweep(nmax=3, theorem7_nmax=2, ks=[1])
    by_id = {}
    for r in reports:
        by_id.setdefault(r["id"], []).append(r)
    assert all(r["verified"] for r in by_id["T5_201"])
    assert all(r["verified"] for r in by_id["T6_301_RHO"])
    failed = [r for r in by_id["T6_301"] if not r["verified"]]
    assert [r["n"] for r in failed] == [2, 3]
    assert failed[0]["witness"].substitute("rho", 1).is_zero()


def test_cli_entry_point():
    code, out, _ = qpbc.run_cli(["table", "polyCauchy1", "--nmax", "2", "--at-q1", "--rho", "1", "--z", "0", "--format", "json"])
    assert code == 0
    values = [json.loads(line)["value"] for line in out.splitlines()]
    assert values == ["1", "1/2", "-1/6"]
    assert qpbc.run_cli(["table"])[0] == 2


def test_errors():
    with pytest.raises(qpbc.ParseError):
        qpbc.ParamPoly("(1)*w")
    with pytest.raises(ValueError):
        qpbc.family_value("bernoulli", 1, 1)
    with pytest.raises(TypeError):
        qpbc.poly_cauchy1(1, 1).substitute("z", 0.5)
