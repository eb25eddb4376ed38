from fractions import Fraction

import hurwitzkit as hk

CUBIC = ["6", "11", "6", "1"]  # (x+1)(x+2)(x+3), ascending coefficients


def test_check_stable_cubic():
    rep = hk.check(CUBIC)
    assert rep["stable"] is True
    assert rep["routh"] == rep["minors_verdict"] == rep["hb"] == "Stable"
    assert rep["chain"]["cs"] == ["6/11", "121/60", "60/11"]
    assert rep["chain"]["b"] == "1"
    assert rep["minors"] == ["6", "66", "360", "360"]
    assert rep["interlacing"]["verdict"] is True


def test_check_unstable():
    rep = hk.check(["1", "-1", "1"])
    assert rep["stable"] is False
    assert "routh_failure" in rep


def test_routh_chain_failure_descriptor():
    out = hk.routh_chain(["1", "1", "1", "1"])
    assert "failure" in out


def test_minors_and_factorization():
    assert hk.leading_principal_minors(CUBIC, 4) == ["6", "66", "360", "360"]
    assert hk.verify_factorization(CUBIC, 6, 6) is True
    m = hk.hurwitz_matrix(CUBIC, 4, 4)
    assert m[0] == ["6", "6", "0", "0"]
    assert m[1] == ["0", "11", "1", "0"]


def test_totally_nonnegative():
    assert hk.totally_nonnegative(CUBIC)["ok"] is True
    bad = hk.totally_nonnegative(["1", "-1", "1"])
    assert bad["ok"] is False
    assert Fraction(bad["value"]) < 0


def test_interlacing_report():
    rep = hk.interlacing(CUBIC)
    assert rep["stable"] is True
    p = rep["p_roots"][0]
    assert Fraction(p["lo"]) <= Fraction(-1) <= Fraction(p["hi"])


def test_roots_and_oracle():
    roots = sorted(hk.roots(CUBIC), key=lambda z: z.real)
    assert abs(roots[0] - (-3)) < 1e-9
    assert abs(roots[2] - (-1)) < 1e-9
    oracle = hk.oracle_margin(CUBIC)
    assert oracle["verdict"] == "Stable"
    assert abs(oracle["margin"] + 1.0) < 1e-9


def test_generators_deterministic():
    a = hk.generate_stable(5, 42)
    assert a == hk.generate_stable(5, 42)
    assert hk.check(a)["stable"] is True
    b = hk.generate_random(5, 42)
    assert b == hk.generate_random(5, 42)
    assert len(b) == 6


def test_parse_error():
    try:
        hk.check(["abc"])
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError for bad coefficient")
