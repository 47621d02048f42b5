"""Smoke tests for the python module."""

import pytest

import tapoly


def test_builtin_knots():
    names = tapoly.knot_names()
    assert "3_1" in names and "8_5" in names and "8_11" in names and "8_18" in names
    k = tapoly.knot("3_1")
    assert k.generator_count == 3
    assert k.meridian == "x1"
    assert len(k.relators) == 2
    with pytest.raises(RuntimeError):
        tapoly.knot("9_99")


def test_classical_alexander():
    assert tapoly.knot("3_1").alexander() == "t^2 - t + 1"
    assert tapoly.knot("8_11").alexander() == "2*t^4 - 7*t^3 + 9*t^2 - 7*t + 2"


def test_pd_ingestion():
    k = tapoly.knot_from_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]", "trefoil")
    assert k.alexander() == "t^2 - t + 1"
    assert k.longitude is not None
    back = tapoly.knot_from_presentation(k.presentation())
    assert back.presentation() == k.presentation()


def test_two_bridge():
    k = tapoly.two_bridge_knot(5, 3, "fig8")
    assert k.alexander() == "t^2 - 3*t + 1"


def test_twisted_pairs():
    pairs = tapoly.twisted_pairs(tapoly.knot("3_1"), 5)
    assert ("t^4 + 2*t^3 + 2*t^2 + 2*t + 1", "t^2 + 2*t + 1") in pairs
    assert len(tapoly.twisted_pairs(tapoly.knot("8_11"), 5)) == 10


def test_polynomials():
    assert tapoly.poly_divides("2*t^4 - 7*t^3 + 9*t^2 - 7*t + 2", "t^2 - t + 1")
    assert not tapoly.poly_divides("t^2 - t + 1", "2*t^4 - 7*t^3 + 9*t^2 - 7*t + 2")
    assert tapoly.poly_gcd(["t^2 - 1", "t - 1"]) == "t - 1"
    assert tapoly.poly_canonical("2*t^3 - 2*t^2", p=5) == "4*t + 1"


def test_order_verdicts():
    v = tapoly.no_surjection(tapoly.knot("3_1"), tapoly.knot("8_11"), 5)
    assert v["kind"] == "NO-SURJECTION"
    ok, why = tapoly.verify_certificate(v["report"])
    assert ok, why


def test_verify_hom_and_degree_one():
    text = """
source: 8_18
target: 3_1
y1 -> x1
y2 -> x2
y3 -> x1
y4 -> x3
y5 -> x3
y6 -> x1 x3 x1^-1
y7 -> x3
y8 -> x1
"""
    verdict = tapoly.verify_hom(text)
    assert verdict["kind"] == "SURJECTION-VERIFIED"
    d = tapoly.degree_one(text)
    assert d["kind"] == "SURJECTION-VERIFIED"
    assert d["solved"] and d["b"] == 1 and d["degree_one"]
