"""Exact multivariate polynomial arithmetic and parsing."""

import random

import pytest

from leibcoh.polynomials import Poly, format_poly, parse_poly
from leibcoh.scalars import ONE, Scalar

PARAMS = ("t", "s", "u", "w")


def random_poly(rng, params=PARAMS, terms=5, degree=3):
    coeffs = {}
    for _ in range(terms):
        exps = tuple(rng.randint(0, degree) for _ in params)
        value = Scalar(rng.randint(-4, 4), rng.randint(-2, 2))
        if value:
            coeffs[exps] = value
    return Poly(params, coeffs)


def random_point(rng, params=PARAMS):
    return {p: Scalar(rng.randint(-3, 3), rng.randint(-1, 1)) for p in params}


def test_ring_identities():
    rng = random.Random(4)
    for _ in range(25):
        f = random_poly(rng)
        g = random_poly(rng)
        h = random_poly(rng)
        assert (f + g) - g == f
        assert f * g == g * f
        assert f * (g + h) == f * g + f * h
        assert f + Poly.zero(PARAMS) == f
        assert f * Poly.constant(PARAMS, 1) == f


def test_evaluation_is_a_ring_homomorphism():
    # Evaluation against plain Scalar arithmetic is the oracle for every
    # ring operation.
    rng = random.Random(5)
    for _ in range(25):
        f = random_poly(rng)
        g = random_poly(rng)
        point = random_point(rng)
        fv = f.evaluate(point)
        gv = g.evaluate(point)
        assert (f + g).evaluate(point) == fv + gv
        assert (f * g).evaluate(point) == fv * gv
        assert (-f).evaluate(point) == -fv
        assert (f ** 3).evaluate(point) == fv * fv * fv


def test_hand_parsed_expressions():
    t = Poly.variable(PARAMS, "t")
    s = Poly.variable(PARAMS, "s")
    u = Poly.variable(PARAMS, "u")
    assert parse_poly("t+s", PARAMS) == t + s
    assert parse_poly("-t^2*s + 1/2*u", PARAMS) == -(t ** 2) * s + u * Scalar(1, 0) * Scalar("1/2")
    assert parse_poly("(t+s)*(t-s)", PARAMS) == t * t - s * s
    assert parse_poly("2", PARAMS) == Poly.constant(PARAMS, 2)
    assert parse_poly("i*t", PARAMS) == t * Scalar(0, 1)
    assert parse_poly("3/4", PARAMS) == Poly.constant(PARAMS, Scalar("3/4"))
    assert parse_poly("t*t*t", PARAMS) == t ** 3
    assert parse_poly("-(t+s)", PARAMS) == -(t + s)


def test_format_round_trip():
    rng = random.Random(6)
    for _ in range(30):
        f = random_poly(rng)
        assert parse_poly(format_poly(f), PARAMS) == f
    assert format_poly(Poly.zero(PARAMS)) == "0"
    assert parse_poly("0", PARAMS) == Poly.zero(PARAMS)


def test_format_examples():
    t = Poly.variable(PARAMS, "t")
    s = Poly.variable(PARAMS, "s")
    assert format_poly(t + s) == "s + t"
    assert format_poly(t * t - s) == "-s + t^2"
    assert format_poly(t * Scalar(0, 1)) == "i*t"
    assert format_poly(t * Scalar(1, 1)) == "(1+i)*t"
    assert format_poly(-t) == "-t"
    assert format_poly(t - ONE) == "-1 + t"


def test_evaluate_requires_all_parameters():
    f = parse_poly("t*s", PARAMS)
    with pytest.raises(ValueError):
        f.evaluate({"t": 1})
    assert f.evaluate({"t": 2, "s": 3, "u": 0, "w": 0}) == Scalar(6)


def test_parse_errors():
    for bad in ("t +", "(t", "t^-1", "t^s", "q", "t $ s", "", "t s"):
        with pytest.raises(ValueError):
            parse_poly(bad, PARAMS)
    with pytest.raises(ValueError):
        Poly.variable(PARAMS, "v")
    with pytest.raises(ValueError):
        Poly(("t", "t"), {})
    with pytest.raises(ValueError):
        Poly(("i",), {})
    with pytest.raises(ValueError):
        Poly(PARAMS, {(0, 1): ONE})
    p = Poly.variable(PARAMS, "t")
    with pytest.raises(ValueError):
        p + Poly.variable(("t", "s"), "s")
    with pytest.raises(ValueError):
        p ** -1
