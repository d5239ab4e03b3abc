import json
from fractions import Fraction

import jsonschema
import pytest
from hypothesis import given, strategies as st

from primeplaces.ap import APWitness
from primeplaces.classes import ExponentClass, decompose
from primeplaces.places import INFINITY, Place, euclid_witness
from primeplaces.report import SCHEMAS, load_schema, render_rational, to_csv, to_jsonable, validate


@pytest.mark.parametrize(
    "q, digits, rounding, text",
    [
        (Fraction(1, 3), None, "half-up", "1/3"),
        (Fraction(6, 3), None, "half-up", "2"),
        (Fraction(-1, 3), 3, "floor", "-0.334"),
        (Fraction(-1, 3), 3, "ceil", "-0.333"),
        (Fraction(-1, 3), 3, "half-up", "-0.333"),
        (Fraction(1, 2), 0, "half-up", "1"),
        (Fraction(-1, 2000), 3, "half-up", "-0.001"),
        (Fraction(-1, 3000), 3, "half-up", "0.000"),
        (Fraction(5, 2), 0, "ceil", "3"),
        (Fraction(123, 100), 4, "half-up", "1.2300"),
    ],
)
def test_render_rational(q, digits, rounding, text):
    assert render_rational(q, digits, rounding) == text


@given(st.fractions(), st.integers(0, 12))
def test_directed_rounding_encloses(q, digits):
    lo = Fraction(render_rational(q, digits, "floor"))
    hi = Fraction(render_rational(q, digits, "ceil"))
    assert lo <= q <= hi
    assert hi - lo <= Fraction(1, 10**digits)
    mid = Fraction(render_rational(q, digits))
    assert abs(mid - q) <= Fraction(1, 2 * 10**digits)


@given(st.fractions())
def test_exact_rendering_round_trips(q):
    assert Fraction(render_rational(q)) == q


def test_huge_integers_render():
    n = 7**40000
    assert render_rational(Fraction(n, 3)).endswith("/3")


def test_to_jsonable_types():
    assert to_jsonable(APWitness(1, 24)) == {"a": 1, "d": 24, "k": 3}
    assert to_jsonable(ExponentClass(2, (1, 0))) == {"m": 2, "v": [1, 0]}
    assert to_jsonable(decompose(72, 2)) == {"n": 72, "m": 2, "R": 2, "t": 6}
    assert to_jsonable([Place.finite(3), INFINITY, Fraction(2, 4), float("inf")]) == \
        ["3", "inf", "1/2", "inf"]
    w = to_jsonable(euclid_witness([2, 3]))
    assert w["q"] == "7/6" and w["global_product"] == "1"
    with pytest.raises(TypeError):
        to_jsonable(object())


def test_to_csv():
    rows = [{"a": 1, "ok": True}, {"a": 2, "ok": False}]
    assert to_csv(rows, ["a", "ok"]) == "a,ok\n1,true\n2,false\n"


@pytest.mark.parametrize("kind", sorted(SCHEMAS))
def test_schemas_are_valid_draft_2020_12(kind):
    schema = load_schema(kind)
    jsonschema.Draft202012Validator.check_schema(schema)


def test_rational_pattern_rejects_floats():
    data = {"q": 0.5, "items": [], "verified": True}
    with pytest.raises(jsonschema.ValidationError):
        validate("ApproxCertificate", data)
    json.dumps(data)
