"""Polynomial grammar, weight parsing, and the JSON report schema."""

import json
import random

import pytest

from conftest import random_poly
from polardeg.errors import DegenerateInputError, ParseError
from polardeg.fields import GF, QQ, DEFAULT_PRIME
from polardeg.parse import emit_report, parse_poly, parse_weights
from polardeg.poly import poly_str
from polardeg.polar import DegreeReport, TrialOutcome


def test_parse_classification_curves():
    conic = parse_poly("x0^2 + x1^2 + x2^2", 3, QQ)
    assert conic.is_homogeneous() and conic.total_degree() == 2
    triangle = parse_poly("x0*x1*x2", 3, QQ)
    assert len(triangle.terms) == 1
    tangent = parse_poly("x2*(x1^2 - x0*x2)", 3, QQ)
    assert tangent == parse_poly("x1^2*x2 - x0*x2^2", 3, QQ)


def test_parse_rational_coefficients():
    p = parse_poly("2/3*x0 - 1/2*x1", 2, QQ)
    assert p.terms[(1, 0)] * 3 == 2


def test_parse_denominator_inverted_mod_p():
    F = GF(DEFAULT_PRIME)
    p = parse_poly("1/2*x0", 1, F)
    assert p.terms[(1,)] * 2 % DEFAULT_PRIME == 1


def test_parse_rejects_juxtaposition():
    with pytest.raises(ParseError):
        parse_poly("x0 x1", 2, QQ)
    with pytest.raises(ParseError):
        parse_poly("2x0", 1, QQ)
    with pytest.raises(ParseError):
        parse_poly("x0(x1)", 2, QQ)


def test_parse_error_positions():
    with pytest.raises(ParseError) as err:
        parse_poly("x0 + $", 1, QQ)
    assert err.value.col == 6
    with pytest.raises(ParseError) as err:
        parse_poly("x0 +\n x9", 2, QQ)
    assert err.value.line == 2


def test_parse_unknown_variable():
    with pytest.raises(ParseError):
        parse_poly("x3", 3, QQ)
    with pytest.raises(ParseError):
        parse_poly("y", 3, QQ)


def test_parse_declared_variable_names():
    p = parse_poly("u*v + v^2", 2, QQ, variables=["u", "v"])
    assert p == parse_poly("x0*x1 + x1^2", 2, QQ)


def test_parse_negative_exponent_rejected():
    with pytest.raises(ParseError):
        parse_poly("x0^-1", 1, QQ)


def test_parse_zero_denominator_rejected():
    with pytest.raises(ParseError):
        parse_poly("1/0", 1, QQ)


def test_parse_denominator_divisible_by_modulus_rejected():
    with pytest.raises(ParseError):
        parse_poly(f"1/{DEFAULT_PRIME}*x0", 1, GF(DEFAULT_PRIME))


def test_parse_print_round_trip_random():
    rng = random.Random(99)
    for field in (QQ, GF(DEFAULT_PRIME)):
        for _ in range(40):
            p = random_poly(field, 3, 4, 5, rng)
            text = poly_str(p)
            q = parse_poly(text, 3, field)
            assert q == p
            assert poly_str(q) == text


def test_parse_weights_examples():
    assert parse_weights("1,1,1") == (1, 1, 1)
    w = parse_weights("1,-1,2/3")
    assert w[1] == -1 and w[2] * 3 == 2
    with pytest.raises(DegenerateInputError):
        parse_weights("1,0")
    with pytest.raises(ParseError):
        parse_weights("1,,2")


def _trial(seed, value, zero_dim=True, reduced=True):
    return TrialOutcome(seed, value, zero_dim, reduced)


def test_emit_report_schema_ok():
    rep = DegreeReport.from_trials(0, [_trial(s, 1) for s in range(5)])
    text = emit_report(rep, command="polar", polys=["x0^2+x1^2+x2^2"],
                       weights=["1"], nvars=3, field=GF(DEFAULT_PRIME))
    doc = json.loads(text)
    assert doc["status"] == "ok" and doc["stable"] is True
    assert doc["i"] == 0 and doc["value"] == 1
    assert doc["field"] == {"kind": "prime-field", "prime": DEFAULT_PRIME}
    assert [t["value"] for t in doc["trials"]] == [1] * 5
    assert list(doc) == ["command", "input", "field", "i", "value",
                         "trials", "stable", "status"]


def test_emit_report_empty_trials_is_error():
    rep = DegreeReport.from_trials(0, [])
    doc = json.loads(emit_report(rep, command="polar", polys=[], weights=[],
                                 nvars=3, field=QQ))
    assert doc["status"] == "error"


def test_emit_report_mixed_trials_unstable():
    trials = [_trial(0, 2), _trial(1, 2), _trial(2, 2), _trial(3, 1), _trial(4, 2)]
    rep = DegreeReport.from_trials(1, trials)
    assert rep.value == 2 and rep.stable is False
    doc = json.loads(emit_report(rep, command="polar", polys=["x0"], weights=["1"],
                                 nvars=1, field=GF(DEFAULT_PRIME)))
    assert doc["status"] == "unstable" and doc["stable"] is False
    assert [t["value"] for t in doc["trials"]] == [2, 2, 2, 1, 2]


def test_degree_report_majority_rule():
    # strict majority of all trials must agree with reduced outcomes
    trials = [_trial(0, 3), _trial(1, 3), _trial(2, 4, reduced=False),
              _trial(3, None, zero_dim=False, reduced=False), _trial(4, 3)]
    rep = DegreeReport.from_trials(0, trials)
    assert rep.value == 3 and not rep.stable
    split = [_trial(0, 3), _trial(1, 3), _trial(2, 4), _trial(3, 4),
             _trial(4, None, zero_dim=False, reduced=False)]
    assert DegreeReport.from_trials(0, split).value is None
