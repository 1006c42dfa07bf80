import json
from fractions import Fraction
from pathlib import Path

import pytest

from polydiv.classify import gorenstein, rational_singularities
from polydiv.curves import (
    EC_ORIGIN,
    P1_INFINITY,
    EllipticCurveQ,
    EllipticPoint,
    ProjectiveLine,
    p1_point,
)
from polydiv.errors import InvalidInputError, ParseError, ShapeError
from polydiv.geometry import make_cone, make_polyhedron
from polydiv.pdiv import AffineSpace, is_proper, polyhedral_divisor
from polydiv.problem_io import (
    emit_problem,
    emit_report,
    parse_problem,
    report_payload,
)
from polydiv.verdicts import Verdict

DATA = Path(__file__).parent / "data"

P1 = ProjectiveLine()
RAY = ((1,),)


def halfline(vertex):
    return make_polyhedron([(Fraction(vertex),)], make_cone(RAY, 1))


def read(name: str) -> str:
    return (DATA / name).read_text()


def test_parse_golden_document():
    d = parse_problem(read("golden_one.json"))
    expected = polyhedral_divisor(
        P1,
        1,
        RAY,
        {
            p1_point(0): halfline(Fraction(-1, 4)),
            p1_point(1): halfline(Fraction(-1, 4)),
            P1_INFINITY: halfline(Fraction(3, 4)),
        },
    )
    assert d == expected


def test_parse_affine_space_document():
    d = parse_problem(read("affine_plane.json"))
    assert d.base == AffineSpace(2)
    assert d.support == (1, 2)
    assert d.coefficient(1).vertices == ((Fraction(-1, 2),),)


def test_parse_elliptic_document():
    d = parse_problem(read("elliptic_pair.json"))
    assert d.base == EllipticCurveQ(-1, 0)
    assert d.support == (EC_ORIGIN, EllipticPoint(0, 0))
    assert is_proper(d).verdict is Verdict.YES


def test_round_trip_is_identity():
    for name in ("golden_one.json", "affine_plane.json", "elliptic_pair.json"):
        d = parse_problem(read(name))
        again = parse_problem(emit_problem(d))
        assert again == d, name


def test_emit_canonicalizes():
    d = parse_problem(read("golden_one.json"))
    doc = json.loads(emit_problem(d))
    assert list(doc) == ["lattice_rank", "tail_cone", "base", "coefficients"]
    assert doc["tail_cone"] == {"rays": [[1]]}
    assert doc["coefficients"][0] == {"point": "0", "vertices": [["-1/4"]]}
    assert doc["coefficients"][-1] == {"point": "inf", "vertices": [["3/4"]]}


def test_integer_rationals_are_accepted():
    text = json.dumps(
        {
            "lattice_rank": 1,
            "tail_cone": {"rays": [[1]]},
            "base": {"kind": "P1"},
            "coefficients": [{"point": 2, "vertices": [[-1]]}],
        }
    )
    d = parse_problem(text)
    assert d.coefficient(p1_point(2)).vertices == ((Fraction(-1),),)


def test_extra_rays_inside_the_tail_are_tolerated():
    text = json.dumps(
        {
            "lattice_rank": 1,
            "tail_cone": {"rays": [[1]]},
            "base": {"kind": "P1"},
            "coefficients": [
                {"point": "0", "vertices": [["1/2"]], "extra_rays": [[2]]}
            ],
        }
    )
    d = parse_problem(text)
    assert d.coefficient(p1_point(0)).vertices == ((Fraction(1, 2),),)


def test_extra_rays_outside_the_tail_are_rejected():
    text = json.dumps(
        {
            "lattice_rank": 1,
            "tail_cone": {"rays": [[1]]},
            "base": {"kind": "P1"},
            "coefficients": [
                {"point": "0", "vertices": [["1/2"]], "extra_rays": [[-1]]}
            ],
        }
    )
    with pytest.raises(InvalidInputError) as exc:
        parse_problem(text)
    assert any("extra_rays[0]" in v for v in exc.value.violations)


def test_malformed_json_reports_position():
    with pytest.raises(ParseError) as exc:
        parse_problem("{\n  \"lattice_rank\": 1,\n}")
    assert exc.value.line == 3


def test_floats_are_rejected_with_path():
    text = json.dumps(
        {
            "lattice_rank": 1,
            "tail_cone": {"rays": [[1]]},
            "base": {"kind": "P1"},
            "coefficients": [{"point": "0", "vertices": [[0.25]]}],
        }
    )
    with pytest.raises(InvalidInputError) as exc:
        parse_problem(text)
    assert any("coefficients[0].vertices[0][0]" in v for v in exc.value.violations)
    assert any("floating-point" in v for v in exc.value.violations)


def test_violations_are_collected_together():
    text = json.dumps(
        {
            "lattice_rank": 1,
            "tail_cone": {"rays": [[1]]},
            "base": {"kind": "P1"},
            "coefficients": [
                {"point": "0", "vertices": [["1/0"]]},
                {"point": "nope/", "vertices": [["1"]]},
                {"point": "2", "vertices": [["1"], ["1", "2"]]},
            ],
        }
    )
    with pytest.raises(InvalidInputError) as exc:
        parse_problem(text)
    joined = "\n".join(exc.value.violations)
    assert "coefficients[0].vertices[0][0]" in joined
    assert "coefficients[1].point" in joined
    assert "coefficients[2].vertices[1]" in joined
    assert len(exc.value.violations) == 3


def test_unknown_keys_and_kinds_are_flagged():
    with pytest.raises(InvalidInputError) as exc:
        parse_problem(json.dumps({"lattice_rank": 1, "tail": {}, "base": {}}))
    joined = "\n".join(exc.value.violations)
    assert "unknown key 'tail'" in joined
    assert "missing required key 'tail_cone'" in joined

    with pytest.raises(InvalidInputError) as exc:
        parse_problem(
            json.dumps(
                {
                    "lattice_rank": 1,
                    "tail_cone": {"rays": []},
                    "base": {"kind": "parabola"},
                }
            )
        )
    assert any("base.kind" in v for v in exc.value.violations)


def test_boolean_rank_is_rejected():
    text = json.dumps(
        {"lattice_rank": True, "tail_cone": {"rays": [[1]]}, "base": {"kind": "P1"}}
    )
    with pytest.raises(InvalidInputError):
        parse_problem(text)


def test_abstract_base_parsing():
    proper = parse_problem(
        json.dumps(
            {
                "lattice_rank": 1,
                "tail_cone": {"rays": [[1]]},
                "base": {"kind": "abstract", "genus": 2},
                "coefficients": [{"point": "p", "vertices": [["1/2"]]}],
            }
        )
    )
    assert proper.base.genus == 2
    with pytest.raises(InvalidInputError) as exc:
        parse_problem(
            json.dumps(
                {
                    "lattice_rank": 1,
                    "tail_cone": {"rays": [[1]]},
                    "base": {"kind": "abstract", "genus": 2, "proper": False},
                }
            )
        )
    assert any("proper abstract curves" in v for v in exc.value.violations)


def test_off_curve_point_is_a_violation():
    text = json.dumps(
        {
            "lattice_rank": 1,
            "tail_cone": {"rays": [[1]]},
            "base": {"kind": "elliptic", "a": "-1", "b": "0"},
            "coefficients": [{"point": {"x": "2", "y": "2"}, "vertices": [["1/2"]]}],
        }
    )
    with pytest.raises(InvalidInputError) as exc:
        parse_problem(text)
    assert any("does not satisfy" in v for v in exc.value.violations)


def test_report_payload_for_classification_reports():
    d = parse_problem(read("golden_one.json"))
    payload = report_payload(rational_singularities(d))
    assert payload == {
        "verdict": "no",
        "criterion": "floor-degrees-at-least-minus-one",
        "witness": [1],
    }
    gor = report_payload(gorenstein(d))
    assert gor["verdict"] == "yes"
    assert gor["canonical_index"] == "1"
    assert gor["vertical_multiplicities"] == [["0", "-1"], ["1", "-1"], ["inf", "0"]]
    assert gor["canonical_difference"] == [["0", "-1"], ["1", "-1"], ["inf", "2"]]


def test_emit_report_text_format():
    d = parse_problem(read("golden_one.json"))
    text = emit_report(rational_singularities(d), format="text")
    assert "verdict: no" in text.splitlines()
    assert "witness: [1]" in text.splitlines()
    nested = emit_report(gorenstein(d), format="text")
    assert "vertical_multiplicities[0]: [0, -1]" in nested.splitlines()
    with pytest.raises(ShapeError):
        emit_report(rational_singularities(d), format="yaml")


def test_emit_report_json_is_stable():
    d = parse_problem(read("golden_one.json"))
    parsed = json.loads(emit_report(rational_singularities(d)))
    assert list(parsed) == ["verdict", "criterion", "witness"]
