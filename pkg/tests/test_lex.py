import pytest

from algebra_scripts.critical import build_canonical, parse_spec
from algebra_scripts.errors import InvariantError, ValidationError
from algebra_scripts.hilbert import HilbertData, hilbert_series_numerator
from algebra_scripts.lex import (
    is_critical,
    is_lexsegment,
    is_universal_lexsegment,
    lex_ideal_from_numerator,
    lex_ideal_of,
    lex_segment,
)
from algebra_scripts.monomials import format_ideal, parse_ideal
from algebra_scripts.settings import Settings


def test_lex_segment():
    assert [m.exponents for m in lex_segment(2, 2, 2)] == [(2, 0), (1, 1)]
    assert lex_segment(3, 1, 0) == []
    with pytest.raises(ValidationError):
        lex_segment(2, 2, 4)


@pytest.mark.parametrize("text,expected", [
    ("n=2; x1*x2", "n=2; x1^2"),
    ("n=2; x2^2", "n=2; x1^2"),
    ("n=3; x1*x2, x2*x3", "n=3; x1^2, x1*x2"),
    ("n=2; x1^2, x1*x2, x2^2", "n=2; x1^2, x1*x2, x2^2"),
    ("n=3; x1^2, x1*x2, x2^2", "n=3; x1^2, x1*x2, x1*x3, x2^3"),
])
def test_lex_ideal_of(text, expected):
    lex = lex_ideal_of(parse_ideal(text))
    assert format_ideal(lex.ideal) == expected
    assert lex.certified


def test_lex_generator_degrees():
    lex = lex_ideal_of(parse_ideal("n=3; x1^2, x1*x2, x2^2"))
    assert lex.generator_degrees == (2, 2, 2, 3)
    assert lex.as_record()["generator_degrees"] == [2, 2, 2, 3]


def test_lex_ideal_has_same_series(population):
    for ideal in population:
        lex = lex_ideal_of(ideal)
        assert hilbert_series_numerator(lex.ideal).numerator == hilbert_series_numerator(ideal).numerator
        assert is_lexsegment(lex.ideal)


def test_lex_ideal_is_idempotent(population):
    for ideal in population:
        lex = lex_ideal_of(ideal).ideal
        assert lex_ideal_of(lex).ideal == lex


def test_unrealizable_target():
    with pytest.raises(InvariantError):
        lex_ideal_from_numerator(2, HilbertData(2, (1, 1)))


def test_degree_ceiling():
    with pytest.raises(InvariantError):
        lex_ideal_of(parse_ideal("n=2; x1*x2"), Settings(degree_ceiling=1))


def test_lex_ideal_in_fewer_variables():
    """The numerator of a depth-one quotient read over one variable less"""
    hilbert = hilbert_series_numerator(parse_ideal("n=3; x1^2, x1*x2, x2^2"))
    lex = lex_ideal_from_numerator(2, hilbert)
    assert format_ideal(lex.ideal) == "n=2; x1^2, x1*x2, x2^2"


@pytest.mark.parametrize("text,expected", [
    ("n=2; x1^2, x1*x2, x2^2", True),
    ("n=2; x1^2", True),
    ("n=2; x1*x2", False),
    ("n=2; x2", False),
    ("n=3; x1, x2^2", True),
    ("n=3; x1^2, x2", False),
])
def test_is_lexsegment(text, expected):
    assert is_lexsegment(parse_ideal(text)) == expected


@pytest.mark.parametrize("text,expected", [
    ("n=2; x1, x2", True),
    ("n=2; x1^2, x1*x2", True),
    ("n=3; x1^2, x1*x2, x1*x3^2", True),
    ("n=2; x1^2", True),
    ("n=2; x1^2, x1*x2, x2^2", False),
    ("n=3; x1^2, x1*x2, x2^2", False),
    ("n=2; x1*x2", False),
])
def test_is_universal_lexsegment(text, expected):
    assert is_universal_lexsegment(parse_ideal(text)) == expected


@pytest.mark.parametrize("text,expected", [
    ("n=2; x1^2, x1*x2, x2^2", False),
    ("n=2; x1*x2", True),
    ("n=3; x1*x2, x2*x3", True),
    ("n=3; x1^2, x1*x2, x2^2", False),
    ("n=3; x1*x2*x3", True),
])
def test_is_critical(text, expected):
    assert is_critical(parse_ideal(text)) == expected


@pytest.mark.parametrize("spec", [
    "n=3; m1=x2; m2=x3",
    "n=3; m1=1; m2=x2^2; m3=x3",
    "n=4; m1=x1*x3; m2=x4",
    "n=2; m1=x2; m2=x2^2",
])
def test_canonical_ideals_are_critical(spec):
    assert is_critical(build_canonical(parse_spec(spec)))


def test_criticality_matches_generator_count(population):
    for ideal in population:
        assert is_critical(ideal) == (len(lex_ideal_of(ideal).ideal) <= ideal.n)
