import pytest

from algebra_scripts.errors import InvariantError, PreconditionError, ValidationError
from algebra_scripts.hilbert import hilbert_series_numerator
from algebra_scripts.lex import is_critical
from algebra_scripts.monomials import format_ideal, parse_ideal
from algebra_scripts.settings import Settings
from algebra_scripts.stanleyize import difference_sequence, stanleyize


def test_difference_sequence():
    hilbert = hilbert_series_numerator(parse_ideal("n=2; x1*x2"))
    assert difference_sequence(hilbert, 0) == [1, 2, 2, 2]
    assert difference_sequence(hilbert, 1) == [1, 1, 0, 0]
    assert difference_sequence(hilbert, 1, horizon=5) == [1, 1, 0, 0, 0, 0]


def test_difference_sequence_rejects():
    hilbert = hilbert_series_numerator(parse_ideal("n=2; x1*x2"))
    with pytest.raises(ValidationError):
        difference_sequence(hilbert, 3)
    with pytest.raises(InvariantError):
        difference_sequence(hilbert, 2)


def test_critical_input_is_refused():
    with pytest.raises(PreconditionError):
        stanleyize(parse_ideal("n=2; x1*x2"))


def test_artinian_input_is_its_own_answer():
    ideal = parse_ideal("n=2; x1^2, x1*x2, x2^2")
    certificate = stanleyize(ideal)
    assert certificate.depth == 0
    assert certificate.stanley_ideal == ideal
    assert certificate.difference_prefix == (1, 2, 0, 0, 0)
    assert certificate.verified


def test_positive_depth():
    """x3 is regular on S/I, so J lives in two variables"""
    certificate = stanleyize(parse_ideal("n=3; x1^2, x1*x2, x2^2"))
    assert certificate.depth == 1
    assert format_ideal(certificate.j_lex) == "n=2; x1^2, x1*x2, x2^2"
    assert format_ideal(certificate.stanley_ideal) == "n=3; x1^2, x1*x2, x2^2"
    assert certificate.hilbert_prefix == (1, 3, 3, 3, 3)
    assert certificate.difference_prefix == (1, 2, 0, 0, 0)
    record = certificate.as_record()
    assert record["checks"] == {"hilbert_equal": True, "depth_equal": True, "sdepth_ge_depth": True}
    assert record["sdepth"] >= 1
    assert record["prime"] == 32003


def test_stanley_ideal_differs_from_input():
    certificate = stanleyize(parse_ideal("n=3; x1*x2, x1*x3, x2*x3"))
    assert certificate.depth == 1
    assert format_ideal(certificate.stanley_ideal) == "n=3; x1^2, x1*x2, x2^2"
    assert certificate.verified


def test_unverified_stanley_depth_is_reported():
    certificate = stanleyize(parse_ideal("n=3; x1^2, x1*x2, x2^2"), settings=Settings(node_budget=1))
    assert certificate.sdepth_ge_depth is None
    assert certificate.sdepth is None
    assert certificate.as_record()["checks"]["sdepth_ge_depth"] == "not verified"
    assert certificate.verified


def test_random_non_critical_population(population):
    candidates = [ideal for ideal in population if not is_critical(ideal)]
    assert len(candidates) >= 20
    checked = 0
    for ideal in candidates:
        certificate = stanleyize(ideal)
        assert certificate.hilbert_equal
        assert certificate.depth_equal
        if certificate.sdepth_ge_depth is not None:
            checked += 1
            assert certificate.sdepth_ge_depth
    assert checked >= 0.9 * len(candidates)
