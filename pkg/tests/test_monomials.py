import random
from itertools import combinations, product

import pytest

from algebra_scripts.errors import ParseError, PreconditionError, ResourceError, ValidationError
from algebra_scripts.monomials import (
    Monomial,
    check_exponent_cap,
    colon_variable,
    contains,
    count_monomials,
    divides,
    extend_ambient,
    format_ideal,
    format_monomial,
    ideal_from_record,
    ideal_record,
    lcm,
    lex_compare,
    minimal_generators,
    monomials_of_degree,
    parse_ideal,
    parse_monomial,
    quotient,
    relabel,
    sort_lex_descending,
    standard_monomials,
)


@pytest.mark.parametrize("text,n,exponents", [
    ("x1^2*x3", 3, (2, 0, 1)),
    ("1", 2, (0, 0)),
    ("x1*x1", 2, (2, 0)),
    (" x2 ", 2, (0, 1)),
    ("x3^0*x1", 3, (1, 0, 0)),
])
def test_parse_monomial(text, n, exponents):
    assert parse_monomial(text, n).exponents == exponents


@pytest.mark.parametrize("text", ["x4", "x0", "x1^-1", "y1", "", "x1**2", "x1^"])
def test_parse_monomial_rejects(text):
    with pytest.raises(ParseError):
        parse_monomial(text, 3)


def test_negative_exponent_vector():
    with pytest.raises(ValidationError):
        Monomial((1, -1))


def test_format_monomial():
    assert format_monomial(Monomial((2, 0, 1))) == "x1^2*x3"
    assert format_monomial(Monomial((0, 0))) == "1"
    assert parse_monomial(format_monomial(Monomial((0, 3, 1))), 3) == Monomial((0, 3, 1))


def test_lex_order():
    """x1 beats any power of x2, ties go to the next variable"""
    x1, x2_5 = Monomial((1, 0)), Monomial((0, 5))
    assert lex_compare(x1, x2_5) == 1
    assert lex_compare(x2_5, x1) == -1
    assert lex_compare(x1, Monomial((1, 0))) == 0
    listed = sort_lex_descending([Monomial((0, 2)), Monomial((1, 1)), Monomial((2, 0))])
    assert [m.exponents for m in listed] == [(2, 0), (1, 1), (0, 2)]


def test_lex_compare_is_a_total_order():
    rng = random.Random(31)
    for _ in range(500):
        n = rng.randint(1, 4)
        a, b, c = (Monomial(tuple(rng.randint(0, 3) for _ in range(n))) for _ in range(3))
        assert lex_compare(a, a) == 0
        assert lex_compare(a, b) == -lex_compare(b, a)
        assert (lex_compare(a, b) == 0) == (a == b)
        if lex_compare(a, b) >= 0 and lex_compare(b, c) >= 0:
            assert lex_compare(a, c) >= 0


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_format_parse_round_trip(n):
    for exponents in product(range(5), repeat=n):
        m = Monomial(exponents)
        assert parse_monomial(format_monomial(m), n) == m


def test_monomials_of_degree_descending():
    assert [m.exponents for m in monomials_of_degree(2, 2)] == [(2, 0), (1, 1), (0, 2)]
    cubics = list(monomials_of_degree(3, 3))
    assert len(cubics) == count_monomials(3, 3) == 10
    assert sort_lex_descending(cubics) == cubics
    assert [m.exponents for m in monomials_of_degree(3, 0)] == [(0, 0, 0)]


def test_divisibility_and_lcm():
    a, b = Monomial((1, 0, 2)), Monomial((2, 1, 2))
    assert divides(a, b)
    assert not divides(b, a)
    assert lcm(a, Monomial((0, 3, 1))).exponents == (1, 3, 2)
    assert quotient(b, a).exponents == (1, 1, 0)
    with pytest.raises(PreconditionError):
        quotient(a, b)
    with pytest.raises(ValidationError):
        divides(Monomial((1,)), Monomial((1, 0)))


def test_minimal_generators_drops_multiples():
    ideal = minimal_generators(2, [Monomial((2, 0)), Monomial((2, 1)), Monomial((1, 1)), Monomial((2, 0))])
    assert [g.exponents for g in ideal.gens] == [(2, 0), (1, 1)]


def test_ideal_rejects_unit_and_empty():
    with pytest.raises(ValidationError):
        minimal_generators(2, [Monomial((0, 0)), Monomial((1, 0))])
    with pytest.raises(ValidationError):
        minimal_generators(2, [])
    with pytest.raises(ValidationError):
        minimal_generators(2, [Monomial((1, 0, 0))])


def test_minimal_generators_antichain_law():
    """Every nonempty generating set of nonunit monomials in two variables with exponents <= 2"""
    box = [Monomial(e) for e in product(range(3), repeat=2) if any(e)]
    for size in range(1, len(box) + 1):
        for raw in combinations(box, size):
            ideal = minimal_generators(2, raw)
            assert set(ideal.gens) <= set(raw)
            for a, b in combinations(ideal.gens, 2):
                assert not divides(a, b) and not divides(b, a)
            assert all(contains(ideal, m) for m in raw)
            assert list(ideal.gens) == sort_lex_descending(ideal.gens)


def test_membership_matches_standard_monomials(population):
    for ideal in population:
        for d in range(4):
            standard = set(standard_monomials(ideal, d))
            for m in monomials_of_degree(ideal.n, d):
                assert contains(ideal, m) == (m not in standard)


def test_contains_and_standard_monomials():
    ideal = parse_ideal("n=2; x1^2, x1*x2")
    assert contains(ideal, Monomial((3, 1)))
    assert not contains(ideal, Monomial((1, 0)))
    assert [m.exponents for m in standard_monomials(ideal, 2)] == [(0, 2)]
    assert [m.exponents for m in standard_monomials(ideal, 1)] == [(1, 0), (0, 1)]


def test_colon_variable():
    ideal = parse_ideal("n=2; x1^2, x1*x2")
    colon = colon_variable(ideal, 0)
    assert format_ideal(colon) == "n=2; x1, x2"
    assert colon_variable(parse_ideal("n=3; x1, x2*x3"), 0) is None


def test_extend_ambient():
    ideal = extend_ambient(parse_ideal("n=2; x1*x2"), 4)
    assert ideal.n == 4
    assert format_ideal(ideal) == "n=4; x1*x2"
    with pytest.raises(ValidationError):
        extend_ambient(ideal, 3)


def test_relabel():
    ideal = relabel(parse_ideal("n=2; x1^2, x2"), [2, 1])
    assert format_ideal(ideal) == "n=2; x1, x2^2"
    with pytest.raises(ValidationError):
        relabel(ideal, [1, 1])


def test_parse_ideal():
    ideal = parse_ideal("n=3; x3^2, x1*x2")
    assert format_ideal(ideal) == "n=3; x1*x2, x3^2"
    assert ideal.max_degree == 2
    assert ideal.lcm_exponents() == (1, 1, 2)
    with pytest.raises(ParseError):
        parse_ideal("x1, x2")
    with pytest.raises(ParseError):
        parse_ideal("n=0; 1")
    with pytest.raises(ValidationError):
        parse_ideal("n=2; ")


def test_ideal_records():
    ideal = ideal_from_record({"variables": 2, "generators": [[1, 1], [2, 1]]})
    assert ideal_record(ideal) == {"variables": 2, "generators": [[1, 1]], "text": "n=2; x1*x2"}
    with pytest.raises(ParseError):
        ideal_from_record({"variables": 2, "generators": [[1]]})
    with pytest.raises(ParseError):
        ideal_from_record({"generators": [[1]]})


def test_exponent_cap():
    ideal = parse_ideal("n=1; x1^70")
    check_exponent_cap(ideal, 70)
    with pytest.raises(ResourceError):
        check_exponent_cap(ideal, 64)
