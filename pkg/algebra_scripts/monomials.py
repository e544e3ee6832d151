"""
Monomials and monomial ideals of S = K[x_1, ..., x_n].

Everything here is combinatorial: a monomial is its exponent vector and an
ideal is its minimal generating antichain. Listings are in descending lex
order with x_1 > x_2 > ... > x_n.
"""
import re
from dataclasses import dataclass
from functools import cmp_to_key, reduce

from scipy.special import comb

from algebra_scripts.errors import ParseError, PreconditionError, ResourceError, ValidationError

_FACTOR = re.compile(r"^x(\d+)(?:\^(-?\d+))?$")
_IDEAL_HEADER = re.compile(r"^\s*n\s*=\s*(\d+)\s*$")


@dataclass(frozen=True)
class Monomial:
    """Exponent vector; entry j is the exponent of x_{j+1}."""
    exponents: tuple

    def __post_init__(self):
        if any(e < 0 for e in self.exponents):
            raise ValidationError(f"Negative exponent in {self.exponents}.")

    @property
    def n(self):
        return len(self.exponents)

    @property
    def degree(self):
        return sum(self.exponents)

    @property
    def support(self):
        """0-based indices of the variables dividing the monomial."""
        return frozenset(j for j, e in enumerate(self.exponents) if e > 0)

    def is_one(self):
        return self.degree == 0

    def __mul__(self, other):
        _check_ambient(self, other)
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __str__(self):
        return format_monomial(self)


def one(n):
    return Monomial((0,) * n)


def variable(n, j):
    """The monomial x_{j+1} (0-based index j)."""
    exponents = [0] * n
    exponents[j] = 1
    return Monomial(tuple(exponents))


def product(monomials, n):
    return reduce(lambda a, b: a * b, monomials, one(n))


def _check_ambient(a, b):
    if a.n != b.n:
        raise ValidationError(f"Ambient variable counts differ: {a.n} vs {b.n}.")


def parse_monomial(text, n):
    """
    Parses a monomial written as x1^2*x3 (or "1") in n variables.

    Args:
        text (str): Product of factors x<i> or x<i>^<e>, joined by '*'.
        n (int): Ambient number of variables.

    Returns:
        Monomial: The exponent vector. Repeated factors add up.
    """
    text = text.strip()
    if text == "1":
        return one(n)
    if not text:
        raise ParseError("Empty monomial.")
    exponents = [0] * n
    for factor in text.split("*"):
        match = _FACTOR.match(factor.strip())
        if match is None:
            raise ParseError(f"Cannot parse factor '{factor.strip()}' in monomial '{text}'.")
        index = int(match.group(1))
        power = int(match.group(2)) if match.group(2) is not None else 1
        if not 1 <= index <= n:
            raise ParseError(f"Variable index x{index} out of range 1..{n}.")
        if power < 0:
            raise ParseError(f"Negative exponent {power} on x{index}.")
        exponents[index - 1] += power
    return Monomial(tuple(exponents))


def format_monomial(m):
    factors = [f"x{j + 1}" if e == 1 else f"x{j + 1}^{e}" for j, e in enumerate(m.exponents) if e > 0]
    return "*".join(factors) if factors else "1"


def lex_compare(a, b):
    """
    Pure exponent-lex comparison: the first differing exponent decides.

    Returns:
        int: -1, 0 or 1 for less, equal, greater.
    """
    _check_ambient(a, b)
    for x, y in zip(a.exponents, b.exponents):
        if x != y:
            return 1 if x > y else -1
    return 0


lex_key = cmp_to_key(lex_compare)


def sort_lex_descending(monomials):
    return sorted(monomials, key=lex_key, reverse=True)


def divides(a, b):
    _check_ambient(a, b)
    return all(x <= y for x, y in zip(a.exponents, b.exponents))


def lcm(a, b):
    _check_ambient(a, b)
    return Monomial(tuple(max(x, y) for x, y in zip(a.exponents, b.exponents)))


def quotient(b, a):
    """b / a, defined only when a divides b."""
    if not divides(a, b):
        raise PreconditionError(f"{format_monomial(a)} does not divide {format_monomial(b)}.")
    return Monomial(tuple(y - x for x, y in zip(a.exponents, b.exponents)))


def count_monomials(n, d):
    """dim_K S_d = C(n - 1 + d, d)."""
    if d < 0:
        return 0
    return int(comb(n - 1 + d, d, exact=True))


def monomials_of_degree(n, d):
    """Yields every degree-d monomial in n variables, descending lex."""
    def _rec(remaining, slots):
        if slots == 1:
            yield (remaining,)
            return
        for e in range(remaining, -1, -1):
            for rest in _rec(remaining - e, slots - 1):
                yield (e,) + rest

    if n == 0:
        if d == 0:
            yield Monomial(())
        return
    for exponents in _rec(d, n):
        yield Monomial(exponents)


@dataclass(frozen=True)
class MonomialIdeal:
    """
    A proper nonzero monomial ideal given by its minimal generators G(I).

    Build instances with `minimal_generators`; `gens` is stored descending lex.
    """
    n: int
    gens: tuple

    def __post_init__(self):
        if not self.gens:
            raise ValidationError("A monomial ideal needs at least one generator.")
        for g in self.gens:
            if g.n != self.n:
                raise ValidationError(f"Generator {g} lives in {g.n} variables, expected {self.n}.")
            if g.is_one():
                raise ValidationError("The unit ideal is not allowed.")

    def __len__(self):
        return len(self.gens)

    def __str__(self):
        return format_ideal(self)

    @property
    def max_degree(self):
        return max(g.degree for g in self.gens)

    def lcm_exponents(self):
        """Componentwise maximum of generator exponents (0 for absent variables)."""
        return reduce(lcm, self.gens).exponents


def minimal_generators(n, raw):
    """
    Reduces a generating set to the divisibility antichain G(I).

    Args:
        n (int): Ambient number of variables.
        raw (Iterable[Monomial]): Any generating set of the ideal.

    Returns:
        MonomialIdeal: The ideal with its unique minimal generators.
    """
    candidates = set(raw)
    if not candidates:
        raise ValidationError("Cannot build an ideal from an empty generator set.")
    if any(m.n != n for m in candidates):
        raise ValidationError(f"All generators must live in {n} variables.")
    if any(m.is_one() for m in candidates):
        raise ValidationError("The unit monomial generates the unit ideal, which is not allowed.")
    # a divisor always has degree <= its multiple, so scanning by degree keeps the test one-sided
    kept = []
    for m in sorted(candidates, key=lambda m: (m.degree, m.exponents)):
        if not any(divides(k, m) for k in kept):
            kept.append(m)
    return MonomialIdeal(n, tuple(sort_lex_descending(kept)))


def contains(ideal, m):
    if m.n != ideal.n:
        raise ValidationError(f"Monomial in {m.n} variables tested against an ideal in {ideal.n}.")
    return any(divides(g, m) for g in ideal.gens)


def standard_monomials(ideal, d):
    """Basis of (S/I)_d: degree-d monomials outside I, descending lex."""
    if d < 0:
        raise ValidationError(f"Degree must be non-negative, got {d}.")
    return [m for m in monomials_of_degree(ideal.n, d) if not contains(ideal, m)]


def colon_variable(ideal, j):
    """(I : x_{j+1}), or None when x_{j+1} is itself a generator (colon is the unit ideal)."""
    reduced = []
    for g in ideal.gens:
        exponents = list(g.exponents)
        exponents[j] = max(0, exponents[j] - 1)
        reduced.append(Monomial(tuple(exponents)))
    if any(m.is_one() for m in reduced):
        return None
    return minimal_generators(ideal.n, reduced)


def add_generators(ideal, extra):
    return minimal_generators(ideal.n, list(ideal.gens) + list(extra))


def extend_ambient(ideal, n):
    """Reads the same generators in n >= ideal.n variables."""
    if n < ideal.n:
        raise ValidationError(f"Cannot shrink the ambient ring from {ideal.n} to {n} variables.")
    pad = (0,) * (n - ideal.n)
    return MonomialIdeal(n, tuple(Monomial(g.exponents + pad) for g in ideal.gens))


def relabel(ideal, permutation):
    """
    Applies the variable substitution x_i -> x_{permutation[i-1]}.

    Args:
        ideal (MonomialIdeal): Ideal to relabel.
        permutation (Sequence[int]): 1-based image of each variable, a permutation of 1..n.

    Returns:
        MonomialIdeal: The relabelled ideal.
    """
    if sorted(permutation) != list(range(1, ideal.n + 1)):
        raise ValidationError(f"{list(permutation)} is not a permutation of 1..{ideal.n}.")
    relabelled = []
    for g in ideal.gens:
        exponents = [0] * ideal.n
        for j, e in enumerate(g.exponents):
            exponents[permutation[j] - 1] = e
        relabelled.append(Monomial(tuple(exponents)))
    return minimal_generators(ideal.n, relabelled)


def check_exponent_cap(ideal, cap):
    worst = max(max(g.exponents) for g in ideal.gens)
    if worst > cap:
        raise ResourceError(f"Exponent {worst} exceeds the configured cap {cap}.")


def parse_ideal(text):
    """Parses "n=<int>; <mon>, <mon>, ..." into a MonomialIdeal."""
    header, sep, body = text.partition(";")
    match = _IDEAL_HEADER.match(header)
    if not sep or match is None:
        raise ParseError(f"Ideal must look like 'n=<int>; <mon>, ...', got '{text.strip()}'.")
    n = int(match.group(1))
    if n < 1:
        raise ParseError("An ideal needs at least one variable.")
    terms = [t for t in body.split(",") if t.strip()]
    return minimal_generators(n, [parse_monomial(t, n) for t in terms])


def format_ideal(ideal):
    return f"n={ideal.n}; " + ", ".join(format_monomial(g) for g in ideal.gens)


def ideal_from_record(record):
    """Builds an ideal from {"variables": n, "generators": [[...], ...]}."""
    try:
        n = int(record["variables"])
        gens = [Monomial(tuple(int(e) for e in vector)) for vector in record["generators"]]
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"Malformed ideal record: {e}") from e
    if any(g.n != n for g in gens):
        raise ParseError(f"Every exponent vector must have length {n}.")
    return minimal_generators(n, gens)


def ideal_record(ideal):
    return {
        "variables": ideal.n,
        "generators": [list(g.exponents) for g in ideal.gens],
        "text": format_ideal(ideal),
    }
