"""
Hilbert series of S/I and Macaulay's growth bound.

The series is kept as an exact integer numerator N(t) with
HS_{S/I}(t) = N(t) / (1 - t)^n. Binomials use scipy's exact integer mode.
"""
import logging
from dataclasses import dataclass
from itertools import combinations

from scipy.special import comb
from sympy import Poly, ZZ, symbols

from algebra_scripts.errors import ResourceError, ValidationError
from algebra_scripts.monomials import (
    add_generators,
    colon_variable,
    count_monomials,
    lcm,
    monomials_of_degree,
    standard_monomials,
    variable,
)
from algebra_scripts.settings import DEFAULT_SETTINGS

LOGGER = logging.getLogger(__name__)

T = symbols("t")

PIVOT_RULES = ("first", "last", "frequent")


def _binomial(top, bottom):
    if bottom < 0 or top < bottom:
        return 0
    return int(comb(top, bottom, exact=True))


def _to_coefficients(poly):
    """Ascending integer coefficients of a sympy Poly."""
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


@dataclass(frozen=True)
class HilbertData:
    """
    Hilbert series numerator of S/I in n variables.

    Args:
        n (int): Number of variables the series denominator (1 - t)^n refers to.
        numerator (tuple[int, ...]): Ascending coefficients of N(t).
    """
    n: int
    numerator: tuple

    def value(self, d):
        """H(d) = sum_k c_k * C(n - 1 + d - k, n - 1)."""
        if d < 0:
            return 0
        return sum(c * _binomial(self.n - 1 + d - k, self.n - 1)
                   for k, c in enumerate(self.numerator) if k <= d)

    def values(self, last_degree):
        return [self.value(d) for d in range(last_degree + 1)]

    @property
    def numerator_degree(self):
        return len(self.numerator) - 1

    def as_record(self, last_degree=None):
        if last_degree is None:
            last_degree = self.numerator_degree + 2
        return {
            "variables": self.n,
            "numerator": list(self.numerator),
            "values": self.values(last_degree),
        }


def _pure_power_numerator(ideal):
    poly = Poly(1, T, domain=ZZ)
    for g in ideal.gens:
        poly = poly * Poly(1 - T ** g.degree, T, domain=ZZ)
    return poly


def _pivot_candidates(ideal):
    return sorted({j for g in ideal.gens if len(g.support) > 1 for j in g.support})


def _choose_pivot(ideal, rule):
    candidates = _pivot_candidates(ideal)
    if not candidates:
        return None
    if rule == "first":
        return candidates[0]
    if rule == "last":
        return candidates[-1]
    counts = {j: sum(1 for g in ideal.gens if g.exponents[j] > 0) for j in candidates}
    return max(candidates, key=lambda j: (counts[j], -j))


def _numerator(ideal, rule, memo):
    # explicit stack: the splitting depth grows with the total degree of the generators
    stack = [ideal]
    while stack:
        current = stack[-1]
        if current.gens in memo:
            stack.pop()
            continue
        pivot = _choose_pivot(current, rule)
        if pivot is None:
            memo[current.gens] = _pure_power_numerator(current)
            stack.pop()
            continue
        # HS(S/I) = HS(S/(I + x_j)) + t * HS(S/(I : x_j))
        added = add_generators(current, [variable(current.n, pivot)])
        colon = colon_variable(current, pivot)
        pending = [child for child in (added, colon) if child is not None and child.gens not in memo]
        if pending:
            stack.extend(pending)
            continue
        poly = memo[added.gens]
        if colon is not None:
            poly = poly + Poly(T, T, domain=ZZ) * memo[colon.gens]
        memo[current.gens] = poly
        stack.pop()
    return memo[ideal.gens]


def hilbert_series_numerator(ideal, pivot_rule="frequent"):
    """
    Exact Hilbert series numerator of S/I by pivot recursion.

    Args:
        ideal (MonomialIdeal): A proper monomial ideal.
        pivot_rule (str): Which variable of a mixed generator to split on:
            'first', 'last' or 'frequent' (most generators, ties to the lowest index).

    Returns:
        HilbertData: The numerator over (1 - t)^n.
    """
    if pivot_rule not in PIVOT_RULES:
        raise ValidationError(f"Unknown pivot rule '{pivot_rule}', expected one of {PIVOT_RULES}.")
    memo = {}
    poly = _numerator(ideal, pivot_rule, memo)
    LOGGER.debug("Hilbert numerator of %s used %d sub-ideals", ideal, len(memo))
    return HilbertData(ideal.n, _to_coefficients(poly))


def hilbert_numerator_inclusion_exclusion(ideal, settings=DEFAULT_SETTINGS):
    """Cross-check numerator sum over subsets A of G(I) of (-1)^|A| t^deg(lcm A)."""
    if len(ideal) > settings.inclusion_exclusion_limit:
        raise ResourceError(
            f"Inclusion-exclusion over {len(ideal)} generators exceeds the limit "
            f"{settings.inclusion_exclusion_limit}.")
    coefficients = {0: 1}
    for size in range(1, len(ideal) + 1):
        for subset in combinations(ideal.gens, size):
            degree = subset[0].degree if size == 1 else _lcm_degree(subset)
            coefficients[degree] = coefficients.get(degree, 0) + (-1) ** size
    top = max(k for k, c in coefficients.items() if c != 0)
    return HilbertData(ideal.n, tuple(coefficients.get(k, 0) for k in range(top + 1)))


def _lcm_degree(monomials):
    result = monomials[0]
    for m in monomials[1:]:
        result = lcm(result, m)
    return result.degree


def hilbert_values(ideal, last_degree):
    """H_{S/I}(0), ..., H_{S/I}(last_degree) from the exact series."""
    if last_degree < 0:
        raise ValidationError(f"Degree bound must be non-negative, got {last_degree}.")
    return hilbert_series_numerator(ideal).values(last_degree)


def count_standard_monomials(ideal, last_degree):
    """Direct count of standard monomials per degree, used to cross-check the series."""
    return [len(standard_monomials(ideal, d)) for d in range(last_degree + 1)]


@dataclass(frozen=True)
class MacaulayRep:
    """a = sum C(a_j, j) over `terms`, with a_d > a_{d-1} > ... > a_{j0} >= j0 >= 1."""
    a: int
    d: int
    terms: tuple

    def as_record(self):
        return {"a": self.a, "d": self.d, "terms": [{"top": top, "bottom": j} for top, j in self.terms]}


def macaulay_rep(a, d):
    """
    Greedy d-th Macaulay representation of a.

    Args:
        a (int): Non-negative integer to expand.
        d (int): Degree, at least 1.

    Returns:
        MacaulayRep: The unique representation; empty for a = 0.
    """
    if d < 1:
        raise ValidationError(f"Macaulay representations need d >= 1, got {d}.")
    if a < 0:
        raise ValidationError(f"Macaulay representations need a >= 0, got {a}.")
    terms = []
    remaining = a
    for j in range(d, 0, -1):
        if remaining == 0:
            break
        top = j
        while _binomial(top + 1, j) <= remaining:
            top += 1
        terms.append((top, j))
        remaining -= _binomial(top, j)
    return MacaulayRep(a, d, tuple(terms))


def macaulay_growth(a, d):
    """a^<d> = sum C(a_j + 1, j + 1) over the d-th representation of a."""
    return sum(_binomial(top + 1, j + 1) for top, j in macaulay_rep(a, d).terms)


@dataclass(frozen=True)
class SequenceCheck:
    ok: bool
    violation: int = None
    reason: str = ""


def is_O_sequence(values, n):
    """
    Checks H(0) = 1, H(1) <= n and H(d + 1) <= H(d)^<d> on a finite prefix.

    Returns:
        SequenceCheck: ok flag plus the first violating degree and why.
    """
    if not values:
        raise ValidationError("Cannot check an empty sequence.")
    for d, h in enumerate(values):
        if h < 0:
            return SequenceCheck(False, d, "negative value")
    if values[0] != 1:
        return SequenceCheck(False, 0, "H(0) must be 1")
    if len(values) > 1 and values[1] > n:
        return SequenceCheck(False, 1, f"H(1) exceeds n = {n}")
    for d in range(1, len(values) - 1):
        bound = macaulay_growth(values[d], d)
        if values[d + 1] > bound:
            return SequenceCheck(False, d + 1, f"H({d + 1}) exceeds H({d})^<{d}> = {bound}")
    return SequenceCheck(True)


def lex_growth_count(n, a, d):
    """
    Degree-(d + 1) monomials outside the ideal generated by the first
    dim S_d - a lex monomials of degree d. Brute-force oracle for a^<d>.
    """
    total = count_monomials(n, d)
    if not 0 <= a <= total:
        raise ValidationError(f"a = {a} is outside 0..{total} for n = {n}, d = {d}.")
    segment = [m.exponents for m, _ in zip(monomials_of_degree(n, d), range(total - a))]
    survivors = 0
    for m in monomials_of_degree(n, d + 1):
        if not any(all(x <= y for x, y in zip(s, m.exponents)) for s in segment):
            survivors += 1
    return survivors