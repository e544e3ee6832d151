"""
Lexsegment ideals, the lex ideal with a prescribed Hilbert function and
the criticality test built on it.
"""
import logging
from dataclasses import dataclass
from itertools import islice

from algebra_scripts.errors import InvariantError, ValidationError
from algebra_scripts.hilbert import HilbertData, hilbert_series_numerator
from algebra_scripts.monomials import (
    MonomialIdeal,
    contains,
    count_monomials,
    extend_ambient,
    ideal_record,
    minimal_generators,
    monomials_of_degree,
)
from algebra_scripts.settings import DEFAULT_SETTINGS

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class LexIdealResult:
    """
    Lex ideal together with its generator degrees and certification flag.

    `certified` means its Hilbert series numerator equals the target one.
    """
    ideal: MonomialIdeal
    generator_degrees: tuple
    certified: bool

    def as_record(self):
        return {
            "ideal": ideal_record(self.ideal),
            "generator_degrees": list(self.generator_degrees),
            "certified": self.certified,
        }


def lex_segment(n, d, k):
    """The k lex-greatest monomials of degree d in n variables, descending."""
    total = count_monomials(n, d)
    if not 0 <= k <= total:
        raise ValidationError(f"Segment size {k} outside 0..{total} for n = {n}, d = {d}.")
    return list(islice(monomials_of_degree(n, d), k))


def _degree_part_is_segment(ideal, d):
    left_segment = False
    for m in monomials_of_degree(ideal.n, d):
        inside = contains(ideal, m)
        if inside and left_segment:
            return False
        if not inside:
            left_segment = True
    return True


def is_lexsegment(ideal):
    """
    Checks that each degree component of I is an initial lex segment.

    Degrees up to the largest generator degree decide; one further degree
    is checked as a consistency guard.
    """
    top = ideal.max_degree
    low = min(g.degree for g in ideal.gens)
    verdict = all(_degree_part_is_segment(ideal, d) for d in range(low, top + 1))
    if verdict and not _degree_part_is_segment(ideal, top + 1):
        raise InvariantError(f"{ideal} is lexsegment up to degree {top} but not in degree {top + 1}.")
    return verdict


def lex_ideal_from_numerator(n, target, settings=DEFAULT_SETTINGS):
    """
    Builds the lex ideal of K[x_1..x_n] whose quotient has the Hilbert series `target`.

    Args:
        n (int): Number of variables of the ring the lex ideal lives in.
        target (HilbertData): Numerator of the series to realize, read over (1 - t)^n.
        settings (Settings): Supplies the degree ceiling.

    Returns:
        LexIdealResult: The certified lex ideal.
    """
    target = HilbertData(n, target.numerator)
    generators = []
    current = None
    for d in range(settings.degree_ceiling + 1):
        h = target.value(d)
        total = count_monomials(n, d)
        if not 0 <= h <= total:
            raise InvariantError(f"H({d}) = {h} is not realizable in {n} variables (dim S_{d} = {total}).")
        segment = list(islice(monomials_of_degree(n, d), total - h + 1))
        overflow = segment.pop() if len(segment) > total - h else None
        if current is not None and overflow is not None and contains(current, overflow):
            raise InvariantError(f"Target values are not an O-sequence: degree {d} needs fewer than the forced monomials.")
        fresh = [m for m in segment if current is None or not contains(current, m)]
        if fresh:
            generators.extend(fresh)
            current = minimal_generators(n, generators)
            LOGGER.debug("Degree %d adds %d lex generators", d, len(fresh))
            continue
        if current is not None and hilbert_series_numerator(current).numerator == target.numerator:
            degrees = tuple(sorted(g.degree for g in current.gens))
            LOGGER.info("Lex ideal certified at degree %d with %d generators", d, len(current))
            return LexIdealResult(current, degrees, True)
    raise InvariantError(
        f"Lex construction not certified by degree {settings.degree_ceiling}; raise the degree ceiling.")


def lex_ideal_of(ideal, settings=DEFAULT_SETTINGS):
    """I^lex: the unique lex ideal with the Hilbert function of S/I."""
    return lex_ideal_from_numerator(ideal.n, hilbert_series_numerator(ideal), settings)


def _power_pattern(ideal):
    """Exponents a_1..a_t when G(I) has the universal lex shape, else None."""
    gens = ideal.gens
    t = len(gens)
    if t > ideal.n:
        return None
    last = gens[-1].exponents
    if any(last[j] for j in range(t, ideal.n)) or last[t - 1] < 1:
        return None
    a = last[:t]
    for i, g in enumerate(gens[:-1]):
        expected = [0] * ideal.n
        expected[:i] = a[:i]
        expected[i] = a[i] + 1
        if tuple(expected) != g.exponents:
            return None
    return a


def is_universal_lexsegment(ideal):
    """
    Structural test: G(I) = {x_1^{a_1}...x_{i-1}^{a_{i-1}} x_i^{a_i + 1} (i < t),
    x_1^{a_1}...x_t^{a_t}} with t <= n and a_t >= 1.
    """
    pattern = _power_pattern(ideal)
    if pattern is None:
        return False
    for extra in (0, 1, 2):
        if not is_lexsegment(extend_ambient(ideal, ideal.n + extra)):
            raise InvariantError(f"{ideal} has the universal shape but is not lexsegment in {ideal.n + extra} variables.")
    return True


def is_critical(ideal, settings=DEFAULT_SETTINGS):
    """
    I is critical when I^lex is universal lexsegment.

    |G(I^lex)| > n rejects at once; otherwise the structural test decides,
    and the two tests must agree.
    """
    lex = lex_ideal_of(ideal, settings)
    if len(lex.ideal) > ideal.n:
        return False
    if not is_universal_lexsegment(lex.ideal):
        raise InvariantError(
            f"I^lex = {lex.ideal} has at most n generators but is not universal lexsegment.")
    return True
