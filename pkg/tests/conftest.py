import random

import pytest

from algebra_scripts.lex import is_critical
from algebra_scripts.monomials import Monomial, minimal_generators


def draw_ideals(seed, count, max_n=4, max_generators=4, max_exponent=2):
    """Random monomial ideals, skipping draws that give only the unit monomial."""
    rng = random.Random(seed)
    ideals = []
    while len(ideals) < count:
        n = rng.randint(1, max_n)
        raw = [Monomial(tuple(rng.randint(0, max_exponent) for _ in range(n)))
               for _ in range(rng.randint(1, max_generators))]
        raw = [m for m in raw if not m.is_one()]
        if raw:
            ideals.append(minimal_generators(n, raw))
    return ideals


@pytest.fixture(scope="session")
def population():
    return draw_ideals(seed=2024, count=200)


@pytest.fixture(scope="session")
def small_population():
    return draw_ideals(seed=7, count=40, max_n=3)


@pytest.fixture(scope="session")
def critical_population():
    """At least 200 random critical ideals, drawn in batches of 100."""
    critical, seed = [], 2024
    while len(critical) < 200:
        critical.extend(ideal for ideal in draw_ideals(seed, 100) if is_critical(ideal))
        seed += 1
    return critical
