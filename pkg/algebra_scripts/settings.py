"""Tunable limits for every computation, with their documented defaults."""
from dataclasses import asdict, dataclass, replace

from sympy import isprime

from algebra_scripts.errors import ValidationError

DEFAULT_DEGREE_CEILING = 64
DEFAULT_PRIME = 32003
DEFAULT_NODE_BUDGET = 10_000_000
DEFAULT_POSET_CAP = 5000
DEFAULT_LCM_CAP = 4096
DEFAULT_EXPONENT_CAP = 64
DEFAULT_INCLUSION_EXCLUSION_LIMIT = 12


@dataclass(frozen=True)
class Settings:
    """
    Limits and field choice used by the search, lex and homology routines.

    Args:
        degree_ceiling (int): Last degree the lex construction may visit before giving up.
        prime (int): Characteristic of the prime field used for Koszul ranks.
        node_budget (int): Maximum number of intervals tried by one Stanley depth search.
        poset_cap (int): Maximum number of points in a characteristic poset.
        lcm_cap (int): Maximum size of the lcm lattice scanned for Betti numbers.
        exponent_cap (int): Largest exponent accepted from command-line input.
        inclusion_exclusion_limit (int): Largest generator count for the inclusion-exclusion cross-check.
    """
    degree_ceiling: int = DEFAULT_DEGREE_CEILING
    prime: int = DEFAULT_PRIME
    node_budget: int = DEFAULT_NODE_BUDGET
    poset_cap: int = DEFAULT_POSET_CAP
    lcm_cap: int = DEFAULT_LCM_CAP
    exponent_cap: int = DEFAULT_EXPONENT_CAP
    inclusion_exclusion_limit: int = DEFAULT_INCLUSION_EXCLUSION_LIMIT

    def __post_init__(self):
        for name, value in asdict(self).items():
            if not isinstance(value, int) or value < 1:
                raise ValidationError(f"Setting '{name}' must be a positive integer, got {value!r}.")
        if not isprime(self.prime):
            raise ValidationError(f"Setting 'prime' must be prime, got {self.prime}.")

    def with_overrides(self, **overrides):
        """Returns a validated copy with the non-None overrides applied."""
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})

    def as_record(self):
        return asdict(self)


DEFAULT_SETTINGS = Settings()
