"""
Stanley ideals with prescribed depth and Hilbert function.

For a non-critical I with depth(S/I) = b, the b-fold difference of H_{S/I}
is the Hilbert function of an Artinian-direction reduction in n - b
variables. Its lex ideal J, read back in n variables, gives L with the
same Hilbert function and depth as I. Only Hilbert data is used; no linear
forms are constructed.
"""
import logging
from dataclasses import dataclass

from scipy.special import comb

from algebra_scripts.critical import QUOTIENT
from algebra_scripts.errors import InvariantError, PreconditionError, ResourceError, ValidationError
from algebra_scripts.hilbert import hilbert_series_numerator, is_O_sequence
from algebra_scripts.homological import depth_quotient, sdepth_oracle
from algebra_scripts.lex import is_critical, is_lexsegment, is_universal_lexsegment, lex_ideal_from_numerator
from algebra_scripts.monomials import MonomialIdeal, extend_ambient, ideal_record
from algebra_scripts.settings import DEFAULT_SETTINGS

LOGGER = logging.getLogger(__name__)


def difference_sequence(hilbert, b, horizon=None):
    """
    b-fold backward difference H'(d) = sum_k (-1)^k C(b, k) H(d - k).

    Args:
        hilbert (HilbertData): Series of S/I.
        b (int): Length of the regular sequence being divided out, at most n.
        horizon (int, optional): Last degree evaluated; defaults to max(deg N, 1) + 1.

    Returns:
        list[int]: H'(0), ..., H'(horizon).
    """
    if not 0 <= b <= hilbert.n:
        raise ValidationError(f"Cannot take {b} differences in {hilbert.n} variables.")
    if horizon is None:
        horizon = max(hilbert.numerator_degree, 1) + 1
    values = hilbert.values(horizon)
    differences = []
    for d in range(horizon + 1):
        h = sum((-1) ** k * int(comb(b, k, exact=True)) * values[d - k] for k in range(b + 1) if d - k >= 0)
        if h < 0:
            raise InvariantError(f"Depth overstated: the {b}-fold difference is {h} in degree {d}.")
        differences.append(h)
    return differences


@dataclass(frozen=True)
class StanleyizeCertificate:
    """
    Everything computed on the way from I to L, with the three checks.

    `sdepth_ge_depth` is None when the Stanley depth search ran out of budget.
    """
    ideal: MonomialIdeal
    depth: int
    hilbert_prefix: tuple
    difference_prefix: tuple
    j_lex: MonomialIdeal
    stanley_ideal: MonomialIdeal
    hilbert_equal: bool
    depth_equal: bool
    sdepth_ge_depth: bool
    sdepth: int
    prime: int

    @property
    def verified(self):
        return self.hilbert_equal and self.depth_equal and self.sdepth_ge_depth is not False

    def as_record(self):
        return {
            "input": ideal_record(self.ideal),
            "depth": self.depth,
            "hilbert_prefix": list(self.hilbert_prefix),
            "difference_prefix": list(self.difference_prefix),
            "j_lex": ideal_record(self.j_lex),
            "stanley_ideal": ideal_record(self.stanley_ideal),
            "checks": {
                "hilbert_equal": self.hilbert_equal,
                "depth_equal": self.depth_equal,
                "sdepth_ge_depth": "not verified" if self.sdepth_ge_depth is None else self.sdepth_ge_depth,
            },
            "sdepth": self.sdepth,
            "prime": self.prime,
        }


def stanleyize(ideal, prime=None, settings=DEFAULT_SETTINGS):
    """
    Produces a Stanley ideal L with the depth and Hilbert function of a non-critical I.

    Args:
        ideal (MonomialIdeal): A non-critical monomial ideal.
        prime (int, optional): Characteristic used for depth; defaults to settings.prime.
        settings (Settings): Ceilings, caps and budgets.

    Returns:
        StanleyizeCertificate: The construction and its checks.
    """
    prime = settings.prime if prime is None else prime
    if is_critical(ideal, settings):
        raise PreconditionError(f"{ideal} is critical; use 'critical decompose' on its canonical form instead.")
    n = ideal.n
    b = depth_quotient(ideal, prime, settings)
    hilbert = hilbert_series_numerator(ideal)
    horizon = max(hilbert.numerator_degree, 1) + 1
    differences = difference_sequence(hilbert, b, horizon)
    reduced_n = n - b
    shape = is_O_sequence(differences, reduced_n)
    if not shape.ok:
        raise InvariantError(f"Difference sequence {differences} is not an O-sequence in {reduced_n} variables: {shape.reason}.")
    LOGGER.info("depth(S/I) = %d, building the lex ideal in %d variables", b, reduced_n)

    j_lex = lex_ideal_from_numerator(reduced_n, hilbert, settings).ideal
    if hilbert_series_numerator(j_lex).values(horizon) != differences:
        raise InvariantError(f"Lex ideal {j_lex} does not realize the difference sequence {differences}.")
    if not is_lexsegment(j_lex) or is_universal_lexsegment(j_lex):
        raise InvariantError(f"{j_lex} must be lexsegment and not universal lexsegment for non-critical input.")
    if depth_quotient(j_lex, prime, settings) != 0:
        raise InvariantError(f"depth of S'/J^lex is not 0 for {j_lex}.")

    stanley_ideal = extend_ambient(j_lex, n)
    hilbert_equal = hilbert_series_numerator(stanley_ideal).numerator == hilbert.numerator
    depth_equal = depth_quotient(stanley_ideal, prime, settings) == b
    try:
        sdepth = sdepth_oracle(stanley_ideal, QUOTIENT, settings)
        sdepth_ge_depth = sdepth >= b
    except ResourceError as e:
        LOGGER.warning("Stanley depth of %s not verified: %s", stanley_ideal, e)
        sdepth, sdepth_ge_depth = None, None

    return StanleyizeCertificate(
        ideal=ideal,
        depth=b,
        hilbert_prefix=tuple(hilbert.values(horizon)),
        difference_prefix=tuple(differences),
        j_lex=j_lex,
        stanley_ideal=stanley_ideal,
        hilbert_equal=hilbert_equal,
        depth_equal=depth_equal,
        sdepth_ge_depth=sdepth_ge_depth,
        sdepth=sdepth,
        prime=prime,
    )
