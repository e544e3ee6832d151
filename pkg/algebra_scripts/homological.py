"""
Ground truth for Stanley depth and depth.

Stanley depth is decided by interval partitions of the characteristic
poset (points a <= g in the target set, interval value rho(b) = #{j : b_j = g_j}).
Depth comes from Koszul homology ranks over GF(p) on the lcm lattice and
Auslander-Buchsbaum.
"""
import logging
from dataclasses import dataclass
from itertools import combinations
from itertools import product as cartesian

from sympy import GF
from sympy.polys.matrices import DomainMatrix

from algebra_scripts.critical import IDEAL, MODES, QUOTIENT
from algebra_scripts.errors import InvariantError, ResourceError, ValidationError
from algebra_scripts.monomials import Monomial, contains, format_monomial, lcm
from algebra_scripts.settings import DEFAULT_SETTINGS

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class CharacteristicPoset:
    """Exponent vectors a <= g of the target set, ascending lex."""
    n: int
    g: tuple
    points: tuple
    mode: str

    def __len__(self):
        return len(self.points)

    def rho(self, b):
        return sum(1 for x, y in zip(b, self.g) if x == y)


def characteristic_poset(ideal, mode, settings=DEFAULT_SETTINGS):
    """
    Args:
        ideal (MonomialIdeal): A proper monomial ideal.
        mode (str): 'quotient' keeps a with x^a outside I, 'ideal' keeps x^a in I.
        settings (Settings): Supplies the poset cap.

    Returns:
        CharacteristicPoset: The finite poset the Stanley depth is read from.
    """
    if mode not in MODES:
        raise ValidationError(f"Unknown mode '{mode}', expected one of {MODES}.")
    g = ideal.lcm_exponents()
    points = []
    for a in cartesian(*(range(e + 1) for e in g)):
        if contains(ideal, Monomial(a)) == (mode == IDEAL):
            points.append(a)
            if len(points) > settings.poset_cap:
                raise ResourceError(f"Characteristic poset of {ideal} exceeds the cap of {settings.poset_cap} points.")
    return CharacteristicPoset(ideal.n, g, tuple(points), mode)


@dataclass(frozen=True)
class IntervalPartition:
    """Disjoint intervals [a, b] covering the poset; value is min rho(b)."""
    intervals: tuple
    value: int

    def as_record(self):
        return {
            "value": self.value,
            "intervals": [{"bottom": list(a), "top": list(b)} for a, b in self.intervals],
        }


def _interval_points(a, b):
    return cartesian(*(range(x, y + 1) for x, y in zip(a, b)))


def _interval_options(poset, s, index):
    """
    Admissible intervals per bottom point, tops lex-descending.

    Tops with b_j in {a_j, g_j} suffice: a top coordinate strictly between
    splits into slices without changing rho.
    """
    members = set(poset.points)
    options = []
    for a in poset.points:
        free = [j for j in range(poset.n) if a[j] < poset.g[j]]
        fixed = poset.n - len(free)
        tops = []
        for size in range(max(0, s - fixed), len(free) + 1):
            for raised in combinations(free, size):
                b = list(a)
                for j in raised:
                    b[j] = poset.g[j]
                b = tuple(b)
                # the quotient poset is a down-set, the ideal poset an up-set of the box
                if poset.mode == QUOTIENT and b not in members:
                    continue
                tops.append(b)
        tops.sort(reverse=True)
        choices = []
        for b in tops:
            mask = 0
            for c in _interval_points(a, b):
                mask |= 1 << index[c]
            choices.append((b, mask))
        options.append(choices)
    return options


def search_interval_partition(poset, s, settings=DEFAULT_SETTINGS):
    """
    Exact-cover search for an interval partition with every rho(b) >= s.

    The lex-least uncovered point is always the bottom of the next interval.
    Uncovered sets that failed are remembered.

    Returns:
        IntervalPartition or None: A witness, or None when none exists.
    """
    index = {p: k for k, p in enumerate(poset.points)}
    options = _interval_options(poset, s, index)
    if not all(options):
        LOGGER.debug("s = %d infeasible: some point is the bottom of no admissible interval", s)
        return None
    full = (1 << len(poset.points)) - 1
    failed = set()
    frames = [[full, 0]]
    chosen = []
    nodes = 0
    while frames:
        frame = frames[-1]
        uncovered, k = frame
        if uncovered == 0:
            intervals = tuple((poset.points[low], b) for low, b in chosen)
            LOGGER.debug("s = %d feasible after %d nodes", s, nodes)
            return IntervalPartition(intervals, min(poset.rho(b) for _, b in intervals))
        low = (uncovered & -uncovered).bit_length() - 1
        choices = options[low]
        advanced = False
        while k < len(choices):
            b, mask = choices[k]
            k += 1
            nodes += 1
            if nodes > settings.node_budget:
                raise ResourceError(f"Stanley depth search exceeded the node budget of {settings.node_budget}.")
            rest = uncovered ^ mask
            if mask & uncovered == mask and rest not in failed:
                frame[1] = k
                chosen.append((low, b))
                frames.append([rest, 0])
                advanced = True
                break
        if not advanced:
            failed.add(uncovered)
            frames.pop()
            if chosen:
                chosen.pop()
    LOGGER.debug("s = %d infeasible after %d nodes", s, nodes)
    return None


def stanley_depth_witness(ideal, mode, settings=DEFAULT_SETTINGS):
    """Best interval partition, found by trying s = n, n - 1, ... until one exists."""
    poset = characteristic_poset(ideal, mode, settings)
    for s in range(ideal.n, -1, -1):
        partition = search_interval_partition(poset, s, settings)
        if partition is not None:
            return partition
    raise InvariantError(f"No interval partition of the {mode} poset of {ideal} found, not even by singletons.")


def sdepth_oracle(ideal, mode, settings=DEFAULT_SETTINGS):
    """sdepth(S/I) in quotient mode, sdepth(I) in ideal mode."""
    return stanley_depth_witness(ideal, mode, settings).value


@dataclass(frozen=True)
class BettiTable:
    """
    Graded Betti numbers beta_i(I)_a = beta_{i+1}(S/I)_a over GF(prime),
    keyed by (i, multidegree); zero entries are omitted.
    """
    n: int
    entries: dict
    prime: int

    @property
    def projective_dimension(self):
        """pd(S/I) = 1 + the largest i with a nonzero beta_i(I)."""
        return 1 + max(i for i, _ in self.entries)

    def as_record(self):
        rows = sorted(self.entries.items(), key=lambda item: (item[0][0], item[0][1]))
        return {
            "prime": self.prime,
            "projective_dimension": self.projective_dimension,
            "entries": [
                {"i": i, "multidegree": list(a), "monomial": format_monomial(Monomial(a)), "rank": rank}
                for (i, a), rank in rows
            ],
        }


def lcm_lattice(ideal, settings=DEFAULT_SETTINGS):
    """lcms of all nonempty subsets of G(I)."""
    lattice = set()
    for g in ideal.gens:
        lattice |= {lcm(g, m) for m in lattice} | {g}
        if len(lattice) > settings.lcm_cap:
            raise ResourceError(f"lcm lattice of {ideal} exceeds the cap of {settings.lcm_cap} elements.")
    return sorted(lattice, key=lambda m: m.exponents)


def _rank(rows, n_cols, field):
    if not rows or n_cols == 0:
        return 0
    matrix = DomainMatrix([[field(x) for x in row] for row in rows], (len(rows), n_cols), field)
    return matrix.rank()


def _koszul_basis(ideal, a, k):
    basis = []
    for subset in combinations([j for j in range(ideal.n) if a[j] > 0], k):
        rest = list(a)
        for j in subset:
            rest[j] -= 1
        if not contains(ideal, Monomial(tuple(rest))):
            basis.append(subset)
    return basis


def _boundary_rank(source, target, field):
    """Rank of the Koszul differential from the |J| = k strand to |J| = k - 1."""
    if not source or not target:
        return 0
    position = {subset: r for r, subset in enumerate(target)}
    rows = []
    for subset in source:
        row = [0] * len(target)
        for sign_index, j in enumerate(subset):
            face = subset[:sign_index] + subset[sign_index + 1:]
            if face in position:
                row[position[face]] = (-1) ** sign_index
        rows.append(row)
    return _rank(rows, len(target), field)


def koszul_strand_homology(ideal, a, field):
    """dim H_k of the multidegree-a strand of K(x; S/I), for k = 0..n."""
    bases = [_koszul_basis(ideal, a, k) for k in range(ideal.n + 1)]
    ranks = [0] + [_boundary_rank(bases[k], bases[k - 1], field) for k in range(1, ideal.n + 1)] + [0]
    return [len(bases[k]) - ranks[k] - ranks[k + 1] for k in range(ideal.n + 1)]


def betti_numbers(ideal, prime=None, settings=DEFAULT_SETTINGS):
    """
    Graded Betti numbers of I from Koszul strands on the lcm lattice.

    Args:
        ideal (MonomialIdeal): A proper monomial ideal.
        prime (int, optional): Field characteristic; defaults to settings.prime.
        settings (Settings): Caps and default prime.

    Returns:
        BettiTable: Nonzero beta_i(I)_a.
    """
    prime = settings.prime if prime is None else prime
    settings = settings.with_overrides(prime=prime)
    field = GF(prime)
    entries = {}
    for m in lcm_lattice(ideal, settings):
        homology = koszul_strand_homology(ideal, m.exponents, field)
        for k, rank in enumerate(homology):
            if k >= 1 and rank:
                entries[(k - 1, m.exponents)] = rank
    LOGGER.debug("Betti table of %s over GF(%d): %d entries", ideal, prime, len(entries))
    return BettiTable(ideal.n, entries, prime)


def depth_quotient(ideal, prime=None, settings=DEFAULT_SETTINGS):
    """depth(S/I) = n - pd(S/I)."""
    return ideal.n - betti_numbers(ideal, prime, settings).projective_dimension


def depth_ideal(ideal, prime=None, settings=DEFAULT_SETTINGS):
    """depth(I) = 1 + depth(S/I)."""
    return depth_quotient(ideal, prime, settings) + 1


@dataclass(frozen=True)
class StanleyCheck:
    """Both sides of sdepth >= depth for S/I and for I, with the generator-count bounds."""
    sdepth_quotient: int
    depth_quotient: int
    sdepth_ideal: int
    depth_ideal: int
    quotient_lower_bound: int
    ideal_lower_bound: int
    prime: int

    @property
    def holds_for_quotient(self):
        return self.sdepth_quotient >= self.depth_quotient

    @property
    def holds_for_ideal(self):
        return self.sdepth_ideal >= self.depth_ideal

    def as_record(self):
        return {
            "sdepth_quotient": self.sdepth_quotient,
            "depth_quotient": self.depth_quotient,
            "sdepth_ideal": self.sdepth_ideal,
            "depth_ideal": self.depth_ideal,
            "quotient_lower_bound": self.quotient_lower_bound,
            "ideal_lower_bound": self.ideal_lower_bound,
            "holds_for_quotient": self.holds_for_quotient,
            "holds_for_ideal": self.holds_for_ideal,
            "prime": self.prime,
        }


def stanley_check(ideal, prime=None, settings=DEFAULT_SETTINGS):
    """Evaluates Stanley's inequality for S/I and I, plus n - |G| and max(1, n - |G| + 1)."""
    prime = settings.prime if prime is None else prime
    dq = depth_quotient(ideal, prime, settings)
    return StanleyCheck(
        sdepth_quotient=sdepth_oracle(ideal, QUOTIENT, settings),
        depth_quotient=dq,
        sdepth_ideal=sdepth_oracle(ideal, IDEAL, settings),
        depth_ideal=dq + 1,
        quotient_lower_bound=ideal.n - len(ideal),
        ideal_lower_bound=max(1, ideal.n - len(ideal) + 1),
        prime=prime,
    )
