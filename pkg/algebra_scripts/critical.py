"""
Canonical critical ideals I_(m_1,...,m_t) and their explicit Stanley decompositions.

For monomials m_i in K[x_i, ..., x_n] (deg m_t > 0) the ideal is
(x_1 m_1, x_2 m_1 m_2, ..., x_{t-1} m_1...m_{t-1}, m_1...m_t).
Variable sets are stored as 0-based index frozensets and printed 1-based.
"""
import logging
import re
from dataclasses import dataclass
from itertools import product as cartesian

from algebra_scripts.errors import InvariantError, ParseError, PreconditionError, ValidationError
from algebra_scripts.monomials import (
    Monomial,
    contains,
    divides,
    format_monomial,
    minimal_generators,
    one,
    parse_monomial,
    product,
    quotient,
    variable,
)

LOGGER = logging.getLogger(__name__)

_SPEC_HEADER = re.compile(r"^\s*n\s*=\s*(\d+)\s*$")
_SPEC_ENTRY = re.compile(r"^\s*m(\d+)\s*=\s*(.+?)\s*$")

QUOTIENT = "quotient"
IDEAL = "ideal"
MODES = (QUOTIENT, IDEAL)


@dataclass(frozen=True)
class CanonicalCriticalSpec:
    """The tuple (m_1, ..., m_t) in n variables; ms[i - 1] is m_i."""
    n: int
    ms: tuple

    def __post_init__(self):
        t = len(self.ms)
        if not 1 <= t <= self.n:
            raise ValidationError(f"Need 1 <= t <= n, got t = {t}, n = {self.n}.")
        for i, m in enumerate(self.ms):
            if m.n != self.n:
                raise ValidationError(f"m{i + 1} lives in {m.n} variables, expected {self.n}.")
            stray = sorted(j + 1 for j in m.support if j < i)
            if stray:
                raise ValidationError(f"m{i + 1} = {m} uses x{stray[0]}, outside K[x{i + 1}..x{self.n}].")
        if self.ms[-1].degree == 0:
            raise ValidationError(f"m{t} must have positive degree.")

    @property
    def t(self):
        return len(self.ms)

    def prefix_product(self, i):
        """m_1 * ... * m_i (the empty product for i = 0)."""
        return product(self.ms[:i], self.n)

    def __str__(self):
        return f"n={self.n}; " + "; ".join(f"m{i + 1}={format_monomial(m)}" for i, m in enumerate(self.ms))


def parse_spec(text):
    """Parses "n=<int>; m1=<mon>; m2=<mon>; ..." into a CanonicalCriticalSpec."""
    parts = [p for p in text.split(";") if p.strip()]
    if not parts:
        raise ParseError("Empty spec.")
    header = _SPEC_HEADER.match(parts[0])
    if header is None:
        raise ParseError(f"Spec must start with 'n=<int>', got '{parts[0].strip()}'.")
    n = int(header.group(1))
    entries = {}
    for part in parts[1:]:
        match = _SPEC_ENTRY.match(part)
        if match is None:
            raise ParseError(f"Cannot parse spec entry '{part.strip()}', expected 'm<i>=<monomial>'.")
        index = int(match.group(1))
        if index in entries:
            raise ParseError(f"m{index} given twice.")
        entries[index] = parse_monomial(match.group(2), n)
    if sorted(entries) != list(range(1, len(entries) + 1)):
        raise ParseError(f"Spec entries must be m1..mt without gaps, got {sorted(entries)}.")
    return CanonicalCriticalSpec(n, tuple(entries[i] for i in sorted(entries)))


def build_canonical(spec):
    """The ideal of the spec; its t generators are already minimal."""
    raw = [variable(spec.n, i) * spec.prefix_product(i + 1) for i in range(spec.t - 1)]
    raw.append(spec.prefix_product(spec.t))
    ideal = minimal_generators(spec.n, raw)
    if len(ideal) != spec.t:
        raise InvariantError(f"Canonical ideal of {spec} has {len(ideal)} minimal generators, expected {spec.t}.")
    return ideal


@dataclass(frozen=True)
class StanleyPiece:
    """The K-subspace u * K[Z]."""
    u: Monomial
    Z: frozenset

    def as_record(self):
        return {
            "shift": list(self.u.exponents),
            "shift_text": format_monomial(self.u),
            "variables": sorted(j + 1 for j in self.Z),
        }

    def __str__(self):
        names = ",".join(f"x{j + 1}" for j in sorted(self.Z))
        return f"{format_monomial(self.u)}*K[{names}]"


@dataclass(frozen=True)
class StanleyDecomposition:
    n: int
    pieces: tuple
    mode: str

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValidationError(f"Unknown decomposition mode '{self.mode}'.")

    @property
    def sdepth(self):
        return sdepth_of_decomposition(self)

    def as_record(self):
        return {
            "mode": self.mode,
            "sdepth": self.sdepth,
            "pieces": [p.as_record() for p in self.pieces],
        }


def piece_contains(piece, m):
    """True iff u | m and every variable of m / u lies in Z."""
    if not divides(piece.u, m):
        return False
    return quotient(m, piece.u).support <= piece.Z


def sdepth_of_decomposition(decomposition):
    if not decomposition.pieces:
        raise PreconditionError("The Stanley depth of an empty decomposition is undefined.")
    return min(len(p.Z) for p in decomposition.pieces)


def ideal_direct_sum(spec):
    """
    I as the direct sum of x_j m_1...m_j K[x_j..x_n] (j < t) and m_1...m_t K[x_t..x_n].

    Returns:
        StanleyDecomposition: Ideal-mode decomposition with t pieces.
    """
    pieces = [
        StanleyPiece(variable(spec.n, j) * spec.prefix_product(j + 1), frozenset(range(j, spec.n)))
        for j in range(spec.t - 1)
    ]
    pieces.append(StanleyPiece(spec.prefix_product(spec.t), frozenset(range(spec.t - 1, spec.n))))
    return StanleyDecomposition(spec.n, tuple(pieces), IDEAL)


def first_variable(m):
    """v(m): 0-based index of the first variable dividing m."""
    if m.is_one():
        raise PreconditionError("v(1) is undefined.")
    return min(m.support)


@dataclass(frozen=True)
class ScaffoldRow:
    """
    Data attached to one m_i: the chain w_{i1}, ..., w_{id_i}, the indices
    v(w_{ij}), the prefixes u_{ij}, the sets Z_{ij} and the shift n_i.
    """
    i: int
    degree: int
    chain: tuple
    pivots: tuple
    prefixes: tuple
    variable_sets: tuple
    shift: Monomial

    def as_record(self):
        return {
            "i": self.i,
            "degree": self.degree,
            "chain": [format_monomial(w) for w in self.chain],
            "pivots": [v + 1 for v in self.pivots],
            "prefixes": [format_monomial(u) for u in self.prefixes],
            "variable_sets": [sorted(j + 1 for j in z) for z in self.variable_sets],
            "shift": format_monomial(self.shift),
        }


@dataclass(frozen=True)
class DecompositionScaffold:
    spec: CanonicalCriticalSpec
    rows: tuple

    def as_record(self):
        return {"rows": [row.as_record() for row in self.rows]}


def scaffold(spec):
    """Unrolls w_{i(d+1)} = w_{id} / x_{v(w_{id})} and the derived u_{ij}, Z_{ij} for every i."""
    rows = []
    for i, m in enumerate(spec.ms):
        chain, pivots, prefixes, variable_sets = [], [], [], []
        w, u = m, one(spec.n)
        for _ in range(m.degree):
            v = first_variable(w)
            chain.append(w)
            pivots.append(v)
            prefixes.append(u)
            variable_sets.append(frozenset(range(i, spec.n)) - {v})
            w = quotient(w, variable(spec.n, v))
            u = u * variable(spec.n, v)
        rows.append(ScaffoldRow(
            i=i + 1,
            degree=m.degree,
            chain=tuple(chain),
            pivots=tuple(pivots),
            prefixes=tuple(prefixes),
            variable_sets=tuple(variable_sets),
            shift=spec.prefix_product(i),
        ))
    return DecompositionScaffold(spec, tuple(rows))


def stanley_decomposition(spec):
    """
    S/I as the direct sum over i, j of u_{ij} n_i K[Z_{ij}].

    Every |Z_{ij}| = n - i and d_t >= 1, so the Stanley depth is n - t.
    """
    pieces = [
        StanleyPiece(u * row.shift, z)
        for row in scaffold(spec).rows
        for u, z in zip(row.prefixes, row.variable_sets)
    ]
    decomposition = StanleyDecomposition(spec.n, tuple(pieces), QUOTIENT)
    if decomposition.sdepth != spec.n - spec.t:
        raise InvariantError(f"Decomposition of {spec} has sdepth {decomposition.sdepth}, expected {spec.n - spec.t}.")
    return decomposition


@dataclass(frozen=True)
class PartitionCheck:
    ok: bool
    counterexample: Monomial = None
    covered_by: int = 0
    points_checked: int = 0

    def as_record(self):
        return {
            "ok": self.ok,
            "counterexample": None if self.counterexample is None else format_monomial(self.counterexample),
            "covered_by": self.covered_by,
            "points_checked": self.points_checked,
        }


def partition_box(decomposition, ideal):
    """B_j = 1 + max exponent of x_j over generators and piece shifts."""
    exponents = [g.exponents for g in ideal.gens] + [p.u.exponents for p in decomposition.pieces]
    return tuple(1 + max(column) for column in zip(*exponents))


def verify_partition(decomposition, ideal):
    """
    Checks that every monomial lies in exactly one piece if it is in the
    target set and in none otherwise.

    The target set is the standard monomials of I in quotient mode and the
    monomials of I in ideal mode. Scanning the box [0, B] suffices since
    membership depends on each exponent only through thresholds below B_j.

    Returns:
        PartitionCheck: ok flag and the lex-least failing monomial, if any.
    """
    if decomposition.n != ideal.n:
        raise ValidationError(f"Decomposition in {decomposition.n} variables, ideal in {ideal.n}.")
    box = partition_box(decomposition, ideal)
    checked = 0
    for exponents in cartesian(*(range(b + 1) for b in box)):
        m = Monomial(exponents)
        checked += 1
        in_target = contains(ideal, m) == (decomposition.mode == IDEAL)
        hits = sum(1 for p in decomposition.pieces if piece_contains(p, m))
        if hits != (1 if in_target else 0):
            LOGGER.info("Partition check failed at %s (%d pieces)", m, hits)
            return PartitionCheck(False, m, hits, checked)
    LOGGER.debug("Partition verified on %d box points", checked)
    return PartitionCheck(True, None, 0, checked)
