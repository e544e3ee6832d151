"""
Batch sweeps over the canonical critical family and random monomial ideals.

Each sweep returns a DataFrame with one row per instance and boolean check
columns, so failures can be filtered and saved as CSV or Parquet.
"""
import logging
import os

import numpy as np
import pandas as pd

from algebra_scripts.critical import (
    IDEAL,
    QUOTIENT,
    CanonicalCriticalSpec,
    build_canonical,
    ideal_direct_sum,
    stanley_decomposition,
    verify_partition,
)
from algebra_scripts.errors import ValidationError
from algebra_scripts.hilbert import (
    hilbert_series_numerator,
    is_O_sequence,
    lex_growth_count,
    macaulay_growth,
)
from algebra_scripts.homological import depth_quotient, sdepth_oracle
from algebra_scripts.lex import is_critical, lex_ideal_of
from algebra_scripts.monomials import Monomial, count_monomials, format_ideal, minimal_generators, monomials_of_degree
from algebra_scripts.settings import DEFAULT_SETTINGS
from algebra_scripts.stanleyize import stanleyize

LOGGER = logging.getLogger(__name__)


def spec_candidates(n, i, max_degree):
    """Monomials of degree <= max_degree in K[x_i..x_n] (1-based i), as n-variable monomials."""
    width = n - i + 1
    pad = (0,) * (i - 1)
    return [Monomial(pad + m.exponents) for d in range(max_degree + 1) for m in monomials_of_degree(width, d)]


def canonical_specs(max_n, max_degree=2):
    """Every spec with n <= max_n, 1 <= t <= n and deg m_i <= max_degree."""
    for n in range(1, max_n + 1):
        for t in range(1, n + 1):
            yield from _specs_from(n, t, 1, (), max_degree)


def _specs_from(n, t, i, chosen, max_degree):
    if i > t:
        yield CanonicalCriticalSpec(n, chosen)
        return
    for m in spec_candidates(n, i, max_degree):
        if i == t and m.is_one():
            continue
        yield from _specs_from(n, t, i + 1, chosen + (m,), max_degree)


def random_ideals(count, seed=0, max_n=4, max_generators=4, max_exponent=2):
    """Seeded random monomial ideals; draws that only give the unit monomial are skipped."""
    rng = np.random.default_rng(seed)
    ideals = []
    while len(ideals) < count:
        n = int(rng.integers(1, max_n + 1))
        k = int(rng.integers(1, max_generators + 1))
        raw = [Monomial(tuple(int(e) for e in rng.integers(0, max_exponent + 1, size=n))) for _ in range(k)]
        raw = [m for m in raw if not m.is_one()]
        if raw:
            ideals.append(minimal_generators(n, raw))
    return ideals


class SweepProcessor:
    def __init__(self, settings=DEFAULT_SETTINGS):
        self.settings = settings

    def canonical_family(self, max_n=4, max_degree=2):
        """Depth, Stanley depth and both explicit decompositions over the canonical family."""
        rows = []
        for spec in canonical_specs(max_n, max_degree):
            ideal = build_canonical(spec)
            quotient_sdepth = sdepth_oracle(ideal, QUOTIENT, self.settings)
            ideal_sdepth = sdepth_oracle(ideal, IDEAL, self.settings)
            depth = depth_quotient(ideal, settings=self.settings)
            decomposition = stanley_decomposition(spec)
            expected = spec.n - spec.t
            rows.append({
                "spec": str(spec),
                "n": spec.n,
                "t": spec.t,
                "generators": len(ideal),
                "sdepth_quotient": quotient_sdepth,
                "depth_quotient": depth,
                "sdepth_ideal": ideal_sdepth,
                "decomposition_sdepth": decomposition.sdepth,
                "depth_formula_holds": quotient_sdepth == depth == expected and len(ideal) == spec.t,
                "quotient_partition_ok": verify_partition(decomposition, ideal).ok,
                "ideal_partition_ok": verify_partition(ideal_direct_sum(spec), ideal).ok,
                "decomposition_is_optimal": decomposition.sdepth == expected == quotient_sdepth,
                "ideal_exceeds_quotient": ideal_sdepth >= 1 + quotient_sdepth,
                "ideal_bound_holds": ideal_sdepth >= max(1, expected + 1),
            })
        LOGGER.info("Canonical sweep finished: %d specs", len(rows))
        return pd.DataFrame(rows)

    def random_population(self, count=200, seed=0):
        """Lex machinery on random ideals, plus Stanley's inequality on the critical ones."""
        rows = []
        for ideal in random_ideals(count, seed):
            hilbert = hilbert_series_numerator(ideal)
            lex = lex_ideal_of(ideal, self.settings)
            critical = is_critical(ideal, self.settings)
            last = hilbert.numerator_degree + 2
            row = {
                "ideal": format_ideal(ideal),
                "n": ideal.n,
                "critical": critical,
                "lex_generators": len(lex.ideal),
                "lex_hilbert_equal": hilbert_series_numerator(lex.ideal).numerator == hilbert.numerator,
                "o_sequence": is_O_sequence(hilbert.values(last), ideal.n).ok,
                "criticality_consistent": critical == (len(lex.ideal) <= ideal.n),
            }
            if critical:
                depth = depth_quotient(ideal, settings=self.settings)
                row["quotient_inequality"] = sdepth_oracle(ideal, QUOTIENT, self.settings) >= depth
                row["ideal_inequality"] = sdepth_oracle(ideal, IDEAL, self.settings) >= depth + 1
            rows.append(row)
        LOGGER.info("Random population finished: %d ideals", len(rows))
        return pd.DataFrame(rows)

    def stanleyize_population(self, count=100, seed=1):
        """Runs the Stanley ideal construction on random non-critical ideals."""
        rows = []
        attempts = 0
        while len(rows) < count:
            batch = random_ideals(count, seed + attempts)
            attempts += 1
            for ideal in batch:
                if len(rows) >= count or is_critical(ideal, self.settings):
                    continue
                certificate = stanleyize(ideal, settings=self.settings)
                rows.append({
                    "ideal": format_ideal(ideal),
                    "depth": certificate.depth,
                    "stanley_ideal": format_ideal(certificate.stanley_ideal),
                    "hilbert_equal": certificate.hilbert_equal,
                    "depth_equal": certificate.depth_equal,
                    "sdepth_checked": certificate.sdepth_ge_depth is not None,
                    "sdepth_ge_depth": certificate.sdepth_ge_depth,
                })
        LOGGER.info("Stanleyize population finished after %d batches", attempts)
        return pd.DataFrame(rows)

    def macaulay_oracle(self, max_n=4, max_degree=4):
        """a^<d> against the lex-segment count for every admissible (n, d, a)."""
        rows = []
        for n in range(1, max_n + 1):
            for d in range(1, max_degree + 1):
                for a in range(count_monomials(n, d) + 1):
                    growth = macaulay_growth(a, d)
                    count = lex_growth_count(n, a, d)
                    rows.append({"n": n, "d": d, "a": a, "growth": growth, "lex_count": count,
                                 "agrees": growth == count})
        return pd.DataFrame(rows)

    def process_all(self, max_n=4, count=200, seed=0):
        LOGGER.info("Running canonical family sweep...")
        canonical = self.canonical_family(max_n)
        LOGGER.info("Running random population sweep...")
        population = self.random_population(count, seed)
        LOGGER.info("Running stanleyize sweep...")
        stanley = self.stanleyize_population(max(1, count // 2), seed + 1)
        LOGGER.info("Running Macaulay oracle sweep...")
        macaulay = self.macaulay_oracle(max_n)
        return {
            "canonical": canonical,
            "random": population,
            "stanleyize": stanley,
            "macaulay": macaulay,
        }


def _is_check(column):
    if column.dtype == bool:
        return True
    # checks that only apply to some rows come back as object columns holding NaN
    return column.dtype == object and column.dropna().map(lambda v: isinstance(v, bool)).all()


def summarize(frames):
    """Per sweep: row count and how many rows pass each boolean check."""
    summary = {}
    for name, frame in frames.items():
        checks = [c for c in frame.columns if c not in ("critical", "sdepth_checked") and _is_check(frame[c])]
        summary[name] = {"rows": int(len(frame))}
        for column in checks:
            values = frame[column].dropna().astype(bool)
            summary[name][column] = {"passed": int(values.sum()), "of": int(len(values))}
        if "sdepth_checked" in frame.columns and len(frame):
            summary[name]["sdepth_coverage"] = float(frame["sdepth_checked"].mean())
    return summary


def save_frames(frames, output):
    """
    Writes each frame next to `output`: <stem>_<name>.csv or .parquet.

    The extension of `output` picks the format.
    """
    stem, extension = os.path.splitext(output)
    if extension not in (".csv", ".parquet"):
        raise ValidationError(f"Sweep output must end in .csv or .parquet, got '{output}'.")
    directory = os.path.dirname(output)
    if directory:
        os.makedirs(directory, exist_ok=True)
    paths = []
    for name, frame in frames.items():
        path = f"{stem}_{name}{extension}"
        if extension == ".csv":
            frame.to_csv(path, index=False)
        else:
            frame.to_parquet(path, engine="pyarrow", index=False)
        paths.append(path)
    return paths
