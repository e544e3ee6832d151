"""Human-readable tables for `--pretty`, built as pandas DataFrames."""
import pandas as pd

from algebra_scripts.monomials import Monomial, format_monomial


def ideal_frame(ideal):
    return pd.DataFrame({
        "generator": [format_monomial(g) for g in ideal.gens],
        "degree": [g.degree for g in ideal.gens],
        "exponents": [list(g.exponents) for g in ideal.gens],
    })


def hilbert_frame(hilbert, last_degree):
    """One row per degree with H(d) and the series numerator coefficient."""
    numerator = list(hilbert.numerator) + [0] * max(0, last_degree + 1 - len(hilbert.numerator))
    return pd.DataFrame({
        "d": list(range(last_degree + 1)),
        "H(d)": hilbert.values(last_degree),
        "numerator": numerator[:last_degree + 1],
    })


def decomposition_frame(decomposition):
    return pd.DataFrame({
        "shift": [format_monomial(p.u) for p in decomposition.pieces],
        "variables": [",".join(f"x{j + 1}" for j in sorted(p.Z)) or "-" for p in decomposition.pieces],
        "|Z|": [len(p.Z) for p in decomposition.pieces],
    })


def betti_frame(table):
    """Betti numbers in the usual layout: rows i, columns total degree."""
    rows = [{"i": i, "degree": sum(a), "rank": rank} for (i, a), rank in table.entries.items()]
    frame = pd.DataFrame(rows)
    return frame.pivot_table(index="i", columns="degree", values="rank", aggfunc="sum", fill_value=0)


def partition_frame(partition):
    return pd.DataFrame({
        "bottom": [format_monomial(Monomial(a)) for a, _ in partition.intervals],
        "top": [format_monomial(Monomial(b)) for _, b in partition.intervals],
    })


def render(frames):
    """Joins titled frames into one printable block."""
    blocks = []
    for title, frame in frames.items():
        blocks.append(f"== {title}")
        blocks.append(frame.to_string(index=False) if frame.index.name is None else frame.to_string())
    return "\n".join(blocks)
