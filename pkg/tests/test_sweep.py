import orjson
import pandas as pd
import pytest

from algebra_scripts.errors import ValidationError
from algebra_scripts.monomials import format_monomial
from algebra_scripts.settings import Settings
from report_scripts.plots import create_hilbert_figure, hilbert_bound_frame
from report_scripts.serialize import build_report, dumps
from report_scripts.sweep import (
    SweepProcessor,
    canonical_specs,
    random_ideals,
    save_frames,
    spec_candidates,
    summarize,
)

CANONICAL_CHECKS = [
    "depth_formula_holds",
    "quotient_partition_ok",
    "ideal_partition_ok",
    "decomposition_is_optimal",
    "ideal_exceeds_quotient",
    "ideal_bound_holds",
]


def test_spec_candidates():
    assert [format_monomial(m) for m in spec_candidates(3, 3, 2)] == ["1", "x3", "x3^2"]
    assert len(spec_candidates(2, 1, 2)) == 6


def test_canonical_spec_count():
    """n = 1: m1 in {x1, x1^2}; n = 2 adds 5 specs with t = 1 and 6 * 2 with t = 2"""
    assert len(list(canonical_specs(1))) == 2
    assert len(list(canonical_specs(2))) == 2 + 5 + 12


def test_canonical_family_up_to_three_variables():
    frame = SweepProcessor().canonical_family(max_n=3)
    assert len(frame) == len(list(canonical_specs(3)))
    for column in CANONICAL_CHECKS:
        assert frame[column].all(), frame.loc[~frame[column], "spec"].tolist()
    assert (frame["generators"] == frame["t"]).all()


@pytest.mark.slow
def test_canonical_family_in_four_variables():
    frame = SweepProcessor().canonical_family(max_n=4)
    for column in CANONICAL_CHECKS:
        assert frame[column].all(), frame.loc[~frame[column], "spec"].tolist()


def test_random_ideals_are_seeded():
    first, second = random_ideals(15, seed=3), random_ideals(15, seed=3)
    assert first == second
    assert all(ideal.n <= 4 and len(ideal) <= 4 for ideal in first)
    assert all(max(max(g.exponents) for g in ideal.gens) <= 2 for ideal in first)


def test_random_population_checks():
    frame = SweepProcessor().random_population(count=60, seed=11)
    assert len(frame) == 60
    for column in ("lex_hilbert_equal", "o_sequence", "criticality_consistent"):
        assert frame[column].all()
    critical = frame[frame["critical"]]
    assert critical["quotient_inequality"].astype(bool).all()
    assert critical["ideal_inequality"].astype(bool).all()


def test_stanleyize_population():
    frame = SweepProcessor().stanleyize_population(count=12, seed=5)
    assert len(frame) == 12
    assert frame["hilbert_equal"].all()
    assert frame["depth_equal"].all()
    assert frame.loc[frame["sdepth_checked"], "sdepth_ge_depth"].all()


@pytest.mark.slow
def test_stanleyize_population_of_one_hundred():
    frame = SweepProcessor().stanleyize_population(count=100)
    assert len(frame) == 100
    assert frame["hilbert_equal"].all()
    assert frame["depth_equal"].all()
    assert frame["sdepth_checked"].mean() >= 0.9
    assert frame.loc[frame["sdepth_checked"], "sdepth_ge_depth"].all()


def test_unchecked_stanley_depth_is_not_a_failure():
    """A poset cap of one point stops every Stanley depth search"""
    frame = SweepProcessor(Settings(poset_cap=1)).stanleyize_population(count=4, seed=5)
    assert not frame["sdepth_checked"].any()
    assert frame["sdepth_ge_depth"].isna().all()
    summary = summarize({"stanleyize": frame})["stanleyize"]
    assert summary["sdepth_ge_depth"] == {"passed": 0, "of": 0}
    assert summary["hilbert_equal"] == {"passed": 4, "of": 4}
    assert summary["sdepth_coverage"] == 0.0


@pytest.mark.slow
def test_macaulay_oracle_table():
    frame = SweepProcessor().macaulay_oracle(max_n=4, max_degree=4)
    assert frame["agrees"].all()


def test_summarize_counts_passing_rows():
    frames = {"demo": pd.DataFrame({
        "n": [1, 1, 1],
        "ok": [True, False, True],
        "partial": [True, None, True],
        "critical": [True, False, False],
    })}
    summary = summarize(frames)["demo"]
    assert summary["rows"] == 3
    assert summary["ok"] == {"passed": 2, "of": 3}
    assert summary["partial"] == {"passed": 2, "of": 2}
    assert "n" not in summary
    assert "critical" not in summary


def test_save_frames(tmp_path):
    frames = {"demo": pd.DataFrame({"a": [1, 2], "ok": [True, False]})}
    paths = save_frames(frames, str(tmp_path / "out" / "sweep.csv"))
    assert paths == [str(tmp_path / "out" / "sweep_demo.csv")]
    assert pd.read_csv(paths[0])["a"].tolist() == [1, 2]
    parquet = save_frames(frames, str(tmp_path / "sweep.parquet"))
    assert pd.read_parquet(parquet[0])["ok"].tolist() == [True, False]
    with pytest.raises(ValidationError):
        save_frames(frames, str(tmp_path / "sweep.json"))


def test_hilbert_figure():
    frame = hilbert_bound_frame([1, 2, 2, 2], 2)
    assert frame["bound"].tolist() == [1, 2, 3, 2]
    figure = create_hilbert_figure([1, 2, 2, 2], 2, "n=2; x1*x2")
    assert len(figure.data) == 2


def test_report_serialization():
    report = build_report("demo", {"b": 1, "a": [1, 2]})
    text = dumps(report)
    assert text.index(b'"command"') < text.index(b'"config"') < text.index(b'"result"')
    assert orjson.loads(text)["config"]["prime"] == 32003
