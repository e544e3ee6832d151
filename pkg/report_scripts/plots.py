"""Hilbert function of S/I drawn against Macaulay's growth bound."""
import pandas as pd
import plotly.graph_objects as go

from algebra_scripts.hilbert import macaulay_growth

BLUE_BLACK = "#17202A"
BOUND_COLOR = "#2980B9"


def hilbert_bound_frame(values, n):
    """H(d) next to the largest value the previous degree allows."""
    bounds = [1, n] + [macaulay_growth(values[d - 1], d - 1) for d in range(2, len(values))]
    return pd.DataFrame({"d": range(len(values)), "H(d)": values, "bound": bounds[:len(values)]})


def create_hilbert_figure(values, n, title):
    """
    Creates a line chart of the Hilbert function with its growth bound.

    Args:
        values (list[int]): H(0), ..., H(D).
        n (int): Number of variables (the bound for H(1)).
        title (str): Figure title, usually the ideal text.

    Returns:
        plotly.graph_objects.Figure: Two traces, H(d) and the bound.
    """
    frame = hilbert_bound_frame(values, n)
    fig = go.Figure()
    fig.add_trace(go.Scatter(x=frame["d"], y=frame["H(d)"], mode="lines+markers",
                             name="H(d)", line=dict(color=BLUE_BLACK)))
    fig.add_trace(go.Scatter(x=frame["d"], y=frame["bound"], mode="lines",
                             name="H(d-1)^<d-1>", line=dict(color=BOUND_COLOR, dash="dash")))
    fig.update_layout(
        title=title,
        xaxis_title="degree d",
        yaxis_title="dimension",
        plot_bgcolor="white",
        legend=dict(orientation="h", yanchor="bottom", y=1.02, xanchor="right", x=1),
    )
    return fig


def write_hilbert_figure(values, n, title, path):
    create_hilbert_figure(values, n, title).write_html(path, include_plotlyjs="cdn")
