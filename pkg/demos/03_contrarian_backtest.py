#!/usr/bin/env python3
"""Backtest the imbalance signal: follow vs contrarian, and deflation.

The synthetic bundle plants a drift against the imbalance sign over the
21 trading days after each quarter, so contrarian strategies around
that horizon should come out on top. The second half shows the
deflated-Sharpe significance test doing its job: a focused grid of a
few strategies keeps its significance, while a wide grid of hundreds
(including every mirror-image follow strategy) deflates everything
away.
"""

from pathlib import Path

from fundflows import RunConfig, SynthSpec, generate_bundle
from fundflows.cli import cmd_backtest, cmd_imbalance, cmd_ingest

OUT = Path(__file__).parent / "output" / "backtest_demo"


def run(tag: str, **overrides):
    cfg = RunConfig(
        holdings=str(OUT / "holdings.csv"),
        returns=str(OUT / "returns.csv"),
        out_dir=str(OUT / tag),
        **overrides,
    ).validate()
    cmd_ingest(cfg)
    cmd_imbalance(cfg)
    return cfg, cmd_backtest(cfg)


def show_top(cfg, k=6):
    import pandas as pd

    df = pd.read_csv(Path(cfg.out_dir) / "backtest" / "summary.csv", comment="#")
    df = df[df["sharpe_annualized"].notna()]
    cols = ["config", "pnl_total", "ppt", "sharpe_annualized",
            "deflated_confidence", "significant", "sharpe_display"]
    print(df.nlargest(k, "sharpe_annualized")[cols].to_string(index=False))


def main():
    # A deliberately strong planted reversal so the significance story
    # is visible at demo scale (24 quarters is a short sample for a
    # deflated-Sharpe test).
    generate_bundle(SynthSpec(seed=33, quarters=24, funds=200, assets=120,
                              future_drift=0.03), OUT)

    print("=== focused grid: contrarian, trade imbalances, N=20 ===")
    cfg, summary = run(
        "focused",
        n_grid=(20,),
        sources=("tr",),
        directions=("contrarian",),
        horizons=(10, 21, 42),
        quantiles=(1, 3, 5),
    )
    print(f"strategies: {summary['strategies']}, significant: {summary['significant']}")
    show_top(cfg)

    print("\n=== wide grid: both directions, every knob ===")
    cfg, summary = run(
        "wide",
        n_grid=(20, 60),
        sources=("vol", "tr"),
        directions=("follow", "contrarian"),
        horizons=(5, 10, 21, 42, 63),
        quantiles=(1, 2, 3, 4, 5),
    )
    print(f"strategies: {summary['strategies']}, significant: {summary['significant']}")
    show_top(cfg)
    print("\nMirrored follow/contrarian pairs double the dispersion of the")
    print("trial Sharpe set, so the deflation hurdle rises with the grid;")
    print("failed strategies display a Sharpe of exactly 0 in the summary.")


if __name__ == "__main__":
    main()
