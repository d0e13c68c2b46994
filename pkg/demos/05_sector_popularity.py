#!/usr/bin/env python3
"""Sector views: filtered strategies and popularity series.

Maps issuers to the ten SIC major groups, runs the contrarian strategy
inside single sectors, and tracks each sector's "popularity" (average
number of active funds on its stocks) against the cumulative
market-excess return of holding the sector.
"""

from collections import defaultdict
from pathlib import Path

from fundflows import RunConfig, SynthSpec, generate_bundle, load_sector_map
from fundflows.cli import cmd_backtest, cmd_imbalance, cmd_ingest, cmd_popularity

OUT = Path(__file__).parent / "output" / "sector_demo"


def main():
    generate_bundle(SynthSpec(seed=77, quarters=12, funds=150, assets=100), OUT)

    smap = load_sector_map((OUT / "sectors.csv").read_text())
    counts = defaultdict(int)
    for label in smap.entries.values():
        counts[label] += 1
    print("sector map coverage:")
    for label in sorted(counts):
        print(f"  {label:<12} {counts[label]} issuers")

    cfg = RunConfig(
        holdings=str(OUT / "holdings.csv"),
        returns=str(OUT / "returns.csv"),
        sectors=str(OUT / "sectors.csv"),
        out_dir=str(OUT / "run"),
        n_grid=(10,),
        sources=("tr",),
        directions=("contrarian",),
        horizons=(21, 42, 63),
        quantiles=(1, 2),
        sector_labels=("manuf", "fin-ins-RE", "services"),
    ).validate()
    cmd_ingest(cfg)
    cmd_imbalance(cfg)
    cmd_backtest(cfg)

    import pandas as pd

    df = pd.read_csv(Path(cfg.out_dir) / "backtest" / "summary.csv", comment="#")
    sector_rows = df[df["sector"].notna()]
    print(f"\nsector-filtered strategies: {len(sector_rows)}")
    best = sector_rows.nlargest(5, "sharpe_annualized")
    print(best[["config", "sector", "pnl_total", "sharpe_annualized"]].to_string(index=False))

    cmd_popularity(cfg)
    pop = pd.read_csv(Path(cfg.out_dir) / "sectors" / "popularity.csv", comment="#")
    last = pop[pop["period_end"] == pop["period_end"].max()]
    print("\nfinal-quarter popularity (mean active funds) and cumulative MER:")
    print(last.sort_values("mean_active_funds", ascending=False).to_string(index=False))


if __name__ == "__main__":
    main()
