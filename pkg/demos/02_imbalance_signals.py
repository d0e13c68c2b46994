#!/usr/bin/env python3
"""From raw holdings rows to per-asset imbalance signals.

Walks the ingestion chain by hand: parse the holdings CSV, aggregate
each quarter into a sparse fund x asset matrix, difference consecutive
quarters, prune dead columns, then compute volume and trade-count
imbalances with an activity threshold. Ends with the diagnostic
curves: survival vs N, positive-sign fractions, and the log-linear
decay fit of the survival curve.
"""

from pathlib import Path

from fundflows import (
    QuarterCalendar,
    SynthSpec,
    build_holdings_matrix,
    compute_imbalances,
    diff_matrices,
    fit_survival_decay,
    generate_bundle,
    parse_holdings,
    prune_zero_columns,
    sign_fractions,
    survival_curve,
)
from fundflows.filings import group_by_period

OUT = Path(__file__).parent / "output" / "signals_demo"


def main():
    generate_bundle(SynthSpec(seed=21, quarters=8, funds=150, assets=100), OUT)

    with (OUT / "holdings.csv").open() as f:
        records, rejects = parse_holdings(f)
    print(f"parsed {len(records):,} rows ({len(rejects)} rejected)")

    by_period = group_by_period(records)
    matrices = {p: build_holdings_matrix(recs, p) for p, recs in by_period.items()}
    periods = sorted(matrices)
    print(f"{len(periods)} quarters, "
          f"{len(matrices[periods[0]].funds)} funds, "
          f"{len(matrices[periods[0]].assets)} assets in the first quarter")

    calendar = QuarterCalendar.from_periods(periods)
    diffs = []
    for prev, curr in zip(periods, periods[1:]):
        raw = diff_matrices(matrices[curr], matrices[prev], calendar)
        pruned = prune_zero_columns(raw)
        diffs.append(pruned)
    d = diffs[-1]
    print(f"\nlast diff quarter {d.period_end}: {len(d.assets)} live assets, "
          f"{d.pruned_assets} dead columns pruned "
          f"({d.pruned_assets / (len(d.assets) + d.pruned_assets):.0%})")

    for n in (10, 40, 80):
        s = compute_imbalances(d, n)
        print(f"  N >= {n:<3d} -> {len(s):3d} assets with signals")

    s = compute_imbalances(d, 10)
    strongest = sorted(s.records, key=lambda r: -abs(r.i_tr))[:5]
    print("\nstrongest trade imbalances:")
    for rec in strongest:
        print(f"  {rec.asset}  i_tr={rec.i_tr:+.3f}  i_vol={rec.i_vol:+.3f}  "
              f"active funds={rec.n_active}")

    curve = survival_curve(d, range(0, 101, 10))
    fit = fit_survival_decay(curve)
    print("\nsurvival curve (assets with at least N active funds):")
    print("  " + "  ".join(f"N={n}:{c}" for n, c in curve))
    print(f"  log-linear fit: rate {fit.rate:.4f} per fund, R^2 {fit.r_squared:.3f}")

    fv, ft = sign_fractions(s)
    print(f"\npositive-sign fractions: volume {fv:.2%}, trades {ft:.2%}")


if __name__ == "__main__":
    main()
