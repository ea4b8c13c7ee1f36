"""Delimited interval reports and the companion figure.

Rows pair the exact counts from count_interval with the five modelled
counts.  Output is deterministic byte-for-byte: fixed header, fixed
column order, fixed rounding (one decimal below 10 in magnitude,
nearest integer above, scientific notation once a value leaves float
range, "--" where a model is undefined).
"""

from __future__ import annotations

from dataclasses import dataclass

from prothforge.density import EstimateReport, estimate_report
from prothforge.logreal import LogReal
from prothforge.safeprimes import count_interval

CSV_HEADER = "n,primes,sgp,sp,alpha1,alpha2,alpha3_li,alpha4_li,alpha5_li"


def format_value(value) -> str:
    if value is None:
        return "--"
    if isinstance(value, LogReal):
        return value.sci(6)
    if isinstance(value, int):
        return str(value)
    v = float(value)
    if v != v or v in (float("inf"), float("-inf")):
        return "--"
    if abs(v) < 10.0:
        return f"{v:.1f}"
    return str(round(v))


@dataclass(frozen=True)
class TableRow:
    n: int
    primes: int
    sgp: int
    sp: int
    report: EstimateReport

    def as_csv(self) -> str:
        e = self.report.expected
        cells = [
            str(self.n), str(self.primes), str(self.sgp), str(self.sp),
            format_value(e[1]), format_value(e[2]), format_value(e[3]),
            format_value(e[4]), format_value(e[5]),
        ]
        return ",".join(cells)


def table_rows(a: int, n_lo: int, n_hi: int, oracle_rounds: int = 64) -> list[TableRow]:
    rows = []
    for n in range(n_lo, n_hi + 1):
        counts = count_interval(a, n, oracle_rounds)
        rows.append(
            TableRow(n=n, primes=counts.primes, sgp=counts.sgp, sp=counts.sp,
                     report=estimate_report(a, n))
        )
    return rows


def rows_to_csv(rows: list[TableRow]) -> str:
    return "\n".join([CSV_HEADER] + [row.as_csv() for row in rows]) + "\n"


def render_plot(rows: list[TableRow], path: str) -> None:
    """Counts and modelled counts against n, log-scaled, written to path."""
    import matplotlib

    matplotlib.use("Agg", force=True)
    import matplotlib.pyplot as plt

    series = [
        ("primes", [float(r.primes) for r in rows], "k.-"),
        ("sgp observed", [float(r.sgp) for r in rows], "ko--"),
    ]
    for which, style in ((1, "C0-"), (2, "C1-"), (3, "C2-"), (4, "C3-"), (5, "C4-")):
        vals = []
        for r in rows:
            v = r.report.expected[which]
            if isinstance(v, LogReal):
                v = v.to_float()
            vals.append(float(v) if v is not None else float("nan"))
        series.append((f"alpha{which} model", vals, style))

    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    ns = [r.n for r in rows]
    for label, vals, style in series:
        pts = [(n, v) for n, v in zip(ns, vals) if v == v and 0 < v < float("inf")]
        if pts:
            ax.plot([p[0] for p in pts], [p[1] for p in pts], style,
                    label=label, linewidth=1.2, markersize=4)
    ax.set_yscale("log")
    ax.set_xlabel("interval index n")
    ax.set_ylabel("count")
    ax.legend(fontsize=8)
    ax.grid(True, which="both", alpha=0.25)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
