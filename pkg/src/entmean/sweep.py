"""Theta sweeps over the parameterized families, peak location, ordering
analysis, and CSV/gnuplot emission.

Grids are deterministic (theta_i = theta_min + i * span / (steps - 1));
identical specs produce byte-identical CSV files.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import measures
from .states import PureState, make_family_a, make_family_b, make_family_c

FAMILY_BUILDERS = {
    "a": make_family_a,
    "b": make_family_b,
    "c": make_family_c,
}
THREE_QUBIT_FAMILIES = frozenset({"a", "b"})
MEASURE_COLUMNS = ("gbc", "gmc", "ggm", "fill")

_PLATEAU_TOL = 1e-12
_SLOPE_EPS = 1e-15
_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def family_state(family: str, theta: float) -> PureState:
    """State of one parameterized family at a given angle."""
    try:
        return FAMILY_BUILDERS[family](theta)
    except KeyError:
        raise ValueError(
            f"unknown family {family!r}, expected one of {sorted(FAMILY_BUILDERS)}"
        ) from None


def measure_value(state: PureState, name: str) -> float:
    """Evaluate one measure by column name."""
    if name == "gbc":
        return measures.gbc(state)
    if name == "gmc":
        return measures.gmc(state)
    if name == "ggm":
        return measures.ggm(state)
    if name == "fill":
        return measures.concurrence_fill(state)
    raise ValueError(f"unknown measure {name!r}, expected one of {MEASURE_COLUMNS}")


@dataclass(frozen=True)
class SweepSpec:
    """Grid specification for one family sweep.

    measures defaults to every column applicable to the family; the fill
    column is only defined for the three-qubit families.
    """

    family: str
    theta_min: float = 0.0
    theta_max: float = math.pi / 2.0
    steps: int = 201
    measures: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if self.family not in FAMILY_BUILDERS:
            raise ValueError(
                f"unknown family {self.family!r}, "
                f"expected one of {sorted(FAMILY_BUILDERS)}"
            )
        if self.steps < 2:
            raise ValueError(f"steps must be >= 2, got {self.steps}")
        if not self.theta_min < self.theta_max:
            raise ValueError(
                f"theta_min must be below theta_max, got "
                f"[{self.theta_min}, {self.theta_max}]"
            )
        if self.measures is None:
            wanted = MEASURE_COLUMNS
            if self.family not in THREE_QUBIT_FAMILIES:
                wanted = tuple(m for m in wanted if m != "fill")
            object.__setattr__(self, "measures", wanted)
            return
        chosen = tuple(self.measures)
        if not chosen:
            raise ValueError("at least one measure is required")
        for name in chosen:
            if name not in MEASURE_COLUMNS:
                raise ValueError(
                    f"unknown measure {name!r}, expected one of {MEASURE_COLUMNS}"
                )
        if "fill" in chosen and self.family not in THREE_QUBIT_FAMILIES:
            raise ValueError(
                f"fill is defined for 3-qubit states only; "
                f"family {self.family!r} is not 3-qubit"
            )
        object.__setattr__(self, "measures", chosen)


@dataclass(frozen=True)
class SweepRow:
    """One grid point of a sweep: family, angle, and the measure values."""

    family: str
    theta: float
    values: dict[str, float]


def run_sweep(spec: SweepSpec) -> list[SweepRow]:
    """Evaluate every requested measure over the deterministic theta grid."""
    span = spec.theta_max - spec.theta_min
    rows = []
    for i in range(spec.steps):
        theta = spec.theta_min + i * span / (spec.steps - 1)
        report = measures.full_report(family_state(spec.family, theta))
        values = {name: getattr(report, name) for name in spec.measures}
        rows.append(SweepRow(spec.family, theta, values))
    return rows


@dataclass(frozen=True)
class PeakResult:
    """Located maximum of one measure column.

    plateau is set when the maximum spreads over more grid points than a
    single bracketing cell; theta is then the plateau midpoint and no
    refinement is attempted.
    """

    theta: float
    value: float
    plateau: bool = False


def find_peak(rows: list[SweepRow], measure: str, tol: float = 1e-6) -> PeakResult:
    """Locate the maximizing theta of one measure column.

    The grid argmax is refined by golden-section search on the continuous
    measure down to the requested theta tolerance; the bracketing from the
    grid keeps this robust for the kinked peaks the min-based measures
    produce.
    """
    if len(rows) < 3:
        raise ValueError(f"peak search needs at least 3 rows, got {len(rows)}")
    thetas = [row.theta for row in rows]
    values = [row.values[measure] for row in rows]
    top = max(values)
    best = values.index(top)
    lo_run = best
    while lo_run > 0 and top - values[lo_run - 1] <= _PLATEAU_TOL:
        lo_run -= 1
    hi_run = best
    while hi_run < len(values) - 1 and top - values[hi_run + 1] <= _PLATEAU_TOL:
        hi_run += 1
    if hi_run - lo_run >= 2:
        mid = 0.5 * (thetas[lo_run] + thetas[hi_run])
        return PeakResult(theta=mid, value=top, plateau=True)

    family = rows[0].family

    def objective(theta: float) -> float:
        return measure_value(family_state(family, theta), measure)

    lo = thetas[max(best - 1, 0)]
    hi = thetas[min(best + 1, len(rows) - 1)]
    theta = _golden_max(objective, lo, hi, tol)
    return PeakResult(theta=theta, value=objective(theta), plateau=False)


def _golden_max(f, lo: float, hi: float, tol: float) -> float:
    x1 = hi - _INVPHI * (hi - lo)
    x2 = lo + _INVPHI * (hi - lo)
    f1 = f(x1)
    f2 = f(x2)
    while hi - lo > tol:
        if f1 < f2:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _INVPHI * (hi - lo)
            f2 = f(x2)
        else:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _INVPHI * (hi - lo)
            f1 = f(x1)
    return 0.5 * (lo + hi)


@dataclass(frozen=True)
class OrderingFinding:
    """One mined ordering fact.

    kind "equal-x-different-y": theta_pair = (theta in first sweep, theta
    in second sweep) where measure x matches within tolerance while
    measure y is separated.  kind "opposite-slope-interval": a maximal
    theta interval of a single sweep where x and y move in opposite
    directions; family names the sweep it was found on.
    """

    kind: str
    measure_x: str
    measure_y: str
    theta_pair: tuple[float, float] | None = None
    theta_interval: tuple[float, float] | None = None
    family: str | None = None
    values: dict[str, float] = field(default_factory=dict)


def find_ordering_reversals(
    rows_a: list[SweepRow],
    rows_b: list[SweepRow],
    x: str,
    y: str,
    match_tol: float = 1e-4,
    sep_min: float = 1e-2,
) -> list[OrderingFinding]:
    """Mine two sweeps for states indistinguishable in x but separated in y.

    Returns every grid pair (theta_a, theta_b) with |x_a - x_b| <=
    match_tol and |y_a - y_b| >= sep_min, followed by the maximal
    opposite-slope intervals of each individual sweep (x rising while y
    falls, or vice versa).  Passing the same list twice scans it once.
    """
    xa = np.array([row.values[x] for row in rows_a])
    ya = np.array([row.values[y] for row in rows_a])
    xb = np.array([row.values[x] for row in rows_b])
    yb = np.array([row.values[y] for row in rows_b])
    matched = (np.abs(xa[:, None] - xb[None, :]) <= match_tol) & (
        np.abs(ya[:, None] - yb[None, :]) >= sep_min
    )
    findings = []
    for i, j in np.argwhere(matched):
        findings.append(
            OrderingFinding(
                kind="equal-x-different-y",
                measure_x=x,
                measure_y=y,
                theta_pair=(rows_a[i].theta, rows_b[j].theta),
                values={
                    "x_a": float(xa[i]),
                    "x_b": float(xb[j]),
                    "y_a": float(ya[i]),
                    "y_b": float(yb[j]),
                },
            )
        )
    findings.extend(_opposite_slope_intervals(rows_a, x, y))
    if rows_b is not rows_a:
        findings.extend(_opposite_slope_intervals(rows_b, x, y))
    return findings


def _opposite_slope_intervals(
    rows: list[SweepRow], x: str, y: str
) -> list[OrderingFinding]:
    xs = np.array([row.values[x] for row in rows])
    ys = np.array([row.values[y] for row in rows])
    dx = np.diff(xs)
    dy = np.diff(ys)
    opposite = ((dx > _SLOPE_EPS) & (dy < -_SLOPE_EPS)) | (
        (dx < -_SLOPE_EPS) & (dy > _SLOPE_EPS)
    )
    findings = []
    start = None
    for i, flag in enumerate(list(opposite) + [False]):
        if flag and start is None:
            start = i
        elif not flag and start is not None:
            findings.append(
                OrderingFinding(
                    kind="opposite-slope-interval",
                    measure_x=x,
                    measure_y=y,
                    theta_interval=(rows[start].theta, rows[i].theta),
                    family=rows[0].family,
                    values={
                        "x_start": float(xs[start]),
                        "x_end": float(xs[i]),
                        "y_start": float(ys[start]),
                        "y_end": float(ys[i]),
                    },
                )
            )
            start = None
    return findings


def emit_csv(rows: list[SweepRow], path) -> None:
    """Write sweep rows as CSV with the fixed header family,theta,gbc,gmc,ggm,fill.

    Measures absent from a sweep stay as empty fields.  theta is printed
    with 12 significant digits; measure values use the shortest
    representation that round-trips.
    """
    lines = ["family,theta," + ",".join(MEASURE_COLUMNS)]
    for row in rows:
        cells = [row.family, format(row.theta, ".12g")]
        for name in MEASURE_COLUMNS:
            value = row.values.get(name)
            cells.append("" if value is None else repr(float(value)))
        lines.append(",".join(cells))
    _write_text(path, "\n".join(lines) + "\n")


def emit_plotscript(rows: list[SweepRow], path, csv_path) -> None:
    """Write a standalone gnuplot script that plots an emitted CSV."""
    present = [name for name in MEASURE_COLUMNS if name in rows[0].values]
    plots = ", \\\n  ".join(
        f"'{csv_path}' every ::1 using 2:{3 + MEASURE_COLUMNS.index(name)} "
        f"with lines lw 2 title '{name}'"
        for name in present
    )
    family = rows[0].family
    script = (
        "# gnuplot script generated by entmean; expects the CSV next to it\n"
        "set datafile separator ','\n"
        f"set title 'family {family} sweep'\n"
        "set xlabel 'theta (rad)'\n"
        "set ylabel 'measure value'\n"
        "set yrange [0:1.05]\n"
        "set key left bottom\n"
        "set grid\n"
        f"plot \\\n  {plots}\n"
    )
    _write_text(path, script)


def emit_closed_form_csv(table, path) -> None:
    """Write (n, gbc_ghz, gbc_w, ratio) rows as CSV."""
    lines = ["n,gbc_ghz,gbc_w,ratio"]
    for n, g, w, ratio in table:
        lines.append(f"{n},{g!r},{w!r},{ratio!r}")
    _write_text(path, "\n".join(lines) + "\n")


def _write_text(path, text: str) -> None:
    with open(path, "w", encoding="ascii", newline="") as handle:
        handle.write(text)
