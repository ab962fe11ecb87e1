"""Genuine-multipartite-entanglement measures on pure states.

Four aggregates over the bipartite cuts of a state:

* gbc  -- geometric mean of all bipartite concurrences,
* gmc  -- minimum bipartite concurrence,
* ggm  -- one minus the largest squared Schmidt coefficient over all cuts,
* concurrence_fill -- triangle-area measure, three qubits only.

All of them vanish exactly on biseparable states and are strictly
positive on genuinely entangled ones.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .bipartitions import Bipartition, enumerate_bipartitions
from .linalg import linear_entropy, schmidt_spectrum
from .states import PureState

# Any concurrence below this is treated as an exactly vanishing cut, so a
# biseparable state yields gbc == 0.0 rather than a denormal root.
ZERO_CUT_TOL = 1e-12

_FILL_NORMALIZATION = 16.0 / 3.0
_TRIANGLE_TOL = 1e-9


def concurrence(
    state: PureState, part: Bipartition, regularized: bool = True
) -> float:
    """Bipartite concurrence of a pure state across one cut.

    With regularized=True the prefactor d_min/(d_min - 1) is used, so the
    value reaches 1 exactly when the smaller side is maximally mixed and
    stays in [0, 1] for any local dimensions.  regularized=False uses the
    plain prefactor 2; the two agree when the smaller side is a qubit and
    otherwise differ by the constant factor sqrt(d_min / (2 (d_min - 1))).
    """
    _require_parties(state)
    d_a, d_b = part.side_dims(state.dims)
    d_min = min(d_a, d_b)
    mixedness = max(0.0, linear_entropy(state, part))
    if regularized:
        return min(1.0, math.sqrt(d_min / (d_min - 1.0) * mixedness))
    return math.sqrt(2.0 * mixedness)


def gbc(state: PureState, regularized: bool = True) -> float:
    """Geometric mean of the concurrences over every bipartition.

    Computed as exp(mean of logs) so the product of up to 2**(n-1) - 1
    factors never under- or overflows; returns exactly 0.0 as soon as any
    cut is a product cut.
    """
    return _geometric_mean(_all_concurrences(state, regularized))


def gmc(state: PureState, regularized: bool = True) -> float:
    """Minimum bipartite concurrence over every bipartition."""
    return min(_all_concurrences(state, regularized))


def ggm(state: PureState) -> float:
    """One minus the largest squared Schmidt coefficient over all cuts."""
    _require_parties(state)
    cuts = enumerate_bipartitions(state.n_parties)
    lam_max = max(
        float(schmidt_spectrum(state, part).lambdas_sq[0]) for part in cuts
    )
    return max(0.0, 1.0 - lam_max)


def concurrence_fill(state: PureState) -> float:
    """Triangle-area measure for exactly three qubits.

    The sides of the triangle are the three squared one-to-other
    concurrences; the value is the fourth root of 16/3 times Heron's
    product, which makes an equilateral unit triangle score exactly 1.
    Degenerate triangles (one vanishing cut, or a saturated triangle
    inequality) score 0.
    """
    if state.dims != (2, 2, 2):
        raise ValueError(
            f"concurrence fill needs exactly 3 qubits, got dims {state.dims}"
        )
    sides = [
        concurrence(state, Bipartition.from_parties([k], 3)) ** 2
        for k in range(3)
    ]
    for i in range(3):
        others = sides[(i + 1) % 3] + sides[(i + 2) % 3]
        if sides[i] > others + _TRIANGLE_TOL:
            raise ArithmeticError(
                f"squared concurrences {sides} violate the triangle inequality"
            )
    q = 0.5 * sum(sides)
    heron = q * (q - sides[0]) * (q - sides[1]) * (q - sides[2])
    return (_FILL_NORMALIZATION * max(0.0, heron)) ** 0.25


@dataclass(frozen=True)
class MeasureReport:
    """All measures of one state plus the per-cut concurrences behind them.

    product_p is the plain product of the concurrences; it underflows to
    0.0 for large party counts even when gbc (kept in the log domain) is
    well-defined.  fill is present only for three-qubit states.
    """

    per_bipartition: tuple[tuple[Bipartition, float], ...]
    product_p: float
    cardinality: int
    gbc: float
    gmc: float
    ggm: float
    fill: float | None

    def to_json_dict(self) -> dict:
        return {
            "cardinality": self.cardinality,
            "concurrences": {
                part.label: value for part, value in self.per_bipartition
            },
            "product": self.product_p,
            "gbc": self.gbc,
            "gmc": self.gmc,
            "ggm": self.ggm,
            "fill": self.fill,
        }


def full_report(state: PureState, regularized: bool = True) -> MeasureReport:
    """Evaluate every applicable measure of one state in a single pass."""
    _require_parties(state)
    cuts = enumerate_bipartitions(state.n_parties)
    pairs = tuple(
        (part, concurrence(state, part, regularized)) for part in cuts
    )
    values = [v for _, v in pairs]
    mean = _geometric_mean(values)
    product = 0.0 if mean == 0.0 else math.exp(math.fsum(map(math.log, values)))
    fill = concurrence_fill(state) if state.dims == (2, 2, 2) else None
    return MeasureReport(
        per_bipartition=pairs,
        product_p=product,
        cardinality=cuts.cardinality,
        gbc=mean,
        gmc=min(values),
        ggm=ggm(state),
        fill=fill,
    )


def _all_concurrences(state: PureState, regularized: bool) -> list[float]:
    _require_parties(state)
    cuts = enumerate_bipartitions(state.n_parties)
    return [concurrence(state, part, regularized) for part in cuts]


def _geometric_mean(values) -> float:
    if any(v < ZERO_CUT_TOL for v in values):
        return 0.0
    # fsum over the canonical cut order: reproducible bit-for-bit and
    # insensitive to accumulation order.
    return math.exp(math.fsum(map(math.log, values)) / len(values))


def _require_parties(state: PureState) -> None:
    if state.n_parties < 2:
        raise ValueError("entanglement measures need at least 2 parties")
