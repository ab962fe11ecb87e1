"""Construction and validation of multi-qudit pure states.

Basis convention used throughout the package: party 0 is the most
significant digit of the basis index, so the label |b0 b1 ... b_{n-1}>
maps to index sum_k b_k * prod_{j>k} dims[j].  This is the index order a
C-contiguous reshape to one axis per party produces.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

NORM_TOL = 1e-12
CUSTOM_NORM_TOL = 1e-9
MAX_PARTIES = 14


@dataclass(frozen=True, eq=False)
class PureState:
    """Normalized amplitude vector over a fixed tuple of local dimensions.

    Instances are immutable: the amplitude array is copied on construction
    and write-protected, so states can be shared freely between threads.
    """

    dims: tuple[int, ...]
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        dims = tuple(int(d) for d in self.dims)
        if not dims:
            raise ValueError("a state needs at least one party")
        if any(d < 2 for d in dims):
            raise ValueError(f"local dimensions must be >= 2, got {dims}")
        if len(dims) > MAX_PARTIES:
            raise ValueError(
                f"dense amplitude storage is capped at {MAX_PARTIES} parties, "
                f"got {len(dims)}"
            )
        amps = np.array(self.amplitudes, dtype=np.complex128)
        expected = math.prod(dims)
        if amps.shape != (expected,):
            raise ValueError(
                f"amplitude vector has shape {amps.shape}, expected ({expected},)"
            )
        norm = float(np.linalg.norm(amps))
        if abs(norm - 1.0) > NORM_TOL:
            raise ValueError(
                f"state norm {norm!r} deviates from 1 beyond {NORM_TOL}; "
                "use make_custom to renormalize raw vectors"
            )
        amps.setflags(write=False)
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def n_parties(self) -> int:
        return len(self.dims)

    @property
    def dim_total(self) -> int:
        return self.amplitudes.shape[0]

    def as_tensor(self) -> np.ndarray:
        """Amplitudes reshaped to one axis per party (read-only view)."""
        return self.amplitudes.reshape(self.dims)

    def to_json_dict(self) -> dict:
        """JSON document {"dims": [...], "re": [...], "im": [...]}."""
        return {
            "dims": list(self.dims),
            "re": self.amplitudes.real.tolist(),
            "im": self.amplitudes.imag.tolist(),
        }

    @classmethod
    def from_json_dict(cls, doc: dict) -> "PureState":
        """Rebuild a state from its JSON document.

        The "im" field may be omitted for real vectors.  The vector goes
        through the same norm gate as make_custom, so documents written by
        other tools are renormalized if they are off by at most 1e-9.
        """
        try:
            dims = list(doc["dims"])
            re = np.asarray(doc["re"], dtype=np.float64)
        except (KeyError, TypeError) as exc:
            raise ValueError(f"state document is missing field: {exc}") from exc
        im = np.asarray(doc.get("im", np.zeros_like(re)), dtype=np.float64)
        if re.shape != im.shape:
            raise ValueError(
                f"re/im length mismatch: {re.shape} vs {im.shape}"
            )
        return make_custom(dims, re + 1j * im)


def make_custom(dims, amplitudes, renormalize: bool = False) -> PureState:
    """Validate a raw amplitude vector and wrap it as a PureState.

    The vector must be one-dimensional with length prod(dims).  Vectors
    whose norm deviates from 1 by at most 1e-9 are rescaled to exact unit
    norm; larger deviations raise unless renormalize=True.  A zero vector
    is always rejected.
    """
    amps = np.asarray(amplitudes, dtype=np.complex128)
    if amps.ndim != 1:
        raise ValueError(f"amplitudes must be one-dimensional, got shape {amps.shape}")
    expected = math.prod(int(d) for d in dims)
    if amps.shape[0] != expected:
        raise ValueError(
            f"amplitude vector has length {amps.shape[0]}, expected {expected} "
            f"for dims {tuple(dims)}"
        )
    norm = float(np.linalg.norm(amps))
    if norm == 0.0:
        raise ValueError("zero vector cannot be normalized to a state")
    if abs(norm - 1.0) > CUSTOM_NORM_TOL and not renormalize:
        raise ValueError(
            f"norm {norm!r} deviates from 1 beyond {CUSTOM_NORM_TOL}; "
            "pass renormalize=True to rescale anyway"
        )
    return PureState(tuple(int(d) for d in dims), amps / norm)


def make_ghz(n: int) -> PureState:
    """Equal superposition of |0...0> and |1...1> over n qubits."""
    if n < 2:
        raise ValueError(f"ghz construction needs n >= 2, got {n}")
    amps = np.zeros(1 << n, dtype=np.complex128)
    amps[0] = amps[-1] = 1.0 / math.sqrt(2.0)
    return PureState((2,) * n, amps)


def make_w(n: int) -> PureState:
    """Symmetric single-excitation state over n qubits."""
    if n < 2:
        raise ValueError(f"w construction needs n >= 2, got {n}")
    amps = np.zeros(1 << n, dtype=np.complex128)
    for k in range(n):
        amps[1 << k] = 1.0 / math.sqrt(n)
    return PureState((2,) * n, amps)


def make_family_a(theta: float) -> PureState:
    """Three-qubit family (cos(t)|000> + sin(t)|100>)/sqrt2 + |111>/sqrt2.

    Any real theta is accepted; sweeps default to [0, pi/2], where theta=0
    gives the GHZ state and theta=pi/2 a biseparable state.
    """
    inv_sqrt2 = 1.0 / math.sqrt(2.0)
    amps = np.zeros(8, dtype=np.complex128)
    amps[0b000] = math.cos(theta) * inv_sqrt2
    amps[0b100] = math.sin(theta) * inv_sqrt2
    amps[0b111] = inv_sqrt2
    return PureState((2, 2, 2), amps)


def make_family_b(theta: float) -> PureState:
    """Three-qubit family cos(t)|000> + sin(t)|111>."""
    amps = np.zeros(8, dtype=np.complex128)
    amps[0b000] = math.cos(theta)
    amps[0b111] = math.sin(theta)
    return PureState((2, 2, 2), amps)


def make_family_c(theta: float) -> PureState:
    """Four-qubit family sin(t)(cos(3pi/5)|0100> + sin(3pi/5)|1000>) + cos(t)|0011>.

    Product state at theta=0, biseparable (last two qubits in |00>) at
    theta=pi/2, genuinely entangled in between.
    """
    beta = 3.0 * math.pi / 5.0
    amps = np.zeros(16, dtype=np.complex128)
    amps[0b0100] = math.sin(theta) * math.cos(beta)
    amps[0b1000] = math.sin(theta) * math.sin(beta)
    amps[0b0011] = math.cos(theta)
    return PureState((2, 2, 2, 2), amps)


def apply_local_unitary(state: PureState, party: int, matrix) -> PureState:
    """Apply a d x d matrix to one party and revalidate the result.

    Intended for unitaries: anything that changes the norm beyond the
    construction tolerance is rejected by the PureState gate.
    """
    if not 0 <= party < state.n_parties:
        raise ValueError(f"party {party} out of range for {state.n_parties} parties")
    d = state.dims[party]
    u = np.asarray(matrix, dtype=np.complex128)
    if u.shape != (d, d):
        raise ValueError(f"matrix shape {u.shape} does not match local dimension {d}")
    rotated = np.tensordot(u, state.as_tensor(), axes=([1], [party]))
    rotated = np.moveaxis(rotated, 0, party)
    return PureState(state.dims, rotated.reshape(-1))


def permute_parties(state: PureState, perm) -> PureState:
    """Relabel parties: party i of the result is party perm[i] of the input."""
    perm = tuple(int(p) for p in perm)
    if sorted(perm) != list(range(state.n_parties)):
        raise ValueError(f"{perm} is not a permutation of 0..{state.n_parties - 1}")
    dims = tuple(state.dims[p] for p in perm)
    tensor = np.transpose(state.as_tensor(), perm)
    return PureState(dims, tensor.reshape(-1))
