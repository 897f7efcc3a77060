"""Real-doubled encoding of the rest-limit Majorana dynamics.

Complex conjugation is unphysical for a closed quantum system, so a
two-level realization cannot run the Majorana rest dynamics directly. The
complex 2-spinor is instead unpacked into a four-component *real* state

    psi4 = (Re psi_1, Re psi_2, Im psi_1, Im psi_2),

where the dynamics becomes linear with the Hermitian generator
-m c^2 (sigma_x (x) sigma_y) and can be realized on four internal levels of
a trapped ion (or two two-level ions). Because (sigma_x (x) sigma_y)^2 = I,
the propagator has the two-term closed form

    U(t) = cos(omega t) I + sin(omega t) K,    K = i sigma_x (x) sigma_y,

where K is a real integer antisymmetric matrix: U(t) is real orthogonal by
construction and no general matrix exponential is needed at runtime (tests
use one as an oracle). U forms a genuine one-parameter group, which is the
correct composition statement for the Majorana flow.

Decoding back to spinor space applies the 2x4 map (I  iI); an observable A
on spinors lifts to M^dag A M in the doubled space. Fluorescence readout of
the four level populations is emulated as seeded categorical sampling of
the squared components; populations determine only the diagonal part of a
lifted observable, and the estimator here reports exactly that split
instead of pretending to measure the rest. Off-diagonal access would need
extra rotations before readout; ``sample_populations`` exposes a
pre-readout rotation hook, with no specific pulse sequence prescribed.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .algebra import _tol, as_spinor, require_hermitian
from .params import PhysParams

# Basis-state order of the doubled space, top to bottom.
BASIS_LABELS = ("1r", "2r", "1i", "2i")

# Decoding map M = (I  iI): psi = M psi4.
DECODING_MAP = np.array(
    [[1, 0, 1j, 0], [0, 1, 0, 1j]], dtype=complex
)
DECODING_MAP.setflags(write=False)

# K = i sigma_x (x) sigma_y written out with real integer entries
# (antisymmetric, K @ K = -I); keeping it real makes the evolved states
# real by construction rather than by cancellation.
DOUBLED_ROTATION = np.array(
    [
        [0.0, 0.0, 0.0, 1.0],
        [0.0, 0.0, -1.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0, 0.0],
    ]
)
DOUBLED_ROTATION.setflags(write=False)


def as_real4(psi4) -> np.ndarray:
    arr = np.asarray(psi4, dtype=float)
    if arr.shape != (4,):
        raise ValueError(f"doubled state must have shape (4,), got {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("doubled state has non-finite components")
    return arr


def encode(psi) -> np.ndarray:
    """Split a complex 2-spinor into (Re1, Re2, Im1, Im2); norm-preserving."""
    psi = as_spinor(psi)
    return np.concatenate([psi.real, psi.imag])


def decode(psi4) -> np.ndarray:
    """Apply M = (I  iI): the complex 2-spinor (psi1r + i psi1i, psi2r + i psi2i)."""
    return DECODING_MAP @ as_real4(psi4)


def doubled_propagator(params: PhysParams, t: float) -> np.ndarray:
    """U(t) = cos(omega t) I + sin(omega t) K, real orthogonal, det = 1."""
    wt = params.omega * t
    return math.cos(wt) * np.eye(4) + math.sin(wt) * DOUBLED_ROTATION


def evolve_doubled(psi4, params: PhysParams, t: float) -> np.ndarray:
    """Advance the doubled state by time t; real arithmetic throughout."""
    psi4 = as_real4(psi4)
    wt = params.omega * t
    return math.cos(wt) * psi4 + math.sin(wt) * (DOUBLED_ROTATION @ psi4)


def lift_observable(a, tol: float | None = None) -> np.ndarray:
    """Lift a Hermitian spinor observable A to M^dag A M on the doubled space.

    Satisfies psi4^dag (M^dag A M) psi4 = (M psi4)^dag A (M psi4) exactly,
    and is linear and Hermiticity-preserving.
    """
    a = require_hermitian(a, tol)
    if a.shape != (2, 2):
        raise ValueError(f"observable must be 2x2, got {a.shape}")
    return DECODING_MAP.conj().T @ a @ DECODING_MAP


def population_probabilities(psi4, tol: float | None = None) -> np.ndarray:
    """Squared components of a normalized doubled state."""
    psi4 = as_real4(psi4)
    probs = psi4**2
    if abs(float(probs.sum()) - 1.0) > _tol(tol):
        raise ValueError(
            f"doubled state is not normalized (sum of squares {probs.sum()!r})"
        )
    return probs / probs.sum()


@dataclass(frozen=True)
class ShotRecord:
    """Counts from emulated fluorescence readout of the four populations."""

    shots: int
    counts: tuple[int, int, int, int]
    seed: int

    def __post_init__(self):
        if self.shots < 1:
            raise ValueError(f"shots must be >= 1, got {self.shots}")
        counts = tuple(int(c) for c in self.counts)
        if len(counts) != 4 or any(c < 0 for c in counts):
            raise ValueError(f"counts must be four non-negative ints, got {counts}")
        if sum(counts) != self.shots:
            raise ValueError(
                f"counts sum to {sum(counts)}, expected shots = {self.shots}"
            )
        object.__setattr__(self, "counts", counts)

    def frequencies(self) -> np.ndarray:
        return np.asarray(self.counts, dtype=float) / self.shots

    def to_json(self) -> str:
        return json.dumps(
            {
                "shots": self.shots,
                "seed": self.seed,
                "counts": list(self.counts),
                "basis": list(BASIS_LABELS),
            },
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str) -> "ShotRecord":
        data = json.loads(text)
        return cls(data["shots"], tuple(data["counts"]), data["seed"])


def sample_populations(
    psi4,
    shots: int,
    seed: int,
    readout_rotation: np.ndarray | None = None,
    tol: float | None = None,
) -> ShotRecord:
    """Draw ``shots`` independent categorical samples of the populations.

    The RNG is numpy's PCG64 seeded with ``seed``: records are reproducible
    bit-exactly for a fixed (state, shots, seed) triple. ``readout_rotation``
    optionally applies a real orthogonal 4x4 rotation before readout (the
    hook through which off-diagonal information would become accessible).
    """
    psi4 = as_real4(psi4)
    if readout_rotation is not None:
        r = np.asarray(readout_rotation, dtype=float)
        if r.shape != (4, 4) or not np.allclose(
            r.T @ r, np.eye(4), atol=_tol(tol)
        ):
            raise ValueError("readout_rotation must be a real orthogonal 4x4 matrix")
        psi4 = r @ psi4
    probs = population_probabilities(psi4, tol)
    rng = np.random.Generator(np.random.PCG64(seed))
    counts = rng.multinomial(int(shots), probs)
    return ShotRecord(int(shots), tuple(int(c) for c in counts), int(seed))


@dataclass(frozen=True)
class PopulationEstimate:
    """What population counts can and cannot say about a lifted observable.

    ``value`` estimates only the diagonal part sum_k A4[k, k] * P_k; the
    off-diagonal remainder is unobservable from populations alone, so its
    magnitude is reported rather than guessed.
    """

    value: float
    offdiagonal_norm: float


def estimate_from_counts(
    record: ShotRecord, lifted, tol: float | None = None
) -> PopulationEstimate:
    """Population-based estimate of the diagonal part of a lifted observable."""
    a4 = require_hermitian(lifted, tol)
    if a4.shape != (4, 4):
        raise ValueError(f"lifted observable must be 4x4, got {a4.shape}")
    diag = np.real(np.diag(a4))
    offdiag = a4 - np.diag(np.diag(a4))
    value = float(diag @ record.frequencies())
    return PopulationEstimate(value, float(np.linalg.norm(offdiag)))
