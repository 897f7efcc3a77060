"""Position-space dynamics by exact mode-wise propagation.

A packet is stored in momentum space on the symmetric grid

    p_k = 2 pi hbar k / L,   k = -N/2 .. N/2 - 1   (N a power of two),

one 2-spinor amplitude per mode. Evolution advances each (+p, -p) pair with
the exact propagators from :mod:`majorana1d.momentum_dynamics` and position
snapshots come from the transform

    psi(x, t) = integral dp / sqrt(2 pi hbar) psi_p(t) exp(i p x / hbar),

discretized so that Parseval holds bit-consistently:
sum_j |psi(x_j)|^2 dx == sum_k |psi_{p_k}|^2 dp with dx = L/N,
dp = 2 pi hbar / L, on the position grid x_j = (j - N/2) dx.

Grid conventions the continuum transform leaves open are fixed as follows:
the Nyquist row k = -N/2 has no +p partner and is evolved self-paired
(psi_{-p} taken equal to psi_p); packets built here are required to have
negligible Nyquist amplitude, making the convention immaterial. Packet-level
expectations (e.g. a broad packet tracking the rest-limit behaviour) are
consistency constructions of this artifact, not externally given data.

Packets are immutable values carrying their own PhysParams; operations on
mismatched grids or params are rejected.
"""
from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field, replace

import numpy as np

from .algebra import _tol, as_spinor
from .momentum_dynamics import (
    MomentumModePair,
    dirac_mode_evolve,
    majorana_mode_evolve,
    ultrarelativistic_approx,
)
from .params import PhysParams

# Relative envelope weight allowed at the momentum-grid edge and the box
# boundary; beyond this, aliasing/wrap-around would corrupt the dynamics.
EDGE_ENVELOPE_LIMIT = 1e-8

EVOLVERS = ("majorana", "dirac", "ultra")


def momentum_grid(grid_size: int, box_length: float, hbar: float) -> np.ndarray:
    k = np.arange(-grid_size // 2, grid_size // 2)
    return 2.0 * math.pi * hbar * k / box_length


def position_grid(grid_size: int, box_length: float) -> np.ndarray:
    j = np.arange(grid_size)
    return (j - grid_size // 2) * (box_length / grid_size)


@dataclass(frozen=True)
class Wavepacket:
    """Momentum-space samples of a spinor packet on a symmetric grid."""

    grid_size: int
    box_length: float
    amplitudes: np.ndarray  # (N, 2) complex, row i holds mode k = i - N/2
    params: PhysParams
    notes: tuple[str, ...] = field(default=())

    def __post_init__(self):
        n = self.grid_size
        if n < 4 or n & (n - 1):
            raise ValueError(f"grid_size must be a power of two >= 4, got {n}")
        if not (math.isfinite(self.box_length) and self.box_length > 0):
            raise ValueError(f"box_length must be > 0, got {self.box_length!r}")
        amps = np.array(self.amplitudes, dtype=complex)
        if amps.shape != (n, 2):
            raise ValueError(
                f"amplitudes must have shape ({n}, 2), got {amps.shape}"
            )
        if not np.all(np.isfinite(amps.view(float))):
            raise ValueError("amplitudes contain non-finite values")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def momenta(self) -> np.ndarray:
        return momentum_grid(self.grid_size, self.box_length, self.params.hbar)

    @property
    def dp(self) -> float:
        return 2.0 * math.pi * self.params.hbar / self.box_length

    @property
    def dx(self) -> float:
        return self.box_length / self.grid_size


def packet_norm(wp: Wavepacket) -> float:
    """sqrt(sum_k |psi_k|^2 dp)."""
    return math.sqrt(float(np.sum(np.abs(wp.amplitudes) ** 2)) * wp.dp)


def mean_momentum(wp: Wavepacket) -> float:
    weights = np.sum(np.abs(wp.amplitudes) ** 2, axis=1)
    total = float(np.sum(weights))
    return float(np.sum(wp.momenta * weights)) / total


def sigma_z_expectation(wp: Wavepacket) -> float:
    """<sigma_z> of the whole packet (momentum-space quadrature; equals the
    position-space value by Parseval)."""
    up = np.abs(wp.amplitudes[:, 0]) ** 2
    lo = np.abs(wp.amplitudes[:, 1]) ** 2
    return float(np.sum(up - lo) / np.sum(up + lo))


def build_gaussian(
    x0: float,
    p0: float,
    sigma_x: float,
    spinor_dir,
    grid_size: int,
    box_length: float,
    params: PhysParams,
    tol: float | None = None,
) -> Wavepacket:
    """Normalized Gaussian packet with constant spinor direction.

    Momentum-space envelope exp(-sigma_x^2 (p - p0)^2 / hbar^2) centered at
    p0, phase exp(-i p x0 / hbar) placing the packet at x0. Rejected unless
    the packet is safely representable: sigma_x must exceed 4 L / N and the
    envelope must fall below EDGE_ENVELOPE_LIMIT of its peak at both the
    momentum-grid edge and the box boundary.
    """
    direction = as_spinor(spinor_dir)
    if abs(float(np.vdot(direction, direction).real) - 1.0) > _tol(tol):
        raise ValueError("spinor_dir must be normalized")
    if not sigma_x > 0:
        raise ValueError(f"sigma_x must be > 0, got {sigma_x!r}")
    if sigma_x <= 4.0 * box_length / grid_size:
        raise ValueError(
            f"sigma_x={sigma_x!r} too narrow for the grid: must exceed "
            f"4 L / N = {4.0 * box_length / grid_size!r}"
        )

    p = momentum_grid(grid_size, box_length, params.hbar)
    envelope = np.exp(-(sigma_x**2) * (p - p0) ** 2 / params.hbar**2)
    edge = max(envelope[0], envelope[-1])
    if edge > EDGE_ENVELOPE_LIMIT * envelope.max():
        raise ValueError(
            "momentum envelope does not vanish at the grid edge "
            f"(relative weight {edge / envelope.max():.2e}); enlarge the grid "
            "or narrow sigma_x"
        )
    half_box = box_length / 2.0
    x_edge_weight = max(
        math.exp(-((-half_box - x0) ** 2) / (4.0 * sigma_x**2)),
        math.exp(-((half_box - x0) ** 2) / (4.0 * sigma_x**2)),
    )
    if x_edge_weight > EDGE_ENVELOPE_LIMIT:
        raise ValueError(
            "position envelope does not vanish at the box boundary "
            f"(relative weight {x_edge_weight:.2e}); enlarge the box or "
            "narrow sigma_x"
        )

    modes = (envelope * np.exp(-1j * p * x0 / params.hbar))[:, None] * direction
    dp = 2.0 * math.pi * params.hbar / box_length
    modes /= math.sqrt(float(np.sum(np.abs(modes) ** 2)) * dp)
    return Wavepacket(grid_size, box_length, modes, params)


def evolve_wavepacket(wp: Wavepacket, equation: str, t: float) -> Wavepacket:
    """Evolve every momentum mode exactly by time t.

    'majorana' advances (+p, -p) pairs jointly; 'dirac' advances each mode
    independently; 'ultra' applies the massless propagator, except that a
    p = 0 row (where the approximation is undefined) falls back to the exact
    Majorana evolution, recorded in the packet notes.
    """
    if equation not in EVOLVERS:
        raise ValueError(f"equation must be one of {EVOLVERS}, got {equation!r}")
    n = wp.grid_size
    half = n // 2
    p = wp.momenta
    amps = wp.amplitudes
    out = np.empty_like(amps)
    notes = wp.notes

    if equation == "dirac":
        for i in range(n):
            out[i] = dirac_mode_evolve(amps[i], p[i], wp.params, t)
    elif equation == "ultra":
        fell_back = False
        for i in range(n):
            if p[i] == 0.0:
                pair = MomentumModePair(0.0, amps[i], amps[i])
                out[i] = majorana_mode_evolve(pair, wp.params, t).psi_plus
                fell_back = True
            else:
                out[i] = ultrarelativistic_approx(amps[i], p[i], wp.params, t)
        note = "ultra: p=0 row evolved with the exact majorana propagator"
        if fell_back and note not in notes:
            notes = notes + (note,)
    else:
        # k = 0 row is self-conjugate.
        pair = MomentumModePair(0.0, amps[half], amps[half])
        out[half] = majorana_mode_evolve(pair, wp.params, t).psi_plus
        for k in range(1, half):
            pair = MomentumModePair(p[half + k], amps[half + k], amps[half - k])
            evolved = majorana_mode_evolve(pair, wp.params, t)
            out[half + k] = evolved.psi_plus
            out[half - k] = evolved.psi_minus
        # Nyquist row k = -N/2 has no +p partner on the grid: evolve it
        # self-paired (psi_{+|p|} taken equal to the row) and keep the -p
        # output. Builders guarantee the row is negligible.
        pair = MomentumModePair(abs(p[0]), amps[0], amps[0])
        out[0] = majorana_mode_evolve(pair, wp.params, t).psi_minus

    return replace(wp, amplitudes=out, notes=notes)


def synthesize(wp: Wavepacket) -> tuple[np.ndarray, np.ndarray]:
    """Position-space samples (x_j, psi(x_j)) of the packet.

    With x_j = (j - N/2) dx the transform kernel picks up (-1)^k per mode;
    the remaining sum is a plain inverse FFT.
    """
    n = wp.grid_size
    k = np.arange(-n // 2, n // 2)
    alternating = np.where(k % 2 == 0, 1.0, -1.0)
    prefactor = wp.dp * n / math.sqrt(2.0 * math.pi * wp.params.hbar)
    psi_x = np.empty_like(wp.amplitudes)
    for comp in range(2):
        ordered = np.fft.ifftshift(wp.amplitudes[:, comp] * alternating)
        psi_x[:, comp] = prefactor * np.fft.ifft(ordered)
    return position_grid(n, wp.box_length), psi_x


def analyze(
    psi_x: np.ndarray, box_length: float, params: PhysParams
) -> np.ndarray:
    """Inverse of :func:`synthesize`: mode amplitudes from position samples."""
    psi_x = np.asarray(psi_x, dtype=complex)
    n = psi_x.shape[0]
    k = np.arange(-n // 2, n // 2)
    alternating = np.where(k % 2 == 0, 1.0, -1.0)
    dp = 2.0 * math.pi * params.hbar / box_length
    prefactor = dp * n / math.sqrt(2.0 * math.pi * params.hbar)
    amps = np.empty_like(psi_x)
    for comp in range(psi_x.shape[1]):
        amps[:, comp] = (
            np.fft.fftshift(np.fft.fft(psi_x[:, comp])) * alternating / prefactor
        )
    return amps


@dataclass(frozen=True)
class PositionProfile:
    """|psi(x)|^2 over the grid plus the derived scalar observables."""

    x: np.ndarray
    density: np.ndarray
    mean_x: float
    sigma_z: float
    norm_sq: float


def position_density(wp: Wavepacket) -> PositionProfile:
    x, psi_x = synthesize(wp)
    up = np.abs(psi_x[:, 0]) ** 2
    lo = np.abs(psi_x[:, 1]) ** 2
    density = up + lo
    total = float(np.sum(density) * wp.dx)
    mean_x = float(np.sum(x * density) * wp.dx / total)
    sigma_z = float(np.sum(up - lo) / np.sum(density))
    return PositionProfile(x, density, mean_x, sigma_z, total)


def packet_deviation(a: Wavepacket, b: Wavepacket) -> float:
    """Max componentwise amplitude deviation between two compatible packets."""
    if (a.grid_size, a.box_length, a.params) != (
        b.grid_size,
        b.box_length,
        b.params,
    ):
        raise ValueError("packets have different grids or physical params")
    return float(np.max(np.abs(a.amplitudes - b.amplitudes)))


def export_csv(wp: Wavepacket, path) -> None:
    """Write the position-space snapshot as CSV
    (x, re_upper, im_upper, re_lower, im_lower, density)."""
    x, psi_x = synthesize(wp)
    density = np.sum(np.abs(psi_x) ** 2, axis=1)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(
            ["x", "re_upper", "im_upper", "re_lower", "im_lower", "density"]
        )
        for j in range(wp.grid_size):
            writer.writerow(
                [
                    repr(float(x[j])),
                    repr(float(psi_x[j, 0].real)),
                    repr(float(psi_x[j, 0].imag)),
                    repr(float(psi_x[j, 1].real)),
                    repr(float(psi_x[j, 1].imag)),
                    repr(float(density[j])),
                ]
            )
