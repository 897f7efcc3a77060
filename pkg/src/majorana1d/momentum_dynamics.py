"""Exact single-momentum-mode solutions.

After Fourier transforming the 1+1D equations, each Majorana mode obeys

    i hbar d/dt psi_p = c p sigma_x psi_p - i m c^2 sigma_y conj(psi_{-p}),

so the conjugation couples the amplitudes at +p and -p: the unit of
evolution is the pair (psi_p, psi_{-p}), kept together in
:class:`MomentumModePair` and advanced simultaneously. Both members obey
the Klein-Gordon equation with mode frequency

    omega_p = sqrt(p^2 c^2 + m^2 c^4) / hbar,

which yields the exact propagators implemented here (first-order closed
forms; the second-order Klein-Gordon view is used only for testing, never
for propagation). The Dirac mode at the same momentum evolves under the
Hermitian generator c p sigma_x + m c^2 sigma_z and needs no partner.

For p >> m c both equations converge to the massless propagator
exp(-i c p t sigma_x / hbar); the approximation holds while
t << 2 hbar |p| / (m^2 c^3), see :func:`validity_window`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .algebra import SIGMA_X, SIGMA_Y, SIGMA_Z, as_spinor
from .params import PhysParams

# Operational reading of "t much smaller than the window" in assertions.
VALIDITY_SAFETY_FACTOR = 0.1


def _frozen_spinor(psi) -> np.ndarray:
    arr = as_spinor(psi).copy()
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class MomentumModePair:
    """Coupled amplitudes at +p and -p; p >= 0 is the canonical key.

    The p = 0 pair is self-conjugate: both fields must hold the same value.
    """

    p: float
    psi_plus: np.ndarray
    psi_minus: np.ndarray

    def __post_init__(self):
        if not (math.isfinite(self.p) and self.p >= 0):
            raise ValueError(f"p must be finite and >= 0, got {self.p!r}")
        plus = _frozen_spinor(self.psi_plus)
        minus = _frozen_spinor(self.psi_minus)
        if self.p == 0 and not np.array_equal(plus, minus):
            raise ValueError("p = 0 pair must have psi_plus == psi_minus")
        object.__setattr__(self, "psi_plus", plus)
        object.__setattr__(self, "psi_minus", minus)

    @property
    def total_norm_sq(self) -> float:
        """|psi_plus|^2 + |psi_minus|^2, conserved under evolution."""
        return float(
            np.vdot(self.psi_plus, self.psi_plus).real
            + np.vdot(self.psi_minus, self.psi_minus).real
        )


def omega_p(p: float, params: PhysParams) -> float:
    """Mode frequency sqrt(p^2 c^2 + m^2 c^4) / hbar (overflow-safe hypot)."""
    if not math.isfinite(p):
        raise ValueError(f"p must be finite, got {p!r}")
    return math.hypot(p * params.c, params.mass * params.c**2) / params.hbar


def majorana_mode_evolve(
    pair: MomentumModePair, params: PhysParams, t: float
) -> MomentumModePair:
    """Advance a (psi_p, psi_{-p}) pair by time t with the exact closed form.

    psi_p(t) = cos(w t) psi_p(0)
               - sin(w t)/(hbar w) [i c p sigma_x psi_p(0)
                                    + m c^2 sigma_y conj(psi_{-p}(0))]

    with w = omega_p. The partner follows the same formula with p -> -p and
    the conjugated roles swapped, so the pair stays mutually consistent; at
    p = 0 this reduces exactly to the rest-limit Majorana solution.
    """
    w = omega_p(pair.p, params)
    if w == 0.0:
        return pair
    c, s = math.cos(w * t), math.sin(w * t)
    f = s / (params.hbar * w)
    cp = params.c * pair.p
    mc2 = params.mass * params.c**2
    u, v = pair.psi_plus, pair.psi_minus
    new_u = c * u - f * (1j * cp * (SIGMA_X @ u) + mc2 * (SIGMA_Y @ np.conj(v)))
    new_v = c * v - f * (-1j * cp * (SIGMA_X @ v) + mc2 * (SIGMA_Y @ np.conj(u)))
    return MomentumModePair(pair.p, new_u, new_v)


def dirac_mode_evolve(psi_p, p: float, params: PhysParams, t: float) -> np.ndarray:
    """Exact Dirac mode propagator (unitary; p may be signed here).

    psi_p(t) = cos(w t) psi_p(0)
               - i sin(w t)/(hbar w) [c p sigma_x + m c^2 sigma_z] psi_p(0)
    """
    psi_p = as_spinor(psi_p)
    w = omega_p(p, params)
    if w == 0.0:
        return psi_p.copy()
    c, s = math.cos(w * t), math.sin(w * t)
    h = params.c * p * SIGMA_X + params.mass * params.c**2 * SIGMA_Z
    return c * psi_p - 1j * (s / (params.hbar * w)) * (h @ psi_p)


def ultrarelativistic_approx(
    psi_p, p: float, params: PhysParams, t: float
) -> np.ndarray:
    """Massless propagator exp(-i c p t sigma_x / hbar) applied to psi_p.

    Applied regardless of the actual mass; the caller judges applicability
    via :func:`validity_window`. Meaningless at p = 0, which is rejected.
    """
    psi_p = as_spinor(psi_p)
    if p == 0:
        raise ValueError("ultrarelativistic approximation is undefined at p = 0")
    if not math.isfinite(p):
        raise ValueError(f"p must be finite, got {p!r}")
    a = params.c * p * t / params.hbar
    return math.cos(a) * psi_p - 1j * math.sin(a) * (SIGMA_X @ psi_p)


def validity_window(p: float, params: PhysParams) -> float:
    """Characteristic breakdown time 2 hbar |p| / (m^2 c^3) of the massless
    approximation; infinite for a massless particle."""
    if not math.isfinite(p):
        raise ValueError(f"p must be finite, got {p!r}")
    if params.mass == 0:
        return math.inf
    return 2.0 * params.hbar * abs(p) / (params.mass**2 * params.c**3)


def klein_gordon_residual(
    evolve_at: Callable[[float], np.ndarray],
    p: float,
    params: PhysParams,
    t: float,
    dt: float,
) -> float:
    """Norm of hbar^2 * psi_ddot + (p^2 c^2 + m^2 c^4) * psi at time t.

    psi_ddot is the centered second finite difference of the trajectory
    ``evolve_at`` (a map t -> 2-spinor). Exact mode solutions satisfy the
    second-order equation, so their residual is pure O(dt^2) discretization
    error scaled by omega_p^4; a non-evolving state with m > 0 retains the
    full mass term and fails loudly (negative control).
    """
    if not dt > 0:
        raise ValueError(f"dt must be > 0, got {dt!r}")
    before = as_spinor(evolve_at(t - dt))
    here = as_spinor(evolve_at(t))
    after = as_spinor(evolve_at(t + dt))
    second = (after - 2.0 * here + before) / dt**2
    kg = params.hbar**2 * second + (
        (p * params.c) ** 2 + (params.mass * params.c**2) ** 2
    ) * here
    return float(np.linalg.norm(kg))
