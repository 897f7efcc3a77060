"""Brute-force RK4 integration of the first-order equations of motion.

Validation machinery only: every closed-form propagator in this package is
checked against these integrators, so nothing here may call a closed form
(independence is structural — this module imports only constants and types).
Never use these for production propagation.

Fixed-step classic RK4, no adaptivity: the systems are linear with known
frequencies and a fixed step keeps the oracle auditable. Equations that
contain conj(psi) are not holomorphic in psi, so they are integrated on
real state vectors (the complex arithmetic appears only inside the
right-hand side); the Dirac mode equation is holomorphic and may be
integrated in complex form directly, since RK4 combines stages with real
coefficients.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .algebra import SIGMA_X, SIGMA_Y, SIGMA_Z, as_spinor
from .momentum_dynamics import MomentumModePair
from .params import PhysParams


@dataclass(frozen=True)
class IntegratorConfig:
    dt: float = 1e-3
    max_steps: int = 10_000_000
    method: str = "rk4"

    def __post_init__(self):
        if not (math.isfinite(self.dt) and self.dt > 0):
            raise ValueError(f"dt must be > 0, got {self.dt!r}")
        if self.max_steps < 1:
            raise ValueError(f"max_steps must be >= 1, got {self.max_steps}")
        if self.method != "rk4":
            raise ValueError(f"only method='rk4' is provided, got {self.method!r}")


def _rk4(rhs: Callable[[np.ndarray], np.ndarray], y0: np.ndarray, t: float,
         cfg: IntegratorConfig) -> np.ndarray:
    if t == 0.0:
        return y0.copy()
    n = max(1, math.ceil(abs(t) / cfg.dt))
    if n > cfg.max_steps:
        raise RuntimeError(
            f"integrating to t={t!r} at dt={cfg.dt!r} needs {n} steps, "
            f"above max_steps={cfg.max_steps}"
        )
    h = t / n
    y = y0.copy()
    for _ in range(n):
        k1 = rhs(y)
        k2 = rhs(y + 0.5 * h * k1)
        k3 = rhs(y + 0.5 * h * k2)
        k4 = rhs(y + h * k3)
        y = y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    return y


def _split(psi: np.ndarray) -> np.ndarray:
    return np.concatenate([psi.real, psi.imag])


def _join(y: np.ndarray) -> np.ndarray:
    return y[:2] + 1j * y[2:4]


def integrate_rest(
    psi0, params: PhysParams, t: float, cfg: IntegratorConfig = IntegratorConfig()
) -> np.ndarray:
    """Integrate d/dt psi = -omega sigma_y conj(psi) on (Re psi, Im psi)."""
    w = params.omega

    def rhs(y):
        d = -w * (SIGMA_Y @ np.conj(_join(y)))
        return _split(d)

    return _join(_rk4(rhs, _split(as_spinor(psi0)), t, cfg))


def integrate_mode_pair(
    pair: MomentumModePair,
    params: PhysParams,
    t: float,
    cfg: IntegratorConfig = IntegratorConfig(),
) -> MomentumModePair:
    """Integrate the coupled (psi_p, psi_{-p}) system on 8 real coordinates.

    i hbar d/dt psi_p    =  c p sigma_x psi_p    - i m c^2 sigma_y conj(psi_{-p})
    i hbar d/dt psi_{-p} = -c p sigma_x psi_{-p} - i m c^2 sigma_y conj(psi_p)
    """
    cp = params.c * pair.p
    mc2 = params.mass * params.c**2
    hbar = params.hbar

    def rhs(y):
        u = y[0:2] + 1j * y[2:4]
        v = y[4:6] + 1j * y[6:8]
        du = -(1j * cp / hbar) * (SIGMA_X @ u) - (mc2 / hbar) * (SIGMA_Y @ np.conj(v))
        dv = (1j * cp / hbar) * (SIGMA_X @ v) - (mc2 / hbar) * (SIGMA_Y @ np.conj(u))
        return np.concatenate([du.real, du.imag, dv.real, dv.imag])

    y0 = np.concatenate([_split(pair.psi_plus), _split(pair.psi_minus)])
    y = _rk4(rhs, y0, t, cfg)
    return MomentumModePair(pair.p, y[0:2] + 1j * y[2:4], y[4:6] + 1j * y[6:8])


def integrate_dirac_mode(
    psi_p,
    p: float,
    params: PhysParams,
    t: float,
    cfg: IntegratorConfig = IntegratorConfig(),
) -> np.ndarray:
    """Integrate i hbar d/dt psi = (c p sigma_x + m c^2 sigma_z) psi (holomorphic)."""
    h_matrix = params.c * p * SIGMA_X + params.mass * params.c**2 * SIGMA_Z
    scale = -1j / params.hbar

    def rhs(y):
        return scale * (h_matrix @ y)

    return _rk4(rhs, as_spinor(psi_p), t, cfg)
