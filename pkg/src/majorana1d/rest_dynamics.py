"""Closed-form spinor evolution in the rest limit (momentum = 0).

Two equations of motion share the rest frequency omega = m c^2 / hbar:

* Majorana:  d/dt psi = -omega * sigma_y @ conj(psi), solved exactly by
  ``psi(t) = cos(omega t) psi(0) - sin(omega t) sigma_y conj(psi(0))``.
  Not a unitary one-parameter group in the 2-spinor space (the conjugation
  makes it non-Hamiltonian), yet it preserves the norm because
  psi^dag sigma_y conj(psi) vanishes identically.

* Dirac:  d/dt psi = -i omega sigma_z psi, solved by
  ``psi(t) = exp(-i omega t sigma_z) psi(0)``.

The Majorana solution can also be reassembled from Dirac evolutions at +t
and -t; :func:`majorana_via_dirac` implements that combination as an
independent cross-check path.

m = 0 gives omega = 0 and frozen dynamics for both equations; negative
times are allowed everywhere.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .algebra import SIGMA_X, SIGMA_Y, SIGMA_Z, _tol, as_spinor, expectation
from .errors import SelfCheckError
from .params import PhysParams


@dataclass(frozen=True)
class TimeSeries:
    """Sampled scalar observable: strictly increasing times, one value each."""

    times: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        t = np.asarray(self.times, dtype=float)
        v = np.asarray(self.values)
        if t.ndim != 1 or v.shape[0] != t.shape[0]:
            raise ValueError("times and values must be 1-d and equally long")
        if t.size > 1 and not np.all(np.diff(t) > 0):
            raise ValueError("times must be strictly increasing")
        object.__setattr__(self, "times", t)
        object.__setattr__(self, "values", v)


def majorana_rest_evolve(psi0, params: PhysParams, t: float) -> np.ndarray:
    """Exact rest-limit Majorana evolution of psi0 by time t."""
    psi0 = as_spinor(psi0)
    wt = params.omega * t
    return math.cos(wt) * psi0 - math.sin(wt) * (SIGMA_Y @ np.conj(psi0))


def dirac_rest_evolve(psi0, params: PhysParams, t: float) -> np.ndarray:
    """Exact rest-limit Dirac evolution: phases exp(-+ i omega t) per component."""
    psi0 = as_spinor(psi0)
    wt = params.omega * t
    return np.array(
        [cmath.exp(-1j * wt) * psi0[0], cmath.exp(1j * wt) * psi0[1]]
    )


def majorana_via_dirac(psi0, params: PhysParams, t: float) -> np.ndarray:
    """Majorana evolution rebuilt from Dirac solutions at +t and -t.

    Returns ``(psi_D(t) + psi_D(-t))/2 - sigma_x (conj(psi_D(t)) -
    conj(psi_D(-t)))/2`` with both Dirac branches evolved from the same
    psi0. Agrees with :func:`majorana_rest_evolve` to rounding; exists as a
    cross-check path, not as the production propagator.
    """
    psi0 = as_spinor(psi0)
    fwd = dirac_rest_evolve(psi0, params, t)
    bwd = dirac_rest_evolve(psi0, params, -t)
    return 0.5 * (fwd + bwd) - 0.5 * (SIGMA_X @ (np.conj(fwd) - np.conj(bwd)))


def _evolver(which: str):
    try:
        return {
            "majorana": majorana_rest_evolve,
            "dirac": dirac_rest_evolve,
        }[which]
    except KeyError:
        raise ValueError(
            f"which must be 'majorana' or 'dirac', got {which!r}"
        ) from None


def sigma_z_series(
    psi0,
    which: str,
    params: PhysParams,
    times,
    tol: float | None = None,
) -> TimeSeries:
    """<sigma_z>(t) along the rest-limit evolution, by the analytic formula.

    Dirac: constant psi0^dag sigma_z psi0 (sigma_z commutes with the
    generator). Majorana:

        cos(2 omega t) * psi0^dag sigma_z psi0
        - sin(2 omega t) * Im[psi0^dag sigma_x conj(psi0)]

    Every sample is cross-checked against expectation(sigma_z, evolve(psi0, t));
    a mismatch beyond tolerance raises SelfCheckError.
    """
    psi0 = as_spinor(psi0)
    t = np.asarray(times, dtype=float)
    if t.ndim != 1 or t.size == 0:
        raise ValueError("times must be a non-empty 1-d array")
    if t.size > 1 and not np.all(np.diff(t) > 0):
        raise ValueError("times must be strictly increasing")
    evolve = _evolver(which)

    sz0 = expectation(SIGMA_Z, psi0, tol)
    if which == "dirac":
        values = np.full(t.shape, sz0)
    else:
        cross = complex(np.vdot(psi0, SIGMA_X @ np.conj(psi0)))
        wt2 = 2.0 * params.omega * t
        values = np.cos(wt2) * sz0 - np.sin(wt2) * cross.imag

    tolerance = _tol(tol)
    for i, ti in enumerate(t):
        direct = expectation(SIGMA_Z, evolve(psi0, params, ti), tol)
        if abs(direct - values[i]) > tolerance:
            raise SelfCheckError(
                f"sigma_z series self-check failed at t={ti!r}: "
                f"analytic {values[i]!r} vs evolved {direct!r}"
            )
    return TimeSeries(t, values)
