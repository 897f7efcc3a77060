"""Two-component spinor algebra.

Fixed 2x2 matrix constants (gamma matrices in the 1+1D convention, the Pauli
set), charge conjugation, sesquilinear inner products and Hermitian
expectation values. Spinors are plain complex numpy arrays of shape (2,);
all operations are pure and return new values.

Comparisons throughout the package are componentwise, never modulo a global
phase: the Majorana dynamics couples a spinor to its complex conjugate, so
psi and exp(i*theta)*psi evolve differently and a phase-insensitive
comparison would hide real differences.
"""
from __future__ import annotations

import numpy as np

# Run-wide default tolerance for validation checks (normalization,
# hermiticity, self-checks). Configurable; individual calls may override.
_DEFAULT_TOLERANCE = 1e-10


def default_tolerance() -> float:
    return _DEFAULT_TOLERANCE


def set_default_tolerance(tol: float) -> None:
    global _DEFAULT_TOLERANCE
    if not (tol > 0):
        raise ValueError(f"tolerance must be > 0, got {tol!r}")
    _DEFAULT_TOLERANCE = float(tol)


def _tol(tol: float | None) -> float:
    return _DEFAULT_TOLERANCE if tol is None else float(tol)


def _const(rows) -> np.ndarray:
    m = np.array(rows, dtype=complex)
    m.setflags(write=False)
    return m


ID2 = _const([[1, 0], [0, 1]])
SIGMA_X = _const([[0, 1], [1, 0]])
SIGMA_Y = _const([[0, -1j], [1j, 0]])
SIGMA_Z = _const([[1, 0], [0, -1]])

# 1+1D gamma matrices: gamma0 = diag(1, -1), gamma1 = [[0, 1], [-1, 0]].
GAMMA0 = _const([[1, 0], [0, -1]])
GAMMA1 = _const([[0, 1], [-1, 0]])

# gamma1 @ gamma0 = -sigma_x, the matrix part of charge conjugation.
CONJUGATION_MATRIX = _const(np.asarray(GAMMA1 @ GAMMA0))


def as_spinor(psi) -> np.ndarray:
    """Coerce to a finite complex (2,) array, rejecting NaN/Inf."""
    arr = np.asarray(psi, dtype=complex)
    if arr.shape != (2,):
        raise ValueError(f"spinor must have shape (2,), got {arr.shape}")
    if not np.all(np.isfinite(arr.view(float))):
        raise ValueError("spinor has non-finite components")
    return arr


def charge_conjugate(psi) -> np.ndarray:
    """Charge conjugate gamma1 @ gamma0 @ conj(psi) = -sigma_x @ conj(psi).

    An antiunitary involution: applying it twice returns the input, and the
    norm is preserved.
    """
    psi = as_spinor(psi)
    return CONJUGATION_MATRIX @ np.conj(psi)


def inner(phi, psi) -> complex:
    """Sesquilinear inner product, conjugate-linear in the first argument."""
    return complex(np.vdot(as_spinor(phi), as_spinor(psi)))


def norm(psi) -> float:
    """Euclidean norm sqrt(inner(psi, psi))."""
    return float(np.linalg.norm(as_spinor(psi)))


def is_normalized(psi, tol: float | None = None) -> bool:
    return abs(norm(psi) ** 2 - 1.0) <= _tol(tol)


def is_hermitian(a, tol: float | None = None) -> bool:
    a = np.asarray(a, dtype=complex)
    return (
        a.ndim == 2
        and a.shape[0] == a.shape[1]
        and bool(np.all(np.abs(a - a.conj().T) <= _tol(tol)))
    )


def require_hermitian(a, tol: float | None = None) -> np.ndarray:
    a = np.asarray(a, dtype=complex)
    if not np.all(np.isfinite(a.view(float))):
        raise ValueError("observable has non-finite entries")
    if not is_hermitian(a, tol):
        raise ValueError("observable is not Hermitian within tolerance")
    return a


def expectation(a, psi, tol: float | None = None) -> float:
    """Real expectation value psi^dag @ A @ psi of a Hermitian observable.

    Works for any dimension (2-spinors and doubled 4-component states alike).
    The imaginary residue is asserted below tolerance, then discarded.
    """
    a = require_hermitian(a, tol)
    v = np.asarray(psi, dtype=complex)
    if v.ndim != 1 or a.shape[0] != v.shape[0]:
        raise ValueError(
            f"shape mismatch: observable {a.shape} vs state {v.shape}"
        )
    if not np.all(np.isfinite(v.view(float))):
        raise ValueError("state has non-finite components")
    value = complex(np.vdot(v, a @ v))
    if abs(value.imag) > _tol(tol):
        raise ValueError(
            f"expectation has imaginary residue {value.imag:.3e} above tolerance"
        )
    return value.real
