"""Two-qubit density matrices from spectrum angles and Euler conjugation.

The diagonal seed is

    rho_d = diag(w^2 x^2 y^2, (1-w^2) x^2 y^2, (1-x^2) y^2, 1-y^2)

with w^2 = sin^2(t1), x^2 = sin^2(t2), y^2 = sin^2(t3); its trace
telescopes to 1 for any angles.  A general state is V rho_d V^dagger where
V is the truncated 12-factor Euler product: the trailing l3/l8/l15 factors
commute with the diagonal and drop out.
"""

from dataclasses import dataclass

import numpy as np

from .algebra import gell_mann
from .errors import ConsistencyError
from .euler import SU4_GENERATOR_SEQUENCE, compose

CONJUGATION_SEQUENCE = SU4_GENERATOR_SEQUENCE[:12]

# Spectrum-angle ranges whose image is the ordered eigenvalue simplex.
SPECTRUM_LOWER = (np.pi / 4.0, np.arccos(1.0 / np.sqrt(3.0)), np.pi / 3.0)
SPECTRUM_UPPER = (np.pi / 2.0, np.pi / 2.0, np.pi / 2.0)


@dataclass(frozen=True)
class BlochCoefficients:
    """Diagonal-basis expansion rho_d = w0 I + w3 l3 + w8 l8 + w15 l15."""

    w0: float
    w3: float
    w8: float
    w15: float

    def matrix(self) -> np.ndarray:
        return (self.w0 * np.eye(4, dtype=complex)
                + self.w3 * gell_mann(3)
                + self.w8 * gell_mann(8)
                + self.w15 * gell_mann(15))


def _wxy_squared(theta):
    t1, t2, t3 = (float(t) for t in theta)
    return np.sin(t1) ** 2, np.sin(t2) ** 2, np.sin(t3) ** 2


def spectrum_diagonal(theta) -> np.ndarray:
    """Eigenvalue 4-vector (w2 x2 y2, (1-w2) x2 y2, (1-x2) y2, 1-y2)."""
    w2, x2, y2 = _wxy_squared(theta)
    return np.array([w2 * x2 * y2, (1.0 - w2) * x2 * y2, (1.0 - x2) * y2,
                     1.0 - y2])


def rho_diagonal(theta) -> np.ndarray:
    """Diagonal density matrix for spectrum angles (t1, t2, t3)."""
    return np.diag(spectrum_diagonal(theta).astype(complex))


def bloch_coefficients(theta) -> BlochCoefficients:
    """Closed-form expansion coefficients of rho_d over {I, l3, l8, l15}.

    Cross-checks via Tr[rho_d lam_j / 2] that the twelve off-axis
    coefficients vanish (they must, rho_d being diagonal).
    """
    w2, x2, y2 = _wxy_squared(theta)
    coeffs = BlochCoefficients(
        w0=0.25,
        w3=0.5 * (-1.0 + 2.0 * w2) * x2 * y2,
        w8=(-2.0 + 3.0 * x2) * y2 / (2.0 * np.sqrt(3.0)),
        w15=(-3.0 + 4.0 * y2) / (2.0 * np.sqrt(6.0)),
    )
    rd = rho_diagonal(theta)
    for j in range(1, 16):
        if j in (3, 8, 15):
            continue
        off_axis = abs(np.trace(rd @ gell_mann(j)) / 2.0)
        if off_axis > 1e-13:
            raise ConsistencyError(
                f"diagonal state has off-axis component {off_axis:.3e} on lam_{j}"
            )
    return coeffs


def rho_full(alphas, theta) -> np.ndarray:
    """General density matrix V rho_d V^dagger from the 12 conjugation
    angles a1..a12 and the spectrum angles."""
    v = compose(CONJUGATION_SEQUENCE, alphas)
    return v @ rho_diagonal(theta) @ v.conj().T


def spectrum_profile_check(theta) -> bool:
    """True iff each spectrum angle lies in its defining closed interval."""
    return all(lo <= float(t) <= hi
               for t, lo, hi in zip(theta, SPECTRUM_LOWER, SPECTRUM_UPPER))
