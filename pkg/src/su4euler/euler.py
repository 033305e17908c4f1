"""Euler-angle composition for SU(2), SU(3) and SU(4), plus parameter ranges.

The SU(4) element is the ordered 15-factor product

    U = e^{i l3 a1} e^{i l2 a2} e^{i l3 a3} e^{i l5 a4} e^{i l3 a5}
        e^{i l10 a6} e^{i l3 a7} e^{i l2 a8} e^{i l3 a9} e^{i l5 a10}
        e^{i l3 a11} e^{i l2 a12} e^{i l3 a13} e^{i l8 a14} e^{i l15 a15}

with SU(3) the middle eight factors and SU(2) the l3/l2/l3 triple.  SU(2)
and SU(3) elements are returned embedded in the top-left block of a 4x4
identity.  Angles are radians and unrestricted (the group is periodic);
the range profiles below are for integration and sampling only.
"""

from dataclasses import dataclass

import numpy as np

from .algebra import exp_generator

SU4_GENERATOR_SEQUENCE = (3, 2, 3, 5, 3, 10, 3, 2, 3, 5, 3, 2, 3, 8, 15)
SU3_GENERATOR_SEQUENCE = SU4_GENERATOR_SEQUENCE[6:14]  # (3, 2, 3, 5, 3, 2, 3, 8)
SU2_GENERATOR_SEQUENCE = (3, 2, 3)

_GROUPS = ("su2", "su3", "su4")
_KINDS = ("volume", "covering")

_PI = np.pi
_HALF_PI = np.pi / 2.0

# Upper bounds per angle; all lower bounds are 0.
_PROFILE_HIGHS = {
    ("su2", "volume"): (_PI, _HALF_PI, _PI),
    ("su2", "covering"): (_PI, _HALF_PI, 2 * _PI),
    ("su3", "volume"): (_PI, _HALF_PI, _PI, _HALF_PI, _PI, _HALF_PI, _PI,
                        _PI / np.sqrt(3.0)),
    ("su3", "covering"): (_PI, _HALF_PI, 2 * _PI, _HALF_PI, _PI, _HALF_PI,
                          2 * _PI, np.sqrt(3.0) * _PI),
    ("su4", "volume"): (_PI, _HALF_PI, _PI, _HALF_PI, _PI, _HALF_PI, _PI,
                        _HALF_PI, _PI, _HALF_PI, _PI, _HALF_PI, _PI,
                        _PI / np.sqrt(3.0), _PI / np.sqrt(6.0)),
    ("su4", "covering"): (_PI, _HALF_PI, 2 * _PI, _HALF_PI, 2 * _PI, _HALF_PI,
                          _PI, _HALF_PI, 2 * _PI, _HALF_PI, _PI, _HALF_PI,
                          2 * _PI, np.sqrt(3.0) * _PI,
                          2 * np.sqrt(2.0 / 3.0) * _PI),
}


@dataclass(frozen=True)
class RangeProfile:
    """Per-angle closed intervals [lo, hi] for one group and range kind."""

    group: str
    kind: str
    bounds: tuple

    @property
    def dim(self) -> int:
        return len(self.bounds)

    def lengths(self) -> np.ndarray:
        return np.array([hi - lo for lo, hi in self.bounds])


def normalize_group(group: str) -> str:
    g = group.lower()
    if g not in _GROUPS:
        raise ValueError(f"unknown group {group!r}; expected one of {_GROUPS}")
    return g


def range_profile(group: str, kind: str) -> RangeProfile:
    """The volume ranges (integrate to the group volume after normalization)
    or the covering ranges (parametrize every group element)."""
    g = normalize_group(group)
    k = kind.lower()
    if k not in _KINDS:
        raise ValueError(f"unknown range kind {kind!r}; expected one of {_KINDS}")
    highs = _PROFILE_HIGHS[(g, k)]
    return RangeProfile(g, k, tuple((0.0, hi) for hi in highs))


def compose(generators, angles) -> np.ndarray:
    """Ordered left-to-right product of exp(i lam_g a) factors."""
    angles = np.asarray(angles, dtype=float)
    if angles.shape != (len(generators),):
        raise ValueError(
            f"expected {len(generators)} angles, got shape {angles.shape}"
        )
    u = np.eye(4, dtype=complex)
    for g, a in zip(generators, angles):
        u = u @ exp_generator(g, a)
    return u


def compose_su2(mu: float, nu: float, xi: float) -> np.ndarray:
    """D(mu, nu, xi) = e^{i l3 mu} e^{i l2 nu} e^{i l3 xi}, embedded 4x4."""
    return compose(SU2_GENERATOR_SEQUENCE, (mu, nu, xi))


def compose_su3(angles) -> np.ndarray:
    """SU(3) element from the eight angles a7..a14, embedded 4x4."""
    return compose(SU3_GENERATOR_SEQUENCE, angles)


def compose_su4(angles) -> np.ndarray:
    """SU(4) element from the fifteen angles a1..a15."""
    return compose(SU4_GENERATOR_SEQUENCE, angles)
