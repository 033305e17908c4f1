"""Partial-transpose separability test in its determinant form.

For a two-qubit state the partially transposed matrix has at most one
negative eigenvalue, so the sign of the constant characteristic-polynomial
coefficient d (the determinant) decides entanglement: d < 0 iff entangled.
The quartic/resolvent-cubic eigenvalue path is kept alongside as the
radical-formula route and is validated against the Hermitian eigensolver.
"""

import cmath
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from numpy.polynomial import polynomial as npoly

from .algebra import exp_generator
from .density import (
    CONJUGATION_SEQUENCE,
    SPECTRUM_LOWER,
    SPECTRUM_UPPER,
    rho_full,
    spectrum_diagonal,
)
from .errors import ConsistencyError, ValidationError
from .euler import range_profile
from .haar import sample_haar_angles


class CharPolyCoeffs(NamedTuple):
    """Coefficients of det(M - x I) = x^4 + a x^3 + b x^2 + c x + d."""

    a: float
    b: float
    c: float
    d: float


class DepressedQuartic(NamedTuple):
    """Coefficients of t^4 + p t^2 + q t + r after the shift t = x - 1/4."""

    p: float
    q: float
    r: float


@dataclass(frozen=True)
class ResolventRoots:
    """Roots of g^3 + 2p g^2 + (p^2 - 4r) g - q^2; branch_valid marks all
    three real and nonnegative within 1e-10."""

    gammas: tuple
    branch_valid: bool


@dataclass(frozen=True)
class SeparabilityVerdict:
    entangled: bool
    d_value: float
    min_eigenvalue: float
    negative_count: int
    boundary: bool


@dataclass(frozen=True)
class ScanRecord:
    sample_index: int
    alphas: tuple
    thetas: tuple
    d: float
    min_eig: float
    neg_count: int
    entangled: bool
    boundary: bool


def partial_transpose(rho: np.ndarray, subsystem: str = "B") -> np.ndarray:
    """Transpose one tensor factor of a (stack of) 4x4 two-qubit operators.

    Basis ordering |q_A q_B> -> 2 q_A + q_B.  Subsystem B transposes each
    2x2 block in place, subsystem A transposes the block grid.
    """
    rho = np.asarray(rho)
    if rho.shape[-2:] != (4, 4):
        raise ValueError(f"expected trailing shape (4, 4), got {rho.shape}")
    if subsystem == "B":
        perm = (0, 3, 2, 1)
    elif subsystem == "A":
        perm = (2, 1, 0, 3)
    else:
        raise ValueError(f"subsystem must be 'A' or 'B', got {subsystem!r}")
    lead = rho.shape[:-2]
    n = len(lead)
    blocks = rho.reshape(*lead, 2, 2, 2, 2)
    axes = tuple(range(n)) + tuple(n + p for p in perm)
    return blocks.transpose(axes).reshape(*lead, 4, 4)


def validate_density_matrix(rho: np.ndarray, herm_tol: float = 1e-13,
                            trace_tol: float = 1e-13,
                            psd_tol: float = 1e-12) -> None:
    """Raise ValidationError naming the violated density-matrix invariant."""
    rho = np.asarray(rho)
    if rho.shape != (4, 4):
        raise ValidationError(f"shape invariant violated: expected (4, 4), got {rho.shape}")
    herm = np.abs(rho - rho.conj().T).max()
    if herm > herm_tol:
        raise ValidationError(f"hermiticity invariant violated: residue {herm:.3e}")
    tr = np.trace(rho)
    if abs(tr - 1.0) > trace_tol:
        raise ValidationError(f"trace invariant violated: trace {tr:.17g}")
    min_eig = float(np.linalg.eigvalsh(rho)[0])
    if min_eig < -psd_tol:
        raise ValidationError(f"positivity invariant violated: min eigenvalue {min_eig:.3e}")


def char_poly_coeffs(m: np.ndarray) -> CharPolyCoeffs:
    """Characteristic-polynomial coefficients by the Faddeev-LeVerrier
    trace recursion; no root finding involved.  Accepts (..., 4, 4) stacks,
    returning array-valued fields for stacked input."""
    m = np.asarray(m, dtype=complex)
    if m.shape[-2:] != (4, 4):
        raise ValueError(f"expected trailing shape (4, 4), got {m.shape}")
    eye = np.eye(4, dtype=complex)

    def tr(x):
        return np.trace(x, axis1=-2, axis2=-1)

    m1 = m
    c1 = -tr(m1)
    m2 = m @ (m1 + c1[..., None, None] * eye)
    c2 = -tr(m2) / 2.0
    m3 = m @ (m2 + c2[..., None, None] * eye)
    c3 = -tr(m3) / 3.0
    m4 = m @ (m3 + c3[..., None, None] * eye)
    c4 = -tr(m4) / 4.0
    if m.ndim == 2:
        return CharPolyCoeffs(float(c1.real), float(c2.real),
                              float(c3.real), float(c4.real))
    return CharPolyCoeffs(c1.real, c2.real, c3.real, c4.real)


def depressed_quartic(coeffs: CharPolyCoeffs) -> DepressedQuartic:
    """Shift x = t + 1/4 applied to a unit-trace characteristic polynomial.

    Derived by direct expansion:

        p = b - 3/8,  q = b/2 + c - 1/8,  r = b/16 + c/4 + d - 3/256.

    Construction verifies the shift against a polynomial composition of the
    original coefficients.
    """
    a, b, c, d = coeffs
    if abs(a + 1.0) > 1e-9:
        raise ValueError(f"shift requires a = -1 (unit trace); got a = {a!r}")
    p = b - 3.0 / 8.0
    q = 0.5 * b + c - 1.0 / 8.0
    r = b / 16.0 + c / 4.0 + d - 3.0 / 256.0
    # Independent check: compose P(x) with x = t + 1/4 and compare.
    shifted = npoly.Polynomial([d, c, b, a, 1.0])(npoly.Polynomial([0.25, 1.0]))
    expected = np.array([r, q, p, 0.0, 1.0])
    if not np.allclose(shifted.coef, expected, atol=1e-12, rtol=0.0):
        raise ConsistencyError(
            f"depressed-quartic shift mismatch: {shifted.coef} vs {expected}"
        )
    return DepressedQuartic(p, q, r)


def resolvent_roots(dq: DepressedQuartic) -> ResolventRoots:
    """Cardano solution of the resolvent cubic, principal cube-root branch,
    one Newton polish per root."""
    p, q, r = dq
    a2 = 2.0 * p
    a1 = p * p - 4.0 * r
    a0 = -q * q
    # Depressed form t^3 + P t + Q with g = t - a2/3.
    big_p = a1 - a2 * a2 / 3.0
    big_q = 2.0 * a2**3 / 27.0 - a2 * a1 / 3.0 + a0
    disc = (big_q / 2.0) ** 2 + (big_p / 3.0) ** 3
    s = cmath.sqrt(complex(disc))
    u_cubed = -big_q / 2.0 + s
    scale = max(abs(big_p) ** 1.5, abs(big_q), 1e-300)
    omega = cmath.exp(2j * cmath.pi / 3.0)
    if abs(u_cubed) <= 1e-14 * scale:
        # Degenerate branch: P ~ 0, roots of t^3 = -Q.
        w = (-big_q) ** (1.0 / 3.0) if big_q <= 0 else -(big_q ** (1.0 / 3.0))
        ts = [w * omega**k for k in range(3)]
    else:
        u = u_cubed ** (1.0 / 3.0)
        v = -big_p / (3.0 * u)
        ts = [u * omega**k + v * omega**-k for k in range(3)]
    gammas = []
    for t in ts:
        g = t - a2 / 3.0
        fp = 3.0 * g * g + 2.0 * a2 * g + a1
        if abs(fp) > 1e-8:
            g = g - (g**3 + a2 * g * g + a1 * g + a0) / fp
        gammas.append(g)
    branch_valid = all(abs(g.imag) <= 1e-10 and g.real >= -1e-10 for g in gammas)
    return ResolventRoots(tuple(gammas), branch_valid)


def eigenvalues_via_resolvent(dq: DepressedQuartic) -> np.ndarray | None:
    """Quartic roots from the resolvent radicals, shifted back by +1/4.

    Square-root signs are fixed by s1 s2 s3 = -q, which makes the four t
    values sum to zero.  Returns None when the resolvent branch is invalid
    (caller falls back to the Hermitian eigensolver).  A final guarded
    Newton step per root absorbs the precision loss of sqrt near small
    resolvent roots.
    """
    rr = resolvent_roots(dq)
    if not rr.branch_valid:
        return None
    p, q, r = dq
    s = np.sqrt(np.maximum([g.real for g in rr.gammas], 0.0))
    if q > 0.0:
        s[2] = -s[2]
    t = 0.5 * np.array([
        s[0] + s[1] + s[2],
        s[0] - s[1] - s[2],
        -s[0] + s[1] - s[2],
        -s[0] - s[1] + s[2],
    ])
    f = t**4 + p * t**2 + q * t + r
    fp = 4.0 * t**3 + 2.0 * p * t + q
    safe = np.abs(fp) > 1e-6
    t[safe] -= f[safe] / fp[safe]
    return t + 0.25


def is_entangled(rho: np.ndarray, tolerance: float = 1e-10,
                 subsystem: str = "B") -> SeparabilityVerdict:
    """Classify a two-qubit density matrix by the sign of d = det(rho^pt).

    Also records the minimum eigenvalue and negative-eigenvalue count of
    the partial transpose for audit; these must agree with the d verdict
    whenever |d| exceeds the tolerance.
    """
    validate_density_matrix(rho)
    pt = partial_transpose(rho, subsystem)
    d = char_poly_coeffs(pt).d
    eigs = np.linalg.eigvalsh(pt)
    return SeparabilityVerdict(
        entangled=d < -tolerance,
        d_value=d,
        min_eigenvalue=float(eigs[0]),
        negative_count=int(np.count_nonzero(eigs < -tolerance)),
        boundary=abs(d) <= tolerance,
    )


def _sample_thetas(rng: np.random.Generator, n: int) -> np.ndarray:
    lo = np.array(SPECTRUM_LOWER)
    hi = np.array(SPECTRUM_UPPER)
    return lo + (hi - lo) * rng.random((n, 3))


def scan(samples: int, seed: int = 0, angle_profile: str = "volume",
         spectrum_policy="uniform", tolerance: float = 1e-10,
         workers: int = 1) -> list:
    """Classify random states drawn from the Haar angle sampler.

    The 12 conjugation angles come from the Haar sampler restricted to
    a1..a12; spectrum angles are uniform over their profile unless
    spectrum_policy is a fixed (t1, t2, t3) triple.  Record order follows
    the sample index and is deterministic for a fixed (seed, workers).
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    if workers < 1:
        raise ValueError("workers must be >= 1")
    profile = range_profile("su4", angle_profile)
    fixed_theta = None
    if not (isinstance(spectrum_policy, str) and spectrum_policy == "uniform"):
        fixed_theta = tuple(float(t) for t in spectrum_policy)
        if len(fixed_theta) != 3:
            raise ValueError("fixed spectrum policy needs three angles")

    streams = np.random.SeedSequence(seed).spawn(workers)
    counts = [samples // workers + (1 if w < samples % workers else 0)
              for w in range(workers)]
    records = []
    start = 0
    for stream, n_w in zip(streams, counts):
        if n_w == 0:
            continue
        rng = np.random.default_rng(stream)
        alphas = sample_haar_angles(rng, profile, size=n_w)[:, :12]
        if fixed_theta is None:
            thetas = _sample_thetas(rng, n_w)
        else:
            thetas = np.broadcast_to(fixed_theta, (n_w, 3))
        for i in range(n_w):
            verdict = is_entangled(rho_full(alphas[i], thetas[i]), tolerance)
            records.append(ScanRecord(
                sample_index=start + i,
                alphas=tuple(alphas[i]),
                thetas=tuple(thetas[i]),
                d=verdict.d_value,
                min_eig=verdict.min_eigenvalue,
                neg_count=verdict.negative_count,
                entangled=verdict.entangled,
                boundary=verdict.boundary,
            ))
        start += n_w
    return records


def corner_scan(tolerance: float = 1e-10) -> list:
    """Exhaustive classification at all 2^15 min/max parameter corners.

    Bit b of the sample index selects the upper endpoint for parameter b
    (a1..a12 then t1..t3).  Built in one batch; the classification path
    (Faddeev-LeVerrier d plus eigensolver audit) matches is_entangled.
    """
    profile = range_profile("su4", "volume")
    alpha_bounds = profile.bounds[:12]

    factors = [[exp_generator(g, lo), exp_generator(g, hi)]
               for g, (lo, hi) in zip(CONJUGATION_SEQUENCE, alpha_bounds)]
    v_all = np.empty((4096, 4, 4), dtype=complex)
    for m in range(4096):
        u = np.eye(4, dtype=complex)
        for pos in range(12):
            u = u @ factors[pos][(m >> pos) & 1]
        v_all[m] = u

    theta_corners = np.array([
        [(SPECTRUM_LOWER, SPECTRUM_UPPER)[(t >> j) & 1][j] for j in range(3)]
        for t in range(8)
    ])
    spectra = np.stack([spectrum_diagonal(tc) for tc in theta_corners])

    # rho[t, m] = V_m diag(s_t) V_m^dagger, flattened so index = t*4096 + m.
    rho = np.einsum("mab,tb,mcb->tmac", v_all, spectra, v_all.conj())
    rho = rho.reshape(-1, 4, 4)
    pt = partial_transpose(rho)
    d = char_poly_coeffs(pt).d
    eigs = np.linalg.eigvalsh(pt)
    neg = (eigs < -tolerance).sum(axis=1)

    alpha_vals = np.array([[b[(m >> pos) & 1] for pos, b in enumerate(alpha_bounds)]
                           for m in range(4096)])
    records = []
    for idx in range(32768):
        t, m = divmod(idx, 4096)
        records.append(ScanRecord(
            sample_index=idx,
            alphas=tuple(alpha_vals[m]),
            thetas=tuple(theta_corners[t]),
            d=float(d[idx]),
            min_eig=float(eigs[idx, 0]),
            neg_count=int(neg[idx]),
            entangled=bool(d[idx] < -tolerance),
            boundary=bool(abs(d[idx]) <= tolerance),
        ))
    return records
