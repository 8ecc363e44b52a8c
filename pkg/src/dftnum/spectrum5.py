"""Closed-form spectrum of the 5D number operator, in exact arithmetic.

In the parity basis the operator splits into a 3 x 3 even block and a 2 x 2
odd block.  The odd block is resolved through the traceless-part lemma for
symmetric 2 x 2 matrices; the even block through its characteristic
polynomial, whose constant term vanishes.  The five eigenvalues are

    lambda0 = 0                   (even)
    lambda1 = 5 + s2 (s2 - c1)    (even)
    lambda2 = s1 (s1 - c2)        (even)
    mu1     = 5 + s2 (s2 + c1)    (odd)
    mu2     = s1 (s1 + c2)        (odd)

and every eigenvector is written with components in K (even-block vectors
pick up sqrt2 factors that cancel after the change of basis back to the
position basis).  The fifth powers of i tag the assembled eigenvectors by
their Fourier eigenvalue: phi @ f_k = i**k f_k for k = 0..4.

Nothing here asserts; verification lives in the test and verify suites,
which also drive the sign-flip mutation hook exposed by ``flip``.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

import numpy as np

from .exact_field import (
    ComplexQuintic,
    RealQuintic,
    Root2Ext,
    sqrt_in_k,
    trig_table,
)
from .operators import build_operator
from .symmetrize import build_t

LABELS = ("lambda0", "mu1", "lambda2", "mu2", "lambda1")  # by assembled index


class NotASquareInFieldError(ValueError):
    """The discriminant has no exact square root in K.

    Carries the float eigenvalue pair as a fallback."""

    def __init__(self, message: str, float_values: tuple[float, float]):
        super().__init__(message)
        self.float_values = float_values


class PhaseNotFoundError(RuntimeError):
    """No power of i matches: the vector is not a Fourier eigenvector."""


@dataclass(frozen=True)
class TwoByTwoSplit:
    """Symmetric M = u*I + M' with traceless M' = [[v, b], [b, -v]]."""

    u: RealQuintic
    v: RealQuintic
    b: RealQuintic
    mprime: np.ndarray


@dataclass(frozen=True)
class CharPolyCoeffs:
    """Coefficients c1..cn of det(lambda I - M) = lambda^n + c1 lambda^(n-1) + ... + cn."""

    coeffs: tuple[ComplexQuintic, ...]


@dataclass(frozen=True)
class LabeledEigenpair:
    label: str
    value: ComplexQuintic
    vector: np.ndarray
    block: str  # "sym" (even 3x3 block) or "anti" (odd 2x2 block)
    dft_phase: int | None = None

    def with_phase(self, k: int | None) -> "LabeledEigenpair":
        return replace(self, dft_phase=k)


def _as_real(entry) -> RealQuintic:
    if isinstance(entry, Root2Ext):
        entry = entry.to_quintic()
    if isinstance(entry, ComplexQuintic):
        if not entry.im.is_zero():
            raise ValueError("entry is not real")
        return entry.re
    if isinstance(entry, RealQuintic):
        return entry
    return RealQuintic(entry)


def split_2x2(m: np.ndarray) -> TwoByTwoSplit:
    """Split a symmetric 2 x 2 matrix into u*I plus its traceless part."""
    if m.shape != (2, 2):
        raise ValueError(f"expected a 2 x 2 matrix, got {m.shape}")
    a, b1 = _as_real(m[0, 0]), _as_real(m[0, 1])
    b2, d = _as_real(m[1, 0]), _as_real(m[1, 1])
    if not (b1 - b2).is_zero():
        raise ValueError("matrix is not symmetric")
    half = Fraction(1, 2)
    u = half * (a + d)
    v = half * (a - d)
    mprime = np.array(
        [[ComplexQuintic(v), ComplexQuintic(b1)], [ComplexQuintic(b1), ComplexQuintic(-v)]],
        dtype=object,
    )
    return TwoByTwoSplit(u=u, v=v, b=b1, mprime=mprime)


def eig_2x2_closed(m: np.ndarray) -> tuple[RealQuintic, RealQuintic]:
    """Exact eigenvalues u +- sqrt(v^2 + b^2) of a symmetric 2 x 2 matrix.

    Requires the discriminant to be a perfect square in K; otherwise raises
    :class:`NotASquareInFieldError` carrying the float pair.
    """
    sp = split_2x2(m)
    w = sp.v * sp.v + sp.b * sp.b
    root = sqrt_in_k(w)
    if root is None:
        uf, wf = sp.u.to_float(), w.to_float()
        rf = wf ** 0.5
        raise NotASquareInFieldError(
            "v^2 + b^2 is not a square in K", (uf + rf, uf - rf)
        )
    return sp.u + root, sp.u - root


def _det2(m: np.ndarray):
    return m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]


def _det3(m: np.ndarray):
    return (
        m[0, 0] * (m[1, 1] * m[2, 2] - m[1, 2] * m[2, 1])
        - m[0, 1] * (m[1, 0] * m[2, 2] - m[1, 2] * m[2, 0])
        + m[0, 2] * (m[1, 0] * m[2, 1] - m[1, 1] * m[2, 0])
    )


def char_poly_coeffs(m: np.ndarray) -> CharPolyCoeffs:
    """Characteristic polynomial coefficients for k = 2 or 3.

    c1 is minus the trace, c2 the sum of principal 2 x 2 minors, and the
    last coefficient (-1)^k times the determinant.
    """
    k = m.shape[0]
    if m.shape != (k, k) or k not in (2, 3):
        raise ValueError(f"supported sizes are 2 and 3, got {m.shape}")
    tr = m[0, 0]
    for i in range(1, k):
        tr = tr + m[i, i]
    if k == 2:
        return CharPolyCoeffs(coeffs=(-tr, _det2(m)))
    minors = (
        _det2(m[np.ix_([1, 2], [1, 2])])
        + _det2(m[np.ix_([0, 2], [0, 2])])
        + _det2(m[np.ix_([0, 1], [0, 1])])
    )
    return CharPolyCoeffs(coeffs=(-tr, minors, -_det3(m)))


# --- closed forms -------------------------------------------------------------


def n2_closed_spectrum(flip: str | None = None) -> tuple[LabeledEigenpair, LabeledEigenpair]:
    """Eigenpairs (mu1, mu2) of the odd-parity 2 x 2 block, unnormalized."""
    t = trig_table(flip)
    s1, s2, c1, c2 = t["s1"], t["s2"], t["c1"], t["c2"]
    mu1 = ComplexQuintic(5 + s2 * (s2 + c1))
    mu2 = ComplexQuintic(s1 * (s1 + c2))
    phi1 = np.array([ComplexQuintic(c1), ComplexQuintic(1 + s2)], dtype=object)
    phi2 = np.array([ComplexQuintic(1 + s2), ComplexQuintic(-c1)], dtype=object)
    return (
        LabeledEigenpair(label="mu1", value=mu1, vector=phi1, block="anti"),
        LabeledEigenpair(label="mu2", value=mu2, vector=phi2, block="anti"),
    )


def n3_closed_spectrum(flip: str | None = None) -> tuple[LabeledEigenpair, ...]:
    """Eigenpairs (lambda0, lambda1, lambda2) of the even-parity 3 x 3 block."""
    t = trig_table(flip)
    s1, s2, c1, c2 = t["s1"], t["s2"], t["c1"], t["c2"]
    lift = lambda v: Root2Ext(ComplexQuintic(v))
    rt2_times = lambda v: Root2Ext(0, ComplexQuintic(v))  # sqrt2 * v
    lam0 = ComplexQuintic(0)
    phi0 = np.array([lift(s1 - 2 * c2), rt2_times(1 + s2), rt2_times(1)], dtype=object)
    lam1 = ComplexQuintic(5 + s2 * (s2 - c1))
    phi1 = np.array(
        [rt2_times(c1), lift(-(2 * s2) - 1), lift(2 * (s2 - c1) + 3)], dtype=object
    )
    lam2 = ComplexQuintic(s1 * (s1 - c2))
    phi2 = np.array([rt2_times(-c1), lift(1), lift(1)], dtype=object)
    return (
        LabeledEigenpair(label="lambda0", value=lam0, vector=phi0, block="sym"),
        LabeledEigenpair(label="lambda1", value=lam1, vector=phi1, block="sym"),
        LabeledEigenpair(label="lambda2", value=lam2, vector=phi2, block="sym"),
    )


def _project_k_vector(vec: np.ndarray) -> np.ndarray:
    """Strip the sqrt2 bookkeeping from an assembled vector.

    Each assembled eigenvector is either entirely in K(i) or entirely in
    sqrt2*K(i); in the latter case the representative is rescaled by 1/sqrt2
    (eigenvectors are only defined up to a constant factor anyway).
    """
    entries = [e if isinstance(e, Root2Ext) else Root2Ext(e) for e in vec]
    if all(e.root2.is_zero() for e in entries):
        return np.array([e.base for e in entries], dtype=object)
    if all(e.base.is_zero() for e in entries):
        return np.array([e.root2 for e in entries], dtype=object)
    raise ValueError("vector mixes K and sqrt2*K components")


def assemble_dft_eigenvectors(flip: str | None = None) -> tuple[LabeledEigenpair, ...]:
    """The five eigenvectors of the 5D number operator in the position basis.

    Zero-pads the block eigenvectors in the parity basis (even vectors into
    the leading three slots, odd vectors into the trailing two; the odd
    vector paired with mu2 fills the slot of the third Fourier eigenvector),
    rotates back with t.T, and tags each vector with its Fourier phase.
    """
    lam0, lam1, lam2 = n3_closed_spectrum(flip)
    mu1, mu2 = n2_closed_spectrum(flip)
    zero2 = [Root2Ext(0)] * 2
    zero3 = [Root2Ext(0)] * 3
    lift = lambda v: v if isinstance(v, Root2Ext) else Root2Ext(v)
    tilde = {
        0: (lam0, list(lam0.vector) + zero2),
        1: (mu1, zero3 + [lift(v) for v in mu1.vector]),
        2: (lam2, list(lam2.vector) + zero2),
        3: (mu2, zero3 + [lift(v) for v in mu2.vector]),
        4: (lam1, list(lam1.vector) + zero2),
    }
    t = build_t(5, "exact")
    phi = build_operator("dft", 5, "exact")
    out = []
    for k in range(5):
        pair, ft = tilde[k]
        f = _project_k_vector(t.matrix.T @ np.array(ft, dtype=object))
        try:
            phase = dft_phase(f, phi=phi)
        except PhaseNotFoundError:
            phase = None
        out.append(LabeledEigenpair(pair.label, pair.value, f, pair.block, phase))
    return tuple(out)


def dft_phase(f: np.ndarray, phi: np.ndarray | None = None) -> int:
    """The unique k in 0..3 with phi @ f = i**k f, decided exactly."""
    if phi is None:
        phi = build_operator("dft", 5, "exact")
    g = phi @ f
    i_unit = ComplexQuintic(0, 1)
    power = ComplexQuintic(1)
    for k in range(4):
        if all((gi - power * fi).is_zero() for gi, fi in zip(g, f)):
            return k
        power = power * i_unit
    raise PhaseNotFoundError("vector is not an exact Fourier eigenvector")


def is_exact_eigenpair(m: np.ndarray, value, vector: np.ndarray) -> bool:
    """Exact check m @ vector == value * vector (any exact scalar mix)."""
    diff = m @ vector - value * vector
    return all(entry.is_zero() for entry in diff)
