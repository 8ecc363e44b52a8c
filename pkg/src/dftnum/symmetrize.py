"""Reflection-symmetrized basis and block structure of the number operator.

The reflection ``pd`` fixes index 0 (and n/2 for even n) and swaps k with
n - k.  The orthogonal matrix built here rotates each swapped pair into its
even and odd combinations, listing all even rows first:

    row 0     = e0
    row k     = (e_k + e_{n-k}) / sqrt2      for 1 <= k <= (n - 1) // 2
    row n - k = (e_{n-k} - e_k) / sqrt2
    row n/2   = e_{n/2}                      for even n

For n = 5 this is exactly the product of two quarter-turn Givens rotations
in the (1,4) and (2,3) planes.  Conjugation sends any pd-commuting operator
to block-diagonal form, with the even block of size n//2 + 1 leading.

Exact conjugated entries pick up factors 1/sqrt2, so the exact backend works
over :class:`~dftnum.exact_field.Root2Ext` scalars.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exact_field import ComplexQuintic, Fraction, Root2Ext
from .operators import backend_of, basis_vector, build_operator, max_abs, residual_value


@dataclass(frozen=True)
class SymmetrizerT:
    """The orthogonal change of basis into even/odd reflection parity."""

    n: int
    backend: str
    matrix: np.ndarray

    @property
    def even_block_size(self) -> int:
        return self.n // 2 + 1


@dataclass(frozen=True)
class BlockPair:
    """Leading (even) and trailing (odd) diagonal blocks of a conjugated
    operator, with the largest leaked magnitude outside the two blocks."""

    sym_block: np.ndarray
    anti_block: np.ndarray
    offblock_max: float


def build_t(n: int, backend: str = "float") -> SymmetrizerT:
    if n < 2:
        raise ValueError("dimension must be at least 2")
    if backend == "exact":
        zero = Root2Ext(0)
        one = Root2Ext(1)
        half_rt2 = Root2Ext(0, Fraction(1, 2))  # sqrt2 / 2 == 1 / sqrt2
        m = np.empty((n, n), dtype=object)
        m[:, :] = zero
        m[0, 0] = one
        if n % 2 == 0:
            m[n // 2, n // 2] = one
        for k in range(1, (n - 1) // 2 + 1):
            m[k, k] = half_rt2
            m[k, n - k] = half_rt2
            m[n - k, n - k] = half_rt2
            m[n - k, k] = -half_rt2
        return SymmetrizerT(n=n, backend="exact", matrix=m)
    if backend != "float":
        raise ValueError(f"unknown backend {backend!r}")
    m = np.zeros((n, n), dtype=complex)
    m[0, 0] = 1.0
    if n % 2 == 0:
        m[n // 2, n // 2] = 1.0
    r = np.sqrt(0.5)
    for k in range(1, (n - 1) // 2 + 1):
        m[k, k] = r
        m[k, n - k] = r
        m[n - k, n - k] = r
        m[n - k, k] = -r
    return SymmetrizerT(n=n, backend="float", matrix=m)


def rotation_factorization_5() -> tuple[np.ndarray, np.ndarray]:
    """Exact Givens rotations by pi/4 in the (1,4) and (2,3) planes whose
    product equals the n = 5 symmetrizer."""
    half_rt2 = Root2Ext(0, Fraction(1, 2))

    def rotation(p: int, q: int) -> np.ndarray:
        m = np.empty((5, 5), dtype=object)
        m[:, :] = Root2Ext(0)
        for i in range(5):
            m[i, i] = Root2Ext(1)
        m[p, p] = half_rt2
        m[p, q] = half_rt2
        m[q, p] = -half_rt2
        m[q, q] = half_rt2
        return m

    return rotation(1, 4), rotation(2, 3)


def conjugate_by_t(z: np.ndarray, t: SymmetrizerT) -> np.ndarray:
    """Matrix of the operator z in the symmetrized basis: t @ z @ t.T."""
    if z.shape != (t.n, t.n):
        raise ValueError(f"dimension mismatch: operator {z.shape} vs symmetrizer n={t.n}")
    if backend_of(z) != t.backend:
        raise ValueError("backend mismatch between operator and symmetrizer")
    return t.matrix @ z @ t.matrix.T


def block_split(zt: np.ndarray, n: int) -> BlockPair:
    """Split a conjugated matrix into its two parity blocks.

    The off-block maximum is reported, not raised: it is exactly 0.0 for a
    pd-commuting operator on the exact backend."""
    if zt.shape != (n, n):
        raise ValueError(f"expected a {n} x {n} matrix, got {zt.shape}")
    k = n // 2 + 1
    off_upper = zt[:k, k:]
    off_lower = zt[k:, :k]
    if off_upper.size:
        off = max(residual_value(off_upper), residual_value(off_lower))
    else:
        off = 0.0
    return BlockPair(sym_block=zt[:k, :k], anti_block=zt[k:, k:], offblock_max=off)


def zero_count(m: np.ndarray, tol: float = 1e-12) -> tuple[int, int]:
    """Census of (zero, nonzero) entries; structural on the exact backend."""
    if m.dtype == object:
        zeros = sum(1 for entry in m.flat if entry.is_zero())
    else:
        zeros = int((np.abs(m) < tol).sum())
    return zeros, m.size - zeros


def symmetrized_basis_vector(kind: str, k: int, n: int = 5) -> np.ndarray:
    """Exact symmetrized basis vectors for n = 5.

    For the position basis this is t @ e_k.  The Fourier companions are the
    same recombination applied to the eps labels, i.e. phi @ (t @ e_k):
    componentwise either (i/sqrt10) times an s-pattern (k = 1, 2) or, despite
    the way they are sometimes displayed, a purely real (1/sqrt10) times a
    c-pattern (k = 3, 4).
    """
    if n != 5:
        raise ValueError("symmetrized basis vectors are exact for n = 5 only")
    if not 0 <= k < n:
        raise IndexError(f"index {k} out of range for dimension {n}")
    t = build_t(5, "exact")
    e_tilde = t.matrix[:, k].copy()  # t @ e_k is column k of t
    if kind == "e":
        return e_tilde
    if kind == "eps":
        phi = build_operator("dft", 5, "exact")
        return phi @ e_tilde
    raise ValueError(f"unknown basis kind {kind!r}")


def parity_diagonal(n: int, backend: str = "float") -> np.ndarray:
    """The conjugated reflection t @ pd @ t.T; diagonal with +1 on the
    leading n//2 + 1 slots and -1 on the rest."""
    t = build_t(n, backend)
    pd = build_operator("pd", n, backend)
    return conjugate_by_t(pd, t)


def symmetrized_number_operator(n: int = 5, backend: str = "exact") -> np.ndarray:
    """The number operator conjugated into the parity basis."""
    t = build_t(n, backend)
    return conjugate_by_t(build_operator("number", n, backend), t)


def n3_block(backend: str = "exact") -> np.ndarray:
    """The 3 x 3 even-parity block of the symmetrized 5D number operator."""
    return block_split(symmetrized_number_operator(5, backend), 5).sym_block


def n2_block(backend: str = "exact") -> np.ndarray:
    """The 2 x 2 odd-parity block of the symmetrized 5D number operator."""
    return block_split(symmetrized_number_operator(5, backend), 5).anti_block


def expected_blocks_5() -> tuple[np.ndarray, np.ndarray]:
    """Closed-form entries of the two parity blocks of the 5D number
    operator, in Root2Ext scalars:

        even: [[2,            -sqrt2 s1,   -sqrt2     ],
               [-sqrt2 s1,    3 - c2,      c1 s2 - 1  ],
               [-sqrt2,       c1 s2 - 1,   2(s2+2)-c1 ]]
        odd:  [[2(2-s2) - c1, c1 s2 + 1], [c1 s2 + 1, 5 - c2]]
    """
    from .exact_field import c_const, s_const

    s1, s2 = s_const(1), s_const(2)
    c1, c2 = c_const(1), c_const(2)
    rt2 = Root2Ext(0, 1)
    lift = lambda v: Root2Ext(ComplexQuintic(v))
    n3 = np.array(
        [
            [lift(2), -(rt2 * lift(s1)), -rt2],
            [-(rt2 * lift(s1)), lift(3 - c2), lift(c1 * s2 - 1)],
            [-rt2, lift(c1 * s2 - 1), lift(2 * (s2 + 2) - c1)],
        ],
        dtype=object,
    )
    n2 = np.array(
        [
            [lift(2 * (2 - s2) - c1), lift(c1 * s2 + 1)],
            [lift(c1 * s2 + 1), lift(5 - c2)],
        ],
        dtype=object,
    )
    return n3, n2
