"""The DFT operator family for arbitrary dimension n.

Builds the unitary symmetric Fourier matrix ``phi``, the cyclic shift ``c``,
the backward identity ``j``, the index reflection ``pd``, the position and
momentum analogues ``x`` and ``y``, the ladder pair ``a`` / ``at`` and the
number operator ``at @ a``, over either scalar backend:

* ``float``: numpy complex128 arrays;
* ``exact``: numpy object arrays over :class:`~dftnum.exact_field.ComplexQuintic`
  (n = 5 for the trigonometric operators, any n for the permutations).

Conventions: matrices are row-major and dense; all index arithmetic is
mod n.  The shift ``c`` is cyclic (``c[n-1, 0] = 1``), which is what makes
the two-diagonal actions of ``x`` and ``y`` hold at the boundary indices.
With d = c - c.T one has y = i(c.T - c) = -i d, a = x + d, at = x - d and
the intertwining relations a phi = i phi a, at phi = -i phi at.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .exact_field import ComplexQuintic, Fraction, RealQuintic, q_const, s_const

OPERATOR_KINDS = ("dft", "c", "j", "pd", "x", "y", "d", "a", "at", "number")

#: permutation-valued kinds, exact over any dimension
PERMUTATION_KINDS = frozenset({"c", "j", "pd"})


class UnsupportedBackendError(ValueError):
    """Exact scalars only exist for n = 5 outside the permutation kinds."""


def default_backend(kind: str, n: int) -> str:
    return "exact" if (n == 5 or kind in PERMUTATION_KINDS) else "float"


def backend_of(m: np.ndarray) -> str:
    return "exact" if m.dtype == object else "float"


def _check_kind(kind: str) -> None:
    if kind not in OPERATOR_KINDS:
        raise ValueError(f"unknown operator kind {kind!r}; expected one of {OPERATOR_KINDS}")


def _exact_zeros(n: int) -> np.ndarray:
    m = np.empty((n, n), dtype=object)
    zero = ComplexQuintic(0)
    for i in range(n):
        for j in range(n):
            m[i, j] = zero
    return m


def _exact_eye(n: int) -> np.ndarray:
    m = _exact_zeros(n)
    one = ComplexQuintic(1)
    for i in range(n):
        m[i, i] = one
    return m


def identity(n: int, backend: str = "float") -> np.ndarray:
    return _exact_eye(n) if backend == "exact" else np.eye(n, dtype=complex)


def build_operator(kind: str, n: int, backend: str | None = None) -> np.ndarray:
    """Construct one operator of the family as an n x n matrix."""
    _check_kind(kind)
    if n < 2:
        raise ValueError("dimension must be at least 2")
    if backend is None:
        backend = default_backend(kind, n)
    if backend not in ("exact", "float"):
        raise ValueError(f"unknown backend {backend!r}")
    if backend == "exact" and n != 5 and kind not in PERMUTATION_KINDS:
        raise UnsupportedBackendError(
            f"exact backend for kind {kind!r} needs n = 5 (got n = {n})"
        )
    return _BUILDERS[kind](n, backend)


def _build_c(n: int, backend: str) -> np.ndarray:
    if backend == "exact":
        m = _exact_zeros(n)
        one = ComplexQuintic(1)
        for k in range(n):
            m[k, (k + 1) % n] = one
        return m
    m = np.zeros((n, n), dtype=complex)
    m[np.arange(n), (np.arange(n) + 1) % n] = 1.0
    return m


def _build_j(n: int, backend: str) -> np.ndarray:
    if backend == "exact":
        m = _exact_zeros(n)
        one = ComplexQuintic(1)
        for k in range(n):
            m[k, n - 1 - k] = one
        return m
    m = np.zeros((n, n), dtype=complex)
    m[np.arange(n), n - 1 - np.arange(n)] = 1.0
    return m


def _build_pd(n: int, backend: str) -> np.ndarray:
    # pd maps index k to (n - k) mod n; equals c.T @ j.
    if backend == "exact":
        m = _exact_zeros(n)
        one = ComplexQuintic(1)
        for k in range(n):
            m[(n - k) % n, k] = one
        return m
    m = np.zeros((n, n), dtype=complex)
    m[(n - np.arange(n)) % n, np.arange(n)] = 1.0
    return m


def _build_dft(n: int, backend: str) -> np.ndarray:
    if backend == "exact":
        m = np.empty((n, n), dtype=object)
        inv_sqrt5 = ComplexQuintic(RealQuintic(0, Fraction(1, 5)))  # sqrt5/5
        powers = [q_const(k) for k in range(5)]
        for k in range(n):
            for l in range(n):
                m[k, l] = inv_sqrt5 * powers[(k * l) % 5]
        return m
    roots = np.exp(2j * np.pi * np.arange(n) / n)
    kl = np.outer(np.arange(n), np.arange(n)) % n
    return roots[kl] / np.sqrt(n)


def _build_x(n: int, backend: str) -> np.ndarray:
    if backend == "exact":
        m = _exact_zeros(n)
        for k in range(n):
            m[k, k] = ComplexQuintic(s_const(k))
        return m
    return np.diag(2.0 * np.sin(2.0 * np.pi * np.arange(n) / n)).astype(complex)


def _build_d(n: int, backend: str) -> np.ndarray:
    c = _build_c(n, backend)
    return c - c.T


def _build_y(n: int, backend: str) -> np.ndarray:
    c = _build_c(n, backend)
    i_unit = ComplexQuintic(0, 1) if backend == "exact" else 1j
    return i_unit * (c.T - c)


def _build_a(n: int, backend: str) -> np.ndarray:
    return _build_x(n, backend) + _build_d(n, backend)


def _build_at(n: int, backend: str) -> np.ndarray:
    return _build_x(n, backend) - _build_d(n, backend)


def _build_number(n: int, backend: str) -> np.ndarray:
    return _build_at(n, backend) @ _build_a(n, backend)


_BUILDERS = {
    "dft": _build_dft,
    "c": _build_c,
    "j": _build_j,
    "pd": _build_pd,
    "x": _build_x,
    "y": _build_y,
    "d": _build_d,
    "a": _build_a,
    "at": _build_at,
    "number": _build_number,
}


# --- basis vectors -----------------------------------------------------------


@dataclass(frozen=True)
class BasisVector:
    """A position eigenvector e_k or a Fourier column eps_k = phi @ e_k."""

    n: int
    k: int
    label: str
    components: np.ndarray = field(compare=False)


def basis_vector(kind: str, k: int, n: int, backend: str | None = None) -> BasisVector:
    if kind not in ("e", "eps"):
        raise ValueError(f"unknown basis kind {kind!r}")
    if not 0 <= k < n:
        raise IndexError(f"index {k} out of range for dimension {n}")
    if backend is None:
        backend = "exact" if n == 5 else "float"
    if backend == "exact" and n != 5 and kind == "eps":
        raise UnsupportedBackendError("exact eps vectors need n = 5")
    if backend == "exact":
        zero, one = ComplexQuintic(0), ComplexQuintic(1)
        if kind == "e":
            comp = np.array([one if i == k else zero for i in range(n)], dtype=object)
        else:
            inv_sqrt5 = ComplexQuintic(RealQuintic(0, Fraction(1, 5)))
            comp = np.array([inv_sqrt5 * q_const((i * k) % 5) for i in range(n)], dtype=object)
    else:
        if kind == "e":
            comp = np.zeros(n, dtype=complex)
            comp[k] = 1.0
        else:
            comp = np.exp(2j * np.pi * ((np.arange(n) * k) % n) / n) / np.sqrt(n)
    return BasisVector(n=n, k=k, label=kind, components=comp)


# --- matrix helpers ----------------------------------------------------------


def dagger(m: np.ndarray) -> np.ndarray:
    """Conjugate transpose, for either backend."""
    return np.conjugate(m).T


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    if backend_of(a) != backend_of(b):
        raise ValueError("backend mismatch between operands")
    return a @ b - b @ a


def to_float_matrix(m: np.ndarray) -> np.ndarray:
    """Embed an exact matrix into complex128 (identity on float matrices)."""
    if m.dtype != object:
        return np.asarray(m, dtype=complex)
    out = np.empty(m.shape, dtype=complex)
    for idx, entry in np.ndenumerate(m):
        out[idx] = entry.to_complex()
    return out


def exact_all_zero(m: np.ndarray) -> bool:
    return all(entry.is_zero() for entry in m.flat)


def max_abs(m: np.ndarray) -> float:
    """Largest entry magnitude; exact entries are embedded first."""
    if m.dtype == object:
        m = to_float_matrix(m)
    return float(np.abs(m).max()) if m.size else 0.0


def residual_value(m: np.ndarray) -> float:
    """Max-abs residual of a difference matrix; exactly 0.0 when an exact
    matrix is structurally zero."""
    if m.dtype == object:
        return 0.0 if exact_all_zero(m) else max_abs(m)
    return max_abs(m)


# --- relation verification ---------------------------------------------------


@dataclass(frozen=True)
class RelationCheck:
    name: str
    residual: float
    passed: bool


@dataclass(frozen=True)
class RelationReport:
    n: int
    backend: str
    tol: float
    checks: tuple[RelationCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def max_residual(self) -> float:
        return max((c.residual for c in self.checks), default=0.0)


def verify_relations(n: int, backend: str | None = None, tol: float | None = None) -> RelationReport:
    """Verify the defining algebra of the family at dimension n.

    Exact backend demands tol = 0 and reports structural zeroness; float
    backend compares max-abs residuals against tol (default 1e-12).
    """
    if backend is None:
        backend = "exact" if n == 5 else "float"
    if backend == "exact":
        if tol is None:
            tol = 0.0
        if tol != 0.0:
            raise ValueError("exact backend requires tol = 0")
    elif tol is None:
        tol = 1e-12
    phi = build_operator("dft", n, backend)
    pd = build_operator("pd", n, backend)
    x = build_operator("x", n, backend)
    y = build_operator("y", n, backend)
    d = build_operator("d", n, backend)
    a = build_operator("a", n, backend)
    at = build_operator("at", n, backend)
    num = build_operator("number", n, backend)
    eye = identity(n, backend)
    i_unit = ComplexQuintic(0, 1) if backend == "exact" else 1j

    residuals: list[tuple[str, float]] = []
    residuals.append(("phi_unitary", residual_value(phi @ dagger(phi) - eye)))
    residuals.append(("phi_symmetric", residual_value(phi - phi.T)))
    residuals.append(("phi_pd_commutator", residual_value(commutator(phi, pd))))
    residuals.append(("number_phi_commutator", residual_value(commutator(num, phi))))
    residuals.append(("intertwine_a", residual_value(a @ phi - i_unit * (phi @ a))))
    residuals.append(("intertwine_at", residual_value(at @ phi + i_unit * (phi @ at))))
    residuals.append(("y_unitary_equivalent", residual_value(y - phi @ x @ dagger(phi))))
    # x eps_n = i(eps_{n-1} - eps_{n+1})  <=>  x phi = i phi d
    residuals.append(("x_two_diagonal_in_eps", residual_value(x @ phi - i_unit * (phi @ d))))

    def vec_residual(diff: np.ndarray) -> float:
        return residual_value(diff.reshape(1, -1))

    r_y = 0.0
    r_pe = 0.0
    r_peps = 0.0
    e = [basis_vector("e", k, n, backend).components for k in range(n)]
    eps = (
        [basis_vector("eps", k, n, backend).components for k in range(n)]
        if (backend == "float" or n == 5)
        else [phi @ ek for ek in e]
    )
    for k in range(n):
        r_y = max(r_y, vec_residual(y @ e[k] - i_unit * (e[(k + 1) % n] - e[(k - 1) % n])))
        r_pe = max(r_pe, vec_residual(pd @ e[k] - e[(n - k) % n]))
        r_peps = max(r_peps, vec_residual(pd @ eps[k] - eps[(n - k) % n]))
    residuals.append(("y_two_diagonal_in_e", r_y))
    residuals.append(("pd_reflects_e", r_pe))
    residuals.append(("pd_reflects_eps", r_peps))

    checks = tuple(RelationCheck(name, res, res <= tol) for name, res in residuals)
    return RelationReport(n=n, backend=backend, tol=tol, checks=checks)
