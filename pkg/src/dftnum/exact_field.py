"""Exact arithmetic in the real quartic field K = Q(sqrt5, s1).

Here s1 = 2*sin(2*pi/5), which satisfies s1**2 = (5 + sqrt5)/2, so K is a
totally real degree-4 extension of Q with basis {1, sqrt5, s1, sqrt5*s1}.
Every value 2*sin(2*pi*n/5) and 2*cos(2*pi*n/5) lies in K, hence all entries
of the exact five-dimensional operator family lie in the complex extension
K(i).  A further quadratic extension by sqrt2 (``Root2Ext``) covers the
symmetrized basis, whose change-of-basis matrix mixes in factors 1/sqrt2.

All coordinates are ``fractions.Fraction`` values: arbitrary precision,
always in canonical lowest terms with a positive denominator.  There is no
epsilon anywhere in this module; zero tests are structural.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

# Ground scalar: arbitrary-precision rational in lowest terms.
Rational = Fraction

_SQRT5 = math.sqrt(5.0)
_S1 = 2.0 * math.sin(2.0 * math.pi / 5.0)

_RationalLike = Union[int, Fraction]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


class RealQuintic:
    """Element a + b*sqrt5 + c*s1 + d*sqrt5*s1 of K, with rational coords.

    Reduction rules used by multiplication (u1 = sqrt5, u2 = s1, u3 = sqrt5*s1):

        u1*u1 = 5           u2*u2 = 5/2 + (1/2)*u1
        u1*u2 = u3          u2*u3 = 5/2 + (5/2)*u1
        u1*u3 = 5*u2        u3*u3 = 25/2 + (5/2)*u1

    Instances are immutable by convention; all operations return new values.
    """

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a=0, b=0, c=0, d=0):
        self.a = _frac(a)
        self.b = _frac(b)
        self.c = _frac(c)
        self.d = _frac(d)

    @property
    def coords(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c, self.d)

    @staticmethod
    def _coerce(x) -> "RealQuintic | None":
        if isinstance(x, RealQuintic):
            return x
        if isinstance(x, (int, Fraction)):
            return RealQuintic(x)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RealQuintic(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RealQuintic(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return RealQuintic(-self.a, -self.b, -self.c, -self.d)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a1, b1, c1, d1 = self.coords
        a2, b2, c2, d2 = o.coords
        cc = c1 * c2
        cd = c1 * d2 + d1 * c2
        dd = d1 * d2
        return RealQuintic(
            a1 * a2 + 5 * b1 * b2 + Fraction(5, 2) * (cc + cd) + Fraction(25, 2) * dd,
            a1 * b2 + b1 * a2 + Fraction(1, 2) * cc + Fraction(5, 2) * (cd + dd),
            a1 * c2 + c1 * a2 + 5 * (b1 * d2 + d1 * b2),
            a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def inverse(self) -> "RealQuintic":
        """Multiplicative inverse, found by solving the 4x4 rational system
        of multiplication-by-self against the coordinates of 1."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in K")
        basis = (RealQuintic(1), RealQuintic(0, 1), RealQuintic(0, 0, 1), RealQuintic(0, 0, 0, 1))
        cols = [(self * u).coords for u in basis]
        # Row-major augmented system M * v = e0, M[i][j] = coord i of self*u_j.
        m = [[cols[j][i] for j in range(4)] for i in range(4)]
        rhs = [Fraction(1), Fraction(0), Fraction(0), Fraction(0)]
        sol = _solve_linear(m, rhs)
        return RealQuintic(*sol)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0 and self.c == 0 and self.d == 0

    def to_float(self) -> float:
        return float(self.a) + float(self.b) * _SQRT5 + (float(self.c) + float(self.d) * _SQRT5) * _S1

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coords == o.coords

    def __hash__(self):
        if self.b == 0 and self.c == 0 and self.d == 0:
            return hash(self.a)
        return hash(self.coords)

    def __repr__(self):
        return f"RealQuintic({self.a}, {self.b}, {self.c}, {self.d})"


def _solve_linear(m: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Exact Gaussian elimination with partial (first nonzero) pivoting."""
    n = len(m)
    a = [row[:] + [rhs[i]] for i, row in enumerate(m)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular system")
        a[col], a[pivot] = a[pivot], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[i][n] for i in range(n)]


class ComplexQuintic:
    """Element of K(i): a pair (re, im) of RealQuintic values."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if isinstance(re, RealQuintic) else RealQuintic(_frac(re))
        self.im = im if isinstance(im, RealQuintic) else RealQuintic(_frac(im))

    @staticmethod
    def _coerce(x) -> "ComplexQuintic | None":
        if isinstance(x, ComplexQuintic):
            return x
        if isinstance(x, (RealQuintic, int, Fraction)):
            return ComplexQuintic(x if isinstance(x, RealQuintic) else RealQuintic(_frac(x)))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ComplexQuintic(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ComplexQuintic(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return ComplexQuintic(-self.re, -self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return _CQ_ZERO
        return ComplexQuintic(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def conjugate(self) -> "ComplexQuintic":
        return ComplexQuintic(self.re, -self.im)

    def inverse(self) -> "ComplexQuintic":
        # 1/(x + iy) = (x - iy)/(x^2 + y^2); the norm is in K and, K being
        # totally real, vanishes only at zero.
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in K(i)")
        norm_inv = (self.re * self.re + self.im * self.im).inverse()
        return ComplexQuintic(self.re * norm_inv, -self.im * norm_inv)

    def is_zero(self) -> bool:
        return self.re.is_zero() and self.im.is_zero()

    def is_real(self) -> bool:
        return self.im.is_zero()

    def to_complex(self) -> complex:
        return complex(self.re.to_float(), self.im.to_float())

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im.is_zero():
            return hash(self.re)
        return hash((self.re.coords, self.im.coords))

    def __repr__(self):
        return f"ComplexQuintic({self.re!r}, {self.im!r})"


_CQ_ZERO = ComplexQuintic(0)


class Root2Ext:
    """Element base + sqrt2 * root2 of K(i)(sqrt2), with K(i) components.

    sqrt2 does not lie in K, but the symmetrizing rotation has entries
    1/sqrt2, so conjugated matrices and the symmetrized eigenvectors live in
    this quadratic extension.  Multiplication uses sqrt2*sqrt2 = 2.
    """

    __slots__ = ("base", "root2")

    def __init__(self, base=0, root2=0):
        b = ComplexQuintic._coerce(base)
        r = ComplexQuintic._coerce(root2)
        if b is None or r is None:
            raise TypeError("Root2Ext components must coerce to ComplexQuintic")
        self.base = b
        self.root2 = r

    @staticmethod
    def _coerce(x) -> "Root2Ext | None":
        if isinstance(x, Root2Ext):
            return x
        c = ComplexQuintic._coerce(x)
        if c is None:
            return None
        return Root2Ext(c)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Root2Ext(self.base + o.base, self.root2 + o.root2)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Root2Ext(self.base - o.base, self.root2 - o.root2)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return Root2Ext(-self.base, -self.root2)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Root2Ext(
            self.base * o.base + 2 * (self.root2 * o.root2),
            self.base * o.root2 + self.root2 * o.base,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def conjugate(self) -> "Root2Ext":
        return Root2Ext(self.base.conjugate(), self.root2.conjugate())

    def inverse(self) -> "Root2Ext":
        # 1/(a + sqrt2 b) = (a - sqrt2 b)/(a^2 - 2 b^2); the denominator is
        # in K(i) and vanishes only when a = b = 0 since sqrt2 is not in K(i).
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in K(i)(sqrt2)")
        den = (self.base * self.base - 2 * (self.root2 * self.root2)).inverse()
        return Root2Ext(self.base * den, -self.root2 * den)

    def is_zero(self) -> bool:
        return self.base.is_zero() and self.root2.is_zero()

    def to_quintic(self) -> ComplexQuintic:
        """Project onto K(i); valid only when the sqrt2 part vanishes."""
        if not self.root2.is_zero():
            raise ValueError("value has a nonzero sqrt2 component")
        return self.base

    def to_complex(self) -> complex:
        return self.base.to_complex() + math.sqrt(2.0) * self.root2.to_complex()

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.base == o.base and self.root2 == o.root2

    def __hash__(self):
        if self.root2.is_zero():
            return hash(self.base)
        return hash((hash(self.base), hash(self.root2)))

    def __repr__(self):
        return f"Root2Ext({self.base!r}, {self.root2!r})"


# --- named constants ------------------------------------------------------

#: coordinate tables for s_n = 2 sin(2 pi n/5) and c_n = 2 cos(2 pi n/5);
#: s2 = c1*s1 and c1 = (sqrt5 - 1)/2, c2 = -(sqrt5 + 1)/2.
_S_COORDS = {
    0: (0, 0, 0, 0),
    1: (0, 0, 1, 0),
    2: (0, 0, Fraction(-1, 2), Fraction(1, 2)),
    3: (0, 0, Fraction(1, 2), Fraction(-1, 2)),
    4: (0, 0, -1, 0),
}
_C_COORDS = {
    0: (2, 0, 0, 0),
    1: (Fraction(-1, 2), Fraction(1, 2), 0, 0),
    2: (Fraction(-1, 2), Fraction(-1, 2), 0, 0),
    3: (Fraction(-1, 2), Fraction(-1, 2), 0, 0),
    4: (Fraction(-1, 2), Fraction(1, 2), 0, 0),
}


def s_const(n: int) -> RealQuintic:
    """Exact 2*sin(2*pi*n/5), index taken mod 5."""
    return RealQuintic(*_S_COORDS[n % 5])


def c_const(n: int) -> RealQuintic:
    """Exact 2*cos(2*pi*n/5), index taken mod 5."""
    return RealQuintic(*_C_COORDS[n % 5])


def q_const(n: int) -> ComplexQuintic:
    """Exact primitive fifth root of unity power exp(2*pi*i*n/5)."""
    half = Fraction(1, 2)
    return ComplexQuintic(half * c_const(n), half * s_const(n))


def sqrt5() -> RealQuintic:
    return RealQuintic(0, 1)


def constant(kind: str, n: int) -> ComplexQuintic:
    """Uniform accessor for the exact constants, lifted into K(i)."""
    if kind == "s":
        return ComplexQuintic(s_const(n))
    if kind == "c":
        return ComplexQuintic(c_const(n))
    if kind == "q":
        return q_const(n)
    raise ValueError(f"unknown constant kind {kind!r}")


ONE = ComplexQuintic(1)
ZERO = ComplexQuintic(0)
I_UNIT = ComplexQuintic(0, 1)
SQRT2 = Root2Ext(0, 1)
INV_SQRT2 = Root2Ext(0, Fraction(1, 2))


# --- exact square roots ----------------------------------------------------


def sqrt_rational(x: Fraction) -> Fraction | None:
    """Nonnegative rational square root of x, or None if x is not a square."""
    if x < 0:
        return None
    p, q = x.numerator, x.denominator
    rp, rq = math.isqrt(p), math.isqrt(q)
    if rp * rp != p or rq * rq != q:
        return None
    return Fraction(rp, rq)


def _sqrt_q5(a: Fraction, b: Fraction) -> tuple[Fraction, Fraction] | None:
    """Square root of a + b*sqrt5 inside Q(sqrt5), if one exists."""
    if b == 0:
        r = sqrt_rational(a)
        if r is not None:
            return (r, Fraction(0))
        r = sqrt_rational(a / 5)
        if r is not None:
            return (Fraction(0), r)
        return None
    disc = sqrt_rational(a * a - 5 * b * b)
    if disc is None:
        return None
    for t in ((a + disc) / 2, (a - disc) / 2):
        x0 = sqrt_rational(t)
        if x0 is not None and x0 != 0:
            x1 = b / (2 * x0)
            if x0 * x0 + 5 * x1 * x1 == a and 2 * x0 * x1 == b:
                return (x0, x1)
    return None


def sqrt_in_k(x: RealQuintic) -> RealQuintic | None:
    """Exact square root of x inside K, if one exists.

    Writes a candidate root as alpha + beta*s1 with alpha, beta in Q(sqrt5)
    and reduces the two resulting equations to square roots in Q(sqrt5).
    Returns the root with nonnegative float embedding, or None.
    """
    w_a, w_b, v_a, v_b = x.a, x.b, x.c, x.d  # x = W + V*s1, W,V in Q(sqrt5)
    candidates: list[RealQuintic] = []
    if v_a == 0 and v_b == 0:
        r = _sqrt_q5(w_a, w_b)
        if r is not None:
            candidates.append(RealQuintic(r[0], r[1]))
        # also try beta*s1 with beta^2 = x / s1^2
        s1sq_inv = RealQuintic(Fraction(5, 2), Fraction(1, 2)).inverse()
        y = x * s1sq_inv
        if y.c == 0 and y.d == 0:
            r = _sqrt_q5(y.a, y.b)
            if r is not None:
                candidates.append(RealQuintic(0, 0, r[0], r[1]))
    else:
        # alpha^2 + beta^2 s1^2 = W and 2 alpha beta = V; eliminate alpha.
        w = RealQuintic(w_a, w_b)
        v = RealQuintic(v_a, v_b)
        s1sq = RealQuintic(Fraction(5, 2), Fraction(1, 2))
        delta = w * w - s1sq * v * v
        droot = _sqrt_q5(delta.a, delta.b) if (delta.c == 0 and delta.d == 0) else None
        if droot is not None:
            droot_el = RealQuintic(droot[0], droot[1])
            for sign in (1, -1):
                gamma = (w + sign * droot_el) / (2 * s1sq)
                if gamma.c != 0 or gamma.d != 0:
                    continue
                beta = _sqrt_q5(gamma.a, gamma.b)
                if beta is None or (beta[0] == 0 and beta[1] == 0):
                    continue
                beta_el = RealQuintic(beta[0], beta[1])
                alpha = v / (2 * beta_el)
                candidates.append(RealQuintic(alpha.a, alpha.b, beta_el.a, beta_el.b))
    for r in candidates:
        if r * r == x:
            return r if r.to_float() >= 0 else -r
    return None


# --- identity suite ---------------------------------------------------------


def trig_table(flip: str | None = None) -> dict[str, RealQuintic]:
    """The four nonzero generators s1, s2, c1, c2, optionally with one sign
    flipped (a testing hook for mutation checks)."""
    table = {"s1": s_const(1), "s2": s_const(2), "c1": c_const(1), "c2": c_const(2)}
    if flip is not None:
        if flip not in table:
            raise ValueError(f"unknown constant {flip!r}; expected one of {sorted(table)}")
        table[flip] = -table[flip]
    return table


def identity_suite(flip: str | None = None) -> list[tuple[str, bool]]:
    """Evaluate the nine defining identities of the constants, exactly.

    Every check is an ``is_zero`` of an exact difference; flipping the sign
    of any single generator must break at least one of them.
    """
    t = trig_table(flip)
    s1, s2, c1, c2 = t["s1"], t["s2"], t["c1"], t["c2"]
    s = {0: RealQuintic(0), 1: s1, 2: s2, 3: -s2, 4: -s1}
    c = {0: RealQuintic(2), 1: c1, 2: c2, 3: c2, 4: c1}
    half = Fraction(1, 2)
    q = {n: ComplexQuintic(half * c[n], half * s[n]) for n in range(5)}
    q_sum = q[0] + q[1] + q[2] + q[3] + q[4]
    q5 = q[1] * q[1] * q[1] * q[1] * q[1]
    checks = [
        ("s1*s2 = sqrt5", (s1 * s2 - sqrt5()).is_zero()),
        ("s2 = c1*s1", (s2 - c1 * s1).is_zero()),
        ("c1*c2 = -1", (c1 * c2 + 1).is_zero()),
        ("c1 + c2 = -1", (c1 + c2 + 1).is_zero()),
        ("s1^2 = 2 - c2", (s1 * s1 - (2 - c2)).is_zero()),
        ("s2^2 = 2 - c1", (s2 * s2 - (2 - c1)).is_zero()),
        ("sum q^n = 0", q_sum.is_zero()),
        ("q^5 = 1", (q5 - 1).is_zero()),
        ("2(2 - s1) = (s2 + c2)^2", (2 * (2 - s1) - (s2 + c2) * (s2 + c2)).is_zero()),
    ]
    return checks


# --- serialization ----------------------------------------------------------


def _frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def coord_strings(x: ComplexQuintic) -> list[str]:
    """Eight 'p/q' strings: re coords (1, sqrt5, s1, sqrt5*s1), then im."""
    return [_frac_str(v) for v in (*x.re.coords, *x.im.coords)]
