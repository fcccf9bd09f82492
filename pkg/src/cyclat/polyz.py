"""Exact arithmetic on univariate polynomials over the integers.

A polynomial is a dense tuple of arbitrary-precision coefficients starting
with the constant term, trimmed so the highest stored coefficient is nonzero;
the zero polynomial is the empty tuple.  ``UniPoly(-1, 0, 1)`` is x^2 - 1.

The signed resultant follows the classical root-product convention
R(f,g) = lc(f)^deg(g) * lc(g)^deg(f) * prod (a_i - b_j), realized as the
fraction-free determinant of the Sylvester matrix whose first deg(g) columns
hold f and whose last deg(f) columns hold g.
"""

from __future__ import annotations

import dataclasses
import itertools

from ._kernels import bareiss_det
from .errors import PreconditionViolated


@dataclasses.dataclass(init=False, eq=True)
class UniPoly:
    """Integer polynomial in one variable, ascending dense coefficients."""

    coeffs: tuple[int, ...]

    def __init__(self, *coeffs: int):
        end = len(coeffs)
        while end > 0 and coeffs[end - 1] == 0:
            end -= 1
        self.coeffs = tuple(coeffs[:end])

    @classmethod
    def from_coeffs(cls, coeffs) -> UniPoly:
        return cls(*coeffs)

    @classmethod
    def from_text(cls, text: str) -> UniPoly:
        """Parse the shared text format: comma-separated ascending coefficients."""
        parts = text.replace("−", "-").split(",")
        try:
            return cls(*(int(p.strip()) for p in parts))
        except ValueError as exc:
            raise PreconditionViolated(f"bad polynomial text {text!r}: {exc}") from None

    def to_text(self) -> str:
        if not self.coeffs:
            return "0"
        return ",".join(str(c) for c in self.coeffs)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial (standing in for -infinity)."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_unitary(self) -> bool:
        """True iff the leading coefficient is 1 (the paper's "unitary")."""
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other) -> UniPoly:
        other = _coerce(other)
        return UniPoly(*(a + b for a, b in itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=0)))

    __radd__ = __add__

    def __sub__(self, other) -> UniPoly:
        other = _coerce(other)
        return UniPoly(*(a - b for a, b in itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=0)))

    def __rsub__(self, other) -> UniPoly:
        return _coerce(other) - self

    def __neg__(self) -> UniPoly:
        return UniPoly(*(-a for a in self.coeffs))

    def __mul__(self, other) -> UniPoly:
        if isinstance(other, int):
            return UniPoly(*(a * other for a in self.coeffs))
        sc, oc = self.coeffs, other.coeffs
        if not sc or not oc:
            return ZERO
        out = [0] * (len(sc) + len(oc) - 1)
        for i, a in enumerate(sc):
            if a:
                for j, b in enumerate(oc):
                    out[i + j] += a * b
        return UniPoly(*out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> UniPoly:
        if n < 0:
            raise PreconditionViolated("negative polynomial power")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> UniPoly:
        """Multiply by x^k."""
        if self.is_zero():
            return ZERO
        return UniPoly(*((0,) * k + self.coeffs))

    def compose_power(self, p: int) -> UniPoly:
        """Substitute x -> x^p."""
        if self.is_zero():
            return ZERO
        out = [0] * (p * self.degree + 1)
        for i, a in enumerate(self.coeffs):
            out[p * i] = a
        return UniPoly(*out)

    def evaluate(self, x: int) -> int:
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def __repr__(self):
        if not self.coeffs:
            return "UniPoly('0')"
        parts = []
        for i, c in reversed(list(enumerate(self.coeffs))):
            if c == 0:
                continue
            sign = " + " if (c > 0 and parts) else " - " if (c < 0 and parts) else "" if c > 0 else "-"
            term = "" if i == 0 else "x" if i == 1 else f"x^{i}"
            mag = str(abs(c)) if (abs(c) != 1 or i == 0) else ""
            parts.append(sign + mag + term)
        return f"UniPoly('{''.join(parts)}')"


def _coerce(value) -> UniPoly:
    if isinstance(value, UniPoly):
        return value
    if isinstance(value, int):
        return UniPoly(value)
    raise TypeError(f"cannot coerce {type(value).__name__} to UniPoly")


ZERO = UniPoly()
ONE = UniPoly(1)
X = UniPoly(0, 1)


def arith(a: UniPoly, b: UniPoly, kind: str) -> UniPoly:
    """Ring arithmetic dispatch; kind is one of add, sub, mul."""
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    raise PreconditionViolated(f"unknown arith kind {kind!r}")


def divrem(a: UniPoly, b: UniPoly) -> tuple[UniPoly, UniPoly]:
    """Division with remainder by a unitary divisor: a = q*b + r, deg r < deg b.

    Exact over the integers because b is unitary.
    """
    if b.is_zero() or not b.is_unitary:
        raise PreconditionViolated(f"divisor must be unitary and nonzero, got {b!r}")
    db = b.degree
    rem = list(a.coeffs)
    if len(rem) <= db:
        return ZERO, a
    q = [0] * (len(rem) - db)
    bc = b.coeffs
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        q[i - db] = c
        for j in range(db + 1):
            rem[i - db + j] -= c * bc[j]
    return UniPoly(*q), UniPoly(*rem[:db])


def resultant(f: UniPoly, g: UniPoly) -> int:
    """Signed resultant of two nonzero polynomials (Sylvester determinant)."""
    if f.is_zero() or g.is_zero():
        raise PreconditionViolated("resultant of the zero polynomial is undefined")
    m, n = f.degree, g.degree
    if m + n == 0:
        return 1
    fd = f.coeffs[::-1]
    gd = g.coeffs[::-1]
    size = m + n
    rows = []
    for j in range(n):
        rows.append([0] * j + list(fd) + [0] * (n - 1 - j))
    for i in range(m):
        rows.append([0] * i + list(gd) + [0] * (m - 1 - i))
    assert all(len(r) == size for r in rows)
    return bareiss_det(rows)
