"""Truncated ideal lattices (f,g) ∩ Z[x]_{<= m+n-1} over the integers.

For unitary f, g with nonzero resultant, the lattice spanned by
f, xf, ..., x^{n-1}f, g, xg, ..., x^{m-1}g has a unique triangular basis
h^(0), ..., h^(m+n-1) with deg h^(i) = i, positive leading coefficients that
form a divisibility chain, trailing ones from min(deg f, deg g) on, and
diagonal product |R(f,g)|.  Because those facts are theorems rather than
properties of generic Hermite reduction, the constructor re-checks every one
of them and raises InternalError on violation.

Membership of a polynomial t comes with a Bezout-style certificate
t = a*f + b*g with deg a < deg g and deg b < deg f.
"""

from __future__ import annotations

import dataclasses

from ._kernels import hnf_columns, lattice_reduce
from .cyclotomic import is_prime
from .errors import DegreeBound, InternalError, PreconditionViolated, ResultantZero
from .polyz import ONE, ZERO, UniPoly, resultant


@dataclasses.dataclass(frozen=True)
class IdealLattice:
    f: UniPoly
    g: UniPoly
    basis: tuple[UniPoly, ...]
    transform: tuple[tuple[UniPoly, UniPoly], ...]
    res: int

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(h.leading for h in self.basis)

    @property
    def rank(self) -> int:
        return len(self.basis)


def _require_unitary(f: UniPoly, g: UniPoly) -> None:
    if not f.is_unitary or not g.is_unitary:
        raise PreconditionViolated("both generators must be unitary")


def _generator_rows(f: UniPoly, g: UniPoly) -> list[list[int]]:
    """Columns f, xf, ..., x^{n-1}f, g, ..., x^{m-1}g as a row-major matrix."""
    m, n = f.degree, g.degree
    size = m + n
    cols = []
    for j in range(n):
        fc = f.shift(j).coeffs
        cols.append(list(fc) + [0] * (size - len(fc)))
    for i in range(m):
        gc = g.shift(i).coeffs
        cols.append(list(gc) + [0] * (size - len(gc)))
    return [[cols[c][r] for c in range(size)] for r in range(size)]


def ideal_lattice(f: UniPoly, g: UniPoly) -> IdealLattice:
    """Triangular basis with transform of (f,g) ∩ Z[x]_{<= deg f + deg g - 1}."""
    _require_unitary(f, g)
    m, n = f.degree, g.degree
    if m + n == 0:
        return IdealLattice(f, g, (), (), 1)
    res = resultant(f, g)
    if res == 0:
        raise ResultantZero(f"R(f,g) = 0 for f={f!r}, g={g!r}")
    reduced = hnf_columns(_generator_rows(f, g))
    if reduced is None:
        raise InternalError("lattice not full rank although R(f,g) != 0")
    hcols, ucols = reduced
    basis = tuple(UniPoly(*col) for col in hcols)
    transform = tuple(
        (UniPoly(*col[:n]), UniPoly(*col[n:])) for col in ucols
    )
    lat = IdealLattice(f, g, basis, transform, res)
    _check_invariants(lat)
    return lat


def _check_invariants(lat: IdealLattice) -> None:
    f, g, basis = lat.f, lat.g, lat.basis
    m, n = f.degree, g.degree
    diag = lat.diagonal
    for i, h in enumerate(basis):
        if h.degree != i or diag[i] <= 0:
            raise InternalError(f"basis element {i} has wrong degree or sign: {h!r}")
    for i in range(len(basis) - 1):
        if diag[i] % diag[i + 1] != 0:
            raise InternalError(f"divisibility chain broken at {i}: {diag}")
    for i in range(min(m, n), len(basis)):
        if diag[i] != 1:
            raise InternalError(f"diagonal not 1 from index min(deg f, deg g): {diag}")
    prod = 1
    for d in diag:
        prod *= d
    if prod != abs(lat.res):
        raise InternalError(f"diagonal product {prod} != |R(f,g)| = {abs(lat.res)}")
    for i, (a, b) in enumerate(lat.transform):
        if a.degree > n - 1 or b.degree > m - 1:
            raise InternalError(f"transform degrees out of bounds at {i}")
        if a * f + b * g != basis[i]:
            raise InternalError(f"basis element {i} does not reproduce from transform")


def _hcols(lat: IdealLattice) -> list[list[int]]:
    size = lat.rank
    cols = []
    for h in lat.basis:
        col = list(h.coeffs)
        col += [0] * (size - len(col))
        cols.append(col)
    return cols


def contains(lat: IdealLattice, t: UniPoly) -> tuple[UniPoly, UniPoly] | None:
    """Certificate (a, b) with t = a*f + b*g if t lies in the lattice, else None."""
    size = lat.rank
    if t.degree > size - 1:
        raise DegreeBound(f"deg t = {t.degree} exceeds lattice bound {size - 1}")
    if t.is_zero():
        return ZERO, ZERO
    tvec = list(t.coeffs) + [0] * (size - len(t.coeffs))
    y, rem = lattice_reduce(_hcols(lat), tvec)
    if any(rem):
        return None
    a = ZERO
    b = ZERO
    for yi, (ai, bi) in zip(y, lat.transform):
        if yi:
            a = a + yi * ai
            b = b + yi * bi
    return a, b


def residue(lat: IdealLattice, t: UniPoly) -> UniPoly:
    """Canonical representative of t's coset modulo the lattice.

    Coefficientwise in [0, diagonal) after back-substitution; zero iff t is a
    member.  Callers reduce t below the degree bound first.
    """
    size = lat.rank
    if t.degree > size - 1:
        raise DegreeBound(f"deg t = {t.degree} exceeds lattice bound {size - 1}")
    tvec = list(t.coeffs) + [0] * (size - len(t.coeffs))
    _, rem = lattice_reduce(_hcols(lat), tvec)
    return UniPoly(*rem)


def bezout_one(f: UniPoly, g: UniPoly) -> tuple[UniPoly, UniPoly] | None:
    """a1, a2 with 1 = a1*f + a2*g when |R(f,g)| = 1; None otherwise."""
    _require_unitary(f, g)
    if f.degree + g.degree == 0:
        return ONE, ZERO
    lat = ideal_lattice(f, g)
    if abs(lat.res) != 1:
        return None
    cert = contains(lat, ONE)
    if cert is None:
        raise InternalError("|R(f,g)| = 1 but 1 not found in the lattice")
    return cert


def equals_p_ideal(f: UniPoly, g: UniPoly, p: int) -> bool:
    """Whether (f,g) = (p,g), by |R(f,g)| = p^deg(g) together with p in (f,g)."""
    _require_unitary(f, g)
    if not is_prime(p):
        raise PreconditionViolated(f"{p} is not prime")
    if f.degree < g.degree:
        raise PreconditionViolated("caller must orient deg f >= deg g")
    if f.degree + g.degree == 0:
        return True
    lat = ideal_lattice(f, g)
    if abs(lat.res) != p**g.degree:
        return False
    return contains(lat, UniPoly(p)) is not None


@dataclasses.dataclass(frozen=True)
class SplitLattice:
    """The two monodromy-invariant primitive sublattices of Z[x]/(fg).

    sub_f spans (g)/(fg), the sublattice on which multiplication by x has
    characteristic polynomial f; sub_g spans (f)/(fg).  index is the index of
    their direct sum in Z[x]/(fg); index 1 certifies the splitting
    isomorphism with the product lattice.
    """

    index: int
    sub_f: tuple[UniPoly, ...]
    sub_g: tuple[UniPoly, ...]


def split_lattice(f: UniPoly, g: UniPoly) -> SplitLattice:
    _require_unitary(f, g)
    m, n = f.degree, g.degree
    if m + n == 0:
        return SplitLattice(1, (), ())
    reduced = hnf_columns(_generator_rows(f, g), want_transform=False)
    if reduced is None:
        raise ResultantZero(f"R(f,g) = 0 for f={f!r}, g={g!r}")
    hcols, _ = reduced
    index = 1
    for i, col in enumerate(hcols):
        index *= col[i]
    sub_f = tuple(g.shift(i) for i in range(m))
    sub_g = tuple(f.shift(j) for j in range(n))
    return SplitLattice(index, sub_f, sub_g)
