"""Pure-Python integer-matrix kernels.

These three routines are the hot loops of the whole library: exact
determinants of Sylvester matrices, column-style Hermite reduction of lattice
generators, and back-substitution through a triangular lattice basis.  A
compiled twin with the same signatures lives in ``_ckernels.pyx``; callers
import whichever ``cyclat._kernels`` selected.

Matrix conventions: a matrix is a list of rows, each a list of ints.  Column
vectors handed back by ``hnf_columns`` are plain lists indexed by row.
"""

from __future__ import annotations


def bareiss_det(rows: list[list[int]]) -> int:
    """Determinant of a square integer matrix by fraction-free elimination.

    All intermediate values are minors of the input, so every division is
    exact and the arithmetic never leaves the integers.
    """
    n = len(rows)
    if n == 0:
        return 1
    a = [row[:] for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            head = ri[k]
            if head == 0 and prev == 1:
                continue
            for j in range(k + 1, n):
                ri[j] = (pivot * ri[j] - head * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with g = gcd(a,b) = s*a + t*b, g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def hnf_columns(rows: list[list[int]], want_transform: bool = True):
    """Column Hermite normal form of a nonsingular square integer matrix.

    Returns ``(h, u)``: ``h[i]`` is the basis column whose pivot (lowest
    nonzero position counted from the top row 0) sits at row i, with positive
    pivot and the entries above it reduced into [0, pivot of their row);
    ``u[i]`` expresses ``h[i]`` as an integer combination of the input
    columns.  Returns None when the matrix is singular.  ``u`` is None when
    ``want_transform`` is false.
    """
    n = len(rows)
    cols = [[rows[r][c] for r in range(n)] for c in range(n)]
    ucols = None
    if want_transform:
        ucols = [[1 if i == c else 0 for i in range(n)] for c in range(n)]

    h: list = [None] * n
    u: list = [None] * n
    active = list(range(n))
    for r in range(n - 1, -1, -1):
        nz = [c for c in active if cols[c][r] != 0]
        if not nz:
            return None
        piv = nz[0]
        for c in nz[1:]:
            a, b = cols[piv][r], cols[c][r]
            if a != 0 and b % a == 0:
                q = b // a
                _col_submul(cols[c], cols[piv], q, r)
                if ucols is not None:
                    _col_submul(ucols[c], ucols[piv], q, n - 1)
                continue
            g, s, t = _ext_gcd(a, b)
            af, bf = a // g, b // g
            cp, cc = cols[piv], cols[c]
            for i in range(r + 1):
                x, y = cp[i], cc[i]
                cp[i] = s * x + t * y
                cc[i] = af * y - bf * x
            if ucols is not None:
                up, uc = ucols[piv], ucols[c]
                for i in range(n):
                    x, y = up[i], uc[i]
                    up[i] = s * x + t * y
                    uc[i] = af * y - bf * x
        if cols[piv][r] < 0:
            cols[piv] = [-x for x in cols[piv]]
            if ucols is not None:
                ucols[piv] = [-x for x in ucols[piv]]
        h[r] = cols[piv]
        if ucols is not None:
            u[r] = ucols[piv]
        active.remove(piv)

    # Reduce entries above each pivot into [0, pivot of that row).
    for i in range(1, n):
        hi = h[i]
        ui = u[i] if want_transform else None
        for r in range(i - 1, -1, -1):
            d = h[r][r]
            q = hi[r] // d
            if q:
                _col_submul(hi, h[r], q, r)
                if ui is not None:
                    _col_submul(ui, u[r], q, n - 1)
    return h, (u if want_transform else None)


def _col_submul(dst: list[int], src: list[int], q: int, top: int) -> None:
    for i in range(top + 1):
        if src[i]:
            dst[i] -= q * src[i]


def lattice_reduce(h: list[list[int]], t: list[int]) -> tuple[list[int], list[int]]:
    """Back-substitute t through a triangular basis h (as from hnf_columns).

    Returns ``(y, r)`` with ``t = sum_i y[i]*h[i] + r`` and every entry
    ``r[i]`` reduced into [0, h[i][i]); r is the canonical representative of
    t's coset, so t lies in the lattice iff r is all zeros.
    """
    n = len(h)
    rem = list(t)
    y = [0] * n
    for i in range(n - 1, -1, -1):
        ri = rem[i]
        if ri == 0:
            continue
        q = ri // h[i][i]
        if q:
            y[i] = q
            hi = h[i]
            for j in range(i + 1):
                if hi[j]:
                    rem[j] -= q * hi[j]
    return y, rem
