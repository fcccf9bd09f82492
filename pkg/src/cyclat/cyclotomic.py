"""Cyclotomic polynomials and their exact arithmetic companions.

Phi_m is computed by the classical induction: divide x^m - 1 by the product
of Phi_d over the proper divisors d of m.  Values of Phi_m at 1, the signed
resultants R(Phi_m, Phi_n) in closed form (Apostol), and norms of elements of
Z[e(1/m)] (as resultants against Phi_m) complete the toolkit.  Everything is
exact; roots of unity never appear as floating point.
"""

from __future__ import annotations

from functools import lru_cache
from math import isqrt

from .errors import PreconditionViolated
from .polyz import ONE, ZERO, UniPoly, divrem, resultant


def _require_positive(m: int) -> None:
    if m < 1:
        raise PreconditionViolated(f"argument must be a positive integer, got {m}")


def factorize(m: int) -> list[tuple[int, int]]:
    """Prime factorization of m as sorted (p, exponent) pairs; trial division."""
    _require_positive(m)
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if m > 1:
        out.append((m, 1))
    return out


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    for d in range(3, isqrt(p) + 1, 2):
        if p % d == 0:
            return False
    return True


def prime_power(m: int) -> tuple[int, int] | None:
    """(p, k) with m = p^k, k >= 1, if m is a prime power; None otherwise."""
    if m < 2:
        return None
    fac = factorize(m)
    if len(fac) == 1:
        return fac[0]
    return None


def totient(m: int) -> int:
    """Euler phi via the prime factorization of m."""
    _require_positive(m)
    out = 1
    for p, e in factorize(m):
        out *= (p - 1) * p ** (e - 1)
    return out


def divisors(m: int) -> list[int]:
    _require_positive(m)
    out = [1]
    for p, e in factorize(m):
        out = [d * p**i for d in out for i in range(e + 1)]
    return sorted(out)


@lru_cache(maxsize=None)
def cyclotomic(m: int) -> UniPoly:
    """The m-th cyclotomic polynomial, cached for the life of the process."""
    _require_positive(m)
    if m == 1:
        return UniPoly(-1, 1)
    numerator = UniPoly(*((-1,) + (0,) * (m - 1) + (1,)))  # x^m - 1
    phi = numerator
    for d in divisors(m):
        if d == m:
            continue
        phi, rem = divrem(phi, cyclotomic(d))
        assert rem.is_zero()
    assert phi.is_unitary and phi.degree == totient(m)
    return phi


def value_at_one(m: int) -> int:
    """Phi_m(1): 0 for m = 1, p for m = p^k, 1 otherwise."""
    _require_positive(m)
    if m == 1:
        return 0
    pk = prime_power(m)
    if pk is not None:
        return pk[0]
    return 1


def cyclo_resultant(m: int, n: int) -> int:
    """Signed resultant R(Phi_m, Phi_n) in closed form.

    Zero on the diagonal; 1 when neither m/n nor n/m is a prime power;
    p^phi(smaller index) when one divides the other with prime-power ratio;
    the lone antisymmetric pair is R(Phi_1, Phi_2) = 2 = -R(Phi_2, Phi_1).
    """
    _require_positive(m)
    _require_positive(n)
    if m == n:
        return 0
    if {m, n} == {1, 2}:
        return 2 if m == 1 else -2
    if m % n == 0 and prime_power(m // n) is not None:
        return prime_power(m // n)[0] ** totient(n)
    if n % m == 0 and prime_power(n // m) is not None:
        return prime_power(n // m)[0] ** totient(m)
    return 1


def norm(m: int, g: UniPoly) -> int:
    """Norm of g(e(1/m)) in Z[e(1/m)]: the product of g over the order-m roots.

    Computed exactly as R(Phi_m, g); the norm of the zero element is 0.
    """
    _require_positive(m)
    if g.is_zero():
        return 0
    return resultant(cyclotomic(m), g)


def x_power_mod_phi(m: int) -> tuple[UniPoly, ...]:
    """Table of x^j mod Phi_m for 0 <= j < m (x^m is 1 again)."""
    return _x_power_mod_phi(m)


@lru_cache(maxsize=None)
def _x_power_mod_phi(m: int) -> tuple[UniPoly, ...]:
    _require_positive(m)
    phi = cyclotomic(m)
    deg = phi.degree
    out = [ONE]
    cur = ONE
    for _ in range(m - 1):
        cur = cur.shift(1)
        if cur.degree == deg:
            cur = cur - cur.leading * phi
        out.append(cur)
    return tuple(out)


def reduce_mod_phi(m: int, t: UniPoly) -> UniPoly:
    """t mod Phi_m."""
    if t.is_zero():
        return ZERO
    return divrem(t, cyclotomic(m))[1]
