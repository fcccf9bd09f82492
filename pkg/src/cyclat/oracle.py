"""Brute-force automorphism group of (H_M, h_M, S) and exact certifiers.

An automorphism is multiplication by a polynomial c with |c(lambda)| = 1 at
every eigenvalue.  At a primitive m-th root of unity the only algebraic
integers on the unit circle are the signed roots of unity, so c restricts on
each cyclotomic factor to some eps_m * x^(a_m); the group is enumerated as
the set of tuples ((eps_m, a_m))_m whose congruence system

    c  =  eps_m * x^(a_m)  (mod Phi_m)      for every m in M

admits an integer solution.  Solvability of each full system is decided
exactly through a Hermite basis of the joint reduction lattice; a pairwise
compatibility test (a necessary condition, Lemma-2.3-style membership on each
cyclotomic pair) prunes the enumeration but is never trusted as sufficient.

Tuples are canonicalized: for even m the sign is absorbed into the exponent
(x^(m/2) is -1 mod Phi_m), so eps_m = +1; for odd m both signs are genuine.
"""

from __future__ import annotations

import dataclasses
from functools import lru_cache
from math import lcm

from .cyclotomic import cyclotomic, reduce_mod_phi, totient, x_power_mod_phi
from .errors import EmptySet, InternalError, KeyMismatch, PreconditionViolated, ResourceLimit
from .graph import l_exponent
from .polyz import ONE, UniPoly, divrem
from .zxlattice import ideal_lattice, residue
from ._kernels import hnf_columns, lattice_reduce

Candidate = tuple[int, int]  # (eps, exponent)
Member = tuple[tuple[int, int, int], ...]  # ((m, eps_m, a_m), ...) with m descending


@dataclasses.dataclass(frozen=True)
class AutGroup:
    members: tuple[Member, ...]
    order: int
    representatives: dict[Member, UniPoly]


def _sorted_set(members) -> tuple[int, ...]:
    listed = list(members)
    elems = sorted(set(listed))
    if not elems:
        raise EmptySet("M must be nonempty")
    if elems[0] < 1:
        raise PreconditionViolated("all elements of M must be >= 1")
    if len(elems) != len(listed):
        raise PreconditionViolated("M must not contain duplicates")
    return tuple(elems)


def certify_automorphism(M, c: UniPoly) -> bool:
    """Exact check that |c(lambda)| = 1 at every eigenvalue of order in M.

    Per order m this is c(x) * c(x^(m-1) mod x^m - 1) = 1 (mod Phi_m): the
    second factor is c at the inverse root, i.e. the complex conjugate value.
    """
    ms = _sorted_set(M)
    for m in ms:
        inv = [0] * m
        for j, coef in enumerate(c.coeffs):
            if coef:
                inv[(m - j % m) % m] += coef
        conj = UniPoly(*inv)
        if reduce_mod_phi(m, c * conj) != ONE:
            return False
    return True


def is_pm_power(M, c: UniPoly) -> tuple[int, int] | None:
    """First (eps, k) with c = eps * x^k mod prod Phi_m, scanning k upward.

    x^lcm(M) is 1 modulo every factor, so k < lcm(M) is exhaustive.
    """
    ms = _sorted_set(M)
    span = lcm(*ms)
    pos = {m: x_power_mod_phi(m) for m in ms}
    neg = {m: tuple(-t for t in pos[m]) for m in ms}
    res = {m: reduce_mod_phi(m, c) for m in ms}
    for k in range(span):
        for eps, table in ((1, pos), (-1, neg)):
            if all(res[m] == table[m][k % m] for m in ms):
                return eps, k
    return None


class _ReductionSystem:
    """Joint reduction of Z[x]_{< N} into the product of the Z[x]/(Phi_m).

    Columns of the system matrix are the residue stacks of the monomials; a
    Hermite basis of its column lattice decides solvability of any residue
    target by back-substitution, and the recorded transform rebuilds the
    solving polynomial.
    """

    def __init__(self, ms: tuple[int, ...]):
        self.ms = ms
        self.blocks = {m: totient(m) for m in ms}
        self.size = sum(self.blocks.values())
        rows: list[list[int]] = [[0] * self.size for _ in range(self.size)]
        base = 0
        for m in ms:
            table = x_power_mod_phi(m)
            for col in range(self.size):
                for r, coef in enumerate(table[col % m].coeffs):
                    rows[base + r][col] = coef
            base += self.blocks[m]
        reduced = hnf_columns(rows)
        if reduced is None:
            raise InternalError("joint reduction matrix is singular")
        self.hcols, self.ucols = reduced

    def stack(self, targets: dict[int, UniPoly]) -> list[int]:
        vec: list[int] = []
        for m in self.ms:
            coeffs = targets[m].coeffs
            vec.extend(coeffs)
            vec.extend([0] * (self.blocks[m] - len(coeffs)))
        return vec

    def solve_vector(self, vec: list[int]) -> UniPoly | None:
        y, rem = lattice_reduce(self.hcols, vec)
        if any(rem):
            return None
        coeffs = [0] * self.size
        for yi, ucol in zip(y, self.ucols):
            if yi:
                for r, u in enumerate(ucol):
                    if u:
                        coeffs[r] += yi * u
        return UniPoly(*coeffs)


@lru_cache(maxsize=None)
def _reduction_system(ms: tuple[int, ...]) -> _ReductionSystem:
    return _ReductionSystem(ms)


def solve_congruences(M, targets: dict[int, UniPoly]) -> UniPoly | None:
    """Exact c with deg c < sum phi(m) and c = targets[m] mod Phi_m for all m,
    or None when the system has no integer solution."""
    ms = _sorted_set(M)
    if set(targets) != set(ms):
        raise KeyMismatch(f"targets keyed by {sorted(targets)} instead of {list(ms)}")
    for m in ms:
        if targets[m].degree >= totient(m):
            raise PreconditionViolated(f"target for m={m} must have degree < phi(m)")
    system = _reduction_system(ms)
    return system.solve_vector(system.stack(targets))


@lru_cache(maxsize=None)
def _candidates(m: int) -> tuple[Candidate, ...]:
    """Canonical residue candidates at order m: x^a for even m, +-x^a for odd."""
    if m % 2 == 0:
        return tuple((1, a) for a in range(m))
    out = []
    for a in range(m):
        out.append((1, a))
        out.append((-1, a))
    return tuple(out)


def _candidate_residue(m: int, cand: Candidate) -> UniPoly:
    eps, a = cand
    pw = x_power_mod_phi(m)[a]
    return pw if eps == 1 else -pw


@lru_cache(maxsize=None)
def _pair_tables(hi: int, lo: int):
    """Canonical coset keys of every candidate of hi and of lo inside the
    ideal lattice of (Phi_hi, Phi_lo); equal keys = compatible pair."""
    f, g = cyclotomic(hi), cyclotomic(lo)
    lat = ideal_lattice(f, g)
    fg = f * g

    def canon(cand: Candidate):
        eps, a = cand
        t = UniPoly(*((0,) * a + (eps,)))
        if t.degree > lat.rank - 1:
            t = divrem(t, fg)[1]
        return residue(lat, t).coeffs

    return (
        {cand: canon(cand) for cand in _candidates(hi)},
        {cand: canon(cand) for cand in _candidates(lo)},
    )


def _pair_compatible(m_hi: int, cand_hi: Candidate, m_lo: int, cand_lo: Candidate) -> bool:
    keys_hi, keys_lo = _pair_tables(m_hi, m_lo)
    return keys_hi[cand_hi] == keys_lo[cand_lo]


def _canonical_coordinate(m: int, eps: int, a: int) -> Candidate:
    a %= m
    if eps == -1 and m % 2 == 0:
        return 1, (a + m // 2) % m
    return eps, a


def _pm_power_count(M) -> int:
    # |{+-h^k}| per the counting remark: lcm(M) iff l(m,2) is one constant
    # l >= 1 across M, else 2*lcm(M).
    ms = _sorted_set(M)
    exps = {l_exponent(m, 2) for m in ms}
    span = lcm(*ms)
    if len(exps) == 1 and exps.pop() >= 1:
        return span
    return 2 * span


def _power_members(ms_desc: tuple[int, ...]) -> set[Member]:
    span = lcm(*ms_desc)
    out: set[Member] = set()
    for eps in (1, -1):
        for k in range(span):
            out.add(tuple((m, *_canonical_coordinate(m, eps, k)) for m in ms_desc))
    return out


def aut_group(M, *, max_lcm: int = 120, max_tuples: int = 10**6, use_prefilter: bool = True) -> AutGroup:
    """Full automorphism group by exact enumeration.

    Every candidate tuple surviving the pairwise prefilter is decided by the
    global congruence system; the prefilter is only ever used to skip tuples
    (soundness is asserted separately in the test suite by running with
    use_prefilter=False).  Closure, inverses and containment of the power
    subgroup are verified on the result before it is returned.
    """
    ms = _sorted_set(M)
    span = lcm(*ms)
    if span > max_lcm:
        raise ResourceLimit(f"lcm(M) = {span} exceeds the oracle bound {max_lcm}")
    space = 1
    for m in ms:
        space *= len(_candidates(m))
    if space > max_tuples:
        raise ResourceLimit(f"candidate space {space} exceeds the oracle bound {max_tuples}")

    ms_desc = tuple(reversed(ms))
    system = _reduction_system(ms)
    members: list[Member] = []
    representatives: dict[Member, UniPoly] = {}
    chosen: list[Candidate] = []

    def dfs(level: int) -> None:
        if level == len(ms_desc):
            targets = {m: _candidate_residue(m, cand) for m, cand in zip(ms_desc, chosen)}
            rep = system.solve_vector(system.stack(targets))
            if rep is not None:
                member = tuple((m, eps, a) for m, (eps, a) in zip(ms_desc, chosen))
                members.append(member)
                representatives[member] = rep
            return
        m = ms_desc[level]
        for cand in _candidates(m):
            if use_prefilter and any(
                not _pair_compatible(ms_desc[j], chosen[j], m, cand) for j in range(level)
            ):
                continue
            chosen.append(cand)
            dfs(level + 1)
            chosen.pop()

    dfs(0)
    group = AutGroup(tuple(members), len(members), representatives)
    _assert_group_axioms(ms_desc, group)
    return group


def _assert_group_axioms(ms_desc: tuple[int, ...], group: AutGroup) -> None:
    index = set(group.members)
    if len(index) != group.order:
        raise InternalError("duplicate member tuples")
    for t1 in group.members:
        inv = tuple((m, *_canonical_coordinate(m, eps, -a)) for m, eps, a in t1)
        if inv not in index:
            raise InternalError(f"inverse of {t1} missing")
        for t2 in group.members:
            prod = tuple(
                (m, *_canonical_coordinate(m, e1 * e2, a1 + a2))
                for (m, e1, a1), (_, e2, a2) in zip(t1, t2)
            )
            if prod not in index:
                raise InternalError(f"product of {t1} and {t2} missing")
    powers = _power_members(ms_desc)
    if not powers <= index:
        raise InternalError("power subgroup not contained in the computed group")
    if len(powers) != _pm_power_count(ms_desc):
        raise InternalError("power subgroup has unexpected size")
    if group.order % len(powers) != 0:
        raise InternalError("group order is not a multiple of the power subgroup order")
