"""The monodromy graph of a finite set of positive integers.

Vertices are the elements of M.  There is a directed p-edge from m1 to m2
when m1/m2 is a positive power of the prime p and no third element of M sits
between them in divisibility order.  Deleting all p-edges splits the graph
into its p-planes; a plane or edge is "highest" when no p-edge ends at it.
The two structural conditions the decision procedure consumes:

  (T_p): exactly one highest p-plane exists;
  (S_2): deleting all highest 2-edges leaves at most two components.

All partitions are emitted as tuples of sorted vertex tuples, ordered by
smallest member, so output is reproducible.
"""

from __future__ import annotations

import dataclasses
from math import lcm

from .cyclotomic import prime_power
from .errors import DuplicateElement, EmptySet, InternalError, PreconditionViolated

Edge = tuple[int, int, int]  # (source, target, prime label)
Plane = tuple[int, ...]


@dataclasses.dataclass(frozen=True)
class MonodromyGraph:
    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]

    @property
    def lcm(self) -> int:
        return lcm(*self.vertices)


def l_exponent(m: int, p: int) -> int:
    """l(m,p): the exponent of the prime p in m."""
    out = 0
    while m % p == 0:
        m //= p
        out += 1
    return out


def build(members) -> MonodromyGraph:
    """Monodromy graph on the set M: pairwise divisibility scan with
    prime-power ratio test and intermediate-divisor exclusion."""
    elems = list(members)
    if not elems:
        raise EmptySet("M must be nonempty")
    seen = set()
    for m in elems:
        if m in seen:
            raise DuplicateElement(f"duplicate element {m}")
        seen.add(m)
    if any(m < 1 for m in elems):
        raise PreconditionViolated("all elements of M must be >= 1")
    vertices = tuple(sorted(seen))
    edges = []
    for m1 in vertices:
        for m2 in vertices:
            if m1 == m2 or m1 % m2 != 0:
                continue
            pk = prime_power(m1 // m2)
            if pk is None:
                continue
            if any(m3 not in (m1, m2) and m3 % m2 == 0 and m1 % m3 == 0 for m3 in vertices):
                continue
            edges.append((m1, m2, pk[0]))
    return MonodromyGraph(vertices, tuple(sorted(edges)))


def _partition(vertices, edge_pairs) -> tuple[Plane, ...]:
    """Connected components (direction ignored), sorted by smallest member."""
    parent = {v: v for v in vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a, b in edge_pairs:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    groups: dict[int, list[int]] = {}
    for v in vertices:
        groups.setdefault(find(v), []).append(v)
    return tuple(sorted((tuple(sorted(g)) for g in groups.values()), key=lambda t: t[0]))


def components(graph: MonodromyGraph) -> tuple[Plane, ...]:
    """Connected components of the whole graph."""
    return _partition(graph.vertices, [(a, b) for a, b, _ in graph.edges])


def p_planes(graph: MonodromyGraph, p: int) -> tuple[Plane, ...]:
    """Components after deleting all p-edges."""
    return _partition(graph.vertices, [(a, b) for a, b, q in graph.edges if q != p])


def highest(graph: MonodromyGraph, p: int) -> tuple[tuple[Plane, ...], tuple[Edge, ...]]:
    """Highest p-planes (no p-edge ends inside) and highest p-edges
    (p-edges whose source receives no p-edge)."""
    p_targets = {b for _, b, q in graph.edges if q == p}
    planes = tuple(pl for pl in p_planes(graph, p) if not any(v in p_targets for v in pl))
    edges = tuple(e for e in graph.edges if e[2] == p and e[0] not in p_targets)
    return planes, edges


@dataclasses.dataclass(frozen=True)
class QuotientGraph:
    """Directed graph on the p-planes; an edge E1 -> E2 records a p-edge from
    a vertex of E1 to a vertex of E2 (parallel edges collapsed)."""

    planes: tuple[Plane, ...]
    edges: tuple[tuple[int, int], ...]  # indices into planes


def quotient_graph(graph: MonodromyGraph, p: int) -> QuotientGraph:
    planes = p_planes(graph, p)
    where = {v: i for i, pl in enumerate(planes) for v in pl}
    qedges = {(where[a], where[b]) for a, b, q in graph.edges if q == p}
    return QuotientGraph(planes, tuple(sorted(qedges)))


def _reachable(quotient: QuotientGraph, start: int) -> set[int]:
    adj: dict[int, list[int]] = {}
    for a, b in quotient.edges:
        adj.setdefault(a, []).append(b)
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adj.get(v, ()):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def condition_Tp(graph: MonodromyGraph, p: int) -> bool:
    """(T_p): the graph has exactly one highest p-plane.

    Cross-checked against the reformulation on the quotient graph: some
    vertex reaches all others along directed edges.
    """
    planes, _ = highest(graph, p)
    primary = len(planes) == 1
    quot = quotient_graph(graph, p)
    count = len(quot.planes)
    universal = any(len(_reachable(quot, i)) == count for i in range(count))
    if primary != universal:
        raise InternalError(f"(T_{p}) reformulations disagree: {primary} vs {universal}")
    return primary


def condition_S2(graph: MonodromyGraph) -> bool:
    """(S_2): at most two components after deleting all highest 2-edges."""
    _, top_edges = highest(graph, 2)
    cut = set(top_edges)
    remaining = [(a, b) for a, b, q in graph.edges if (a, b, q) not in cut]
    return len(_partition(graph.vertices, remaining)) <= 2


def cut_components(graph: MonodromyGraph) -> tuple[Plane, ...]:
    """Components of the graph with all highest 2-edges deleted."""
    _, top_edges = highest(graph, 2)
    cut = set(top_edges)
    remaining = [(a, b) for a, b, q in graph.edges if (a, b, q) not in cut]
    return _partition(graph.vertices, remaining)


def condition_primes(graph: MonodromyGraph) -> list[int]:
    """Primes that can carry edges at all: the prime divisors of lcm(M).

    For any other prime there are no p-edges, so the p-planes are just the
    components and (T_p) degenerates to connectedness.
    """
    from .cyclotomic import factorize

    return [p for p, _ in factorize(graph.lcm)]


def to_dot(graph: MonodromyGraph) -> str:
    """Deterministic DOT rendering with prime-labelled edges."""
    lines = ["digraph monodromy {"]
    for v in graph.vertices:
        lines.append(f'    "{v}";')
    for a, b, p in graph.edges:
        lines.append(f'    "{a}" -> "{b}" [label="{p}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
