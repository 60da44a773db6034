"""Double-star containment.

An edge ``uv`` hosts ``S_{a,b}`` with ``u`` carrying the ``a`` leaves iff

    d(u) - 1 >= a,  d(v) - 1 >= b,  (d(u) - 1) + (d(v) - 1) - |N(u) & N(v)| >= a + b.

Exclusive neighbours of each centre can be used freely; only the common
pool is contested, and the third inequality is exactly Hall's condition
for splitting it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional

from .canonical import UnsupportedSizeError
from .graph import Graph, bits_to_list

BRUTE_FORCE_MAX_N = 14


@dataclass(frozen=True)
class DoubleStarPattern:
    a: int
    b: int

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise ValueError(f"S_{{a,b}} needs a, b >= 1, got ({self.a}, {self.b})")

    @property
    def vertex_count(self) -> int:
        return self.a + self.b + 2

    @property
    def edge_count(self) -> int:
        return self.a + self.b + 1

    def as_graph(self) -> Graph:
        """Centres 0 and 1; leaves 2..a+1 on 0, the rest on 1."""
        a, b = self.a, self.b
        edges = [(0, 1)]
        edges += [(0, i) for i in range(2, a + 2)]
        edges += [(1, i) for i in range(a + 2, a + b + 2)]
        return Graph.from_edges(a + b + 2, edges)


@dataclass(frozen=True)
class Witness:
    center_u: int
    center_v: int
    leaves_u: tuple[int, ...]
    leaves_v: tuple[int, ...]

    def is_valid_in(self, g: Graph, pat: DoubleStarPattern) -> bool:
        named = (self.center_u, self.center_v) + self.leaves_u + self.leaves_v
        if len(self.leaves_u) != pat.a or len(self.leaves_v) != pat.b:
            return False
        if len(set(named)) != len(named) or not all(0 <= x < g.n for x in named):
            return False
        if not g.has_edge(self.center_u, self.center_v):
            return False
        return all(g.has_edge(self.center_u, x) for x in self.leaves_u) and all(
            g.has_edge(self.center_v, y) for y in self.leaves_v
        )

    def as_dict(self) -> dict:
        return {
            "center_u": self.center_u,
            "center_v": self.center_v,
            "leaves_u": list(self.leaves_u),
            "leaves_v": list(self.leaves_v),
        }


def _hosts(adj, u: int, v: int, a: int, b: int) -> bool:
    nu = adj[u]
    nv = adj[v]
    du = nu.bit_count() - 1
    dv = nv.bit_count() - 1
    if du < a or dv < b:
        return False
    return du + dv - (nu & nv).bit_count() >= a + b


def edge_hosts(g: Graph, u: int, v: int, pat: DoubleStarPattern) -> bool:
    """Whether edge ``uv`` is the central edge of some S_{a,b} with ``u``
    carrying the ``a`` leaves."""
    if not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    return _hosts(g.adj, u, v, pat.a, pat.b)


def _build_witness(adj, u: int, v: int, a: int, b: int) -> Witness:
    nu = adj[u] & ~(1 << v)
    nv = adj[v] & ~(1 << u)
    common = nu & nv
    excl_u = bits_to_list(nu & ~common)
    excl_v = bits_to_list(nv & ~common)
    pool = bits_to_list(common)
    leaves_u = excl_u[:a]
    leaves_v = excl_v[:b]
    take = a - len(leaves_u)
    leaves_u += pool[:take]
    pool = pool[take:]
    leaves_v += pool[: b - len(leaves_v)]
    return Witness(u, v, tuple(leaves_u), tuple(leaves_v))


def contains_double_star(g: Graph, pat: DoubleStarPattern) -> Optional[Witness]:
    """A witness copy of S_{a,b} in ``g``, or ``None`` if ``g`` is free.

    The b-side centre needs degree >= max(a,b)+1, so only such vertices are
    scanned as centres, highest degree first.
    """
    a, b = pat.a, pat.b
    lo, hi = min(a, b), max(a, b)
    adj = g.adj
    degs = [row.bit_count() for row in adj]
    big = sorted((v for v in range(g.n) if degs[v] >= hi + 1), key=lambda v: (-degs[v], v))
    for v in big:
        # v takes the larger leaf set; u needs `need` neighbours outside N[v]
        closed = adj[v] | (1 << v)
        need = lo + hi - (degs[v] - 1)
        r = adj[v]
        while r:
            low = r & -r
            r ^= low
            u = low.bit_length() - 1
            if degs[u] <= lo or degs[u] <= need:
                continue
            if need <= 0 or (adj[u] & ~closed).bit_count() >= need:
                if a <= b:
                    return _build_witness(adj, u, v, a, b)
                return _build_witness(adj, v, u, a, b)
    return None


def is_free(g: Graph, pat: DoubleStarPattern) -> bool:
    return contains_double_star(g, pat) is None


def _subsets(bits: list[int]) -> Iterator[set[int]]:
    for r in range(len(bits) + 1):
        for combo in combinations(bits, r):
            yield set(combo)


def brute_force_contains(g: Graph, pat: DoubleStarPattern) -> bool:
    """Reference check: every ordered edge, every split of the common
    neighbours between the two centres."""
    if g.n > BRUTE_FORCE_MAX_N:
        raise UnsupportedSizeError(
            f"brute_force_contains supports n <= {BRUTE_FORCE_MAX_N}, got n = {g.n}"
        )
    a, b = pat.a, pat.b
    for u in range(g.n):
        for v in g.neighbors(u):
            nu = set(g.neighbors(u)) - {v}
            nv = set(g.neighbors(v)) - {u}
            common = nu & nv
            only_u = nu - common
            only_v = nv - common
            for to_u in _subsets(sorted(common)):
                if len(only_u) + len(to_u) >= a and len(only_v) + len(common - to_u) >= b:
                    return True
    return False


def pattern_embeddings(n: int, pat: DoubleStarPattern) -> Iterator[tuple[tuple[int, int], ...]]:
    """Every labelled copy of S_{a,b} inside K_n, as an edge tuple.

    Copies are yielded once per (centre_u, centre_v, leaf sets) choice, so a
    symmetric pattern (a == b) appears twice; callers only test membership.
    """
    a, b = pat.a, pat.b
    verts = range(n)
    for u in verts:
        for v in verts:
            if u == v:
                continue
            others = [x for x in verts if x != u and x != v]
            for leaves_u in combinations(others, a):
                rest = [x for x in others if x not in leaves_u]
                for leaves_v in combinations(rest, b):
                    edges = [(u, v)] + [(u, x) for x in leaves_u] + [(v, y) for y in leaves_v]
                    yield tuple((min(e), max(e)) for e in edges)
