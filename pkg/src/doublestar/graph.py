"""Simple undirected graphs backed by per-vertex neighbour bitsets.

Vertex ids are dense integers ``0..n-1``. ``adj[v]`` is a Python int whose
bit ``u`` is set iff ``uv`` is an edge, so neighbourhood intersections are a
single ``&`` followed by ``int.bit_count``.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence


class Graph:
    """Immutable simple graph. Build one with :class:`GraphBuilder` or
    :meth:`Graph.from_edges`."""

    __slots__ = ("n", "adj", "_m")

    def __init__(self, n: int, adj: Sequence[int]):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        if len(adj) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(adj)}")
        adj = tuple(adj)
        full = (1 << n) - 1
        total = 0
        for v, row in enumerate(adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{n - 1}")
            if (row >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
            total += row.bit_count()
        for v, row in enumerate(adj):
            r = row
            while r:
                low = r & -r
                u = low.bit_length() - 1
                if not (adj[u] >> v) & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {u})")
                r ^= low
        self.n = n
        self.adj = adj
        self._m = total // 2

    @classmethod
    def _trusted(cls, n: int, adj: Sequence[int]) -> "Graph":
        # callers guarantee symmetry and loop-freeness
        g = cls.__new__(cls)
        g.n = n
        g.adj = tuple(adj)
        g._m = sum(row.bit_count() for row in g.adj) // 2
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        builder = GraphBuilder(n)
        for u, v in edges:
            builder.add_edge(u, v)
        return builder.build()

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, [0] * n)

    # queries

    def edge_count(self) -> int:
        return self._m

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range for graph on {self.n} vertices")

    def degree(self, v: int) -> int:
        self._check(v)
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def max_degree(self) -> int:
        if self.n == 0:
            raise ValueError("max_degree of the empty graph is undefined")
        return max(row.bit_count() for row in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return bool((self.adj[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        self._check(v)
        return bits_to_list(self.adj[v])

    def common_neighbor_count(self, u: int, v: int) -> int:
        self._check(u)
        self._check(v)
        if u == v:
            raise ValueError("common_neighbor_count needs two distinct vertices")
        return (self.adj[u] & self.adj[v]).bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, row in enumerate(self.adj):
            r = row >> (u + 1)
            v = u + 1
            while r:
                if r & 1:
                    yield (u, v)
                r >>= 1
                v += 1

    def components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for s in range(self.n):
            if (seen >> s) & 1:
                continue
            comp = 1 << s
            frontier = comp
            while frontier:
                nxt = 0
                for v in bits_to_list(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= nxt
            seen |= comp
            comps.append(bits_to_list(comp))
        return comps

    def induced(self, vertices: Sequence[int]) -> "Graph":
        index = {v: i for i, v in enumerate(vertices)}
        b = GraphBuilder(len(vertices))
        for v in vertices:
            for u in bits_to_list(self.adj[v]):
                if u in index and index[v] < index[u]:
                    b.add_edge(index[v], index[u])
        return b.build()

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("relabel needs a permutation of 0..n-1")
        adj = [0] * self.n
        for u, v in self.edges():
            adj[perm[u]] |= 1 << perm[v]
            adj[perm[v]] |= 1 << perm[u]
        return Graph._trusted(self.n, adj)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self._m})"


class GraphBuilder:
    """Mutable edge accumulator used by the constructors.

    Loops and repeated edges raise instead of being dropped, so a wiring
    mistake in a construction surfaces immediately.
    """

    def __init__(self, n: int):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        self.n = n
        self.adj = [0] * n

    def add_edge(self, u: int, v: int) -> None:
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise IndexError(f"edge ({u}, {v}) out of range for {self.n} vertices")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if (self.adj[u] >> v) & 1:
            raise ValueError(f"duplicate edge ({u}, {v})")
        self.adj[u] |= 1 << v
        self.adj[v] |= 1 << u
        assert (self.adj[v] >> u) & 1

    def add_clique(self, vertices: Sequence[int]) -> None:
        for i, u in enumerate(vertices):
            for v in vertices[i + 1:]:
                self.add_edge(u, v)

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def build(self) -> Graph:
        return Graph._trusted(self.n, self.adj)


def bits_to_list(bits: int) -> list[int]:
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return out


def complete_graph(t: int) -> Graph:
    if t < 0:
        raise ValueError(f"clique size must be nonnegative, got {t}")
    full = (1 << t) - 1
    return Graph._trusted(t, [full ^ (1 << v) for v in range(t)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the centre at vertex 0."""
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def disjoint_union(*graphs: Graph) -> Graph:
    adj: list[int] = []
    offset = 0
    for g in graphs:
        adj.extend(row << offset for row in g.adj)
        offset += g.n
    return Graph._trusted(offset, adj)


def common_neighbor_count(g: Graph, u: int, v: int) -> int:
    return g.common_neighbor_count(u, v)


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def max_degree(g: Graph) -> int:
    return g.max_degree()
