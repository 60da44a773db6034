"""Canonical labelling for small graphs (n <= 16).

Colour refinement seeded by degree produces an ordered equitable partition.
The first smallest non-singleton cell is then individualized vertex by
vertex, recursively, and the lexicographically least relabelled edge list
over all leaves is the canonical form. Vertices that are twins
(``N(u) - {v} == N(v) - {u}``) are interchangeable by an automorphism that
fixes everything already individualized, so only one of each twin group is
branched on; this keeps cliques, empty graphs and unions of them cheap.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph

MAX_CANONICAL_N = 16


class UnsupportedSizeError(ValueError):
    """Raised when an exact routine is asked to run beyond its size guard."""


@dataclass(frozen=True, order=True)
class CanonicalForm:
    n: int
    edges: tuple[tuple[int, int], ...]

    def to_graph(self) -> Graph:
        return Graph.from_edges(self.n, self.edges)


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        out: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            keyed: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                row = adj[v]
                key = tuple((row & m).bit_count() for m in masks)
                keyed.setdefault(key, []).append(v)
            for key in sorted(keyed):
                out.append(keyed[key])
        if len(out) == len(cells):
            return out
        cells = out


def canonical_form(g: Graph) -> CanonicalForm:
    if g.n > MAX_CANONICAL_N:
        raise UnsupportedSizeError(
            f"canonical_form supports n <= {MAX_CANONICAL_N}, got n = {g.n}"
        )
    n = g.n
    adj = g.adj
    if n == 0:
        return CanonicalForm(0, ())
    edge_list = list(g.edges())
    best: list[tuple[tuple[int, int], ...] | None] = [None]

    def twins(u: int, v: int) -> bool:
        return (adj[u] & ~(1 << v)) == (adj[v] & ~(1 << u))

    def search(cells: list[list[int]]) -> None:
        cells = _refine(adj, cells)
        target = None
        for i, cell in enumerate(cells):
            if len(cell) > 1 and (target is None or len(cell) < len(cells[target])):
                target = i
        if target is None:
            pos = [0] * n
            for i, cell in enumerate(cells):
                pos[cell[0]] = i
            relabelled = tuple(sorted(
                (pos[u], pos[v]) if pos[u] < pos[v] else (pos[v], pos[u])
                for u, v in edge_list
            ))
            if best[0] is None or relabelled < best[0]:
                best[0] = relabelled
            return
        cell = cells[target]
        tried: list[int] = []
        for v in cell:
            if any(twins(v, w) for w in tried):
                continue
            tried.append(v)
            rest = [w for w in cell if w != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    search([list(range(n))])
    assert best[0] is not None
    return CanonicalForm(n, best[0])


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.edge_count() != g2.edge_count():
        return False
    return canonical_form(g1) == canonical_form(g2)
