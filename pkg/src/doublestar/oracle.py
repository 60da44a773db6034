"""Exact ex(n, S_{a,b}) by branch and bound over vertex pairs.

Pairs are decided in lexicographic order ``(0,1), (0,2), ..., (1,2), ...``
with the include branch first. Pruning:

* degree bound: every vertex ends with degree at most
  ``min(cap[v], deg[v] + undecided[v])``; half the sum bounds the final edge
  count (this subsumes ``edges + undecided pairs``);
* degree cap ``a + b`` when enabled (some extremal graph always respects it);
* freeness: only edges at the endpoints of a newly added edge can start
  hosting the pattern, and hosting is monotone, so a violation prunes.

Symmetry breaking: when row ``i`` is decided, the later vertices split into
cells of equal adjacency to ``0..i-1``; inside a cell row ``i`` must be a
prefix of ones, and vertex ``i`` must have the largest final degree of its
cell (vertex 0 is a maximum-degree vertex). Every isomorphism class keeps at
least one labelling satisfying these rules, so the search stays exact and
enumeration still reaches every class.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Optional

import numpy as np

from .canonical import CanonicalForm, UnsupportedSizeError, canonical_form
from .constructions import extremal_graph
from .detect import DoubleStarPattern, contains_double_star, pattern_embeddings
from .graph import Graph

BRUTE_FORCE_EDGES_MAX_N = 7
CLIQUE_SEARCH_MAX_N = 8


@dataclass
class SearchConfig:
    degree_cap_enabled: bool = True
    warm_start: bool = True
    node_limit: Optional[int] = None
    time_limit: Optional[float] = None
    enumerate_all: bool = False
    jobs: int = 1


@dataclass
class SearchResult:
    value: int
    witnesses: list[CanonicalForm]
    nodes_explored: int
    proven_optimal: bool
    graphs: list[Graph] = field(default_factory=list, repr=False)


class _LimitReached(Exception):
    pass


class _PairSearch:
    """Depth-first search over the pairs of an n-vertex graph.

    ``mode`` is ``"max"`` (strictly improve the incumbent), ``"all"`` (keep
    every leaf that ties the incumbent) or ``"leaves"`` (no edge bound;
    ``on_leaf`` sees every free completion).
    """

    def __init__(self, n: int, a: int, b: int, cap: int, mode: str,
                 best: int = -1, node_limit: Optional[int] = None,
                 deadline: Optional[float] = None,
                 on_leaf: Optional[Callable[[list[int]], None]] = None):
        self.n = n
        self.lo, self.hi = min(a, b), max(a, b)
        self.mode = mode
        self.best = best
        self.best_adj: Optional[tuple[int, ...]] = None
        self.tied: set[tuple[int, ...]] = set()
        self.nodes = 0
        self.node_limit = node_limit
        self.deadline = deadline
        self.on_leaf = on_leaf
        self.adj = [0] * n
        self.deg = [0] * n
        self.rem = [n - 1] * n
        self.cap = [min(cap, n - 1)] * n
        self.pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        self.edges = 0
        self.forced: Optional[list[int]] = None
        self.split_depth: Optional[int] = None
        self.frontier: list[list[int]] = []
        self.path: list[int] = []

    # --- helpers -------------------------------------------------------

    def _bound(self) -> int:
        cap, deg, rem = self.cap, self.deg, self.rem
        if self.pairs and self.rem[0] and self.n > 1:
            # vertex 0 is a maximum-degree vertex
            top = deg[0] + rem[0]
            return sum(min(c, top, d + r) for c, d, r in zip(cap, deg, rem)) // 2
        return sum(min(c, d + r) for c, d, r in zip(cap, deg, rem)) // 2

    def _viable(self, ub: int) -> bool:
        if self.mode == "max":
            return ub > self.best
        if self.mode == "all":
            return ub >= self.best
        return True

    def _hosts_at(self, x: int) -> bool:
        adj, deg = self.adj, self.deg
        lo, hi = self.lo, self.hi
        dx = deg[x]
        if dx <= lo:
            return False
        nx = adj[x]
        r = nx
        while r:
            low = r & -r
            r ^= low
            y = low.bit_length() - 1
            dy = deg[y]
            if dy <= lo or (dx <= hi and dy <= hi):
                continue
            if (nx | adj[y]).bit_count() >= lo + hi + 2:
                return True
        return False

    def _row_done(self, i: int) -> Optional[list[tuple[int, int]]]:
        """Tighten caps after row i is final. Returns the undo log, or None
        if some degree already exceeds its new cap."""
        n, adj, deg, cap = self.n, self.adj, self.deg, self.cap
        di = deg[i]
        log = []
        if i == 0:
            members = range(1, n)
        else:
            low = (1 << i) - 1
            key = adj[i] & low
            members = []
            for j in range(i + 1, n):
                if adj[j] & low != key:
                    break
                members.append(j)
        ok = True
        for j in members:
            if cap[j] > di:
                log.append((j, cap[j]))
                cap[j] = di
                if deg[j] > di:
                    ok = False
        if not ok:
            for j, c in log:
                cap[j] = c
            return None
        return log

    def _check_limits(self) -> None:
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise _LimitReached
        if self.deadline is not None and (self.nodes & 1023) == 1 and time.monotonic() > self.deadline:
            raise _LimitReached

    # --- search --------------------------------------------------------

    def run(self) -> None:
        self._dfs(0)

    def _leaf(self) -> None:
        if self.mode == "leaves":
            self.on_leaf(self.adj)
            return
        e = self.edges
        if e > self.best:
            self.best = e
            self.best_adj = tuple(self.adj)
            self.tied = {self.best_adj} if self.mode == "all" else set()
        elif e == self.best and self.mode == "all":
            self.tied.add(tuple(self.adj))

    def _dfs(self, t: int) -> None:
        self.nodes += 1
        self._check_limits()
        if t == len(self.pairs):
            self._leaf()
            return
        if self.split_depth is not None and t == self.split_depth:
            self.frontier.append(list(self.path))
            return
        i, j = self.pairs[t]
        adj, deg, rem, cap = self.adj, self.deg, self.rem, self.cap
        allow_edge = True
        if j - 1 > i and (adj[i] >> (j - 1)) & 1 == 0:
            low = (1 << i) - 1
            if (adj[j] ^ adj[j - 1]) & low == 0:
                allow_edge = False
        forced = self.forced[t] if self.forced is not None and t < len(self.forced) else None
        rem[i] -= 1
        rem[j] -= 1
        row_end = j == self.n - 1
        try:
            if allow_edge and forced != 0 and deg[i] < cap[i] and deg[j] < cap[j]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
                deg[i] += 1
                deg[j] += 1
                self.edges += 1
                if not self._hosts_at(i) and not self._hosts_at(j):
                    self._descend(t, i, row_end, 1)
                adj[i] ^= 1 << j
                adj[j] ^= 1 << i
                deg[i] -= 1
                deg[j] -= 1
                self.edges -= 1
            if forced != 1:
                self._descend(t, i, row_end, 0)
        finally:
            rem[i] += 1
            rem[j] += 1

    def _descend(self, t: int, i: int, row_end: bool, bit: int) -> None:
        log = None
        if row_end:
            log = self._row_done(i)
            if log is None:
                return
        try:
            if self._viable(self._bound()):
                self.path.append(bit)
                try:
                    self._dfs(t + 1)
                finally:
                    self.path.pop()
        finally:
            if log:
                for v, c in log:
                    self.cap[v] = c


def _degree_cap(n: int, a: int, b: int, cfg: SearchConfig) -> int:
    if not cfg.degree_cap_enabled:
        return n - 1
    if cfg.enumerate_all and a == b:
        # the cap argument only preserves the value when a == b, not every class
        return n - 1
    return a + b


def _warm(n: int, a: int, b: int) -> Optional[Graph]:
    g = extremal_graph(n, a, b)
    if g is None or contains_double_star(g, DoubleStarPattern(a, b)) is not None:
        return None
    return g


def _run_subtree(args) -> tuple[int, Optional[tuple[int, ...]], int, bool]:
    n, a, b, cap, best, prefix, node_limit, deadline = args
    s = _PairSearch(n, a, b, cap, "max", best=best, node_limit=node_limit, deadline=deadline)
    s.forced = prefix
    try:
        s.run()
        done = True
    except _LimitReached:
        done = False
    return s.best, s.best_adj, s.nodes, done


def max_edges_free(n: int, a: int, b: int, cfg: Optional[SearchConfig] = None) -> SearchResult:
    """Certified maximum edge count of an S_{a,b}-free graph on n vertices."""
    cfg = cfg or SearchConfig()
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    DoubleStarPattern(a, b)
    cap = _degree_cap(n, a, b, cfg)
    deadline = time.monotonic() + cfg.time_limit if cfg.time_limit is not None else None
    warm = _warm(n, a, b) if cfg.warm_start else None
    init = warm.edge_count() if warm is not None else -1
    mode = "all" if cfg.enumerate_all else "max"

    if cfg.jobs > 1 and mode == "max":
        return _parallel(n, a, b, cap, init, warm, cfg, deadline)

    s = _PairSearch(n, a, b, cap, mode, best=init, node_limit=cfg.node_limit, deadline=deadline)
    try:
        s.run()
        proven = True
    except _LimitReached:
        proven = False
    if mode == "all":
        graphs = [Graph._trusted(n, adj) for adj in s.tied]
        forms = sorted({canonical_form(g) for g in graphs})
        if not forms and warm is not None:
            forms = [canonical_form(warm)]
        by_form = {canonical_form(g): g for g in graphs}
        reps = [by_form[f] if f in by_form else f.to_graph() for f in forms]
        return SearchResult(s.best, forms, s.nodes, proven, reps)
    if s.best_adj is not None:
        g = Graph._trusted(n, s.best_adj)
    else:
        g = warm
    return SearchResult(s.best, [canonical_form(g)] if g is not None else [], s.nodes, proven,
                        [g] if g is not None else [])


def _parallel(n, a, b, cap, init, warm, cfg, deadline) -> SearchResult:
    # Independent subtrees share only the initial incumbent, so the value,
    # the witness (first optimum in DFS order) and every node count are
    # independent of scheduling.
    splitter = _PairSearch(n, a, b, cap, "max", best=init)
    splitter.split_depth = min(len(splitter.pairs), 6)
    splitter.run()
    jobs = [(n, a, b, cap, init, prefix, cfg.node_limit, deadline) for prefix in splitter.frontier]
    with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
        results = list(pool.map(_run_subtree, jobs))
    nodes = splitter.nodes + sum(r[2] for r in results)
    proven = all(r[3] for r in results)
    best, best_adj = init, None
    for value, adj, _, _ in results:
        if adj is not None and value > best:
            best, best_adj = value, adj
    g = Graph._trusted(n, best_adj) if best_adj is not None else warm
    return SearchResult(best, [canonical_form(g)] if g is not None else [], nodes, proven,
                        [g] if g is not None else [])


def enumerate_extremal(n: int, a: int, b: int, cfg: Optional[SearchConfig] = None) -> list[CanonicalForm]:
    """Every isomorphism class attaining ex(n, S_{a,b})."""
    cfg = cfg or SearchConfig()
    cfg = SearchConfig(cfg.degree_cap_enabled, cfg.warm_start, cfg.node_limit,
                       cfg.time_limit, True, 1)
    return max_edges_free(n, a, b, cfg).witnesses


def brute_force_max_edges(n: int, a: int, b: int) -> int:
    """Exhaustive maximum over all 2^C(n,2) labelled graphs.

    Each graph is a bitmask over the pairs. The bitmasks of every labelled
    copy of the pattern are marked, and the "contains a copy" flag is pushed
    up to all supersets one pair-bit at a time; the answer is the largest
    popcount left unmarked.
    """
    if n > BRUTE_FORCE_EDGES_MAX_N:
        raise UnsupportedSizeError(
            f"brute_force_max_edges supports n <= {BRUTE_FORCE_EDGES_MAX_N}, got n = {n}"
        )
    pat = DoubleStarPattern(a, b)
    pairs = list(combinations(range(n), 2))
    bit = {p: k for k, p in enumerate(pairs)}
    m = len(pairs)
    contains = np.zeros(1 << m, dtype=bool)
    for emb in pattern_embeddings(n, pat):
        mask = 0
        for e in emb:
            mask |= 1 << bit[e]
        contains[mask] = True
    idx = np.arange(1 << m, dtype=np.int64)
    for k in range(m):
        has = (idx >> k) & 1 == 1
        contains[has] |= contains[idx[has] ^ (1 << k)]
    counts = np.bitwise_count(idx)
    return int(counts[~contains].max())


def count_cliques(g: Graph, k: int) -> int:
    """Number of K_k subgraphs, by pivoting clique enumeration.

    Each search-tree leaf with ``h`` held vertices and ``p`` pivots stands
    for the cliques that contain all held vertices and any subset of the
    pivots, so it contributes C(p, k - h).
    """
    from math import comb

    if k < 1:
        raise ValueError("clique size must be positive")
    adj = g.adj
    total = 0

    def expand(cand: int, held: int, pivots: int) -> None:
        nonlocal total
        if cand == 0:
            need = k - held
            if 0 <= need <= pivots:
                total += comb(pivots, need)
            return
        if held > k:
            return
        best_u, best_cnt = -1, -1
        r = cand
        while r:
            low = r & -r
            r ^= low
            u = low.bit_length() - 1
            c = (adj[u] & cand).bit_count()
            if c > best_cnt:
                best_u, best_cnt = u, c
        piv = best_u
        expand(cand & adj[piv], held, pivots + 1)
        rest = cand & ~adj[piv] & ~(1 << piv)
        done = 1 << piv
        r = rest
        while r:
            low = r & -r
            r ^= low
            v = low.bit_length() - 1
            expand(cand & adj[v] & ~done, held + 1, pivots)
            done |= low

    expand((1 << g.n) - 1, 0, 0)
    return total


def _is_edge_maximal(adj: list[int], n: int, pat: DoubleStarPattern) -> bool:
    for u in range(n):
        for v in range(u + 1, n):
            if (adj[u] >> v) & 1:
                continue
            trial = list(adj)
            trial[u] |= 1 << v
            trial[v] |= 1 << u
            if contains_double_star(Graph._trusted(n, trial), pat) is None:
                return False
    return True


def max_cliques_free(n: int, a: int, b: int, k: int) -> int:
    """Maximum number of K_k in an S_{a,b}-free graph on n vertices.

    Adding an edge never removes a clique, so scanning the edge-maximal free
    graphs suffices; each symmetry-reduced free completion is tested for
    maximality and its cliques counted.
    """
    if n > CLIQUE_SEARCH_MAX_N:
        raise UnsupportedSizeError(
            f"max_cliques_free supports n <= {CLIQUE_SEARCH_MAX_N}, got n = {n}"
        )
    if k < 3:
        raise ValueError(f"clique size must be at least 3, got {k}")
    pat = DoubleStarPattern(a, b)
    best = 0

    def on_leaf(adj: list[int]) -> None:
        nonlocal best
        if not _is_edge_maximal(adj, n, pat):
            return
        best = max(best, count_cliques(Graph._trusted(n, adj), k))

    s = _PairSearch(n, a, b, n - 1, "leaves", on_leaf=on_leaf)
    s.run()
    return best
