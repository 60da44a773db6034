"""Builders for the extremal and near-extremal S_{a,b}-free families.

Labelling contract for the centred constructions (``build_h2``,
``build_h3``, ``build_h_general``): ``v_0`` is vertex 0, ``v_i`` is vertex
``i`` for ``i <= b+1`` (so ``V_1 = N[v_0] = {0..b+1}``) and ``u_j`` is
vertex ``b+1+j``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Sequence

from .formulas import FormulaDomainError, Regime, ex_dispatch
from .graph import Graph, GraphBuilder, complete_graph, disjoint_union


class ConstructionError(ValueError):
    pass


class Family(str, enum.Enum):
    CLIQUES_PLUS_REMAINDER = "cliques"
    NEAR_REGULAR = "near-regular"
    H2 = "h2"
    H3 = "h3"
    H_GENERAL = "h-general"
    COMPOSITE = "composite"


def cliques_plus_remainder(p: int, m: int, q: int) -> Graph:
    """p disjoint copies of K_m followed by one K_q."""
    if p < 0 or m < 1:
        raise ValueError(f"need p >= 0 and m >= 1, got p = {p}, m = {m}")
    if not 0 <= q < m:
        raise ValueError(f"remainder must satisfy 0 <= q < m, got q = {q}, m = {m}")
    return disjoint_union(*([complete_graph(m)] * p), complete_graph(q))


def near_regular(n: int, r: int) -> Graph:
    """r-regular on n vertices when rn is even; otherwise vertex n-1 has
    degree r-1 and every other vertex degree r."""
    if r < 0 or n <= r:
        raise ValueError(f"near_regular needs 0 <= r < n, got n = {n}, r = {r}")
    g = GraphBuilder(n)
    # r < n keeps every circulant offset below n/2, so no offset repeats
    for off in range(1, r // 2 + 1):
        for i in range(n):
            g.add_edge(i, (i + off) % n)
    if r % 2:
        if n % 2 == 0:
            for i in range(n // 2):
                g.add_edge(i, i + n // 2)
        else:
            half = (n - 1) // 2
            for i in range(half):
                g.add_edge(i, i + half)
    return g.build()


def erdos_gallai_violation(degrees: Sequence[int]) -> Optional[str]:
    """``None`` if the sequence is graphical, else a description of the
    first failing condition."""
    n = len(degrees)
    if any(d < 0 or d > n - 1 for d in degrees):
        return "every degree must lie in 0..n-1"
    if sum(degrees) % 2:
        return "degree sum is odd"
    d = sorted(degrees, reverse=True)
    prefix = 0
    for k in range(1, n + 1):
        prefix += d[k - 1]
        tail = sum(min(x, k) for x in d[k:])
        if prefix > k * (k - 1) + tail:
            return f"Erdos-Gallai inequality fails at index k = {k}"
    return None


def graph_from_degree_sequence(degrees: Sequence[int]) -> Graph:
    """Havel-Hakimi realisation; ties broken by lower vertex index."""
    why = erdos_gallai_violation(degrees)
    if why is not None:
        raise ConstructionError(f"non-graphical degree sequence: {why}")
    n = len(degrees)
    rem = list(degrees)
    g = GraphBuilder(n)
    while True:
        order = sorted((v for v in range(n) if rem[v] > 0), key=lambda v: (-rem[v], v))
        if not order:
            break
        v = order[0]
        targets = order[1 : rem[v] + 1]
        if len(targets) < rem[v]:
            raise ConstructionError("Havel-Hakimi ran out of partners")
        for t in targets:
            g.add_edge(v, t)
            rem[t] -= 1
        rem[v] = 0
    return g.build()


def _embed(g: GraphBuilder, inner: Graph, labels: Sequence[int]) -> None:
    for x, y in inner.edges():
        g.add_edge(labels[x], labels[y])


def build_h2(b: int) -> Graph:
    """Connected S_{3,b}-free graph on 2b+1 vertices with floor((b(2b+1)+3)/2)
    edges; v_0, v_b, v_{b+1} have degree b+1."""
    if b < 11:
        raise FormulaDomainError("b >= 11", f"b = {b}")
    n = 2 * b + 1
    u = [None] + [b + 1 + j for j in range(1, b)]
    g = GraphBuilder(n)
    for i in range(1, b + 2):
        g.add_edge(0, i)
    g.add_edge(b, b + 1)
    for i in range(1, b):
        g.add_edge(b, i)
        g.add_edge(b + 1, i)
    g.add_clique(u[1:])
    # each v_i (i < b) gets two u's, each u two v's: 2x2 blocks, plus one
    # 6-cycle on the last three pairs when b - 1 is odd
    last = b - 1 if b % 2 else b - 4
    for i in range(1, last, 2):
        for x in (i, i + 1):
            g.add_edge(x, u[i])
            g.add_edge(x, u[i + 1])
    if b % 2 == 0:
        c = b - 3
        for x, ys in ((c, (c, c + 1)), (c + 1, (c, c + 2)), (c + 2, (c + 1, c + 2))):
            for y in ys:
                g.add_edge(x, u[y])
    inner = [b - 5] * (b - 1)
    if b % 2 == 0:
        inner[-1] = b - 6
    _embed(g, graph_from_degree_sequence(inner), list(range(1, b)))
    return g.build()


def build_h3(b: int) -> Graph:
    """Connected S_{3,b}-free graph on 2b+2 vertices with
    floor((b(2b+2)+2+floor(b/2))/2) edges."""
    if b < 11:
        raise FormulaDomainError("b >= 11", f"b = {b}")
    n = 2 * b + 2
    low = b // 2
    lows = list(range(1, low + 1))
    hubs = [0] + list(range(low + 1, b + 2))
    us = [b + 1 + j for j in range(1, b + 1)]
    g = GraphBuilder(n)
    g.add_clique(hubs)
    for h in hubs:
        for v in lows:
            g.add_edge(h, v)
    g.add_clique(us)
    for i in lows:
        g.add_edge(i, us[2 * i - 2])
        g.add_edge(i, us[2 * i - 1])
    inner = [low - 4] * low
    if low % 2:
        inner[-1] = low - 5
    _embed(g, graph_from_degree_sequence(inner), lows)
    return g.build()


@dataclass(frozen=True)
class HGeneralParams:
    a: int
    b: int
    q: int
    k: int
    s: int
    residual: int

    @property
    def n(self) -> int:
        return self.a + self.b + 1 + self.q

    @property
    def u_count(self) -> int:
        return self.b - self.k - 1

    @classmethod
    def derive(cls, a: int, b: int, q: int) -> "HGeneralParams":
        if a < 3:
            raise FormulaDomainError("a >= 3", f"a = {a}")
        if not (max(0, b - 2 * a + 3) <= q <= b - a + 1):
            raise FormulaDomainError("b-2a+3 <= q <= b-a+1 and q >= 0", f"a = {a}, b = {b}, q = {q}")
        k = b - a - q
        stubs = (k + 2) * (b - k - 1)
        s = -(-stubs // (a - 1))
        residual = stubs - (s - 1) * (a - 1)
        return cls(a, b, q, k, s, residual)


def build_h_general(a: int, b: int, q: int) -> Graph:
    """S_{a,b}-free graph on a+b+1+q vertices with maximum degree b+1 whose
    degree-(b+1) vertices are exactly v_0 and v_{s+1..b+1}."""
    prm = HGeneralParams.derive(a, b, q)
    k, s, res = prm.k, prm.s, prm.residual
    if s > b + 1:
        raise FormulaDomainError("s <= b+1", f"s = {s}")
    if s < a + 2:
        raise FormulaDomainError("s >= a+2", f"s = {s}, a = {a}")
    lows = list(range(1, s + 1))
    hubs = [0] + list(range(s + 1, b + 2))
    us = [b + 1 + j for j in range(1, prm.u_count + 1)]
    g = GraphBuilder(prm.n)
    g.add_clique(hubs)
    for h in hubs:
        for v in lows:
            g.add_edge(h, v)
    g.add_clique(us)
    ptr = 0
    for i in lows:
        for _ in range(a - 1 if i < s else res):
            g.add_edge(i, us[ptr % len(us)])
            ptr += 1
    assert ptr == (k + 2) * len(us)
    base = [s - a - 1] * (s - 1)
    for last in (s - 2 - res, s - 3 - res):
        seq = base + [last]
        if last >= 0 and erdos_gallai_violation(seq) is None:
            _embed(g, graph_from_degree_sequence(seq), lows)
            return g.build()
    raise ConstructionError(
        f"inner degree sequence on v_1..v_s is not graphical for (a, b, q) = ({a}, {b}, {q})"
    )


def h_general_feasible(a: int, b: int, q: int) -> bool:
    try:
        build_h_general(a, b, q)
    except (FormulaDomainError, ConstructionError):
        return False
    return True


_REGIME_FAMILY = {
    Regime.CLIQUE_PLUS_REMAINDER: Family.CLIQUES_PLUS_REMAINDER,
    Regime.GENERAL_Q_SMALL: Family.CLIQUES_PLUS_REMAINDER,
    Regime.NEAR_REGULAR_TAIL: Family.NEAR_REGULAR,
    Regime.TAIL_H2: Family.H2,
    Regime.TAIL_H3: Family.H3,
}


def extremal_construction(n: int, a: int, b: int) -> Optional[tuple[Family, Graph]]:
    """The family attaining the dispatched closed form, with the graph.
    Multi-component outputs list the (p-1) full cliques first."""
    res = ex_dispatch(n, a, b)
    if res is None:
        return None
    if a > b:
        a, b = b, a
    d = res.decomposition
    m, p, q = d.modulus, d.p, d.q
    family = _REGIME_FAMILY[res.regime]
    if family is Family.CLIQUES_PLUS_REMAINDER:
        return family, cliques_plus_remainder(p, m, q)
    head = cliques_plus_remainder(p - 1, m, 0)
    if family is Family.NEAR_REGULAR:
        tail = near_regular(m + q, b)
    elif family is Family.H2:
        tail = build_h2(b)
    else:
        tail = build_h3(b)
    return family, disjoint_union(head, tail)


def extremal_graph(n: int, a: int, b: int) -> Optional[Graph]:
    found = extremal_construction(n, a, b)
    return None if found is None else found[1]
