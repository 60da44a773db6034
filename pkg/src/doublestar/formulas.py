"""Closed-form Turán values for double stars.

Every evaluator checks its proven domain and raises :class:`FormulaDomainError`
naming the violated inequality instead of extrapolating. Branches are
evaluated in their printed order, so at a tie between a special branch and
the clique fallback the special regime is reported.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import comb
from typing import Optional


class FormulaDomainError(ValueError):
    def __init__(self, violated: str, detail: str = ""):
        msg = f"outside the proven domain: requires {violated}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)
        self.violated = violated


class Regime(str, enum.Enum):
    CLIQUE_PLUS_REMAINDER = "CliquePlusRemainder"
    NEAR_REGULAR_TAIL = "NearRegularTail"
    TAIL_H2 = "TailH2"
    TAIL_H3 = "TailH3"
    GENERAL_Q_SMALL = "GeneralQSmall"
    OUT_OF_THEOREM_RANGE = "OutOfTheoremRange"


@dataclass(frozen=True)
class Decomposition:
    n: int
    p: int
    q: int
    modulus: int


@dataclass(frozen=True)
class FormulaResult:
    value: int
    regime: Regime
    decomposition: Decomposition
    source: str

    def as_dict(self) -> dict:
        d = self.decomposition
        return {
            "value": self.value,
            "regime": self.regime.value,
            "p": d.p,
            "q": d.q,
            "modulus": d.modulus,
            "theorem": self.source,
        }


def _binom(x: int, k: int) -> int:
    return comb(x, k) if x >= k >= 0 else 0


def _require(cond: bool, violated: str, detail: str = "") -> None:
    if not cond:
        raise FormulaDomainError(violated, detail)


def decompose(n: int, modulus: int) -> Decomposition:
    if modulus < 1:
        raise ValueError(f"modulus must be positive, got {modulus}")
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    p, q = divmod(n, modulus)
    return Decomposition(n, p, q, modulus)


def ex_star(n: int, b: int) -> int:
    """ex(n, K_{1,b}): K_n while it is too small to host the star,
    otherwise a near (b-1)-regular graph."""
    if b < 1:
        raise ValueError(f"star needs b >= 1, got {b}")
    if n <= b:
        return comb(n, 2)
    return (b - 1) * n // 2


def _clique_row(d: Decomposition, label: Regime, source: str) -> FormulaResult:
    m = d.modulus
    return FormulaResult(d.p * comb(m, 2) + _binom(d.q, 2), label, d, source)


def _tail(d: Decomposition, tail_edges: int, label: Regime, source: str) -> FormulaResult:
    return FormulaResult((d.p - 1) * comb(d.modulus, 2) + tail_edges, label, d, source)


def ex_s1b(n: int, b: int) -> FormulaResult:
    _require(b >= 2, "b+3 >= 5", f"b = {b}")
    _require(n >= b + 3, "n >= b+3", f"n = {n}, b = {b}")
    d = decompose(n, b + 2)
    if b >= 4 and 2 <= d.q <= b - 1:
        return _tail(d, b * (b + 2 + d.q) // 2, Regime.NEAR_REGULAR_TAIL, "double_star_a1")
    return _clique_row(d, Regime.CLIQUE_PLUS_REMAINDER, "double_star_a1")


def ex_s2b(n: int, b: int) -> FormulaResult:
    _require(b >= 3, "b >= 3", f"b = {b}")
    _require(n >= b + 3, "n >= b+3", f"n = {n}, b = {b}")
    d = decompose(n, b + 3)
    q = d.q
    if (b >= 12 and 3 <= q <= b - 2) or (9 <= b <= 11 and 4 <= q <= b - 3):
        return _tail(d, b * (b + 3 + q) // 2, Regime.NEAR_REGULAR_TAIL, "double_star_a2")
    return _clique_row(d, Regime.CLIQUE_PLUS_REMAINDER, "double_star_a2")


def ex_s3b(n: int, b: int) -> FormulaResult:
    _require(b > 3, "b > 3", f"b = {b}")
    _require(n >= b + 5, "n >= b+5", f"n = {n}, b = {b}")
    d = decompose(n, b + 4)
    q = d.q
    src = "double_star_a3"
    if (
        (b >= 24 and 4 <= q <= b - 4)
        or (16 <= b <= 23 and 5 <= q <= b - 4)
        or (14 <= b <= 15 and 6 <= q <= b - 5)
    ):
        return _tail(d, b * (b + 4 + q) // 2, Regime.NEAR_REGULAR_TAIL, src)
    if b >= 22 and q == b - 3:
        return _tail(d, (b * (2 * b + 1) + 3) // 2, Regime.TAIL_H2, src)
    if b >= 34 and q == b - 2:
        return _tail(d, (b * (2 * b + 2) + 2 + b // 2) // 2, Regime.TAIL_H3, src)
    return _clique_row(d, Regime.CLIQUE_PLUS_REMAINDER, src)


def connected_extremal_edges(n: int, b: int) -> tuple[int, int]:
    """(max degree, edge count) of a connected S_{3,b}-free extremal graph
    on ``n`` vertices."""
    _require(b > 3, "b > 3", f"b = {b}")
    _require(n >= b + 5, "n >= b+5", f"n = {n}, b = {b}")
    _require(n < 2 * (b + 4), "n < 2(b+4)", "no connected extremal graph this large")
    if b >= 11 and n == 2 * b + 1:
        return b + 1, (b * n + 3) // 2
    if b >= 11 and n == 2 * b + 2:
        return b + 1, (b * n + 2 + b // 2) // 2
    return b, b * n // 2


def ex_general_small_q(n: int, a: int, b: int) -> Optional[FormulaResult]:
    """The clique-union value, proven for every a < b when the remainder is
    0, 1 or a+b. Returns ``None`` for other remainders."""
    _require(1 <= a < b, "b > a >= 1", f"a = {a}, b = {b}")
    _require(n >= a + b + 1, "n >= a+b+1", f"n = {n}")
    d = decompose(n, a + b + 1)
    if d.q in (0, 1, a + b):
        return _clique_row(d, Regime.GENERAL_Q_SMALL, "double_star_small_q")
    return None


def ex_generalized_clique(n: int, a: int, b: int, k: int) -> FormulaResult:
    """Maximum number of K_k copies in an S_{a,b}-free graph on n vertices."""
    _require(k >= 3, "k >= 3", f"k = {k}")
    _require(a >= 1 and b >= 1, "a, b >= 1", f"a = {a}, b = {b}")
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    m = a + b + 1
    d = decompose(n, m)
    return FormulaResult(
        d.p * comb(m, k) + _binom(d.q, k), Regime.CLIQUE_PLUS_REMAINDER, d, "clique_count"
    )


def ex_dispatch(n: int, a: int, b: int) -> Optional[FormulaResult]:
    """Route to whichever closed form covers (n, a, b), or ``None``.

    The pattern is symmetric, so ``a > b`` is swapped. ``a == b`` has no
    closed form here. Where the a-specific evaluator's domain misses but the
    small-remainder result applies (e.g. n = a+b+1), that result is used.
    """
    if a > b:
        a, b = b, a
    if a < 1 or a == b:
        return None
    specific = {1: ex_s1b, 2: ex_s2b, 3: ex_s3b}.get(a)
    if specific is not None:
        try:
            return specific(n, b)
        except FormulaDomainError:
            pass
    try:
        return ex_general_small_q(n, a, b)
    except FormulaDomainError:
        return None


def lemma_n1n2_holds(n: int, n1: int, n2: int) -> bool:
    """C(n1,2) + C(n2,2) < min{C(n1+n2,2), C(n-1,2) + C(n1+n2-n+1,2)}."""
    _require(n1 < n - 1 and n2 < n - 1, "n1, n2 < n-1", f"n = {n}, n1 = {n1}, n2 = {n2}")
    _require(n1 >= 1 and n2 >= 1, "n1, n2 >= 1", "both parts must be nonempty")
    lhs = _binom(n1, 2) + _binom(n2, 2)
    rhs = min(_binom(n1 + n2, 2), _binom(n - 1, 2) + _binom(n1 + n2 - n + 1, 2))
    return lhs < rhs
