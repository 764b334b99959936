"""Restricted root systems with length classes.

Positive roots are stored as coefficient vectors over the simple roots
alpha_1..alpha_r.  The key quantity computed here is

    k(type, mult) = r + max_j  sum of multiplicities of the positive
                               roots whose j-th coefficient vanishes,

obtained two independent ways: by direct enumeration of the positive
roots, and by closed forms (with small-rank and exceptional fallbacks).

>>> len(positive_roots(RootSystemType("E8")))
120
>>> zero_coeff_counts(RootSystemType("F4"), 1)
(6, 3, 0)
>>> kp_enumerated(RootSystemType("A", 7), Multiplicities(m_l=2))
KpResult(value=49, maximizer=1)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Optional, Tuple

SHORT = "short"
LONG = "long"
EXTRA_LONG = "extra_long"

_EXCEPTIONAL_RANK = {"E6": 6, "E7": 7, "E8": 8, "F4": 4, "G2": 2}
_EXCEPTIONAL_COUNT = {"E6": 36, "E7": 63, "E8": 120, "F4": 24, "G2": 6}
CLASSICAL_SYMBOLS = ("A", "B", "C", "D", "BC")


@dataclass(frozen=True)
class RootSystemType:
    """A (possibly non-reduced) irreducible root system type.

    D(2) and D(3) are rejected: the former is reducible and the latter
    coincides with A(3), so neither is a separate type here.
    """

    symbol: str
    rank: int = 0

    def __post_init__(self):
        if self.symbol in _EXCEPTIONAL_RANK:
            r = _EXCEPTIONAL_RANK[self.symbol]
            if self.rank == 0:
                object.__setattr__(self, "rank", r)
            elif self.rank != r:
                raise ValueError(f"{self.symbol} has rank {r}")
            return
        lo = {"A": 1, "B": 2, "C": 2, "D": 4, "BC": 1}.get(self.symbol)
        if lo is None:
            raise ValueError(f"unknown root system symbol {self.symbol!r}")
        if self.rank < lo:
            raise ValueError(f"{self.symbol} requires rank >= {lo}, got {self.rank}")


class PositiveRoot(NamedTuple):
    coeffs: Tuple[int, ...]
    length_class: str


@dataclass(frozen=True)
class Multiplicities:
    """Root-space dimensions per length class.

    Simply-laced systems store their single multiplicity in m_l; unused
    classes are zero.
    """

    m_s: int = 0
    m_l: int = 0
    m_xl: int = 0

    def __post_init__(self):
        if min(self.m_s, self.m_l, self.m_xl) < 0:
            raise ValueError("multiplicities must be nonnegative")

    def weight(self, root: PositiveRoot) -> int:
        if root.length_class == SHORT:
            return self.m_s
        if root.length_class == LONG:
            return self.m_l
        return self.m_xl


def _interval(r: int, lo: int, hi: int, value: int = 1) -> list:
    """Coefficient vector of length r with `value` on positions lo..hi (1-based)."""
    v = [0] * r
    for i in range(lo, hi + 1):
        v[i - 1] = value
    return v


def _classical_roots(symbol: str, r: int) -> list:
    roots = []

    def add(vec, cls):
        roots.append(PositiveRoot(tuple(vec), cls))

    if symbol == "A":
        # e_j - e_k over 1 <= j < k <= r+1
        for j in range(1, r + 1):
            for k in range(j + 1, r + 2):
                add(_interval(r, j, k - 1), LONG)
    elif symbol in ("B", "BC"):
        for j in range(1, r + 1):
            add(_interval(r, j, r), SHORT)                    # e_j
        for j in range(1, r + 1):
            for k in range(j + 1, r + 1):
                add(_interval(r, j, k - 1), LONG)             # e_j - e_k
                v = _interval(r, j, k - 1)
                for l in range(k, r + 1):
                    v[l - 1] = 2
                add(v, LONG)                                  # e_j + e_k
        if symbol == "BC":
            for j in range(1, r + 1):
                add(_interval(r, j, r, 2), EXTRA_LONG)        # 2 e_j
    elif symbol == "C":
        for j in range(1, r + 1):
            v = _interval(r, j, r - 1, 2)
            v[r - 1] = 1
            add(v, LONG)                                      # 2 e_j
        for j in range(1, r + 1):
            for k in range(j + 1, r + 1):
                add(_interval(r, j, k - 1), SHORT)            # e_j - e_k
                v = _interval(r, j, k - 1)
                for l in range(k, r):
                    v[l - 1] = 2
                v[r - 1] = 1
                add(v, SHORT)                                 # e_j + e_k
    elif symbol == "D":
        for j in range(1, r + 1):
            for k in range(j + 1, r + 1):
                add(_interval(r, j, k - 1), LONG)             # e_j - e_k
        for j in range(1, r):
            for k in range(j + 1, r + 1):
                if k <= r - 1:
                    v = _interval(r, j, k - 1)
                    for l in range(k, r - 1):
                        v[l - 1] = 2
                    v[r - 2] = max(v[r - 2], 1)
                    v[r - 1] = 1
                else:
                    v = _interval(r, j, r - 2)
                    v[r - 1] = 1
                add(v, LONG)                                  # e_j + e_k
    else:  # pragma: no cover - guarded by RootSystemType
        raise AssertionError(symbol)
    return roots


def _exceptional_gram(symbol: str):
    """Integer Gram matrix of the simple roots (Bourbaki numbering)."""
    if symbol in ("E6", "E7", "E8"):
        r = _EXCEPTIONAL_RANK[symbol]
        edges = [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)]
        if r >= 7:
            edges.append((6, 7))
        if r >= 8:
            edges.append((7, 8))
        g = [[0] * r for _ in range(r)]
        for i in range(r):
            g[i][i] = 2
        for a, b in edges:
            g[a - 1][b - 1] = g[b - 1][a - 1] = -1
        return g
    if symbol == "F4":
        # alpha1, alpha2 long; alpha3, alpha4 short; scaled by 2 to stay integral
        return [[4, -2, 0, 0],
                [-2, 4, -2, 0],
                [0, -2, 2, -1],
                [0, 0, -1, 2]]
    if symbol == "G2":
        return [[2, -3],
                [-3, 6]]
    raise AssertionError(symbol)


def _closure_roots(symbol: str) -> list:
    """Positive roots of an exceptional system by height-by-height closure.

    A candidate alpha + alpha_i is a root iff q > 0 where
    q = p - <alpha, alpha_i^vee>, p the largest k with alpha - k*alpha_i
    still a root.
    """
    g = _exceptional_gram(symbol)
    r = len(g)
    norms = [g[i][i] for i in range(r)]
    simple = [tuple(1 if j == i else 0 for j in range(r)) for i in range(r)]
    roots = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for alpha in frontier:
            for i in range(r):
                # p: how far we can subtract alpha_i and stay a root
                p = 0
                probe = list(alpha)
                while True:
                    probe[i] -= 1
                    if min(probe) < 0 or tuple(probe) not in roots:
                        break
                    p += 1
                pairing = Fraction(2 * sum(alpha[j] * g[j][i] for j in range(r)),
                                   norms[i])
                assert pairing.denominator == 1
                if p - pairing > 0:
                    cand = tuple(c + (1 if j == i else 0)
                                 for j, c in enumerate(alpha))
                    if cand not in roots:
                        roots.add(cand)
                        nxt.append(cand)
        frontier = nxt

    def norm(alpha):
        return sum(alpha[i] * alpha[j] * g[i][j]
                   for i in range(r) for j in range(r))

    top = max(norm(a) for a in roots)
    return [PositiveRoot(a, LONG if norm(a) == top else SHORT)
            for a in sorted(roots)]


@lru_cache(maxsize=None)
def positive_roots(t: RootSystemType) -> Tuple[PositiveRoot, ...]:
    """All positive roots of t, with length classes.

    >>> [root.length_class for root in positive_roots(RootSystemType("BC", 1))]
    ['short', 'extra_long']
    """
    if t.symbol in CLASSICAL_SYMBOLS:
        roots = _classical_roots(t.symbol, t.rank)
    else:
        roots = _closure_roots(t.symbol)
    expected = {
        "A": t.rank * (t.rank + 1) // 2,
        "B": t.rank ** 2,
        "C": t.rank ** 2,
        "D": t.rank * (t.rank - 1),
        "BC": t.rank ** 2 + t.rank,
    }.get(t.symbol, _EXCEPTIONAL_COUNT.get(t.symbol))
    assert len(roots) == expected, (t, len(roots), expected)
    assert len({root.coeffs for root in roots}) == len(roots)
    return tuple(roots)


def zero_coeff_counts(t: RootSystemType, j: int) -> Tuple[int, int, int]:
    """(n_short, n_long, n_extra_long) among positive roots with j-th coeff 0."""
    if not 1 <= j <= t.rank:
        raise IndexError(f"simple-root index {j} out of range 1..{t.rank}")
    n = {SHORT: 0, LONG: 0, EXTRA_LONG: 0}
    for root in positive_roots(t):
        if root.coeffs[j - 1] == 0:
            n[root.length_class] += 1
    return n[SHORT], n[LONG], n[EXTRA_LONG]


class KpResult(NamedTuple):
    value: int
    maximizer: int


def kp_enumerated(t: RootSystemType, m: Multiplicities) -> KpResult:
    """k = rank + max_j (multiplicity-weighted zero-coefficient count).

    Reports the smallest maximizing simple-root index.
    """
    best, best_j = -1, 0
    for j in range(1, t.rank + 1):
        n_s, n_l, n_xl = zero_coeff_counts(t, j)
        total = m.m_s * n_s + m.m_l * n_l + m.m_xl * n_xl
        if total > best:
            best, best_j = total, j
    return KpResult(t.rank + best, best_j)


def kp_closed_form(t: RootSystemType, m: Multiplicities) -> Optional[int]:
    """Closed-form k where one exists; None signals fallback to enumeration.

    B/C/BC at ranks 2 and 3 and F4 with long multiplicity != 1 have no
    closed form here and return None.
    """
    r = t.rank
    s = t.symbol
    if s == "A":
        return r + r * (r - 1) // 2 * m.m_l
    if s == "D":
        return r + m.m_l * (r - 1) * (r - 2)
    if s == "B":
        if r < 4:
            return None
        return r + m.m_s * (r - 1) + m.m_l * (r - 1) * (r - 2)
    if s == "C":
        if r < 4:
            return None
        return r + m.m_s * (r - 1) * (r - 2) + m.m_l * (r - 1)
    if s == "BC":
        if 2 <= r < 4:
            return None
        if r == 1:
            return 1
        return r + (m.m_s + m.m_xl) * (r - 1) + m.m_l * (r - 1) * (r - 2)
    if s == "F4":
        return 7 + 6 * m.m_s if m.m_l == 1 else None
    if s == "G2":
        return 2 + max(m.m_s, m.m_l)
    if s in ("E6", "E7", "E8"):
        return r + m.m_l * {"E6": 20, "E7": 36, "E8": 63}[s]
    raise AssertionError(s)


def kp(t: RootSystemType, m: Multiplicities) -> int:
    """k for (t, m): closed form when available, else enumeration.

    When both paths apply they must agree; this is asserted.
    """
    enum = kp_enumerated(t, m).value
    closed = kp_closed_form(t, m)
    assert closed is None or closed == enum, (t, m, closed, enum)
    return enum
