"""Exact and partially-known finitely generated abelian groups.

An exact group is stored as a free rank together with its torsion in
primary (prime-power) decomposition, canonically ordered.  Partially
known groups (as they occur in homotopy tables: "finite", "rank one",
"contains Z_2", blank) are modelled as tagged variants; the only
arithmetic ever extracted from them are rank intervals over Q and over
the prime fields Z_p.

>>> parse_group("Z + Z_12")
Partial('Z + Z_4 + Z_3')
>>> q_rank(parse_group("r>=1"))
RankInterval(1, None)
>>> compatible(parse_group("Z_2"), parse_group("0"), frozenset({2}))[0]
'Incompatible'
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Tuple


def _factor_prime_powers(n: int) -> Tuple[Tuple[int, int], ...]:
    """Factor n >= 2 into (prime, exponent) pairs by trial division."""
    assert n >= 2
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


@dataclass(frozen=True, order=True)
class AbelianGroup:
    """A finitely generated abelian group in canonical form.

    ``torsion`` is a tuple of (prime, exponent) pairs, sorted by prime
    then exponent; each pair stands for one cyclic factor Z_{p^e}.
    Composite cyclic orders are split on construction, so e.g.
    Z_12 = Z_4 + Z_3.
    """

    free_rank: int = 0
    torsion: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        for p, e in self.torsion:
            if e < 1 or p < 2 or _factor_prime_powers(p) != ((p, 1),):
                raise ValueError("torsion entries must be prime powers")
        if tuple(sorted(self.torsion)) != self.torsion:
            raise ValueError("torsion must be canonically sorted")

    @staticmethod
    def from_orders(free_rank: int = 0, orders: Iterable[int] = ()) -> "AbelianGroup":
        """Build a group from arbitrary cyclic orders (normalized here).

        >>> AbelianGroup.from_orders(1, [12])
        Exact(Z + Z_4 + Z_3)
        """
        tors = []
        for n in orders:
            if n == 1:
                continue
            for p, e in _factor_prime_powers(n):
                tors.append((p, e))
        return AbelianGroup(free_rank, tuple(sorted(tors)))

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def primes(self) -> frozenset:
        return frozenset(p for p, _ in self.torsion)

    def p_count(self, p: int) -> int:
        """dim over Z_p of G (x) Z_p = free rank + number of p-power factors."""
        return self.free_rank + sum(1 for q, _ in self.torsion if q == p)

    def direct_sum(self, other: "AbelianGroup") -> "AbelianGroup":
        return AbelianGroup(self.free_rank + other.free_rank,
                            tuple(sorted(self.torsion + other.torsion)))

    def contains_subgroup(self, h: "AbelianGroup") -> bool:
        """Whether h embeds as a subgroup (standard abelian-group criterion).

        For each prime p and exponent e, the number of p-factors of
        exponent >= e in h may not exceed the same count in self
        (subgroups of finite abelian p-groups), and the free rank of h
        may not exceed ours.
        """
        if h.free_rank > self.free_rank:
            return False
        for p in h.primes():
            mine = sorted(e for q, e in self.torsion if q == p)
            theirs = sorted(e for q, e in h.torsion if q == p)
            for e in set(theirs):
                if sum(1 for x in theirs if x >= e) > sum(1 for x in mine if x >= e):
                    return False
        return True

    def __repr__(self):
        return f"Exact({format_group(PartialAbelianGroup.exact(self))})"


TRIVIAL = AbelianGroup()

# Variant tags for partially known groups.
EXACT = "exact"
FINITE = "finite"            # "f": finite, possibly zero
RANK_ONE = "rank_one"        # "r1": free rank exactly 1, torsion unknown
RANK_AT_LEAST_ONE = "rank_at_least_one"   # "r>=1"
CONTAINS = "contains"        # "H in": contains H as a subgroup
UNKNOWN = "unknown"          # blank table cell


@dataclass(frozen=True)
class PartialAbelianGroup:
    """An exactly or partially known finitely generated abelian group."""

    tag: str
    group: Optional[AbelianGroup] = None   # payload for EXACT / CONTAINS

    def __post_init__(self):
        if self.tag in (EXACT, CONTAINS):
            if self.group is None:
                raise ValueError("missing group payload")
        elif self.group is not None:
            raise ValueError(f"variant {self.tag} takes no payload")

    @staticmethod
    def exact(g: AbelianGroup) -> "PartialAbelianGroup":
        return PartialAbelianGroup(EXACT, g)

    @staticmethod
    def trivial() -> "PartialAbelianGroup":
        return PartialAbelianGroup(EXACT, TRIVIAL)

    @property
    def is_exact(self) -> bool:
        return self.tag == EXACT

    @property
    def is_exact_trivial(self) -> bool:
        return self.tag == EXACT and self.group.is_trivial

    def lower_bound(self) -> AbelianGroup:
        """A group provably contained in every refinement of this value."""
        if self.tag in (EXACT, CONTAINS):
            return self.group
        if self.tag in (RANK_ONE, RANK_AT_LEAST_ONE):
            return AbelianGroup(1)
        return TRIVIAL

    def primes(self) -> frozenset:
        if self.tag in (EXACT, CONTAINS):
            return self.group.primes()
        return frozenset()

    def refined_by(self, g: AbelianGroup) -> bool:
        """Whether the exact group g is a possible value of this cell."""
        if self.tag == EXACT:
            return g == self.group
        if self.tag == FINITE:
            return g.free_rank == 0
        if self.tag == RANK_ONE:
            return g.free_rank == 1
        if self.tag == RANK_AT_LEAST_ONE:
            return g.free_rank >= 1
        if self.tag == CONTAINS:
            return g.contains_subgroup(self.group)
        return True

    def __repr__(self):
        return f"Partial({format_group(self)!r})"


@dataclass(frozen=True)
class RankInterval:
    """Closed integer interval [lo, hi]; hi=None stands for +infinity."""

    lo: int
    hi: Optional[int]

    def __post_init__(self):
        if self.lo < 0 or (self.hi is not None and self.hi < self.lo):
            raise ValueError("need 0 <= lo <= hi")

    def disjoint(self, other: "RankInterval") -> bool:
        if self.hi is not None and self.hi < other.lo:
            return True
        if other.hi is not None and other.hi < self.lo:
            return True
        return False

    def __add__(self, other: "RankInterval") -> "RankInterval":
        hi = None if self.hi is None or other.hi is None else self.hi + other.hi
        return RankInterval(self.lo + other.lo, hi)

    def __repr__(self):
        return f"RankInterval({self.lo}, {self.hi})"


def q_rank(g: PartialAbelianGroup) -> RankInterval:
    """Interval of possible free ranks (rank of G (x) Q)."""
    if g.tag == EXACT:
        r = g.group.free_rank
        return RankInterval(r, r)
    if g.tag == FINITE:
        return RankInterval(0, 0)
    if g.tag == RANK_ONE:
        return RankInterval(1, 1)
    if g.tag == RANK_AT_LEAST_ONE:
        return RankInterval(1, None)
    if g.tag == CONTAINS:
        return RankInterval(g.group.free_rank, None)
    return RankInterval(0, None)


def p_rank(g: PartialAbelianGroup, p: int) -> RankInterval:
    """Interval of possible dimensions of G (x) Z_p."""
    if g.tag == EXACT:
        d = g.group.p_count(p)
        return RankInterval(d, d)
    if g.tag == CONTAINS:
        return RankInterval(g.group.p_count(p), None)
    if g.tag in (RANK_ONE, RANK_AT_LEAST_ONE):
        return RankInterval(1, None)
    return RankInterval(0, None)   # FINITE and UNKNOWN


def direct_sum(a: PartialAbelianGroup, b: PartialAbelianGroup) -> PartialAbelianGroup:
    """Direct sum, conservatively widened on partially known operands.

    The widening preserves provable lower bounds: whatever cannot be
    represented exactly is returned as the most precise of Finite /
    RankOne / RankAtLeastOne / ContainsSubgroup that is still sound.
    """
    if a.is_exact and b.is_exact:
        return PartialAbelianGroup.exact(a.group.direct_sum(b.group))
    if a.is_exact_trivial:
        return b
    if b.is_exact_trivial:
        return a
    qa, qb = q_rank(a), q_rank(b)
    q = qa + qb
    if q.hi == 0:
        return PartialAbelianGroup(FINITE)
    low = a.lower_bound().direct_sum(b.lower_bound())
    if q.lo == q.hi == 1 and not low.torsion:
        return PartialAbelianGroup(RANK_ONE)
    if q.lo == 1 and low == AbelianGroup(1):
        return PartialAbelianGroup(RANK_AT_LEAST_ONE)
    if low.is_trivial:
        return PartialAbelianGroup(UNKNOWN)
    return PartialAbelianGroup(CONTAINS, low)


EQUAL = "Equal"
POSSIBLY_EQUAL = "PossiblyEqual"
INCOMPATIBLE = "Incompatible"

DEFAULT_PRIMES = frozenset({2, 3, 5, 7})


def comparison_primes(a: PartialAbelianGroup, b: PartialAbelianGroup) -> frozenset:
    """Default prime set: {2,3,5,7} plus every prime in either operand."""
    return DEFAULT_PRIMES | a.primes() | b.primes()


def compatible(a: PartialAbelianGroup, b: PartialAbelianGroup,
               primes: Iterable[int] = None):
    """Decide whether two cells can denote the same group.

    Returns (verdict, witness); the witness of an Incompatible verdict
    is (field, interval_a, interval_b) with field "Q" or a prime.
    """
    primes = frozenset(primes) if primes is not None else comparison_primes(a, b)
    if not primes:
        raise ValueError("prime set must be nonempty")
    ia, ib = q_rank(a), q_rank(b)
    if ia.disjoint(ib):
        return INCOMPATIBLE, ("Q", ia, ib)
    for p in sorted(primes):
        ia, ib = p_rank(a, p), p_rank(b, p)
        if ia.disjoint(ib):
            return INCOMPATIBLE, (p, ia, ib)
    if a.is_exact and b.is_exact and a.group == b.group:
        return EQUAL, None
    return POSSIBLY_EQUAL, None


# ---------------------------------------------------------------------------
# The group mini-grammar.
#
#   expr ::= term ("+" term)*
#   term ::= "Z" | "Z_<n>" | "Z^<k>" | "Z_<n>^<k>"
#   expr may instead be one of: "f" | "r1" | "r>=1" | "<expr> in" | "?" | "0"
# ---------------------------------------------------------------------------

class GroupSyntaxError(ValueError):
    def __init__(self, text: str, pos: int, message: str):
        super().__init__(f"{message} at position {pos} in {text!r}")
        self.pos = pos


def _parse_exact(text: str, original: str, offset: int) -> AbelianGroup:
    free = 0
    orders = []
    pos = offset
    for term in text.split("+"):
        stripped = term.strip()
        if not stripped:
            raise GroupSyntaxError(original, pos, "empty term")
        t = stripped
        power = 1
        if "^" in t:
            t, _, exp = t.partition("^")
            if not exp.isdigit() or int(exp) < 1:
                raise GroupSyntaxError(original, pos, "bad exponent")
            power = int(exp)
        if t == "Z":
            free += power
        elif t.startswith("Z_"):
            order = t[2:]
            if not order.isdigit() or int(order) < 2:
                raise GroupSyntaxError(original, pos, "bad cyclic order")
            orders.extend([int(order)] * power)
        elif t == "0" and power == 1:
            pass
        else:
            raise GroupSyntaxError(original, pos, f"unrecognized term {stripped!r}")
        pos += len(term) + 1
    return AbelianGroup.from_orders(free, orders)


def parse_group(text: str) -> PartialAbelianGroup:
    """Parse the mini-grammar used by data files and the CLI.

    >>> format_group(parse_group("Z + Z_2^3"))
    'Z + Z_2^3'
    >>> parse_group("f").tag
    'finite'
    >>> parse_group("Z_2 in").tag
    'contains'
    """
    s = text.strip()
    if s == "" or s == "?":
        return PartialAbelianGroup(UNKNOWN)
    if s == "f":
        return PartialAbelianGroup(FINITE)
    if s == "r1":
        return PartialAbelianGroup(RANK_ONE)
    if s == "r>=1":
        return PartialAbelianGroup(RANK_AT_LEAST_ONE)
    if s.endswith(" in") or s == "in":
        inner = s[:-2].strip()
        if not inner:
            raise GroupSyntaxError(text, 0, "missing group before 'in'")
        return PartialAbelianGroup(CONTAINS, _parse_exact(inner, text, 0))
    if s == "0":
        return PartialAbelianGroup.trivial()
    return PartialAbelianGroup.exact(_parse_exact(s, text, 0))


def _format_exact(g: AbelianGroup) -> str:
    if g.is_trivial:
        return "0"
    parts = []
    if g.free_rank == 1:
        parts.append("Z")
    elif g.free_rank > 1:
        parts.append(f"Z^{g.free_rank}")
    i = 0
    tors = g.torsion
    while i < len(tors):
        j = i
        while j < len(tors) and tors[j] == tors[i]:
            j += 1
        p, e = tors[i]
        base = f"Z_{p ** e}"
        parts.append(base if j - i == 1 else f"{base}^{j - i}")
        i = j
    return " + ".join(parts)


def format_group(g: PartialAbelianGroup) -> str:
    """Inverse of parse_group on canonical values."""
    if g.tag == UNKNOWN:
        return "?"
    if g.tag == FINITE:
        return "f"
    if g.tag == RANK_ONE:
        return "r1"
    if g.tag == RANK_AT_LEAST_ONE:
        return "r>=1"
    if g.tag == CONTAINS:
        return f"{_format_exact(g.group)} in"
    return _format_exact(g.group)
