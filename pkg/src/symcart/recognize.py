"""Cartan-type recognition from homotopy profiles through degree 9.

Two profiles are compared field by field: free ranks over Q first, then
dimensions over Z_2, Z_3, Z_5, Z_7.  A pair is distinguishable when some
cell pair has provably disjoint rank intervals; indistinguishable when
every cell is known exactly and equal; undetermined otherwise (partially
known cells block the decision without ever being guessed).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple, Union

from .abelian import (EQUAL, INCOMPATIBLE, PartialAbelianGroup, RankInterval,
                      compatible, format_group, p_rank, q_rank)
from .catalog import ProductSpace, SpaceInstance, enumerate_catalog
from .homotopy import pi, profile

FIELDS = ("Q", 2, 3, 5, 7)

DISTINGUISHABLE = "Distinguishable"
INDISTINGUISHABLE = "Indistinguishable"
UNDETERMINED = "Undetermined"


@dataclass(frozen=True)
class RankVector:
    """Per-degree, per-field rank intervals of a homotopy profile."""

    intervals: Dict[Tuple[int, object], RankInterval]

    @staticmethod
    def of(prof: Dict[int, PartialAbelianGroup]) -> "RankVector":
        out = {}
        for k, g in prof.items():
            out[(k, "Q")] = q_rank(g)
            for p in FIELDS[1:]:
                out[(k, p)] = p_rank(g, p)
        return RankVector(out)


@dataclass(frozen=True)
class Verdict:
    kind: str
    through_degree: int
    degree: int = 0
    field: object = None
    witness: Tuple = ()
    blockers: Tuple = ()

    def __str__(self):
        if self.kind == DISTINGUISHABLE:
            a, b = self.witness
            f = self.field if self.field == "Q" else f"Z_{self.field}"
            return (f"Distinguishable(degree={self.degree}, field={f}, "
                    f"ranks [{a.lo},{a.hi}] vs [{b.lo},{b.hi}])")
        if self.kind == INDISTINGUISHABLE:
            return f"Indistinguishable({self.through_degree})"
        cells = "; ".join(f"pi_{k}: {format_group(ga)} vs {format_group(gb)}"
                          for k, ga, gb in self.blockers)
        return f"Undetermined({cells})"


def distinguish_profiles(pa: Dict[int, PartialAbelianGroup],
                         pb: Dict[int, PartialAbelianGroup],
                         max_degree: int) -> Verdict:
    blockers = []
    for k in range(1, max_degree + 1):
        a, b = pa[k], pb[k]
        verdict, witness = compatible(a, b, (2, 3, 5, 7))
        if verdict == INCOMPATIBLE:
            f, ia, ib = witness
            return Verdict(DISTINGUISHABLE, max_degree, k, f, (ia, ib))
        if verdict != EQUAL:
            blockers.append((k, a, b))
    if blockers:
        return Verdict(UNDETERMINED, max_degree, blockers=tuple(blockers))
    return Verdict(INDISTINGUISHABLE, max_degree)


Space = Union[SpaceInstance, ProductSpace]


def _as_product(x: Space) -> ProductSpace:
    return x if isinstance(x, ProductSpace) else ProductSpace((x,))


def distinguish(a: Space, b: Space, max_degree: int = 9,
                data_dir=None) -> Verdict:
    """Lowest-degree, Q-before-Z_p provable difference of two spaces.

    >>> from .catalog import instantiate
    >>> str(distinguish(instantiate("AIII", (1, 5)), instantiate("BDI", (2, 11))))
    'Indistinguishable(9)'
    """
    return distinguish_profiles(profile(_as_product(a), max_degree, data_dir),
                                profile(_as_product(b), max_degree, data_dir),
                                max_degree)


def _is_blind_pair(a: SpaceInstance, b: SpaceInstance) -> bool:
    """The documented recognition blind spot: CP^n (n>=5) vs Gr(R,2,q) (q>=10)."""
    for x, y in ((a, b), (b, a)):
        if (x.symbol == "AIII" and x.params[0] == 1 and x.params[1] >= 5
                and y.symbol == "BDI" and y.params[0] == 2 and y.params[1] >= 10):
            return True
    return False


@dataclass
class ScanReport:
    max_dim: int
    max_degree: int
    instances: int = 0
    distinguishable_pairs: int = 0
    blind_pairs: List[Tuple[SpaceInstance, SpaceInstance]] = field(default_factory=list)
    violations: List[Tuple[SpaceInstance, SpaceInstance, Verdict]] = field(default_factory=list)
    undetermined: List[Tuple[SpaceInstance, SpaceInstance, Verdict]] = field(default_factory=list)

    @property
    def clean(self) -> bool:
        return not self.violations and not self.undetermined


def corollary1_scan(max_dim: int, max_degree: int = 9,
                    data_dir=None) -> ScanReport:
    """Pairwise scan of all valid irreducible instances up to max_dim.

    Every pair of spaces with different Cartan symbols must be provably
    distinguishable at some degree <= max_degree, except the blind-spot
    pairs, which must be indistinguishable.  Pairs are grouped by profile
    signature so identical profiles are compared only once.
    """
    if max_dim < 11:
        raise ValueError("max_dim >= 11 required (no valid space is smaller)")
    spaces = [s for s in enumerate_catalog(max_dim) if s.valid]
    report = ScanReport(max_dim, max_degree, instances=len(spaces))

    classes: Dict[Tuple, List[SpaceInstance]] = {}
    profiles = {}
    for s in spaces:
        prof = {k: pi(s, k, data_dir) for k in range(1, max_degree + 1)}
        sig = tuple(sorted((k, g.tag, g.group) for k, g in prof.items()))
        classes.setdefault(sig, []).append(s)
        profiles[sig] = prof

    sigs = sorted(classes, key=lambda sig: classes[sig][0])
    verdicts = {}
    for i, sa in enumerate(sigs):
        for sb in sigs[i:]:
            members_a, members_b = classes[sa], classes[sb]
            pairs = []
            if sa == sb:
                for x in range(len(members_a)):
                    for y in range(x + 1, len(members_a)):
                        if members_a[x].symbol != members_a[y].symbol:
                            pairs.append((members_a[x], members_a[y]))
            else:
                pairs = [(a, b) for a in members_a for b in members_b
                         if a.symbol != b.symbol]
            if not pairs:
                continue
            key = (sa, sb)
            if key not in verdicts:
                verdicts[key] = distinguish_profiles(profiles[sa],
                                                     profiles[sb], max_degree)
            v = verdicts[key]
            for a, b in pairs:
                blind = _is_blind_pair(a, b)
                if v.kind == DISTINGUISHABLE and not blind:
                    report.distinguishable_pairs += 1
                elif v.kind == INDISTINGUISHABLE and blind:
                    report.blind_pairs.append((a, b))
                elif v.kind == UNDETERMINED:
                    report.undetermined.append((a, b, v))
                else:
                    report.violations.append((a, b, v))
    return report


def _interval_sum(intervals):
    lo = sum(i.lo for i in intervals)
    hi = None if any(i.hi is None for i in intervals) else sum(i.hi for i in intervals)
    return RankInterval(lo, hi)


class CandidateOverflow(RuntimeError):
    pass


def decompose(ambient: SpaceInstance, max_degree: int = 9,
              max_candidates: int = 10 ** 6,
              data_dir=None) -> List[ProductSpace]:
    """All catalog products whose profile could equal the ambient's.

    Searches nonnegative-integer multiplicities of candidate factors under
    per-degree, per-field rank box constraints and the dimension budget,
    then re-filters survivors by exact degreewise compatibility.  The
    result is deterministic: sorted by total dimension descending, then
    label.  Exceeding max_candidates raises CandidateOverflow rather than
    silently truncating.
    """
    if not ambient.valid:
        raise ValueError(f"{ambient.label()} does not have a valid dimension")
    amb_prof = {k: pi(ambient, k, data_dir) for k in range(1, max_degree + 1)}
    amb_rv = RankVector.of(amb_prof)
    cells = [(k, f) for k in range(1, max_degree + 1) for f in FIELDS]

    cands = []
    for t in enumerate_catalog(ambient.dim):
        prof = {k: pi(t, k, data_dir) for k in range(1, max_degree + 1)}
        rv = RankVector.of(prof)
        # a factor whose guaranteed ranks already exceed the ambient's
        # ceiling can never appear
        if any(amb_rv.intervals[c].hi is not None
               and rv.intervals[c].lo > amb_rv.intervals[c].hi for c in cells):
            continue
        cands.append((t, prof, rv))
    cands.sort(key=lambda tpr: (-tpr[0].dim, tpr[0].label()))

    results = []
    explored = 0

    def feasible_completion(chosen_lo):
        for c in cells:
            amb = amb_rv.intervals[c]
            if amb.hi is not None and chosen_lo[c] > amb.hi:
                return False
        return True

    def closes(chosen, chosen_hi):
        for c in cells:
            need = amb_rv.intervals[c].lo
            hi = chosen_hi[c]
            if hi is not None and hi < need:
                return False
        # exact degreewise filter
        prod = ProductSpace(tuple(chosen))
        prof = profile(prod, max_degree, data_dir)
        v = distinguish_profiles(prof, amb_prof, max_degree)
        return v.kind != DISTINGUISHABLE

    def dfs(idx, budget, chosen, chosen_lo, chosen_hi):
        nonlocal explored
        explored += 1
        if explored > max_candidates:
            raise CandidateOverflow(
                f"decomposition search exceeded {max_candidates} nodes")
        if chosen and closes(chosen, chosen_hi):
            results.append(ProductSpace(tuple(chosen)))
        for i in range(idx, len(cands)):
            t, prof, rv = cands[i]
            if t.dim > budget:
                continue
            new_lo = dict(chosen_lo)
            new_hi = dict(chosen_hi)
            for c in cells:
                new_lo[c] += rv.intervals[c].lo
                hi = rv.intervals[c].hi
                new_hi[c] = (None if hi is None or new_hi[c] is None
                             else new_hi[c] + hi)
            if not feasible_completion(new_lo):
                continue
            chosen.append(t)
            dfs(i, budget - t.dim, chosen, new_lo, new_hi)
            chosen.pop()

    dfs(0, ambient.dim, [], {c: 0 for c in cells}, {c: 0 for c in cells})
    results.sort(key=lambda r: (-r.dim, r.label()))
    return results
