"""Arithmetic gates for the curvature/connectivity theorems.

Nothing here touches actual metrics: the functions evaluate the
connectivity formula, the shape-operator trace bound, the classification
of allowed submanifold types for classical ambient spaces, and the
meridian-codimension obstruction for Grassmannians, all as exact
arithmetic over the catalog quantities.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Tuple

from .catalog import SpaceInstance, EXCEPTIONAL_SYMBOLS, sharp

_DATA_DIR = os.path.join(os.path.dirname(__file__), "data")


def connectivity(ambient: SpaceInstance, sub_dim: int) -> int:
    """Connectedness degree 2l - k - n + 2 of an l-dimensional inclusion."""
    if not 1 <= sub_dim < ambient.dim:
        raise ValueError("submanifold dimension out of range")
    return 2 * sub_dim - ambient.kp - ambient.dim + 2


def trace_bound(delta: float, k: int, r: float) -> float:
    """Shape-operator trace bound sqrt(d/k) * k * cot(pi/2 - sqrt(d/k)*r).

    Defined while sqrt(delta/k) * r < pi/2; r = 0 gives 0 (the totally
    geodesic threshold).
    """
    if delta <= 0 or k <= 0:
        raise ValueError("delta and k must be positive")
    if r < 0:
        raise ValueError("r must be nonnegative")
    lam = math.sqrt(delta / k)
    if lam * r >= math.pi / 2:
        raise ValueError("sqrt(delta/k) * r must be below pi/2")
    return lam * k * math.tan(lam * r)


@dataclass(frozen=True)
class HypothesisSet:
    delta: float
    focal_floor: float
    codim: int

    def __post_init__(self):
        if self.delta <= 0:
            raise ValueError("delta must be positive")
        if not 0 <= self.focal_floor < math.pi / 2:
            raise ValueError("focal radius floor must lie in [0, pi/2)")
        if self.codim < 1:
            raise ValueError("codim >= 1 for a proper submanifold")


ITEM1 = "Item1"
ITEM2 = "Item2"
ITEM3 = "Item3"
ITEM4 = "Item4"
NOT_APPLICABLE = "NotApplicable"


@dataclass(frozen=True)
class GateVerdict:
    kind: str
    ambient: SpaceInstance
    reason: str
    allowed: str = ""
    trace_bound: Optional[float] = None

    def __str__(self):
        if self.kind == NOT_APPLICABLE:
            return f"NotApplicable({self.reason})"
        return f"{self.kind}: {self.allowed}"


def _gate_item(p: SpaceInstance) -> Tuple[str, str, str]:
    if p.symbol == "S":
        return (ITEM1, "sphere ambient",
                "Q is a product of spheres of dimension at least 10")
    if (p.symbol == "BDI" and p.params[0] == 2 and p.params[1] >= 10) or \
            (p.symbol == "AIII" and p.params[0] == 1 and p.params[1] >= 11):
        return (ITEM2, "plane-Grassmannian / complex-projective ambiguity",
                "Q is homotopy equivalent to Gr(R,2,q) (q >= 10) or CP^n "
                "(n >= 11), possibly times spheres of dimension at least 10")
    if p.symbol in ("AIII", "BDI", "CII"):
        return (ITEM3, "Grassmannian ambient",
                "Q has the Cartan type of the ambient space, possibly times "
                "spheres of dimension at least 10")
    return (ITEM4, "generic classical ambient",
            "Q is reducible: Q1 times spheres of dimension at least 10, "
            "with Q1 of the ambient Cartan type")


def theorem_a_gate(ambient: SpaceInstance, h: HypothesisSet) -> GateVerdict:
    """Classify the submanifold types a codim-h.codim inclusion allows."""
    if ambient.symbol in EXCEPTIONAL_SYMBOLS:
        return GateVerdict(NOT_APPLICABLE, ambient,
                           "stated for classical ambient spaces only")
    if not ambient.valid:
        return GateVerdict(NOT_APPLICABLE, ambient,
                           f"dimension is not valid (C_P = {ambient.cp} < 1)")
    if Fraction(h.codim) > ambient.cp:
        return GateVerdict(NOT_APPLICABLE, ambient,
                           f"codim {h.codim} exceeds C_P = {ambient.cp}")
    kind, reason, allowed = _gate_item(ambient)
    return GateVerdict(kind, ambient, reason, allowed,
                       trace_bound(h.delta, ambient.kp, h.focal_floor))


_FIELD_DIM = {"R": 1, "C": 2, "H": 4}


def meridian_codim(fld: str, p: int, q: int, a: int, b: int) -> int:
    """Codimension of the meridian Gr(a, n-2b) x Gr(b, 2b) in Gr(F, p, n).

    Requires a + b = p, 0 <= a < p, p <= q (n = p + q).  The real case
    follows the complex and quaternionic pattern with c = 1.
    """
    c = _FIELD_DIM[fld]
    if a + b != p or not 0 <= a < p or not p <= q:
        raise ValueError("need a + b = p, 0 <= a < p, p <= q")
    n = p + q
    return c * p * q - (c * a * (n - 2 * b - a) + c * b * b)


@lru_cache(maxsize=None)
def index_lower_bound(fld: str, p: int) -> int:
    """Bundled external-source index value for Gr(F, p, n) submanifolds."""
    with open(os.path.join(_DATA_DIR, "index_bounds.txt")) as fh:
        for line in fh:
            line = line.strip()
            if line.startswith("#") or not line:
                continue
            name, _, expr = line.partition("|")
            if name.strip() == fld:
                return eval(compile(expr.strip(), "<index>", "eval"),
                            {"__builtins__": {}}, {"p": p})
    raise KeyError(fld)


_GRASSMANNIAN = {"R": "BDI", "C": "AIII", "H": "CII"}


@dataclass(frozen=True)
class ObstructionVerdict:
    applicable: bool
    reason: str
    ambient: SpaceInstance
    cp: Fraction
    index_bound: int
    min_meridian_codim: Optional[int] = None
    analogy_derived: bool = False      # real case: formula follows C/H pattern

    def __str__(self):
        head = "Applicable" if self.applicable else "NotApplicable"
        extra = (f", min meridian codim {self.min_meridian_codim} > C_P = {self.cp}"
                 if self.min_meridian_codim is not None else "")
        return f"{head}({self.reason}{extra})"


def theorem_b_check(fld: str, p: int, n: int, codim: int,
                    index_bound: Optional[int] = None) -> ObstructionVerdict:
    """Gate for the Cartan-type rigidity of low-codimension submanifolds.

    Preconditions: 3 <= p < n/2.  Applicable when index <= codim <= C_P;
    in that case the meridian obstruction is verified: every meridian of
    the ambient Grassmannian has codimension strictly above C_P, so no
    sphere factor can hide in one.
    """
    if fld not in _FIELD_DIM:
        raise ValueError("field must be R, C or H")
    if not (3 <= p and 2 * p < n):
        raise ValueError("need 3 <= p < n/2")
    q = n - p
    ambient = _grassmannian_instance(fld, p, q)
    idx = index_lower_bound(fld, p) if index_bound is None else index_bound
    if not idx <= codim:
        return ObstructionVerdict(False, f"codim {codim} below index bound {idx}",
                                  ambient, ambient.cp, idx,
                                  analogy_derived=fld == "R")
    if Fraction(codim) > ambient.cp:
        return ObstructionVerdict(False, f"codim {codim} exceeds C_P = {ambient.cp}",
                                  ambient, ambient.cp, idx,
                                  analogy_derived=fld == "R")
    mmin = min_meridian_codim(fld, p, q)
    assert Fraction(mmin) > ambient.cp, (fld, p, q, mmin, ambient.cp)
    return ObstructionVerdict(True, "index <= codim <= C_P", ambient,
                              ambient.cp, idx, mmin,
                              analogy_derived=fld == "R")


def _grassmannian_instance(fld: str, p: int, q: int) -> SpaceInstance:
    from .catalog import instantiate
    return instantiate(_GRASSMANNIAN[fld], (p, q))


def min_meridian_codim(fld: str, p: int, q: int) -> int:
    """Smallest proper-meridian codimension over the family a + b = p, a < p.

    When p = q the a = 0 meridian is the whole Grassmannian (codimension
    0) and is not a proper submanifold, so it is excluded.
    """
    codims = [meridian_codim(fld, p, q, a, p - a) for a in range(p)]
    proper = [c for c in codims if c > 0]
    assert proper, (fld, p, q)
    return min(proper)
