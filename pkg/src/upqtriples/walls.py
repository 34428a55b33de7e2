"""Critical values of the stability parameter alpha and the chambers between them.

Walls here are numerical: a value of alpha at which some proper numerical
subtriple class has the same alpha-slope as the ambient triple.  Whether an
actual semistable triple realizes the class is not examined.
"""
from __future__ import annotations

import enum
import math
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from .invariants import (
    HiggsType,
    InputError,
    TripleType,
    canonical_degree,
    higgs_to_triple,
    is_allowed,
    minima_side,
    mw_bound,
    mw_value,
    window_points,
)
from .stability import Number, SubtripleClass, alpha_max, dual, subtriple_margin


class Degenerate(enum.Enum):
    NoSolution = "NoSolution"
    AllAlpha = "AllAlpha"


@dataclass(frozen=True)
class Wall:
    alpha: Fraction
    witnesses: Tuple[SubtripleClass, ...] = field(default=())


@dataclass(frozen=True)
class Chamber:
    """Open interval ``(lower, upper)``."""

    lower: Fraction
    upper: Fraction

    def __contains__(self, alpha) -> bool:
        return self.lower < alpha < self.upper

    def midpoint(self) -> Fraction:
        return (self.lower + self.upper) / 2


@dataclass(frozen=True)
class Inside:
    chamber: Chamber


@dataclass(frozen=True)
class OnWall:
    wall: Wall


@dataclass(frozen=True)
class OutOfRange:
    alpha: Fraction


Location = Union[Inside, OnWall, OutOfRange]


def proper_rank_pairs(t: TripleType) -> List[Tuple[int, int]]:
    return [(a, b) for a in range(t.n1 + 1) for b in range(t.n2 + 1)
            if (a, b) not in ((0, 0), (t.n1, t.n2))]


def _alpha_coefficient(n1p: int, n2p: int, t: TripleType) -> int:
    # mu_alpha(sub) - mu_alpha(t), scaled by rank(sub) * rank(t), has this alpha-coefficient
    return n2p * t.rank - t.n2 * (n1p + n2p)


def wall_alpha(sub: SubtripleClass, t: TripleType) -> Union[Fraction, Degenerate]:
    """Solve ``mu_alpha(sub) = mu_alpha(t)`` for alpha."""
    if not sub.is_proper_in(t):
        raise InputError(f"{sub} is not a proper class of {t}")
    num = t.degree * sub.rank - sub.dtot * t.rank
    den = _alpha_coefficient(sub.n1p, sub.n2p, t)
    if den != 0:
        return Fraction(num, den)
    return Degenerate.AllAlpha if num == 0 else Degenerate.NoSolution


def walls_in_range(t: TripleType, upper: Number) -> List[Wall]:
    """All numerical walls of ``t`` in ``[0, upper]``, no rank-order requirement."""
    upper = Fraction(upper)
    if upper < 0:
        return []
    found: Dict[Fraction, List[SubtripleClass]] = defaultdict(list)
    npts, dsum = t.rank, t.degree
    for n1p, n2p in proper_rank_pairs(t):
        den = _alpha_coefficient(n1p, n2p, t)
        if den == 0:
            continue
        r = n1p + n2p
        # alpha = (dsum*r - dtot*npts) / den is affine in dtot; invert the endpoints
        ends = (Fraction(dsum * r, npts), (dsum * r - upper * den) / npts)
        for dtot in range(math.ceil(min(ends)), math.floor(max(ends)) + 1):
            alpha = Fraction(dsum * r - dtot * npts, den)
            if 0 <= alpha <= upper:
                found[alpha].append(SubtripleClass(n1p, n2p, dtot))
    return [Wall(a, tuple(sorted(found[a]))) for a in sorted(found)]


def alpha_range_upper(t: TripleType, cap: Optional[Number] = None) -> Fraction:
    """Upper end of the scanned alpha range: alpha_M, or ``cap`` when n1 = n2.

    ``cap`` is ignored when n1 > n2.
    """
    if t.n2 < 1:
        raise InputError(f"need n1 >= n2 >= 1: {t}")
    bound = alpha_max(t)
    if not bound.unbounded:
        return bound.value
    if cap is None:
        raise InputError(f"n1 = n2 in {t}: an explicit cap is required")
    cap = Fraction(cap)
    if cap <= 0:
        raise InputError(f"cap must be positive, got {cap}")
    return cap


def critical_values(t: TripleType, cap: Optional[Number] = None) -> List[Wall]:
    return walls_in_range(t, alpha_range_upper(t, cap))


def _chambers_from(walls: List[Wall], upper: Fraction) -> List[Chamber]:
    if upper <= 0:
        return []
    points = sorted({Fraction(0), upper} | {w.alpha for w in walls})
    return [Chamber(a, b) for a, b in zip(points, points[1:])]


def chambers(t: TripleType, cap: Optional[Number] = None) -> List[Chamber]:
    upper = alpha_range_upper(t, cap)
    return _chambers_from(walls_in_range(t, upper), upper)


def chamber_of(t: TripleType, alpha: Number, cap: Optional[Number] = None) -> Location:
    """Locate ``alpha`` relative to the walls of ``t``.

    Range endpoints that carry no wall are reported as out of range, since
    every chamber is an open interval.
    """
    alpha = Fraction(alpha)
    upper = alpha_range_upper(t, cap)
    walls = walls_in_range(t, upper)
    for w in walls:
        if w.alpha == alpha:
            return OnWall(w)
    for c in _chambers_from(walls, upper):
        if alpha in c:
            return Inside(c)
    return OutOfRange(alpha)


def oracle_alpha_set(t: TripleType, upper: Number) -> List[Fraction]:
    """Brute-force scan of reduced ``a/b`` in ``[0, upper]`` with ``b <= (n1+n2)**2``.

    A value is kept when some proper rank pair needs an integral total degree
    to reach equal alpha-slope with ``t``.  Rank pairs whose alpha-slope
    differs from that of ``t`` by an alpha-independent amount are skipped.
    """
    upper = Fraction(upper)
    if upper < 0:
        return []
    npts, dsum = t.rank, t.degree
    pairs = []
    for n1p, n2p in proper_rank_pairs(t):
        r = n1p + n2p
        # required dtot = r*(dsum + alpha*n2)/npts - alpha*n2p
        slope_in_alpha = r * t.n2 - n2p * npts
        if slope_in_alpha != 0:
            pairs.append((r * dsum, slope_in_alpha))
    out = []
    for b in range(1, npts * npts + 1):
        top = math.floor(upper * b)
        nb = npts * b
        for a in range(0, top + 1):
            if math.gcd(a, b) != 1:
                continue
            for const, lin in pairs:
                if (const * b + a * lin) % nb == 0:
                    out.append(Fraction(a, b))
                    break
    return sorted(out)


def oracle_critical_values(t: TripleType, cap: Optional[Number] = None) -> List[Fraction]:
    return oracle_alpha_set(t, alpha_range_upper(t, cap))


def normalize(t: TripleType) -> Tuple[TripleType, bool]:
    """Return ``(t', dualized)`` with ``t'.n1 >= t'.n2``."""
    if t.n1 < t.n2:
        return dual(t), True
    return t, False


@dataclass
class ConsistencyReport:
    p: int
    q: int
    genus: int
    checked: int = 0
    boundary: List[HiggsType] = field(default_factory=list)
    violations: List[HiggsType] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def minima_triple(h: HiggsType, g: int) -> TripleType:
    """Triple of the minima side of ``h``, dualized so that n1 >= n2."""
    return normalize(higgs_to_triple(h, g, minima_side(h)))[0]


def mw_alpha_consistency(p: int, q: int, g: int,
                         dv_range: Tuple[int, int],
                         dw_range: Tuple[int, int]) -> ConsistencyReport:
    """Compare the Milnor-Wood bound with ``2g - 2 <= alpha_M`` over a window.

    A point is a violation when the two tests disagree, or when only one of
    them holds with equality.  Points where both are equalities are collected
    in ``boundary``.
    """
    if p == q:
        raise InputError("p = q: alpha range is unbounded, the comparison is vacuous")
    alpha = canonical_degree(g)
    report = ConsistencyReport(p, q, g)
    for d_V, d_W in window_points(dv_range, dw_range):
        h = HiggsType(p, q, d_V, d_W)
        a_max = alpha_max(minima_triple(h, g)).value
        report.checked += 1
        on_mw_boundary = mw_value(h) == mw_bound(p, q, g)
        if is_allowed(h, g) != (alpha <= a_max) or on_mw_boundary != (a_max == alpha):
            report.violations.append(h)
        elif on_mw_boundary:
            report.boundary.append(h)
    return report


def margins_vanish_at_walls(t: TripleType, walls: List[Wall]) -> bool:
    return all(subtriple_margin(w, t, wall.alpha) == 0
               for wall in walls for w in wall.witnesses)
