"""Exhaustive consistency sweeps over small grids.

Each sweep pits a formula against an independent computation (or an
invariance) and records every disagreement.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, List, Sequence, Tuple

import numpy as np

from . import walls as ch
from .extensions import expected_dim
from .invariants import HiggsType, MinimaType, TripleType, higgs_to_triple, triple_to_higgs
from .stability import SubtripleClass, alpha_max, dual, subtriple_margin
from .vhs import (
    HodgeChain,
    Minimum,
    NotMinimumNumerical,
    classify_chain,
    classify_degrees,
    grading_coefficients,
)


@dataclass
class SweepResult:
    name: str
    checked: int = 0
    failures: List[object] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, ok: bool, case: object) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(case)


def triple_grid(rank_sum: int, degree_bound: int, ordered: bool = True) -> Iterator[TripleType]:
    """Triples with n1, n2 >= 1, n1 + n2 <= rank_sum and |d_i| <= degree_bound.

    With ``ordered`` only n1 >= n2 is produced.
    """
    degs = range(-degree_bound, degree_bound + 1)
    for n in range(2, rank_sum + 1):
        for n2 in range(1, n):
            n1 = n - n2
            if ordered and n1 < n2:
                continue
            for d1, d2 in itertools.product(degs, degs):
                yield TripleType(n1, n2, d1, d2)


def _cap_for(t: TripleType, cap) -> object:
    return cap if t.n1 == t.n2 else None


def sweep_mw_alpha(max_rank: int = 4, genera: Sequence[int] = (2, 3, 4),
                   window: Tuple[int, int] = (-10, 10)) -> SweepResult:
    res = SweepResult("mw_alpha_consistency")
    for p, q in itertools.product(range(1, max_rank + 1), repeat=2):
        if p == q:
            continue
        for g in genera:
            rep = ch.mw_alpha_consistency(p, q, g, window, window)
            res.checked += rep.checked
            res.failures.extend((h, g) for h in rep.violations)
    return res


def sweep_oracle(rank_sum: int = 5, degree_bound: int = 6, cap=Fraction(10)) -> SweepResult:
    """Formula walls against the denominator-bounded oracle scan."""
    res = SweepResult("chamber_oracle_equivalence")
    for t in triple_grid(rank_sum, degree_bound):
        c = _cap_for(t, cap)
        walls = ch.critical_values(t, c)
        alphas = [w.alpha for w in walls]
        res.record(alphas == ch.oracle_critical_values(t, c), t)
    return res


def sweep_wall_witnesses(rank_sum: int = 5, degree_bound: int = 6,
                         cap=Fraction(10)) -> SweepResult:
    """Witness margins vanish on walls; no non-constant class vanishes at chamber midpoints."""
    res = SweepResult("wall_witness_margins")
    for t in triple_grid(rank_sum, degree_bound):
        c = _cap_for(t, cap)
        walls = ch.critical_values(t, c)
        ok = ch.margins_vanish_at_walls(t, walls)
        for cell in ch.chambers(t, c):
            mid = cell.midpoint()
            ok = ok and not any(
                ch.wall_alpha(sub, t) == mid for sub in _classes_near(t, mid))
        res.record(ok, t)
    return res


def _classes_near(t: TripleType, alpha: Fraction):
    for n1p, n2p in ch.proper_rank_pairs(t):
        sub = SubtripleClass(n1p, n2p, 0)
        # margin is affine in dtot with slope -1/rank, so only one dtot can vanish
        target = subtriple_margin(sub, t, alpha) * (n1p + n2p)
        if target.denominator == 1:
            yield SubtripleClass(n1p, n2p, int(target))


def sweep_duality(rank_sum: int = 5, degree_bound: int = 6, cap=Fraction(10)) -> SweepResult:
    """Walls of t and of dual(t) agree on the same alpha range."""
    res = SweepResult("duality")
    for t in triple_grid(rank_sum, degree_bound):
        upper = ch.alpha_range_upper(t, _cap_for(t, cap))
        mine = [w.alpha for w in ch.walls_in_range(t, upper)]
        theirs = [w.alpha for w in ch.walls_in_range(dual(t), upper)]
        oracle = ch.oracle_alpha_set(dual(t), upper)
        res.record(mine == theirs == oracle and dual(dual(t)) == t, t)
    return res


def sweep_twist(rank_sum: int = 5, degree_bound: int = 6, cap=Fraction(10),
                twists: Sequence[int] = (-2, -1, 1, 2)) -> SweepResult:
    res = SweepResult("twist_invariance")
    for t in triple_grid(rank_sum, degree_bound):
        c = _cap_for(t, cap)
        base = ([w.alpha for w in ch.critical_values(t, c)], alpha_max(t))
        for k in twists:
            tt = t.twist(k)
            other = ([w.alpha for w in ch.critical_values(tt, c)], alpha_max(tt))
            res.record(base == other, (t, k))
    return res


def closed_form_dim(t: TripleType, g: int) -> int:
    return (g - 1) * (t.n1 ** 2 + t.n2 ** 2 - t.n1 * t.n2) + t.n2 * t.d1 - t.n1 * t.d2 + 1


def sweep_expected_dim(rank_sum: int = 6, degree_bound: int = 6,
                       genera: Sequence[int] = (2, 3, 4)) -> SweepResult:
    res = SweepResult("expected_dim_closed_form")
    for t in triple_grid(rank_sum, degree_bound, ordered=False):
        for g in genera:
            dim = expected_dim(t, g)
            res.record(dim == closed_form_dim(t, g) and dim == expected_dim(t.twist(1), g),
                       (t, g))
    return res


def verdict_code(v) -> int:
    if isinstance(v, Minimum):
        return 0
    if isinstance(v, NotMinimumNumerical):
        return v.k
    return -1


def sweep_vhs(max_length: int = 5, max_rank: int = 3, degree_bound: int = 3,
              genera: Sequence[int] = (2,), scalar_length: int = 4,
              scalar_stride: int = 101) -> SweepResult:
    """Chains of length <= 2 are minima, longer ones never are; grading sums check out.

    The whole grid is classified in batch per rank tuple.  The scalar
    classifier must agree on every chain up to ``scalar_length`` pieces and on
    every ``scalar_stride``-th chain beyond.
    """
    res = SweepResult("vhs_minima")
    degs = range(-degree_bound, degree_bound + 1)
    for m in range(1, max_length + 1):
        table = np.array(list(itertools.product(degs, repeat=m)), dtype=np.int64)
        for r in itertools.product(range(1, max_rank + 1), repeat=m):
            rank, coef = grading_coefficients(r)
            graded = table @ coef.T
            sums_ok = rank.sum() == sum(r) ** 2 and (rank == rank[::-1]).all()
            sums_ok &= (graded.sum(axis=1) == 0) & ((graded + graded[:, ::-1]) == 0).all(axis=1)
            for g in genera:
                codes = classify_degrees(r, table, g)
                ok = sums_ok & ((codes == 0) if m <= 2 else (codes != 0))
                if m % 2 == 1 and m >= 3:
                    # with m - 1 even the top weight is always obstructed
                    ok &= codes != -1
                stride = 1 if m <= scalar_length else scalar_stride
                for row in range(0, len(table), stride):
                    chain = HodgeChain.alternating(r, table[row].tolist())
                    if verdict_code(classify_chain(chain, g)) != codes[row]:
                        ok[row] = False
                res.checked += len(table)
                res.failures.extend((r, tuple(table[i]), g) for i in np.flatnonzero(~ok))
    return res


def sweep_roundtrip(genera: Sequence[int] = (2, 3, 4), max_rank: int = 4,
                    degree_bound: int = 6) -> SweepResult:
    res = SweepResult("higgs_triple_roundtrip")
    degs = range(-degree_bound, degree_bound + 1)
    for p, q in itertools.product(range(1, max_rank + 1), repeat=2):
        for d_V, d_W in itertools.product(degs, degs):
            h = HiggsType(p, q, d_V, d_W)
            for g in genera:
                for side in (MinimaType.CZero, MinimaType.BZero):
                    res.record(triple_to_higgs(higgs_to_triple(h, g, side), g, side) == h,
                               (h, g, side))
    return res


def run_all(max_rank: int = 4, genera: Sequence[int] = (2, 3, 4),
            window: Tuple[int, int] = (-10, 10), rank_sum: int = 5,
            degree_bound: int = 6, cap=Fraction(10)) -> List[SweepResult]:
    return [
        sweep_mw_alpha(max_rank, genera, window),
        sweep_oracle(rank_sum, degree_bound, cap),
        sweep_wall_witnesses(rank_sum, degree_bound, cap),
        sweep_duality(rank_sum, degree_bound, cap),
        sweep_twist(rank_sum, degree_bound, cap),
        sweep_expected_dim(rank_sum + 1, degree_bound, genera),
        sweep_vhs(),
        sweep_roundtrip(genera, max_rank, degree_bound),
    ]
