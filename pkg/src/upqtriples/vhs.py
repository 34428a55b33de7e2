"""Hodge chains and the numerical obstruction to being a local minimum.

A critical point of the Higgs-field norm is a chain ``F_1 -> F_2 -> ... -> F_m``
whose pieces alternate between V and W.  ``End(E)`` splits into weight pieces
``U_k = sum_{i-j=k} Hom(F_j, F_i)`` and ad(Phi) maps ``U_k -> U_{k+1} (x) K``.
A chain is not a local minimum once some complex ``U_{2k} -> U_{2k+1} (x) K``
fails to be an isomorphism; here that is tested through ranks and degrees.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple, Union

import numpy as np

from .invariants import HiggsType, InputError, canonical_degree

SIDES = ("V", "W")


@dataclass(frozen=True)
class HodgeChain:
    ranks: Tuple[int, ...]
    degrees: Tuple[int, ...]
    sides: Tuple[str, ...]

    def __post_init__(self):
        m = len(self.ranks)
        if m < 1:
            raise InputError("a Hodge chain needs at least one piece")
        if len(self.degrees) != m or len(self.sides) != m:
            raise InputError("ranks, degrees and sides must have equal length")
        if any(r < 1 for r in self.ranks):
            raise InputError(f"ranks must be positive: {self.ranks}")
        if any(s not in SIDES for s in self.sides):
            raise InputError(f"sides must be V or W: {self.sides}")
        if any(a == b for a, b in zip(self.sides, self.sides[1:])):
            raise InputError(f"sides must alternate: {''.join(self.sides)}")

    @classmethod
    def alternating(cls, ranks: Sequence[int], degrees: Optional[Sequence[int]] = None,
                    start: str = "V") -> "HodgeChain":
        if degrees is None:
            degrees = [0] * len(ranks)
        other = "W" if start == "V" else "V"
        sides = tuple(start if i % 2 == 0 else other for i in range(len(ranks)))
        return cls(tuple(ranks), tuple(degrees), sides)

    @property
    def length(self) -> int:
        return len(self.ranks)


class GradedPiece(NamedTuple):
    k: int
    rank: int
    degree: int


@dataclass(frozen=True)
class Minimum:
    pass


@dataclass(frozen=True)
class NotMinimumNumerical:
    k: int


@dataclass(frozen=True)
class NotMinimumByLemma:
    pass


MinimaVerdict = Union[Minimum, NotMinimumNumerical, NotMinimumByLemma]


def adjoint_grading(chain: HodgeChain) -> List[GradedPiece]:
    """Rank and degree of each ``U_k`` for ``-(m-1) <= k <= m-1``."""
    m = chain.length
    ranks = [0] * (2 * m - 1)
    degs = [0] * (2 * m - 1)
    pieces = list(zip(chain.ranks, chain.degrees))
    for i, (ri, di) in enumerate(pieces):
        for j, (rj, dj) in enumerate(pieces):
            # Hom(F_j, F_i) sits in weight i - j
            ranks[i - j + m - 1] += ri * rj
            degs[i - j + m - 1] += rj * di - ri * dj
    return [GradedPiece(k, ranks[k + m - 1], degs[k + m - 1]) for k in range(-(m - 1), m)]


def _weights(chain: HodgeChain) -> Dict[int, GradedPiece]:
    return {u.k: u for u in adjoint_grading(chain)}


def _piece(table: Dict[int, GradedPiece], k: int) -> GradedPiece:
    return table.get(k) or GradedPiece(k, 0, 0)


def _feasible(u: GradedPiece, v: GradedPiece, kdeg: int) -> bool:
    return u.rank == v.rank and u.degree == v.degree + kdeg * v.rank


def iso_feasible(chain: HodgeChain, k: int, g: int) -> bool:
    """Whether ``U_k -> U_{k+1} (x) K`` can be an isomorphism, judging by rank and degree.

    A necessary condition only.
    """
    table = _weights(chain)
    return _feasible(_piece(table, k), _piece(table, k + 1), canonical_degree(g))


def classify_chain(chain: HodgeChain, g: int) -> MinimaVerdict:
    m = chain.length
    if m <= 2:
        return Minimum()
    kdeg = canonical_degree(g)
    table = _weights(chain)
    for k in range(2, m, 2):
        u, v = _piece(table, k), _piece(table, k + 1)
        if (u.rank, v.rank) == (0, 0):
            continue
        if not _feasible(u, v, kdeg):
            return NotMinimumNumerical(k)
    # every even-weight test passed numerically; the chain is still not a minimum
    return NotMinimumByLemma()


def grading_coefficients(ranks: Sequence[int]) -> Tuple[np.ndarray, np.ndarray]:
    """Ranks of ``U_k`` and the matrix taking a degree vector to the degrees of ``U_k``.

    Rows are indexed by ``k + m - 1``.
    """
    m = len(ranks)
    rank = np.zeros(2 * m - 1, dtype=np.int64)
    coef = np.zeros((2 * m - 1, m), dtype=np.int64)
    for i, ri in enumerate(ranks):
        for j, rj in enumerate(ranks):
            rank[i - j + m - 1] += ri * rj
            coef[i - j + m - 1, i] += rj
            coef[i - j + m - 1, j] -= ri
    return rank, coef


def classify_degrees(ranks: Sequence[int], degrees: np.ndarray, g: int) -> np.ndarray:
    """Vectorized ``classify_chain`` over rows of ``degrees`` for one rank tuple.

    Returns 0 for Minimum, the offending k for NotMinimumNumerical and -1 for
    NotMinimumByLemma.
    """
    degrees = np.asarray(degrees, dtype=np.int64).reshape(-1, len(ranks))
    m = len(ranks)
    out = np.zeros(len(degrees), dtype=np.int64)
    if m <= 2:
        return out
    kdeg = canonical_degree(g)
    rank, coef = grading_coefficients(ranks)
    graded = degrees @ coef.T
    out[:] = -1
    for k in range(2, m, 2):
        ru = rank[k + m - 1]
        rv = rank[k + m] if k + 1 <= m - 1 else 0
        if ru == 0 and rv == 0:
            continue
        du = graded[:, k + m - 1]
        dv = graded[:, k + m] if k + 1 <= m - 1 else 0
        bad = (du != dv + kdeg * rv) if ru == rv else np.ones(len(degrees), dtype=bool)
        out[(out == -1) & bad] = k
    return out


def chain_to_higgs(chain: HodgeChain) -> HiggsType:
    tot = {s: [0, 0] for s in SIDES}
    for r, d, s in zip(chain.ranks, chain.degrees, chain.sides):
        tot[s][0] += r
        tot[s][1] += d
    (p, d_V), (q, d_W) = tot["V"], tot["W"]
    if p == 0 or q == 0:
        raise InputError("one-sided chain does not give a U(p,q)-Higgs bundle")
    return HiggsType(p, q, d_V, d_W)
