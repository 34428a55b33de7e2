"""Slope and alpha-slope arithmetic for holomorphic triples."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .invariants import InputError, TripleType

Number = Union[int, Fraction]


@dataclass(frozen=True, order=True)
class SubtripleClass:
    """Ranks ``(n1', n2')`` and total degree ``d1' + d2'`` of a candidate subtriple."""

    n1p: int
    n2p: int
    dtot: int

    @property
    def rank(self) -> int:
        return self.n1p + self.n2p

    def is_proper_in(self, t: TripleType) -> bool:
        if not (0 <= self.n1p <= t.n1 and 0 <= self.n2p <= t.n2):
            return False
        return (self.n1p, self.n2p) not in ((0, 0), (t.n1, t.n2))

    def quotient_in(self, t: TripleType) -> "SubtripleClass":
        return SubtripleClass(t.n1 - self.n1p, t.n2 - self.n2p, t.degree - self.dtot)


@dataclass(frozen=True)
class AlphaBound:
    """Upper end of the non-empty alpha range; ``value is None`` means unbounded."""

    value: Optional[Fraction]

    @property
    def unbounded(self) -> bool:
        return self.value is None

    def __str__(self):
        return "Unbounded" if self.value is None else f"Finite({self.value})"


UNBOUNDED = AlphaBound(None)


def slope(n: int, d: int) -> Fraction:
    if n < 1:
        raise InputError(f"slope needs positive rank, got {n}")
    return Fraction(d, n)


def alpha_slope(t: TripleType, alpha: Number) -> Fraction:
    """``mu(E1 + E2) + alpha * n2 / (n1 + n2)``."""
    if t.rank < 1:
        raise InputError(f"alpha-slope of a rank-zero triple: {t}")
    return Fraction(t.degree + alpha * t.n2, t.rank)


def alpha_max(t: TripleType) -> AlphaBound:
    """Largest alpha for which alpha-stable triples of type ``t`` can exist.

    Only defined for ``n1 >= n2``; dualize first otherwise.
    """
    if t.n1 < 1 or t.n2 < 1:
        raise InputError(f"alpha_max needs n1, n2 >= 1: {t}")
    if t.n1 < t.n2:
        raise InputError(f"n1 < n2 in {t}; apply dual() first")
    if t.n1 == t.n2:
        return UNBOUNDED
    gap = slope(t.n1, t.d1) - slope(t.n2, t.d2)
    return AlphaBound(Fraction(2 * t.n1, t.n1 - t.n2) * gap)


def dual(t: TripleType) -> TripleType:
    """Invariants of the dual triple ``E1* -> E2*``."""
    return TripleType(t.n2, t.n1, -t.d2, -t.d1)


def sub_alpha_slope(sub: SubtripleClass, alpha: Number) -> Fraction:
    return Fraction(sub.dtot + alpha * sub.n2p, sub.rank)


def subtriple_margin(sub: SubtripleClass, t: TripleType, alpha: Number) -> Fraction:
    """``mu_alpha(t) - mu_alpha(sub)``; negative means ``sub`` destabilizes."""
    if not sub.is_proper_in(t):
        raise InputError(f"{sub} is not a proper class of {t}")
    return alpha_slope(t, alpha) - sub_alpha_slope(sub, alpha)
