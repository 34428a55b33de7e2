"""Topological invariants of U(p,q)-Higgs bundles and holomorphic triples.

Rational quantities are ``fractions.Fraction`` throughout; nothing in this
package ever rounds.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Tuple


class InputError(ValueError):
    """Raised for arguments outside an operation's domain."""


class InvariantViolation(RuntimeError):
    """Raised when two independent computations disagree."""


def check_genus(g: int) -> int:
    if not isinstance(g, int) or isinstance(g, bool):
        raise InputError(f"genus must be an integer, got {g!r}")
    if g < 2:
        raise InputError(f"genus must be >= 2, got {g}")
    return g


def canonical_degree(g: int) -> int:
    """Degree of the canonical bundle, 2g - 2."""
    return 2 * check_genus(g) - 2


@dataclass(frozen=True)
class SurfaceData:
    genus: int

    def __post_init__(self):
        check_genus(self.genus)

    @property
    def canonical_degree(self) -> int:
        return 2 * self.genus - 2


@dataclass(frozen=True, order=True)
class HiggsType:
    """Ranks and degrees of ``E = V + W`` for a U(p,q)-Higgs bundle."""

    p: int
    q: int
    d_V: int
    d_W: int

    def __post_init__(self):
        if self.p < 1 or self.q < 1:
            raise InputError(f"ranks must be positive, got p={self.p}, q={self.q}")

    def swapped(self) -> "HiggsType":
        return HiggsType(self.q, self.p, self.d_W, self.d_V)


@dataclass(frozen=True, order=True)
class TripleType:
    """Numerical type ``(n1, n2, d1, d2)`` of a triple ``phi: E2 -> E1``."""

    n1: int
    n2: int
    d1: int
    d2: int

    def __post_init__(self):
        if self.n1 < 0 or self.n2 < 0:
            raise InputError(f"ranks must be non-negative: {self}")
        # a zero-rank bundle has degree zero
        if (self.n1 == 0 and self.d1 != 0) or (self.n2 == 0 and self.d2 != 0):
            raise InputError(f"zero-rank summand with non-zero degree: {self}")

    @property
    def rank(self) -> int:
        return self.n1 + self.n2

    @property
    def degree(self) -> int:
        return self.d1 + self.d2

    def twist(self, c: int) -> "TripleType":
        """Invariants after tensoring both bundles by a line bundle of degree c."""
        return TripleType(self.n1, self.n2, self.d1 + c * self.n1, self.d2 + c * self.n2)

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return (self.n1, self.n2, self.d1, self.d2)


class MinimaType(enum.Enum):
    """Which off-diagonal component of the Higgs field vanishes at a minimum."""

    CZero = "CZero"
    BZero = "BZero"
    Both = "Both"


def mw_bound(p: int, q: int, g: int) -> Fraction:
    """Right-hand side ``min(p, q) * (g - 1)`` of the Milnor-Wood inequality."""
    check_genus(g)
    if p < 1 or q < 1:
        raise InputError(f"ranks must be positive, got p={p}, q={q}")
    return Fraction(min(p, q) * (g - 1))


def mw_value(h: HiggsType) -> Fraction:
    """Toledo-type quantity ``|q d_V - p d_W| / (p + q)``."""
    return Fraction(abs(h.q * h.d_V - h.p * h.d_W), h.p + h.q)


def is_allowed(h: HiggsType, g: int) -> bool:
    """True when ``(d_V, d_W)`` satisfies the (non-strict) Milnor-Wood bound."""
    return mw_value(h) <= mw_bound(h.p, h.q, g)


def _window_values(lo_hi: Tuple[int, int]) -> range:
    lo, hi = lo_hi
    return range(lo, hi + 1)


def census(p: int, q: int, g: int,
           dv_range: Tuple[int, int], dw_range: Tuple[int, int]) -> List[HiggsType]:
    """All allowed ``(d_V, d_W)`` in an inclusive window, sorted by ``(d_V, d_W)``."""
    mw_bound(p, q, g)
    dvs, dws = _window_values(dv_range), _window_values(dw_range)
    if not dvs or not dws:
        raise InputError(f"empty window {dv_range} x {dw_range}")
    out = []
    for d_V in dvs:
        for d_W in dws:
            h = HiggsType(p, q, d_V, d_W)
            if is_allowed(h, g):
                out.append(h)
    return out


def minima_type(h: HiggsType) -> MinimaType:
    # d_V/p against d_W/q, cross-multiplied
    lhs, rhs = h.q * h.d_V, h.p * h.d_W
    if lhs < rhs:
        return MinimaType.CZero
    if lhs > rhs:
        return MinimaType.BZero
    return MinimaType.Both


def _check_side(side: MinimaType) -> MinimaType:
    side = MinimaType(side)
    if side is MinimaType.Both:
        raise InputError("side must be CZero or BZero")
    return side


def higgs_to_triple(h: HiggsType, g: int, side: MinimaType) -> TripleType:
    """Triple attached to a minimum with ``c = 0`` (E1 = V(K), E2 = W) or ``b = 0``.

    The ``b = 0`` side is the mirror image: E1 = W(K), E2 = V.
    """
    k = canonical_degree(g)
    if _check_side(side) is MinimaType.CZero:
        return TripleType(h.p, h.q, h.d_V + h.p * k, h.d_W)
    return TripleType(h.q, h.p, h.d_W + h.q * k, h.d_V)


def triple_to_higgs(t: TripleType, g: int, side: MinimaType) -> HiggsType:
    k = canonical_degree(g)
    if _check_side(side) is MinimaType.CZero:
        return HiggsType(t.n1, t.n2, t.d1 - t.n1 * k, t.d2)
    return HiggsType(t.n2, t.n1, t.d2, t.d1 - t.n1 * k)


def minima_side(h: HiggsType) -> MinimaType:
    """Side used for the triple of ``h``; ties resolve to ``CZero``."""
    mt = minima_type(h)
    return MinimaType.CZero if mt is MinimaType.Both else mt


def window_points(dv_range: Tuple[int, int],
                  dw_range: Tuple[int, int]) -> Iterable[Tuple[int, int]]:
    for d_V in _window_values(dv_range):
        for d_W in _window_values(dw_range):
            yield d_V, d_W
