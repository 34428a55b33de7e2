"""Euler characteristics of the extension complex of triples.

For triples T'' and T' the extensions of T'' by T' sit in the first
hypercohomology of the two-term complex

    Hom(E1'', E1') + Hom(E2'', E2')  -->  Hom(E2'', E1')
    (psi1, psi2)  |-->  phi' psi2 - psi1 phi''

Only Euler characteristics are computed, using Riemann-Roch on a curve of
genus g: chi(F) = deg F + rk F (1 - g).  The dimension count
``1 - chi(T, T)`` is the standard expected dimension at a smooth stable point.
"""
from __future__ import annotations

from dataclasses import dataclass

from .invariants import InputError, TripleType, check_genus


@dataclass(frozen=True)
class ChiReport:
    chi_total: int
    chi_term0: int
    chi_term1: int

    def __post_init__(self):
        if self.chi_total != self.chi_term0 - self.chi_term1:
            raise ValueError("chi_total must equal chi_term0 - chi_term1")


def chi_bundle(n: int, d: int, g: int) -> int:
    """Riemann-Roch for a rank ``n``, degree ``d`` bundle on a genus ``g`` curve."""
    check_genus(g)
    if n < 0:
        raise InputError(f"negative rank {n}")
    if n == 0 and d != 0:
        raise InputError(f"rank-zero bundle with degree {d}")
    return d + n * (1 - g)


def _chi_hom(n_src: int, d_src: int, n_dst: int, d_dst: int, g: int) -> int:
    # Hom(A, B) = A* (x) B
    return chi_bundle(n_src * n_dst, n_src * d_dst - n_dst * d_src, g)


def hom_complex_chi(tpp: TripleType, tp: TripleType, g: int) -> ChiReport:
    """Euler characteristic of the complex computing extensions of ``tpp`` by ``tp``."""
    term0 = (_chi_hom(tpp.n1, tpp.d1, tp.n1, tp.d1, g)
             + _chi_hom(tpp.n2, tpp.d2, tp.n2, tp.d2, g))
    term1 = _chi_hom(tpp.n2, tpp.d2, tp.n1, tp.d1, g)
    return ChiReport(term0 - term1, term0, term1)


def expected_dim(t: TripleType, g: int) -> int:
    """``1 - chi(T, T)``; the dimension of the moduli space at smooth stable points.

    Smoothness is guaranteed for alpha >= 2g - 2.
    """
    if t.n1 < 1 or t.n2 < 1:
        raise InputError(f"expected_dim needs n1, n2 >= 1: {t}")
    return 1 - hom_complex_chi(t, t, g).chi_total
