"""Presentation of the center: monoid generators and the exact Hilbert series."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import polys
from .core import ExponentWord, SkewParams
from .errors import BudgetExceeded
from .zlinalg import kernel_lattice

RESIDUE_BUDGET = 10**5


@dataclass(frozen=True)
class RationalSeries:
    """``numerator / prod_d (1 - t^d)`` together with its reduced form.

    ``reduced_numerator / reduced_denominator`` is the same rational
    function after cancelling the polynomial gcd; the reduced denominator
    has constant term 1.
    """

    numerator: tuple[int, ...]
    denominator_exponents: tuple[int, ...]
    reduced_numerator: tuple[int, ...]
    reduced_denominator: tuple[int, ...]

    @classmethod
    def from_raw(cls, numerator: Sequence[int], denominator_exponents: Sequence[int]) -> "RationalSeries":
        num = polys.trim(numerator)
        den = polys.product_one_minus(denominator_exponents)
        g = polys.gcd_poly(num, den)
        rnum, rden = polys.exact_div(num, g), polys.exact_div(den, g)
        if rden[0] < 0:
            rnum, rden = [-c for c in rnum], [-c for c in rden]
        return cls(tuple(num), tuple(denominator_exponents), tuple(rnum), tuple(rden))

    def denominator(self) -> list[int]:
        return polys.product_one_minus(self.denominator_exponents)

    def to_dict(self) -> dict:
        return {
            "numerator": list(self.numerator),
            "denominator_exponents": list(self.denominator_exponents),
            "reduced": {
                "numerator": list(self.reduced_numerator),
                "denominator": list(self.reduced_denominator),
            },
        }


def same_rational_function(n1: Sequence[int], d1: Sequence[int], n2: Sequence[int], d2: Sequence[int]) -> bool:
    """Cross-multiplication test ``n1 * d2 == n2 * d1``."""
    return polys.mul(n1, d2) == polys.mul(n2, d1)


@dataclass(frozen=True)
class CenterPresentation:
    generators: tuple[ExponentWord, ...]
    series: RationalSeries
    numerator_cyclotomic: bool

    def to_dict(self) -> dict:
        return {
            "generators": [list(g) for g in self.generators],
            "series": self.series.to_dict(),
            "numerator_cyclotomic": self.numerator_cyclotomic,
        }


def _residues(p: SkewParams, budget: int) -> tuple[tuple[int, ...], ...]:
    lat = kernel_lattice(p)
    if lat.residue_count() > budget:
        raise BudgetExceeded(f"BudgetExceeded: {lat.residue_count()} central residues > {budget}")
    return lat.residues


def center_generators(p: SkewParams, budget: int = RESIDUE_BUDGET) -> list[ExponentWord]:
    """Minimal generators of the monoid ``{u >= 0 : B u = 0 mod ell}``.

    Every irreducible element lies in ``[0, ell]^n``, so the candidates are
    the residues in ``[0, ell)^n`` plus the words ``ell * e_i``.  Scanning
    in degree order, a candidate is kept iff no kept generator sits
    below it componentwise.
    """
    cands = [r for r in _residues(p, budget) if any(r)]
    cands += [tuple(p.ell * (i == j) for j in range(p.n)) for i in range(p.n)]
    cands.sort(key=lambda u: (sum(u), u))
    gens: list[ExponentWord] = []
    for u in cands:
        if not any(all(g[k] <= u[k] for k in range(p.n)) for g in gens):
            gens.append(u)
    return gens


def hilbert_series(p: SkewParams, budget: int = RESIDUE_BUDGET) -> RationalSeries:
    """Hilbert series of the center as ``sum_r t^|r| / (1 - t^ell)^n``.

    The center is free over ``k[x_1^ell, ..., x_n^ell]`` on the residue
    monomials, since each central word splits uniquely as residue plus
    ``ell`` times a nonnegative vector.
    """
    num = [0] * (p.n * (p.ell - 1) + 1)
    for r in _residues(p, budget):
        num[sum(r)] += 1
    return RationalSeries.from_raw(num, [p.ell] * p.n)


def expand_series(s: RationalSeries, degree_bound: int) -> list[int]:
    """Power-series coefficients of ``s`` in degrees ``0..degree_bound``."""
    if degree_bound < 0:
        raise ValueError("degree_bound must be nonnegative")
    coeffs = list(s.numerator[: degree_bound + 1]) + [0] * max(0, degree_bound + 1 - len(s.numerator))
    for d in s.denominator_exponents:
        # multiply by 1/(1 - t^d)
        for k in range(d, degree_bound + 1):
            coeffs[k] += coeffs[k - d]
    return coeffs


def numerator_is_cyclotomic(s: RationalSeries) -> bool:
    """Hypersurface-shape test: ``s == (1 - t^d) / prod_i (1 - t^a_i)``.

    The series is written uniquely as ``prod_k (1 - t^k)^{c_k}`` (possible
    iff the reduced numerator and denominator are products of cyclotomic
    polynomials); the test passes iff at most one factor survives upstairs.
    This is a necessary condition for a hypersurface ring, never a proof.
    """
    c = polys.one_minus_exponents(list(s.reduced_numerator), list(s.reduced_denominator))
    if c is None:
        return False
    return sum(v for v in c.values() if v > 0) <= 1


def center_presentation(p: SkewParams, budget: int = RESIDUE_BUDGET) -> CenterPresentation:
    series = hilbert_series(p, budget)
    return CenterPresentation(
        generators=tuple(center_generators(p, budget)),
        series=series,
        numerator_cyclotomic=numerator_is_cyclotomic(series),
    )
