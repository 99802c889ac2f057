"""Exponent invariants: the f-vector, ozone words, orders and homological determinants."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod
from typing import Optional, Sequence

from .core import ExponentWord, SkewParams, validate_and_normalize
from .errors import CommutativeRing, WrongDimension
from .zlinalg import image_order, kernel_lattice


@dataclass(frozen=True)
class InvariantProfile:
    """Combinatorial invariants of one ring.

    ``f[i]`` is the gcd (equivalently the least positive value) of the
    ``i``-th exponent over all central monomials.  The ozone Jacobian,
    arrangement and discriminant and the product of generators are kept
    as exponent words ``oj``, ``oa``, ``od``, ``pg``.
    """

    f: tuple[int, ...]
    oj: ExponentWord
    oa: ExponentWord
    od: ExponentWord
    pg: ExponentWord
    o_phi: tuple[int, ...]
    order_O: int
    order_H: int

    def to_dict(self) -> dict:
        return {
            "f": list(self.f),
            "oj": list(self.oj),
            "oa": list(self.oa),
            "od": list(self.od),
            "pg": list(self.pg),
            "o_phi": list(self.o_phi),
            "order_O": self.order_O,
            "order_H": self.order_H,
        }


def f_vector(p: SkewParams) -> tuple[int, ...]:
    """gcd of each coordinate over a generating set of the central lattice."""
    cols = kernel_lattice(p).columns()
    return tuple(gcd(*(c[j] for c in cols)) for j in range(p.n))


def generator_orders(p: SkewParams) -> tuple[int, ...]:
    """Order of conjugation by each ``x_i``: ``ell / gcd(column i, ell)``."""
    return tuple(p.ell // gcd(p.ell, *p.column(i)) for i in range(p.n))


def exponent_invariants(p: SkewParams) -> InvariantProfile:
    f = f_vector(p)
    oj = tuple(x - 1 for x in f)
    oa = tuple(int(x > 1) for x in f)
    return InvariantProfile(
        f=f,
        oj=oj,
        oa=oa,
        od=tuple(a + b for a, b in zip(oj, oa)),
        pg=(1,) * p.n,
        o_phi=generator_orders(p),
        order_O=image_order(p),
        order_H=prod(f),
    )


def f_closed_form_n3(p: SkewParams) -> tuple[int, int, int]:
    """For three variables: ``(gcd(b23, ell), gcd(b13, ell), gcd(b12, ell))``."""
    if p.n != 3:
        raise WrongDimension(f"WrongDimension: closed form needs n=3, got {p.n}")
    b, ell = p.b, p.ell
    return (gcd(b[1][2], ell), gcd(b[0][2], ell), gcd(b[0][1], ell))


def hdet_exponent(p: SkewParams, u: Sequence[int]) -> int:
    """Exponent of ``hdet(phi_1^u_1 ... phi_n^u_n)`` as a residue mod ``ell``.

    Each ``phi_i`` scales ``x_s`` by ``xi^{b_is}``, and hdet of a diagonal
    map is the product of its eigenvalues.
    """
    if len(u) != p.n:
        raise WrongDimension(f"expected {p.n} exponents, got {len(u)}")
    return sum(u[i] * sum(p.b[i]) for i in range(p.n)) % p.ell


def has_trivial_hdet(p: SkewParams) -> bool:
    return all(sum(row) % p.ell == 0 for row in p.b)


@dataclass(frozen=True)
class FixedSubringParams:
    """Subring fixed by the reflections, on the variables ``x_i^{f_i}``.

    ``params`` is ``None`` when that subring is commutative (a polynomial
    ring); ``raw_b`` keeps the exponents ``b_ij f_i f_j mod ell``.
    """

    generator_powers: tuple[int, ...]
    raw_b: tuple[tuple[int, ...], ...]
    params: Optional[SkewParams]

    @property
    def commutative(self) -> bool:
        return self.params is None


def fixed_subring(p: SkewParams) -> FixedSubringParams:
    f = f_vector(p)
    raw = tuple(
        tuple(p.b[i][j] * f[i] * f[j] % p.ell for j in range(p.n)) for i in range(p.n)
    )
    try:
        params = validate_and_normalize(raw, p.ell)
    except CommutativeRing:
        params = None
    return FixedSubringParams(generator_powers=f, raw_b=raw, params=params)
