"""Auslander, regularity, Gorenstein and Calabi-Yau decisions.

The general decisions all reduce to the f-vector and congruences in ``B``.
:func:`crosscheck_low_n` re-derives them through the closed-form criteria
known for two, three and four variables so the two routes can be compared.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import gcd
from typing import Optional

from .core import SkewParams
from .invariants import f_closed_form_n3, f_vector, generator_orders, has_trivial_hdet
from .zlinalg import kernel_lattice, matvec, pfaffian

WITNESS_ENUMERATION_LIMIT = 10**5


@dataclass(frozen=True)
class ReflectionWitness:
    """A group word ``phi^u`` acting as ``x_axis -> xi^lam x_axis`` and fixing the rest.

    ``axis`` is 1-based (it names the variable ``x_axis``).
    """

    u: tuple[int, ...]
    axis: int
    lam: int

    def to_dict(self) -> dict:
        return {"u": list(self.u), "axis": self.axis, "lambda": self.lam}


@dataclass(frozen=True)
class Crosscheck:
    name: str
    value: bool
    status: str  # "agrees", "disagrees" or "vacuous"

    def to_dict(self) -> dict:
        return {"name": self.name, "value": self.value, "status": self.status}


@dataclass(frozen=True)
class ClassificationReport:
    auslander: bool
    regular: bool
    gorenstein: bool
    calabi_yau: bool
    reflection_witness: Optional[ReflectionWitness]
    crosschecks: tuple[Crosscheck, ...] = field(default=())
    isolated_singularities_note: str = "never_isolated"

    def to_dict(self) -> dict:
        return {
            "auslander": self.auslander,
            "regular": self.regular,
            "gorenstein": self.gorenstein,
            "calabi_yau": self.calabi_yau,
            "reflection_witness": self.reflection_witness.to_dict() if self.reflection_witness else None,
            "crosschecks": [c.to_dict() for c in self.crosschecks],
            "isolated_singularities_note": self.isolated_singularities_note,
        }


def is_small(p: SkewParams) -> bool:
    """True iff every ``f_i == 1``.

    This decides Auslander's theorem for the ozone action, pertinency at
    least two, and absence of reflections all at once.
    """
    return all(x == 1 for x in f_vector(p))


def _solve_axis(p: SkewParams, lat, axis: int, lam: int) -> Optional[tuple[int, ...]]:
    """Some ``u`` with ``u^T B = lam e_axis`` mod ell, or None."""
    ell, n = p.ell, p.n
    snf = lat.snf
    # u^T B = -(B u)^T, so solve B u = -lam e_axis through D v = L c.
    rhs = [snf.l[k][axis] * -lam for k in range(n)]
    v = []
    for d, c in zip(snf.d, rhs):
        g = gcd(d, ell)
        if c % g:
            return None
        m = ell // g
        v.append(0 if m == 1 else (c // g) * pow(d // g, -1, m) % m)
    return tuple(sum(snf.r[i][k] * v[k] for k in range(n)) % ell for i in range(n))


def _canonical(p: SkewParams, lat, u0: tuple[int, ...]) -> tuple[int, ...]:
    if lat.residue_count() > WITNESS_ENUMERATION_LIMIT:
        return u0
    ell = p.ell
    words = (tuple((a + b) % ell for a, b in zip(u0, r)) for r in lat.residues)
    return min(words, key=lambda u: (sum(u), u))


def reflection_witnesses(p: SkewParams) -> list[ReflectionWitness]:
    """For each axis carrying a reflection, the one with the least ``lam``.

    These are generators of the subgroup generated by reflections; the
    least ``lam`` on axis ``i`` is ``ell / f_i``.
    """
    lat = kernel_lattice(p)
    out = []
    for axis in range(p.n):
        for lam in range(1, p.ell):
            u0 = _solve_axis(p, lat, axis, lam)
            if u0 is not None:
                out.append(ReflectionWitness(_canonical(p, lat, u0), axis + 1, lam))
                break
    return out


def reflection_witness(p: SkewParams) -> Optional[ReflectionWitness]:
    """A reflection in the ozone group, or None iff the action is small.

    Axes are scanned from the last variable down, then ``lam`` upward.  The
    word ``u`` is the solution of least weight (ties broken
    lexicographically) when the solution coset is small enough to
    enumerate, otherwise the particular solution from the Smith form.
    """
    lat = kernel_lattice(p)
    for axis in reversed(range(p.n)):
        for lam in range(1, p.ell):
            u0 = _solve_axis(p, lat, axis, lam)
            if u0 is not None:
                return ReflectionWitness(_canonical(p, lat, u0), axis + 1, lam)
    return None


def is_regular(p: SkewParams) -> bool:
    """Center is the polynomial ring on ``x_i^{f_i}``: every ``f_i * column_i = 0`` mod ell."""
    f = f_vector(p)
    return all(f[i] * v % p.ell == 0 for i in range(p.n) for v in p.column(i))


def is_gorenstein(p: SkewParams) -> bool:
    """``B f = 0`` mod ell, i.e. the word ``x^f`` is central."""
    return all(v % p.ell == 0 for v in matvec(p.b, f_vector(p)))


def is_calabi_yau(p: SkewParams) -> bool:
    """Every row sum of ``B`` vanishes mod ell."""
    return has_trivial_hdet(p)


def _order(b: int, modulus: int) -> int:
    return modulus // gcd(b, modulus)


def _pairwise_coprime(values) -> bool:
    return all(gcd(a, b) == 1 for a, b in combinations(values, 2))


def _generator_power_is_reflection(p: SkewParams) -> bool:
    for row in p.b:
        for k in range(1, p.ell):
            if sum(1 for v in row if k * v % p.ell) == 1:
                return True
    return False


def crosscheck_low_n(p: SkewParams) -> list[tuple[str, bool]]:
    """Closed-form criteria for the current ``n``, named by what they decide.

    Names ending in ``_auslander``, ``_regular`` or ``_gorenstein`` are
    equivalences.  ``coprime_orders`` and ``pfaffian_nonzero`` report whether
    the hypothesis of a one-way implication holds.
    """
    n, ell, b = p.n, p.ell, p.b
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    out: list[tuple[str, bool]] = []
    if n == 2:
        out += [("n2_auslander", False), ("n2_regular", True), ("n2_gorenstein", True)]
    elif n == 3:
        out.append(("n3_auslander", all(gcd(b[i][j], ell) == 1 for i, j in pairs)))
        out.append(("n3_regular", _pairwise_coprime(_order(b[i][j], ell) for i, j in pairs)))
        fp = f_closed_form_n3(p)
        out.append(("n3_gorenstein", all(v % ell == 0 for v in matvec(b, fp))))
        out.append(("n3_f_closed_form", fp == f_vector(p)))
    elif n == 4:
        pf = pfaffian(p.skew_matrix())
        out.append(("n4_auslander", pf % ell == 0 and not _generator_power_is_reflection(p)))
        rho = gcd(ell, pf)
        out.append(("n4_regular", _pairwise_coprime(_order(gcd(b[i][j], rho), rho) for i, j in pairs)))
        v = [gcd(ell, *(b[j][k] for j in range(4) for k in range(4) if i not in (j, k))) for i in range(4)]
        scale = ell // gcd(pf, ell)
        out.append(("n4_gorenstein", all(scale * x % ell == 0 for x in matvec(b, v))))
    out.append(("coprime_orders", _pairwise_coprime(_order(b[i][j], ell) for i, j in pairs)))
    if n % 2 == 0:
        out.append(("pfaffian_nonzero", pfaffian(p.skew_matrix()) % ell != 0))
    return out


def _audit(p: SkewParams, decisions: dict[str, bool]) -> tuple[Crosscheck, ...]:
    checks = []
    for name, value in crosscheck_low_n(p):
        if name == "coprime_orders":
            # pairwise coprime orders force a regular center
            ok = decisions["regular"] if value else None
        elif name == "pfaffian_nonzero":
            # a Pfaffian not divisible by ell forces a reflection
            ok = (not decisions["auslander"]) if value else None
        elif name.endswith("_f_closed_form"):
            ok = value
        else:
            ok = value == decisions[name.rsplit("_", 1)[1]]
        status = "vacuous" if ok is None else ("agrees" if ok else "disagrees")
        checks.append(Crosscheck(name, value, status))
    return tuple(checks)


def classification_report(p: SkewParams) -> ClassificationReport:
    decisions = {
        "auslander": is_small(p),
        "regular": is_regular(p),
        "gorenstein": is_gorenstein(p),
        "calabi_yau": is_calabi_yau(p),
    }
    return ClassificationReport(
        **decisions,
        reflection_witness=reflection_witness(p),
        crosschecks=_audit(p, decisions),
        isolated_singularities_note="regular_center" if decisions["regular"] else "never_isolated",
    )


def order_formula(p: SkewParams) -> int:
    """``ell^n / prod_s gcd(column s, ell)``; equals the group order iff the center is regular."""
    out = 1
    for o in generator_orders(p):
        out *= o
    return out


__all__ = [
    "ClassificationReport",
    "Crosscheck",
    "ReflectionWitness",
    "classification_report",
    "crosscheck_low_n",
    "is_calabi_yau",
    "is_gorenstein",
    "is_regular",
    "is_small",
    "order_formula",
    "reflection_witness",
    "reflection_witnesses",
]
