"""Exact integer linear algebra: Smith normal form, Pfaffians, central lattice."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from math import gcd, prod
from typing import Sequence

from .core import SkewParams
from .errors import ArithmeticOverflow, DimensionMismatch, NotSkewSymmetric, OddDimension

Matrix = list[list[int]]

# Entries must stay representable as signed 128-bit integers.
WIDTH_LIMIT = 2**127


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(a: Sequence[Sequence[int]], v: Sequence[int]) -> list[int]:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def determinant(m: Sequence[Sequence[int]]) -> int:
    """Fraction-free Bareiss determinant."""
    a = [list(r) for r in m]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1] if n else 1


def _check_width(*mats: Matrix) -> None:
    for m in mats:
        for row in m:
            for v in row:
                if not -WIDTH_LIMIT <= v < WIDTH_LIMIT:
                    raise ArithmeticOverflow("Overflow: intermediate entry exceeds 128-bit range")


@dataclass(frozen=True)
class SmithDecomposition:
    """``diag(d) == l @ m @ r`` with ``l``, ``r`` unimodular and ``d[i] | d[i+1]``."""

    d: tuple[int, ...]
    l: tuple[tuple[int, ...], ...]
    r: tuple[tuple[int, ...], ...]


def smith_normal_form(m: Sequence[Sequence[int]]) -> SmithDecomposition:
    """Smith normal form of a square integer matrix by gcd pivoting.

    The pivot is the entry of least nonzero absolute value in the active
    block, ties broken by lowest (row, col), so outputs are deterministic.
    """
    a = [list(map(int, r)) for r in m]
    n = len(a)
    if any(len(r) != n for r in a):
        raise DimensionMismatch("smith_normal_form expects a square matrix")
    left, right = identity(n), identity(n)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        left[i], left[j] = left[j], left[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in right:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        left[dst] = [x + q * y for x, y in zip(left[dst], left[src])]

    def add_col(dst, src, q):
        for row in a:
            row[dst] += q * row[src]
        for row in right:
            row[dst] += q * row[src]

    for t in range(n):
        while True:
            cands = [(abs(a[i][j]), i, j) for i in range(t, n) for j in range(t, n) if a[i][j]]
            if not cands:
                break
            _, pi, pj = min(cands)
            if pi != t:
                swap_rows(t, pi)
            if pj != t:
                swap_cols(t, pj)
            p = a[t][t]
            clean = True
            for i in range(t + 1, n):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
                    clean = clean and a[i][t] == 0
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
                    clean = clean and a[t][j] == 0
            _check_width(a, left, right)
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, n) for j in range(t + 1, n) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            left[t] = [-x for x in left[t]]
    return SmithDecomposition(
        d=tuple(a[i][i] for i in range(n)),
        l=tuple(map(tuple, left)),
        r=tuple(map(tuple, right)),
    )


def _require_skew(b: Sequence[Sequence[int]]) -> None:
    n = len(b)
    for i in range(n):
        if len(b[i]) != n:
            raise DimensionMismatch("matrix must be square")
        for j in range(n):
            if b[i][j] != -b[j][i]:
                raise NotSkewSymmetric(f"NotSkewSymmetric: entry ({i},{j})")


def _pfaffian_table(b: Sequence[Sequence[int]]):
    memo: dict[tuple[int, ...], int] = {}

    def pf(idx: tuple[int, ...]) -> int:
        if not idx:
            return 1
        if len(idx) % 2:
            return 0
        if idx in memo:
            return memo[idx]
        first, rest = idx[0], idx[1:]
        total = 0
        for pos, k in enumerate(rest):
            if b[first][k]:
                sign = -1 if pos % 2 else 1
                total += sign * b[first][k] * pf(rest[:pos] + rest[pos + 1:])
        memo[idx] = total
        return total

    return pf


def pfaffian(b: Sequence[Sequence[int]]) -> int:
    """Pfaffian by expansion along the first row; zero for odd size."""
    _require_skew(b)
    return _pfaffian_table(b)(tuple(range(len(b))))


def pfaffian_adjugate(b: Sequence[Sequence[int]]) -> Matrix:
    """Matrix ``P`` with ``P @ b == b @ P == pfaffian(b) * I`` (even size)."""
    _require_skew(b)
    n = len(b)
    if n % 2:
        raise OddDimension("OddDimension: Pfaffian adjugate needs even n")
    pf = _pfaffian_table(b)
    p = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            minor = pf(tuple(k for k in range(n) if k not in (i, j)))
            # row expansion of pf along i: sum_j b[i][j] * P[j][i]
            sign = (-1) ** (i + j + 1 + (i > j))
            p[j][i] = sign * minor
    value = pf(tuple(range(n)))
    prod_pb = matmul(p, b)
    for j in range(n):
        # sign convention is fixed by the contract: flip any column that came out negated
        if value and prod_pb[j][j] == -value:
            for k in range(n):
                p[k][j] = -p[k][j]
    target = [[value * int(i == j) for j in range(n)] for i in range(n)]
    if matmul(p, b) != target or matmul(b, p) != target:
        raise ArithmeticError("Pfaffian adjugate contract failed")
    return p


@dataclass(frozen=True)
class CentralLattice:
    """The lattice ``K = {u : B u = 0 mod ell}`` of central exponents.

    ``basis`` columns generate ``K``; ``index`` is ``[Z^n : K]``.
    """

    ell: int
    basis: tuple[tuple[int, ...], ...]
    index: int
    snf: SmithDecomposition = field(repr=False)
    moduli: tuple[int, ...] = field(repr=False)

    def columns(self) -> list[tuple[int, ...]]:
        return list(zip(*self.basis))

    @cached_property
    def residues(self) -> tuple[tuple[int, ...], ...]:
        """Canonical lifts in ``[0, ell)^n`` of ``K / ell Z^n``, sorted."""
        r = self.snf.r
        n = len(r)
        ell = self.ell
        ranges = [range(0, ell, m) for m in self.moduli]
        out = set()
        for v in itertools.product(*ranges):
            out.add(tuple(sum(r[i][k] * v[k] for k in range(n)) % ell for i in range(n)))
        return tuple(sorted(out))

    def residue_count(self) -> int:
        return prod(self.ell // m for m in self.moduli)


def kernel_lattice(p: SkewParams) -> CentralLattice:
    """Central lattice via the Smith form ``D = L B R``.

    ``B u = 0 mod ell`` iff each coordinate ``k`` of ``R^{-1} u`` is a
    multiple of ``ell / gcd(d_k, ell)``.
    """
    snf = smith_normal_form(p.skew_matrix())
    moduli = tuple(p.ell // gcd(d, p.ell) for d in snf.d)
    n = p.n
    basis = tuple(tuple(snf.r[i][k] * moduli[k] for k in range(n)) for i in range(n))
    return CentralLattice(ell=p.ell, basis=basis, index=prod(moduli), snf=snf, moduli=moduli)


def is_central(p: SkewParams, u: Sequence[int]) -> bool:
    """Whether the monomial with exponent word ``u`` commutes with every generator."""
    if len(u) != p.n:
        raise DimensionMismatch(f"DimensionMismatch: expected length {p.n}, got {len(u)}")
    return all(v % p.ell == 0 for v in matvec(p.b, u))


def image_order(p: SkewParams) -> int:
    """Order of the group generated by the rows of ``B`` in ``(Z/ell)^n``."""
    snf = smith_normal_form(p.skew_matrix())
    return prod(p.ell // gcd(d, p.ell) for d in snf.d)
