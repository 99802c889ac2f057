"""Ring parameters: the order ``ell`` and the exponent matrix ``B``.

A skew polynomial ring with ``x_j x_i = xi^{b_ij} x_i x_j`` (``xi`` a
primitive ``ell``-th root of unity) is stored purely through integer
exponents.  Monomials are exponent words (tuples of nonnegative ints) and
diagonal automorphisms are exponent vectors over ``Z/ell``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .errors import (
    ArithmeticOverflow,
    BadDimension,
    CommutativeRing,
    NonzeroDiagonal,
    NotSkewSymmetric,
    SkewParamsError,
    WeightedGrading,
)

INPUT_LIMIT = 2**31

ExponentWord = tuple[int, ...]
GroupElementExponent = tuple[int, ...]


@dataclass(frozen=True)
class SkewParams:
    """Validated parameters with entries of ``b`` in ``[0, ell)``.

    Use :func:`validate_and_normalize` to build one from raw input; the
    constructor only checks that its arguments are already canonical.
    """

    n: int
    ell: int
    b: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 2 or len(self.b) != self.n or any(len(r) != self.n for r in self.b):
            raise BadDimension(f"BadDimension: expected a {self.n}x{self.n} matrix with n >= 2")
        if self.ell < 2:
            raise CommutativeRing("CommutativeRing: ell must be at least 2")
        for i in range(self.n):
            for j in range(self.n):
                v = self.b[i][j]
                if not 0 <= v < self.ell:
                    raise SkewParamsError(f"entry b[{i}][{j}]={v} not reduced modulo {self.ell}")
                if (v + self.b[j][i]) % self.ell:
                    raise NotSkewSymmetric(f"NotSkewSymmetric: b[{i}][{j}] + b[{j}][{i}] != 0 mod {self.ell}")
            if self.b[i][i]:
                raise NonzeroDiagonal(f"NonzeroDiagonal: b[{i}][{i}] != 0")
        if gcd(self.ell, *self.upper()) != 1:
            raise SkewParamsError("ell is not minimal for these exponents")

    def upper(self) -> list[int]:
        """Strict upper-triangle entries in row-major order."""
        return [self.b[i][j] for i in range(self.n) for j in range(i + 1, self.n)]

    def skew_matrix(self) -> list[list[int]]:
        """Integer skew-symmetric lift: upper entries kept, lower entries negated."""
        n = self.n
        m = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                m[i][j] = self.b[i][j]
                m[j][i] = -self.b[i][j]
        return m

    def column(self, j: int) -> list[int]:
        return [self.b[i][j] for i in range(self.n)]

    def to_dict(self) -> dict:
        return {"n": self.n, "ell": self.ell, "b": [list(r) for r in self.b]}


def validate_and_normalize(raw_b: Sequence[Sequence[int]], raw_ell: int) -> SkewParams:
    """Check skew-symmetry modulo ``raw_ell`` and return minimal parameters.

    If ``g = gcd(b_ij, raw_ell) > 1`` every ``p_ij`` is a power of a
    primitive ``raw_ell/g``-th root, so both are divided by ``g``.
    """
    rows = [list(r) for r in raw_b]
    n = len(rows)
    if n < 2 or any(len(r) != n for r in rows):
        raise BadDimension("BadDimension: matrix must be square with n >= 2")
    raw_ell = int(raw_ell)
    if raw_ell < 1:
        raise SkewParamsError(f"ell must be positive, got {raw_ell}")
    if raw_ell >= INPUT_LIMIT or any(abs(int(v)) >= INPUT_LIMIT for r in rows for v in r):
        raise ArithmeticOverflow("input exceeds the 2^31 limit")
    for i in range(n):
        if rows[i][i] % raw_ell:
            raise NonzeroDiagonal(f"NonzeroDiagonal: b[{i}][{i}]={rows[i][i]}")
        for j in range(i + 1, n):
            if (rows[i][j] + rows[j][i]) % raw_ell:
                raise NotSkewSymmetric(
                    f"NotSkewSymmetric: b[{i}][{j}]={rows[i][j]}, b[{j}][{i}]={rows[j][i]} mod {raw_ell}"
                )
    reduced = [[int(v) % raw_ell for v in r] for r in rows]
    g = gcd(raw_ell, *(v for r in reduced for v in r))
    if g == raw_ell:
        raise CommutativeRing("CommutativeRing: every b_ij vanishes modulo ell")
    ell = raw_ell // g
    b = tuple(tuple((v // g) % ell for v in r) for r in reduced)
    return SkewParams(n=n, ell=ell, b=b)


def _check_degrees(degrees) -> None:
    if degrees is not None and any(int(d) != 1 for d in degrees):
        raise WeightedGrading("WeightedGrading: all generators must have degree 1")


def parse_params(text: str) -> SkewParams:
    """Parse JSON ``{"ell": .., "b": [[..]]}`` or the ``ell=<int>`` text form."""
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise SkewParamsError(f"ParseError: {exc}") from exc
        if "ell" not in obj or "b" not in obj:
            raise SkewParamsError("ParseError: JSON input needs 'ell' and 'b'")
        _check_degrees(obj.get("degrees"))
        return validate_and_normalize(obj["b"], obj["ell"])
    lines = [ln.strip() for ln in stripped.splitlines() if ln.strip() and not ln.strip().startswith("#")]
    if not lines or not lines[0].replace(" ", "").startswith("ell="):
        raise SkewParamsError("ParseError: first line must be 'ell=<int>'")
    try:
        ell = int(lines[0].replace(" ", "")[4:])
        b = [[int(tok) for tok in ln.split()] for ln in lines[1:]]
    except ValueError as exc:
        raise SkewParamsError(f"ParseError: {exc}") from exc
    return validate_and_normalize(b, ell)


def parse_inline(b_text: str, ell: int) -> SkewParams:
    """Parse ``--b "0 1;-1 0"`` style input (rows separated by semicolons)."""
    try:
        b = [[int(tok) for tok in row.replace(",", " ").split()] for row in b_text.split(";") if row.strip()]
    except ValueError as exc:
        raise SkewParamsError(f"ParseError: {exc}") from exc
    return validate_and_normalize(b, ell)
