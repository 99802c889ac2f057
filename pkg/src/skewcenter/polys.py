"""Dense univariate integer polynomials (coefficient lists, index = degree)."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

Poly = list[int]


def trim(a: Sequence) -> list:
    a = list(a)
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a or [0]


def add(a: Sequence[int], b: Sequence[int]) -> Poly:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return trim(out)


def mul(a: Sequence[int], b: Sequence[int]) -> Poly:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def one_minus_t_pow(d: int) -> Poly:
    return [1] + [0] * (d - 1) + [-1]


def product_one_minus(exponents: Sequence[int]) -> Poly:
    out = [1]
    for d in exponents:
        out = mul(out, one_minus_t_pow(d))
    return out


def divmod_poly(a: Sequence, b: Sequence) -> tuple[list, list]:
    """Long division, in integers when ``b`` has leading coefficient +-1 and over Q otherwise."""
    a, b = trim(a), trim(b)
    if b == [0]:
        raise ZeroDivisionError("polynomial division by zero")
    if b[-1] not in (1, -1) or not all(isinstance(c, int) for c in (*a, *b)):
        a, b = [Fraction(c) for c in a], [Fraction(c) for c in b]
    q = [0] * max(len(a) - len(b) + 1, 1)
    r = list(a)
    lead = b[-1]
    for k in range(len(a) - len(b), -1, -1):
        c = r[k + len(b) - 1]
        if c:
            c = c * lead if lead in (1, -1) else c / lead
            q[k] = c
            for i, y in enumerate(b):
                r[k + i] -= c * y
    return trim(q), trim(r[: max(len(b) - 1, 1)])


def gcd_poly(a: Sequence[int], b: Sequence[int]) -> Poly:
    """Integer-content-free gcd over the rationals, normalized to constant term 1 when possible."""
    x = [Fraction(c) for c in trim(a)]
    y = [Fraction(c) for c in trim(b)]
    while trim(y) != [0]:
        _, r = divmod_poly(x, y)
        x, y = y, r
    x = trim(x)
    scale = x[0] if x[0] else x[-1]
    return _to_int([c / scale for c in x])


def exact_div(a: Sequence[int], b: Sequence[int]) -> Poly:
    q, r = divmod_poly([Fraction(c) for c in a], [Fraction(c) for c in b])
    if trim(r) != [0]:
        raise ArithmeticError("polynomial division is not exact")
    return _to_int(q)


def _to_int(a: Sequence) -> Poly:
    out = []
    for c in a:
        c = Fraction(c)
        if c.denominator != 1:
            raise ArithmeticError("non-integral coefficient")
        out.append(int(c))
    return trim(out)


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> tuple[int, ...]:
    """``Phi_d`` by dividing ``t^d - 1`` by ``Phi_e`` for every proper divisor ``e``."""
    num: Poly = [-1] + [0] * (d - 1) + [1]
    for e in range(1, d):
        if d % e == 0:
            num, r = divmod_poly(num, list(cyclotomic(e)))
            assert r == [0]
    return tuple(num)


def totient(d: int) -> int:
    out, m, q = d, d, 2
    while q * q <= m:
        if m % q == 0:
            while m % q == 0:
                m //= q
            out -= out // q
        q += 1
    if m > 1:
        out -= out // m
    return out


def mobius(d: int) -> int:
    out, m, q = 1, d, 2
    while q * q <= m:
        if m % q == 0:
            m //= q
            if m % q == 0:
                return 0
            out = -out
        q += 1
    return -out if m > 1 else out


def cyclotomic_factorization(a: Sequence[int]) -> dict[int, int] | None:
    """Multiplicities ``{d: e_d}`` with ``a == +-prod Phi_d^{e_d}``, or None."""
    a = trim(a)
    deg = len(a) - 1
    out: dict[int, int] = {}
    d = 1
    # phi(d) > d/8 for every d below 10^11
    while deg > 0 and d <= 8 * deg + 8:
        if totient(d) <= deg:
            phi = list(cyclotomic(d))
            while True:
                q, r = divmod_poly(a, phi)
                if r != [0]:
                    break
                a, deg = q, len(q) - 1
                out[d] = out.get(d, 0) + 1
        d += 1
    return out if a in ([1], [-1]) else None


def one_minus_exponents(num: Sequence[int], den: Sequence[int]) -> dict[int, int] | None:
    """Integers ``c_k`` with ``num/den == prod (1 - t^k)^{c_k}``, or None if no such form exists."""
    fn, fd = cyclotomic_factorization(num), cyclotomic_factorization(den)
    if fn is None or fd is None:
        return None
    e = dict(fn)
    for d, m in fd.items():
        e[d] = e.get(d, 0) - m
    c: dict[int, int] = {}
    # Phi_d = +-prod_{k | d} (1 - t^k)^{mu(d/k)}
    for d, m in e.items():
        if m:
            for k in range(1, d + 1):
                if d % k == 0 and mobius(d // k):
                    c[k] = c.get(k, 0) + m * mobius(d // k)
    c = {k: v for k, v in sorted(c.items()) if v}
    top = product_one_minus([k for k, v in c.items() if v > 0 for _ in range(v)])
    bottom = product_one_minus([k for k, v in c.items() if v < 0 for _ in range(-v)])
    if mul(num, bottom) != mul(den, top):
        return None
    return c
