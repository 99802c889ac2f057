"""Brute-force reference computations and the equivalence audit.

Nothing here calls the Smith-form path for the quantity it checks: the
group is enumerated by closure, central words by exhaustive scan, and the
per-prime f-vector by elimination over ``Z/p^N``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from math import gcd, prod
from typing import Callable, Optional

import numpy as np

from . import center, classify, invariants, polys, zlinalg
from .core import SkewParams, validate_and_normalize
from .errors import BudgetExceeded, CommutativeRing, DefinitionMismatch

DEFAULT_BUDGET = 10**6


@dataclass(frozen=True)
class OzoneGroupTable:
    """All exponent vectors ``u^T B mod ell``, i.e. the diagonal automorphisms in the group."""

    elements: frozenset[tuple[int, ...]]
    generators: tuple[tuple[int, ...], ...]


def _closure(gens, ell: int, n: int, budget: int) -> set[tuple[int, ...]]:
    """Subgroup of ``(Z/ell)^n`` generated by ``gens``: the sum of their cyclic subgroups."""
    weights = ell ** np.arange(n, dtype=np.int64)
    elems = np.zeros((1, n), dtype=np.int64)
    codes = {0}
    for g in gens:
        g = np.asarray(g, dtype=np.int64) % ell
        if int(g @ weights) in codes:
            continue
        order = ell // gcd(ell, *map(int, g))
        multiples = (np.arange(order, dtype=np.int64)[:, None] * g[None, :]) % ell
        elems = np.unique(((elems[:, None, :] + multiples[None, :, :]) % ell).reshape(-1, n), axis=0)
        if len(elems) > budget:
            raise BudgetExceeded(f"BudgetExceeded: group closure exceeds {budget} elements")
        codes = set((elems @ weights).tolist())
    return {tuple(map(int, row)) for row in elems}


def group_closure(p: SkewParams, budget: int = DEFAULT_BUDGET) -> OzoneGroupTable:
    gens = tuple(tuple(row) for row in p.b)
    return OzoneGroupTable(frozenset(_closure(gens, p.ell, p.n, budget)), gens)


def _is_reflection(v) -> bool:
    return sum(1 for x in v if x) == 1


def oracle_reflections(p: SkewParams, budget: int = DEFAULT_BUDGET) -> list[tuple[int, ...]]:
    return sorted(v for v in group_closure(p, budget).elements if _is_reflection(v))


def _box(ell: int, n: int) -> np.ndarray:
    return np.stack(np.meshgrid(*[np.arange(ell)] * n, indexing="ij"), axis=-1).reshape(-1, n)


def central_residues(p: SkewParams, budget: int = DEFAULT_BUDGET) -> list[tuple[int, ...]]:
    """Exhaustive scan of ``[0, ell)^n`` for words commuting with every ``x_i``."""
    ell, n = p.ell, p.n
    if ell**n > budget:
        raise BudgetExceeded(f"BudgetExceeded: scan of {ell}^{n} words exceeds {budget}")
    words = _box(ell, n)
    keep = ~((words @ np.asarray(p.b, dtype=np.int64).T) % ell).any(axis=1)
    return [tuple(map(int, u)) for u in words[keep]]


def oracle_f(p: SkewParams, budget: int = DEFAULT_BUDGET) -> tuple[int, ...]:
    """f-vector as a gcd and as a minimum over central words; the two must agree."""
    words = central_residues(p, budget)
    ell = p.ell
    out = []
    for i in range(p.n):
        by_gcd = gcd(ell, *(u[i] for u in words))
        by_min = min([u[i] for u in words if u[i] > 0] + [ell])
        if by_gcd != by_min:
            raise DefinitionMismatch(f"DefinitionMismatch: gcd {by_gcd} != min {by_min} on axis {i}")
        out.append(by_gcd)
    return tuple(out)


def _prime_powers(m: int) -> list[tuple[int, int]]:
    out, q = [], 2
    while q * q <= m:
        if m % q == 0:
            e = 0
            while m % q == 0:
                m //= q
                e += 1
            out.append((q, e))
        q += 1
    if m > 1:
        out.append((m, 1))
    return out


def _val(x: int, prime: int, cap: int) -> int:
    if x == 0:
        return cap
    v = 0
    while x % prime == 0 and v < cap:
        x //= prime
        v += 1
    return v


def _local_f(p: SkewParams, prime: int, big_n: int) -> list[int]:
    """Exponents ``a_j`` with ``f_j = prime^{a_j}`` locally, via elimination mod ``prime^N``."""
    n, q = p.n, prime**big_n
    a = [[x % q for x in row] for row in p.b]
    r = [[int(i == j) for j in range(n)] for i in range(n)]
    vals = [big_n] * n
    for t in range(n):
        best = None
        for i in range(t, n):
            for j in range(t, n):
                v = _val(a[i][j], prime, big_n)
                if v < big_n and (best is None or v < best[0]):
                    best = (v, i, j)
        if best is None:
            break
        v, pi, pj = best
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        for row in r:
            row[t], row[pj] = row[pj], row[t]
        unit_inv = pow(a[t][t] // prime**v, -1, q)
        for i in range(t + 1, n):
            if a[i][t] % q:
                c = (a[i][t] // prime**v) * unit_inv % q
                a[i] = [(x - c * y) % q for x, y in zip(a[i], a[t])]
        for j in range(t + 1, n):
            if a[t][j] % q:
                c = (a[t][j] // prime**v) * unit_inv % q
                for row in a:
                    row[j] = (row[j] - c * row[t]) % q
                for row in r:
                    row[j] = (row[j] - c * row[t]) % q
        vals[t] = v
    gens = [[r[i][k] * prime ** (big_n - vals[k]) % q for i in range(n)] for k in range(n)]
    return [min([big_n] + [_val(g[j], prime, big_n) for g in gens]) for j in range(n)]


def oracle_f_per_prime(p: SkewParams) -> tuple[int, ...]:
    """f-vector assembled from local computations at each prime dividing ell."""
    f = [1] * p.n
    for prime, big_n in _prime_powers(p.ell):
        for j, a in enumerate(_local_f(p, prime, big_n)):
            f[j] *= prime**a
    return tuple(f)


def lattice_count_by_degree(p: SkewParams, degree_bound: int) -> list[int]:
    """Number of central words of each total degree up to ``degree_bound``."""
    words = _box(degree_bound + 1, p.n)
    words = words[words.sum(axis=1) <= degree_bound]
    keep = ~((words @ np.asarray(p.b, dtype=np.int64).T) % p.ell).any(axis=1)
    return np.bincount(words[keep].sum(axis=1), minlength=degree_bound + 1).tolist()


def _monoid_box(gens, ell: int, n: int) -> set[tuple[int, ...]]:
    """Elements of the monoid generated by ``gens`` inside ``[0, ell)^n``."""
    reached = {(0,) * n}
    for u in sorted(itertools.product(range(ell), repeat=n), key=sum):
        if u in reached:
            for g in gens:
                w = tuple(a + b for a, b in zip(u, g))
                if all(x < ell for x in w):
                    reached.add(w)
    return reached


def verify_equivalences(p: SkewParams, budget: int = DEFAULT_BUDGET) -> list[tuple[str, bool]]:
    """Evaluate every law tying the fast path to the brute-force definitions."""
    n, ell = p.n, p.ell
    laws: list[tuple[str, bool]] = []

    def law(name: str, ok) -> None:
        laws.append((name, bool(ok)))

    table = group_closure(p, budget)
    group = table.elements
    prof = invariants.exponent_invariants(p)
    f = prof.f
    small = classify.is_small(p)
    regular = classify.is_regular(p)
    gorenstein = classify.is_gorenstein(p)
    cy = classify.is_calabi_yau(p)
    residues = central_residues(p, budget)
    lat = zlinalg.kernel_lattice(p)

    law("closure_order_matches_smith", len(group) == prof.order_O == lat.index)
    law("residue_set_matches_smith", set(lat.residues) == set(residues))
    law("order_times_residues_is_ell_pow_n", prof.order_O * len(residues) == ell**n)
    f_def = oracle_f(p, budget)
    law("f_definition_matches_smith", f_def == f)
    law("f_per_prime_matches_smith", oracle_f_per_prime(p) == f)
    if n == 3:
        law("f_closed_form_three_variables", invariants.f_closed_form_n3(p) == f)
    law("basis_columns_central", all(zlinalg.is_central(p, [x % ell for x in c]) for c in lat.columns()))

    refl = [v for v in group if _is_reflection(v)]
    witness = classify.reflection_witness(p)
    law("no_reflections_iff_small", (not refl) == small == all(x == 1 for x in f))
    law("witness_iff_not_small", (witness is None) == small)
    if witness is not None:
        v = tuple(sum(witness.u[i] * p.b[i][s] for i in range(n)) % ell for s in range(n))
        law("witness_is_reflection", v in group and v == tuple(witness.lam * (s == witness.axis - 1) for s in range(n)))
    h = _closure(refl, ell, n, budget) if refl else {(0,) * n}
    law("reflection_subgroup_order_is_prod_f", len(h) == prof.order_H and len(group) % len(h) == 0)
    law(
        "per_axis_witnesses_generate_reflections",
        [w.axis for w in classify.reflection_witnesses(p)] == [i + 1 for i in range(n) if f[i] > 1]
        and all(w.lam == ell // f[w.axis - 1] for w in classify.reflection_witnesses(p)),
    )

    law("gorenstein_iff_f_word_central", gorenstein == zlinalg.is_central(p, f))
    law("gorenstein_iff_weighted_row_sums", gorenstein == all(sum(p.b[i][s] * f[s] for s in range(n)) % ell == 0 for i in range(n)))
    law("calabi_yau_iff_pg_central", cy == zlinalg.is_central(p, (1,) * n))
    hdet_group = all(sum(v) % ell == 0 for v in group)
    law("hdet_generators_iff_whole_group", invariants.has_trivial_hdet(p) == hdet_group)
    law("hdet_generators_match_rows", all(invariants.hdet_exponent(p, [int(i == j) for j in range(n)]) == sum(p.b[i]) % ell for i in range(n)))
    law("calabi_yau_iff_gorenstein_and_small", cy == (gorenstein and small))
    law("calabi_yau_not_regular", not (cy and regular))
    law("regular_implies_gorenstein", gorenstein or not regular)
    law("regular_iff_f_powers_central", regular == all(zlinalg.is_central(p, [f[i] * (i == j) for j in range(n)]) for i in range(n)))
    law("regular_iff_order_is_prod_f", regular == (len(group) == prod(f)))
    law("regular_iff_order_formula", regular == (len(group) == classify.order_formula(p)))
    law("order_H_divides_order_O", prof.order_O % prof.order_H == 0 and ell**n % prof.order_O == 0)
    law("regular_implies_commutative_fixed_subring", invariants.fixed_subring(p).commutative or not regular)

    report = classify.classification_report(p)
    law("low_n_crosschecks_agree", all(c.status != "disagrees" for c in report.crosschecks))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    orders = [ell // gcd(p.b[i][j], ell) for i, j in pairs]
    if all(gcd(a, b) == 1 for a, b in itertools.combinations(orders, 2)):
        law("coprime_orders_regular", regular)
        law(
            "coprime_orders_f_products",
            all(f[i] == prod(ell // gcd(p.b[i][j], ell) for j in range(n) if j != i) for i in range(n)),
        )
        law("coprime_orders_group_order", len(group) == ell**2)
    if n % 2 == 0 and zlinalg.pfaffian(p.skew_matrix()) % ell:
        law("nonzero_pfaffian_gives_reflection", bool(refl))

    gens = center.center_generators(p)
    series = center.hilbert_series(p)
    law("generators_central_and_bounded", all(zlinalg.is_central(p, g) and max(g) <= ell for g in gens))
    law("regular_iff_generators_are_f_powers", regular == (sorted(gens) == sorted(tuple(f[i] * (i == j) for j in range(n)) for i in range(n))))
    box = _monoid_box(gens, ell, n)
    law("generators_regenerate_residues", all(r in box for r in residues))
    law(
        "raw_and_reduced_series_agree",
        center.same_rational_function(series.numerator, series.denominator(), series.reduced_numerator, series.reduced_denominator),
    )
    bound = 2 * ell
    law("series_matches_lattice_count", center.expand_series(series, bound) == lattice_count_by_degree(p, bound))
    law(
        "regular_iff_series_is_free",
        regular == center.same_rational_function(series.numerator, series.denominator(), [1], polys.product_one_minus(f)),
    )
    law("normalization_idempotent", validate_and_normalize(p.b, ell) == p)
    return laws


def random_params(rng: random.Random, n_range=(2, 4), ell_range=(2, 12)) -> SkewParams:
    """Uniform entries, normalized; commutative draws are discarded."""
    while True:
        n = rng.randint(*n_range)
        ell = rng.randint(*ell_range)
        b = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                b[i][j] = rng.randrange(ell)
                b[j][i] = -b[i][j]
        try:
            return validate_and_normalize(b, ell)
        except CommutativeRing:
            continue


def corpus() -> dict[str, SkewParams]:
    """Worked examples with known answers."""
    return {
        "sixth-root-four-variables": validate_and_normalize(
            [[0, 1, 1, 3], [-1, 0, 1, 3], [-1, -1, 0, 3], [-3, -3, -3, 0]], 6
        ),
        "calabi-yau-three-variables": validate_and_normalize([[0, 1, -1], [-1, 0, 1], [1, -1, 0]], 3),
        "hypersurface-ell-5": validate_and_normalize([[0, 0, 1], [0, 0, -1], [-1, 1, 0]], 5),
        "ell-24-k-3": validate_and_normalize([[0, 4, 6], [-4, 0, 3], [-6, -3, 0]], 24),
        "ell-24-k-9": validate_and_normalize([[0, 4, 6], [-4, 0, 9], [-6, -9, 0]], 24),
    }


def run_verification(
    instances: list[tuple[str, SkewParams]],
    budget: int = DEFAULT_BUDGET,
    on_result: Optional[Callable[[str, SkewParams, list, Optional[str]], None]] = None,
) -> tuple[int, int, int]:
    """Return ``(passed, failed, skipped)`` instance counts."""
    passed = failed = skipped = 0
    for name, p in instances:
        try:
            laws = verify_equivalences(p, budget)
        except BudgetExceeded as exc:
            skipped += 1
            if on_result:
                on_result(name, p, [], str(exc))
            continue
        if all(ok for _, ok in laws):
            passed += 1
        else:
            failed += 1
        if on_result:
            on_result(name, p, laws, None)
    return passed, failed, skipped
