"""Acceptance gate: eight end-to-end criteria, each printing a PASS/FAIL line.

Run under pytest, or directly with ``python tests/test_acceptance.py``.
"""

import random
import subprocess
import sys
from itertools import product
from math import gcd

import pytest

from skewcenter import polys, validate_and_normalize
from skewcenter.center import center_generators, expand_series, hilbert_series, numerator_is_cyclotomic, same_rational_function
from skewcenter.classify import classification_report, is_gorenstein, is_regular
from skewcenter.invariants import f_vector
from skewcenter.oracle import lattice_count_by_degree, random_params, verify_equivalences
from skewcenter.zlinalg import image_order, pfaffian

SIXTH_ROOT = [[0, 1, 1, 3], [-1, 0, 1, 3], [-1, -1, 0, 3], [-3, -3, -3, 0]]


def sixth_root_example():
    p = validate_and_normalize(SIXTH_ROOT, 6)
    assert pfaffian(p.skew_matrix()) == 3
    assert f_vector(p) == (2, 2, 2, 2)
    rep = classification_report(p)
    w = rep.reflection_witness
    assert (w.axis, w.lam) == (4, 3)
    assert not (rep.auslander or rep.calabi_yau or rep.gorenstein)
    return "pf=3, f=(2,2,2,2), reflection on x4 with lambda=3"


def ell_24_family():
    for k in (3, 9):
        p = validate_and_normalize([[0, 4, 6], [-4, 0, k], [-6, -k, 0]], 24)
        assert f_vector(p) == (3, 6, 4)
        assert is_gorenstein(p) == (k == 9)
    s = hilbert_series(p)
    num = [1 if d in (0, 13, 18, 31) else 0 for d in range(32)]
    assert same_rational_function(s.reduced_numerator, s.reduced_denominator, num, polys.product_one_minus([12, 24, 8]))
    assert not numerator_is_cyclotomic(s)
    return "k=3 and k=9 checked, series matches by cross-multiplication"


def hypersurface_family():
    for ell in range(2, 8):
        p = validate_and_normalize([[0, 0, 1], [0, 0, -1], [-1, 1, 0]], ell)
        assert f_vector(p) == (1, 1, ell)
        assert is_gorenstein(p) and not is_regular(p)
        assert set(center_generators(p)) == {(1, 1, 0), (ell, 0, 0), (0, ell, 0), (0, 0, ell)}
        s = hilbert_series(p)
        den = polys.product_one_minus([2, ell, ell, ell])
        assert same_rational_function(s.reduced_numerator, s.reduced_denominator, polys.one_minus_t_pow(2 * ell), den)
    return "ell=2..7"


def two_variables():
    count = 0
    for ell in range(2, 13):
        for b12 in range(1, ell):
            # non-minimal entries normalize to a smaller order
            p = validate_and_normalize([[0, b12], [-b12, 0]], ell)
            rep = classification_report(p)
            assert rep.regular and rep.gorenstein and not rep.auslander
            assert set(center_generators(p)) == {(p.ell, 0), (0, p.ell)}
            count += 1
    return f"{count} rings"


def coprime_orders_family():
    count = 0
    for a, b, c in product(range(1, 61), repeat=3):
        if a * b * c > 60 or (a, b, c) == (1, 1, 1) or gcd(a, b) * gcd(a, c) * gcd(b, c) != 1:
            continue
        ell = a * b * c
        # b12 has order a, b13 order b, b23 order c
        p = validate_and_normalize([[0, b * c, a * c], [-b * c, 0, a * b], [-a * c, -a * b, 0]], ell)
        assert is_regular(p)
        assert f_vector(p) == (a * b, a * c, b * c)
        assert image_order(p) == ell**2
        count += 1
    return f"{count} triples"


def random_laws():
    rng = random.Random(1)
    bad = []
    for _ in range(500):
        p = random_params(rng)
        failed = [law for law, ok in verify_equivalences(p) if not ok]
        if failed:
            bad.append((p, failed))
    assert not bad, bad[:3]
    return "500 instances, every law holds"


def series_vs_lattice():
    rng = random.Random(7)
    for _ in range(100):
        p = random_params(rng)
        bound = 2 * p.ell
        assert expand_series(hilbert_series(p), bound) == lattice_count_by_degree(p, bound)
    return "100 instances up to degree 2*ell"


def scan_determinism():
    outs = []
    for workers in ("1", "3"):
        cmd = [sys.executable, "-m", "skewcenter.cli", "scan", "--n", "3", "--ell", "2..4", "--workers", workers]
        outs.append(subprocess.run(cmd, capture_output=True, check=True).stdout)
    assert outs[0] == outs[1] and outs[0]
    return f"{len(outs[0])} bytes identical for 1 and 3 workers"


CRITERIA = [
    (1, "sixth-root four-variable example", sixth_root_example),
    (2, "ell=24 family", ell_24_family),
    (3, "hypersurface family", hypersurface_family),
    (4, "two variables", two_variables),
    (5, "pairwise coprime orders", coprime_orders_family),
    (6, "random oracle laws", random_laws),
    (7, "series vs lattice count", series_vs_lattice),
    (8, "scan determinism", scan_determinism),
]


def _run(number, title, check):
    try:
        detail = check()
    except AssertionError as exc:
        return False, f"criterion {number} ({title}): FAIL {exc}"
    return True, f"criterion {number} ({title}): PASS {detail}"


@pytest.mark.parametrize("number, title, check", CRITERIA, ids=[c[1].replace(" ", "-") for c in CRITERIA])
def test_criterion(number, title, check, capsys):
    ok, line = _run(number, title, check)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [_run(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
