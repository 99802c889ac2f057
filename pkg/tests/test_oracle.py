import random

import pytest

from skewcenter import validate_and_normalize
from skewcenter.errors import BudgetExceeded
from skewcenter.oracle import (
    central_residues,
    corpus,
    group_closure,
    oracle_f,
    oracle_f_per_prime,
    oracle_reflections,
    random_params,
    run_verification,
    verify_equivalences,
)

from conftest import ell24


def test_group_closure_sizes(plane4):
    assert len(group_closure(plane4).elements) == 16
    assert len(group_closure(validate_and_normalize([[0, 1], [-1, 0]], 2)).elements) == 4
    assert len(group_closure(ell24(9)).elements) == 576


def test_reflections(sixth_root, cy3, hyper5):
    assert (0, 0, 0, 3) in oracle_reflections(sixth_root)
    assert oracle_reflections(cy3) == []
    assert all((0, 0, k) in oracle_reflections(hyper5) for k in range(1, 5))


def test_brute_force_f(sixth_root, plane4):
    assert oracle_f(sixth_root) == oracle_f_per_prime(sixth_root) == (2, 2, 2, 2)
    assert oracle_f(ell24(9)) == oracle_f_per_prime(ell24(9)) == (3, 6, 4)
    assert oracle_f(plane4) == (4, 4)


def test_residue_scan(hyper5):
    assert set(central_residues(hyper5)) == {(k, k, 0) for k in range(5)}


def test_budget():
    p = validate_and_normalize([[0, 1, 2, 3], [-1, 0, 5, 7], [-2, -5, 0, 1], [-3, -7, -1, 0]], 12)
    with pytest.raises(BudgetExceeded):
        group_closure(p, budget=10)
    with pytest.raises(BudgetExceeded):
        central_residues(p, budget=10)
    assert run_verification([("big", p)], budget=10) == (0, 0, 1)


@pytest.mark.parametrize("name", sorted(corpus()))
def test_corpus_laws(name):
    bad = [law for law, ok in verify_equivalences(corpus()[name]) if not ok]
    assert bad == []


def test_smallest_instance():
    p = validate_and_normalize([[0, 1], [-1, 0]], 2)
    assert all(ok for _, ok in verify_equivalences(p))


def test_random_instances():
    rng = random.Random(2024)
    instances = [(f"r{k}", random_params(rng)) for k in range(200)]
    assert run_verification(instances) == (200, 0, 0)


def test_random_params_valid():
    rng = random.Random(0)
    for _ in range(100):
        p = random_params(rng)
        assert 2 <= p.n <= 4 and 2 <= p.ell <= 12
