import itertools
import json
import random

import pytest

from conftest import random_degenerate, random_group_element, random_hypermatrix
from hyperdet import matrices as mx
from hyperdet.determinant import hyperdeterminant
from hyperdet.fields import GF, QQ
from hyperdet.hypermatrix import Hypermatrix, apply_group, identity_hypermatrix, pencil
from hyperdet.oracles import (
    BudgetExceeded,
    CountReport,
    count_enumerate,
    count_formula,
    degenerate_pencil_oracle,
    enumerate_nondegenerate,
    gl_order,
    pencil_minors,
    pencil_minors_interpolate,
    pencil_minors_laplace,
    q_factorial,
    q_int,
)


def test_q_analogs():
    assert q_int(0, 2) == 0
    assert q_int(3, 2) == 7
    assert q_int(4, 3) == 40
    assert q_factorial(3, 2) == 1 * 3 * 7
    assert q_factorial(0, 5) == 1
    with pytest.raises(ValueError):
        q_int(-1, 2)


def test_gl_order_examples():
    assert gl_order(1, 2) == 1
    assert gl_order(2, 2) == 6
    assert gl_order(2, 3) == 48
    assert gl_order(3, 2) == 168


@pytest.mark.parametrize("n,q", [(1, 2), (1, 3), (2, 2), (2, 3), (3, 2)])
def test_gl_order_brute_force(n, q):
    F = GF(q)
    count = 0
    for entries in itertools.product(range(q), repeat=n * n):
        m = [list(entries[i * n:(i + 1) * n]) for i in range(n)]
        if not F.is_zero(mx.det(F, m)):
            count += 1
    assert count == gl_order(n, q)


def test_count_formula_examples():
    assert count_formula(1, 2) == 6
    assert count_formula(2, 2) == 1008
    assert count_formula(2, 3) == 269568
    # nondegenerate orbit is free modulo scalars: count = |GL_k| |GL_{k+1}| / (q - 1)
    for k, q in [(1, 5), (2, 7), (3, 4), (5, 101)]:
        assert count_formula(k, q) * (q - 1) == gl_order(k, q) * gl_order(k + 1, q)
    with pytest.raises(ValueError):
        count_formula(0, 2)


def test_oracle_examples():
    assert not degenerate_pencil_oracle(identity_hypermatrix(3))
    s = [[1, 2], [3, 4], [5, 6]]
    assert degenerate_pencil_oracle(Hypermatrix.from_slices(s, s))
    # every F_3-rational pencil member has full rank, but the minors share a
    # root over F_9, so the hypermatrix is degenerate
    F = GF(3)
    M = Hypermatrix.from_slices([[0, 2], [2, 0], [1, 1]], [[2, 0], [0, 1], [1, 2]], F)
    assert all(pencil(M, x, y).rank() == 2 for x, y in [(1, 0), (0, 1), (1, 1), (1, 2)])
    assert degenerate_pencil_oracle(M)
    assert hyperdeterminant(M).degenerate


@pytest.mark.parametrize("F", [GF(5), GF(7), GF(10007), QQ], ids=lambda F: F.name)
def test_oracle_invariant_under_action(F, rng):
    for t in range(100):
        k = rng.randint(1, 4)
        M = random_degenerate(F, k, rng) if t % 3 == 0 else random_hypermatrix(F, k, rng)
        g = random_group_element(F, k, rng)
        assert degenerate_pencil_oracle(M) == degenerate_pencil_oracle(apply_group(g, M))
        if t % 3 == 0:
            assert degenerate_pencil_oracle(M)


@pytest.mark.parametrize("F", [GF(10007), QQ], ids=lambda F: F.name)
def test_interpolation_matches_laplace(F, rng):
    for _ in range(30):
        k = rng.randint(1, 6)
        M = random_hypermatrix(F, k, rng)
        s0, s1 = M.slices
        a = pencil_minors_laplace(F, s0, s1, k)
        b = pencil_minors_interpolate(F, s0, s1, k)
        assert [[F.convert(x) for x in row] for row in a] == [[F.convert(x) for x in row] for row in b]


def test_interpolation_needs_large_field():
    F = GF(3)
    M = random_hypermatrix(F, 3, random.Random(0))
    with pytest.raises(ValueError):
        pencil_minors_interpolate(F, M.slices[0], M.slices[1], 3)


def test_large_k_uses_interpolation(rng):
    F = GF(10007)
    M = random_hypermatrix(F, 9, rng)
    forms = pencil_minors(M)
    assert len(forms) == 10 and all(f.degree == 9 for f in forms)
    assert degenerate_pencil_oracle(M) == hyperdeterminant(M).degenerate


def test_small_enumerations():
    for q in (2, 3, 5, 7):
        res = enumerate_nondegenerate(1, q)
        assert res.total == q ** 4
        assert res.algorithm == res.oracle == count_formula(1, q)
        assert res.disagreements == 0
    assert count_enumerate(2, 2, "oracle") == 1008


def test_enumeration_threads_do_not_change_totals():
    a = enumerate_nondegenerate(1, 5, ("algorithm",), threads=1)
    b = enumerate_nondegenerate(1, 5, ("algorithm",), threads=2)
    assert a == b


def test_budget():
    with pytest.raises(BudgetExceeded):
        enumerate_nondegenerate(3, 2)
    with pytest.raises(BudgetExceeded):
        enumerate_nondegenerate(2, 2, budget=100)
    with pytest.raises(ValueError):
        enumerate_nondegenerate(1, 4)
    with pytest.raises(ValueError):
        enumerate_nondegenerate(1, 2, ("guess",))


def test_count_report_json():
    rep = CountReport(5, 101, count_formula(5, 101))
    d = json.loads(rep.dumps())
    assert d["formula"] == str(count_formula(5, 101))
    assert d["enumerated"] is None and d["agree"] is True
    assert int(d["formula"]) > 2 ** 64
    rep.enumerated = 7
    assert rep.to_json()["agree"] is False
