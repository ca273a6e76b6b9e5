import json

import pytest

from conftest import random_degenerate, random_group_element, random_hypermatrix
from hyperdet import matrices as mx
from hyperdet.fields import GF, QQ
from hyperdet.hypermatrix import (
    ROW,
    SWAP,
    GroupElement,
    Hypermatrix,
    apply_group,
    identity_hypermatrix,
)
from hyperdet.oracles import degenerate_pencil_oracle
from hyperdet.reduction import (
    FIRST_SLICE_RANK,
    ZERO_PIVOT_ROW,
    Degenerate,
    OperationRecord,
    Status,
    canonical_group_element,
    canonicalize,
    double_gaussian,
    is_degenerate,
    is_identity_hypermatrix,
    is_trivial_in_G,
    log_from_json,
    log_to_json,
    reduce_first_slice,
    replay,
    transporter,
)

FIELDS = [GF(7), GF(10007), QQ]


def _nondegenerate(F, k, rng):
    while True:
        M = random_hypermatrix(F, k, rng)
        if not degenerate_pencil_oracle(M):
            return M


def test_first_slice_of_identity_needs_nothing():
    out = reduce_first_slice(identity_hypermatrix(3))
    assert out.reduced
    assert out.log == []
    assert out.detA == 1 and out.detB == 1
    assert out.op_count == 0


def test_first_slice_two_swaps():
    F = GF(7)
    s0 = [[0, 0, 1], [1, 0, 0], [0, 1, 0], [0, 0, 0]]
    s1 = [[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]]
    out = reduce_first_slice(Hypermatrix.from_slices(s0, s1, F))
    assert out.log == [OperationRecord(ROW, SWAP, 0, 1), OperationRecord(ROW, SWAP, 1, 2)]
    assert out.detB == 1 and out.detA == 1
    assert out.detB == mx.det(F, out.group.B)
    assert out.hypermatrix.slices[0] == [[1, 0, 0], [0, 1, 0], [0, 0, 1], [0, 0, 0]]


def test_single_swap_gives_minus_one():
    M = Hypermatrix.from_slices([[0, 1], [1, 0], [0, 0]], [[0, 0], [0, 0], [1, 1]])
    out = reduce_first_slice(M)
    assert out.log == [OperationRecord(ROW, SWAP, 0, 1)]
    assert out.detB == -1
    assert out.detA == 1


def test_first_slice_rank_deficient():
    M = Hypermatrix.from_slices([[1, 2], [2, 4], [3, 6]], [[1, 0], [0, 1], [0, 0]])
    out = reduce_first_slice(M)
    assert out.status is Status.DEGENERATE
    assert out.reason == FIRST_SLICE_RANK
    with pytest.raises(Degenerate) as exc:
        canonical_group_element(M)
    assert exc.value.reason == FIRST_SLICE_RANK


def test_double_gaussian_examples():
    out = double_gaussian(identity_hypermatrix(4))
    assert out.reduced and out.log == []
    # slice 1 with a zero row in the pivot band is degenerate
    M = Hypermatrix.from_slices([[1, 0], [0, 1], [0, 0]], [[0, 0], [0, 0], [0, 1]])
    out = double_gaussian(M)
    assert out.reason == ZERO_PIVOT_ROW
    assert degenerate_pencil_oracle(M)
    with pytest.raises(ValueError):
        double_gaussian(Hypermatrix.from_slices([[2, 0], [0, 1], [0, 0]],
                                                [[0, 0], [1, 0], [0, 1]]))


def test_double_gaussian_small_example():
    # slice 1 = [[1, 0], [2, 0], [0, 3]] reduces without pivoting
    M = Hypermatrix.from_slices([[1, 0], [0, 1], [0, 0]], [[1, 0], [2, 0], [0, 3]])
    out = canonicalize(M)
    assert out.reduced
    assert is_identity_hypermatrix(out.hypermatrix)
    assert replay(M, out.log) == out.hypermatrix


@pytest.mark.parametrize("F", FIELDS, ids=lambda F: F.name)
def test_replay_and_accumulators(F, rng):
    seen = 0
    while seen < 100:
        k = rng.randint(1, 5)
        M = random_hypermatrix(F, k, rng)
        out = canonicalize(M)
        if not out.reduced:
            continue
        seen += 1
        assert is_identity_hypermatrix(out.hypermatrix)
        assert replay(M, out.log) == out.hypermatrix
        assert apply_group(out.group, M) == out.hypermatrix
        assert F.eq(out.detA, mx.det(F, out.group.A))
        assert F.eq(out.detB, mx.det(F, out.group.B))


@pytest.mark.parametrize("F", [GF(5), GF(7), QQ], ids=lambda F: F.name)
def test_degenerate_inputs_rejected(F, rng):
    for _ in range(60):
        k = rng.randint(1, 4)
        M = random_degenerate(F, k, rng)
        out = canonicalize(M)
        assert not out.reduced
        assert out.reason in (FIRST_SLICE_RANK, ZERO_PIVOT_ROW)
        assert is_degenerate(M)


@pytest.mark.parametrize("F", FIELDS, ids=lambda F: F.name)
def test_transporter(F, rng):
    for _ in range(40):
        k = rng.randint(1, 4)
        M1 = _nondegenerate(F, k, rng)
        h = random_group_element(F, k, rng)
        M2 = apply_group(h, M1)
        g = transporter(M1, M2)
        assert apply_group(g, M1) == M2
        assert is_trivial_in_G(transporter(M1, M1))


def test_transporter_errors(rng):
    F = GF(7)
    M = _nondegenerate(F, 2, rng)
    with pytest.raises(Degenerate):
        transporter(M, random_degenerate(F, 2, rng))
    with pytest.raises(ValueError):
        transporter(M, _nondegenerate(F, 3, rng))
    with pytest.raises(ValueError):
        transporter(M, _nondegenerate(GF(5), 2, rng))


def test_is_trivial_in_G_examples():
    F = GF(7)
    assert is_trivial_in_G(GroupElement.identity(2, F))
    n = GroupElement([[3, 0], [0, 3]], [[5, 0, 0], [0, 5, 0], [0, 0, 5]], F)
    assert is_trivial_in_G(n)  # 3 * 5 = 1 mod 7
    assert not is_trivial_in_G(GroupElement([[3, 0], [0, 3]], [[3, 0, 0], [0, 3, 0], [0, 0, 3]], F))
    assert not is_trivial_in_G(GroupElement([[1, 1], [0, 1]], mx.identity(F, 3), F))
    assert not is_trivial_in_G(GroupElement([[0, 1], [1, 0]], mx.identity(F, 3), F))


@pytest.mark.parametrize("F", FIELDS, ids=lambda F: F.name)
def test_log_json_roundtrip(F, rng):
    M = _nondegenerate(F, 3, rng)
    out = canonicalize(M)
    text = log_to_json(out.log, F)
    back = log_from_json(text, F)
    assert back == out.log
    assert replay(M, back) == out.hypermatrix
    assert out.log_json(F) == json.loads(text)


def test_no_log_no_tracking(rng):
    F = GF(10007)
    M = _nondegenerate(F, 4, rng)
    out = canonicalize(M, log=False, track=False)
    assert out.reduced and out.log == [] and out.group is None
    full = canonicalize(M)
    assert out.detA == full.detA and out.detB == full.detB
    assert out.op_count == full.op_count
