from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from benzels.hexgrid import benzel_size
from benzels.young import (
    AbacusWord, Partition, abacus_word, align_tops, box_label, charge,
    complement_pieces, durfee, embed_benzel, f_region, from_quotient,
    green_columns, k_charges, k_core, k_quotient, lambda_n, partition_of,
    theta, theta_lr, v_bands, young_region,
)
from benzels.verify import valid_params


@st.composite
def partitions(draw, max_size=40):
    n = draw(st.integers(0, max_size))
    parts = []
    while n > 0:
        x = draw(st.integers(1, min(n, parts[-1] if parts else n)))
        parts.append(x)
        n -= x
    return Partition(parts)


def test_partition_validation_and_parsing():
    assert Partition.parse("5,5,3,3,2") == Partition((5, 5, 3, 3, 2))
    assert Partition.parse("∅") == Partition()
    assert str(Partition()) == "∅"
    with pytest.raises(ValueError):
        Partition((1, 2))
    assert Partition((3, 1)).conjugate() == Partition((2, 1, 1))


def test_word_of_the_worked_example():
    w = abacus_word(Partition((5, 5, 3, 3, 2)))
    assert w.format() == "xxxooxxo.oxoxxooo"
    assert w == AbacusWord.parse("●●●○○●●○.○●○●●○○○").canonical().trimmed()
    assert charge(w) == 0


def test_empty_and_single_box_words():
    assert abacus_word(Partition()).format() == "xxx.ooo"
    assert partition_of(AbacusWord.parse("xxx.ooo")) == Partition()
    assert partition_of(AbacusWord.parse("xxo.xoo")) == Partition((1,))


def test_shifted_words_decode_to_the_same_partition():
    w = abacus_word(Partition((4, 2, 2, 1)))
    for c in range(-3, 4):
        assert partition_of(w.shifted(c)) == Partition((4, 2, 2, 1))


def test_quotient_of_the_worked_example():
    data = k_quotient(Partition((5, 5, 3, 3, 2)), 3)
    assert data.quotient == (Partition((1,)), Partition((3,)), Partition())
    assert data.charges == (1, 1, -2)
    assert data.core == Partition((4, 2))
    assert from_quotient(data.quotient, data.charges, 3) == Partition((5, 5, 3, 3, 2))


def test_trivial_quotients():
    for k in range(2, 6):
        data = k_quotient(Partition(), k)
        assert data.quotient == (Partition(),) * k
        assert data.charges == (0,) * k and data.core == Partition()
        assert from_quotient([()] * k, [0] * k, k) == Partition()


def test_quotient_errors():
    with pytest.raises(ValueError):
        k_quotient(Partition((2, 1)), 1)
    with pytest.raises(ValueError):
        from_quotient([(), (), ()], (1, 0, 0), 3)
    with pytest.raises(ValueError):
        from_quotient([(), ()], (0, 0, 0), 3)


def test_lambda_family():
    assert lambda_n(1) == Partition((3, 2, 1))
    assert lambda_n(2) == Partition((6, 5, 5, 4, 3, 1))
    assert from_quotient([(1,), (), (1,)], (0, 0, 0), 3) == Partition((3, 2, 1))
    for n in range(1, 6):
        p = lambda_n(n)
        assert p.size == 6 * n * n
        data = k_quotient(p, 3)
        assert data.quotient == (Partition((n,) * n), Partition(), Partition((n,) * n))
        assert data.charges == (0, 0, 0)
    assert lambda_n(3).size == 54


def test_durfee():
    assert durfee(Partition()) == 0
    assert durfee(Partition((5, 5, 3, 3, 2))) == 3


def test_theta_7_8():
    L, R, N = theta_lr(7, 8)
    assert (L, R, N) == (2, 1, 4)
    th = theta(7, 8)
    assert th.size == 36 == 3 * (L * N + R * N)
    assert durfee(th) == N - 1
    data = k_quotient(th, 3)
    assert data.charges == (0, 0, 0)
    # one L x N rectangle, one R x N rectangle, one empty slot
    shapes = Counter(tuple(sorted((len(q), q[0] if q else 0))) for q in data.quotient)
    assert shapes == Counter({(2, 4): 1, (1, 4): 1, (0, 0): 1})
    assert theta(3, 3) == Partition()


def test_theta_quotient_sizes_and_durfee():
    for a, b in valid_params(30, ordered=True):
        if (a + b) % 3 or b == 2 * a:
            continue
        L, R, N = theta_lr(a, b)
        th = theta(a, b)
        data = k_quotient(th, 3)
        assert data.charges == (0, 0, 0)
        assert sorted(q.size for q in data.quotient) == sorted([L * N, R * N, 0])
        for q in data.quotient:
            assert len(set(q)) <= 1  # rectangles
        assert durfee(th) == N - 1 == (a + b) // 3 - 2
        assert 6 * N * N - benzel_size(a, b) - 3 * L * (L + 1) // 2 - 3 * R * (R + 1) // 2 == th.size


def test_theta_rejects_bad_parameters():
    with pytest.raises(ValueError):
        theta(4, 4)
    with pytest.raises(ValueError):
        theta(8, 7)


@settings(max_examples=300, deadline=None)
@given(partitions(), st.integers(2, 5))
def test_round_trips(p, k):
    assert partition_of(abacus_word(p)) == p
    data = k_quotient(p, k)
    assert from_quotient(data.quotient, data.charges, k) == p
    assert sum(data.charges) == 0
    assert p.size == k * sum(q.size for q in data.quotient) + data.core.size
    assert k_quotient(data.core, k).quotient == (Partition(),) * k
    assert (data.core == Partition()) == all(c == 0 for c in data.charges)
    assert k_charges(p, k) == data.charges and k_core(p, k) == data.core


@settings(max_examples=100, deadline=None)
@given(partitions(max_size=30), st.integers(2, 4), st.data())
def test_adding_a_ribbon_keeps_charges(p, k, data):
    q = k_quotient(p, k)
    j = data.draw(st.integers(0, k - 1))
    slot = q.quotient[j]
    # add a box to slot j: one more k-ribbon in p
    row = data.draw(st.integers(0, len(slot)))
    parts = list(slot) + [0]
    if row == 0 or parts[row - 1] > parts[row]:
        parts[row] += 1
        bigger = list(q.quotient)
        bigger[j] = Partition(parts)
        p2 = from_quotient(bigger, q.charges, k)
        assert p2.size == p.size + k
        assert k_charges(p2, k) == q.charges
        assert young_region(p) <= young_region(p2)


def test_young_region_geometry():
    assert young_region(Partition()) == frozenset()
    region = young_region(Partition((3, 2, 1)))
    assert len(region) == 6
    assert min(b.y for b in region) == 1
    assert v_bands(1)[0] == region


def test_labels_are_balanced_in_lambda_n():
    for n in range(1, 5):
        counts = Counter(box_label(b) for b in young_region(lambda_n(n)))
        assert counts[0] == counts[1] == counts[2] == 2 * n * n


def test_v_bands():
    for n in range(1, 5):
        bands = v_bands(n)
        assert [len(b) for b in bands] == [6 * (2 * m - 1) for m in range(1, n + 1)]
        host = young_region(lambda_n(n))
        assert frozenset().union(*bands) == host


def test_green_columns_are_parallelograms_when_slot_is_empty():
    p = lambda_n(2)
    for r, boxes in green_columns(p, 3, 1).items():
        right = sorted(b.y for b in boxes if b.x == r)
        left = sorted(b.y for b in boxes if b.x == r + 1)
        # same number of half boxes on each side, offset by one step
        assert len(left) == len(right)
        assert [y + (1 if r >= 0 else -1) for y in right] == left


def test_f_region_sizes():
    assert f_region(1) == frozenset()
    for n in range(2, 6):
        assert len(f_region(n)) == 3 * n * (n - 1) // 2


def test_embedding_and_complement():
    for a, b in [(3, 3), (4, 5), (7, 8), (8, 10), (5, 7), (6, 6)]:
        placed, host = embed_benzel(a, b)
        assert placed <= host
        left, right, gray = complement_pieces(a, b)
        L, R, _ = theta_lr(a, b)
        assert len(left) == 3 * L * (L + 1) // 2
        assert len(right) == 3 * R * (R + 1) // 2
        assert len(placed) + len(left) + len(right) + len(gray) == len(host)


def test_align_tops_rejects_mismatched_tops():
    with pytest.raises(ValueError):
        align_tops(young_region(Partition((1,))), young_region(lambda_n(2)))
