"""Acceptance criteria, one test each.

Each test records a ``criterion N PASS|FAIL`` line; pytest prints them in
the terminal summary, and running this file directly prints them as it goes.
"""
import functools
import random
import sys
import time

import pytest

from benzels.hexgrid import benzel, benzel_size
from benzels.ribbons import (
    compress, compress_inverse, count_ribbon_tilings, region_partition,
    ribbon_tableaux, ribbon_tilings, sw, sw_inverse, tuple_tableaux,
)
from benzels.tiler import MOUNTAINLESS, count_tilings
from benzels.transfer import transfer_region
from benzels.verify import (
    Budget, check_conjecture, conjecture_params, conjecture_product,
    verify_cl_invariant, verify_mountainless, verify_size, verify_structure,
    verify_symmetry_collapse, verify_unique_right_stones, verify_valleyless,
)
from benzels.young import (
    AbacusWord, Partition, abacus_word, from_quotient, k_quotient, lambda_n,
    partition_of,
)

RESULTS: dict[int, str] = {}


def criterion(number: int, title: str, seconds: float | None = None):
    """Record PASS/FAIL for one criterion and enforce its time limit."""
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            start = time.perf_counter()
            try:
                detail = fn(*args, **kwargs)
                elapsed = time.perf_counter() - start
                if seconds is not None:
                    assert elapsed < seconds, f"took {elapsed:.1f}s, limit {seconds}s"
            except BaseException as exc:
                RESULTS[number] = f"criterion {number:2d} FAIL {title}: {exc}"
                print(RESULTS[number])
                raise
            elapsed = time.perf_counter() - start
            RESULTS[number] = f"criterion {number:2d} PASS {title} ({elapsed:.1f}s{'; ' + detail if detail else ''})"
            print(RESULTS[number])
        run.number = number
        return run
    return wrap


def passed(report):
    assert report.passed, report.summary()
    return f"{len(report.instances)} instances"


def random_partition(rng, n):
    parts = []
    while n > 0:
        x = rng.randint(1, min(n, parts[-1] if parts else n))
        parts.append(x)
        n -= x
    return Partition(parts)


@criterion(1, "size formula, a+b <= 24", seconds=10)
def test_size_formula():
    return passed(verify_size(24))


@criterion(2, "unique right-stone tiling, a+b = 1 mod 3, a+b <= 16", seconds=120)
def test_unique_right_stone_tiling():
    report = verify_unique_right_stones(16)
    counts = [i for i in report.instances if i.params[-1] == "count"]
    assert counts and all(i.observed == 1 for i in counts)
    return passed(report)


@criterion(3, "mountainless table and zeros for a <= b, a+b <= 18", seconds=300)
def test_mountainless_table():
    table = {(3, 3): 2, (4, 5): 2, (6, 6): 8, (7, 8): 8, (9, 9): 48, (10, 11): 48}
    report = verify_mountainless(18)
    seen = {i.params: i.observed for i in report.instances if len(i.params) == 2}
    # the last table entry lies past the swept range
    seen[(10, 11)] = count_tilings(transfer_region(benzel(10, 11)), MOUNTAINLESS)
    for key, value in table.items():
        assert seen[key] == value, (key, seen[key], value)
    assert all(v == 0 for k, v in seen.items() if k not in table)
    return passed(report)


@criterion(4, "valleyless counts, a <= b, a+b <= 18")
def test_valleyless():
    return passed(verify_valleyless(18))


@criterion(5, "valleyless product formula")
def test_product_formula():
    report = check_conjecture(budget=Budget())
    observed = {i.params[2:]: i.observed for i in report.instances}
    for (n, k), value in {(1, 1): 2, (2, 1): 4, (1, 2): 8}.items():
        assert conjecture_product(n, k) == value
        assert observed[(n, k)] == value, (n, k, observed.get((n, k)))
    a, b = 7, 7
    assert conjecture_params(a, b) == (1, 2)
    assert count_tilings(transfer_region(benzel(a, b)), "RS,RB,FB") == 8
    largest = max(benzel_size(*i.params[:2]) for i in report.instances)
    return passed(report) + f", largest benzel {largest} cells"


@criterion(6, "Conway-Lagarias constancy, a+b <= 15")
def test_conway_lagarias():
    return passed(verify_cl_invariant(15))


@criterion(7, "abacus round trips on 500 random partitions", seconds=10)
def test_abacus_machinery():
    rng = random.Random(20240601)
    checks = 0
    for _ in range(500):
        p = random_partition(rng, rng.randint(0, 40))
        assert partition_of(abacus_word(p)) == p
        assert AbacusWord.parse(abacus_word(p).format()).canonical().trimmed() == abacus_word(p)
        for k in range(2, 6):
            data = k_quotient(p, k)
            assert from_quotient(data.quotient, data.charges, k) == p
            assert p.size == k * sum(q.size for q in data.quotient) + data.core.size
            assert (data.core == Partition()) == all(c == 0 for c in data.charges)
            checks += 1
    return f"{checks} quotient checks"


@criterion(8, "SW bijection on lambda_1, lambda_2 and the worked example")
def test_sw_bijection():
    for n, expected in ((1, 2), (2, 280)):
        lam = lambda_n(n)
        data = k_quotient(lam, 3)
        images = set()
        tableaux = list(ribbon_tableaux(lam, 3))
        for t in tableaux:
            T = sw(t, 3)
            assert sw_inverse(T, data.charges, 3) == t
            images.add(T)
        assert len(tableaux) == expected
        assert images == set(tuple_tableaux(data.quotient))
    lam = Partition((5, 5, 3, 3, 2))
    assert abacus_word(lam).format() == "xxxooxxo.oxoxxooo"
    data = k_quotient(lam, 3)
    assert data.quotient == (Partition((1,)), Partition((3,)), Partition())
    assert data.charges == (1, 1, -2) and data.core == Partition((4, 2))
    hits = 0
    for t in ribbon_tableaux(lam, 3):
        if divmod(min(b.x for b in t.tiles[-1]) - 1, 3) != (-2, 1):
            continue
        w_mu = abacus_word(t.shapes()[-2]).format().replace(".", "")
        assert w_mu.lstrip("x").rstrip("o") == "xxxxoxoooxoxxooo".lstrip("x").rstrip("o")
        T = sw(t, 3)
        assert 4 in T.fillings[1][0]
        hits += 1
    assert hits == 3
    return "2 + 280 tableaux"


@criterion(9, "Compress: worked case, lambda_2 round trip, empty-slot arrangements")
def test_compress():
    minimal = from_quotient([(1,), (), ()], (0, 0, 0), 3)
    (t,) = ribbon_tilings(minimal, 3)
    d = compress(t, 3, 1)
    assert len(d) == 1 and compress_inverse(d, 3, 1) == t
    tilings = list(ribbon_tilings(lambda_n(2), 3))
    images = {compress(t, 3, 1) for t in tilings}
    assert len(tilings) == len(images) == 36
    rho = region_partition(next(iter(images)).region)
    assert rho == Partition((4, 4, 4, 4))
    assert images == set(ribbon_tilings(rho, 2))
    assert all(compress_inverse(compress(t, 3, 1), 3, 1) == t for t in tilings)
    rng = random.Random(43)
    for _ in range(20):
        total = rng.randint(0, 6)
        m = rng.randint(0, total)
        mu, nu = random_partition(rng, m), random_partition(rng, total - m)
        counts = {count_ribbon_tilings(from_quotient(q, (0, 0, 0), 3), 3)
                  for q in ((mu, nu, ()), (mu, (), nu), ((), mu, nu))}
        assert len(counts) == 1, (mu, nu, counts)
    return "36 tilings onto the 4 x 4 square"


@criterion(10, "structural lemmas, a+b <= 21")
def test_structural_lemmas():
    return passed(verify_structure(21))


@criterion(11, "bone-symmetry collapse to 15 classes, a+b <= 12")
def test_symmetry_collapse():
    report = verify_symmetry_collapse(12)
    assert report.instances[0].observed == 15
    return passed(report)


if __name__ == "__main__":
    failed = 0
    for fn in [v for v in list(globals().values()) if hasattr(v, "number")]:
        try:
            fn()
        except BaseException:
            failed += 1
    sys.exit(1 if failed else 0)
