"""Executable checks for the counting results on benzels.

Each ``verify_*`` function runs a family of instances and returns a
:class:`CheckReport`.  Budgets come from :class:`Budget`, which reads the
``BENZEL_BUDGET`` environment variable (``"hex=16,ribbon=22,cells=400"``; a
bare integer sets ``cells``).
"""
from __future__ import annotations

import inspect
import itertools
import math
import os
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any, Callable, Iterable, Iterator

from .hexgrid import (
    HEX_PROTOTILES, HexCell, HexKind, benzel, benzel_size,
    classify_hex, cl_invariant, reflect, three_coloring,
)
from .tiler import (
    ALL_HEX, MOUNTAINLESS, VALLEYLESS, count_tilings, enumerate_tilings,
    first_tiling, stat_census, tiling_stats, valley_positions,
)
from .transfer import SquareBox, SquareKind, SquareRegion, transfer_region
from .young import (
    align_tops, complement_pieces, durfee, embed_benzel, f_region, lambda_n,
    theta, theta_lr, young_region,
)

__all__ = [
    "Budget", "CheckReport", "Instance", "valid_params", "double_factorial_even",
    "verify_size", "verify_cl_invariant", "verify_boundary_coincidence",
    "verify_reflection", "verify_symmetry_collapse",
    "verify_unique_right_stones", "verify_mountainless", "verify_valleyless",
    "conjecture_product", "conjecture_params", "check_conjecture",
    "verify_structure", "run_suite", "SUITES",
]


@dataclass(frozen=True)
class Budget:
    hex: int = 16       # max a+b for searches allowing every prototile
    ribbon: int = 22    # max a+b for 3-ribbon searches
    cells: int = 400    # max benzel size for the conjecture search

    @classmethod
    def from_env(cls, text: str | None = None) -> Budget:
        text = os.environ.get("BENZEL_BUDGET", "") if text is None else text
        text = text.strip()
        if not text:
            return cls()
        if text.isdigit():
            return cls(cells=int(text))
        values = {}
        for item in text.split(","):
            key, _, value = item.partition("=")
            key = key.strip()
            if key not in ("hex", "ribbon", "cells") or not value.strip().isdigit():
                raise ValueError(f"bad BENZEL_BUDGET entry {item!r}")
            values[key] = int(value)
        return cls(**values)


@dataclass
class Instance:
    params: Any
    expected: Any
    observed: Any
    ok: bool
    note: str = ""


@dataclass
class CheckReport:
    name: str
    parameter_range: str
    instances: list[Instance] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(i.ok for i in self.instances)

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    @property
    def expected(self) -> list:
        return [i.expected for i in self.instances]

    @property
    def observed(self) -> list:
        return [i.observed for i in self.instances]

    def failures(self) -> list[Instance]:
        return [i for i in self.instances if not i.ok]

    def add(self, params, expected, observed, ok: bool | None = None, note: str = "") -> Instance:
        inst = Instance(params, expected, observed, expected == observed if ok is None else ok, note)
        self.instances.append(inst)
        return inst

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "range": self.parameter_range,
            "verdict": self.verdict,
            "elapsed": round(self.elapsed, 3),
            "instances": [_jsonable(asdict(i)) for i in self.instances],
        }

    def summary(self) -> str:
        bad = self.failures()
        line = f"{self.verdict.upper()} {self.name} [{self.parameter_range}] {len(self.instances)} instances, {self.elapsed:.2f}s"
        if bad:
            line += f"; first failure {bad[0].params}: expected {bad[0].expected}, observed {bad[0].observed}"
        return line


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (HexKind, SquareKind)):
        return x.value
    return x


def _timed(name: str, parameter_range: str):
    def wrap(fn: Callable[..., None]) -> Callable[..., CheckReport]:
        signature = inspect.signature(fn)

        def run(*args, **kwargs) -> CheckReport:
            bound = signature.bind(None, *args, **kwargs)
            bound.apply_defaults()
            values = dict(bound.arguments)
            del values["report"]
            report = CheckReport(name, parameter_range.format(**values))
            start = time.perf_counter()
            fn(report, *args, **kwargs)
            report.elapsed = time.perf_counter() - start
            return report
        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        return run
    return wrap


def valid_params(max_sum: int, ordered: bool = False) -> Iterator[tuple[int, int]]:
    """All (a, b) in the benzel domain with a + b <= max_sum, sorted."""
    for s in range(4, max_sum + 1):
        for a in range(2, s - 1):
            b = s - a
            if 2 <= a <= 2 * b and 2 <= b <= 2 * a and (not ordered or a <= b):
                yield a, b


def double_factorial_even(n: int) -> int:
    """(2n)!! = 2^n n!"""
    return 2 ** n * math.factorial(n)


def _stone_weight(kind: HexKind) -> int:
    return {HexKind.RIGHT_STONE: 1, HexKind.LEFT_STONE: -1}.get(kind, 0)


# --- geometry sub-checks ----------------------------------------------------

@_timed("size formula", "a+b <= {max_sum}")
def verify_size(report: CheckReport, max_sum: int = 24) -> None:
    """Cell count of every benzel against the closed form."""
    for a, b in valid_params(max_sum):
        report.add((a, b), benzel_size(a, b), len(benzel(a, b)))


@_timed("Conway-Lagarias invariant", "a+b <= {max_sum}")
def verify_cl_invariant(report: CheckReport, max_sum: int = 15) -> None:
    """Right minus left stones is the same in every tiling and equals the formula."""
    for a, b in valid_params(max_sum):
        census = stat_census(benzel(a, b), ALL_HEX, _stone_weight)
        report.add((a, b), [cl_invariant(a, b)], sorted(census))
        if (a + b) % 3 == 1:
            report.add((a, b, "size/3"), benzel_size(a, b) // 3, cl_invariant(a, b))


@_timed("boundary coincidence", "2 <= n <= {max_n}")
def verify_boundary_coincidence(report: CheckReport, max_n: int = 8) -> None:
    """benzel(n, 2n) = benzel(n, 2n-1) = benzel(n, 2n-2)."""
    for n in range(2, max_n + 1):
        base = benzel(n, 2 * n - 2)
        report.add((n,), True, benzel(n, 2 * n - 1) == base == benzel(n, 2 * n))


def _reflected_kind(kind: HexKind) -> HexKind:
    cells = HEX_PROTOTILES[kind].place(HexCell.at(1, 0))
    return classify_hex(reflect(cells))


def _subsets() -> list[tuple[HexKind, ...]]:
    kinds = list(HexKind)
    return [c for r in range(1, 6) for c in itertools.combinations(kinds, r)]


@_timed("reflection symmetry", "a+b <= {max_sum}")
def verify_reflection(report: CheckReport, max_sum: int = 12) -> None:
    """benzel(a, b) with kinds S counts like benzel(b, a) with the reflected kinds."""
    for a, b in valid_params(max_sum):
        if a >= b:
            continue
        region, mirror = benzel(a, b), benzel(b, a)
        for subset in _subsets():
            image = tuple(_reflected_kind(k) for k in subset)
            report.add((a, b, "".join(k.value for k in subset)),
                       count_tilings(region, subset), count_tilings(mirror, image))


def _collapse_key(subset: Iterable[HexKind]) -> tuple:
    subset = set(subset)
    stones = tuple(k.value for k in (HexKind.RIGHT_STONE, HexKind.LEFT_STONE) if k in subset)
    return stones, sum(1 for k in subset if not k.is_stone)


@_timed("bone symmetry collapse", "a+b <= {max_sum}")
def verify_symmetry_collapse(report: CheckReport, max_sum: int = 12) -> None:
    """Counts depend only on the allowed stones and the number of bone kinds."""
    keys = {_collapse_key(s) for s in _subsets()}
    report.add("classes", 15, len(keys))
    for a, b in valid_params(max_sum):
        region = benzel(a, b)
        groups: dict[tuple, set[int]] = {}
        for subset in _subsets():
            groups.setdefault(_collapse_key(subset), set()).add(count_tilings(region, subset))
        spread = {str(k): sorted(v) for k, v in groups.items() if len(v) > 1}
        report.add((a, b), {}, spread)


# --- theorems ---------------------------------------------------------------

@_timed("unique right-stone tiling", "a+b = 1 mod 3, a+b <= {max_sum}")
def verify_unique_right_stones(report: CheckReport, max_sum: int = 16) -> None:
    """Every benzel with a+b = 1 (mod 3) has one tiling, all right stones.

    For a <= b the cells on the bottom side lie in (2a - b + 1)/3 distinct
    stones, and every stone has its least cell in the same color class.
    """
    for a, b in valid_params(max_sum):
        if (a + b) % 3 != 1:
            continue
        region = benzel(a, b)
        tilings = list(enumerate_tilings(region, ALL_HEX, limit=2))
        report.add((a, b, "count"), 1, len(tilings))
        if len(tilings) != 1:
            continue
        tiling = tilings[0]
        stats = tiling_stats(tiling)
        report.add((a, b, "right stones"), len(region) // 3, stats.right_stones)
        colors = {three_coloring(p.anchor) for p in tiling}
        report.add((a, b, "phases"), 1, len(colors))
        if a <= b:
            bottom = [c for c in region if c.center.b == 1 - b]
            owners = {p for p in tiling for c in bottom if c in p.cells}
            report.add((a, b, "bottom line"), ((2 * a - b + 1) // 3,) * 2, (len(bottom), len(owners)))


@_timed("mountainless counts", "a <= b, a+b <= {max_sum}")
def verify_mountainless(report: CheckReport, max_sum: int = 18, hex_route: bool = True) -> None:
    """(2n)!! tilings for (3n, 3n) and (3n+1, 3n+2), none otherwise.

    Counted in the square grid; the hex-grid count must agree.
    """
    for a, b in valid_params(max_sum, ordered=True):
        n, r = divmod(a, 3)
        special = r == 0 and b == a or r == 1 and b == a + 1
        expected = double_factorial_even(n) if special else 0
        region = benzel(a, b)
        square = count_tilings(transfer_region(region), MOUNTAINLESS)
        report.add((a, b), expected, square)
        if hex_route:
            report.add((a, b, "hex"), square, count_tilings(region, MOUNTAINLESS))


@_timed("valleyless counts", "a <= b, a+b <= {max_sum}")
def verify_valleyless(report: CheckReport, max_sum: int = 18) -> None:
    """Unique when b = 2a or a+b = 1 (mod 3); none when b < 2a and a+b = 0 (mod 3).

    Instances outside both cases are recorded for information only.
    """
    for a, b in valid_params(max_sum, ordered=True):
        count = count_tilings(transfer_region(benzel(a, b)), VALLEYLESS)
        if b == 2 * a or (a + b) % 3 == 1:
            report.add((a, b), 1, count)
        elif (a + b) % 3 == 0:
            report.add((a, b), 0, count)
        else:
            report.add((a, b), None, count, ok=True, note="not covered by the theorem")


def conjecture_params(a: int, b: int) -> tuple[int, int]:
    """(n, k) with (a, b) = (n + 3k, 2n + 3k - 1)."""
    n = b - a + 1
    k, r = divmod(a - n, 3)
    if r:
        raise ValueError(f"({a}, {b}) is not of the form (n+3k, 2n+3k-1)")
    return n, k


def conjecture_product(n: int, k: int) -> int:
    """prod_{i=1..k} (2i)! (2i+2n-2)! / ((i+n-1)! (i+n+k-1)!), exactly."""
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    f = math.factorial
    total = Fraction(1)
    for i in range(1, k + 1):
        total *= Fraction(f(2 * i) * f(2 * i + 2 * n - 2), f(i + n - 1) * f(i + n + k - 1))
    if total.denominator != 1:
        raise ArithmeticError(f"product for (n, k) = ({n}, {k}) is not an integer: {total}")
    return total.numerator


@_timed("valleyless product formula", "a+b = 2 mod 3, size <= {budget.cells}")
def check_conjecture(report: CheckReport, max_instances: int | None = None,
                     budget: Budget = Budget(), max_sum: int = 60) -> None:
    """Brute-force valleyless counts against the product formula.

    Instances with k = 0 sit on the domain boundary (b = 2a - 1) and are
    marked as such.
    """
    done = 0
    for a, b in valid_params(max_sum, ordered=True):
        if (a + b) % 3 != 2 or benzel_size(a, b) > budget.cells:
            continue
        if max_instances is not None and done >= max_instances:
            break
        n, k = conjecture_params(a, b)
        count = count_tilings(transfer_region(benzel(a, b)), VALLEYLESS)
        report.add((a, b, n, k), conjecture_product(n, k), count,
                   note="boundary reading (k = 0)" if k == 0 else "")
        done += 1


# --- structural lemmas ------------------------------------------------------

@_timed("structural lemmas", "a+b <= {max_sum}")
def verify_structure(report: CheckReport, max_sum: int = 21, max_n: int = 5, max_m: int = 4) -> None:
    """Forced regions, valley positions, the complement of B inside lambda_N."""
    bones = (HexKind.RISING_BONE, HexKind.FALLING_BONE)
    for n in range(2, max_n + 1):
        region = f_region(n)
        tilings = list(enumerate_tilings(region, (HexKind.RIGHT_STONE, HexKind.LEFT_STONE) + bones, limit=2))
        kinds = sorted({p.kind.value for t in tilings for p in t})
        report.add(("F", n), (1, ["negative"]), (len(tilings), kinds))
    for m in range(1, max_m + 1):
        report.add(("V", m), 2 * m, len(valley_positions(m)))
    ribbons = (HexKind.RIGHT_STONE, HexKind.LEFT_STONE) + bones
    for n in range(1, max_n - 1):
        for a, b in ((3 * n, 3 * n), (3 * n + 1, 3 * n + 2)):
            placed, host = embed_benzel(a, b)
            inner = align_tops(young_region(lambda_n(n)), host)
            rest = SquareRegion(placed - inner)
            report.add((a, b, "lambda_n inside"), True, inner <= placed)
            if a == b:
                left = SquareRegion(x for x in rest if x.x < 0)
                right = SquareRegion(x for x in rest if x.x > 0)
                mirror = SquareRegion(SquareBox(-x.x, x.y) for x in right)
                shape = f_region(n)
                report.add((a, b, "F pieces"), (True, True, len(rest)),
                           (left.same_shape(shape), mirror.same_shape(shape),
                            len(left) + len(right)))
            else:
                tilings = list(enumerate_tilings(rest, MOUNTAINLESS, limit=2))
                kinds = {p.kind for t in tilings for p in t}
                report.add((a, b, "remainder forced"), (1, True),
                           (len(tilings), kinds <= {SquareKind.NEGATIVE_BONE, SquareKind.POSITIVE_BONE}))
    # b = 2a coincides with a smaller benzel and is not embedded this way
    for a, b in valid_params(max_sum, ordered=True):
        if (a + b) % 3 or b == 2 * a:
            continue
        big_n = (a + b) // 3 - 1
        L, R, _ = theta_lr(a, b)
        th = theta(a, b)
        report.add((a, b, "durfee"), big_n - 1, durfee(th))
        placed, host = embed_benzel(a, b)
        expected_gray = len(host) - len(placed) - 3 * (L * (L + 1) // 2) - 3 * (R * (R + 1) // 2)
        report.add((a, b, "gray size"), (expected_gray, 3 * (L + R) * big_n), (th.size, th.size))
        left, right, gray = complement_pieces(a, b)
        valley = (HexKind.LEFT_STONE,)
        report.add((a, b, "complement"), (1, 1, True),
                   (count_tilings(left, valley), count_tilings(right, valley),
                    first_tiling(gray, ribbons) is not None))


SUITES: dict[str, Callable[[Budget], list[CheckReport]]] = {
    "invariant": lambda bud: [
        verify_size(24), verify_boundary_coincidence(8),
        verify_cl_invariant(min(bud.hex - 1, 15)),
        verify_symmetry_collapse(min(bud.hex, 12)), verify_reflection(min(bud.hex, 12)),
    ],
    "thm1": lambda bud: [verify_unique_right_stones(bud.hex)],
    "thm2": lambda bud: [verify_mountainless(min(bud.ribbon, 18))],
    "thm3": lambda bud: [verify_valleyless(min(bud.ribbon, 18))],
    "conjecture": lambda bud: [check_conjecture(budget=bud)],
    "structure": lambda bud: [verify_structure(bud.ribbon - 1)],
}


def run_suite(name: str, budget: Budget | None = None, max_sum: int | None = None) -> list[CheckReport]:
    """Run one named suite (or ``"all"``); ``max_sum`` caps every range."""
    budget = budget or Budget.from_env()
    if max_sum is not None:
        budget = Budget(min(budget.hex, max_sum), min(budget.ribbon, max_sum), budget.cells)
    if name == "all":
        reports = SUITES["invariant"](budget)
        if not all(r.passed for r in reports):
            return reports  # geometry is broken; theorem checks would mislead
        return reports + [r for key in SUITES if key != "invariant" for r in SUITES[key](budget)]
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from all, {', '.join(SUITES)}")
    return SUITES[name](budget)
