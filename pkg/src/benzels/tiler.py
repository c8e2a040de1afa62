"""Exact-cover enumeration of trihex / 3-ribbon tilings.

Cells of a region are numbered in sort order and sets of cells become integer
bitmasks.  The search always branches on the least uncovered cell, so a
placement can only be used there if that cell is its least cell; placements
are bucketed accordingly.

Two counters share that core: :meth:`ExactCover.count` memoizes on the set
of covered cells (with least-cell branching the covered set is a thin
frontier, so the table stays small), and :meth:`ExactCover.count_plain` is
memo-free backtracking with a component-size pruning step.  The tests hold
them against each other.
"""
from __future__ import annotations

import collections
import sys
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Iterator, Sequence

from .hexgrid import HexCell, HexKind, HexRegion, hex_placements
from .transfer import (
    HEX_TO_SQUARE_KIND, RIBBON_KINDS, SQUARE_TO_HEX_KIND, SquareBox, SquareKind,
    SquareRegion, classify_square, square_placements,
)

__all__ = [
    "ExactCover", "Placement", "Tiling", "TilingStats", "parse_kinds",
    "enumerate_tilings", "count_tilings", "tiling_stats", "stat_census",
    "valley_positions", "MOUNTAINLESS", "VALLEYLESS", "ALL_HEX",
    "first_tiling",
]

ALL_HEX = tuple(HexKind)
MOUNTAINLESS = (HexKind.LEFT_STONE, HexKind.RISING_BONE, HexKind.FALLING_BONE)
VALLEYLESS = (HexKind.RIGHT_STONE, HexKind.RISING_BONE, HexKind.FALLING_BONE)


class ExactCover:
    """Exact cover of ``cells`` by the given candidate ``pieces``.

    ``cells`` fixes the branching order.  Each piece is a collection of cells;
    pieces with a cell outside ``cells`` are dropped.
    """

    def __init__(self, cells: Sequence[Hashable], pieces: Sequence[Iterable[Hashable]]):
        self.cells = list(cells)
        self.index = {c: i for i, c in enumerate(self.cells)}
        self.n = len(self.cells)
        self.full = (1 << self.n) - 1
        self.pieces: list[int] = []
        self.by_first: list[list[int]] = [[] for _ in range(self.n)]
        for piece in pieces:
            try:
                idx = [self.index[c] for c in piece]
            except KeyError:
                self.pieces.append(0)
                continue
            mask = 0
            for i in idx:
                mask |= 1 << i
            self.pieces.append(mask)
            if mask:
                self.by_first[min(idx)].append(len(self.pieces) - 1)
        self._memo: dict[int, int] = {}
        self._adjacency: list[int] | None = None

    @staticmethod
    def _first_free(mask: int) -> int:
        return (~mask & (mask + 1)).bit_length() - 1

    def count(self) -> int:
        """Number of exact covers (memoized on the covered set)."""
        return self.count_subproblem(0)

    def count_subproblem(self, mask: int) -> int:
        """Covers of the cells not in ``mask``."""
        memo = self._memo
        full, pieces, by_first = self.full, self.pieces, self.by_first

        def go(m: int) -> int:
            if m == full:
                return 1
            hit = memo.get(m)
            if hit is not None:
                return hit
            total = 0
            for pi in by_first[self._first_free(m)]:
                p = pieces[pi]
                if not p & m:
                    total += go(m | p)
            memo[m] = total
            return total

        return _deep(go, mask)

    def solutions(self, start: int = 0) -> Iterator[list[int]]:
        """Every exact cover, as lists of piece indices, in search order.

        Dead branches are skipped using the memoized counts, so the cost is
        proportional to the output.
        """
        if self.count_subproblem(start) == 0:
            return
        yield from self._solutions(start, [])

    def _solutions(self, mask: int, path: list[int]) -> Iterator[list[int]]:
        if mask == self.full:
            yield list(path)
            return
        for pi in self.by_first[self._first_free(mask)]:
            p = self.pieces[pi]
            if p & mask:
                continue
            nxt = mask | p
            if nxt != self.full and self.count_subproblem(nxt) == 0:
                continue
            path.append(pi)
            yield from self._solutions(nxt, path)
            path.pop()

    def census(self, weight: Callable[[int], int]) -> collections.Counter:
        """Map from total ``weight`` over a cover's pieces to number of covers."""
        memo: dict[int, collections.Counter] = {}
        full, pieces, by_first = self.full, self.pieces, self.by_first
        weights = [weight(i) for i in range(len(pieces))]

        def go(mask: int) -> collections.Counter:
            if mask == full:
                return collections.Counter({0: 1})
            hit = memo.get(mask)
            if hit is not None:
                return hit
            out: collections.Counter = collections.Counter()
            for pi in by_first[self._first_free(mask)]:
                p = pieces[pi]
                if not p & mask:
                    w = weights[pi]
                    for v, c in go(mask | p).items():
                        out[v + w] += c
            memo[mask] = out
            return out

        return _deep(go, 0)

    def set_adjacency(self, neighbors: Callable[[Hashable], Iterable[Hashable]]) -> None:
        adj = []
        for c in self.cells:
            m = 0
            for nb in neighbors(c):
                i = self.index.get(nb)
                if i is not None:
                    m |= 1 << i
            adj.append(m)
        self._adjacency = adj

    def _components_ok(self, mask: int, unit: int) -> bool:
        free = self.full & ~mask
        adj = self._adjacency
        while free:
            low = free & -free
            comp = low
            frontier = low
            while frontier:
                bit = frontier & -frontier
                frontier ^= bit
                new = adj[bit.bit_length() - 1] & free & ~comp
                comp |= new
                frontier |= new
            if comp.bit_count() % unit:
                return False
            free &= ~comp
        return True

    def count_plain(self, prune: bool = True, unit: int = 3) -> int:
        """Memo-free backtracking count; prunes on component sizes mod ``unit``."""
        prune = prune and self._adjacency is not None
        full, pieces, by_first = self.full, self.pieces, self.by_first

        def go(mask: int) -> int:
            if mask == full:
                return 1
            total = 0
            for pi in by_first[self._first_free(mask)]:
                p = pieces[pi]
                if p & mask:
                    continue
                nxt = mask | p
                if prune and not self._components_ok(nxt, unit):
                    continue
                total += go(nxt)
            return total

        if prune and not self._components_ok(0, unit):
            return 0
        return _deep(go, 0)


def _deep(fn, arg):
    limit = sys.getrecursionlimit()
    if limit < 20000:
        sys.setrecursionlimit(20000)
    return fn(arg)


@dataclass(frozen=True)
class Placement:
    """One tile: its kind, anchor (least cell) and cells."""

    kind: HexKind | SquareKind
    anchor: HexCell | SquareBox
    cells: frozenset

    def to_json(self):
        if isinstance(self.anchor, HexCell):
            return {"kind": self.kind.value, "cells": [list(c.as_pair()) for c in sorted(self.cells, key=lambda c: c.key)]}
        return {"kind": self.kind.value, "cells": [list(b.as_pair()) for b in sorted(self.cells)]}


Tiling = frozenset  # of Placement


def parse_kinds(spec: str | Iterable) -> tuple[HexKind, ...]:
    """``"LS,RB,FB"`` (or any iterable of names / kinds) to hex kinds, in enum order."""
    if isinstance(spec, str):
        items = [s.strip() for s in spec.split(",") if s.strip()]
    else:
        items = list(spec)
    kinds = set()
    for item in items:
        if isinstance(item, HexKind):
            kinds.add(item)
        elif isinstance(item, SquareKind):
            kinds.add(SQUARE_TO_HEX_KIND[item])
        else:
            try:
                kinds.add(HexKind(item.upper()))
            except ValueError:
                raise ValueError(f"unknown prototile {item!r}; use RS, LS, VB, RB, FB") from None
    if not kinds:
        raise ValueError("at least one prototile must be allowed")
    return tuple(k for k in HexKind if k in kinds)


def _problem(region, allowed) -> tuple[ExactCover, list[Placement]]:
    kinds = parse_kinds(allowed)
    if isinstance(region, HexRegion):
        cells = region.sorted()
        raw = list(hex_placements(region, kinds))
        placements = [Placement(k, min(c, key=lambda h: h.key), frozenset(c)) for k, c in raw]
        neighbors = HexCell.neighbors
    elif isinstance(region, SquareRegion):
        cells = region.sorted()
        raw = list(square_placements(region, [HEX_TO_SQUARE_KIND[k] for k in kinds]))
        placements = [Placement(k, min(c), frozenset(c)) for k, c in raw]
        # the split vertical-bone image is not edge-connected; pruning on
        # edge components would be wrong with it
        neighbors = None if HexKind.VERTICAL_BONE in kinds else SquareBox.neighbors
    else:
        raise TypeError(f"expected HexRegion or SquareRegion, got {type(region).__name__}")
    problem = ExactCover(cells, [p.cells for p in placements])
    if neighbors is not None:
        problem.set_adjacency(neighbors)
    return problem, placements


def enumerate_tilings(region, allowed=ALL_HEX, limit: int | None = None) -> Iterator[Tiling]:
    """Yield each tiling of ``region`` once, in deterministic search order."""
    if len(region) % 3:
        return
    problem, placements = _problem(region, allowed)
    for i, sol in enumerate(problem.solutions()):
        if limit is not None and i >= limit:
            return
        yield Tiling(placements[j] for j in sol)


def first_tiling(region, allowed=ALL_HEX) -> Tiling | None:
    return next(enumerate_tilings(region, allowed, limit=1), None)


def count_tilings(region, allowed=ALL_HEX, method: str = "memo") -> int:
    """Number of tilings; ``method`` is ``"memo"`` or ``"backtrack"``."""
    if len(region) % 3:
        return 0
    if not region:
        return 1
    problem, _ = _problem(region, allowed)
    if method == "memo":
        return problem.count()
    if method == "backtrack":
        return problem.count_plain()
    raise ValueError(f"unknown method {method!r}")


@dataclass(frozen=True)
class TilingStats:
    right_stones: int = 0
    left_stones: int = 0
    vertical: int = 0
    rising: int = 0
    falling: int = 0

    @property
    def stone_difference(self) -> int:
        return self.right_stones - self.left_stones


_STAT_FIELD = {
    HexKind.RIGHT_STONE: "right_stones", HexKind.LEFT_STONE: "left_stones",
    HexKind.VERTICAL_BONE: "vertical", HexKind.RISING_BONE: "rising",
    HexKind.FALLING_BONE: "falling",
}


def _hex_kind(kind) -> HexKind:
    return kind if isinstance(kind, HexKind) else SQUARE_TO_HEX_KIND[kind]


def tiling_stats(tiling: Iterable[Placement]) -> TilingStats:
    counts = collections.Counter(_STAT_FIELD[_hex_kind(p.kind)] for p in tiling)
    return TilingStats(**counts)


def stat_census(region, allowed, weight: Callable[[HexKind], int]) -> collections.Counter:
    """Distribution of ``sum(weight(kind))`` over all tilings, without listing them."""
    if len(region) % 3:
        return collections.Counter()
    problem, placements = _problem(region, allowed)
    return problem.census(lambda i: weight(_hex_kind(placements[i].kind)))


def valley_positions(m: int) -> list[Placement]:
    """Valley stones in the band ``V_m`` that extend to a mountainless tiling.

    The band is taken as the bottom band of ``lambda_m`` at the origin.
    """
    from .young import v_bands

    if m < 1:
        raise ValueError("m must be at least 1")
    band = v_bands(m)[-1]
    bones = (HexKind.RISING_BONE, HexKind.FALLING_BONE)
    out = []
    for kind, cells in square_placements(band, [SquareKind.VALLEY_STONE]):
        if count_tilings(SquareRegion(band - cells), bones) > 0:
            out.append(Placement(kind, min(cells), frozenset(cells)))
    return out


def ribbon_kind(boxes: Iterable[SquareBox]) -> SquareKind | None:
    kind = classify_square(boxes)
    return kind if kind in RIBBON_KINDS else None
