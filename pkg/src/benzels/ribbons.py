"""Ribbon tilings and tableaux; the abacus bijection and Compress.

Tiles are :class:`~benzels.transfer.SquareRegion` objects on the Russian
diagram of :mod:`benzels.young`.  A k-ribbon tableau is an ordered tuple of
k-ribbons stacked on the k-core; a k-tuple Young tableau is a tuple of k
fillings, each given as rows of labels (row ``r``, column ``c`` in English
indexing, so labels grow along rows and down columns).
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .tiler import ExactCover
from .transfer import SquareBox, SquareRegion
from .young import (
    Partition, from_quotient, k_quotient, young_region,
)

__all__ = [
    "RibbonError", "is_ribbon", "region_partition", "RibbonTiling",
    "RibbonTableau", "TupleYoungTableau", "ribbon_shapes", "ribbon_tilings", "count_ribbon_tilings",
    "ribbon_tableaux", "sw", "sw_inverse", "tableaux_of",
    "count_linear_extensions", "tuple_tableaux", "compress", "compress_many",
    "compress_inverse", "compress_tableau", "compress_box_map",
]


class RibbonError(ValueError):
    pass


def is_ribbon(boxes: Iterable[SquareBox], k: int | None = None) -> bool:
    region = SquareRegion(boxes)
    if k is not None and len(region) != k:
        return False
    return bool(region) and region.is_ribbon()


def region_partition(region: Iterable[SquareBox], anchor: tuple[int, int] = (0, 0)) -> Partition | None:
    """The partition whose diagram (bottom vertex at ``anchor``) is ``region``, else None."""
    dx, dy = anchor
    rows: dict[int, set[int]] = {}
    for b in region:
        x, y = b.x - dx, b.y - dy
        r2, c2 = x + y + 1, y - x + 1
        if r2 % 2 or c2 % 2 or r2 < 2 or c2 < 2:
            return None
        rows.setdefault(r2 // 2, set()).add(c2 // 2)
    parts = []
    for r in range(1, len(rows) + 1):
        cols = rows.get(r)
        if not cols or cols != set(range(1, len(cols) + 1)):
            return None
        parts.append(len(cols))
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        return None
    return Partition(parts)


def _tile_key(tile: SquareRegion):
    return min(tile).as_pair()


class RibbonTiling(frozenset):
    """An unordered set of tiles (each a SquareRegion)."""

    def __new__(cls, tiles: Iterable[Iterable[SquareBox]] = ()):
        return super().__new__(cls, (SquareRegion(t) for t in tiles))

    @property
    def region(self) -> SquareRegion:
        out: set = set()
        for t in self:
            if out & t:
                raise RibbonError("tiles overlap")
            out |= t
        return SquareRegion(out)

    def ordered(self) -> list[SquareRegion]:
        return sorted(self, key=_tile_key)

    def to_json(self) -> list:
        return [[list(b.as_pair()) for b in sorted(t)] for t in self.ordered()]

    @classmethod
    def from_json(cls, data: list) -> RibbonTiling:
        return cls(SquareRegion.from_pairs(tuple(p) for p in tile) for tile in data)

    def dumps(self) -> str:
        return json.dumps(self.to_json())


@dataclass(frozen=True)
class RibbonTableau:
    tiles: tuple[SquareRegion, ...]
    base: Partition = field(default_factory=Partition)

    def shapes(self) -> list[Partition]:
        """Partitions after each prefix, starting with the base."""
        region = set(young_region(self.base))
        out = [Partition(self.base)]
        for i, tile in enumerate(self.tiles, 1):
            if region & tile:
                raise RibbonError(f"tile {i} overlaps earlier tiles")
            region |= tile
            p = region_partition(region)
            if p is None:
                raise RibbonError(f"prefix of length {i} is not a Young diagram")
            out.append(p)
        return out

    @property
    def shape(self) -> Partition:
        return self.shapes()[-1]

    def tiling(self) -> RibbonTiling:
        return RibbonTiling(self.tiles)


@dataclass(frozen=True)
class TupleYoungTableau:
    """``k`` strict fillings; ``fillings[j][r][c]`` is a label."""

    fillings: tuple[tuple[tuple[int, ...], ...], ...]

    def __post_init__(self):
        labels = []
        for rows in self.fillings:
            lengths = [len(r) for r in rows]
            if 0 in lengths or lengths != sorted(lengths, reverse=True):
                raise RibbonError(f"rows of lengths {lengths} do not form a partition")
            for r, row in enumerate(rows):
                for c, v in enumerate(row):
                    if c and row[c - 1] >= v:
                        raise RibbonError("labels must increase along rows")
                    if r and rows[r - 1][c] >= v:
                        raise RibbonError("labels must increase down columns")
                    labels.append(v)
        if sorted(labels) != list(range(1, len(labels) + 1)):
            raise RibbonError("labels must be exactly 1..m")

    @property
    def k(self) -> int:
        return len(self.fillings)

    def shapes(self) -> tuple[Partition, ...]:
        return tuple(Partition(len(r) for r in rows) for rows in self.fillings)

    @classmethod
    def empty(cls, k: int) -> TupleYoungTableau:
        return cls(((),) * k)

    @classmethod
    def from_cells(cls, cells: Sequence[dict[tuple[int, int], int]]) -> TupleYoungTableau:
        out = []
        for d in cells:
            rows: list[list[int]] = []
            for (r, c), v in sorted(d.items()):
                while len(rows) < r:
                    rows.append([])
                rows[r - 1].append(v)
            out.append(tuple(tuple(row) for row in rows))
        return cls(tuple(out))

    def cells(self) -> list[dict[tuple[int, int], int]]:
        return [{(r, c): v for r, row in enumerate(rows, 1) for c, v in enumerate(row, 1)}
                for rows in self.fillings]

    def drop(self, j: int) -> TupleYoungTableau:
        return TupleYoungTableau(self.fillings[:j] + self.fillings[j + 1:])


def ribbon_shapes(k: int) -> list[tuple[tuple[int, int], ...]]:
    """All k-ribbons as offsets from their leftmost box."""
    out = []
    for steps in itertools.product((1, -1), repeat=k - 1):
        y, cells = 0, [(0, 0)]
        for i, s in enumerate(steps, 1):
            y += s
            cells.append((i, y))
        out.append(tuple(cells))
    return out


def _ribbons_in(region: SquareRegion, k: int) -> list[SquareRegion]:
    shapes = ribbon_shapes(k)
    out = []
    for b in region.sorted():
        for shape in shapes:
            tile = SquareRegion(b.translate(dx, dy) for dx, dy in shape)
            if tile <= region:
                out.append(tile)
    return out


def ribbon_tilings(region: SquareRegion | Partition, k: int) -> Iterator[RibbonTiling]:
    """All k-ribbon tilings of a region (or of a partition's diagram)."""
    if isinstance(region, Partition):
        region = young_region(region)
    if len(region) % k:
        return
    if not region:
        yield RibbonTiling()
        return
    tiles = _ribbons_in(region, k)
    problem = ExactCover(region.sorted(), tiles)
    for sol in problem.solutions():
        yield RibbonTiling(tiles[i] for i in sol)


def count_ribbon_tilings(region: SquareRegion | Partition, k: int) -> int:
    if isinstance(region, Partition):
        region = young_region(region)
    if len(region) % k:
        return 0
    if not region:
        return 1
    return ExactCover(region.sorted(), _ribbons_in(region, k)).count()


def ribbon_tableaux(p: Partition, k: int) -> Iterator[RibbonTableau]:
    """Every k-ribbon tableau of ``p`` over its k-core, by peeling removable ribbons."""
    core = k_quotient(p, k).core
    core_region = young_region(core)

    def peel(region: SquareRegion) -> Iterator[tuple[SquareRegion, ...]]:
        if region == core_region:
            yield ()
            return
        for tile in _ribbons_in(SquareRegion(region - core_region), k):
            rest = SquareRegion(region - tile)
            if region_partition(rest) is not None:
                for prefix in peel(rest):
                    yield prefix + (tile,)

    for tiles in peel(young_region(p)):
        yield RibbonTableau(tiles, core)


def _leftmost(tile: SquareRegion) -> int:
    return min(b.x for b in tile) - 1


def sw(t: RibbonTableau, k: int) -> TupleYoungTableau:
    """The abacus bijection from a k-ribbon tableau over the k-core."""
    shapes = t.shapes()
    data = k_quotient(shapes[-1], k)
    if Partition(t.base) != data.core:
        raise RibbonError(f"base {t.base} is not the {k}-core {data.core}")
    cells: list[dict[tuple[int, int], int]] = [{} for _ in range(k)]
    prev = k_quotient(shapes[0], k)
    for m, (tile, shape) in enumerate(zip(t.tiles, shapes[1:]), 1):
        if not is_ribbon(tile, k):
            raise RibbonError(f"tile {m} is not a {k}-ribbon")
        cur = k_quotient(shape, k)
        ell, j = divmod(_leftmost(tile), k)
        if cur.charges != prev.charges:
            raise RibbonError("charges changed while adding a ribbon")
        for i in range(k):
            if i != j and cur.quotient[i] != prev.quotient[i]:
                raise RibbonError(f"slot {i} changed, expected only slot {j}")
        added = set(cur.quotient[j].cells()) - set(prev.quotient[j].cells())
        if len(added) != 1 or len(cur.quotient[j].cells()) != len(prev.quotient[j].cells()) + 1:
            raise RibbonError(f"slot {j} did not grow by one box")
        (r, c), = added
        # the new box's leftmost point has real part ell - c_j
        assert (r - c) - 1 == ell - cur.charges[j], "box position disagrees with ribbon position"
        cells[j][(r, c)] = m
        prev = cur
    return TupleYoungTableau.from_cells(cells)


def sw_inverse(T: TupleYoungTableau, charges: Sequence[int], k: int) -> RibbonTableau:
    if T.k != k or len(charges) != k:
        raise RibbonError(f"need a {k}-tuple tableau and {k} charges")
    cells = T.cells()
    shapes = [set(d) for d in cells]
    where = {v: (j, rc) for j, d in enumerate(cells) for rc, v in d.items()}
    lam = from_quotient([Partition(_rows(s)) for s in shapes], charges, k)
    tiles = []
    for m in range(len(where), 0, -1):
        j, rc = where[m]
        shapes[j].discard(rc)
        if _rows(shapes[j]) is None:
            raise RibbonError(f"removing label {m} leaves a non-partition shape")
        mu = from_quotient([Partition(_rows(s)) for s in shapes], charges, k)
        tile = SquareRegion(young_region(lam) - young_region(mu))
        tiles.append(tile)
        lam = mu
    core = from_quotient([Partition()] * k, charges, k)
    if lam != core:
        raise RibbonError("did not reach the core")
    return RibbonTableau(tuple(reversed(tiles)), core)


def _rows(cells: set[tuple[int, int]]) -> tuple[int, ...] | None:
    rows: dict[int, int] = {}
    for r, c in cells:
        rows[r] = rows.get(r, 0) + 1
    parts = tuple(rows.get(r, 0) for r in range(1, len(rows) + 1))
    if any(x == 0 for x in parts) or any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        return None
    if any(c > parts[r - 1] for r, c in cells):
        return None
    return parts


def _below(tile_of: dict[SquareBox, int], tiles: Sequence[SquareRegion]) -> list[set[int]]:
    preds: list[set[int]] = [set() for _ in tiles]
    for i, tile in enumerate(tiles):
        for b in tile:
            for nb in (SquareBox(b.x - 1, b.y - 1), SquareBox(b.x + 1, b.y - 1)):
                owner = tile_of.get(nb)
                if owner is not None and owner != i:
                    preds[i].add(owner)
    return preds


def tableaux_of(t: RibbonTiling, base: Partition = Partition()) -> list[RibbonTableau]:
    """All orderings of ``t`` that build the diagram from ``base`` upward."""
    tiles = t.ordered()
    tile_of = {b: i for i, tile in enumerate(tiles) for b in tile}
    preds = _below(tile_of, tiles)
    out = []
    order: list[int] = []
    placed: set[int] = set()

    def extend():
        if len(order) == len(tiles):
            out.append(RibbonTableau(tuple(tiles[i] for i in order), Partition(base)))
            return
        for i in range(len(tiles)):
            if i not in placed and preds[i] <= placed:
                placed.add(i)
                order.append(i)
                extend()
                order.pop()
                placed.discard(i)

    extend()
    return out


def count_linear_extensions(t: RibbonTiling) -> int:
    tiles = t.ordered()
    tile_of = {b: i for i, tile in enumerate(tiles) for b in tile}
    preds = [sum(1 << p for p in ps) for ps in _below(tile_of, tiles)]
    full = (1 << len(tiles)) - 1
    memo = {full: 1}

    def go(mask: int) -> int:
        if mask in memo:
            return memo[mask]
        total = sum(go(mask | 1 << i) for i in range(len(tiles))
                    if not mask >> i & 1 and preds[i] & mask == preds[i])
        memo[mask] = total
        return total

    return go(0)


def tuple_tableaux(shapes: Sequence[Partition]) -> Iterator[TupleYoungTableau]:
    """All tuple Young tableaux of the given shapes (labels placed largest first)."""
    cells = [set(Partition(s).cells()) for s in shapes]
    total = sum(len(c) for c in cells)
    filled: list[dict[tuple[int, int], int]] = [{} for _ in shapes]

    def corners(j):
        free = cells[j] - set(filled[j])
        return sorted((r, c) for r, c in free if (r + 1, c) not in free and (r, c + 1) not in free)

    def go(m):
        if m == 0:
            yield TupleYoungTableau.from_cells([dict(d) for d in filled])
            return
        for j in range(len(shapes)):
            for rc in corners(j):
                filled[j][rc] = m
                yield from go(m - 1)
                del filled[j][rc]

    yield from go(total)


# --- Compress ---------------------------------------------------------------

def _column_shift(t: int, green: set[int], k: int) -> tuple[int, int]:
    """Translation applied to the non-green unit column ``[t, t+1]``."""
    if t >= 0:
        g = sum(1 for r in range(0, t) if r % k in green)
        return (-g, -g)
    g = sum(1 for r in range(t + 1, 0) if r % k in green)
    return (g, -g)


def compress_box_map(p: Partition, k: int, slots: Iterable[int]) -> dict[SquareBox, SquareBox]:
    """Where each box of ``p`` lands when the green columns for ``slots`` are cut out.

    A box lying wholly inside green columns (possible when two removed slots
    are adjacent) has no image and is left out of the map.
    """
    green = {j % k for j in slots}
    if len(green) >= k:
        raise RibbonError("cannot remove every slot")
    out = {}
    for b in young_region(p):
        halves = [t for t in (b.x - 1, b.x) if t % k not in green]
        if not halves:
            continue
        images = {(b.x + dx, b.y + dy) for dx, dy in (_column_shift(t, green, k) for t in halves)}
        if len(images) != 1:
            raise AssertionError("halves of a box moved apart")
        out[b] = SquareBox(*images.pop())
    return out


def _check_compressible(p: Partition, k: int, slots: Sequence[int]):
    data = k_quotient(p, k)
    if any(data.charges):
        raise RibbonError(f"{k}-charges of {p} are {data.charges}, need all zero")
    for j in slots:
        if not 0 <= j < k:
            raise RibbonError(f"slot {j} out of range for k={k}")
        if data.quotient[j]:
            raise RibbonError(f"slot {j} of the {k}-quotient is {data.quotient[j]}, need empty")
    return data


def compress_many(t: RibbonTiling, k: int, slots: Sequence[int]) -> RibbonTiling:
    """Cut out the green columns of all ``slots`` at once and close the gaps."""
    slots = sorted(set(slots))
    region = t.region
    p = region_partition(region)
    if p is None:
        raise RibbonError("tiling does not cover a Young diagram")
    data = _check_compressible(p, k, slots)
    phi = compress_box_map(p, k, slots)
    green = set(slots)
    owner: dict[SquareBox, int] = {}
    images = []
    for i, tile in enumerate(t.ordered()):
        if len(tile) != k or not tile.is_ribbon():
            raise RibbonError(f"tile {sorted(tile)} is not a {k}-ribbon")
        crossed = {r for b in tile for r in (b.x - 1, b.x) if r % k in green}
        if len(crossed) != len(green):
            raise RibbonError("a tile does not meet exactly one green column per removed slot")
        img = set()
        for b in tile:
            nb = phi.get(b)
            if nb is None:
                continue
            if owner.setdefault(nb, i) != i:
                raise RibbonError("two tiles merge under compression")
            img.add(nb)
        img = SquareRegion(img)
        if not is_ribbon(img, k - len(slots)):
            raise RibbonError("compressed tile is not a ribbon")
        images.append(img)
    kept = [q for j, q in enumerate(data.quotient) if j not in green]
    rho = from_quotient(kept, [0] * len(kept), len(kept)) if len(kept) >= 2 else _single(kept)
    out = RibbonTiling(images)
    if out.region != young_region(rho):
        raise AssertionError("compressed tiles do not cover rho")
    return out


def _single(kept):
    # with one slot left, a 1-ribbon tiling of the quotient's only partition
    return Partition(kept[0]) if kept else Partition()


def compress(t: RibbonTiling, k: int, j: int) -> RibbonTiling:
    """k-ribbon tiling of ``lam`` to (k-1)-ribbon tiling of ``rho``.

    ``lam`` must have zero k-charges and an empty slot ``j``; ``rho`` has the
    remaining quotient and zero (k-1)-charges.
    """
    return compress_many(t, k, [j])


def compress_tableau(t: RibbonTableau, k: int, j: int) -> RibbonTableau:
    """Compress that keeps the order of tiles."""
    if t.base:
        raise RibbonError("compress needs an empty core")
    p = t.shape
    _check_compressible(p, k, [j])
    phi = compress_box_map(p, k, [j])
    return RibbonTableau(tuple(SquareRegion(phi[b] for b in tile) for tile in t.tiles))


def compress_inverse(d: RibbonTiling, k: int, j: int) -> RibbonTiling:
    """Lift a (k-1)-ribbon tiling of ``rho`` back to the k-ribbon tiling of ``lam``."""
    if k < 3:
        raise RibbonError("k must be at least 3 (the compressed tiles are (k-1)-ribbons)")
    region = d.region
    rho = region_partition(region)
    if rho is None:
        raise RibbonError("tiling does not cover a Young diagram")
    data = k_quotient(rho, k - 1)
    if any(data.charges):
        raise RibbonError(f"{k - 1}-core of {rho} is not empty")
    quotient = list(data.quotient)
    quotient.insert(j, Partition())
    lam = from_quotient(quotient, [0] * k, k)
    phi = compress_box_map(lam, k, [j])
    pre: dict[SquareBox, list[SquareBox]] = {}
    for b, nb in phi.items():
        pre.setdefault(nb, []).append(b)
    tiles = []
    for tile in d.ordered():
        if not is_ribbon(tile, k - 1):
            raise RibbonError(f"tile {sorted(tile)} is not a {k - 1}-ribbon")
        lifted = SquareRegion(b for nb in tile for b in pre[nb])
        if not is_ribbon(lifted, k):
            raise RibbonError("lifted tile is not a ribbon")
        tiles.append(lifted)
    out = RibbonTiling(tiles)
    if out.region != young_region(lam):
        raise AssertionError("lifted tiles do not cover lam")
    return out
