"""Square grid and the map carrying hexagonal cells to square boxes.

Boxes are diamonds: the box centered at ``(x, y)`` has vertices
``(x +- 1, y)`` and ``(x, y +- 1)`` and ``x + y`` is odd.  Two boxes share an
edge iff their centers differ by ``(+-1, +-1)``.

The hex-to-square map deletes the vertical strips crossed only by horizontal
hex edges, squashes each hexagon to a diamond and turns the picture a quarter
turn counterclockwise.  In coordinates, the cell ``p + q*w`` lies in hex
column ``k = (2p - q - 2) / 3`` and goes to the box ``(-q, k + 1)``; the cell
centered at 1 lands on the box ``(0, 1)``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator

from .hexgrid import EisensteinPoint, HexCell, HexKind, HexRegion

__all__ = [
    "SquareBox", "SquareRegion", "SquareKind", "SquarePrototile",
    "SQUARE_PROTOTILES", "RIBBON_KINDS", "HEX_TO_SQUARE_KIND",
    "SQUARE_TO_HEX_KIND", "hex_to_square", "square_to_hex",
    "transfer_region", "untransfer_region", "classify_square",
    "square_placements",
]


@dataclass(frozen=True, order=True)
class SquareBox:
    x: int
    y: int

    def __post_init__(self):
        if (self.x + self.y) % 2 != 1:
            raise ValueError(f"box center ({self.x}, {self.y}) needs x + y odd")

    def translate(self, dx: int, dy: int) -> SquareBox:
        return SquareBox(self.x + dx, self.y + dy)

    def neighbors(self) -> tuple[SquareBox, ...]:
        x, y = self.x, self.y
        return (SquareBox(x - 1, y - 1), SquareBox(x - 1, y + 1),
                SquareBox(x + 1, y - 1), SquareBox(x + 1, y + 1))

    def is_adjacent(self, other: SquareBox) -> bool:
        return abs(self.x - other.x) == 1 and abs(self.y - other.y) == 1

    def as_pair(self) -> tuple[int, int]:
        return (self.x, self.y)


class SquareRegion(frozenset):
    """A finite set of :class:`SquareBox`."""

    def __new__(cls, boxes: Iterable[SquareBox] = ()):
        return super().__new__(cls, boxes)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> SquareRegion:
        return cls(SquareBox(x, y) for x, y in pairs)

    def sorted(self) -> list[SquareBox]:
        return sorted(self)

    def pairs(self) -> list[tuple[int, int]]:
        return sorted(b.as_pair() for b in self)

    def translate(self, dx: int, dy: int) -> SquareRegion:
        return SquareRegion(b.translate(dx, dy) for b in self)

    def canonical(self) -> SquareRegion:
        """Translate so the least box sits at ``(0, 1)``."""
        if not self:
            return self
        first = min(self)
        return self.translate(-first.x, 1 - first.y)

    def same_shape(self, other: SquareRegion) -> bool:
        return self.canonical() == other.canonical()

    def to_json(self) -> dict:
        return {"boxes": [list(p) for p in self.pairs()]}

    @classmethod
    def from_json(cls, data: dict) -> SquareRegion:
        return cls.from_pairs(tuple(p) for p in data["boxes"])

    def is_connected(self) -> bool:
        if not self:
            return True
        start = next(iter(self))
        seen = {start}
        stack = [start]
        while stack:
            box = stack.pop()
            for nb in box.neighbors():
                if nb in self and nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        return len(seen) == len(self)

    def is_ribbon(self) -> bool:
        xs = [b.x for b in self]
        return len(set(xs)) == len(xs) and self.is_connected()

    def __repr__(self):
        return f"SquareRegion({self.pairs()})"


class SquareKind(enum.Enum):
    MOUNTAIN_STONE = "mountain"
    VALLEY_STONE = "valley"
    VERTICAL_BONE_IMAGE = "split"
    NEGATIVE_BONE = "negative"
    POSITIVE_BONE = "positive"


@dataclass(frozen=True)
class SquarePrototile:
    kind: SquareKind
    offsets: tuple[tuple[int, int], ...]

    def place(self, anchor: SquareBox) -> SquareRegion:
        return SquareRegion(anchor.translate(dx, dy) for dx, dy in self.offsets)


SQUARE_PROTOTILES = {
    SquareKind.MOUNTAIN_STONE: SquarePrototile(SquareKind.MOUNTAIN_STONE, ((0, 0), (1, 1), (2, 0))),
    SquareKind.VALLEY_STONE: SquarePrototile(SquareKind.VALLEY_STONE, ((0, 0), (1, -1), (2, 0))),
    SquareKind.VERTICAL_BONE_IMAGE: SquarePrototile(SquareKind.VERTICAL_BONE_IMAGE, ((0, 0), (2, 0), (4, 0))),
    SquareKind.NEGATIVE_BONE: SquarePrototile(SquareKind.NEGATIVE_BONE, ((0, 0), (1, -1), (2, -2))),
    SquareKind.POSITIVE_BONE: SquarePrototile(SquareKind.POSITIVE_BONE, ((0, 0), (1, 1), (2, 2))),
}

RIBBON_KINDS = (SquareKind.MOUNTAIN_STONE, SquareKind.VALLEY_STONE,
                SquareKind.NEGATIVE_BONE, SquareKind.POSITIVE_BONE)

HEX_TO_SQUARE_KIND = {
    HexKind.RIGHT_STONE: SquareKind.MOUNTAIN_STONE,
    HexKind.LEFT_STONE: SquareKind.VALLEY_STONE,
    HexKind.VERTICAL_BONE: SquareKind.VERTICAL_BONE_IMAGE,
    HexKind.RISING_BONE: SquareKind.NEGATIVE_BONE,
    HexKind.FALLING_BONE: SquareKind.POSITIVE_BONE,
}
SQUARE_TO_HEX_KIND = {v: k for k, v in HEX_TO_SQUARE_KIND.items()}


def classify_square(boxes: Iterable[SquareBox]) -> SquareKind | None:
    region = SquareRegion(boxes)
    if len(region) != 3:
        return None
    first = min(region)
    shape = tuple(sorted((b.x - first.x, b.y - first.y) for b in region))
    for kind, tile in SQUARE_PROTOTILES.items():
        if tile.offsets == shape:
            return kind
    return None


def hex_to_square(cell: HexCell) -> SquareBox:
    p, q = cell.center.a, cell.center.b
    column, rem = divmod(2 * p - q - 2, 3)
    assert rem == 0
    return SquareBox(-q, column + 1)


def square_to_hex(box: SquareBox) -> HexCell:
    if (box.x + box.y) % 2 != 1:
        raise ValueError(f"({box.x}, {box.y}) is not a box center")
    q = -box.x
    twice_p = 3 * (box.y - 1) + 2 + q
    return HexCell(EisensteinPoint(twice_p // 2, q))


def transfer_region(region: HexRegion) -> SquareRegion:
    return SquareRegion(hex_to_square(c) for c in region)


def untransfer_region(region: SquareRegion) -> HexRegion:
    return HexRegion(square_to_hex(b) for b in region)


def square_placements(region: SquareRegion, kinds: Iterable[SquareKind]) -> Iterator[tuple[SquareKind, SquareRegion]]:
    kinds = list(kinds)
    for anchor in region.sorted():
        for kind in kinds:
            boxes = SQUARE_PROTOTILES[kind].place(anchor)
            if boxes <= region:
                yield kind, boxes
