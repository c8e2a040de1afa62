"""Exact geometry of the hexagonal grid.

Points of the plane are Eisenstein integers ``p + q*w`` with ``w = exp(2*pi*i/3)``,
stored as integer pairs ``(p, q)``.  Cells are flat-topped hexagons of side 1;
the cell centered at ``1`` has vertices ``1 +- 1, 1 +- w, 1 +- w**2``.  Cell
centers are exactly the Eisenstein integers with ``p + q == 1 (mod 3)``.

Nothing in this module touches floating point.  For half-plane tests a point
``p + q*w`` is mapped to the integer pair ``(2p - q, q)``, which is the
Cartesian point scaled by 2 horizontally and by ``2/sqrt(3)`` vertically; the
scaling is a positive linear map, so signs of cross products are unchanged.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator

__all__ = [
    "EisensteinPoint", "HexCell", "HexRegion", "HexKind", "HexPrototile",
    "HEX_PROTOTILES", "NEIGHBOR_STEPS", "BenzelDomainError",
    "check_benzel_params", "benzel", "benzel_size", "cl_invariant",
    "three_coloring", "rotate120", "reflect", "hex_placements", "classify_hex",
    "benzel_hexagon",
]


@dataclass(frozen=True, order=True)
class EisensteinPoint:
    """The Eisenstein integer ``a + b*w``."""

    a: int
    b: int

    def __add__(self, other: EisensteinPoint) -> EisensteinPoint:
        return EisensteinPoint(self.a + other.a, self.b + other.b)

    def __sub__(self, other: EisensteinPoint) -> EisensteinPoint:
        return EisensteinPoint(self.a - other.a, self.b - other.b)

    def __neg__(self) -> EisensteinPoint:
        return EisensteinPoint(-self.a, -self.b)

    def __mul__(self, other: EisensteinPoint | int) -> EisensteinPoint:
        if isinstance(other, int):
            return EisensteinPoint(self.a * other, self.b * other)
        # w**2 = -1 - w
        a, b, c, d = self.a, self.b, other.a, other.b
        return EisensteinPoint(a * c - b * d, a * d + b * c - b * d)

    __rmul__ = __mul__

    def times_omega(self) -> EisensteinPoint:
        return EisensteinPoint(-self.b, self.a - self.b)

    def conjugate(self) -> EisensteinPoint:
        # conj(w) = w**2 = -1 - w
        return EisensteinPoint(self.a - self.b, -self.b)

    def scaled(self) -> tuple[int, int]:
        """Integer Cartesian proxy ``(2a - b, b)``."""
        return (2 * self.a - self.b, self.b)


ONE = EisensteinPoint(1, 0)
OMEGA = EisensteinPoint(0, 1)
OMEGA2 = EisensteinPoint(-1, -1)

# 1 - w**2, w - w**2, w - 1 and their negatives: the six steps between
# centers of edge-adjacent cells.
NEIGHBOR_STEPS = (
    EisensteinPoint(2, 1), EisensteinPoint(1, 2), EisensteinPoint(-1, 1),
    EisensteinPoint(-2, -1), EisensteinPoint(-1, -2), EisensteinPoint(1, -1),
)

_VERTEX_OFFSETS = (ONE, -OMEGA2, OMEGA, -ONE, OMEGA2, -OMEGA)


@dataclass(frozen=True)
class HexCell:
    center: EisensteinPoint

    def __post_init__(self):
        if (self.center.a + self.center.b) % 3 != 1:
            raise ValueError(f"{self.center} is not a cell center (need a + b = 1 mod 3)")

    @classmethod
    def at(cls, a: int, b: int) -> HexCell:
        return cls(EisensteinPoint(a, b))

    @property
    def key(self) -> tuple[int, int]:
        """Sort key: left to right, then bottom to top."""
        return self.center.scaled()

    def __lt__(self, other: HexCell) -> bool:
        return self.key < other.key

    def vertices(self) -> tuple[EisensteinPoint, ...]:
        return tuple(self.center + v for v in _VERTEX_OFFSETS)

    def neighbors(self) -> tuple[HexCell, ...]:
        return tuple(HexCell(self.center + s) for s in NEIGHBOR_STEPS)

    def is_adjacent(self, other: HexCell) -> bool:
        return (other.center - self.center) in NEIGHBOR_STEPS

    def translate(self, v: EisensteinPoint) -> HexCell:
        return HexCell(self.center + v)

    def as_pair(self) -> tuple[int, int]:
        return (self.center.a, self.center.b)


class HexRegion(frozenset):
    """A finite set of :class:`HexCell`."""

    def __new__(cls, cells: Iterable[HexCell] = ()):
        return super().__new__(cls, cells)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> HexRegion:
        return cls(HexCell.at(a, b) for a, b in pairs)

    def sorted(self) -> list[HexCell]:
        return sorted(self, key=lambda c: c.key)

    def pairs(self) -> list[tuple[int, int]]:
        return sorted(c.as_pair() for c in self)

    def translate(self, v: EisensteinPoint) -> HexRegion:
        return HexRegion(c.translate(v) for c in self)

    def canonical(self) -> HexRegion:
        """Translate so that the least cell sits at the center ``1``."""
        if not self:
            return self
        first = min(self, key=lambda c: c.key)
        return self.translate(ONE - first.center)

    def same_shape(self, other: HexRegion) -> bool:
        return self.canonical() == other.canonical()

    def to_json(self) -> dict:
        return {"cells": [list(p) for p in self.pairs()]}

    @classmethod
    def from_json(cls, data: dict) -> HexRegion:
        return cls.from_pairs(tuple(p) for p in data["cells"])

    def __repr__(self):
        return f"HexRegion({self.pairs()})"


class HexKind(enum.Enum):
    RIGHT_STONE = "RS"
    LEFT_STONE = "LS"
    VERTICAL_BONE = "VB"
    RISING_BONE = "RB"
    FALLING_BONE = "FB"

    @property
    def is_stone(self) -> bool:
        return self in (HexKind.RIGHT_STONE, HexKind.LEFT_STONE)


@dataclass(frozen=True)
class HexPrototile:
    """A trihex, as three center offsets from its anchor (least cell)."""

    kind: HexKind
    offsets: tuple[EisensteinPoint, EisensteinPoint, EisensteinPoint]

    def place(self, anchor: HexCell) -> HexRegion:
        return HexRegion(anchor.translate(o) for o in self.offsets)


def _prototile(kind: HexKind, steps: Iterable[tuple[int, int]]) -> HexPrototile:
    cells = [HexCell(ONE + EisensteinPoint(*s)) for s in steps]
    anchor = min(cells, key=lambda c: c.key)
    offsets = tuple(sorted((c.center - anchor.center for c in cells), key=lambda p: p.scaled()))
    return HexPrototile(kind, offsets)


# Right stone: a vertical pair with a third cell to its right; left stone is
# its mirror image.  Bones run up (vertical), up-right (rising) and
# down-right (falling).
HEX_PROTOTILES = {
    HexKind.RIGHT_STONE: _prototile(HexKind.RIGHT_STONE, [(0, 0), (1, 2), (2, 1)]),
    HexKind.LEFT_STONE: _prototile(HexKind.LEFT_STONE, [(0, 0), (1, 2), (-1, 1)]),
    HexKind.VERTICAL_BONE: _prototile(HexKind.VERTICAL_BONE, [(0, 0), (1, 2), (2, 4)]),
    HexKind.RISING_BONE: _prototile(HexKind.RISING_BONE, [(0, 0), (2, 1), (4, 2)]),
    HexKind.FALLING_BONE: _prototile(HexKind.FALLING_BONE, [(0, 0), (1, -1), (2, -2)]),
}


def classify_hex(cells: Iterable[HexCell]) -> HexKind | None:
    """Return the prototile kind of a 3-cell set, or None."""
    region = HexRegion(cells)
    if len(region) != 3:
        return None
    shape = region.canonical()
    for kind, tile in HEX_PROTOTILES.items():
        if tile.place(HexCell(ONE)) == shape:
            return kind
    return None


class BenzelDomainError(ValueError):
    pass


def check_benzel_params(a: int, b: int) -> None:
    for ok, text in ((2 <= a, "2 <= a"), (a <= 2 * b, "a <= 2b"),
                     (2 <= b, "2 <= b"), (b <= 2 * a, "b <= 2a")):
        if not ok:
            raise BenzelDomainError(f"benzel parameters (a, b) = ({a}, {b}) violate {text}")


def benzel_hexagon(a: int, b: int) -> tuple[EisensteinPoint, ...]:
    """Vertices of the bounding hexagon, counterclockwise."""
    return (
        EisensteinPoint(b, a),          # a*w + b
        EisensteinPoint(a - b, a),      # -a*w**2 - b
        EisensteinPoint(-a, b - a),     # a*w**2 + b*w
        EisensteinPoint(-a, -b),        # -a - b*w
        EisensteinPoint(a - b, -b),     # a + b*w**2
        EisensteinPoint(b, b - a),      # -a*w - b*w**2
    )


def _inside(point: tuple[int, int], polygon: list[tuple[int, int]]) -> bool:
    # closed convex polygon, counterclockwise
    x, y = point
    n = len(polygon)
    for i in range(n):
        x0, y0 = polygon[i]
        x1, y1 = polygon[(i + 1) % n]
        if (x1 - x0) * (y - y0) - (y1 - y0) * (x - x0) < 0:
            return False
    return True


def benzel(a: int, b: int) -> HexRegion:
    """All cells lying entirely within the (a, b) bounding hexagon."""
    check_benzel_params(a, b)
    hexagon = [v.scaled() for v in benzel_hexagon(a, b)]
    bound = a + b
    cells = []
    for p in range(-bound, bound + 1):
        for q in range(-bound, bound + 1):
            if (p + q) % 3 != 1:
                continue
            cell = HexCell.at(p, q)
            if all(_inside(v.scaled(), hexagon) for v in cell.vertices()):
                cells.append(cell)
    return HexRegion(cells)


def benzel_size(a: int, b: int) -> int:
    check_benzel_params(a, b)
    twice = -a * a + 4 * a * b - b * b - a - b
    if (a + b) % 3 == 1:
        twice += 2
    return twice // 2


def cl_invariant(a: int, b: int) -> int:
    """Right stones minus left stones in any stones-and-bones tiling."""
    check_benzel_params(a, b)
    r = (a + b) % 3
    if r == 0:
        num = 3 * a * a - 6 * a * b + 3 * b * b - a - b
    elif r == 1:
        num = -a * a + 4 * a * b - b * b - a - b + 2
    else:
        num = 3 * a * a - 6 * a * b + 3 * b * b + a + b - 2
    assert num % 6 == 0
    return num // 6


def three_coloring(cell: HexCell) -> int:
    return cell.center.a % 3


def rotate120(region: HexRegion) -> HexRegion:
    return HexRegion(HexCell(c.center.times_omega()) for c in region)


def reflect(region: HexRegion) -> HexRegion:
    """Reflection across the real axis."""
    return HexRegion(HexCell(c.center.conjugate()) for c in region)


def hex_placements(region: HexRegion, kinds: Iterable[HexKind]) -> Iterator[tuple[HexKind, HexRegion]]:
    """Every placement of the given kinds lying inside ``region``."""
    kinds = list(kinds)
    for anchor in region.sorted():
        for kind in kinds:
            cells = HEX_PROTOTILES[kind].place(anchor)
            if cells <= region:
                yield kind, cells
