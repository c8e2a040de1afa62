"""Partitions in Russian notation, abacus words, cores and quotients.

A partition is drawn in the square grid of :mod:`benzels.transfer` with its
bottom vertex at the origin and its first row running up and to the left:
the box in row ``r``, column ``c`` (1-indexed) is centered at
``(r - c, r + c - 1)``.

An abacus word records the northern border of a diagram read left to right,
``o`` for an up step and ``x`` for a down step.  Position ``p`` (an integer)
stands for the step whose midpoint has real part ``p + 1/2``.  Row ``i`` of
``lam`` contributes the up step at position ``i - lam_i - 1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .transfer import SquareBox, SquareRegion

__all__ = [
    "Partition", "AbacusWord", "QuotientData", "abacus_word", "partition_of",
    "charge", "k_quotient", "k_charges", "k_core", "from_quotient", "durfee",
    "lambda_n", "theta", "theta_lr", "young_region", "box_label",
    "label_letter", "green_columns", "top_boxes", "align_tops", "v_bands",
    "band_index", "f_region", "embed_benzel", "complement_pieces",
]


class Partition(tuple):
    """Weakly decreasing tuple of positive parts."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(x) for x in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(x <= 0 for x in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> Partition:
        text = text.strip().strip("()")
        if not text or text in ("0", "-", "∅"):
            return cls()
        return cls(int(x) for x in text.split(",") if x.strip())

    @property
    def size(self) -> int:
        return sum(self)

    def conjugate(self) -> Partition:
        if not self:
            return Partition()
        return Partition(sum(1 for x in self if x > c) for c in range(self[0]))

    def cells(self) -> list[tuple[int, int]]:
        """(row, column) pairs, 1-indexed."""
        return [(r, c) for r, n in enumerate(self, 1) for c in range(1, n + 1)]

    def __str__(self):
        return ",".join(map(str, self)) if self else "∅"

    def __repr__(self):
        return f"Partition({tuple(self)})"


BEAD, GAP = "x", "o"
_GLYPHS = {"●": BEAD, "○": GAP, "x": BEAD, "o": GAP, "X": BEAD, "O": GAP}


@dataclass(frozen=True)
class AbacusWord:
    """A coordinatized abacus word.

    Every position below ``offset`` holds a bead (down step) and every
    position at or past ``offset + len(window)`` a gap (up step).
    """

    window: str
    offset: int = 0

    def __post_init__(self):
        if set(self.window) - {BEAD, GAP}:
            raise ValueError(f"abacus window must use {BEAD!r}/{GAP!r}: {self.window!r}")

    def __getitem__(self, pos: int) -> str:
        i = pos - self.offset
        if i < 0:
            return BEAD
        if i >= len(self.window):
            return GAP
        return self.window[i]

    @property
    def end(self) -> int:
        return self.offset + len(self.window)

    def gaps(self, lo: int, hi: int) -> list[int]:
        return [p for p in range(lo, hi) if self[p] == GAP]

    def shifted(self, c: int) -> AbacusWord:
        """The word ``p -> self[p + c]``."""
        return AbacusWord(self.window, self.offset - c)

    def trimmed(self) -> AbacusWord:
        w, off = self.window, self.offset
        i = 0
        while i < len(w) and w[i] == BEAD:
            i += 1
        w, off = w[i:], off + i
        return AbacusWord(w.rstrip(GAP), off)

    def canonical(self) -> AbacusWord:
        return self.shifted(charge(self))

    @classmethod
    def parse(cls, text: str) -> AbacusWord:
        """Read ``"xxo.oxo"`` (dot before position 0) or an undotted orbit."""
        text = "".join(ch for ch in text.strip() if ch not in " ⋯…")
        text = text.strip(".")
        if "." in text:
            left, right = text.split(".")
        else:
            left, right = "", text
        symbols = [_GLYPHS[ch] for ch in left + right]
        return cls("".join(symbols), -len(left))

    def format(self, pad: int = 3) -> str:
        lo = min(self.offset, 0) - pad
        hi = max(self.end, 0) + pad
        left = "".join(self[p] for p in range(lo, 0))
        right = "".join(self[p] for p in range(0, hi))
        return f"{left}.{right}"

    def __str__(self):
        return self.format()


def charge(w: AbacusWord) -> int:
    """Beads at ``p >= 0`` minus gaps at ``p < 0``; zero iff canonical."""
    lo, hi = min(w.offset, 0), max(w.end, 0)
    beads_right = sum(1 for p in range(0, hi) if w[p] == BEAD)
    gaps_left = sum(1 for p in range(lo, 0) if w[p] == GAP)
    return beads_right - gaps_left


def abacus_word(p: Partition) -> AbacusWord:
    p = Partition(p)
    if not p:
        return AbacusWord("", 0)
    lo, hi = -p[0], len(p)
    ups = {i - part - 1 for i, part in enumerate(p, 1)}
    return AbacusWord("".join(GAP if q in ups else BEAD for q in range(lo, hi)), lo)


def partition_of(w: AbacusWord) -> Partition:
    w = w.canonical()
    lo = min(w.offset, 0)
    parts = []
    for i, pos in enumerate(w.gaps(lo, max(w.end, 0) + 1), 1):
        parts.append(i - 1 - pos)
    return Partition(x for x in parts if x > 0)


@dataclass(frozen=True)
class QuotientData:
    quotient: tuple[Partition, ...]
    charges: tuple[int, ...]
    core: Partition


def _subword(w: AbacusWord, k: int, j: int) -> AbacusWord:
    """The word ``l -> w[k*l + j]``."""
    lo = (w.offset - j) // k - 1
    hi = -((j - w.end) // k) + 1
    return AbacusWord("".join(w[k * l + j] for l in range(lo, hi)), lo).trimmed()


def _check_k(k: int) -> None:
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")


def k_charges(p: Partition, k: int) -> tuple[int, ...]:
    _check_k(k)
    w = abacus_word(p)
    return tuple(charge(_subword(w, k, j)) for j in range(k))


def k_quotient(p: Partition, k: int) -> QuotientData:
    _check_k(k)
    w = abacus_word(p)
    subs = [_subword(w, k, j) for j in range(k)]
    charges = tuple(charge(s) for s in subs)
    quotient = tuple(partition_of(s) for s in subs)
    core = from_quotient((Partition(),) * k, charges, k)
    return QuotientData(quotient, charges, core)


def k_core(p: Partition, k: int) -> Partition:
    return from_quotient((Partition(),) * k, k_charges(p, k), k)


def from_quotient(quotient: Sequence[Iterable[int]], charges: Sequence[int], k: int) -> Partition:
    _check_k(k)
    if len(quotient) != k or len(charges) != k:
        raise ValueError(f"need exactly {k} quotient parts and {k} charges")
    if sum(charges) != 0:
        raise ValueError(f"charges must sum to 0, got {tuple(charges)}")
    subs = []
    for q, c in zip(quotient, charges):
        # s(l) = canonical_q(l - c)
        subs.append(abacus_word(Partition(q)).shifted(-c))
    lo = min(k * s.offset + j for j, s in enumerate(subs)) - k
    hi = max(k * s.end + j for j, s in enumerate(subs)) + k
    window = "".join(subs[pos % k][pos // k] for pos in range(lo, hi))
    return partition_of(AbacusWord(window, lo))


def durfee(p: Partition) -> int:
    return sum(1 for i, part in enumerate(p, 1) if part >= i)


def lambda_n(n: int) -> Partition:
    """Vanishing 3-charges and 3-quotient (n x n square, empty, n x n square)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    square = Partition((n,) * n)
    return from_quotient((square, Partition(), square), (0, 0, 0), 3)


def theta_lr(a: int, b: int) -> tuple[int, int, int]:
    """``(L, R, N)`` for the complement partition of the (a, b) embedding."""
    if not (2 <= a <= b <= 2 * a) or (a + b) % 3:
        raise ValueError(f"need 2 <= a <= b <= 2a and a + b = 0 mod 3, got ({a}, {b})")
    return (2 * b - a) // 3 - 1, (2 * a - b) // 3 - 1, (a + b) // 3 - 1


def theta(a: int, b: int) -> Partition:
    L, R, _ = theta_lr(a, b)
    word = BEAD * 3 + "oxx" * L + BEAD + "oxx" * R + "oox" * L + GAP + "oox" * R + GAP * 3
    return partition_of(AbacusWord(word, 0))


def young_region(p: Partition, anchor: tuple[int, int] = (0, 0)) -> SquareRegion:
    """Boxes of the Russian diagram with its bottom vertex at ``anchor``."""
    dx, dy = anchor
    if (dx + dy) % 2:
        raise ValueError("anchor must be a lattice vertex (dx + dy even)")
    return SquareRegion(SquareBox(r - c + dx, r + c - 1 + dy) for r, c in Partition(p).cells())


def box_label(box: SquareBox) -> int:
    """Real part of the box's leftmost point, mod 3 (0, 1, 2 = A, B, C)."""
    return (box.x - 1) % 3


def label_letter(box: SquareBox) -> str:
    return "ABC"[box_label(box)]


def green_columns(p: Partition, k: int, j: int) -> dict[int, SquareRegion]:
    """Boxes meeting each strip ``r <= Re z < r + 1`` with ``r = j mod k``.

    Each strip cuts the right half of boxes centered at ``x = r`` and the left
    half of boxes centered at ``x = r + 1``.
    """
    region = young_region(p)
    out: dict[int, list[SquareBox]] = {}
    for box in region:
        for r in (box.x, box.x - 1):
            if r % k == j % k:
                out.setdefault(r, []).append(box)
    return {r: SquareRegion(bs) for r, bs in sorted(out.items())}


def top_boxes(region: SquareRegion) -> list[SquareBox]:
    """Boxes of maximal height, left to right."""
    if not region:
        return []
    top = max(b.y for b in region)
    return sorted(b for b in region if b.y == top)


def align_tops(region: SquareRegion, host: SquareRegion) -> SquareRegion:
    """Translate ``region`` so its highest boxes coincide with those of ``host``."""
    mine, theirs = top_boxes(region), top_boxes(host)
    if len(mine) != len(theirs):
        raise ValueError(f"top rows differ in size: {len(mine)} vs {len(theirs)}")
    dx, dy = theirs[0].x - mine[0].x, theirs[0].y - mine[0].y
    moved = region.translate(dx, dy)
    if top_boxes(moved) != theirs:
        raise ValueError("top rows have different shapes")
    return moved


def v_bands(n: int) -> list[SquareRegion]:
    """The nested V-shapes ``V_1, ..., V_n`` of ``lambda_n``, top to bottom.

    ``V_1 + ... + V_m`` is a copy of ``lambda_m`` sharing the top row of
    ``lambda_n``; the boundary between consecutive bands is a red border.
    """
    host = young_region(lambda_n(n))
    bands, inner = [], SquareRegion()
    for m in range(1, n + 1):
        outer = host if m == n else align_tops(young_region(lambda_n(m)), host)
        if not inner <= outer:
            raise AssertionError(f"lambda_{m - 1} does not nest in lambda_{m}")
        bands.append(SquareRegion(outer - inner))
        inner = outer
    return bands


def band_index(n: int) -> dict[SquareBox, int]:
    """Box of ``lambda_n`` to the index ``m`` of its band ``V_m``."""
    return {box: m for m, band in enumerate(v_bands(n), 1) for box in band}


def f_region(n: int) -> SquareRegion:
    """Staircase of negative bones: column ``m`` (from the left) holds ``n - m`` bones.

    Bones in one column share the real part of their leftmost points; the
    bottom bone of column ``m`` starts at box ``(3(m-1), 2-m)``.
    """
    boxes = []
    for m in range(1, n):
        for i in range(n - m):
            x0, y0 = 3 * (m - 1), 2 - m + 2 * i
            boxes += [SquareBox(x0, y0), SquareBox(x0 + 1, y0 - 1), SquareBox(x0 + 2, y0 - 2)]
    return SquareRegion(boxes)


def embed_benzel(a: int, b: int) -> tuple[SquareRegion, SquareRegion]:
    """``(B_ab, lambda_N)``: the transferred benzel placed inside ``lambda_N``.

    ``N = (a + b)/3 - 1``; the three highest boxes of both regions coincide.
    """
    from .hexgrid import benzel
    from .transfer import transfer_region

    _, _, N = theta_lr(a, b)
    host = young_region(lambda_n(N))
    placed = align_tops(transfer_region(benzel(a, b)), host)
    if not placed <= host:
        raise AssertionError(f"B_{a},{b} does not fit inside lambda_{N}")
    return placed, host


def complement_pieces(a: int, b: int) -> tuple[SquareRegion, SquareRegion, SquareRegion]:
    """Split ``lambda_N - B_ab`` into (left valley columns, right valley columns, theta)."""
    placed, host = embed_benzel(a, b)
    rest = host - placed
    gray = young_region(theta(a, b))
    if not gray <= rest:
        raise AssertionError(f"theta_{a},{b} is not inside the complement")
    side = rest - gray
    left = SquareRegion(x for x in side if x.x < 0)
    right = SquareRegion(x for x in side if x.x > 0)
    if len(left) + len(right) != len(side):
        raise AssertionError("valley-stone columns meet the central axis")
    return left, right, gray
