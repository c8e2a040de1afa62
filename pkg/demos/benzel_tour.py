"""A walk through benzels and their stones-and-bones tilings.

Run with ``python3 demos/benzel_tour.py``.
"""
from benzels import benzel, benzel_size, count_tilings
from benzels.tiler import first_tiling
from benzels.hexgrid import cl_invariant
from benzels.render import render
from benzels.tiler import MOUNTAINLESS, VALLEYLESS, tiling_stats
from benzels.transfer import transfer_region


def show(title, region, tiling=None):
    print(f"--- {title}")
    tiles = [p.cells for p in tiling] if tiling else []
    print(render(region, tiles), end="")


print("The (7,8)-benzel has", benzel_size(7, 8), "cells and", count_tilings(benzel(7, 8)), "tilings.")
region = benzel(6, 7)

# a+b = 1 mod 3: a single tiling, and it uses only right stones
tiling = first_tiling(region)
print("tilings with every prototile:", count_tilings(region))
print("stone counts:", tiling_stats(tiling))
show("the only tiling of (6,7)", region, tiling)

# the invariant #right - #left holds across all tilings of any benzel
for a, b in [(3, 3), (4, 4), (6, 6), (7, 8)]:
    print(f"({a},{b}): {count_tilings(benzel(a, b))} tilings, right minus left = {cl_invariant(a, b)}")

# in the square grid the four ribbon-like tiles are 3-ribbons
square = transfer_region(benzel(6, 6))
print("mountainless tilings of (6,6):", count_tilings(square, MOUNTAINLESS))
print("valleyless tilings of (6,6):", count_tilings(square, VALLEYLESS))
show("a mountainless tiling of (6,6), square grid", square, first_tiling(square, MOUNTAINLESS))
