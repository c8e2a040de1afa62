"""Abacus words, k-quotients and the SW bijection on a small example.

Run with ``python3 demos/abacus_and_sw.py``.
"""
from benzels import Partition
from benzels.render import render
from benzels.ribbons import ribbon_tableaux, sw, sw_inverse, tuple_tableaux
from benzels.young import abacus_word, k_quotient, young_region

lam = Partition((5, 5, 3, 3, 2))
word = abacus_word(lam)
print(f"partition {lam}")
print(f"abacus word {word.format()}  (x = bead, o = gap, . = origin)")

data = k_quotient(lam, 3)
print("3-quotient:", [str(q) for q in data.quotient])
print("3-charges:", data.charges, " 3-core:", data.core)

tableaux = list(ribbon_tableaux(lam, 3))
targets = list(tuple_tableaux(data.quotient))
print(f"{len(tableaux)} ribbon tableaux, {len(targets)} tuple tableaux")

t = tableaux[0]
print("first ribbon tableau (tiles numbered in the order added):")
print(render(young_region(lam), t.tiles), end="")
T = sw(t, 3)
for j, rows in enumerate(T.fillings):
    print(f"  slot {j}:", " / ".join(" ".join(map(str, r)) for r in rows) or "empty")
print("inverse gives the tableau back:", sw_inverse(T, data.charges, 3) == t)

# the map is a bijection: every tuple tableau is hit exactly once
print("bijective:", {sw(x, 3) for x in tableaux} == set(targets))
