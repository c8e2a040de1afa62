"""Compress: from 3-ribbon tilings of lambda_2 to domino tilings of a square.

Run with ``python3 demos/compress_demo.py``.
"""
from benzels.render import RenderSpec, render
from benzels.ribbons import compress, compress_inverse, region_partition, ribbon_tilings
from benzels.young import k_quotient, lambda_n, young_region

lam = lambda_n(2)
data = k_quotient(lam, 3)
print(f"lambda_2 = {lam}, 3-quotient {[str(q) for q in data.quotient]}")
print("slot 1 is empty, so its columns can be squeezed out")

tilings = list(ribbon_tilings(lam, 3))
t = tilings[0]
print(render(young_region(lam), t.ordered(), spec=RenderSpec("ascii", green=(3, 1))), end="")
d = compress(t, 3, 1)
rho = region_partition(d.region)
print(f"compressed to a domino tiling of {rho}:")
print(render(d.region, d.ordered()), end="")
print("lift recovers it:", compress_inverse(d, 3, 1) == t)

images = {compress(x, 3, 1) for x in tilings}
print(f"{len(tilings)} ribbon tilings map to {len(images)} distinct domino tilings;")
print(f"the 4 x 4 board has {len(list(ribbon_tilings(rho, 2)))} domino tilings")
