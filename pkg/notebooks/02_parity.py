# %% [markdown]
# # Parity from curves on the surface
#
# An admissible weighting is a mod 2 curve on the Carter surface, recorded by
# which edges it crosses.  Colouring the strands by walking along each
# component and toggling at weighted edges, a crossing is odd when its two
# strands have different colours.  Projection virtualizes the odd crossings.

# %%
import numpy as np

from vlink import admissible_weightings, enumerate_colourings, parse, project
from vlink.cover import verify_lift_oracle
from vlink.parity import parity_map

d = parse("O1+U2+U1+O2+")
space = admissible_weightings(d)
print("dimension", space.dim)
for w in space:
    for col in enumerate_colourings(d, w):
        print(sorted(w.ones), col.base, parity_map(col), "->", repr(str(project(d, col))))

# %% [markdown]
# The projection agrees with the preferred lift to the double cover of the
# surface determined by the same curve.  Here is a batch check over random
# diagrams.

# %%
import random

from vlink.generate import random_colouring, random_diagram

rng = random.Random(0)
agree = [bool(verify_lift_oracle(d, random_colouring(d, rng))) for d in (random_diagram(s, 7, 2) for s in range(300))]
print(f"{sum(agree)}/{len(agree)} lifts match projections")

# %% [markdown]
# Counting: every weighting with even total on each component has exactly
# 2^components colourings.

# %%
hopf = parse("O1+U2+;U1+O2+")
counts = {len(enumerate_colourings(hopf, w)) for w in admissible_weightings(hopf)}
print(counts, np.log2(max(counts)))
