# %% [markdown]
# # Moves and transported colourings
#
# Reidemeister moves act on the code; colourings are carried along so that
# parities of surviving crossings are kept and the new crossings obey the
# parity axioms.

# %%
from vlink import Colouring, MoveEvent, MoveKind, Weighting, apply_move, available_moves, genus, parse, project
from vlink.parity import InadmissibleError, parity_map

d = parse("O1+O2+O3-U1+;U2+U3-")
for m in available_moves(d, additions=False):
    print(m)

# %%
col = Colouring(d, Weighting.zero(), (0, 1))
r3 = next(m for m in available_moves(d) if m.kind is MoveKind.R3)
d1, c1 = apply_move(d, col, r3)
print(d1, parity_map(col), parity_map(c1))

# %% [markdown]
# Some R2 removals cannot carry the colouring: the curve passes through the
# handle the move destroys, and merging the weights leaves a non-admissible
# weighting.  These are refused.

# %%
d = parse("O1+O2+O3-U1+U2+U3-")
col = Colouring.from_entry_colours(d, [[0, 1, 1, 1, 1, 1]])
try:
    apply_move(d, col, MoveEvent(MoveKind.R2_REMOVE, (2, 3)))
except InadmissibleError as exc:
    print("refused:", exc)

# %% [markdown]
# An even R2 pair need not keep the genus of the projection: adding one to
# the unknot with the zero curve leaves a genus-one projection.

# %%
empty = parse("")
m = MoveEvent(MoveKind.R2_ADD, (), (empty.edges[0], empty.edges[0]), over_first=True, parallel=True, sign=1)
big, bc = apply_move(empty, Colouring(empty, Weighting.zero(), (0,)), m)
print(big, genus(project(big, bc)).total)

# %% [markdown]
# A seeded fuzz run summarises all checks at once.

# %%
from vlink.fuzz import fuzz

rep = fuzz(seed=1, steps=2000, max_crossings=7)
for name, chk in rep.checks.items():
    print(f"{name:38s} {chk.failures:5d} / {chk.checked}")
