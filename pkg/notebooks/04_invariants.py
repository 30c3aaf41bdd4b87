# %% [markdown]
# # Bridge count, ascending number and genus-minimal subdiagrams

# %%
import itertools

from vlink import parse, subdiagram
from vlink.invariants import (
    ascending_number,
    ascending_number_oracle,
    bridge_count,
    min_genus_subdiagram,
)

for code in ("O1+U2+O3+U1+O2+U3+", "O1+U2+U1+O2+", "O1+U2+;U1+O2+"):
    d = parse(code)
    print(f"{code:22s} bridge {bridge_count(d)}  ascending {ascending_number(d)} "
          f"(oracle {ascending_number_oracle(d)})  min genus {min_genus_subdiagram(d)}")

# %% [markdown]
# Virtualizing crossings never raises either count.  A quick exhaustive
# look at one diagram:

# %%
d = parse("O1+U2+O3-U4+U1+O2+U3-O4+")
rows = []
for r in range(d.n_crossings + 1):
    for A in itertools.combinations(d.crossings, r):
        s = subdiagram(d, A)
        rows.append((A, bridge_count(s), ascending_number(s)))
print(all(b <= bridge_count(d) and a <= ascending_number(d) for _, b, a in rows))
print(rows[:6])
