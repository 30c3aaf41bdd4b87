# %% [markdown]
# # Carter surfaces of Gauss codes
#
# A signed Gauss code fixes a ribbon graph: each classical crossing is a
# vertex with a cyclic order on its four half-edges, picked by the sign.
# Faces are the boundary circuits, and Euler characteristic gives the genus
# of the closed surface the diagram sits on.

# %%
from vlink import genus, parse
from vlink.carter import build_ribbon_graph, face_edges, trace_faces

codes = {
    "trefoil": "O1+U2+O3+U1+O2+U3+",
    "virtual trefoil": "O1+U2+U1+O2+",
    "virtual Hopf": "O1+;U1+",
    "Hopf": "O1+U2+;U1+O2+",
}
for name, code in codes.items():
    print(f"{name:16s} genus {genus(parse(code)).total}")

# %% [markdown]
# The virtual trefoil has two crossings, four edges and two faces, so
# chi = 2 - 4 + 2 = 0 and the surface is a torus.

# %%
d = parse(codes["virtual trefoil"])
g = build_ribbon_graph(d)
for f in trace_faces(g):
    print([f"{e.component}:{e.position}" for e in face_edges(g, f)])
rep = genus(d)
print([(c.vertices, c.edges, c.faces, c.genus) for c in rep.components])

# %% [markdown]
# Split diagrams give one surface per connected piece; free circles are
# spheres of their own.

# %%
print(genus(parse("O1+U2+U1+O2+;;O3+U3+")))
