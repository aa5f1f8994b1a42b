"""Build a few matroids and inspect their structure.

Run:  python3 demos/01_build_and_inspect.py
"""

from lamina.constructions import Multigraph, cycle_matroid, named_matroid, uniform


def show(title, M):
    print(f"== {title} ==")
    print(f"  elements ({M.n}): {' '.join(M.labels)}")
    print(f"  rank: {M.full_rank()}")
    print(f"  circuits: {[list(M.names(C)) for C in M.circuits()]}")
    print(f"  cyclic flats: "
          f"{[(list(M.names(F)), r) for F, r in M.cyclic_flats()]}")
    print()


show("uniform U(2,4)", uniform(2, 4))

# the cycle matroid of the complete bipartite graph K_{2,3}
show("M(K_{2,3})", named_matroid("mk23"))

# any multigraph works: here a triangle with a doubled edge and a loop
G = Multigraph(3, ((0, 1), (0, 1), (1, 2), (2, 0), (2, 2)))
show("triangle + parallel edge + loop", cycle_matroid(G))

# duality flips circuits and cocircuits
F = named_matroid("f7")
print("Fano matroid rank:", F.full_rank(),
      "| dual rank:", F.dual().full_rank())
print("smallest circuit sizes:",
      sorted({C.bit_count() for C in F.circuits()}))
