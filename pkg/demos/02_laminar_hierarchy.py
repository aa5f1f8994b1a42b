"""Walk the laminar hierarchy: nested, laminar, k-laminar, k-closure-laminar.

Run:  python3 demos/02_laminar_hierarchy.py
"""

from lamina.constructions import named_matroid, sec1_pc_example, uniform
from lamina.laminar import (
    is_k_closure_laminar,
    is_k_laminar,
    is_laminar,
    is_nested,
    min_closure_laminar_k,
    min_laminar_k,
)


def classify(title, M):
    print(f"== {title} ==")
    print(f"  nested: {bool(is_nested(M))}   laminar: {bool(is_laminar(M))}")
    print(f"  min k with M k-laminar:          {min_laminar_k(M)}")
    print(f"  min k with M k-closure-laminar:  {min_closure_laminar_k(M)}")
    print()


classify("U(2,4)  (uniform matroids are nested)", uniform(2, 4))
classify("M(K_{2,3})", named_matroid("mk23"))

# the two hierarchies genuinely differ: this matroid is k-laminar but
# not k-closure-laminar, for each k >= 2
for k in (2, 3):
    M = sec1_pc_example(k)
    print(f"separation example, k={k}: "
          f"k-laminar={bool(is_k_laminar(M, k))}, "
          f"k-closure-laminar={bool(is_k_closure_laminar(M, k))}")

# failed verdicts carry replayable witnesses
verdict = is_k_laminar(named_matroid("mk23"), 2)
M = named_matroid("mk23")
C1, C2 = verdict.witness
print("\nwitness for M(K_{2,3}) not 2-laminar: circuits",
      list(M.names(C1)), "and", list(M.names(C2)),
      "share", (C1 & C2).bit_count(), "elements without closure containment")
