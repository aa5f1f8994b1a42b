"""Excluded-minor certification for the 2-laminar and 2-closure-laminar classes.

Run:  python3 demos/03_excluded_minors.py
"""

from lamina.constructions import (
    direct_sum,
    mn_family,
    named_matroid,
    nn_family,
    pn_family,
    uniform,
)
from lamina.laminar import is_k_laminar
from lamina.minors import has_minor, is_excluded_minor, minor

# certify a few excluded minors for each class
for title, M, classes in [
    ("M^-(K_{2,3})", named_matroid("mk23minus"),
     ("2-laminar", "2-closure-laminar")),
    ("M_4(2)", mn_family(4, 2), ("2-laminar", "2-closure-laminar")),
    ("N_5(2)", nn_family(5, 2), ("2-laminar",)),
    ("P_4(2)", pn_family(4, 2), ("2-closure-laminar",)),
]:
    for cls in classes:
        print(f"{title}: excluded minor for {cls}? "
              f"{bool(is_excluded_minor(M, cls))}")

# the characterization in action: a matroid outside the class always
# contains one of the excluded minors (here M_4(2) plus a free coloop,
# so the violation survives deleting the coloop)
host = direct_sum(mn_family(4, 2), uniform(1, 1, ("x",)))
print(f"\nM_4(2) + coloop 2-laminar? {bool(is_k_laminar(host, 2))}")
for name, target in [("M^-(K_{2,3})", named_matroid("mk23minus")),
                     ("M_4(2)", mn_family(4, 2)),
                     ("M_5(2)", mn_family(5, 2)),
                     ("N_5(2)", nn_family(5, 2))]:
    spec = has_minor(host, target)
    if spec is not None:
        N = minor(host, spec)
        print(f"  contains {name}: delete {list(host.names(spec.delete))}, "
              f"contract {list(host.names(spec.contract))}")
