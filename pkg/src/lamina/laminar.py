"""Class predicates: nested, laminar, k-laminar, k-closure-laminar, paving.

Every predicate returns a :class:`ClassVerdict`; a false verdict carries
the lexicographically first violating witness so reports are
reproducible and replayable through the public operations.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Matroid


@dataclass(frozen=True)
class ClassVerdict:
    """Outcome of a class membership test.

    ``witness`` is ``None`` on success; on failure it is a tuple of
    masks: ``(C1, C2)`` for circuit-pair conditions, ``(X, F1, F2)``
    for chain conditions over Hamiltonian flats (X the independent set,
    F1 and F2 the incomparable flats).
    """

    name: str
    holds: bool
    witness: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.holds


def _relevant_circuits(M: Matroid, nonspanning_only: bool) -> tuple[int, ...]:
    return M.nonspanning_circuits() if nonspanning_only else M.circuits()


def is_k_laminar(M: Matroid, k: int, nonspanning_only: bool = False) -> ClassVerdict:
    """Whether every circuit pair meeting in >= k elements has one circuit
    inside the closure of the other."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    circs = _relevant_circuits(M, nonspanning_only)
    closures = [M.closure(C) for C in circs]
    for i in range(len(circs)):
        for j in range(i + 1, len(circs)):
            C1, C2 = circs[i], circs[j]
            if (C1 & C2).bit_count() < k:
                continue
            if C1 & ~closures[j] and C2 & ~closures[i]:
                return ClassVerdict(f"{k}-laminar", False, (C1, C2))
    return ClassVerdict(f"{k}-laminar", True)


def is_k_closure_laminar(M: Matroid, k: int) -> ClassVerdict:
    """Whether, for every independent k-set X, the Hamiltonian flats
    containing X form a chain under inclusion.

    Vacuously true when k exceeds the rank (no independent k-set
    exists), which keeps the minimum-k searches well defined.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    name = f"{k}-closure-laminar"
    if k > M.full_rank():
        return ClassVerdict(name, True)
    ham = M.hamiltonian_flats()
    rt = M.rank_table
    for X in range(M.E + 1):
        if X.bit_count() != k or rt[X] != k:
            continue
        containing = [F for F in ham if F & X == X]
        for i in range(len(containing)):
            for j in range(i + 1, len(containing)):
                F1, F2 = containing[i], containing[j]
                if F1 & ~F2 and F2 & ~F1:
                    return ClassVerdict(name, False, (X, F1, F2))
    return ClassVerdict(name, True)


def is_k_closure_laminar_circuit_form(
    M: Matroid, k: int, nonspanning_only: bool = False
) -> ClassVerdict:
    """Circuit-pair formulation: whenever r(cl(C1) ∩ cl(C2)) >= k, one
    circuit lies inside the closure of the other.  Agrees with
    :func:`is_k_closure_laminar` on every matroid."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    circs = _relevant_circuits(M, nonspanning_only)
    closures = [M.closure(C) for C in circs]
    rt = M.rank_table
    name = f"{k}-closure-laminar(circuits)"
    for i in range(len(circs)):
        for j in range(i + 1, len(circs)):
            if rt[closures[i] & closures[j]] < k:
                continue
            C1, C2 = circs[i], circs[j]
            if C1 & ~closures[j] and C2 & ~closures[i]:
                return ClassVerdict(name, False, (C1, C2))
    return ClassVerdict(name, True)


def is_nested(M: Matroid) -> ClassVerdict:
    """Whether the Hamiltonian flats form a chain under inclusion."""
    ham = M.hamiltonian_flats()
    for i in range(len(ham)):
        for j in range(i + 1, len(ham)):
            F1, F2 = ham[i], ham[j]
            if F1 & ~F2 and F2 & ~F1:
                return ClassVerdict("nested", False, (0, F1, F2))
    return ClassVerdict("nested", True)


def is_laminar(M: Matroid) -> ClassVerdict:
    """Laminar = 1-laminar: intersecting circuit pairs are closure-nested."""
    inner = is_k_laminar(M, 1)
    return ClassVerdict("laminar", inner.holds, inner.witness)


def min_laminar_k(M: Matroid) -> int:
    """Smallest k for which M is k-laminar (monotone in k, so well defined)."""
    k = 0
    while not is_k_laminar(M, k):
        k += 1
    return k


def min_closure_laminar_k(M: Matroid) -> int:
    """Smallest k for which M is k-closure-laminar."""
    k = 0
    while not is_k_closure_laminar(M, k):
        k += 1
    return k


def is_paving(M: Matroid) -> bool:
    """Whether every circuit has size at least the rank of M."""
    r = M.full_rank()
    return all(C.bit_count() >= r for C in M.circuits())
