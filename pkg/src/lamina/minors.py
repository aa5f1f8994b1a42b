"""Minor operations, isomorphism, minor containment, excluded minors.

Minor search follows the standard reduction: any minor can be obtained
by contracting an independent set of size r(M) - r(N) and then deleting
down to |E(N)| elements, so only those candidates are enumerated.
Witnesses are always the first found under ascending mask order, which
keeps reports deterministic.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable

from .core import Matroid, MatroidError
from .constructions import uniform, named_matroid
from .laminar import (
    is_k_closure_laminar,
    is_k_laminar,
    is_laminar,
    is_nested,
    is_paving,
)


@dataclass(frozen=True)
class MinorSpec:
    """Disjoint delete/contract masks describing M \\ delete / contract."""

    delete: int
    contract: int

    def __post_init__(self):
        if self.delete & self.contract:
            raise MatroidError("delete and contract sets must be disjoint")


def _subset_matroid(M: Matroid, keep: list[int], table_fn, validate: bool) -> Matroid:
    labels = tuple(M.labels[i] for i in keep)
    size = 1 << len(keep)
    table = bytearray(size)
    for A in range(size):
        full = 0
        m = A
        while m:
            bit = m & -m
            m ^= bit
            full |= 1 << keep[bit.bit_length() - 1]
        table[A] = table_fn(full)
    return Matroid(labels, bytes(table), validate=validate)


def delete(M: Matroid, D: int, validate: bool = True) -> Matroid:
    """Delete the elements of mask ``D``."""
    if D & ~M.E:
        raise MatroidError(f"mask {D:#x} not within ground set")
    keep = [i for i in range(M.n) if not D >> i & 1]
    rt = M.rank_table
    return _subset_matroid(M, keep, lambda A: rt[A], validate)


def contract(M: Matroid, C: int, validate: bool = True) -> Matroid:
    """Contract the elements of mask ``C``: r'(A) = r(A ∪ C) - r(C)."""
    if C & ~M.E:
        raise MatroidError(f"mask {C:#x} not within ground set")
    keep = [i for i in range(M.n) if not C >> i & 1]
    rt = M.rank_table
    rC = rt[C]
    return _subset_matroid(M, keep, lambda A: rt[A | C] - rC, validate)


def minor(M: Matroid, spec: MinorSpec) -> Matroid:
    """Apply a MinorSpec (deletion first; the operations commute)."""
    M2 = delete(M, spec.delete)
    return contract(M2, M2.mask(M.names(spec.contract)))


# ---------------------------------------------------------------------------
# isomorphism


def _global_invariants(M: Matroid):
    circ_sizes = tuple(sorted(C.bit_count() for C in M.circuits()))
    flats_per_rank = [0] * (M.full_rank() + 1)
    rt = M.rank_table
    for F in M.flats():
        flats_per_rank[rt[F]] += 1
    return (M.n, M.full_rank(), circ_sizes, tuple(flats_per_rank))


def _element_fingerprints(M: Matroid):
    rt = M.rank_table
    prints = []
    for i in range(M.n):
        bit = 1 << i
        through = tuple(sorted(C.bit_count() for C in M.circuits() if C & bit))
        prints.append((rt[bit], through))
    return prints


def find_isomorphism(M1: Matroid, M2: Matroid) -> tuple[int, ...] | None:
    """Ground-set bijection carrying M1's rank table onto M2's, or None.

    Backtracking over element images, pruned by global invariants and
    per-element fingerprints (multiset of circuit sizes through the
    element).  The returned mapping sends position i of M1 to position
    ``mapping[i]`` of M2 and is the lexicographically first found.
    """
    if _global_invariants(M1) != _global_invariants(M2):
        return None
    n = M1.n
    fp1 = _element_fingerprints(M1)
    fp2 = _element_fingerprints(M2)
    candidates = [
        [j for j in range(n) if fp2[j] == fp1[i]] for i in range(n)
    ]
    if any(not c for c in candidates):
        return None
    rt1, rt2 = M1.rank_table, M2.rank_table

    mapping = [-1] * n
    used = [False] * n

    def extend(i: int, assigned1: int) -> bool:
        if i == n:
            return True
        bit1 = 1 << i
        for j in candidates[i]:
            if used[j]:
                continue
            mapping[i] = j
            used[j] = True
            # verify ranks of every subset of assigned elements containing i
            ok = True
            sub = assigned1
            while True:
                A1 = sub | bit1
                A2 = 0
                m = A1
                while m:
                    b = m & -m
                    m ^= b
                    A2 |= 1 << mapping[b.bit_length() - 1]
                if rt1[A1] != rt2[A2]:
                    ok = False
                    break
                if sub == 0:
                    break
                sub = (sub - 1) & assigned1
            if ok and extend(i + 1, assigned1 | bit1):
                return True
            used[j] = False
            mapping[i] = -1
        return False

    if extend(0, 0):
        return tuple(mapping)
    return None


def is_isomorphic(M1: Matroid, M2: Matroid) -> bool:
    return find_isomorphism(M1, M2) is not None


# ---------------------------------------------------------------------------
# minor containment


def has_minor(M: Matroid, N: Matroid) -> MinorSpec | None:
    """First MinorSpec (ascending contract mask, then delete mask) whose
    minor of M is isomorphic to N, or None.

    Contract sets range over independent sets of size r(M) - r(N) only,
    which loses no minors.
    """
    dr = M.full_rank() - N.full_rank()
    dn = M.n - N.n
    if dr < 0 or dn < dr:
        return None
    del_size = dn - dr
    rt = M.rank_table
    inv_N = _global_invariants(N)
    for C in range(M.E + 1):
        if C.bit_count() != dr or rt[C] != dr:
            continue
        MC = contract(M, C, validate=False)
        rest = MC.E
        for D in range(rest + 1):
            if D.bit_count() != del_size:
                continue
            cand = delete(MC, D, validate=False)
            if _global_invariants(cand) != inv_N:
                continue
            if find_isomorphism(cand, N) is not None:
                # express D in the original ground set
                d_names = MC.names(D)
                return MinorSpec(M.mask(d_names), C)
    return None


# ---------------------------------------------------------------------------
# class predicate registry and excluded-minor certification

_K_LAMINAR_RE = re.compile(r"^(\d+)-laminar$")
_K_CLOSURE_RE = re.compile(r"^(\d+)-closure-laminar$")

_U24 = uniform(2, 4)
_TERNARY_EXCLUDED = ("U25", "U35", "F7", "F7star")


def _ternary_targets():
    return (uniform(2, 5), uniform(3, 5), named_matroid("f7"), named_matroid("f7star"))


def is_binary(M: Matroid) -> bool:
    """Binary = no U_{2,4} minor."""
    return has_minor(M, _U24) is None


def is_ternary(M: Matroid) -> bool:
    """Ternary = no minor among U_{2,5}, U_{3,5}, F_7, F_7*."""
    return all(has_minor(M, N) is None for N in _ternary_targets())


def class_predicate(name: str) -> Callable[[Matroid], bool]:
    """Resolve a registered class-predicate name to a boolean test.

    Registered: ``nested``, ``laminar``, ``paving``, ``binary``,
    ``ternary``, ``<k>-laminar``, ``<k>-closure-laminar``.
    """
    key = name.strip().lower()
    if key == "nested":
        return lambda M: bool(is_nested(M))
    if key == "laminar":
        return lambda M: bool(is_laminar(M))
    if key == "paving":
        return is_paving
    if key == "binary":
        return is_binary
    if key == "ternary":
        return is_ternary
    m = _K_LAMINAR_RE.match(key)
    if m:
        k = int(m.group(1))
        return lambda M: bool(is_k_laminar(M, k))
    m = _K_CLOSURE_RE.match(key)
    if m:
        k = int(m.group(1))
        return lambda M: bool(is_k_closure_laminar(M, k))
    raise MatroidError(f"unregistered class predicate {name!r}")


@dataclass(frozen=True)
class ExcludedMinorResult:
    """Certification outcome; ``witness`` is the single-element MinorSpec
    whose minor already fails the class (when certification fails that
    way), or None."""

    holds: bool
    reason: str
    witness: MinorSpec | None = None

    def __bool__(self) -> bool:
        return self.holds


def is_excluded_minor(M: Matroid, predicate: str) -> ExcludedMinorResult:
    """Whether M is an excluded minor for the named class: M fails the
    predicate while every single-element deletion and contraction
    satisfies it."""
    P = class_predicate(predicate)
    if P(M):
        return ExcludedMinorResult(False, f"matroid already satisfies {predicate}")
    for i in range(M.n):
        bit = 1 << i
        if not P(delete(M, bit)):
            return ExcludedMinorResult(
                False,
                f"deletion of {M.labels[i]} still violates {predicate}",
                MinorSpec(bit, 0),
            )
        if not P(contract(M, bit)):
            return ExcludedMinorResult(
                False,
                f"contraction of {M.labels[i]} still violates {predicate}",
                MinorSpec(0, bit),
            )
    return ExcludedMinorResult(True, f"excluded minor for {predicate}")
