"""Bitmask matroids with explicit rank tables.

A matroid on ``n <= 16`` labeled elements is stored as the full table of
2**n subset ranks.  Subsets are plain Python ints interpreted as
bitmasks over element positions ``0..n-1``.  All derived structure is
computed by subset scan, never by representation-specific shortcuts.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

MAX_ELEMENTS = 16


class MatroidError(ValueError):
    """An input failed matroid-level validation."""


@dataclass(frozen=True)
class AxiomViolation:
    """First rank-axiom failure found in a candidate table.

    ``axiom`` is one of ``"R1"`` (bounds), ``"R2"`` (monotonicity),
    ``"R3"`` (submodularity); ``witness`` holds the offending subset
    mask(s).
    """

    axiom: str
    witness: tuple[int, ...]


def subset_sizes(n: int) -> np.ndarray:
    """Popcount of every mask over ``n`` elements, as a numpy array."""
    masks = np.arange(1 << n, dtype=np.uint32)
    sizes = np.zeros(1 << n, dtype=np.int16)
    for i in range(n):
        sizes += ((masks >> i) & 1).astype(np.int16)
    return sizes


def validate_rank_axioms(table: Sequence[int], n: int) -> AxiomViolation | None:
    """Check the rank axioms R1-R3 on a candidate rank table.

    Monotonicity and submodularity are verified in their single-element
    local forms (``r(A) <= r(A+x)`` and
    ``r(A+x) + r(A+y) >= r(A+x+y) + r(A)``), which together with the R1
    bounds are equivalent to the full axioms.  Returns ``None`` for a
    valid table, otherwise the first violation in (R1, R2, R3) order.
    """
    size = 1 << n
    if len(table) != size:
        raise ValueError(f"rank table must have {size} entries, got {len(table)}")
    r = np.asarray(bytearray(bytes(table)), dtype=np.int16) if isinstance(
        table, (bytes, bytearray)
    ) else np.asarray(table, dtype=np.int16)

    sizes = subset_sizes(n)
    bad = (r < 0) | (r > sizes)
    if bad.any():
        a = int(np.argmax(bad))
        return AxiomViolation("R1", (a,))

    masks = np.arange(size, dtype=np.int64)
    for i in range(n):
        bit = 1 << i
        base = masks[(masks & bit) == 0]
        viol = r[base] > r[base | bit]
        if viol.any():
            a = int(base[int(np.argmax(viol))])
            return AxiomViolation("R2", (a, a | bit))

    for i in range(n):
        bi = 1 << i
        for j in range(i + 1, n):
            bj = 1 << j
            base = masks[(masks & (bi | bj)) == 0]
            viol = r[base | bi] + r[base | bj] < r[base | bi | bj] + r[base]
            if viol.any():
                a = int(base[int(np.argmax(viol))])
                return AxiomViolation("R3", (a | bi, a | bj))
    return None


class Matroid:
    """Immutable matroid: labels plus a full subset-rank table.

    Equality is labeled equality (same labels in order, identical rank
    table); isomorphism is a separate operation in :mod:`lamina.minors`.
    Derived structure (circuits, flats, ...) is computed lazily and
    cached; instances are safe to share since nothing mutates after
    construction.
    """

    __slots__ = ("labels", "n", "rank_table", "E", "_cache")

    def __init__(
        self,
        labels: Iterable[str],
        rank_table: Sequence[int],
        validate: bool = True,
    ):
        labels = tuple(str(x) for x in labels)
        n = len(labels)
        if n > MAX_ELEMENTS:
            raise MatroidError(f"ground set too large: {n} > {MAX_ELEMENTS}")
        if len(set(labels)) != n:
            raise MatroidError("element labels must be distinct")
        table = bytes(rank_table)
        if len(table) != 1 << n:
            raise MatroidError(
                f"rank table must have {1 << n} entries, got {len(table)}"
            )
        if validate:
            v = validate_rank_axioms(table, n)
            if v is not None:
                raise MatroidError(
                    f"rank axiom {v.axiom} violated at masks {v.witness}"
                )
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rank_table", table)
        object.__setattr__(self, "E", (1 << n) - 1)
        object.__setattr__(self, "_cache", {})

    def __setattr__(self, name, value):
        raise AttributeError("Matroid instances are immutable")

    # -- basic queries -------------------------------------------------

    def rank(self, A: int | None = None) -> int:
        """Rank of subset mask ``A`` (whole ground set when omitted)."""
        if A is None:
            A = self.E
        if A & ~self.E:
            raise MatroidError(f"mask {A:#x} not within ground set")
        return self.rank_table[A]

    def full_rank(self) -> int:
        return self.rank_table[self.E]

    def is_independent(self, A: int) -> bool:
        return self.rank_table[A] == A.bit_count()

    def closure(self, A: int) -> int:
        """All elements whose addition to ``A`` does not raise the rank."""
        if A & ~self.E:
            raise MatroidError(f"mask {A:#x} not within ground set")
        rt = self.rank_table
        rA = rt[A]
        out = A
        rest = self.E & ~A
        while rest:
            bit = rest & -rest
            rest ^= bit
            if rt[A | bit] == rA:
                out |= bit
        return out

    def loops(self) -> int:
        """Mask of loop elements (= closure of the empty set)."""
        return self.closure(0)

    def is_flat(self, A: int) -> bool:
        return self.closure(A) == A

    def is_circuit(self, A: int) -> bool:
        rt = self.rank_table
        pc = A.bit_count()
        if A == 0 or rt[A] != pc - 1:
            return False
        m = A
        while m:
            bit = m & -m
            m ^= bit
            if rt[A ^ bit] != pc - 1:
                return False
        return True

    def mask(self, names: Iterable[str]) -> int:
        """Mask for a collection of element labels."""
        idx = self._label_index()
        out = 0
        for name in names:
            try:
                out |= 1 << idx[name]
            except KeyError:
                raise MatroidError(f"unknown element label {name!r}") from None
        return out

    def names(self, A: int) -> tuple[str, ...]:
        """Labels of the elements in mask ``A``, in ground-set order."""
        return tuple(self.labels[i] for i in range(self.n) if A >> i & 1)

    def _label_index(self) -> dict:
        idx = self._cache.get("label_index")
        if idx is None:
            idx = {lab: i for i, lab in enumerate(self.labels)}
            self._cache["label_index"] = idx
        return idx

    # -- derived families ----------------------------------------------

    def circuits(self) -> tuple[int, ...]:
        """All minimal dependent subsets, ordered by (size, mask)."""
        out = self._cache.get("circuits")
        if out is None:
            rt = self.rank_table
            found = []
            for A in range(1, self.E + 1):
                pc = A.bit_count()
                if rt[A] != pc - 1:
                    continue
                m = A
                minimal = True
                while m:
                    bit = m & -m
                    m ^= bit
                    if rt[A ^ bit] != pc - 1:
                        minimal = False
                        break
                if minimal:
                    found.append(A)
            found.sort(key=lambda c: (c.bit_count(), c))
            out = tuple(found)
            self._cache["circuits"] = out
        return out

    def nonspanning_circuits(self) -> tuple[int, ...]:
        r = self.full_rank()
        rt = self.rank_table
        return tuple(C for C in self.circuits() if rt[C] < r)

    def flats(self) -> tuple[int, ...]:
        """All closure-closed subsets, ordered by (size, mask)."""
        out = self._cache.get("flats")
        if out is None:
            rt = self.rank_table
            found = []
            for A in range(self.E + 1):
                rA = rt[A]
                rest = self.E & ~A
                flat = True
                while rest:
                    bit = rest & -rest
                    rest ^= bit
                    if rt[A | bit] == rA:
                        flat = False
                        break
                if flat:
                    found.append(A)
            found.sort(key=lambda f: (f.bit_count(), f))
            out = tuple(found)
            self._cache["flats"] = out
        return out

    def cyclic_flats(self) -> tuple[tuple[int, int], ...]:
        """All coloop-free flats as (mask, rank) pairs, (size, mask) order."""
        out = self._cache.get("cyclic_flats")
        if out is None:
            rt = self.rank_table
            found = []
            for F in self.flats():
                rF = rt[F]
                m = F
                cyclic = True
                while m:
                    bit = m & -m
                    m ^= bit
                    if rt[F ^ bit] != rF:
                        cyclic = False
                        break
                if cyclic:
                    found.append((F, rF))
            out = tuple(found)
            self._cache["cyclic_flats"] = out
        return out

    def hamiltonian_flats(self) -> tuple[int, ...]:
        """Flats that contain a spanning circuit, i.e. circuit closures."""
        out = self._cache.get("ham_flats")
        if out is None:
            seen = {self.closure(C) for C in self.circuits()}
            out = tuple(sorted(seen, key=lambda f: (f.bit_count(), f)))
            self._cache["ham_flats"] = out
        return out

    def is_hamiltonian_flat(self, F: int) -> bool:
        """Whether flat ``F`` has a spanning circuit.  Rejects non-flats."""
        if not self.is_flat(F):
            raise MatroidError(f"mask {F:#x} is not a flat")
        return F in set(self.hamiltonian_flats())

    # -- duality -------------------------------------------------------

    def dual(self) -> "Matroid":
        """Dual matroid: r*(A) = |A| + r(E-A) - r(E)."""
        rt = self.rank_table
        E = self.E
        r = rt[E]
        table = bytes(A.bit_count() + rt[E ^ A] - r for A in range(E + 1))
        return Matroid(self.labels, table)

    # -- identity ------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matroid):
            return NotImplemented
        return self.labels == other.labels and self.rank_table == other.rank_table

    def __hash__(self) -> int:
        return hash((self.labels, self.rank_table))

    def __repr__(self) -> str:
        return f"Matroid(n={self.n}, rank={self.full_rank()}, labels={self.labels!r})"
