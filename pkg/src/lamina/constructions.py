"""Matroid constructors: parametric families and generic operations.

Everything here produces a validated :class:`~lamina.core.Matroid`.
The module covers uniform and cycle matroids, laminar capacity systems,
nested transversal presentations, truncation, direct sum, parallel
connection, circuit-hyperplane relaxation, synthesis from a cyclic-flat
lattice, and the named catalog (M_n(k), N_n(k), P_n(k), Fano, wheels,
and the k-closure-laminar counterexample families).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import MAX_ELEMENTS, Matroid, MatroidError

# ---------------------------------------------------------------------------
# uniform


def uniform(r: int, n: int, labels: Sequence[str] | None = None) -> Matroid:
    """Uniform matroid U_{r,n}: rank(A) = min(|A|, r)."""
    if not 0 <= r <= n:
        raise MatroidError(f"uniform matroid needs 0 <= r <= n, got r={r}, n={n}")
    if n > MAX_ELEMENTS:
        raise MatroidError(f"ground set too large: {n} > {MAX_ELEMENTS}")
    if labels is None:
        labels = tuple(f"e{i + 1}" for i in range(n))
    table = bytes(min(A.bit_count(), r) for A in range(1 << n))
    return Matroid(labels, table)


def circuit_matroid(m: int, prefix: str = "e") -> Matroid:
    """An m-element circuit, i.e. U_{m-1,m}."""
    if m < 1:
        raise MatroidError("a circuit needs at least one element")
    return uniform(m - 1, m, tuple(f"{prefix}{i + 1}" for i in range(m)))


# ---------------------------------------------------------------------------
# graphs


@dataclass(frozen=True)
class Multigraph:
    """Vertex count plus labeled edge list; loops and parallel edges allowed."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        for u, v in edges:
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise MatroidError(f"edge ({u},{v}) has an invalid endpoint")
        labels = self.labels
        if not labels:
            labels = tuple(f"e{i + 1}" for i in range(len(edges)))
        if len(labels) != len(edges):
            raise MatroidError("need one label per edge")
        object.__setattr__(self, "labels", tuple(labels))


def cycle_matroid(G: Multigraph) -> Matroid:
    """Cycle matroid of a multigraph.

    rank(A) = (#vertices touched by A) - (#components of the subgraph
    induced by A on touched vertices), computed per subset by union-find.
    """
    m = len(G.edges)
    if m > MAX_ELEMENTS:
        raise MatroidError(f"too many edges: {m} > {MAX_ELEMENTS}")
    nv = G.vertex_count
    edges = G.edges
    table = bytearray(1 << m)
    for A in range(1, 1 << m):
        parent = list(range(nv))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        rank = 0
        mset = A
        while mset:
            bit = mset & -mset
            mset ^= bit
            u, v = edges[bit.bit_length() - 1]
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                rank += 1
        table[A] = rank
    return Matroid(G.labels, bytes(table))


# ---------------------------------------------------------------------------
# laminar capacity systems


@dataclass(frozen=True)
class LaminarCapacitySystem:
    """(E, family, capacities): independence is |I ∩ A| <= c(A) for all A."""

    labels: tuple[str, ...]
    family: tuple[int, ...]
    capacities: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "family", tuple(self.family))
        object.__setattr__(self, "capacities", tuple(self.capacities))
        if len(self.family) != len(self.capacities):
            raise MatroidError("need one capacity per family member")
        if any(c < 0 for c in self.capacities):
            raise MatroidError("capacities must be nonnegative")
        full = (1 << len(self.labels)) - 1
        for A in self.family:
            if A & ~full:
                raise MatroidError("family member not within ground set")

    def check_laminar(self) -> None:
        """Raise unless any two intersecting members are nested."""
        fam = self.family
        for i in range(len(fam)):
            for j in range(i + 1, len(fam)):
                a, b = fam[i], fam[j]
                if a & b and (a & ~b) and (b & ~a):
                    raise MatroidError(
                        f"family is not laminar: members {a:#x} and {b:#x} "
                        "intersect without nesting"
                    )


def laminar_matroid(system: LaminarCapacitySystem) -> Matroid:
    """Matroid M(E, family, c) of a laminar capacity system.

    rank(X) is the size of a maximum I ⊆ X respecting every capacity,
    found greedily (valid because the feasible sets form a matroid); the
    result is re-validated against the rank axioms.
    """
    system.check_laminar()
    n = len(system.labels)
    fam = system.family
    caps = system.capacities
    table = bytearray(1 << n)
    for X in range(1, 1 << n):
        counts = [0] * len(fam)
        taken = 0
        m = X
        while m:
            bit = m & -m
            m ^= bit
            ok = True
            for idx, A in enumerate(fam):
                if A & bit and counts[idx] + 1 > caps[idx]:
                    ok = False
                    break
            if ok:
                for idx, A in enumerate(fam):
                    if A & bit:
                        counts[idx] += 1
                taken += 1
        table[X] = taken
    return Matroid(system.labels, bytes(table))


# ---------------------------------------------------------------------------
# nested transversal presentations


@dataclass(frozen=True)
class NestedPresentation:
    """Chain of blocks B_1 ⊆ B_2 ⊆ ... ⊆ B_m over the ground set."""

    labels: tuple[str, ...]
    blocks: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "blocks", tuple(self.blocks))
        full = (1 << len(self.labels)) - 1
        for B in self.blocks:
            if B & ~full:
                raise MatroidError("block not within ground set")

    def check_chain(self) -> None:
        for a, b in zip(self.blocks, self.blocks[1:]):
            if a & ~b:
                raise MatroidError("blocks do not form a chain B_1 ⊆ ... ⊆ B_m")


def _matching_size(element_bits: list[int], blocks: tuple[int, ...]) -> int:
    """Max bipartite matching between elements and blocks (x ~ B iff x ∈ B)."""
    match_block = [-1] * len(blocks)

    def augment(bit: int, seen: list[bool]) -> bool:
        for bi, B in enumerate(blocks):
            if B & bit and not seen[bi]:
                seen[bi] = True
                if match_block[bi] == -1 or augment(match_block[bi], seen):
                    match_block[bi] = bit
                    return True
        return False

    size = 0
    for bit in element_bits:
        if augment(bit, [False] * len(blocks)):
            size += 1
    return size


def transversal_matroid(presentation: NestedPresentation) -> Matroid:
    """Nested transversal matroid of a chain presentation.

    rank(X) is the maximum matching between X and the blocks; validated
    post hoc against the rank axioms.
    """
    presentation.check_chain()
    n = len(presentation.labels)
    blocks = presentation.blocks
    table = bytearray(1 << n)
    for X in range(1, 1 << n):
        bits = []
        m = X
        while m:
            bit = m & -m
            m ^= bit
            bits.append(bit)
        table[X] = _matching_size(bits, blocks)
    return Matroid(presentation.labels, bytes(table))


# ---------------------------------------------------------------------------
# generic operations


def truncate(M: Matroid, t: int) -> Matroid:
    """Cap the rank function at ``t``."""
    if not 0 <= t <= M.full_rank():
        raise MatroidError(f"truncation rank {t} out of range [0, {M.full_rank()}]")
    table = bytes(min(M.rank_table[A], t) for A in range(M.E + 1))
    return Matroid(M.labels, table)


def _disjoint_labels(first: Sequence[str], second: Sequence[str]) -> tuple[str, ...]:
    """Rename clashes in ``second`` deterministically by appending primes."""
    used = set(first)
    out = []
    for lab in second:
        new = lab
        while new in used:
            new += "'"
        used.add(new)
        out.append(new)
    return tuple(out)


def direct_sum(M1: Matroid, M2: Matroid) -> Matroid:
    """Direct sum: rank(A) = r1(A ∩ E1) + r2(A ∩ E2)."""
    n = M1.n + M2.n
    if n > MAX_ELEMENTS:
        raise MatroidError(f"direct sum too large: {n} > {MAX_ELEMENTS}")
    labels = M1.labels + _disjoint_labels(M1.labels, M2.labels)
    mask1 = M1.E
    table = bytes(
        M1.rank_table[A & mask1] + M2.rank_table[A >> M1.n] for A in range(1 << n)
    )
    return Matroid(labels, table)


def matroid_from_circuits(
    labels: Sequence[str], circuits: Iterable[int], exact: bool = True
) -> Matroid:
    """Build a matroid whose circuits are exactly the given masks.

    Independence is "contains no listed circuit"; the rank table comes
    from the DP r(A) = max_e r(A - e) on dependent sets.  Raises if the
    family is not an antichain, if the table fails the rank axioms, or
    (with ``exact``) if the result's circuits differ from the input.
    """
    labels = tuple(labels)
    n = len(labels)
    if n > MAX_ELEMENTS:
        raise MatroidError(f"ground set too large: {n} > {MAX_ELEMENTS}")
    circs = sorted(set(int(C) for C in circuits), key=lambda c: (c.bit_count(), c))
    full = (1 << n) - 1
    for C in circs:
        if C == 0 or C & ~full:
            raise MatroidError(f"invalid circuit mask {C:#x}")
    for a, b in itertools.combinations(circs, 2):
        if a & ~b == 0 or b & ~a == 0:
            raise MatroidError("circuit family is not an antichain")

    circ_set = set(circs)
    dep = bytearray(1 << n)
    table = bytearray(1 << n)
    for A in range(1, 1 << n):
        d = A in circ_set
        r = 0
        m = A
        while m:
            bit = m & -m
            m ^= bit
            sub = A ^ bit
            d = d or dep[sub]
            if table[sub] > r:
                r = table[sub]
        dep[A] = 1 if d else 0
        table[A] = r if d else A.bit_count()
    M = Matroid(labels, bytes(table))
    if exact and list(M.circuits()) != circs:
        raise MatroidError("given family is not the circuit set of a matroid")
    return M


def parallel_connection(M1: Matroid, p1: str, M2: Matroid, p2: str) -> Matroid:
    """Parallel connection of (M1, p1) and (M2, p2) at a shared basepoint.

    The basepoint keeps M1's label; remaining M2 labels are renamed on
    clash.  Circuits are C(M1) ∪ C(M2) ∪ {(C1-p1) ∪ (C2-p2)} over
    basepoint circuits, and the rank table is rebuilt from them.
    """
    i1 = M1.labels.index(p1) if p1 in M1.labels else -1
    i2 = M2.labels.index(p2) if p2 in M2.labels else -1
    if i1 < 0:
        raise MatroidError(f"unknown basepoint {p1!r} in first matroid")
    if i2 < 0:
        raise MatroidError(f"unknown basepoint {p2!r} in second matroid")
    for M, i, name in ((M1, i1, p1), (M2, i2, p2)):
        bit = 1 << i
        if M.rank_table[bit] == 0:
            raise MatroidError(f"basepoint {name!r} is a loop")
        if M.rank_table[M.E ^ bit] < M.full_rank():
            raise MatroidError(f"basepoint {name!r} is a coloop")
    n = M1.n + M2.n - 1
    if n > MAX_ELEMENTS:
        raise MatroidError(f"parallel connection too large: {n} > {MAX_ELEMENTS}")

    rest2 = [i for i in range(M2.n) if i != i2]
    labels2 = _disjoint_labels(M1.labels, tuple(M2.labels[i] for i in rest2))
    labels = M1.labels + labels2
    # position maps into the glued ground set
    map2 = {}
    for pos, i in enumerate(rest2):
        map2[i] = M1.n + pos
    map2[i2] = i1

    def lift2(C: int) -> int:
        out = 0
        m = C
        while m:
            bit = m & -m
            m ^= bit
            out |= 1 << map2[bit.bit_length() - 1]
        return out

    p_bit = 1 << i1
    c1 = list(M1.circuits())
    c2 = [lift2(C) for C in M2.circuits()]
    cross = [
        (a ^ p_bit) | (b ^ p_bit)
        for a in c1
        if a & p_bit
        for b in c2
        if b & p_bit
    ]
    return matroid_from_circuits(labels, c1 + c2 + cross)


def relax_circuit_hyperplane(M: Matroid, X: int) -> Matroid:
    """Turn a circuit-hyperplane ``X`` into a basis (rank(X) := |X|)."""
    if not M.is_circuit(X):
        raise MatroidError(f"mask {X:#x} is not a circuit")
    if not (M.is_flat(X) and M.rank_table[X] == M.full_rank() - 1):
        raise MatroidError(f"mask {X:#x} is not a hyperplane")
    table = bytearray(M.rank_table)
    table[X] = X.bit_count()
    return Matroid(M.labels, bytes(table))


# ---------------------------------------------------------------------------
# cyclic-flat synthesis (Z0-Z3)


@dataclass(frozen=True)
class ZViolation:
    """Which cyclic-flat axiom failed, with the offending member masks."""

    axiom: str
    witness: tuple[int, ...]


class ZAxiomError(MatroidError):
    """A candidate cyclic-flat family failed one of Z0-Z3."""

    def __init__(self, violation: ZViolation):
        super().__init__(
            f"cyclic-flat axiom {violation.axiom} violated at masks "
            f"{tuple(hex(w) for w in violation.witness)}"
        )
        self.violation = violation


@dataclass(frozen=True)
class CyclicFlatFamily:
    """Candidate lattice of (subset mask, rank) pairs over labeled ground set."""

    labels: tuple[str, ...]
    entries: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(
            self, "entries", tuple((int(m), int(r)) for m, r in self.entries)
        )
        full = (1 << len(self.labels)) - 1
        masks = [m for m, _ in self.entries]
        if len(set(masks)) != len(masks):
            raise MatroidError("cyclic-flat members must be distinct")
        for m, r in self.entries:
            if m & ~full:
                raise MatroidError(f"member {m:#x} not within ground set")
            if r < 0:
                raise MatroidError("ranks must be nonnegative")

    def mask(self, names: Iterable[str]) -> int:
        idx = {lab: i for i, lab in enumerate(self.labels)}
        out = 0
        for name in names:
            out |= 1 << idx[name]
        return out


def _meet(members: list[int], X: int, Y: int) -> int | None:
    below = [Z for Z in members if Z & ~(X & Y) == 0]
    for m in below:
        if all(z & ~m == 0 for z in below):
            return m
    return None


def _join(members: list[int], X: int, Y: int) -> int | None:
    above = [Z for Z in members if (X | Y) & ~Z == 0]
    for j in above:
        if all(j & ~z == 0 for z in above):
            return j
    return None


def validate_z_axioms(family: CyclicFlatFamily) -> ZViolation | None:
    """Check axioms Z0-Z3 on a candidate cyclic-flat family.

    Meet/join are resolved inside the family by inclusion: the unique
    maximal member below X ∩ Y and the unique minimal member above
    X ∪ Y.  Returns the first violation in (Z0, Z1, Z2, Z3) order, or
    ``None`` when the family defines a matroid.
    """
    entries = family.entries
    if not entries:
        return ZViolation("Z1", ())
    members = [m for m, _ in entries]
    rank = dict(entries)

    for X, Y in itertools.combinations(members, 2):
        if _meet(members, X, Y) is None or _join(members, X, Y) is None:
            return ZViolation("Z0", (X, Y))

    bottoms = [m for m in members if not any(z & ~m == 0 and z != m for z in members)]
    bottom = min(bottoms, key=lambda m: (m.bit_count(), m))
    if len(bottoms) > 1:
        return ZViolation("Z0", tuple(sorted(bottoms)[:2]))
    if rank[bottom] != 0:
        return ZViolation("Z1", (bottom,))

    for X, Y in itertools.permutations(members, 2):
        if X & ~Y == 0 and X != Y:  # X ⊊ Y
            diff = rank[Y] - rank[X]
            if not 0 < diff < (Y & ~X).bit_count():
                return ZViolation("Z2", (X, Y))

    for X, Y in itertools.combinations(members, 2):
        mt = _meet(members, X, Y)
        jn = _join(members, X, Y)
        lhs = rank[X] + rank[Y]
        rhs = rank[jn] + rank[mt] + ((X & Y) & ~mt).bit_count()
        if lhs < rhs:
            return ZViolation("Z3", (X, Y))
    return None


def from_cyclic_flats(family: CyclicFlatFamily) -> Matroid:
    """Synthesize the matroid whose cyclic flats are exactly ``family``.

    Validates Z0-Z3 first, then builds rank(X) = min over members (Z, r)
    of r + |X - Z| and confirms both the rank axioms and the exact
    round trip of cyclic flats (sets and ranks).
    """
    v = validate_z_axioms(family)
    if v is not None:
        raise ZAxiomError(v)
    n = len(family.labels)
    if n > MAX_ELEMENTS:
        raise MatroidError(f"ground set too large: {n} > {MAX_ELEMENTS}")
    entries = family.entries
    table = bytearray(1 << n)
    for X in range(1 << n):
        table[X] = min(r + (X & ~Z).bit_count() for Z, r in entries)
    M = Matroid(family.labels, bytes(table))
    if set(M.cyclic_flats()) != set(entries):
        raise MatroidError("synthesized matroid does not reproduce the family")
    return M


def circuits_from_cyclic_flats(family: CyclicFlatFamily) -> tuple[int, ...]:
    """Circuits directly from the family: minimal S with S ⊆ Z, |S| = r(Z)+1."""
    v = validate_z_axioms(family)
    if v is not None:
        raise ZAxiomError(v)
    cand: set[int] = set()
    for Z, r in family.entries:
        bits = [i for i in range(Z.bit_length()) if Z >> i & 1]
        if r + 1 > len(bits):
            continue
        for combo in itertools.combinations(bits, r + 1):
            mask = 0
            for i in combo:
                mask |= 1 << i
            cand.add(mask)
    minimal = [
        S
        for S in cand
        if not any(T != S and T & ~S == 0 for T in cand)
    ]
    return tuple(sorted(minimal, key=lambda c: (c.bit_count(), c)))


# ---------------------------------------------------------------------------
# named catalog


def _fano() -> Matroid:
    lines = [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5)]
    line_masks = {sum(1 << i for i in line) for line in lines}
    table = bytearray(1 << 7)
    for A in range(1 << 7):
        pc = A.bit_count()
        if pc <= 2:
            table[A] = pc
        elif pc == 3:
            table[A] = 2 if A in line_masks else 3
        else:
            table[A] = 3
    return Matroid(tuple(f"f{i + 1}" for i in range(7)), bytes(table))


def _k23_graph() -> Multigraph:
    # vertices {0,1} vs {2,3,4}
    edges = [(0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (1, 4)]
    return Multigraph(5, tuple(edges))


def _k33_graph() -> Multigraph:
    edges = [(u, v) for u in (0, 1, 2) for v in (3, 4, 5)]
    return Multigraph(6, tuple(edges))


def _wheel4_rim_deleted() -> Multigraph:
    # hub 0, rim 1-4; one rim edge (1,2) removed
    edges = [(0, 1), (0, 2), (0, 3), (0, 4), (2, 3), (3, 4), (4, 1)]
    return Multigraph(5, tuple(edges))


def _theta_graph(n: int, k: int) -> Multigraph:
    """Two vertices joined by internally disjoint paths of lengths k, n-k, n-k."""
    edges = []
    labels = []
    nv = 2
    u, w = 0, 1

    def add_path(length, prefix):
        nonlocal nv
        prev = u
        for i in range(length - 1):
            edges.append((prev, nv))
            labels.append(f"{prefix}{i + 1}")
            prev = nv
            nv += 1
        edges.append((prev, w))
        labels.append(f"{prefix}{length}")

    add_path(k, "p")
    add_path(n - k, "x")
    add_path(n - k, "y")
    return Multigraph(nv, tuple(edges), tuple(labels))


def mn_family(n: int, k: int) -> Matroid:
    """M_n(k): rank-n truncation of the theta-graph cycle matroid.

    For k = 0 the theta description degenerates, so the matroid is built
    as the rank-n truncation of the direct sum of two n-circuits.
    """
    if k < 0 or n < k + 2:
        raise MatroidError(f"M_n(k) needs n >= k+2 >= 2, got n={n}, k={k}")
    if 2 * n - k > MAX_ELEMENTS:
        raise MatroidError(f"M_{n}({k}) needs {2 * n - k} elements > {MAX_ELEMENTS}")
    if k == 0:
        base = direct_sum(circuit_matroid(n, "x"), circuit_matroid(n, "y"))
    else:
        base = cycle_matroid(_theta_graph(n, k))
    return truncate(base, n)


def nn_family(n: int, k: int) -> Matroid:
    """N_n(k): rank-n truncation of a (k+2)-circuit with two (n-k)-circuits
    glued on by parallel connection at the distinct elements c1 and c2.

    The central circuit carries labels c1..c{k+2}; contracting any
    non-basepoint central element (c3, say) yields P_{n-1}(k).
    """
    if not (n >= k + 3 >= 5):
        raise MatroidError(f"N_n(k) needs n >= k+3 >= 5, got n={n}, k={k}")
    if 2 * n - k > MAX_ELEMENTS:
        raise MatroidError(f"N_{n}({k}) needs {2 * n - k} elements > {MAX_ELEMENTS}")
    central = circuit_matroid(k + 2, "c")
    glued = parallel_connection(central, "c1", circuit_matroid(n - k, "u"), "u1")
    glued = parallel_connection(glued, "c2", circuit_matroid(n - k, "v"), "v1")
    return truncate(glued, n)


def pn_family(n: int, k: int) -> Matroid:
    """P_n(k): rank-n truncation of a (k+1)-circuit with two (n-k+1)-circuits
    glued on by parallel connection at the distinct elements c1 and c2."""
    if not (n >= k + 2 >= 4):
        raise MatroidError(f"P_n(k) needs n >= k+2 >= 4, got n={n}, k={k}")
    if 2 * n - k + 1 > MAX_ELEMENTS:
        raise MatroidError(
            f"P_{n}({k}) needs {2 * n - k + 1} elements > {MAX_ELEMENTS}"
        )
    central = circuit_matroid(k + 1, "c")
    glued = parallel_connection(central, "c1", circuit_matroid(n - k + 1, "u"), "u1")
    glued = parallel_connection(glued, "c2", circuit_matroid(n - k + 1, "v"), "v1")
    return truncate(glued, n)


def notk_cyclic_flats(k: int) -> CyclicFlatFamily:
    """Cyclic-flat table of the rank-(2k-1) counterexample matroid.

    Ground set A ∪ B ∪ C ∪ {e} with A = {a1..a_{k-1}}, B, C alike and
    D = {e, a1, b1, c1}; members are ∅, the three symmetric differences
    with D at rank k, C_a = A ∪ C and C_b = B ∪ C at rank 2k-3, their
    unions with D at rank 2k-2, and everything at rank 2k-1.

    The family always violates axiom Z3: the two rank-k members A△D and
    B△D meet in the two elements {e, c1}, their lattice meet is ∅ and
    their join is the full set, so Z3 demands 2k >= (2k-1) + 2.  No rank
    reassignment on these nine sets repairs it either (Z2 pins the top
    three ranks to consecutive values, and the remaining pairs then
    force contradictory bounds), so :func:`from_cyclic_flats` raises for
    every k.  The family is kept because the verification harness
    documents this failure with its exact witness pair.
    """
    if k < 3:
        raise MatroidError("the construction needs k >= 3")
    labels = (
        tuple(f"a{i + 1}" for i in range(k - 1))
        + tuple(f"b{i + 1}" for i in range(k - 1))
        + tuple(f"c{i + 1}" for i in range(k - 1))
        + ("e",)
    )
    if len(labels) > MAX_ELEMENTS:
        raise MatroidError(f"needs {len(labels)} elements > {MAX_ELEMENTS}")
    idx = {lab: i for i, lab in enumerate(labels)}

    def mask(names):
        out = 0
        for nm in names:
            out |= 1 << idx[nm]
        return out

    A = mask(f"a{i + 1}" for i in range(k - 1))
    B = mask(f"b{i + 1}" for i in range(k - 1))
    C = mask(f"c{i + 1}" for i in range(k - 1))
    D = mask(["e", "a1", "b1", "c1"])
    Ca = A | C
    Cb = B | C
    E = A | B | C | D
    entries = (
        (0, 0),
        (C ^ D, k),
        (A ^ D, k),
        (B ^ D, k),
        (Ca, 2 * k - 3),
        (Cb, 2 * k - 3),
        (Ca | D, 2 * k - 2),
        (Cb | D, 2 * k - 2),
        (E, 2 * k - 1),
    )
    return CyclicFlatFamily(labels, entries)


def notk_example(k: int) -> Matroid:
    """Attempt the matroid synthesis for :func:`notk_cyclic_flats`.

    Intended as a k-closure-laminar matroid (k >= 4) whose contraction
    at ``e`` is not k-closure-laminar; the defining family fails the
    cyclic-flat lattice axioms (see :func:`notk_cyclic_flats`), so this
    always raises :class:`ZAxiomError` carrying the witness pair."""
    if k < 4:
        raise MatroidError("notk_example needs k >= 4")
    return from_cyclic_flats(notk_cyclic_flats(k))


def sec1_pc_example(k: int) -> Matroid:
    """(k+1)-circuit with triangles glued by parallel connection at d1, d2:
    k-laminar but not k-closure-laminar (k >= 2)."""
    if k < 2:
        raise MatroidError("sec1_pc_example needs k >= 2")
    if k + 5 > MAX_ELEMENTS:
        raise MatroidError(f"needs {k + 5} elements > {MAX_ELEMENTS}")
    central = circuit_matroid(k + 1, "d")
    out = parallel_connection(central, "d1", circuit_matroid(3, "t"), "t1")
    out = parallel_connection(out, "d2", circuit_matroid(3, "s"), "s1")
    return out


def named_matroid(name: str, n: int | None = None, k: int | None = None) -> Matroid:
    """Build a catalog matroid by identifier.

    Parametric families (``mn``, ``nn``, ``pn`` need n and k; ``notk``
    and ``sec1pc`` need k; ``uniform`` reads rank from k and size from
    n).  Fixed matroids: ``mk23``, ``mk23minus``, ``mk4``, ``f7``,
    ``f7star``, ``mstark33``, ``wheel4rimdel``.
    """
    key = name.strip().lower().replace("-", "").replace("_", "")

    def need(*params):
        for label, value in params:
            if value is None:
                raise MatroidError(f"family {name!r} requires parameter {label}")

    if key == "mn":
        need(("n", n), ("k", k))
        return mn_family(n, k)
    if key == "nn":
        need(("n", n), ("k", k))
        return nn_family(n, k)
    if key == "pn":
        need(("n", n), ("k", k))
        return pn_family(n, k)
    if key == "notkexample" or key == "notk":
        need(("k", k),)
        return notk_example(k)
    if key == "sec1pcexample" or key == "sec1pc":
        need(("k", k),)
        return sec1_pc_example(k)
    if key == "uniform":
        need(("n", n), ("k", k))
        return uniform(k, n)
    if key == "mk23":
        return cycle_matroid(_k23_graph())
    if key == "mk23minus":
        M = cycle_matroid(_k23_graph())
        X = next(C for C in M.circuits() if M.rank_table[C] == M.full_rank() - 1)
        return relax_circuit_hyperplane(M, X)
    if key == "mk4":
        return cycle_matroid(Multigraph(4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))))
    if key == "f7":
        return _fano()
    if key == "f7star":
        return _fano().dual()
    if key == "mstark33":
        return cycle_matroid(_k33_graph()).dual()
    if key == "wheel4rimdel":
        return cycle_matroid(_wheel4_rim_deleted())
    raise MatroidError(f"unknown catalog matroid {name!r}")


NAMED_FIXED = (
    "mk23",
    "mk23minus",
    "mk4",
    "f7",
    "f7star",
    "mstark33",
    "wheel4rimdel",
)
