"""Finite quandles as explicit operation tables."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional


@dataclass(frozen=True)
class AxiomViolation:
    """First failing axiom with a lexicographically minimal witness."""

    axiom: str
    witness: tuple[int, ...]


class InvalidTable(ValueError):
    """A loaded table fails its axioms."""

    def __init__(self, violation):
        if isinstance(violation, str):
            super().__init__(violation)
            self.violation = None
        else:
            super().__init__(f"{violation.axiom} fails at {violation.witness}")
            self.violation = violation


class NotASubquandle(ValueError):
    """The given subset is not closed under the operation and its inverse."""


class Partition:
    """A partition of element indices, canonicalized.

    Blocks are sorted tuples ordered by their minimum, so equal partitions
    compare equal and every report is reproducible.
    """

    __slots__ = ("blocks",)

    def __init__(self, blocks: Iterable[Iterable[int]]):
        cleaned = sorted(tuple(sorted(set(b))) for b in blocks if b)
        object.__setattr__(self, "blocks", tuple(cleaned))

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    def sizes(self) -> tuple[int, ...]:
        return tuple(sorted(len(b) for b in self.blocks))

    def block_of(self, x: int) -> tuple[int, ...]:
        for b in self.blocks:
            if x in b:
                return b
        raise KeyError(x)

    def refines(self, other: "Partition") -> bool:
        """Every block here sits inside a single block of `other`."""
        owner = {}
        for i, b in enumerate(other.blocks):
            for x in b:
                owner[x] = i
        for b in self.blocks:
            if any(x not in owner for x in b):
                return False
            if len({owner[x] for x in b}) != 1:
                return False
        return True

    def __eq__(self, other):
        return isinstance(other, Partition) and self.blocks == other.blocks

    def __hash__(self):
        return hash(self.blocks)

    def __len__(self):
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __repr__(self):
        return f"Partition({[list(b) for b in self.blocks]})"

    def to_json(self) -> list[list[int]]:
        return [list(b) for b in self.blocks]

    @classmethod
    def from_json(cls, data) -> "Partition":
        return cls(data)


class FiniteQuandle:
    """A quandle on {0, ..., size-1} given by its table: table[a][b] == a * b.

    The inverse table is derived by inverting each column; it is only
    meaningful when the table actually satisfies the quandle axioms.
    """

    __slots__ = ("size", "table", "inv_table", "labels")

    def __init__(self, table, labels=None):
        rows = tuple(tuple(row) for row in table)
        n = len(rows)
        if n == 0:
            raise ValueError("a quandle is non-empty")
        for row in rows:
            if len(row) != n:
                raise ValueError("table must be square")
            for x in row:
                if not 0 <= x < n:
                    raise ValueError("table entries must index elements")
        inv = [[0] * n for _ in range(n)]
        for b in range(n):
            for a in range(n):
                inv[rows[a][b]][b] = a
        self.size = n
        self.table = rows
        self.inv_table = tuple(tuple(row) for row in inv)
        self.labels = tuple(str(x) for x in labels) if labels is not None else None
        if self.labels is not None and len(self.labels) != n:
            raise ValueError("labels must match the table size")

    @classmethod
    def from_table(cls, table, labels=None, check: bool = True) -> "FiniteQuandle":
        q = cls(table, labels)
        if check:
            bad = check_axioms(q)
            if bad is not None:
                raise InvalidTable(bad)
        return q

    def op(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv_op(self, a: int, b: int) -> int:
        return self.inv_table[a][b]

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels is not None else str(a)

    def to_json(self) -> dict:
        data = {"size": self.size, "table": [list(r) for r in self.table]}
        if self.labels is not None:
            data["labels"] = list(self.labels)
        return data

    @classmethod
    def from_json(cls, data, check: bool = True) -> "FiniteQuandle":
        if not isinstance(data, dict):
            raise ValueError("expected an object with a 'table' field")
        table = data.get("table")
        if table is None:
            raise ValueError("missing 'table'")
        if "size" in data and data["size"] != len(table):
            raise ValueError("'size' disagrees with the table")
        return cls.from_table(table, data.get("labels"), check=check)

    def __repr__(self):
        return f"<FiniteQuandle size {self.size}>"


def trivial_quandle(n: int) -> FiniteQuandle:
    """The quandle with a * b == a for all a, b."""
    if n < 1:
        raise ValueError("a quandle is non-empty")
    return FiniteQuandle([[a] * n for a in range(n)])


def check_axioms(q: FiniteQuandle) -> Optional[AxiomViolation]:
    """None when the table is a quandle; otherwise the first violation.

    Checks idempotency, then column bijectivity, then right
    self-distributivity, scanning indices in increasing order.
    """
    t = q.table
    n = q.size
    for a in range(n):
        if t[a][a] != a:
            return AxiomViolation("idempotency", (a,))
    for b in range(n):
        hit = [-1] * n
        for a in range(n):
            img = t[a][b]
            if hit[img] != -1:
                return AxiomViolation("right-invertibility", (hit[img], a, b))
            hit[img] = a
    for a in range(n):
        ta = t[a]
        for b in range(n):
            ab = ta[b]
            tb = t[b]
            tab = t[ab]
            for c in range(n):
                if tab[c] != t[ta[c]][tb[c]]:
                    return AxiomViolation("self-distributivity", (a, b, c))
    return None


def op_pow(q: FiniteQuandle, a: int, n: int, b: int) -> int:
    """The n-fold operation a *^n b (n may be negative or zero).

    Walks the cycle of a under the column permutation of b, so the cost is
    the cycle length regardless of |n|.
    """
    if n == 0:
        return a
    cycle = [a]
    x = q.table[a][b]
    while x != a:
        cycle.append(x)
        x = q.table[x][b]
    return cycle[n % len(cycle)]


def column_cycle_type(q: FiniteQuandle, b: int) -> tuple[int, ...]:
    """Sorted cycle lengths of the column permutation x -> x * b."""
    seen = [False] * q.size
    out = []
    for start in range(q.size):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = q.table[x][b]
            length += 1
        out.append(length)
    return tuple(sorted(out))


def type_of(q: FiniteQuandle) -> int:
    """Least n >= 1 with a *^n b == a for all a, b.

    Equals the lcm of the column permutation orders, which avoids iterating
    over candidate exponents.
    """
    result = 1
    for b in range(q.size):
        for length in column_cycle_type(q, b):
            result = math.lcm(result, length)
    return result


def generated_subquandle(q: FiniteQuandle, seeds: Iterable[int]) -> frozenset[int]:
    """Least subset containing the seeds and closed under * and its inverse."""
    members = sorted(set(seeds))
    if not members:
        raise ValueError("generating set must be non-empty")
    memberset = set(members)
    i = 0
    while i < len(members):
        x = members[i]
        for j in range(i + 1):
            a = members[j]
            for y in (q.table[x][a], q.inv_table[x][a], q.table[a][x], q.inv_table[a][x]):
                if y not in memberset:
                    memberset.add(y)
                    members.append(y)
        i += 1
    return frozenset(memberset)


def _check_closed(q: FiniteQuandle, amb, ambset):
    for x in amb:
        for a in amb:
            if q.table[x][a] not in ambset or q.inv_table[x][a] not in ambset:
                raise NotASubquandle(f"{x} * {a} (or its inverse) leaves the subset")


def connected_components(q: FiniteQuandle, ambient: Iterable[int] | None = None) -> Partition:
    """Orbits of the ambient set under the right translations by its members.

    The ambient set must be closed under * and its inverse; orbits are found
    by breadth-first closure under x -> x * a and x -> x *^-1 a.
    """
    if ambient is None:
        amb = list(range(q.size))
        ambset = set(amb)
    else:
        amb = sorted(set(ambient))
        if not amb:
            raise ValueError("ambient set must be non-empty")
        ambset = set(amb)
        _check_closed(q, amb, ambset)
    blocks = []
    unseen = set(amb)
    for seed in amb:
        if seed not in unseen:
            continue
        block = {seed}
        frontier = [seed]
        while frontier:
            x = frontier.pop()
            for a in amb:
                for y in (q.table[x][a], q.inv_table[x][a]):
                    if y not in block:
                        block.add(y)
                        frontier.append(y)
        unseen -= block
        blocks.append(block)
    return Partition(blocks)


def is_connected(q: FiniteQuandle, ambient: Iterable[int] | None = None) -> bool:
    return len(connected_components(q, ambient)) == 1


def subquandle(q: FiniteQuandle, elements: Iterable[int]) -> FiniteQuandle:
    """The induced quandle on a closed subset, reindexed in sorted order."""
    elems = sorted(set(elements))
    if not elems:
        raise ValueError("subquandle must be non-empty")
    index = {x: i for i, x in enumerate(elems)}
    elemset = set(elems)
    _check_closed(q, elems, elemset)
    table = [[index[q.table[x][y]] for y in elems] for x in elems]
    labels = [q.labels[x] for x in elems] if q.labels is not None else None
    return FiniteQuandle(table, labels)


def _profile(q: FiniteQuandle):
    comp = connected_components(q)
    size_of = {}
    for block in comp.blocks:
        for x in block:
            size_of[x] = len(block)
    out = []
    for a in range(q.size):
        fixed_row = sum(1 for b in range(q.size) if q.table[a][b] == a)
        out.append((size_of[a], column_cycle_type(q, a), fixed_row))
    return out


def find_isomorphism(q1: FiniteQuandle, q2: FiniteQuandle) -> Optional[tuple[int, ...]]:
    """A table-transporting bijection from q1 to q2, or None.

    Backtracking over images in element-index order, pruned by per-element
    invariants (component size, column cycle type, row fixed-point count).
    The first map found in this canonical order is returned, so the result
    is reproducible.
    """
    if q1.size != q2.size:
        return None
    n = q1.size
    p1 = _profile(q1)
    p2 = _profile(q2)
    if sorted(p1) != sorted(p2):
        return None
    candidates = [[v for v in range(n) if p2[v] == p1[k]] for k in range(n)]
    t1, t2 = q1.table, q2.table
    phi = [-1] * n
    used = [False] * n

    def extend(k: int) -> bool:
        if k == n:
            return True
        for v in candidates[k]:
            if used[v]:
                continue
            phi[k] = v
            ok = True
            for x in range(k + 1):
                fx = phi[x]
                z = t1[x][k]
                if z <= k and t2[fx][v] != phi[z]:
                    ok = False
                    break
                z = t1[k][x]
                if z <= k and t2[v][fx] != phi[z]:
                    ok = False
                    break
            if ok:
                for x in range(k):
                    row = t1[x]
                    fx = phi[x]
                    for y in range(k):
                        if row[y] == k and t2[fx][phi[y]] != v:
                            ok = False
                            break
                    if not ok:
                        break
            if ok:
                used[v] = True
                if extend(k + 1):
                    return True
                used[v] = False
        phi[k] = -1
        return False

    if extend(0):
        return tuple(phi)
    return None
