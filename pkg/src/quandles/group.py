"""Finite groups as multiplication tables, conjugacy classes, conjugation quandles."""

from __future__ import annotations

import itertools
from typing import Optional

from .quandle import FiniteQuandle, InvalidTable, Partition


class FiniteGroup:
    """A group on {0, ..., size-1} given by its multiplication table.

    Construction derives the identity and inverses (raising ValueError when
    they do not exist); full associativity is checked separately by
    check_group, since it is cubic in the order.
    """

    __slots__ = ("size", "mult", "inv", "identity", "labels")

    def __init__(self, mult, identity: int | None = None, labels=None):
        rows = tuple(tuple(row) for row in mult)
        n = len(rows)
        if n == 0:
            raise ValueError("a group is non-empty")
        for row in rows:
            if len(row) != n:
                raise ValueError("multiplication table must be square")
            for x in row:
                if not 0 <= x < n:
                    raise ValueError("table entries must index elements")
        if identity is None:
            identity = next(
                (e for e in range(n)
                 if all(rows[e][x] == x == rows[x][e] for x in range(n))),
                None,
            )
            if identity is None:
                raise ValueError("table has no identity element")
        elif not all(rows[identity][x] == x == rows[x][identity] for x in range(n)):
            raise ValueError("declared identity is not an identity")
        inv = [-1] * n
        for a in range(n):
            for b in range(n):
                if rows[a][b] == identity and rows[b][a] == identity:
                    inv[a] = b
                    break
            if inv[a] < 0:
                raise ValueError(f"element {a} has no inverse")
        self.size = n
        self.mult = rows
        self.identity = identity
        self.inv = tuple(inv)
        self.labels = tuple(str(x) for x in labels) if labels is not None else None
        if self.labels is not None and len(self.labels) != n:
            raise ValueError("labels must match the table size")

    def mul(self, a: int, b: int) -> int:
        return self.mult[a][b]

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels is not None else str(a)

    def to_json(self) -> dict:
        data = {"size": self.size, "mult": [list(r) for r in self.mult],
                "identity": self.identity}
        if self.labels is not None:
            data["labels"] = list(self.labels)
        return data

    @classmethod
    def from_json(cls, data, check: bool = True) -> "FiniteGroup":
        if not isinstance(data, dict) or "mult" not in data:
            raise ValueError("expected an object with a 'mult' field")
        g = cls(data["mult"], data.get("identity"), data.get("labels"))
        if "size" in data and data["size"] != g.size:
            raise ValueError("'size' disagrees with the table")
        if check:
            message = check_group(g)
            if message is not None:
                raise InvalidTable(message)
        return g

    def __repr__(self):
        return f"<FiniteGroup size {self.size}>"


def check_group(g: FiniteGroup) -> Optional[str]:
    """None for a genuine group, otherwise a message naming the failure."""
    n = g.size
    for a in range(n):
        for b in range(n):
            ab = g.mult[a][b]
            for c in range(n):
                if g.mult[ab][c] != g.mult[a][g.mult[b][c]]:
                    return f"associativity fails at ({a}, {b}, {c})"
    return None


def _cycle_label(perm) -> str:
    """Disjoint cycle notation on 1-based points; the identity is 'e'."""
    n = len(perm)
    seen = [False] * n
    cycles = []
    for start in range(n):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        j = perm[start]
        while j != start:
            cyc.append(j)
            seen[j] = True
            j = perm[j]
        cycles.append(cyc)
    if not cycles:
        return "e"
    return "".join("(" + " ".join(str(x + 1) for x in cyc) + ")" for cyc in cycles)


def symmetric_group(n: int) -> FiniteGroup:
    """All permutations of n points, indexed lexicographically by one-line
    notation, so index 0 is the identity.

    The product p * q applies p first and q second.  Labels use disjoint
    cycle notation.  Degrees above 6 are refused: the tables grow
    factorially and everything downstream is meant for desk-scale objects.
    """
    if not 1 <= n <= 6:
        raise ValueError("supported degrees are 1..6")
    perms = sorted(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    mult = [[index[tuple(q[p[i]] for i in range(n))] for q in perms] for p in perms]
    labels = [_cycle_label(p) for p in perms]
    return FiniteGroup(mult, identity=0, labels=labels)


def cyclic_group(n: int) -> FiniteGroup:
    """The integers mod n under addition."""
    if n < 1:
        raise ValueError("order must be positive")
    mult = [[(a + b) % n for b in range(n)] for a in range(n)]
    return FiniteGroup(mult, identity=0, labels=[str(a) for a in range(n)])


def conj_quandle(g: FiniteGroup) -> FiniteQuandle:
    """The quandle on the group with a * b = b^-1 a b."""
    n = g.size
    table = [[g.mult[g.mult[g.inv[b]][a]][b] for b in range(n)] for a in range(n)]
    return FiniteQuandle(table, g.labels)


def conjugacy_classes(g: FiniteGroup) -> Partition:
    """Partition of the group into conjugacy classes (computed directly from
    the group tables, independently of any quandle machinery)."""
    n = g.size
    unseen = set(range(n))
    blocks = []
    for a in range(n):
        if a not in unseen:
            continue
        block = {g.mult[g.mult[g.inv[h]][a]][h] for h in range(n)}
        unseen -= block
        blocks.append(block)
    return Partition(blocks)
