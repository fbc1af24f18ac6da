"""Multiple conjugation quandles: disjoint unions of groups with a global
operation that is conjugation inside each group.

The index set of the constituent groups carries an action through the group
identities: moving an identity by right translations lands in some group,
and the orbits of that action drive both connectivity and the maximal
connected decomposition.  A finite quandle of type m induces one of these
structures on quandle-element x group-element pairs, with all groups cyclic
of order m.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .decomposition import Decomposition, iterate_refinement
from .group import FiniteGroup, cyclic_group
from .quandle import FiniteQuandle, InvalidTable, Partition, type_of


@dataclass(frozen=True)
class McqViolation:
    axiom: str
    witness: tuple[int, ...]


class MCQ:
    """Disjoint union of groups with a global * given as a carrier table.

    Carrier indices run over the groups in order; group_of maps a carrier
    index to its group index, and identity_of gives each group's identity as
    a carrier index.  Immutable after construction.
    """

    __slots__ = ("groups", "op", "offsets", "group_of", "labels", "size")

    def __init__(self, groups: Iterable[FiniteGroup], op, labels=None):
        self.groups = tuple(groups)
        if not self.groups:
            raise ValueError("need at least one group")
        offsets = [0]
        for g in self.groups:
            offsets.append(offsets[-1] + g.size)
        self.offsets = tuple(offsets)
        self.size = offsets[-1]
        rows = tuple(tuple(row) for row in op)
        if len(rows) != self.size or any(len(r) != self.size for r in rows):
            raise ValueError("operation table must be carrier x carrier")
        for row in rows:
            for x in row:
                if not 0 <= x < self.size:
                    raise ValueError("operation entries must index the carrier")
        self.op = rows
        group_of = []
        for lam, g in enumerate(self.groups):
            group_of.extend([lam] * g.size)
        self.group_of = tuple(group_of)
        self.labels = tuple(str(x) for x in labels) if labels is not None else None
        if self.labels is not None and len(self.labels) != self.size:
            raise ValueError("labels must match the carrier size")

    @property
    def group_count(self) -> int:
        return len(self.groups)

    def group_range(self, lam: int) -> range:
        return range(self.offsets[lam], self.offsets[lam + 1])

    def identity_of(self, lam: int) -> int:
        return self.offsets[lam] + self.groups[lam].identity

    def gmul(self, a: int, b: int) -> int:
        lam = self.group_of[a]
        if self.group_of[b] != lam:
            raise ValueError("group product needs both factors in one group")
        off = self.offsets[lam]
        return off + self.groups[lam].mult[a - off][b - off]

    def ginv(self, a: int) -> int:
        lam = self.group_of[a]
        off = self.offsets[lam]
        return off + self.groups[lam].inv[a - off]

    def star(self, x: int, a: int) -> int:
        return self.op[x][a]

    def star_inv(self, x: int, a: int) -> int:
        # x * (a a^-1) = x forces S_a^-1 = S_(a^-1)
        return self.op[x][self.ginv(a)]

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels is not None else str(x)

    def to_json(self) -> dict:
        data = {"groups": [g.to_json() for g in self.groups],
                "op": [list(r) for r in self.op]}
        if self.labels is not None:
            data["labels"] = list(self.labels)
        return data

    @classmethod
    def from_json(cls, data, check: bool = True) -> "MCQ":
        if not isinstance(data, dict) or "groups" not in data or "op" not in data:
            raise ValueError("expected an object with 'groups' and 'op' fields")
        groups = [FiniteGroup.from_json(g, check=check) for g in data["groups"]]
        x = cls(groups, data["op"], data.get("labels"))
        if check:
            bad = check_mcq_axioms(x)
            if bad is not None:
                raise InvalidTable(f"{bad.axiom} fails at {bad.witness}")
        return x

    def __repr__(self):
        return f"<MCQ {self.group_count} groups, carrier {self.size}>"


def check_mcq_axioms(x: MCQ) -> Optional[McqViolation]:
    """None when all four axioms hold, else the first violation.

    Axioms, in checking order: the operation restricted to one group is
    conjugation; acting by an identity is trivial and acting by a product is
    the composite of the actions; the operation is right self-distributive;
    group multiplication is equivariant, with both factors moved into one
    common group.
    """
    op = x.op
    for lam in range(x.group_count):
        for a in x.group_range(lam):
            for b in x.group_range(lam):
                if op[a][b] != x.gmul(x.gmul(x.ginv(b), a), b):
                    return McqViolation("conjugation", (a, b))
    for xx in range(x.size):
        for lam in range(x.group_count):
            if op[xx][x.identity_of(lam)] != xx:
                return McqViolation("group-action", (xx, x.identity_of(lam)))
    for xx in range(x.size):
        for lam in range(x.group_count):
            for a in x.group_range(lam):
                for b in x.group_range(lam):
                    if op[xx][x.gmul(a, b)] != op[op[xx][a]][b]:
                        return McqViolation("group-action", (xx, a, b))
    for xx in range(x.size):
        for y in range(x.size):
            xy = op[xx][y]
            for z in range(x.size):
                if op[xy][z] != op[op[xx][z]][op[y][z]]:
                    return McqViolation("self-distributivity", (xx, y, z))
    for lam in range(x.group_count):
        for a in x.group_range(lam):
            for b in x.group_range(lam):
                ab = x.gmul(a, b)
                for xx in range(x.size):
                    ax, bx = op[a][xx], op[b][xx]
                    if x.group_of[ax] != x.group_of[bx]:
                        return McqViolation("product-equivariance", (a, b, xx))
                    if op[ab][xx] != x.gmul(ax, bx):
                        return McqViolation("product-equivariance", (a, b, xx))
    return None


def conjugation_mcq(group: FiniteGroup) -> MCQ:
    """A single group with x * a = a^-1 x a."""
    n = group.size
    op = [[group.mult[group.mult[group.inv[b]][a]][b] for b in range(n)] for a in range(n)]
    return MCQ((group,), op, group.labels)


def associated_mcq(q: FiniteQuandle) -> MCQ:
    """The structure on pairs (x, g), x a quandle element and g in Z_m with m
    the quandle's type: (x, g) * (y, h) = (x *^h y, h^-1 g h).

    The conjugation part goes through the group tables rather than assuming
    commutativity, so the same code path serves nonabelian families.
    """
    m = type_of(q)
    zm = cyclic_group(m)
    n = q.size
    # pow_op[h][x][y] == x *^h y
    pow_op = [[[xx for _ in range(n)] for xx in range(n)]]
    for _ in range(m - 1):
        prev = pow_op[-1]
        pow_op.append([[q.table[prev[xx][y]][y] for y in range(n)] for xx in range(n)])
    size = n * m
    op = [[0] * size for _ in range(size)]
    for xx in range(n):
        for g in range(m):
            row = op[xx * m + g]
            for y in range(n):
                for h in range(m):
                    conj = zm.mult[zm.mult[zm.inv[h]][g]][h]
                    row[y * m + h] = pow_op[h][xx][y] * m + conj
    labels = [f"({q.label(xx)};{g})" for xx in range(n) for g in range(m)]
    return MCQ((zm,) * n, op, labels)


def lambda_orbits(x: MCQ, lambda_subset: Iterable[int] | None = None) -> Partition:
    """Orbits of the group index set under right translations of identities.

    With a subset given, only translations by elements of that subset's
    groups are used, and the moves must stay inside the subset (they always
    do for orbit blocks arising from the refinement).
    """
    if lambda_subset is None:
        lams = list(range(x.group_count))
    else:
        lams = sorted(set(lambda_subset))
        if not lams:
            raise ValueError("index subset must be non-empty")
    lamset = set(lams)
    gens = [a for lam in lams for a in x.group_range(lam)]
    blocks = []
    unseen = set(lams)
    for seed in lams:
        if seed not in unseen:
            continue
        block = {seed}
        frontier = [seed]
        while frontier:
            lam = frontier.pop()
            e = x.identity_of(lam)
            for a in gens:
                for image in (x.star(e, a), x.star_inv(e, a)):
                    mu = x.group_of[image]
                    if mu not in lamset:
                        raise ValueError("index subset is not closed under the inner action")
                    if mu not in block:
                        block.add(mu)
                        frontier.append(mu)
        unseen -= block
        blocks.append(block)
    return Partition(blocks)


@dataclass(frozen=True)
class SubMcqReport:
    """Three independent evaluations of the substructure criteria; they agree
    for every subset, and is_sub_mcq raises if they ever did not."""

    ok: bool
    by_restriction: bool
    by_intersections: bool
    by_factorization: bool


def _star_closed(x: MCQ, members: frozenset[int]) -> bool:
    return all(x.op[a][b] in members for a in members for b in members)


def is_sub_mcq(x: MCQ, subset: Iterable[int]) -> SubMcqReport:
    """Whether the subset is a substructure, with the three criteria scored
    independently: closure of the restricted operations, subgroup-or-empty
    intersections, and an explicit factorization into subgroups."""
    members = frozenset(subset)
    if not members:
        raise ValueError("subset must be non-empty")
    closed = _star_closed(x, members)
    per_group = {}
    for lam in range(x.group_count):
        part = members.intersection(x.group_range(lam))
        if part:
            per_group[lam] = part

    # (1) the restricted operations form groups: identity present, products
    # and inverses stay inside
    by_restriction = closed and all(
        x.identity_of(lam) in part
        and all(x.ginv(a) in part for a in part)
        and all(x.gmul(a, b) in part for a in part for b in part)
        for lam, part in per_group.items()
    )

    # (2) each intersection is a subgroup: nonempty and closed under the
    # product (enough in a finite group)
    by_intersections = closed and all(
        all(x.gmul(a, b) in part for a in part for b in part)
        for part in per_group.values()
    )

    # (3) the subset factors as a disjoint union of subgroups, tested with
    # the one-step criterion a b^-1
    by_factorization = closed and all(
        x.identity_of(lam) in part
        and all(x.gmul(a, x.ginv(b)) in part for a in part for b in part)
        for lam, part in per_group.items()
    )

    if not (by_restriction == by_intersections == by_factorization):
        raise RuntimeError("substructure criteria disagree; this is a bug")
    return SubMcqReport(by_intersections, by_restriction, by_intersections, by_factorization)


def generated_sub_mcq(x: MCQ, seeds: Iterable[int]) -> frozenset[int]:
    """Least subset containing the seeds closed under *, its inverse, and the
    group operations inside each constituent group."""
    members = sorted(set(seeds))
    if not members:
        raise ValueError("generating set must be non-empty")
    memberset = set(members)

    def push(y):
        if y not in memberset:
            memberset.add(y)
            members.append(y)

    i = 0
    while i < len(members):
        a = members[i]
        push(x.ginv(a))
        for j in range(i + 1):
            b = members[j]
            push(x.op[a][b])
            push(x.op[b][a])
            push(x.star_inv(a, b))
            push(x.star_inv(b, a))
            if x.group_of[a] == x.group_of[b]:
                push(x.gmul(a, b))
                push(x.gmul(b, a))
        i += 1
    return frozenset(memberset)


@dataclass(frozen=True)
class McqDecomposition:
    """Refinement tower over the group index set, plus the carrier partition
    obtained by expanding each index block to its full groups."""

    index_tree: Decomposition
    carrier_partition: Partition

    def to_json(self) -> dict:
        data = self.index_tree.to_json()
        data["carrier_blocks"] = self.carrier_partition.to_json()
        return data

    @classmethod
    def from_json(cls, data) -> "McqDecomposition":
        return cls(Decomposition.from_json(data), Partition.from_json(data["carrier_blocks"]))


def maximal_mcq_decomposition(x: MCQ, max_iter: int | None = None) -> McqDecomposition:
    """Iterate index-set orbit refinement to its fixed point.

    Fixed-point blocks expand to unions of whole groups: the carrier blocks
    are maximal connected substructures, with no proper subgroup surviving at
    the fixed point.
    """
    start = Partition([range(x.group_count)])
    tree = iterate_refinement(
        start, lambda block: lambda_orbits(x, block).blocks, max_iter
    )
    carrier = Partition(
        [i for lam in block for i in x.group_range(lam)] for block in tree.final.blocks
    )
    return McqDecomposition(tree, carrier)
