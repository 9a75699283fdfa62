"""Bounded Todd-Coxeter coset enumeration over the trivial subgroup.

HLT strategy: every live coset, in order, has each relator scanned and filled
from it, then any still-undefined entries in its row are defined.
Coincidences are merged immediately through a union-find forest.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .diagram import LinkDiagram, split_components
from .homology import diagram_homology, diagram_presentation
from .presentation import GroupPresentation

DEFAULT_MAX_COSETS = 10_000
# total definitions allowed per live coset of budget; bounds runs that churn
# through coincidences without ever exceeding the live budget
DEFINITION_FACTOR = 50


class Status(str, enum.Enum):
    CLOSED = "Closed"
    EXCEEDED = "Exceeded"


class BudgetExceeded(Exception):
    pass


@dataclass
class CosetTable:
    """``rows[c][2*g]`` is coset ``c`` times generator ``g``, ``rows[c][2*g+1]``
    times its inverse. Row 0 is the trivial coset."""

    status: Status
    limit: int
    rows: list[list[int]] = field(default_factory=list, repr=False)

    @property
    def order(self) -> int | None:
        return len(self.rows) if self.status is Status.CLOSED else None

    def to_json(self) -> dict:
        out = {"status": self.status.value}
        if self.status is Status.CLOSED:
            out["order"] = self.order
        else:
            out["limit"] = self.limit
        return out


class _Enumerator:
    def __init__(self, n_gens, relators, max_cosets):
        self.ncols = 2 * n_gens
        self.relators = relators
        self.max_cosets = max_cosets
        self.max_defined = max(max_cosets * DEFINITION_FACTOR, 1000)
        self.table = [[None] * self.ncols]
        self.parent = [0]
        self.live = 1
        self.queue = []

    @staticmethod
    def inv(x):
        return x ^ 1

    def find(self, c):
        root = c
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[c] != root:
            self.parent[c], c = root, self.parent[c]
        return root

    def is_live(self, c):
        return self.parent[c] == c

    def define(self, c, x):
        if self.live >= self.max_cosets or len(self.table) >= self.max_defined:
            raise BudgetExceeded
        n = len(self.table)
        self.table.append([None] * self.ncols)
        self.parent.append(n)
        self.live += 1
        self.table[c][x] = n
        self.table[n][self.inv(x)] = c

    def merge(self, a, b):
        a, b = self.find(a), self.find(b)
        if a == b:
            return
        a, b = min(a, b), max(a, b)
        self.parent[b] = a
        self.live -= 1
        self.queue.append(b)

    def coincidence(self, a, b):
        self.merge(a, b)
        while self.queue:
            e = self.queue.pop(0)
            for x in range(self.ncols):
                f = self.table[e][x]
                if f is None:
                    continue
                ix = self.inv(x)
                if self.table[f][ix] == e:
                    self.table[f][ix] = None
                e1, f1 = self.find(e), self.find(f)
                if self.table[e1][x] is not None:
                    self.merge(f1, self.table[e1][x])
                elif self.table[f1][ix] is not None:
                    self.merge(e1, self.table[f1][ix])
                else:
                    self.table[e1][x] = f1
                    self.table[f1][ix] = e1

    def scan_and_fill(self, c, word):
        t = self.table
        f, b = c, c
        i, j = 0, len(word) - 1
        while True:
            while i <= j and t[f][word[i]] is not None:
                f = t[f][word[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and t[b][self.inv(word[j])] is not None:
                b = t[b][self.inv(word[j])]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                t[f][word[i]] = b
                t[b][self.inv(word[i])] = f
                return
            self.define(f, word[i])

    def run(self):
        c = 0
        while c < len(self.table):
            if self.is_live(c):
                for w in self.relators:
                    self.scan_and_fill(c, w)
                    if not self.is_live(c):
                        break
                else:
                    for x in range(self.ncols):
                        if self.table[c][x] is None:
                            self.define(c, x)
            c += 1

    def compact(self):
        live = [c for c in range(len(self.table)) if self.is_live(c)]
        index = {c: k for k, c in enumerate(live)}
        return [[index[self.find(e)] for e in self.table[c]] for c in live]


def todd_coxeter(n_gens: int, relators, max_cosets: int = DEFAULT_MAX_COSETS) -> CosetTable:
    """Enumerate cosets of the trivial subgroup.

    ``relators`` are sequences of column indices: ``2*g`` for generator ``g``
    and ``2*g + 1`` for its inverse.
    """
    if max_cosets < 1:
        raise ValueError("max_cosets must be positive")
    if n_gens < 0:
        raise ValueError("negative generator count")
    relators = [list(w) for w in relators if len(w)]
    for w in relators:
        if any(not 0 <= x < 2 * n_gens for x in w):
            raise ValueError(f"relator {w} refers to an unknown generator")
    e = _Enumerator(n_gens, relators, max_cosets)
    try:
        e.run()
    except BudgetExceeded:
        return CosetTable(Status.EXCEEDED, max_cosets)
    return CosetTable(Status.CLOSED, max_cosets, e.compact())


def enumerate_cosets(p: GroupPresentation, max_cosets: int = DEFAULT_MAX_COSETS) -> CosetTable:
    col = {g: j for j, g in enumerate(p.generators)}
    words = []
    for r in p.relators:
        for g, _ in r.syllables:
            if g not in col:
                raise ValueError(f"relator uses {g}, which is not a generator")
        words.append([2 * col[g] + (e < 0) for g, e in r.reduced.syllables])
    return todd_coxeter(len(p.generators), words, max_cosets)


def table_is_consistent(table: CosetTable, relator_columns) -> bool:
    """Every relator, read from every coset, returns to that coset."""
    rows = table.rows
    for c in range(len(rows)):
        if any(x is None for x in rows[c]):
            return False
        for w in relator_columns:
            d = c
            for x in w:
                d = rows[d][x]
            if d != c:
                return False
    return True


class Agreement(str, enum.Enum):
    CONSISTENT = "Consistent"
    INCONSISTENT = "Inconsistent"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class CrossCheck:
    status: Agreement
    orders: tuple[int | None, ...]
    details: str = ""

    def to_json(self) -> dict:
        return {"status": self.status.value, "orders": list(self.orders), "details": self.details}


def cross_check(d: LinkDiagram, max_cosets: int = DEFAULT_MAX_COSETS, color: str = "a") -> CrossCheck:
    """Compare coset enumeration of each split component against H1 and the verdict."""
    from .orderability import Status as Verdict
    from .orderability import decide

    verdict = decide(d, color)
    orders = []
    problems = []
    for k, part in enumerate(split_components(d)):
        table = enumerate_cosets(diagram_presentation(part, color), max_cosets)
        orders.append(table.order)
        if table.order is None:
            continue
        h = diagram_homology(part, color)
        if h.infinite or table.order % h.order:
            problems.append(f"component {k}: coset order {table.order} not divisible by |H1| = {h.order}")
        sub = verdict.components[k].status
        if (table.order == 1) != (sub is Verdict.LEFT_ORDERABLE):
            problems.append(f"component {k}: coset order {table.order} but verdict {sub.value}")
    if problems:
        return CrossCheck(Agreement.INCONSISTENT, tuple(orders), "; ".join(problems))
    if any(o is None for o in orders):
        return CrossCheck(Agreement.INCONCLUSIVE, tuple(orders), "coset budget exceeded")
    closed_trivial = all(o == 1 for o in orders)
    if closed_trivial != (verdict.status is Verdict.LEFT_ORDERABLE):
        return CrossCheck(Agreement.INCONSISTENT, tuple(orders), f"verdict {verdict.status.value}")
    return CrossCheck(Agreement.CONSISTENT, tuple(orders))
