"""Exact integer linear algebra for first homology and the link determinant.

Everything here runs on Python ints; no floating point is involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .checkerboard import build_white_graph, color_faces
from .diagram import LinkDiagram
from .presentation import GroupPresentation, abelianization_matrix, build_presentation


@dataclass(frozen=True)
class IntegerMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entries do not match the declared shape")
        for r in self.entries:
            for x in r:
                if not isinstance(x, int):
                    raise TypeError(f"entries must be ints, got {type(x).__name__}")

    @classmethod
    def from_rows(cls, rows, cols: int | None = None) -> IntegerMatrix:
        rows = [tuple(int(x) for x in r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, tuple(rows))

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def transpose(self) -> IntegerMatrix:
        return IntegerMatrix(self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else ())

    def delete(self, row: int, col: int) -> IntegerMatrix:
        rows = [r[:col] + r[col + 1:] for i, r in enumerate(self.entries) if i != row]
        return IntegerMatrix.from_rows(rows, cols=self.cols - 1)


@dataclass(frozen=True)
class SnfResult:
    diagonal: tuple[int, ...]

    @property
    def rank(self) -> int:
        return sum(1 for x in self.diagonal if x)


def smith_normal_form(m: IntegerMatrix) -> SnfResult:
    """Invariant factors d1 | d2 | ... on the diagonal, zeros last.

    Pivots are the smallest nonzero magnitude left in the trailing block,
    which keeps intermediate entries small.
    """
    a = m.tolist()
    nr, nc = m.rows, m.cols
    diag = []
    for t in range(min(nr, nc)):
        while True:
            pivot = None
            for i in range(t, nr):
                for j in range(t, nc):
                    if a[i][j] and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                break
            i, j = pivot
            a[t], a[i] = a[i], a[t]
            for row in a:
                row[t], row[j] = row[j], row[t]
            p = a[t][t]
            clean = True
            for i in range(t + 1, nr):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    clean = False
            for j in range(t + 1, nc):
                q = a[t][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    clean = False
            if not clean:
                continue
            # divisibility: fold an offending row into the pivot row and retry
            bad = next(
                (i for i in range(t + 1, nr) for j in range(t + 1, nc) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad])]
        if pivot is None:
            break
        diag.append(abs(a[t][t]))
    diag.extend([0] * (min(nr, nc) - len(diag)))
    return SnfResult(tuple(diag))


@dataclass(frozen=True)
class H1Group:
    """Cokernel of a relation matrix: Z^betti plus the torsion factors."""

    invariant_factors: tuple[int, ...]
    betti: int

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(x for x in self.invariant_factors if x > 1)

    @property
    def infinite(self) -> bool:
        return self.betti > 0

    @property
    def order(self) -> int | None:
        """Group order, or None when the group is infinite."""
        return None if self.infinite else prod(self.torsion)

    def to_json(self) -> dict:
        return {
            "determinant": 0 if self.infinite else self.order,
            "invariant_factors": list(self.torsion) + [0] * self.betti,
            "infinite": self.infinite,
        }


def cokernel(m: IntegerMatrix) -> H1Group:
    snf = smith_normal_form(m)
    return H1Group(tuple(x for x in snf.diagonal if x), m.cols - snf.rank)


def h1_order(p: GroupPresentation) -> H1Group:
    return cokernel(abelianization_matrix(p))


def diagram_presentation(d: LinkDiagram, color: str = "a", root: int | None = None) -> GroupPresentation:
    """White-graph presentation of a connected diagram, or of a lone unknot."""
    from .checkerboard import trivial_white_graph

    if d.n_crossings == 0:
        if d.pd.unknotted_extras != 1:
            raise ValueError("expected a connected diagram")
        return build_presentation(trivial_white_graph(), d)
    c = color_faces(d, color)
    return build_presentation(build_white_graph(d, c, root), d)


def diagram_homology(d: LinkDiagram, color: str = "a", root: int | None = None) -> H1Group:
    return h1_order(diagram_presentation(d, color, root))


def determinant(d: LinkDiagram, color: str = "a", root: int | None = None) -> int:
    """Order of H1 of the branched double cover; 0 when that group is infinite."""
    h = diagram_homology(d, color, root)
    return 0 if h.infinite else h.order
