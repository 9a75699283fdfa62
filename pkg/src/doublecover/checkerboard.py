"""Checkerboard colorings, crossing signs and the rooted signed white graph."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .diagram import Dart, LinkDiagram

WHITE = "white"
BLACK = "black"

_CHOICES = {
    "a": True,
    "first-face-white": True,
    "b": False,
    "first-face-black": False,
}


class ColoringError(ValueError):
    pass


@dataclass(frozen=True)
class Coloring:
    white: frozenset
    black: frozenset

    def color(self, face: int) -> str:
        return WHITE if face in self.white else BLACK

    def swapped(self) -> Coloring:
        return Coloring(self.black, self.white)


def _require_connected(d: LinkDiagram):
    if d.n_crossings == 0 or len(d.components) != 1 or d.pd.unknotted_extras:
        raise ValueError("expected a connected diagram with at least one crossing")


def color_faces(d: LinkDiagram, choice: str = "a") -> Coloring:
    """Properly 2-color the faces by BFS across arcs.

    The face holding dart (0, 0) is white for ``choice`` "a" (alias
    "first-face-white") and black for "b" ("first-face-black").
    """
    if choice not in _CHOICES:
        raise ValueError(f"unknown color choice {choice!r}")
    _require_connected(d)
    adjacent = {f: set() for f in range(len(d.faces))}
    for dart in d.darts:
        # the corners on the two sides of an arc end
        f, g = d.face_of[dart], d.face_of[Dart(dart.crossing, (dart.position + 1) % 4)]
        adjacent[f].add(g)
        adjacent[g].add(f)

    first = d.face_of[Dart(0, 0)]
    side = {first: _CHOICES[choice]}
    queue = deque([first])
    while queue:
        f = queue.popleft()
        for g in sorted(adjacent[f]):
            if g not in side:
                side[g] = not side[f]
                queue.append(g)
            elif side[g] == side[f]:
                raise ColoringError(f"faces {f} and {g} share an arc but cannot be colored apart")
    white = frozenset(f for f, s in side.items() if s)
    black = frozenset(f for f, s in side.items() if not s)
    return Coloring(white, black)


def crossing_sign(d: LinkDiagram, c: Coloring, crossing: int) -> int:
    """+1 when turning the over-strand counterclockwise sweeps the white corners.

    Those are the corners between positions 1 -> 2 and 3 -> 0, i.e. the
    corners recorded by darts 2 and 0.
    """
    return 1 if d.face_of[Dart(crossing, 0)] in c.white else -1


@dataclass(frozen=True)
class WhiteEdge:
    u: int
    v: int
    sign: int
    crossing: int

    @property
    def is_loop(self) -> bool:
        return self.u == self.v

    def other(self, face: int) -> int:
        return self.v if face == self.u else self.u


@dataclass(frozen=True)
class WhiteGraph:
    vertices: tuple[int, ...]
    edges: tuple[WhiteEdge, ...]
    root: int

    def degree(self, v: int) -> int:
        return sum((e.u == v) + (e.v == v) for e in self.edges)

    def neighbors(self, v: int) -> set[int]:
        out = set()
        for e in self.edges:
            if e.u == v:
                out.add(e.v)
            if e.v == v:
                out.add(e.u)
        return out

    def is_connected(self) -> bool:
        seen = {self.root}
        stack = [self.root]
        while stack:
            v = stack.pop()
            for w in self.neighbors(v) - seen:
                seen.add(w)
                stack.append(w)
        return seen == set(self.vertices)

    def signs(self) -> set[int]:
        return {e.sign for e in self.edges}

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "root": self.root,
            "edges": [
                {"u": e.u, "v": e.v, "sign": e.sign, "crossing": e.crossing} for e in self.edges
            ],
        }


def trivial_white_graph() -> WhiteGraph:
    """White graph of a crossingless unknot: one white region, no edges."""
    return WhiteGraph((0,), (), 0)


def build_white_graph(d: LinkDiagram, c: Coloring, root: int | None = None) -> WhiteGraph:
    edges = []
    for x in range(d.n_crossings):
        sign = crossing_sign(d, c, x)
        first = 0 if sign == 1 else 1
        u = d.face_of[Dart(x, first)]
        v = d.face_of[Dart(x, first + 2)]
        edges.append(WhiteEdge(u, v, sign, x))
    vertices = tuple(sorted(c.white))
    if root is None:
        root = vertices[0]
    elif root not in c.white:
        raise ValueError(f"root {root} is not a white face (white faces: {list(vertices)})")
    return WhiteGraph(vertices, tuple(edges), root)


@dataclass(frozen=True)
class StarEntry:
    crossing: int
    neighbor: int
    sign: int
    dart: Dart


@dataclass(frozen=True)
class VertexStar:
    vertex: int
    incidences: tuple[StarEntry, ...]

    def rotated(self, k: int) -> VertexStar:
        if not self.incidences:
            return self
        k %= len(self.incidences)
        return VertexStar(self.vertex, self.incidences[k:] + self.incidences[:k])


def vertex_star(w: WhiteGraph, d: LinkDiagram, v: int) -> VertexStar:
    """Edges met by a small counterclockwise loop around white face ``v``.

    Face orbits run clockwise around their face, so the orbit is read
    backwards from its smallest dart. A self-loop shows up twice.
    """
    if v not in w.vertices:
        raise ValueError(f"{v} is not a vertex of the white graph")
    if d.n_crossings == 0:
        return VertexStar(v, ())
    orbit = d.faces[v]
    start = orbit.index(min(orbit))
    ccw = [orbit[(start - k) % len(orbit)] for k in range(len(orbit))]
    by_crossing = {e.crossing: e for e in w.edges}
    entries = []
    for dart in ccw:
        e = by_crossing[dart.crossing]
        opposite = d.face_of[Dart(dart.crossing, (dart.position + 2) % 4)]
        entries.append(StarEntry(dart.crossing, opposite, e.sign, dart))
    return VertexStar(v, tuple(entries))


def to_dot(w: WhiteGraph) -> str:
    lines = ["graph white_graph {"]
    for v in w.vertices:
        shape = "doublecircle" if v == w.root else "circle"
        lines.append(f'  f{v} [label="{v}", shape={shape}];')
    for e in w.edges:
        mark = "+" if e.sign > 0 else "-"
        lines.append(f'  f{e.u} -- f{e.v} [label="{mark} c{e.crossing}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
