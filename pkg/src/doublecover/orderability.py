"""Left-orderability of the branched double cover group of an alternating link.

A diagram is split into its connected pieces (the group is their free
product, which is left-orderable iff every factor is). For a connected
alternating piece, the group is left-orderable iff the piece is an unknot,
and an alternating diagram is an unknot iff its determinant is 1.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from math import prod

from .checkerboard import build_white_graph, color_faces, crossing_sign
from .diagram import Dart, LinkDiagram, build_diagram, check_alternating, mirror_pd, split_components
from .homology import determinant
from .presentation import Word, build_presentation, star_block


class Status(str, enum.Enum):
    LEFT_ORDERABLE = "LeftOrderable"
    NOT_LEFT_ORDERABLE = "NotLeftOrderable"
    OUT_OF_SCOPE = "OutOfScope"


class Reason(str, enum.Enum):
    UNLINK = "Unlink"
    DETERMINANT_EXCEEDS_ONE = "DeterminantExceedsOne"
    NON_ALTERNATING_INPUT = "NonAlternatingInput"


EXIT_CODES = {
    Status.LEFT_ORDERABLE: 0,
    Status.NOT_LEFT_ORDERABLE: 1,
    Status.OUT_OF_SCOPE: 2,
}


class InconsistencyError(RuntimeError):
    """An alternating diagram produced white-graph edges of both signs."""


@dataclass(frozen=True)
class ComponentVerdict:
    status: Status
    reason: Reason
    crossings: int
    alternating: bool
    determinant: int | None

    def to_json(self) -> dict:
        return {
            "status": self.status.value,
            "reason": self.reason.value,
            "crossings": self.crossings,
            "alternating": self.alternating,
            "determinant": self.determinant,
        }


@dataclass(frozen=True)
class OrderabilityVerdict:
    status: Status
    reason: Reason
    components: tuple[ComponentVerdict, ...]

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]


def _component_verdict(part: LinkDiagram, color: str) -> ComponentVerdict:
    n = part.n_crossings
    if not check_alternating(part).alternating:
        return ComponentVerdict(Status.OUT_OF_SCOPE, Reason.NON_ALTERNATING_INPUT, n, False, None)
    det = determinant(part, color)
    if det == 1:
        return ComponentVerdict(Status.LEFT_ORDERABLE, Reason.UNLINK, n, True, det)
    return ComponentVerdict(Status.NOT_LEFT_ORDERABLE, Reason.DETERMINANT_EXCEEDS_ONE, n, True, det)


def decide(d: LinkDiagram, color: str = "a") -> OrderabilityVerdict:
    """Any non-alternating piece makes the whole verdict OutOfScope, even when
    another piece already has determinant > 1."""
    parts = tuple(_component_verdict(p, color) for p in split_components(d))
    statuses = {p.status for p in parts}
    if Status.OUT_OF_SCOPE in statuses:
        return OrderabilityVerdict(Status.OUT_OF_SCOPE, Reason.NON_ALTERNATING_INPUT, parts)
    if Status.NOT_LEFT_ORDERABLE in statuses:
        return OrderabilityVerdict(Status.NOT_LEFT_ORDERABLE, Reason.DETERMINANT_EXCEEDS_ONE, parts)
    return OrderabilityVerdict(Status.LEFT_ORDERABLE, Reason.UNLINK, parts)


@dataclass(frozen=True)
class Contradiction:
    """The relator of a vertex carrying at least one non-loop edge, with every
    block of the form (x_w^-1 x_v)^+1. In any left-ordering where x_v is
    maximal this product would exceed 1."""

    vertex: int
    generator: str
    degree: int
    non_loop_edges: int
    relator: Word
    text: str


@dataclass(frozen=True)
class ComponentTrace:
    crossings: int
    alternating: bool
    sign: int | None = None
    mirrored: bool = False
    white_graph_connected: bool | None = None
    determinant: int | None = None
    contradiction: Contradiction | None = None

    def to_json(self) -> dict:
        out = {
            "crossings": self.crossings,
            "alternating": self.alternating,
            "uniform_sign": self.sign,
            "mirrored": self.mirrored,
            "white_graph_connected": self.white_graph_connected,
            "determinant": self.determinant,
            "contradiction_relator": None,
        }
        if self.contradiction is not None:
            c = self.contradiction
            out["contradiction_relator"] = {
                "vertex": c.vertex,
                "generator": c.generator,
                "degree": c.degree,
                "non_loop_edges": c.non_loop_edges,
                "relator": c.text,
            }
        return out


@dataclass(frozen=True)
class ProofTrace:
    components: tuple[ComponentTrace, ...]


def _certify_component(part: LinkDiagram, color: str, root: int | None) -> ComponentTrace:
    from .presentation import format_word

    n = part.n_crossings
    if not check_alternating(part).alternating:
        return ComponentTrace(n, False)
    if n == 0:
        return ComponentTrace(0, True, None, False, True, 1)

    coloring = color_faces(part, color)
    signs = {crossing_sign(part, coloring, x) for x in range(n)}
    if len(signs) != 1:
        raise InconsistencyError(
            f"alternating diagram {part.pd} has white-graph edges of both signs under color {color!r}"
        )
    sign = signs.pop()
    mirrored = sign == -1
    if mirrored:
        # reflecting the plane keeps the same regions white and negates every sign
        mirror = build_diagram(mirror_pd(part.pd))
        if root is not None:
            # mirrored dart (c, i) lies in the region of original dart (c, 1 - i)
            c, i = part.faces[root][0]
            root = mirror.face_of[Dart(c, (1 - i) % 4)]
        part = mirror
        color = "b" if color in ("a", "first-face-white") else "a"
        coloring = color_faces(part, color)
        if {crossing_sign(part, coloring, x) for x in range(n)} != {1}:
            raise InconsistencyError("mirroring did not normalize the edge signs to +1")

    w = build_white_graph(part, coloring, root)
    connected = w.is_connected()
    if not connected:
        raise InconsistencyError(f"white graph of connected diagram {part.pd} is disconnected")
    det = determinant(part, color, w.root)
    if det <= 1:
        return ComponentTrace(n, True, sign, mirrored, connected, det)

    p = build_presentation(w, part)
    candidates = [v for v in w.vertices if v != w.root]
    v = max(candidates, key=lambda u: (w.degree(u), -u))
    relator = p.relator_for(v)
    blocks = [relator.syllables[i:i + 2] for i in range(0, len(relator), 2)]
    if any(b != star_block(v, b[0][0], 1) for b in blocks):
        raise InconsistencyError(f"relator of vertex {v} has a negative block after normalization")
    non_loop = sum(1 for e in w.edges if (e.u == v) != (e.v == v))
    if non_loop < 1:
        raise InconsistencyError(f"vertex {v} has no edge to another vertex")
    names = {g: p.name(g) for g in p.generators}
    contradiction = Contradiction(v, names[v], w.degree(v), non_loop, relator, format_word(relator, names))
    return ComponentTrace(n, True, sign, mirrored, connected, det, contradiction)


def certify(d: LinkDiagram, color: str = "a", root: int | None = None) -> ProofTrace:
    """Record, per component, each fact the non-orderability argument uses.

    ``root`` applies only to a diagram with a single component.
    """
    parts = split_components(d)
    if root is not None and len(parts) != 1:
        raise ValueError("a root can only be chosen for a connected diagram")
    return ProofTrace(tuple(_certify_component(p, color, root) for p in parts))


def verdict_report(v: OrderabilityVerdict, t: ProofTrace | None = None) -> str:
    out = {
        "status": v.status.value,
        "reason": v.reason.value,
        "components": [c.to_json() for c in v.components],
    }
    dets = [c.determinant for c in v.components]
    if all(x is not None for x in dets):
        out["determinant"] = prod(dets)
        out["determinants"] = dets
    if t is not None:
        if len(t.components) != len(v.components):
            raise ValueError("verdict and trace describe different diagrams")
        out["trace"] = [c.to_json() for c in t.components]
    return json.dumps(out, indent=2, sort_keys=True)
