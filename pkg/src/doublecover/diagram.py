"""Planar diagram (PD) codes.

A crossing is a 4-tuple of arc labels listed counterclockwise. Positions 0
and 2 carry the under-strand, positions 1 and 3 the over-strand. Each arc
label occurs exactly twice in the whole code. Crossingless unknot components
cannot be written in PD form, so they are carried as a separate count.

The combinatorial map behind a diagram uses darts ``(crossing, position)``:
``twin`` pairs the two darts carrying the same arc, ``rotate`` steps
counterclockwise around a crossing, and faces are the orbits of
``d -> rotate(twin(d))``. The dart ``(c, i)`` of a face orbit stands for the
corner of crossing ``c`` lying between positions ``i - 1`` and ``i``.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from typing import NamedTuple


class PDError(ValueError):
    """Raised for PD codes that are malformed or violate the arc rules."""


class PDSyntaxError(PDError):
    def __init__(self, message, pos, text=""):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{message} (line {line}, column {col})")
        self.pos = pos
        self.line = line
        self.column = col


class DiagramError(ValueError):
    """Raised when a PD code does not describe a planar diagram."""


class Dart(NamedTuple):
    crossing: int
    position: int


def rotate(d: Dart, steps: int = 1) -> Dart:
    return Dart(d.crossing, (d.position + steps) % 4)


@dataclass(frozen=True)
class PdCode:
    crossings: tuple[tuple[int, int, int, int], ...] = ()
    unknotted_extras: int = 0

    def __post_init__(self):
        crossings = tuple(tuple(c) for c in self.crossings)
        object.__setattr__(self, "crossings", crossings)
        if self.unknotted_extras < 0:
            raise PDError("unknotted_extras must be non-negative")
        for i, x in enumerate(crossings):
            if len(x) == 0:
                raise PDError(f"crossing {i} is an empty tuple")
            if len(x) != 4:
                raise PDError(f"crossing {i} has arity {len(x)}, expected 4")
            for a in x:
                if not isinstance(a, int) or isinstance(a, bool) or a < 1:
                    raise PDError(f"crossing {i}: arc label {a!r} is not a positive integer")
        counts = Counter(a for x in crossings for a in x)
        bad = sorted(a for a, k in counts.items() if k != 2)
        if bad:
            a = bad[0]
            raise PDError(f"arc {a} occurs {counts[a]} times, expected exactly 2")
        if not crossings and not self.unknotted_extras:
            raise PDError("empty diagram: no crossings and no unknot components")

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @property
    def arcs(self) -> list[int]:
        return sorted({a for x in self.crossings for a in x})

    def __str__(self):
        terms = ["X({},{},{},{})".format(*x) for x in self.crossings]
        if self.unknotted_extras:
            terms.append(f"U({self.unknotted_extras})")
        return " ".join(terms)


_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<comment>\#[^\n]*)
  | (?P<cross>X\s*\((?P<args>[^()]*)\))
  | (?P<unknot>U\s*\(\s*(?P<count>[^()]*?)\s*\))
    """,
    re.VERBOSE,
)


def parse_pd(text: str, unknotted_extras: int = 0) -> PdCode:
    """Parse whitespace-separated ``X(a,b,c,d)`` terms and ``U(k)`` directives.

    ``#`` starts a comment running to the end of the line. ``unknotted_extras``
    is added to the count declared by ``U(k)`` directives.
    """
    crossings = []
    extras = unknotted_extras
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise PDSyntaxError(f"unexpected character {text[pos]!r}", pos, text)
        if m.group("cross") is not None:
            args_start = m.start("args")
            raw = m.group("args")
            if not raw.strip():
                raise PDSyntaxError("empty crossing tuple", m.start(), text)
            labels = []
            offset = args_start
            for piece in raw.split(","):
                token = piece.strip()
                if not token.isdigit() or int(token) < 1:
                    where = offset + (len(piece) - len(piece.lstrip()))
                    raise PDSyntaxError(f"arc label {token!r} is not a positive integer", where, text)
                labels.append(int(token))
                offset += len(piece) + 1
            if len(labels) != 4:
                raise PDSyntaxError(f"crossing arity {len(labels)} != 4", m.start(), text)
            crossings.append(tuple(labels))
        elif m.group("unknot") is not None:
            count = m.group("count")
            if not count.isdigit():
                raise PDSyntaxError(f"U() expects a non-negative integer, got {count!r}", m.start("count"), text)
            extras += int(count)
        pos = m.end()
    return PdCode(tuple(crossings), extras)


@dataclass(frozen=True, eq=False)
class LinkDiagram:
    pd: PdCode
    twin: dict = field(repr=False)
    faces: tuple = field(repr=False)
    face_of: dict = field(repr=False)
    components: tuple = ()

    @property
    def n_crossings(self) -> int:
        return self.pd.n_crossings

    @property
    def darts(self) -> list[Dart]:
        return [Dart(c, i) for c in range(self.n_crossings) for i in range(4)]

    @property
    def is_connected(self) -> bool:
        return len(self.components) + self.pd.unknotted_extras == 1

    def label(self, d: Dart) -> int:
        return self.pd.crossings[d.crossing][d.position]

    def face_step(self, d: Dart) -> Dart:
        """Next dart along the face orbit of ``d``."""
        return rotate(self.twin[d])

    def to_json(self) -> dict:
        return {
            "crossings": [list(x) for x in self.pd.crossings],
            "unknotted_extras": self.pd.unknotted_extras,
            "faces": [[list(d) for d in f] for f in self.faces],
            "components": [list(c) for c in self.components],
        }


def build_diagram(pd: PdCode) -> LinkDiagram:
    n = pd.n_crossings
    seen = {}
    twin = {}
    for c, x in enumerate(pd.crossings):
        for i, a in enumerate(x):
            d = Dart(c, i)
            if a in seen:
                e = seen.pop(a)
                twin[d] = e
                twin[e] = d
            else:
                seen[a] = d

    faces = []
    face_of = {}
    for start in (Dart(c, i) for c in range(n) for i in range(4)):
        if start in face_of:
            continue
        orbit = []
        d = start
        while d not in face_of:
            face_of[d] = len(faces)
            orbit.append(d)
            d = rotate(twin[d])
        faces.append(tuple(orbit))

    # crossing connectivity through arcs
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for d, e in twin.items():
        parent[find(d.crossing)] = find(e.crossing)
    groups = {}
    for c in range(n):
        groups.setdefault(find(c), []).append(c)
    components = tuple(tuple(g) for g in sorted(groups.values()))

    comp_of = {c: k for k, g in enumerate(components) for c in g}
    face_count = Counter(comp_of[f[0].crossing] for f in faces)
    for k, g in enumerate(components):
        if face_count[k] != len(g) + 2:
            raise DiagramError(
                f"component with crossings {list(g)} has {face_count[k]} faces, "
                f"expected {len(g) + 2}; the code is not planar"
            )
    return LinkDiagram(pd, twin, tuple(faces), face_of, components)


@dataclass(frozen=True)
class AlternationReport:
    alternating: bool
    witness: int | None = None


def check_alternating(d: LinkDiagram) -> AlternationReport:
    parity = {}
    for x in d.pd.crossings:
        for i, a in enumerate(x):
            parity.setdefault(a, []).append(i % 2)
    bad = [a for a, ps in parity.items() if ps[0] == ps[1]]
    if bad:
        return AlternationReport(False, min(bad))
    return AlternationReport(True)


def split_components(d: LinkDiagram) -> list[LinkDiagram]:
    """One diagram per crossing-connectivity class, then one per crossingless unknot.

    Arcs of each piece are relabeled 1, 2, ... by first appearance.
    """
    out = []
    for group in d.components:
        relabel = {}
        crossings = []
        for c in group:
            x = d.pd.crossings[c]
            for a in x:
                relabel.setdefault(a, len(relabel) + 1)
            crossings.append(tuple(relabel[a] for a in x))
        out.append(build_diagram(PdCode(tuple(crossings))))
    for _ in range(d.pd.unknotted_extras):
        out.append(build_diagram(PdCode((), 1)))
    return out


def mirror_pd(pd: PdCode) -> PdCode:
    """Reflect the diagram in the plane, which yields the mirror image link.

    Reversing each tuple's cyclic order keeps positions 0 and 2 under.
    """
    return PdCode(tuple((a, d, c, b) for a, b, c, d in pd.crossings), pd.unknotted_extras)
