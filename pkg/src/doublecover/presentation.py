"""Group presentations read off a rooted signed white graph.

Each white vertex ``v`` contributes a generator and the relator obtained by
walking counterclockwise around ``v``: every edge to ``w`` with sign ``e``
contributes the block ``(x_w^-1 x_v)^e``. The root generator is killed by an
extra one-letter relator.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Mapping

from .checkerboard import WhiteGraph, vertex_star
from .diagram import LinkDiagram

Syllable = tuple  # (generator, exponent in {+1, -1})


@dataclass(frozen=True)
class Word:
    syllables: tuple[Syllable, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "syllables", tuple((g, e) for g, e in self.syllables))
        for _, e in self.syllables:
            if e not in (1, -1):
                raise ValueError(f"syllable exponent must be +1 or -1, got {e}")

    def __len__(self):
        return len(self.syllables)

    def __mul__(self, other: Word) -> Word:
        return Word(self.syllables + other.syllables)

    def inverse(self) -> Word:
        return Word(tuple((g, -e) for g, e in reversed(self.syllables)))

    @cached_property
    def reduced(self) -> Word:
        stack = []
        for s in self.syllables:
            if stack and stack[-1][0] == s[0] and stack[-1][1] == -s[1]:
                stack.pop()
            else:
                stack.append(s)
        return Word(tuple(stack))

    def exponent_sum(self, g=None) -> int:
        return sum(e for h, e in self.syllables if g is None or h == g)

    def cyclic_shift(self, k: int) -> Word:
        if not self.syllables:
            return self
        k %= len(self.syllables)
        return Word(self.syllables[k:] + self.syllables[:k])


@dataclass(frozen=True)
class GroupPresentation:
    """Generators are white faces, root first. Relators list the non-root
    vertices ascending, then the root vertex, then the root generator itself;
    ``relator_vertices[i]`` names the vertex behind relator ``i`` (``None`` for
    the last one)."""

    generators: tuple[int, ...]
    relators: tuple[Word, ...]
    relator_vertices: tuple[int | None, ...]
    root: int

    def name(self, g: int) -> str:
        return f"x{self.generators.index(g) + 1}"

    def relator_for(self, v: int) -> Word:
        return self.relators[self.relator_vertices.index(v)]

    def to_json(self) -> dict:
        index = {g: i + 1 for i, g in enumerate(self.generators)}
        return {
            "generators": [self.name(g) for g in self.generators],
            "faces": list(self.generators),
            "root": self.name(self.root),
            "relators": [[[index[g], e] for g, e in r.syllables] for r in self.relators],
        }


def star_block(v: int, w: int, sign: int) -> tuple[Syllable, ...]:
    if sign == 1:
        return ((w, -1), (v, 1))
    return ((v, -1), (w, 1))


def build_presentation(
    w: WhiteGraph, d: LinkDiagram, rotations: Mapping[int, int] | None = None
) -> GroupPresentation:
    """``rotations`` optionally moves the start of each vertex star by that many
    incidences, which replaces the relator by a cyclic permutation."""
    others = tuple(v for v in w.vertices if v != w.root)
    generators = (w.root,) + others
    order = others + (w.root,)
    relators = []
    for v in order:
        star = vertex_star(w, d, v)
        if rotations:
            star = star.rotated(rotations.get(v, 0))
        syllables = []
        for inc in star.incidences:
            syllables.extend(star_block(v, inc.neighbor, inc.sign))
        relators.append(Word(tuple(syllables)))
    relators.append(Word(((w.root, 1),)))
    return GroupPresentation(generators, tuple(relators), order + (None,), w.root)


def abelianization_matrix(p: GroupPresentation):
    """Exponent sums: one row per relator, one column per generator."""
    from .homology import IntegerMatrix

    col = {g: j for j, g in enumerate(p.generators)}
    rows = []
    for r in p.relators:
        row = [0] * len(p.generators)
        for g, e in r.syllables:
            row[col[g]] += e
        rows.append(row)
    return IntegerMatrix.from_rows(rows, cols=len(p.generators))


# -- text export ------------------------------------------------------------


def _syllable_text(name: str, e: int, power: int = 1) -> str:
    k = e * power
    return name if k == 1 else f"{name}^{k}"


def _period(s: tuple) -> int:
    n = len(s)
    for k in range(1, n + 1):
        if n % k == 0 and s[:k] * (n // k) == s:
            return k
    return n


def format_word(word: Word, names: Mapping[int, str]) -> str:
    s = word.syllables
    if not s:
        return "1"
    k = _period(s)
    reps = len(s) // k
    if reps > 1:
        if k == 1:
            g, e = s[0]
            return _syllable_text(names[g], e, reps)
        return f"({format_word(Word(s[:k]), names)})^{reps}"
    return "*".join(_syllable_text(names[g], e) for g, e in s)


def export_presentation(p: GroupPresentation, format: str = "plain") -> str:
    names = {g: p.name(g) for g in p.generators}
    gens = [names[g] for g in p.generators]
    rels = [format_word(r, names) for r in p.relators]
    if format == "plain":
        return f"< {', '.join(gens)} | {', '.join(rels)} >"
    if format in ("gap", "gap-style"):
        quoted = ", ".join(f'"{g}"' for g in gens)
        binds = " ".join(f"{g} := F.{i + 1};;" for i, g in enumerate(gens))
        gap_rels = ["One(F)" if r == "1" else r for r in rels]
        return (
            f"F := FreeGroup({quoted});;\n"
            f"{binds}\n"
            f"rels := [ {', '.join(gap_rels)} ];;\n"
            "G := F / rels;;\n"
        )
    raise ValueError(f"unknown presentation format {format!r}")


_TOKENS = re.compile(r"\s*(?:(?P<name>[A-Za-z_]\w*)|(?P<int>-?\d+)|(?P<op>[()*^]))")


class _WordParser:
    def __init__(self, text, index):
        self.tokens = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            m = _TOKENS.match(text, pos)
            if m is None or m.end() == pos:
                raise ValueError(f"cannot parse word {text!r} at {pos}")
            kind = m.lastgroup
            self.tokens.append((kind, m.group(kind)))
            pos = m.end()
        self.i = 0
        self.index = index

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def parse(self) -> Word:
        if self.tokens == [("int", "1")]:
            return Word()
        w = self.word()
        if self.i != len(self.tokens):
            raise ValueError(f"trailing tokens in word: {self.tokens[self.i:]}")
        return w

    def word(self) -> Word:
        w = self.term()
        while self.peek() == ("op", "*"):
            self.take()
            w = w * self.term()
        return w

    def term(self) -> Word:
        kind, val = self.take()
        if kind == "name":
            if val not in self.index:
                raise ValueError(f"unknown generator {val!r}")
            atom = Word(((self.index[val], 1),))
        elif (kind, val) == ("op", "("):
            atom = self.word()
            if self.take() != ("op", ")"):
                raise ValueError("unbalanced parenthesis")
        else:
            raise ValueError(f"unexpected token {val!r}")
        if self.peek() == ("op", "^"):
            self.take()
            kind, val = self.take()
            if kind != "int":
                raise ValueError("exponent must be an integer")
            k = int(val)
            base = atom if k >= 0 else atom.inverse()
            atom = Word(base.syllables * abs(k))
        return atom


def _split_top_level(s: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts]


def parse_presentation(text: str) -> tuple[list[str], list[Word]]:
    """Parse the plain format back into generator names and relator words.

    Syllables of the returned words use 1-based generator indices.
    """
    m = re.fullmatch(r"\s*<(.*)\|(.*)>\s*", text, re.S)
    if m is None:
        raise ValueError("expected '< generators | relators >'")
    gens = [g.strip() for g in m.group(1).split(",") if g.strip()]
    index = {g: i + 1 for i, g in enumerate(gens)}
    body = m.group(2).strip()
    rels = [_WordParser(r, index).parse() for r in _split_top_level(body)] if body else []
    return gens, rels
