"""Linear chord diagrams, their 2-colorings and the map to labeled graphs."""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from typing import Dict, Iterator, List, Tuple

from .graphs import CapExceededError, DecoratedGraph, TrivalentGraph, canonicalize_decorated

DIAGRAM_CAP = 7
COLORED_CAP = 6


class DiagramError(ValueError):
    pass


@dataclass(frozen=True)
class ChordDiagram:
    """Fixed-point-free involution on ``1..2m``, stored as chords sorted by min endpoint."""

    chords: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        chords = tuple(sorted(tuple(sorted(c)) for c in self.chords))
        points = sorted(p for c in chords for p in c)
        if points != list(range(1, 2 * len(chords) + 1)):
            raise DiagramError(f"chords {chords} do not pair 1..{2 * len(chords)}")
        object.__setattr__(self, "chords", chords)

    @property
    def degree(self) -> int:
        return len(self.chords)

    @property
    def size(self) -> int:
        return 2 * len(self.chords)

    def involution(self) -> Dict[int, int]:
        inv = {}
        for a, b in self.chords:
            inv[a], inv[b] = b, a
        return inv

    def __str__(self) -> str:
        return format_diagram(self)


@dataclass(frozen=True)
class ColoredChordDiagram:
    """Chord diagram with every chord directed ``(tail, head)``."""

    arcs: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        arcs = tuple(sorted((tuple(a) for a in self.arcs), key=min))
        ChordDiagram(arcs)
        object.__setattr__(self, "arcs", arcs)

    @property
    def base(self) -> ChordDiagram:
        return ChordDiagram(self.arcs)

    def forget(self) -> ChordDiagram:
        return self.base

    @property
    def degree(self) -> int:
        return len(self.arcs)

    def reverse_all(self) -> "ColoredChordDiagram":
        return ColoredChordDiagram(tuple((h, t) for t, h in self.arcs))

    def reversed_count(self) -> int:
        """Number of chords pointing from the larger to the smaller endpoint."""
        return sum(1 for t, h in self.arcs if t > h)

    def __str__(self) -> str:
        return format_diagram(self)


def _pairings(points: List[int]) -> Iterator[List[Tuple[int, int]]]:
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    for i, p in enumerate(rest):
        for tail in _pairings(rest[:i] + rest[i + 1:]):
            yield [(first, p)] + tail


def enumerate_diagrams(m: int, cap: int = DIAGRAM_CAP) -> List[ChordDiagram]:
    if m < 0:
        raise ValueError("degree must be nonnegative")
    if m > cap:
        raise CapExceededError("chords", m, cap)
    return [ChordDiagram(tuple(c)) for c in _pairings(list(range(1, 2 * m + 1)))]


def enumerate_colored(m: int, cap: int = COLORED_CAP) -> List[ColoredChordDiagram]:
    if m > cap:
        raise CapExceededError("colored_chords", m, cap)
    out = []
    for d in enumerate_diagrams(m):
        for flips in product((False, True), repeat=m):
            out.append(ColoredChordDiagram(tuple((b, a) if f else (a, b) for (a, b), f in zip(d.chords, flips))))
    return out


def all_colorings(d: ChordDiagram) -> List[ColoredChordDiagram]:
    return [ColoredChordDiagram(tuple((b, a) if f else (a, b) for (a, b), f in zip(d.chords, flips)))
            for flips in product((False, True), repeat=d.degree)]


def _triples(size: int) -> Tuple[Tuple[int, int, int], ...]:
    if size % 6:
        raise DiagramError(f"diagram on {size} points: size must be divisible by 6")
    return tuple((3 * j - 2, 3 * j - 1, 3 * j) for j in range(1, size // 3 + 1))


def to_trivalent(d: ChordDiagram) -> TrivalentGraph:
    """Glue points ``3j-2, 3j-1, 3j`` into vertex ``j``; chords become edges.

    The vertex order of the result is the label order, and each vertex is
    oriented by ``3j-2 < 3j-1 < 3j``.
    """
    return TrivalentGraph(_triples(d.size), d.chords)


def to_decorated(d: ColoredChordDiagram) -> DecoratedGraph:
    return DecoratedGraph(_triples(2 * d.degree), d.arcs)


def to_colored_diagram(g: DecoratedGraph) -> ColoredChordDiagram:
    """Inverse of :func:`to_decorated`: slot ``k`` of vertex ``j`` becomes point ``3j+k+1``."""
    point = {h: 3 * v + k + 1 for v, hs in enumerate(g.vertices) for k, h in enumerate(hs)}
    return ColoredChordDiagram(tuple((point[t], point[h]) for t, h in g.arcs))


def to_diagram(g: TrivalentGraph) -> ChordDiagram:
    point = {h: 3 * v + k + 1 for v, hs in enumerate(g.vertices) for k, h in enumerate(hs)}
    return ChordDiagram(tuple((point[a], point[b]) for a, b in g.edges))


def decorated_quotient_dimension(m: int, no_loops: bool = False, cap: int = 1) -> int:
    """Dimension of labeled, oriented, 2-colored degree-``m`` graphs modulo colored AS.

    With ``no_loops`` every graph containing a loop is divided out as well.
    Classes are read off from all colored chord diagrams with ``3m`` chords.
    """
    if m > cap:
        raise CapExceededError("decorated_degree", m, cap)
    keys = set()
    for d in enumerate_colored(3 * m):
        g = to_decorated(d)
        if no_loops and g.loops():
            continue
        key, sign = canonicalize_decorated(g)
        if sign:
            keys.add(key)
    return len(keys)


# --- text format ------------------------------------------------------------

def format_diagram(d: ChordDiagram | ColoredChordDiagram) -> str:
    """``2m: (a b)(c d)...``; colored chords print as ``(a>b)`` or ``(a<b)`` with a < b."""
    if isinstance(d, ColoredChordDiagram):
        body = "".join(f"({min(t, h)}{'>' if t < h else '<'}{max(t, h)})" for t, h in d.arcs)
        return f"{2 * d.degree}: {body}"
    return f"{d.size}: " + "".join(f"({a} {b})" for a, b in d.chords)


def parse_diagram(text: str) -> ChordDiagram | ColoredChordDiagram:
    mt = re.fullmatch(r"\s*(\d+)\s*:\s*(.*?)\s*", text)
    if not mt:
        raise DiagramError(f"cannot parse diagram: {text!r}")
    size = int(mt.group(1))
    chords = re.findall(r"\(\s*(\d+)\s*([<>]?)\s*(\d+)\s*\)", mt.group(2))
    if 2 * len(chords) != size:
        raise DiagramError(f"header says {size} points but {len(chords)} chords given")
    marks = {m for _, m, _ in chords}
    if marks == {""}:
        return ChordDiagram(tuple((int(a), int(b)) for a, _, b in chords))
    if "" in marks:
        raise DiagramError("either every chord is directed or none is")
    return ColoredChordDiagram(tuple((int(a), int(b)) if m == ">" else (int(b), int(a)) for a, m, b in chords))
