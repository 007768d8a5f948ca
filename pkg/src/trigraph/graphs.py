"""Vertex-oriented trivalent graphs modulo AS and IHX.

A graph is stored as a list of vertices, each an ordered tuple of half-edge
ids (the order is the cyclic orientation), plus a pairing of half-edge ids
into edges. Loops and multiple edges are allowed.

Internally most work happens on the *slot form*: half-edge ``3*v + k`` is
slot ``k`` of vertex ``v`` and ``partner[h]`` is the other end of its edge.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Dict, Iterable, List, NamedTuple, Sequence, Tuple

from .canon import adjacency_from_code, canonical_form
from .linalg import Echelon

GraphKey = Tuple[int, Tuple[int, ...]]  # (vertex count, canonical adjacency code)
DecoratedKey = Tuple[Tuple[Tuple[int, int], ...], ...]

DEFAULT_DEGREE_CAP = 5


class MalformedGraphError(ValueError):
    pass


class CapExceededError(ValueError):
    """A computation was requested above its configured size cap."""

    def __init__(self, cap_name: str, value: int, cap: int):
        super().__init__(f"{cap_name}={value} exceeds cap {cap}")
        self.cap_name = cap_name
        self.value = value
        self.cap = cap


def _check_half_edges(vertices, edges, valences) -> None:
    seen = {}
    for v, hs in enumerate(vertices):
        if len(hs) not in valences:
            raise MalformedGraphError(f"vertex {v} has valence {len(hs)}")
        for h in hs:
            if h in seen:
                raise MalformedGraphError(f"half-edge {h} used twice")
            seen[h] = v
    paired = set()
    for e in edges:
        if len(e) != 2 or e[0] == e[1]:
            raise MalformedGraphError(f"bad edge {e}")
        for h in e:
            if h not in seen:
                raise MalformedGraphError(f"edge {e} uses unknown half-edge {h}")
            if h in paired:
                raise MalformedGraphError(f"half-edge {h} paired twice")
            paired.add(h)
    if len(paired) != len(seen):
        raise MalformedGraphError("unpaired half-edges: %s" % sorted(set(seen) - paired))


@dataclass(frozen=True)
class TrivalentGraph:
    vertices: Tuple[Tuple[int, int, int], ...]
    edges: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(tuple(v) for v in self.vertices))
        object.__setattr__(self, "edges", tuple(sorted(tuple(sorted(e)) for e in self.edges)))
        _check_half_edges(self.vertices, self.edges, {3})

    @property
    def degree(self) -> int:
        return len(self.vertices) // 2

    @classmethod
    def from_partner(cls, partner: Sequence[int]) -> "TrivalentGraph":
        if len(partner) % 3:
            raise MalformedGraphError("slot count not divisible by 3")
        verts = tuple((3 * v, 3 * v + 1, 3 * v + 2) for v in range(len(partner) // 3))
        return cls(verts, tuple((h, p) for h, p in enumerate(partner) if h < p))

    def partner(self) -> List[int]:
        """Slot-form pairing: slot ``3*v+k`` is the k-th half-edge of vertex v."""
        slot = {h: 3 * v + k for v, hs in enumerate(self.vertices) for k, h in enumerate(hs)}
        out = [0] * (3 * len(self.vertices))
        for a, b in self.edges:
            out[slot[a]], out[slot[b]] = slot[b], slot[a]
        return out

    def flip(self, v: int) -> "TrivalentGraph":
        """Reverse the cyclic orientation at vertex ``v``."""
        a, b, c = self.vertices[v]
        verts = list(self.vertices)
        verts[v] = (b, a, c)
        return TrivalentGraph(tuple(verts), self.edges)

    def has_loop(self) -> bool:
        where = {h: v for v, hs in enumerate(self.vertices) for h in hs}
        return any(where[a] == where[b] for a, b in self.edges)


@dataclass(frozen=True)
class UniTrivalentGraph:
    """Graph whose vertices carry one or three half-edges."""

    vertices: Tuple[Tuple[int, ...], ...]
    edges: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(tuple(v) for v in self.vertices))
        object.__setattr__(self, "edges", tuple(sorted(tuple(sorted(e)) for e in self.edges)))
        _check_half_edges(self.vertices, self.edges, {1, 3})

    def univalent_count(self) -> int:
        return sum(1 for v in self.vertices if len(v) == 1)


@dataclass(frozen=True)
class DecoratedGraph:
    """Trivalent graph with labeled vertices and a direction on every edge.

    The vertex label is the position in ``vertices``; each arc is
    ``(tail, head)``.
    """

    vertices: Tuple[Tuple[int, int, int], ...]
    arcs: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(tuple(v) for v in self.vertices))
        object.__setattr__(self, "arcs", tuple(sorted(tuple(a) for a in self.arcs)))
        _check_half_edges(self.vertices, self.arcs, {3})

    @property
    def base(self) -> TrivalentGraph:
        return TrivalentGraph(self.vertices, self.arcs)

    def forget_colors(self) -> TrivalentGraph:
        return self.base

    def reverse(self, arc: Tuple[int, int]) -> "DecoratedGraph":
        if arc not in self.arcs:
            raise KeyError(arc)
        arcs = [a for a in self.arcs if a != arc] + [(arc[1], arc[0])]
        return DecoratedGraph(self.vertices, tuple(arcs))

    def reverse_all(self) -> "DecoratedGraph":
        return DecoratedGraph(self.vertices, tuple((h, t) for t, h in self.arcs))

    def flip(self, v: int) -> "DecoratedGraph":
        a, b, c = self.vertices[v]
        verts = list(self.vertices)
        verts[v] = (b, a, c)
        return DecoratedGraph(tuple(verts), self.arcs)

    def loops(self) -> List[Tuple[int, int]]:
        where = {h: v for v, hs in enumerate(self.vertices) for h in hs}
        return [a for a in self.arcs if where[a[0]] == where[a[1]]]


def _perm_sign(p: Sequence[int]) -> int:
    sign, seen = 1, [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


# --- undecorated canonical form -------------------------------------------

def _adjacency(partner: Sequence[int]) -> List[List[int]]:
    n = len(partner) // 3
    adj = [[0] * n for _ in range(n)]
    for h, p in enumerate(partner):
        if h < p:
            u, v = h // 3, p // 3
            if u == v:
                adj[u][u] += 1
            else:
                adj[u][v] += 1
                adj[v][u] += 1
    return adj


def _standard_partner(adj: Sequence[Sequence[int]]) -> List[int]:
    """Slot form in which each vertex lists its neighbours in increasing order."""
    n = len(adj)
    targets = []
    for v in range(n):
        t = []
        for w in range(n):
            t.extend([w] * (2 * adj[v][v] if w == v else adj[v][w]))
        if len(t) != 3:
            raise MalformedGraphError(f"vertex {v} has degree {len(t)}")
        targets.append(t)
    partner = [-1] * (3 * n)
    for v in range(n):
        for w in range(v, n):
            mine = [3 * v + k for k in range(3) if targets[v][k] == w]
            if v == w:
                for a, b in zip(mine[::2], mine[1::2]):
                    partner[a], partner[b] = b, a
            else:
                theirs = [3 * w + k for k in range(3) if targets[w][k] == v]
                for a, b in zip(mine, theirs):
                    partner[a], partner[b] = b, a
    return partner


def _iso_sign(src: Sequence[int], dst: Sequence[int], vmap: Sequence[int]) -> int:
    """Orientation sign of an isomorphism src -> dst covering ``vmap``."""
    pool: Dict[Tuple[int, int], List[Tuple[int, int]]] = {}
    for h, p in enumerate(dst):
        if h < p:
            pool.setdefault((h // 3, p // 3), []).append((h, p))
    image = [0] * len(src)
    for h, p in enumerate(src):
        if h > p:
            continue
        a, b = vmap[h // 3], vmap[p // 3]
        if (a, b) in pool and pool[(a, b)]:
            x, y = pool[(a, b)].pop(0)
        else:
            y, x = pool[(b, a)].pop(0)
        image[h], image[p] = x, y
    sign = 1
    for v in range(len(src) // 3):
        sign *= _perm_sign([image[3 * v + k] % 3 for k in range(3)])
    return sign


@lru_cache(maxsize=None)
def _class_data(n: int, code: Tuple[int, ...]) -> Tuple[Tuple[int, ...], bool]:
    """Canonical representative (slot form) and AS-zero flag of a class."""
    adj = adjacency_from_code(code, n)
    rep = _standard_partner(adj)
    if any(adj[v][v] for v in range(n)):
        return tuple(rep), True
    _, _, autos = canonical_form(adj)
    zero = any(_iso_sign(rep, rep, a) == -1 for a in autos)
    return tuple(rep), zero


def canonicalize_partner(partner: Sequence[int]) -> Tuple[GraphKey, int]:
    n = len(partner) // 3
    code, label, _ = canonical_form(_adjacency(partner))
    rep, zero = _class_data(n, code)
    if zero:
        return (n, code), 0
    return (n, code), _iso_sign(partner, rep, label)


def canonicalize(g: TrivalentGraph) -> Tuple[GraphKey, int]:
    """Canonical key and orientation sign of ``g``.

    The sign compares ``g`` with the canonical representative of its
    isomorphism class; it is 0 when the class is killed by AS.
    """
    return canonicalize_partner(g.partner())


def graph_from_key(key: GraphKey) -> TrivalentGraph:
    n, code = key
    return TrivalentGraph.from_partner(_class_data(n, code)[0])


def is_as_zero(key: GraphKey) -> bool:
    return _class_data(*key)[1]


def is_connected_key(key: GraphKey) -> bool:
    n, code = key
    if n == 0:
        return True
    adj = adjacency_from_code(code, n)
    seen, stack = {0}, [0]
    while stack:
        u = stack.pop()
        for w in range(n):
            if adj[u][w] and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


# --- graph vectors ----------------------------------------------------------

class GraphVector:
    """Finite rational combination of canonical graph classes."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict = None):
        self.terms = {k: Fraction(c) for k, c in (terms or {}).items() if c}

    @classmethod
    def from_graph(cls, g: TrivalentGraph, coeff=1) -> "GraphVector":
        key, sign = canonicalize(g)
        return cls({key: sign * Fraction(coeff)})

    @classmethod
    def unit(cls) -> "GraphVector":
        return cls({(0, ()): 1})

    def __add__(self, other: "GraphVector") -> "GraphVector":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return GraphVector(out)

    def __neg__(self) -> "GraphVector":
        return GraphVector({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "GraphVector") -> "GraphVector":
        return self + (-other)

    def __rmul__(self, scalar) -> "GraphVector":
        return GraphVector({k: scalar * c for k, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, GraphVector) and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"GraphVector({dict(sorted(self.terms.items()))})"


def disjoint_union_graphs(a: TrivalentGraph, b: TrivalentGraph) -> TrivalentGraph:
    pa, pb = a.partner(), b.partner()
    off = len(pa)
    return TrivalentGraph.from_partner(pa + [p + off for p in pb])


def disjoint_union(a: GraphVector, b: GraphVector) -> GraphVector:
    out: Dict[GraphKey, Fraction] = {}
    for ka, ca in a.terms.items():
        ga = graph_from_key(ka)
        for kb, cb in b.terms.items():
            key, sign = canonicalize(disjoint_union_graphs(ga, graph_from_key(kb)))
            if sign:
                out[key] = out.get(key, 0) + sign * ca * cb
    return GraphVector(out)


# --- enumeration ------------------------------------------------------------

class GraphClass(NamedTuple):
    key: GraphKey
    as_zero: bool
    connected: bool

    @property
    def degree(self) -> int:
        return self.key[0] // 2


_THETA = (3, 4, 5, 0, 1, 2)
_DUMBBELL = (1, 0, 5, 4, 3, 2)
# a centre joined to three vertices that each carry a loop
_CLAW = (3, 6, 9, 0, 5, 4, 1, 8, 7, 2, 11, 10)


def _subdivide_join(partner: Sequence[int], e1: Tuple[int, int], e2: Tuple[int, int] | None) -> List[int]:
    """Subdivide two edges (the same one twice if ``e2`` is None) and join the new vertices."""
    p = list(partner)
    u, v = len(p), len(p) + 3
    p.extend([-1] * 6)

    def link(x, y):
        p[x], p[y] = y, x

    a, b = e1
    link(a, u)
    link(u + 1, b)
    if e2 is None:
        c, d = u + 1, b
    else:
        c, d = e2
    link(c, v)
    link(v + 1, d)
    link(u + 2, v + 2)
    return p


def _disjoint(p: Sequence[int], q: Sequence[int]) -> List[int]:
    off = len(p)
    return list(p) + [x + off for x in q]


@lru_cache(maxsize=None)
def _all_classes(m: int) -> Tuple[Tuple[GraphKey, Tuple[int, ...]], ...]:
    """Every isomorphism class of degree ``m``, each with a slot-form representative.

    A graph either has an edge whose removal and smoothing gives a smaller
    cubic graph (so it arises by subdividing two edges of that graph and
    joining the new vertices), or all its components are theta, dumbbell or
    the looped claw.
    """
    if m == 0:
        return (((0, ()), ()),)
    found: Dict[GraphKey, Tuple[int, ...]] = {}

    def add(p):
        key, _ = canonicalize_partner(p)
        if key not in found:
            found[key] = tuple(_class_data(*key)[0])

    for _, p in _all_classes(m - 1):
        edges = [(h, q) for h, q in enumerate(p) if h < q]
        for i, e1 in enumerate(edges):
            add(_subdivide_join(p, e1, None))
            for e2 in edges[i + 1:]:
                add(_subdivide_join(p, e1, e2))
        add(_disjoint(p, _THETA))
        add(_disjoint(p, _DUMBBELL))
    if m >= 2:
        for _, p in _all_classes(m - 2):
            add(_disjoint(p, _CLAW))
    return tuple(sorted(found.items()))


def enumerate_trivalent(m: int, connected_only: bool = False, cap: int = DEFAULT_DEGREE_CAP) -> List[GraphClass]:
    """All isomorphism classes of degree-``m`` trivalent graphs, sorted by key."""
    if m < 1:
        raise ValueError("degree must be at least 1")
    if m > cap:
        raise CapExceededError("degree", m, cap)
    out = []
    for key, _ in _all_classes(m):
        conn = is_connected_key(key)
        if connected_only and not conn:
            continue
        out.append(GraphClass(key, is_as_zero(key), conn))
    return out


# --- IHX --------------------------------------------------------------------

def ihx_terms(partner: Sequence[int], h: int) -> List[List[int]]:
    """The three graphs of the IHX relation at the edge containing slot ``h``.

    With the edge rotated to the last slot of its first vertex, ``(a, b, e)``,
    and the first slot of the other, ``(e, c, d)``, the relation reads
    ``T(a,b;c,d) + T(b,c;a,d) + T(c,a;b,d) = 0`` where ``T(p,q;r,s)`` has
    vertices ``(p, q, e)`` and ``(e, r, s)`` (the Jacobi identity).
    """
    e_u, e_v = h, partner[h]
    u, v = e_u // 3, e_v // 3
    if u == v:
        raise ValueError("IHX is not defined on a loop")
    ku, kv = e_u % 3, e_v % 3
    a, b = 3 * u + (ku + 1) % 3, 3 * u + (ku + 2) % 3
    c, d = 3 * v + (kv + 1) % 3, 3 * v + (kv + 2) % 3
    out = []
    for p, q, r, s in ((a, b, c, d), (b, c, a, d), (c, a, b, d)):
        newpos = {p: 3 * u, q: 3 * u + 1, r: 3 * v + 1, s: 3 * v + 2}
        new = list(partner)
        for leg, pos in newpos.items():
            other = partner[leg]
            tgt = newpos.get(other, other)
            new[pos] = tgt
            if other not in newpos:
                new[other] = pos
        new[3 * u + 2], new[3 * v] = 3 * v, 3 * u + 2
        out.append(new)
    return out


def ihx_relations(m: int, connected_only: bool = False, cap: int = DEFAULT_DEGREE_CAP) -> List[Dict[GraphKey, int]]:
    """IHX relation vectors (over AS-nonzero keys) at every non-loop edge."""
    rels = []
    for cls in enumerate_trivalent(m, connected_only, cap):
        rep = _class_data(*cls.key)[0]
        for h, p in enumerate(rep):
            if h > p or h // 3 == p // 3:
                continue
            vec: Dict[GraphKey, int] = {}
            for t in ihx_terms(rep, h):
                key, sign = canonicalize_partner(t)
                if sign:
                    vec[key] = vec.get(key, 0) + sign
            vec = {k: c for k, c in vec.items() if c}
            if vec:
                rels.append(vec)
    return rels


def as_ihx_quotient_dimension(m: int, connected_only: bool = False, cap: int = DEFAULT_DEGREE_CAP,
                              use_ihx: bool = True) -> int:
    classes = [c.key for c in enumerate_trivalent(m, connected_only, cap) if not c.as_zero]
    if not use_ihx:
        return len(classes)
    index = {k: i for i, k in enumerate(classes)}
    ech = Echelon()
    for rel in ihx_relations(m, connected_only, cap):
        ech.add({index[k]: c for k, c in rel.items()})
    return len(classes) - ech.rank


# --- decorated graphs -------------------------------------------------------

def canonicalize_decorated(g: DecoratedGraph) -> Tuple[DecoratedKey, int]:
    """Normalize each vertex's slot order; labels fix everything else.

    A slot is described by ``(neighbour label, role)`` with role 0 for the
    tail of its arc and 1 for the head. Parallel arcs with the same
    direction are matched in the same order at both ends.
    """
    where = {h: (v, k) for v, hs in enumerate(g.vertices) for k, h in enumerate(hs)}
    desc = {}
    other = {}
    for t, hd in g.arcs:
        desc[t] = (where[hd][0], 0)
        desc[hd] = (where[t][0], 1)
        other[t], other[hd] = hd, t
    n = len(g.vertices)
    order: List[List[int]] = [None] * n
    for v in range(n):
        hs = g.vertices[v]

        def sort_key(i, v=v, hs=hs):
            h = hs[i]
            w = desc[h][0]
            if w < v:  # tie-break by the position already chosen at the smaller end
                return desc[h], order[w].index(where[other[h]][1])
            return desc[h], i

        order[v] = sorted(range(3), key=sort_key)
    sign = 1
    for v in range(n):
        sign *= _perm_sign(order[v])
    key = tuple(tuple(desc[g.vertices[v][i]] for i in order[v]) for v in range(n))
    return key, sign


def decorated_from_key(key: DecoratedKey) -> DecoratedGraph:
    n = len(key)
    verts = tuple((3 * v, 3 * v + 1, 3 * v + 2) for v in range(n))
    pending: Dict[Tuple[int, int], List[int]] = {}
    arcs = []
    for v in range(n):
        for k, (w, role) in enumerate(key[v]):
            h = 3 * v + k
            if role == 0:
                pending.setdefault((v, w), []).append(h)
    for v in range(n):
        for k, (w, role) in enumerate(key[v]):
            if role == 1:
                arcs.append((pending[(w, v)].pop(0), 3 * v + k))
    return DecoratedGraph(verts, tuple(arcs))


def loop_relation(g: DecoratedGraph, arc: Tuple[int, int]) -> Dict[DecoratedKey, int]:
    """``g + g'`` with ``g'`` the loop ``arc`` reversed, as a reduced vector."""
    if arc not in g.loops():
        raise ValueError(f"{arc} is not a loop of the graph")
    vec: Dict[DecoratedKey, int] = {}
    for h in (g, g.reverse(arc)):
        key, sign = canonicalize_decorated(h)
        vec[key] = vec.get(key, 0) + sign
    return {k: c for k, c in vec.items() if c}


# --- deframing --------------------------------------------------------------

def deframe(g: TrivalentGraph) -> List[Tuple[int, UniTrivalentGraph]]:
    """Signed vertex-splitting sum: one term per subset of split vertices.

    Terms are ordered by the subset read as a binary number (bit ``v`` set
    means vertex ``v`` is split into three univalent vertices), so the first
    term is the graph itself with sign +1.
    """
    n = len(g.vertices)
    out = []
    for bits in product((0, 1), repeat=n):
        bits = bits[::-1]
        verts: List[Tuple[int, ...]] = []
        for v, hs in enumerate(g.vertices):
            if bits[v]:
                verts.extend((h,) for h in hs)
            else:
                verts.append(hs)
        out.append(((-1) ** sum(bits), UniTrivalentGraph(tuple(verts), g.edges)))
    return out


# --- text format ------------------------------------------------------------

_LINE = re.compile(
    r"^\s*(\d+)\s*;\s*(?P<verts>[^;]*);\s*pairing:\s*(?P<pairs>[^;]*?)\s*(?:;\s*colors:\s*(?P<colors>.*?))?\s*$"
)


def format_graph(g: TrivalentGraph | DecoratedGraph) -> str:
    """One-line text form, e.g. ``1; 1:(1,2,3) 2:(4,5,6); pairing: (1,4)(2,5)(3,6)``.

    Decorated graphs add ``; colors: 1>4 2>5 3>6`` (tail>head).
    """
    verts = " ".join(f"{i + 1}:({','.join(map(str, hs))})" for i, hs in enumerate(g.vertices))
    if isinstance(g, DecoratedGraph):
        edges = sorted(tuple(sorted(a)) for a in g.arcs)
        colors = " ".join(f"{t}>{h}" for t, h in sorted(g.arcs, key=lambda a: min(a)))
    else:
        edges, colors = sorted(g.edges), None
    pairs = "".join(f"({a},{b})" for a, b in edges)
    line = f"{len(g.vertices) // 2}; {verts}; pairing: {pairs}"
    if colors is not None:
        line += f"; colors: {colors}"
    return line


def parse_graph(line: str) -> TrivalentGraph | DecoratedGraph:
    mt = _LINE.match(line)
    if not mt:
        raise MalformedGraphError(f"cannot parse graph line: {line!r}")
    degree = int(mt.group(1))
    verts = []
    for i, (label, body) in enumerate(re.findall(r"(\d+)\s*:\s*\(([^)]*)\)", mt.group("verts"))):
        if int(label) != i + 1:
            raise MalformedGraphError(f"vertex labels must run 1..2m, got {label} at position {i + 1}")
        verts.append(tuple(int(x) for x in body.split(",")))
    if len(verts) != 2 * degree:
        raise MalformedGraphError(f"degree {degree} needs {2 * degree} vertices, got {len(verts)}")
    pairs = [tuple(map(int, p)) for p in re.findall(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)", mt.group("pairs"))]
    colors = mt.group("colors")
    if colors is None:
        return TrivalentGraph(tuple(verts), tuple(pairs))
    arcs = [tuple(map(int, a)) for a in re.findall(r"(-?\d+)\s*>\s*(-?\d+)", colors)]
    if sorted(tuple(sorted(a)) for a in arcs) != sorted(tuple(sorted(p)) for p in pairs):
        raise MalformedGraphError("colors do not match the pairing")
    return DecoratedGraph(tuple(verts), tuple(arcs))


def parse_corpus(lines: Iterable[str]) -> List[TrivalentGraph | DecoratedGraph]:
    return [parse_graph(l) for l in lines if l.strip() and not l.lstrip().startswith("#")]
