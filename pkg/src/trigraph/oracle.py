"""Brute-force cross-check for the trivalent graph spaces.

Works directly on all labeled, oriented pairings of ``6m`` slots. Relabeling
and AS moves are merged with a signed union-find; IHX relations are then
generated from scratch on one member of each class. Nothing here touches the
canonical labeling code, so agreement with :mod:`trigraph.graphs` is an
independent check. Only practical for degree at most 2.
"""

from __future__ import annotations

from typing import Dict, List, Tuple

from .linalg import Echelon

Pairing = Tuple[int, ...]

ORACLE_CAP = 2


def all_pairings(n: int) -> List[Pairing]:
    """Every fixed-point-free involution of ``range(n)`` as a partner tuple."""
    out = []

    def rec(p):
        try:
            i = p.index(-1)
        except ValueError:
            out.append(tuple(p))
            return
        for j in range(i + 1, n):
            if p[j] == -1:
                p[i], p[j] = j, i
                rec(p)
                p[i] = p[j] = -1

    rec([-1] * n)
    return out


def _relabel(p: Pairing, sigma: List[int]) -> Pairing:
    out = [0] * len(p)
    for h, q in enumerate(p):
        out[sigma[h]] = sigma[q]
    return tuple(out)


def _moves(nv: int) -> List[Tuple[List[int], int]]:
    """Slot permutations generating relabelings (sign +1) and AS (sign -1)."""
    n = 3 * nv
    moves = []
    for v in range(nv - 1):
        s = list(range(n))
        for k in range(3):
            s[3 * v + k], s[3 * v + 3 + k] = 3 * v + 3 + k, 3 * v + k
        moves.append((s, 1))
    rot = list(range(n))
    rot[0], rot[1], rot[2] = 1, 2, 0
    moves.append((rot, 1))
    swap = list(range(n))
    swap[0], swap[1] = 1, 0
    moves.append((swap, -1))
    return moves


class _SignedUnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}
        self.sign = {x: 1 for x in items}  # x = sign[x] * parent[x]
        self.zero = set()

    def find(self, x):
        path = []
        while self.parent[x] != x:
            path.append(x)
            x = self.parent[x]
        root, acc = x, 1
        for y in reversed(path):
            acc *= self.sign[y]
            self.sign[y] = acc
            self.parent[y] = root
        return root

    def value(self, x) -> Tuple[Pairing, int]:
        r = self.find(x)
        return r, (1 if x == r else self.sign[x])

    def union(self, a, b, s):
        """Record a = s * b."""
        ra, sa = self.value(a)
        rb, sb = self.value(b)
        if ra == rb:
            if sa != s * sb:
                self.zero.add(ra)
            return
        # ra = sa*a = sa*s*b = sa*s*sb*rb
        self.parent[ra] = rb
        self.sign[ra] = sa * s * sb
        if ra in self.zero:
            self.zero.add(rb)


def _ihx_triple(p: Pairing, h: int) -> List[Pairing]:
    """IHX at the edge through slot ``h`` written with explicit edge lists."""
    q = p[h]
    u, v = h // 3, q // 3
    ru = [3 * u + (h % 3 + i) % 3 for i in (1, 2)]
    rv = [3 * v + (q % 3 + i) % 3 for i in (1, 2)]
    a, b = ru
    c, d = rv
    legs = {a, b, c, d}
    edges = [(x, p[x]) for x in range(len(p)) if x < p[x] and x not in legs and p[x] not in legs
             and {x, p[x]} != {h, q}]
    leg_edges = {(min(x, p[x]), max(x, p[x])) for x in legs}
    result = []
    for order in ((a, b, c, d), (b, c, a, d), (c, a, b, d)):
        slot_of = dict(zip(order, (3 * u, 3 * u + 1, 3 * v + 1, 3 * v + 2)))
        new_edges = list(edges) + [(3 * u + 2, 3 * v)]
        for x, y in leg_edges:
            new_edges.append((slot_of.get(x, x), slot_of.get(y, y)))
        out = [0] * len(p)
        for x, y in new_edges:
            out[x], out[y] = y, x
        result.append(tuple(out))
    return result


def oracle_classes(m: int):
    """Signed union-find over all pairings of degree ``m``."""
    if m > ORACLE_CAP:
        raise ValueError(f"oracle limited to degree {ORACLE_CAP}")
    nv = 2 * m
    items = all_pairings(3 * nv)
    uf = _SignedUnionFind(items)
    moves = _moves(nv)
    for p in items:
        for sigma, s in moves:
            uf.union(p, _relabel(p, sigma), s)
    return items, uf


def oracle_summary(m: int) -> Dict[str, int]:
    """Class counts and AS/IHX quotient dimensions computed by brute force."""
    items, uf = oracle_classes(m)
    roots = sorted({uf.find(p) for p in items})
    zero = {r for r in roots if uf.find(r) in uf.zero}

    def connected(p):
        seen, stack = {0}, [0]
        while stack:
            u = stack.pop()
            for k in range(3):
                w = p[3 * u + k] // 3
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(p) // 3

    out = {"classes": len(roots), "as_zero": len(zero)}
    for label, keep in (("all", lambda r: True), ("connected", connected)):
        live = [r for r in roots if keep(r) and r not in zero]
        index = {r: i for i, r in enumerate(live)}
        ech = Echelon()
        for r in roots:
            if not keep(r):
                continue
            for h in range(len(r)):
                if h < r[h] and h // 3 != r[h] // 3:
                    vec: Dict[int, int] = {}
                    for t in _ihx_triple(r, h):
                        root, s = uf.value(t)
                        if root in index:
                            vec[index[root]] = vec.get(index[root], 0) + s
                    ech.add(vec)
        out[f"classes_{label}"] = sum(1 for r in roots if keep(r))
        out[f"dim_{label}"] = len(live) - ech.rank
    return out
