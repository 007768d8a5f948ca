"""Canonical labeling of small multigraphs with loops.

Individualization-refinement without pruning: the whole search tree is
walked, so besides the canonical labeling we get the full vertex
automorphism group. That is affordable for the graph sizes used here
(at most a dozen vertices).
"""

from __future__ import annotations

from typing import List, Sequence, Tuple

Adjacency = Sequence[Sequence[int]]
Code = Tuple[int, ...]


def _refine(adj: Adjacency, cells: List[List[int]]) -> List[List[int]]:
    """Split cells until the ordered partition is equitable.

    Split order depends only on isomorphism-invariant signatures.
    """
    while True:
        cell_of = {}
        for ci, cell in enumerate(cells):
            for v in cell:
                cell_of[v] = ci
        new_cells: List[List[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            sigs = {}
            for v in cell:
                counts = [[] for _ in cells]
                for w, mult in enumerate(adj[v]):
                    if mult and w != v:
                        counts[cell_of[w]].append(mult)
                sigs[v] = (adj[v][v], tuple(tuple(sorted(c)) for c in counts))
            groups = {}
            for v in cell:
                groups.setdefault(sigs[v], []).append(v)
            if len(groups) > 1:
                changed = True
            for key in sorted(groups):
                new_cells.append(groups[key])
        cells = new_cells
        if not changed:
            return cells


def _code(adj: Adjacency, order: Sequence[int]) -> Code:
    n = len(order)
    return tuple(adj[order[i]][order[j]] for i in range(n) for j in range(i, n))


def canonical_form(adj: Adjacency) -> Tuple[Code, List[int], List[List[int]]]:
    """Canonical code, labeling and automorphisms of a multigraph.

    ``adj[u][v]`` counts edges between ``u`` and ``v``; ``adj[v][v]`` counts
    loops at ``v``. Returns ``(code, label, automorphisms)`` where
    ``label[v]`` is the canonical position of vertex ``v``, ``code`` is the
    upper triangle of the relabeled matrix, and each automorphism is a
    vertex permutation ``p`` with ``adj[p[u]][p[v]] == adj[u][v]``.
    """
    n = len(adj)
    if n == 0:
        return (), [], [[]]
    init: dict = {}
    for v in range(n):
        init.setdefault((sum(adj[v]) + adj[v][v], adj[v][v]), []).append(v)
    cells = _refine(adj, [init[k] for k in sorted(init)])

    leaves: List[Tuple[Code, List[int]]] = []
    stack = [cells]
    while stack:
        part = stack.pop()
        target = next((i for i, c in enumerate(part) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in part]
            leaves.append((_code(adj, order), order))
            continue
        cell = part[target]
        for v in reversed(cell):
            rest = [w for w in cell if w != v]
            child = part[:target] + [[v], rest] + part[target + 1:]
            stack.append(_refine(adj, child))

    best = min(code for code, _ in leaves)
    best_orders = [order for code, order in leaves if code == best]
    ref = best_orders[0]
    label = [0] * n
    for pos, v in enumerate(ref):
        label[v] = pos
    autos = []
    for order in best_orders:
        # ref[i] -> order[i] maps the reference leaf onto another optimal leaf
        p = [0] * n
        for i in range(n):
            p[ref[i]] = order[i]
        autos.append(p)
    autos.sort()
    return best, label, autos


def adjacency_from_code(code: Code, n: int) -> List[List[int]]:
    adj = [[0] * n for _ in range(n)]
    it = iter(code)
    for i in range(n):
        for j in range(i, n):
            adj[i][j] = adj[j][i] = next(it)
    return adj
