from __future__ import annotations

import random

import pytest

from trigraph.graphs import (CapExceededError, DecoratedGraph, GraphVector, MalformedGraphError, TrivalentGraph,
                             as_ihx_quotient_dimension, canonicalize, canonicalize_decorated, decorated_from_key,
                             deframe, disjoint_union, enumerate_trivalent, format_graph, graph_from_key,
                             ihx_relations, loop_relation, parse_corpus, parse_graph)
from trigraph.linalg import Echelon
from trigraph.oracle import oracle_summary

THETA = TrivalentGraph(((1, 2, 3), (4, 5, 6)), ((1, 4), (2, 5), (3, 6)))
DUMBBELL = TrivalentGraph(((1, 2, 3), (4, 5, 6)), ((1, 2), (3, 6), (4, 5)))


def random_graph(rng, m):
    halves = list(range(6 * m))
    rng.shuffle(halves)
    verts = tuple(tuple(halves[3 * v:3 * v + 3]) for v in range(2 * m))
    rng.shuffle(halves)
    edges = tuple((halves[2 * i], halves[2 * i + 1]) for i in range(3 * m))
    return TrivalentGraph(verts, edges)


def test_theta_and_dumbbell():
    key, sign = canonicalize(THETA)
    assert sign in (1, -1)
    assert canonicalize(DUMBBELL)[1] == 0
    k2, s2 = canonicalize(THETA.flip(0))
    assert (k2, s2) == (key, -sign)


def test_malformed():
    with pytest.raises(MalformedGraphError):
        TrivalentGraph(((1, 2), (3, 4, 5)), ((1, 3), (2, 4)))
    with pytest.raises(MalformedGraphError):
        TrivalentGraph(((1, 2, 3), (4, 5, 6)), ((1, 4), (2, 5)))


def test_canonical_idempotent_and_flip():
    rng = random.Random(2)
    for m in (1, 2, 3):
        for _ in range(25):
            g = random_graph(rng, m)
            key, sign = canonicalize(g)
            rep = graph_from_key(key)
            rk, rs = canonicalize(rep)
            assert rk == key and rs == (1 if sign else 0)
            for v in range(len(g.vertices)):
                fk, fs = canonicalize(g.flip(v))
                assert fk == key and fs == -sign
            if g.has_loop():
                assert sign == 0


def test_relabeling_invariance():
    rng = random.Random(9)
    for _ in range(30):
        g = random_graph(rng, 2)
        key, sign = canonicalize(g)
        perm = list(range(len(g.vertices)))
        rng.shuffle(perm)
        h = TrivalentGraph(tuple(g.vertices[p] for p in perm), g.edges)
        assert canonicalize(h) == (key, sign)
        # rotating a vertex's triple keeps the cyclic order
        a, b, c = g.vertices[0]
        rot = TrivalentGraph(((b, c, a),) + g.vertices[1:], g.edges)
        assert canonicalize(rot) == (key, sign)


def test_enumeration_counts():
    m1 = enumerate_trivalent(1)
    assert len(m1) == 2
    assert [c.as_zero for c in m1].count(True) == 1
    live = [c for c in enumerate_trivalent(1, connected_only=True) if not c.as_zero]
    assert [c.key for c in live] == [canonicalize(THETA)[0]]
    assert [len(enumerate_trivalent(m)) for m in (1, 2, 3)] == [2, 8, 31]
    with pytest.raises(CapExceededError):
        enumerate_trivalent(6)


@pytest.mark.parametrize("m", [1, 2])
def test_against_oracle(m):
    o = oracle_summary(m)
    classes = enumerate_trivalent(m)
    assert o["classes"] == len(classes)
    assert o["as_zero"] == sum(c.as_zero for c in classes)
    assert o["dim_all"] == as_ihx_quotient_dimension(m)
    assert o["dim_connected"] == as_ihx_quotient_dimension(m, connected_only=True)
    assert o["classes_connected"] == len(enumerate_trivalent(m, connected_only=True))


def test_quotient_dimensions():
    assert as_ihx_quotient_dimension(1) == 1
    assert as_ihx_quotient_dimension(1, use_ihx=False) == 1
    assert as_ihx_quotient_dimension(1, connected_only=True) == 1


def test_quotient_independent_of_relation_order():
    m = 3
    classes = [c.key for c in enumerate_trivalent(m) if not c.as_zero]
    index = {k: i for i, k in enumerate(classes)}
    rels = ihx_relations(m)
    rng = random.Random(4)
    for _ in range(3):
        rng.shuffle(rels)
        e = Echelon()
        for r in rels:
            e.add({index[k]: c for k, c in r.items()})
        assert len(classes) - e.rank == as_ihx_quotient_dimension(m)


def test_disjoint_union():
    th = GraphVector.from_graph(THETA)
    two = disjoint_union(th, th)
    assert len(two.terms) == 1 and next(iter(two.terms))[0] == 4
    assert disjoint_union(th, GraphVector.unit()) == th
    g2 = GraphVector.from_graph(random_graph(random.Random(1), 2))
    assert disjoint_union(th, g2) == disjoint_union(g2, th)


def test_deframe():
    terms = deframe(THETA)
    assert [s for s, _ in terms] == [1, -1, -1, 1]
    assert terms[0][1].vertices == THETA.vertices
    g = random_graph(random.Random(3), 2)
    t2 = deframe(g)
    assert len(t2) == 16 and sum(s for s, _ in t2) == 0
    assert all(u.univalent_count() == 3 * bin(i).count("1") for i, (_, u) in enumerate(t2))


def test_decorated_canonical():
    g = DecoratedGraph(((1, 2, 3), (4, 5, 6)), ((1, 4), (2, 5), (6, 3)))
    key, sign = canonicalize_decorated(g)
    assert canonicalize_decorated(g) == (key, sign)
    assert canonicalize_decorated(g.flip(1)) == (key, -sign)
    assert canonicalize_decorated(decorated_from_key(key)) == (key, 1)


def test_decorated_loop_relation():
    g = DecoratedGraph(((1, 2, 3), (4, 5, 6)), ((1, 2), (3, 6), (4, 5)))
    rel = loop_relation(g, (1, 2))
    assert rel == {}  # the reversed loop is the same graph with the opposite sign
    with pytest.raises(ValueError):
        loop_relation(g, (3, 6))


def test_text_roundtrip():
    rng = random.Random(8)
    lines = []
    for _ in range(10):
        g = random_graph(rng, 2)
        line = format_graph(g)
        assert parse_graph(line) == g
        lines.append(line)
    d = DecoratedGraph(((1, 2, 3), (4, 5, 6)), ((1, 4), (5, 2), (3, 6)))
    assert parse_graph(format_graph(d)) == d
    assert format_graph(THETA) == "1; 1:(1,2,3) 2:(4,5,6); pairing: (1,4)(2,5)(3,6)"
    assert len(parse_corpus(["# comment", ""] + lines)) == 10
    with pytest.raises(MalformedGraphError):
        parse_graph("2; 1:(1,2,3) 2:(4,5,6); pairing: (1,4)(2,5)(3,6)")
