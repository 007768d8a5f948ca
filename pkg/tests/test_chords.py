from __future__ import annotations

from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trigraph.chords import (ChordDiagram, ColoredChordDiagram, DiagramError, decorated_quotient_dimension,
                             enumerate_colored, enumerate_diagrams, format_diagram, parse_diagram, to_colored_diagram,
                             to_decorated, to_trivalent)
from trigraph.graphs import CapExceededError, TrivalentGraph, canonicalize, canonicalize_decorated


def dfact(k):
    return 1 if k <= 1 else k * dfact(k - 2)


@pytest.mark.parametrize("m", range(0, 7))
def test_counts(m):
    assert len(enumerate_diagrams(m)) == dfact(2 * m - 1)
    if m <= 5:
        assert len(enumerate_colored(m)) == dfact(2 * m - 1) * 2 ** m


def test_caps_and_validation():
    with pytest.raises(CapExceededError):
        enumerate_diagrams(8)
    with pytest.raises(DiagramError):
        ChordDiagram(((1, 2), (2, 3)))
    with pytest.raises(DiagramError):
        to_trivalent(ChordDiagram(((1, 2),)))


def test_to_trivalent_examples():
    theta = to_trivalent(ChordDiagram(((1, 4), (2, 5), (3, 6))))
    assert theta == TrivalentGraph(((1, 2, 3), (4, 5, 6)), ((1, 4), (2, 5), (3, 6)))
    dumbbell = to_trivalent(ChordDiagram(((1, 2), (3, 6), (4, 5))))
    assert dumbbell.has_loop() and canonicalize(dumbbell)[1] == 0


def test_surjective_onto_degree_one_graphs():
    keys = {canonicalize(to_trivalent(d))[0] for d in enumerate_diagrams(3)}
    assert len(keys) == 2


def test_forgetting_colors_commutes():
    for d in enumerate_colored(3):
        assert to_trivalent(d.forget()) == to_decorated(d).forget_colors()
        assert to_decorated(d.reverse_all()) == to_decorated(d).reverse_all()
        assert to_colored_diagram(to_decorated(d)) == d


def test_relabel_inside_triple_changes_sign_by_parity():
    d = ColoredChordDiagram(((1, 4), (2, 5), (6, 3)))
    base_key, base_sign = canonicalize_decorated(to_decorated(d))
    for p in permutations((1, 2, 3)):
        relabel = {1: p[0], 2: p[1], 3: p[2]}
        arcs = tuple((relabel.get(t, t), relabel.get(h, h)) for t, h in d.arcs)
        key, sign = canonicalize_decorated(to_decorated(ColoredChordDiagram(arcs)))
        inversions = sum(1 for i in range(3) for j in range(i + 1, 3) if p[i] > p[j])
        assert key == base_key and sign == base_sign * (-1) ** inversions


def test_decorated_quotient():
    assert decorated_quotient_dimension(1) == 6
    assert decorated_quotient_dimension(1, no_loops=True) == 4


def test_text_format():
    d = ChordDiagram(((1, 4), (2, 5), (3, 6)))
    assert format_diagram(d) == "6: (1 4)(2 5)(3 6)"
    c = ColoredChordDiagram(((4, 1), (2, 5), (3, 6)))
    assert format_diagram(c) == "6: (1<4)(2>5)(3>6)"
    assert parse_diagram("6: (1<4)(2>5)(3>6)") == c
    with pytest.raises(DiagramError):
        parse_diagram("4: (1 2)")
    with pytest.raises(DiagramError):
        parse_diagram("4: (1 2)(3>4)")


@given(st.integers(1, 4).flatmap(lambda m: st.permutations(list(range(1, 2 * m + 1)))), st.data())
@settings(max_examples=50, deadline=None)
def test_roundtrip_random(perm, data):
    chords = [tuple(perm[i:i + 2]) for i in range(0, len(perm), 2)]
    d = ChordDiagram(tuple(chords))
    assert parse_diagram(format_diagram(d)) == d
    flips = data.draw(st.lists(st.booleans(), min_size=len(chords), max_size=len(chords)))
    c = ColoredChordDiagram(tuple((b, a) if f else (a, b) for (a, b), f in zip(chords, flips)))
    assert parse_diagram(format_diagram(c)) == c
