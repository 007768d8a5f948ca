from __future__ import annotations

import random

import pytest

from trigraph.lagrangian import (LagrangianError, LagrangianPair, TRIAL_KINDS, cup_form, cup_form_direct,
                                 distinguishes, eta, eta_apply, make_trial, naturality_holds, run_trials,
                                 same_subspace, standard_pair, swapped_pair_equality)
from trigraph.tensors import SymplecticSpace, Wedge3Element, random_symplectic


def test_validation():
    sp = SymplecticSpace(2)
    x1, x2, y1, y2 = ([1 if i == j else 0 for i in range(4)] for j in range(4))
    with pytest.raises(LagrangianError):
        LagrangianPair(sp, (x1, y1), (x2, y2))  # not isotropic
    with pytest.raises(LagrangianError):
        LagrangianPair(sp, (x1, x2), (x1, x2))  # not transverse
    with pytest.raises(LagrangianError):
        LagrangianPair(sp, (x1,), (y1, y2))


def test_eta_examples():
    pair = standard_pair(3)
    sp = pair.space
    assert eta_apply(pair, 1, Wedge3Element.basis(sp, 0, 1, 2)) == Wedge3Element.basis(sp, 0, 1, 2)
    assert not eta_apply(pair, 1, Wedge3Element.basis(sp, 3, 1, 2))
    assert not eta_apply(pair, 1, Wedge3Element.basis(sp, 3, 4, 5))
    assert len(eta(pair, 1)) == 20


def test_cup_form_examples():
    pair = standard_pair(3)
    sp = pair.space
    u, v = Wedge3Element.basis(sp, 0, 1, 2), Wedge3Element.basis(sp, 3, 4, 5)
    form = cup_form(pair)
    assert form(u, v) == 1
    assert form(u, u) == 0
    assert form(u, Wedge3Element.basis(sp, 0, 1, 2)) == 0


def test_cup_form_matches_definition():
    rng = random.Random(1)
    sp = SymplecticSpace(3)
    pair = standard_pair(3).apply(random_symplectic(sp, rng))
    form = cup_form(pair)
    for _ in range(5):
        a = Wedge3Element(sp, {t: rng.randint(-2, 2) for t in sp.triples()})
        b = Wedge3Element(sp, {t: rng.randint(-2, 2) for t in sp.triples()})
        assert form(a, b) == cup_form_direct(pair, a, b)


@pytest.mark.parametrize("n", [3, 4])
def test_swap_and_naturality(n):
    rng = random.Random(n)
    sp = SymplecticSpace(n)
    pair = standard_pair(n)
    assert swapped_pair_equality(pair)
    other = pair.apply(random_symplectic(sp, rng))
    assert swapped_pair_equality(other)
    assert naturality_holds(other, random_symplectic(sp, rng))
    assert not cup_form(other).is_zero()


def test_distinguishes_needs_dimension_six():
    with pytest.raises(LagrangianError):
        distinguishes(standard_pair(2), standard_pair(2))


def test_trial_kinds():
    rng = random.Random(3)
    for kind in TRIAL_KINDS:
        a, b = make_trial(kind, 3, rng)
        expected = kind in ("equal", "swapped")
        assert a.same_or_swapped(b) == expected
        assert distinguishes(a, b) == expected


def test_rebase_keeps_subspaces():
    rng = random.Random(4)
    pair = standard_pair(3).apply(random_symplectic(SymplecticSpace(3), rng))
    other = pair.rebase(rng)
    assert pair.same_as(other)
    assert same_subspace(pair.plus, other.plus)


def test_run_trials_agree():
    recs = list(run_trials(3, 24, 11))
    assert all(r["agree"] for r in recs)
    assert recs == list(run_trials(3, 24, 11))
