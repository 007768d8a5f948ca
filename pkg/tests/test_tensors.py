from __future__ import annotations

import random
from fractions import Fraction

import pytest

from trigraph.chords import ChordDiagram, ColoredChordDiagram, enumerate_diagrams
from trigraph.lagrangian import standard_pair
from trigraph.tensors import (ArityMismatchError, DegenerateGenusError, EXPECTED_TABLE, SymplecticSpace, Tensor,
                              UElement, Wedge3Element, c_theta, c_theta_composite, c_theta_U, check_gl_invariance,
                              check_sp_invariance, color_sum, contract_gl, contract_sp, figure8_basis_check, iota,
                              invariant_rank, kappa, kappa_iota_scalar, project_U, project_wedge3, random_symplectic,
                              u_basis, wedge3_include)

S3 = SymplecticSpace(3)


def w(*idx, space=S3):
    return Wedge3Element.basis(space, *idx)


def random_wedge(rng, space):
    return Wedge3Element(space, {t: rng.randint(-3, 3) for t in space.triples()})


def test_contract_sp_small():
    d = ChordDiagram(((1, 2),))
    t = contract_sp(d, 1)
    assert t.entries == {(0, 1): 1, (1, 0): -1}
    assert len(contract_sp(d, 2)) == 4
    assert len(contract_sp(ChordDiagram(((1, 4), (2, 5), (3, 6))), 3)) == 6 ** 3


def test_contract_sp_pairs_like_omega():
    # pairing the tensor with basis tuples reproduces the product of omegas over chords
    d = ChordDiagram(((1, 4), (2, 6), (3, 5)))
    t = contract_sp(d, 3)
    for key, v in t.entries.items():
        prod = 1
        for a, b in d.chords:
            prod *= S3.omega(key[a - 1], key[b - 1])
        assert prod == v


def test_contract_gl_small():
    assert contract_gl(ColoredChordDiagram(((1, 2),)), 1).entries == {(0, 1): 1}
    assert contract_gl(ColoredChordDiagram(((2, 1),)), 1).entries == {(1, 0): 1}
    for d in enumerate_diagrams(2):
        assert color_sum(d, 2) == contract_sp(d, 2)


def test_wedge_include_project():
    inc = wedge3_include(w(0, 1, 2))
    assert len(inc) == 6
    rng = random.Random(1)
    x = random_wedge(rng, S3)
    assert project_wedge3(wedge3_include(x)) == 6 * x
    assert wedge3_include(Wedge3Element(S3)) == Tensor(S3, 3)
    assert project_wedge3(Tensor(S3, 3, {(0, 1, 2): 1})) == w(0, 1, 2)
    assert not project_wedge3(Tensor(S3, 3, {(0, 0, 1): 1}))
    sym = Tensor(S3, 3, {(0, 1, 2): 1, (1, 0, 2): 1})
    assert not project_wedge3(sym)


def test_kappa_examples():
    x1, x2, x3, y1, y2 = 0, 1, 2, 3, 4
    assert not any(kappa(w(x1, x2, x3)))
    assert kappa(w(x1, y1, x2)) == [0, 2, 0, 0, 0, 0]
    assert kappa(w(x1, y1, y2)) == [0, 0, 0, 0, 2, 0]


def test_kappa_iota_scalar():
    assert kappa_iota_scalar(1) == 0
    for n in range(2, 6):
        assert kappa_iota_scalar(n) == 2 * (n - 1)


def test_u_basis():
    assert len(u_basis(2)) == 0
    assert len(u_basis(3)) == 14
    for b in u_basis(3):
        assert not any(kappa(b))
    with pytest.raises(DegenerateGenusError):
        u_basis(1)


def test_project_U():
    rng = random.Random(2)
    for _ in range(10):
        x = random_wedge(rng, S3)
        assert not any(kappa(project_U(x)))
    u = u_basis(3)[0]
    assert project_U(u) == u
    assert not project_U(iota(S3, S3.basis_vector(0)))
    with pytest.raises(ValueError):
        UElement(S3, {(0, 1, 3): 1})
    with pytest.raises(DegenerateGenusError):
        project_U(Wedge3Element(SymplecticSpace(1)))


def test_table_at_genus_three():
    for (variant, m), expected in EXPECTED_TABLE.items():
        assert invariant_rank(variant, m, 3) == expected


def test_table_stable_at_genus_four():
    for (variant, m), expected in EXPECTED_TABLE.items():
        if variant != "gl-h":
            assert invariant_rank(variant, m, 4) == expected


def test_threshold():
    assert invariant_rank("sp-h", 2, 1) < 3
    assert invariant_rank("sp-h", 2, 2) == 3
    assert invariant_rank("sp-h", 2, 2) == invariant_rank("sp-h", 2, 4)


def test_figure8():
    res = figure8_basis_check(3)
    assert res["rank"] == 4 and res["loop_images_zero"] and res["passed"]
    assert figure8_basis_check(2)["rank"] < 4


def test_invariance():
    for m in (1, 2):
        p, t = check_sp_invariance(m, 3, 20, 1)
        assert p == t
        p, t = check_gl_invariance(m, 3, 20, 1)
        assert p == t


def test_c_theta():
    x = Tensor(S3, 3, {(0, 1, 2): 1})
    y = Tensor(S3, 3, {(3, 4, 5): 1})
    assert c_theta(x, y) == 1
    assert c_theta(y, x) == -1
    assert c_theta(x, x) == 0
    with pytest.raises(ArityMismatchError):
        c_theta(x, Tensor(S3, 2))


def test_c_theta_U():
    pair = standard_pair(3)
    assert c_theta_U(w(0, 1, 2), w(3, 4, 5), pair) == 1
    assert c_theta_U(w(0, 1, 3), w(3, 4, 5), pair) == 0


def test_c_theta_U_constant_and_lift_independence():
    rng = random.Random(6)
    for n in (3, 4):
        sp = SymplecticSpace(n)
        pair = standard_pair(n).apply(random_symplectic(sp, rng))
        for _ in range(5):
            a, b = project_U(random_wedge(rng, sp)), project_U(random_wedge(rng, sp))
            val = c_theta_U(a, b, pair)
            assert c_theta_composite(a, b, pair) == 6 * val
            h = [Fraction(rng.randint(-2, 2)) for _ in range(sp.dim)]
            assert c_theta_U(a + iota(sp, h), b, pair) == val
            assert c_theta_U(a, b, pair.swap()) == -c_theta_U(b, a, pair)


def test_c_theta_U_bilinear():
    rng = random.Random(7)
    pair = standard_pair(3)
    a, b, c = (random_wedge(rng, S3) for _ in range(3))
    assert c_theta_U(a + 3 * b, c, pair) == c_theta_U(a, c, pair) + 3 * c_theta_U(b, c, pair)
    assert c_theta_U(c, a - b, pair) == c_theta_U(c, a, pair) - c_theta_U(c, b, pair)
