"""Lagrangian pairs and the cup 2-form on the exterior cube."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Sequence, Tuple

from .linalg import SparseMatrix, mat_inverse, mat_mul, rank, rref
from .tensors import (SymplecticSpace, Wedge3Element, adapted_basis, apply_wedge3, compound3,
                      random_symplectic, wedge_pairing)

Matrix = List[List[Fraction]]


class LagrangianError(ValueError):
    pass


def _frac_rows(rows: Sequence[Sequence]) -> Tuple[Tuple[Fraction, ...], ...]:
    return tuple(tuple(Fraction(x) for x in r) for r in rows)


def same_subspace(a: Sequence[Sequence], b: Sequence[Sequence]) -> bool:
    """Equal row spaces, decided by comparing reduced echelon forms."""
    ra = rref(SparseMatrix.from_rows([list(r) for r in a]))
    rb = rref(SparseMatrix.from_rows([list(r) for r in b]))
    return ra == rb


@dataclass(frozen=True)
class LagrangianPair:
    """Two transverse Lagrangian subspaces, each given by ``n`` spanning row vectors."""

    space: SymplecticSpace
    plus: Tuple[Tuple[Fraction, ...], ...]
    minus: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "plus", _frac_rows(self.plus))
        object.__setattr__(self, "minus", _frac_rows(self.minus))
        n, sp = self.space.n, self.space
        for name, basis in (("plus", self.plus), ("minus", self.minus)):
            if len(basis) != n or any(len(v) != sp.dim for v in basis):
                raise LagrangianError(f"{name} must be {n} vectors of length {sp.dim}")
            if rank(SparseMatrix.from_rows([list(v) for v in basis])) != n:
                raise LagrangianError(f"{name} vectors are dependent")
            if any(sp.omega_vec(u, v) for u in basis for v in basis):
                raise LagrangianError(f"{name} is not isotropic")
        if rank(SparseMatrix.from_rows([list(v) for v in self.plus + self.minus])) != 2 * n:
            raise LagrangianError("subspaces are not transverse")

    def swap(self) -> "LagrangianPair":
        return LagrangianPair(self.space, self.minus, self.plus)

    def apply(self, s: Sequence[Sequence]) -> "LagrangianPair":
        """Image under the linear map ``s`` (``s[j][i]`` = coefficient of ``e_j`` in ``s e_i``)."""
        def img(v):
            return tuple(sum((Fraction(s[j][i]) * v[i] for i in range(len(v)) if v[i]), Fraction(0))
                         for j in range(len(v)))
        return LagrangianPair(self.space, tuple(img(v) for v in self.plus), tuple(img(v) for v in self.minus))

    def rebase(self, rng: random.Random) -> "LagrangianPair":
        """Same subspaces, new spanning vectors (random unimodular recombination)."""
        def mix(basis):
            rows = [list(v) for v in basis]
            for _ in range(6):
                if len(rows) < 2:
                    rows[0] = [2 * x for x in rows[0]]
                    continue
                i, j = rng.sample(range(len(rows)), 2)
                c = rng.choice([-2, -1, 1, 2])
                rows[i] = [x + c * y for x, y in zip(rows[i], rows[j])]
            return tuple(tuple(r) for r in rows)
        return LagrangianPair(self.space, mix(self.plus), mix(self.minus))

    def same_as(self, other: "LagrangianPair") -> bool:
        return same_subspace(self.plus, other.plus) and same_subspace(self.minus, other.minus)

    def same_or_swapped(self, other: "LagrangianPair") -> bool:
        return self.same_as(other) or self.same_as(other.swap())


def standard_pair(n: int) -> LagrangianPair:
    sp = SymplecticSpace(n)
    return LagrangianPair(sp, tuple(tuple(sp.basis_vector(sp.x(i))) for i in range(1, n + 1)),
                          tuple(tuple(sp.basis_vector(sp.y(i))) for i in range(1, n + 1)))


def projection(pair: LagrangianPair, sign: int) -> Matrix:
    """Matrix of the projection of ``H`` onto ``L+`` along ``L-`` (``sign=+1``) or the reverse."""
    sp = pair.space
    p, q = adapted_basis(sp, pair.plus, pair.minus)
    out = [[Fraction(0)] * sp.dim for _ in range(sp.dim)]
    for c in range(sp.dim):
        e = sp.basis_vector(c)
        for i in range(sp.n):
            # coordinates in the adapted basis: a_i = ω(e, Q_i), b_i = ω(P_i, e)
            if sign > 0:
                coef, vec = sp.omega_vec(e, q[i]), p[i]
            else:
                coef, vec = sp.omega_vec(p[i], e), q[i]
            if coef:
                for r in range(sp.dim):
                    out[r][c] += coef * vec[r]
    return out


def eta(pair: LagrangianPair, sign: int) -> Matrix:
    """Exterior cube of :func:`projection`, in the standard triple basis of the cube."""
    return compound3(projection(pair, sign))


def eta_apply(pair: LagrangianPair, sign: int, w: Wedge3Element) -> Wedge3Element:
    return apply_wedge3(projection(pair, sign), w)


@dataclass(frozen=True)
class TwoForm:
    """Alternating form on the exterior cube as an antisymmetric matrix in the triple basis."""

    space: SymplecticSpace
    matrix: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        m = _frac_rows(self.matrix)
        object.__setattr__(self, "matrix", m)
        if any(m[i][j] != -m[j][i] for i in range(len(m)) for j in range(i, len(m))):
            raise ValueError("matrix is not antisymmetric")

    def __call__(self, u: Wedge3Element, v: Wedge3Element) -> Fraction:
        cu, cv = u.coords(), v.coords()
        return sum((cu[i] * row[j] * cv[j] for i, row in enumerate(self.matrix) if cu[i]
                    for j in range(len(row)) if row[j] and cv[j]), Fraction(0))

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.matrix)

    def pullback(self, c: Sequence[Sequence]) -> "TwoForm":
        """``(u, v) ↦ form(c u, c v)`` for a matrix ``c`` on the cube."""
        ct = [list(r) for r in zip(*c)]
        return TwoForm(self.space, tuple(tuple(r) for r in mat_mul(mat_mul(ct, self.matrix), c)))


def cup_form(pair: LagrangianPair) -> TwoForm:
    """``u∧v ↦ <η+ u, η- v> − <η+ v, η- u>`` with the determinant pairing on cubes.

    ``<η+ e_I, η- e_J>`` is the ``(I, J)`` minor of ``K[a][b] = ω(π+ e_a, π- e_b)``.
    """
    sp = pair.space
    pp, pm = projection(pair, 1), projection(pair, -1)
    k = [[sp.omega_vec([r[a] for r in pp], [r[b] for r in pm]) for b in range(sp.dim)] for a in range(sp.dim)]
    a = compound3(k)
    size = len(a)
    return TwoForm(sp, tuple(tuple(a[i][j] - a[j][i] for j in range(size)) for i in range(size)))


def cup_form_direct(pair: LagrangianPair, u: Wedge3Element, v: Wedge3Element) -> Fraction:
    """The same value evaluated straight from the definition (slow; for cross-checks)."""
    return (wedge_pairing(eta_apply(pair, 1, u), eta_apply(pair, -1, v))
            - wedge_pairing(eta_apply(pair, 1, v), eta_apply(pair, -1, u)))


def swapped_pair_equality(pair: LagrangianPair) -> bool:
    return cup_form(pair) == cup_form(pair.swap())


def distinguishes(pair_a: LagrangianPair, pair_b: LagrangianPair) -> bool:
    """True when the two cup forms coincide (the pairs are then expected equal or swapped)."""
    if pair_a.space != pair_b.space:
        raise LagrangianError("pairs live in different spaces")
    if pair_a.space.dim < 6:
        raise LagrangianError("the form separates pairs only when dim H >= 6")
    return cup_form(pair_a) == cup_form(pair_b)


def naturality_holds(pair: LagrangianPair, s: Sequence[Sequence]) -> bool:
    """``cup_form(s·pair)`` equals the pullback of ``cup_form(pair)`` along the cube action of ``s⁻¹``."""
    return cup_form(pair.apply(s)) == cup_form(pair).pullback(compound3(mat_inverse(s)))


# --- trials ---------------------------------------------------------------------

TRIAL_KINDS = ("equal", "swapped", "random", "shared-plus", "shared-minus", "cross")


def _shear(n: int, rng: random.Random, upper: bool) -> Matrix:
    """``[[I, B], [0, I]]`` (or its transpose shape) with ``B`` symmetric and nonzero."""
    b = [[0] * n for _ in range(n)]
    while not any(any(r) for r in b):
        for i in range(n):
            for j in range(i, n):
                b[i][j] = b[j][i] = rng.randint(-2, 2)
    m = [[Fraction(int(i == j)) for j in range(2 * n)] for i in range(2 * n)]
    for i in range(n):
        for j in range(n):
            if upper:
                m[i][n + j] = Fraction(b[i][j])
            else:
                m[n + i][j] = Fraction(b[i][j])
    return m


def make_trial(kind: str, n: int, rng: random.Random) -> Tuple[LagrangianPair, LagrangianPair]:
    """A base pair and a second pair of the given kind, both random symplectic images of the standard pair."""
    sp = SymplecticSpace(n)
    std = standard_pair(n)
    s0 = random_symplectic(sp, rng)
    a = std.apply(s0)
    if kind == "equal":
        b = a.rebase(rng)
    elif kind == "swapped":
        b = a.swap().rebase(rng)
    elif kind == "random":
        b = std.apply(random_symplectic(sp, rng))
    elif kind == "shared-plus":
        b = std.apply(_shear(n, rng, True)).apply(s0)
    elif kind == "shared-minus":
        b = std.apply(_shear(n, rng, False)).apply(s0)
    elif kind == "cross":
        b = std.apply(_shear(n, rng, False)).apply(s0)
        b = LagrangianPair(sp, a.minus, b.plus)
    else:
        raise ValueError(f"unknown trial kind {kind!r}")
    return a, b


def run_trials(n: int, trials: int, seed: int) -> Iterator[Dict[str, object]]:
    """One record per trial; ``agree`` is True when the form comparison matches the subspace predicate."""
    rng = random.Random(seed)
    for t in range(trials):
        kind = TRIAL_KINDS[t % len(TRIAL_KINDS)]
        a, b = make_trial(kind, n, rng)
        forms_equal = distinguishes(a, b)
        expected = a.same_or_swapped(b)
        yield {"trial": t, "kind": kind, "forms_equal": forms_equal, "same_or_swapped": expected,
               "agree": forms_equal == expected}
