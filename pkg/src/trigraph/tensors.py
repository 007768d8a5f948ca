"""Symplectic space, chord contractions and the exterior-cube calculus.

Basis vectors of ``H`` are numbered ``0..2n-1``: ``x_i`` is ``i-1`` and
``y_i`` is ``n+i-1``, so ``omega(x_i, y_j) = delta_ij``. Tensors are sparse
maps from index tuples to fractions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product
from math import comb, lcm
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from .chords import (ChordDiagram, ColoredChordDiagram, enumerate_colored, enumerate_diagrams,
                     to_colored_diagram)
from .graphs import CapExceededError, DecoratedGraph
from .linalg import SparseMatrix, kernel_basis, mat_inverse, mat_mul, rank_of_vectors

Triple = Tuple[int, int, int]
Vector = List[Fraction]

VARIANTS = ("sp-h", "sp-wedge3", "sp-u", "gl-h", "gl-wedge3", "gl-u")
# arity of the H-valued tensors, and degree for the exterior-cube rows
H_ARITY_CAP = 8
WEDGE_DEGREE_CAP = 1
GENUS_CAP = 6


class DegenerateGenusError(ValueError):
    """The genus is too small for the requested construction."""


class ArityMismatchError(ValueError):
    pass


# --- the space ----------------------------------------------------------------

@dataclass(frozen=True)
class SymplecticSpace:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("genus must be at least 1")

    @property
    def dim(self) -> int:
        return 2 * self.n

    def x(self, i: int) -> int:
        return i - 1

    def y(self, i: int) -> int:
        return self.n + i - 1

    def label(self, idx: int) -> str:
        return f"x{idx + 1}" if idx < self.n else f"y{idx - self.n + 1}"

    def omega(self, a: int, b: int) -> int:
        n = self.n
        if a < n <= b and b - n == a:
            return 1
        if b < n <= a and a - n == b:
            return -1
        return 0

    def omega_matrix(self) -> List[List[Fraction]]:
        return [[Fraction(self.omega(a, b)) for b in range(self.dim)] for a in range(self.dim)]

    def omega_vec(self, u: Sequence, v: Sequence) -> Fraction:
        n = self.n
        return sum((Fraction(u[i]) * v[n + i] - Fraction(u[n + i]) * v[i] for i in range(n)), Fraction(0))

    def basis_vector(self, idx: int) -> Vector:
        v = [Fraction(0)] * self.dim
        v[idx] = Fraction(1)
        return v

    def triples(self) -> List[Triple]:
        return list(combinations(range(self.dim), 3))


def _clean(d: Mapping) -> Dict:
    return {k: v for k, v in d.items() if v}


@dataclass
class Tensor:
    """Sparse element of the ``arity``-fold tensor power of ``H``."""

    space: SymplecticSpace
    arity: int
    entries: Dict[Tuple[int, ...], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        ents = {}
        for key, v in self.entries.items():
            if len(key) != self.arity:
                raise ArityMismatchError(f"index {key} has wrong length for arity {self.arity}")
            if any(not 0 <= i < self.space.dim for i in key):
                raise IndexError(f"index {key} outside basis of dimension {self.space.dim}")
            v = Fraction(v)
            if v:
                ents[tuple(key)] = v
        self.entries = ents

    def _check(self, other: "Tensor") -> None:
        if self.space != other.space or self.arity != other.arity:
            raise ArityMismatchError("tensors live in different spaces")

    def __add__(self, other: "Tensor") -> "Tensor":
        self._check(other)
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out.get(k, 0) + v
        return Tensor(self.space, self.arity, _clean(out))

    def __neg__(self) -> "Tensor":
        return Tensor(self.space, self.arity, {k: -v for k, v in self.entries.items()})

    def __sub__(self, other: "Tensor") -> "Tensor":
        return self + (-other)

    def __rmul__(self, c) -> "Tensor":
        return Tensor(self.space, self.arity, {k: c * v for k, v in self.entries.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tensor):
            return NotImplemented
        return (self.space, self.arity, self.entries) == (other.space, other.arity, other.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def apply(self, s: Sequence[Sequence]) -> "Tensor":
        """Act by ``s`` on every factor; ``s[j][i]`` is the ``e_j`` coefficient of ``s(e_i)``."""
        cols = [[(j, Fraction(s[j][i])) for j in range(self.space.dim) if s[j][i]] for i in range(self.space.dim)]
        cur = self.entries
        for pos in range(self.arity):
            nxt: Dict[Tuple[int, ...], Fraction] = {}
            for key, v in cur.items():
                for j, c in cols[key[pos]]:
                    k2 = key[:pos] + (j,) + key[pos + 1:]
                    nxt[k2] = nxt.get(k2, 0) + c * v
            cur = _clean(nxt)
        return Tensor(self.space, self.arity, cur)

    def pretty(self) -> str:
        if not self.entries:
            return "0"
        parts = []
        for key in sorted(self.entries):
            parts.append(f"{self.entries[key]}*" + "⊗".join(self.space.label(i) for i in key))
        return " + ".join(parts)


@dataclass
class Wedge3Element:
    """Sparse element of the exterior cube, keyed by increasing index triples."""

    space: SymplecticSpace
    entries: Dict[Triple, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        ents = {}
        for key, v in self.entries.items():
            key = tuple(key)
            if len(key) != 3 or not key[0] < key[1] < key[2]:
                raise ValueError(f"wedge index {key} is not strictly increasing")
            if key[2] >= self.space.dim or key[0] < 0:
                raise IndexError(f"wedge index {key} out of range")
            v = Fraction(v)
            if v:
                ents[key] = v
        self.entries = ents

    @classmethod
    def basis(cls, space: SymplecticSpace, a: int, b: int, c: int) -> "Wedge3Element":
        """``e_a ∧ e_b ∧ e_c`` for arbitrary (possibly unsorted) indices."""
        sign, key = _sort_sign((a, b, c))
        return cls(space, {key: sign} if sign else {})

    @classmethod
    def from_vectors(cls, space: SymplecticSpace, a: Sequence, b: Sequence, c: Sequence) -> "Wedge3Element":
        out = {}
        for t in combinations(range(space.dim), 3):
            d = _det3([[Fraction(v[i]) for i in t] for v in (a, b, c)])
            if d:
                out[t] = d
        return cls(space, out)

    def __add__(self, other: "Wedge3Element") -> "Wedge3Element":
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out.get(k, 0) + v
        return Wedge3Element(self.space, _clean(out))

    def __neg__(self) -> "Wedge3Element":
        return Wedge3Element(self.space, {k: -v for k, v in self.entries.items()})

    def __sub__(self, other: "Wedge3Element") -> "Wedge3Element":
        return self + (-other)

    def __rmul__(self, c) -> "Wedge3Element":
        return Wedge3Element(self.space, {k: c * v for k, v in self.entries.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, Wedge3Element):
            return NotImplemented
        return self.space == other.space and self.entries == other.entries

    def __bool__(self) -> bool:
        return bool(self.entries)

    def coords(self) -> List[Fraction]:
        return [self.entries.get(t, Fraction(0)) for t in self.space.triples()]


class UElement(Wedge3Element):
    """Exterior-cube element lying in the kernel of :func:`kappa`."""

    def __post_init__(self):
        super().__post_init__()
        if any(kappa(self)):
            raise ValueError("element is not in the kernel of kappa")


def _sort_sign(key: Sequence[int]) -> Tuple[int, Tuple[int, ...]]:
    if len(set(key)) < len(key):
        return 0, tuple(sorted(key))
    sign = 1
    k = list(key)
    for i in range(len(k)):
        for j in range(len(k) - 1 - i):
            if k[j] > k[j + 1]:
                k[j], k[j + 1] = k[j + 1], k[j]
                sign = -sign
    return sign, tuple(k)


def _det3(m: Sequence[Sequence[Fraction]]) -> Fraction:
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


# --- chord contractions ---------------------------------------------------------

def contract_sp(d: ChordDiagram, n: int) -> Tensor:
    """Place ``sum_i x_i⊗y_i - y_i⊗x_i`` on every chord ``(a, b)``, ``a < b``."""
    space = SymplecticSpace(n)
    out: Dict[Tuple[int, ...], Fraction] = {}
    per_chord = [(i, s) for i in range(n) for s in (1, -1)]
    for choice in product(per_chord, repeat=d.degree):
        key = [0] * d.size
        sign = 1
        for (a, b), (i, s) in zip(d.chords, choice):
            if s == 1:
                key[a - 1], key[b - 1] = space.x(i + 1), space.y(i + 1)
            else:
                key[a - 1], key[b - 1] = space.y(i + 1), space.x(i + 1)
                sign = -sign
        out[tuple(key)] = Fraction(sign)
    return Tensor(space, d.size, out)


def contract_gl(d: ColoredChordDiagram, n: int) -> Tensor:
    """Place ``sum_i x_i`` at every chord tail and the matching ``y_i`` at its head."""
    space = SymplecticSpace(n)
    out: Dict[Tuple[int, ...], Fraction] = {}
    for choice in product(range(n), repeat=d.degree):
        key = [0] * (2 * d.degree)
        for (t, h), i in zip(d.arcs, choice):
            key[t - 1], key[h - 1] = space.x(i + 1), space.y(i + 1)
        out[tuple(key)] = Fraction(1)
    return Tensor(space, 2 * d.degree, out)


def color_sum(d: ChordDiagram, n: int) -> Tensor:
    """Signed sum of :func:`contract_gl` over all colorings, sign ``(-1)^{#reversed chords}``."""
    from .chords import all_colorings

    total = Tensor(SymplecticSpace(n), d.size)
    for c in all_colorings(d):
        t = contract_gl(c, n)
        total = total + (t if c.reversed_count() % 2 == 0 else -t)
    return total


# --- exterior cube ----------------------------------------------------------------

def wedge3_include(w: Wedge3Element) -> Tensor:
    """Full antisymmetrization, with no 1/6 normalization."""
    out: Dict[Tuple[int, ...], Fraction] = {}
    for key, v in w.entries.items():
        for p in permutations(range(3)):
            sign, _ = _sort_sign(p)
            out[tuple(key[i] for i in p)] = sign * v
    return Tensor(w.space, 3, out)


def project_wedge3(t: Tensor) -> Wedge3Element:
    if t.arity != 3:
        raise ArityMismatchError("projection to the exterior cube needs arity 3")
    out: Dict[Triple, Fraction] = {}
    for key, v in t.entries.items():
        sign, k = _sort_sign(key)
        if sign:
            out[k] = out.get(k, 0) + sign * v
    return Wedge3Element(t.space, _clean(out))


def kappa(w: Wedge3Element) -> Vector:
    """Contraction ``a∧b∧c ↦ 2(ω(a,b)c − ω(a,c)b + ω(b,c)a)``."""
    sp = w.space
    out = [Fraction(0)] * sp.dim
    for (a, b, c), v in w.entries.items():
        out[c] += 2 * v * sp.omega(a, b)
        out[b] -= 2 * v * sp.omega(a, c)
        out[a] += 2 * v * sp.omega(b, c)
    return out


def iota(space: SymplecticSpace, v: Sequence) -> Wedge3Element:
    """``v ↦ sum_i v ∧ x_i ∧ y_i``."""
    total = Wedge3Element(space)
    for i in range(1, space.n + 1):
        total = total + Wedge3Element.from_vectors(space, v, space.basis_vector(space.x(i)),
                                                   space.basis_vector(space.y(i)))
    return total


@lru_cache(maxsize=None)
def kappa_iota_scalar(n: int) -> Fraction:
    """The scalar ``c`` with ``kappa(iota(v)) = c v``, checked on every basis vector."""
    space = SymplecticSpace(n)
    c = None
    for idx in range(space.dim):
        img = kappa(iota(space, space.basis_vector(idx)))
        scalar = img[idx]
        if any(img[j] for j in range(space.dim) if j != idx):
            raise AssertionError("kappa∘iota is not diagonal")
        if c is None:
            c = scalar
        elif scalar != c:
            raise AssertionError("kappa∘iota is not scalar")
    return c


def kappa_matrix(n: int) -> SparseMatrix:
    space = SymplecticSpace(n)
    triples = space.triples()
    entries = {}
    for col, t in enumerate(triples):
        img = kappa(Wedge3Element(space, {t: 1}))
        for row, v in enumerate(img):
            if v:
                entries[(row, col)] = v
    return SparseMatrix(space.dim, len(triples), entries)


def u_basis(n: int) -> List[UElement]:
    if n < 2:
        raise DegenerateGenusError("kernel basis needs genus at least 2")
    space = SymplecticSpace(n)
    triples = space.triples()
    return [UElement(space, {triples[j]: v for j, v in vec.items()}) for vec in kernel_basis(kappa_matrix(n))]


def project_U(w: Wedge3Element) -> UElement:
    """Projection onto ``ker kappa`` along the image of :func:`iota`."""
    c = kappa_iota_scalar(w.space.n)
    if not c:
        raise DegenerateGenusError(f"kappa∘iota vanishes at genus {w.space.n}")
    res = w - (1 / c) * iota(w.space, kappa(w))
    return UElement(w.space, res.entries)


@lru_cache(maxsize=None)
def _project_U_basis(n: int, t: Triple) -> Tuple[Tuple[Triple, Fraction], ...]:
    return tuple(sorted(project_U(Wedge3Element(SymplecticSpace(n), {t: 1})).entries.items()))


# --- factorwise maps for the tensor-power-of-cube rows -----------------------------

WedgeTensor = Dict[Tuple[Triple, ...], Fraction]


def group_wedge3(t: Tensor) -> WedgeTensor:
    """Push ``⊗^{3k} H`` onto ``⊗^k Λ³H`` by projecting consecutive triples of factors."""
    if t.arity % 3:
        raise ArityMismatchError("arity must be a multiple of 3")
    out: WedgeTensor = {}
    for key, v in t.entries.items():
        sign, groups = 1, []
        for j in range(0, t.arity, 3):
            s, k = _sort_sign(key[j:j + 3])
            sign *= s
            groups.append(k)
        if sign:
            g = tuple(groups)
            out[g] = out.get(g, 0) + sign * v
    return _clean(out)


def project_U_factorwise(n: int, w: WedgeTensor) -> WedgeTensor:
    cur = w
    k = len(next(iter(w))) if w else 0
    for pos in range(k):
        nxt: WedgeTensor = {}
        for key, v in cur.items():
            for t2, c in _project_U_basis(n, key[pos]):
                k2 = key[:pos] + (t2,) + key[pos + 1:]
                nxt[k2] = nxt.get(k2, 0) + c * v
        cur = _clean(nxt)
    return cur


def _double_factorial(k: int) -> int:
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


def threshold_met(variant: str, m: int, n: int) -> bool:
    """Whether ``n`` reaches the injectivity threshold for this table row."""
    return n >= (m if variant.endswith("-h") else 3 * m)


def invariant_vectors(variant: str, m: int, n: int) -> List[Mapping]:
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; choose from {', '.join(VARIANTS)}")
    if n < 1 or n > GENUS_CAP:
        raise CapExceededError("genus", n, GENUS_CAP)
    group, target = variant.split("-")
    chords = m if target == "h" else 3 * m
    if target == "h" and 2 * m > H_ARITY_CAP:
        raise CapExceededError("tensor_arity", 2 * m, H_ARITY_CAP)
    if target != "h" and m > WEDGE_DEGREE_CAP:
        raise CapExceededError("wedge_degree", m, WEDGE_DEGREE_CAP)
    if group == "sp":
        tensors = [contract_sp(d, n) for d in enumerate_diagrams(chords)]
    else:
        tensors = [contract_gl(d, n) for d in enumerate_colored(chords)]
    if target == "h":
        return [t.entries for t in tensors]
    grouped = [group_wedge3(t) for t in tensors]
    if target == "u":
        if n < 2:
            raise DegenerateGenusError("the quotient by H needs genus at least 2")
        grouped = [project_U_factorwise(n, g) for g in grouped]
    return grouped


def invariant_rank(variant: str, m: int, n: int) -> int:
    """Rank of the span of all (colored) contraction images for one table row."""
    return rank_of_vectors(invariant_vectors(variant, m, n))


EXPECTED_TABLE = {("sp-h", 3): 15, ("sp-wedge3", 1): 2, ("sp-u", 1): 1,
                  ("gl-h", 3): 120, ("gl-wedge3", 1): 6, ("gl-u", 1): 4}


def diagram_count(variant: str, m: int) -> int:
    chords = m if variant.endswith("-h") else 3 * m
    return _double_factorial(2 * chords - 1) * (2 ** chords if variant.startswith("gl") else 1)


# --- the four-dimensional decorated theta space ---------------------------------------

THETA_COLORINGS: Tuple[Tuple[Tuple[int, int], ...], ...] = (
    ((1, 4), (2, 5), (3, 6)),
    ((1, 4), (2, 5), (6, 3)),
    ((1, 4), (5, 2), (6, 3)),
    ((4, 1), (5, 2), (6, 3)),
)
# dumbbell: loops at both vertices, one connecting edge
DUMBBELL_COLORINGS: Tuple[Tuple[Tuple[int, int], ...], ...] = tuple(
    tuple((b, a) if f else (a, b) for (a, b), f in zip(((1, 2), (3, 6), (4, 5)), flips))
    for flips in product((False, True), repeat=3)
)


def decorated_image(g: DecoratedGraph, n: int, project: bool = True) -> WedgeTensor:
    """Colored contraction of ``g`` grouped into cube factors, optionally projected to ``U``."""
    img = group_wedge3(contract_gl(to_colored_diagram(g), n))
    return project_U_factorwise(n, img) if project else img


def theta_graphs() -> List[DecoratedGraph]:
    verts = ((1, 2, 3), (4, 5, 6))
    return [DecoratedGraph(verts, arcs) for arcs in THETA_COLORINGS]


def dumbbell_graphs() -> List[DecoratedGraph]:
    verts = ((1, 2, 3), (4, 5, 6))
    return [DecoratedGraph(verts, arcs) for arcs in DUMBBELL_COLORINGS]


def figure8_basis_check(n: int = 3) -> Dict[str, object]:
    """Rank of the four loop-free colored thetas in ``⊗²U``; loop-bearing images must vanish."""
    if n < 2:
        raise DegenerateGenusError("needs genus at least 2")
    images = [decorated_image(g, n) for g in theta_graphs()]
    rank = rank_of_vectors(images)
    loop_images = [decorated_image(g, n) for g in dumbbell_graphs()]
    loops_zero = all(not img for img in loop_images)
    rank_with_loops = rank_of_vectors(images + loop_images)
    return {"n": n, "rank": rank, "loop_images_zero": loops_zero, "rank_with_loops": rank_with_loops,
            "passed": rank == 4 and loops_zero and rank_with_loops == rank}


# --- pairings -----------------------------------------------------------------------

def c_theta(a: Tensor, b: Tensor) -> Fraction:
    """``(a1⊗a2⊗a3, b1⊗b2⊗b3) ↦ ω(a1,b1) ω(a2,b2) ω(a3,b3)``, extended bilinearly."""
    if a.arity != 3 or b.arity != 3:
        raise ArityMismatchError("c_theta takes two arity-3 tensors")
    if a.space != b.space:
        raise ArityMismatchError("tensors live in different spaces")
    sp = a.space
    total = Fraction(0)
    for ka, va in a.entries.items():
        partners = [[(j, sp.omega(i, j)) for j in range(sp.dim) if sp.omega(i, j)] for i in ka]
        for (j1, w1), (j2, w2), (j3, w3) in product(*partners):
            vb = b.entries.get((j1, j2, j3))
            if vb:
                total += va * vb * w1 * w2 * w3
    return total


def wedge_pairing(a: Wedge3Element, b: Wedge3Element) -> Fraction:
    """``<a1∧a2∧a3, b1∧b2∧b3> = det[ω(a_i, b_j)]``."""
    sp = a.space
    total = Fraction(0)
    for ta, va in a.entries.items():
        for tb, vb in b.entries.items():
            d = _det3([[Fraction(sp.omega(i, j)) for j in tb] for i in ta])
            if d:
                total += va * vb * d
    return total


def compound3(m: Sequence[Sequence]) -> List[List[Fraction]]:
    """Third compound matrix: the action of ``m`` on the exterior cube in the triple basis."""
    rows = list(combinations(range(len(m)), 3))
    cols = list(combinations(range(len(m[0])), 3))
    # work over a common denominator so the minors are integer determinants
    fr = [[Fraction(x) for x in row] for row in m]
    den = 1
    for row in fr:
        for x in row:
            den = lcm(den, x.denominator)
    z = [[x.numerator * (den // x.denominator) for x in row] for row in fr]
    d3 = den ** 3
    return [[Fraction(_det3([[z[i][j] for j in c] for i in r]), d3) for c in cols] for r in rows]


def apply_wedge3(m: Sequence[Sequence], w: Wedge3Element) -> Wedge3Element:
    """Image of ``w`` under the linear map ``m`` acting factorwise (``m[j][i]`` = coefficient of ``e_j`` in ``m e_i``)."""
    sp = w.space
    out: Dict[Triple, Fraction] = {}
    for (a, b, c), v in w.entries.items():
        img = Wedge3Element.from_vectors(sp, [row[a] for row in m], [row[b] for row in m], [row[c] for row in m])
        for k, x in img.entries.items():
            out[k] = out.get(k, 0) + v * x
    return Wedge3Element(sp, _clean(out))


def adapted_basis(space: SymplecticSpace, plus: Sequence[Sequence], minus: Sequence[Sequence]):
    """Return ``(P, Q)`` spanning ``plus`` and ``minus`` with ``ω(P_i, Q_j) = δ_ij``.

    ``P`` is ``plus`` itself; ``Q`` is the dual recombination of ``minus``.
    Raises ``ValueError`` when the subspaces are not transverse.
    """
    w = [[space.omega_vec(p, q) for q in minus] for p in plus]
    try:
        winv = mat_inverse(w)
    except ZeroDivisionError:
        raise ValueError("subspaces are not transverse") from None
    n = len(plus)
    q = [[sum((Fraction(minus[k][c]) * winv[k][j] for k in range(n)), Fraction(0)) for c in range(space.dim)]
         for j in range(n)]
    return [[Fraction(x) for x in p] for p in plus], q


def _pure_coefficients(w: Wedge3Element, basis: List[Vector], dual: List[Vector], flip: bool) -> Dict[Triple, Fraction]:
    """Coefficients of ``w`` on ``basis_i∧basis_j∧basis_k`` read off via the wedge pairing with ``dual``."""
    sp = w.space
    out = {}
    for t in combinations(range(len(basis)), 3):
        probe = Wedge3Element.from_vectors(sp, *[dual[i] for i in t])
        val = wedge_pairing(probe, w) if flip else wedge_pairing(w, probe)
        if val:
            out[t] = val
    return out


def c_theta_U(alpha1: Wedge3Element, alpha2: Wedge3Element, pair) -> Fraction:
    """Coordinate pairing: pure-``L+`` coefficients of ``alpha1`` against pure-``L-`` coefficients of ``alpha2``.

    Both coefficient sets are taken in the adapted basis of ``pair``; any lift
    of a class in ``U`` gives the same value because ``iota`` has no pure part.
    """
    space = alpha1.space
    p, q = adapted_basis(space, pair.plus, pair.minus)
    # <P_I, Q_J> = δ_IJ, so pairing against the opposite side isolates each coefficient
    a = _pure_coefficients(alpha1, p, q, flip=False)
    b = _pure_coefficients(alpha2, q, p, flip=True)
    return sum((v * b.get(t, 0) for t, v in a.items()), Fraction(0))


def pure_part(w: Wedge3Element, basis: List[Vector], dual: List[Vector], flip: bool) -> Wedge3Element:
    """The component of ``w`` inside the cube of ``span(basis)``, written in the standard basis."""
    total = Wedge3Element(w.space)
    for t, v in _pure_coefficients(w, basis, dual, flip).items():
        total = total + v * Wedge3Element.from_vectors(w.space, *[basis[i] for i in t])
    return total


def c_theta_composite(alpha1: Wedge3Element, alpha2: Wedge3Element, pair) -> Fraction:
    """Project to the two Lagrangian cubes, include both into ``⊗³H`` and apply :func:`c_theta`."""
    p, q = adapted_basis(alpha1.space, pair.plus, pair.minus)
    a = pure_part(alpha1, p, q, flip=False)
    b = pure_part(alpha2, q, p, flip=True)
    return c_theta(wedge3_include(a), wedge3_include(b))


# --- random group elements --------------------------------------------------------

def transvection(space: SymplecticSpace, v: Sequence, c) -> List[List[Fraction]]:
    """Matrix of ``u ↦ u + c ω(u, v) v``."""
    cols = []
    for i in range(space.dim):
        e = space.basis_vector(i)
        f = Fraction(c) * space.omega_vec(e, v)
        cols.append([e[j] + f * v[j] for j in range(space.dim)])
    return [[cols[i][j] for i in range(space.dim)] for j in range(space.dim)]


def random_symplectic(space: SymplecticSpace, rng: random.Random, lo: int = 5, hi: int = 20) -> List[List[Fraction]]:
    """Product of ``lo..hi`` transvections with integer data in ``[-3, 3]``."""
    m = [[Fraction(int(i == j)) for j in range(space.dim)] for i in range(space.dim)]
    for _ in range(rng.randint(lo, hi)):
        v = [Fraction(rng.randint(-3, 3)) for _ in range(space.dim)]
        c = rng.choice([-3, -2, -1, 1, 2, 3])
        m = mat_mul(transvection(space, v, c), m)
    return m


def random_gl_block(space: SymplecticSpace, rng: random.Random, steps: int = 10) -> List[List[Fraction]]:
    """``diag(A, A^{-T})`` for a random integer product ``A`` of elementary matrices."""
    n = space.n
    a = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        if n == 1:
            a = [[a[0][0] * rng.choice([-2, -1, 2, 3])]]
            continue
        i, j = rng.sample(range(n), 2)
        c = rng.choice([-3, -2, -1, 1, 2, 3])
        a[i] = [x + c * y for x, y in zip(a[i], a[j])]
    ainv_t = [list(r) for r in zip(*mat_inverse(a))]
    out = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        for j in range(n):
            out[i][j] = a[i][j]
            out[n + i][n + j] = ainv_t[i][j]
    return out


def check_sp_invariance(m: int, n: int, trials: int, seed: int) -> Tuple[int, int]:
    """``(passed, total)`` over all diagrams of degree ``m`` and ``trials`` random symplectic maps."""
    space = SymplecticSpace(n)
    rng = random.Random(seed)
    tensors = [contract_sp(d, n) for d in enumerate_diagrams(m)]
    passed = total = 0
    for _ in range(trials):
        s = random_symplectic(space, rng)
        for t in tensors:
            total += 1
            passed += t.apply(s) == t
    return passed, total


def check_gl_invariance(m: int, n: int, trials: int, seed: int) -> Tuple[int, int]:
    space = SymplecticSpace(n)
    rng = random.Random(seed)
    tensors = [contract_gl(d, n) for d in enumerate_colored(m)]
    passed = total = 0
    for _ in range(trials):
        g = random_gl_block(space, rng)
        for t in tensors:
            total += 1
            passed += t.apply(g) == t
    return passed, total


def u_dimension(n: int) -> int:
    return comb(2 * n, 3) - 2 * n


def iter_triples(space: SymplecticSpace) -> Iterable[Triple]:
    return combinations(range(space.dim), 3)
