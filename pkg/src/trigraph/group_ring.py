"""Free-group rings, bar cochains and truncated Magnus expansions.

A word is a tuple of nonzero integers: ``g`` stands for generator ``x_g``
and ``-g`` for its inverse. Words are always freely reduced.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Dict, Iterable, List, Sequence, Tuple, Union

Word = Tuple[int, ...]
Monomial = Tuple[int, ...]
BarTuple = Tuple[Word, ...]
BracketExpr = Union[int, Tuple["BracketExpr", "BracketExpr"]]

MAGNUS_CAP = 6
BRACKET_CAP = 5


def reduce_word(letters: Iterable[int]) -> Word:
    out: List[int] = []
    for a in letters:
        if a == 0:
            raise ValueError("0 is not a letter")
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def inverse(w: Word) -> Word:
    return tuple(-a for a in reversed(w))


def word_mul(*ws: Word) -> Word:
    return reduce_word(a for w in ws for a in w)


def word_pow(w: Word, m: int) -> Word:
    base = w if m >= 0 else inverse(w)
    return word_mul(*([base] * abs(m)))


def commutator(g: Word, h: Word) -> Word:
    """``[g, h] = g h g⁻¹ h⁻¹``."""
    return word_mul(g, h, inverse(g), inverse(h))


def right_nested(words: Sequence[Word]) -> Word:
    """``[w_1, [w_2, ... [w_{n-1}, w_n]]]``; a single word is returned as is."""
    acc = words[-1]
    for w in reversed(words[:-1]):
        acc = commutator(w, acc)
    return acc


def random_word(rng: random.Random, rank: int, max_len: int) -> Word:
    letters = [rng.choice([1, -1]) * rng.randint(1, rank) for _ in range(rng.randint(0, max_len))]
    return reduce_word(letters)


# --- group ring ----------------------------------------------------------------

@dataclass
class RingElement:
    """Finite rational combination of reduced words."""

    terms: Dict[Word, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for w, c in self.terms.items():
            w = reduce_word(w)
            clean[w] = clean.get(w, 0) + Fraction(c)
        self.terms = {w: c for w, c in clean.items() if c}

    @classmethod
    def one(cls) -> "RingElement":
        return cls({(): 1})

    @classmethod
    def of(cls, w: Word) -> "RingElement":
        return cls({w: 1})

    def __add__(self, other: "RingElement") -> "RingElement":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return RingElement(out)

    def __neg__(self) -> "RingElement":
        return RingElement({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "RingElement") -> "RingElement":
        return self + (-other)

    def __mul__(self, other) -> "RingElement":
        if not isinstance(other, RingElement):
            return RingElement({w: c * other for w, c in self.terms.items()})
        return ring_mul(self, other)

    def __rmul__(self, c) -> "RingElement":
        return RingElement({w: c * v for w, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def augmentation(self) -> Fraction:
        return sum(self.terms.values(), Fraction(0))


def ring_mul(a: RingElement, b: RingElement) -> RingElement:
    out: Dict[Word, Fraction] = {}
    for u, cu in a.terms.items():
        for v, cv in b.terms.items():
            w = word_mul(u, v)
            out[w] = out.get(w, 0) + cu * cv
    return RingElement(out)


def one_minus(w: Word) -> RingElement:
    return RingElement.one() - RingElement.of(w)


def phi(t: BarTuple) -> RingElement:
    """``[g_1|...|g_n] ↦ (1 − g_1)...(1 − g_n)``; the empty tuple gives 1."""
    acc = RingElement.one()
    for g in t:
        acc = acc * one_minus(g)
    return acc


def delta_phi(t: BarTuple) -> RingElement:
    """Coboundary of ``phi_n`` evaluated on an ``(n+1)``-tuple."""
    n = len(t) - 1
    if n < 1:
        raise ValueError("need a tuple of length at least 2")
    total = phi(t[1:])
    for i in range(1, n + 1):
        merged = t[:i - 1] + (word_mul(t[i - 1], t[i]),) + t[i + 1:]
        total = total + (-1) ** i * phi(merged)
    return total + (-1) ** (n + 1) * phi(t[:n])


def delta_phi_check(t: BarTuple) -> bool:
    """``delta phi_n`` is 0 for even ``n`` and ``phi_{n+1}`` for odd ``n``."""
    n = len(t) - 1
    expected = RingElement() if n % 2 == 0 else phi(t)
    return delta_phi(t) == expected


def lemma22_trials(n: int, trials: int, seed: int, rank: int = 2, max_len: int = 4) -> Tuple[int, int]:
    """``(passed, total)`` over random ``(n+1)``-tuples of words."""
    rng = random.Random(seed)
    passed = 0
    for _ in range(trials):
        t = tuple(random_word(rng, rank, max_len) for _ in range(n + 1))
        passed += delta_phi_check(t)
    return passed, trials


# --- bar chains over a free abelian group ---------------------------------------------

Element = Tuple[int, ...]          # exponent vector
Chain = Dict[Tuple[Element, ...], int]


def _add(a: Element, b: Element) -> Element:
    return tuple(x + y for x, y in zip(a, b))


def _neg(a: Element) -> Element:
    return tuple(-x for x in a)


def _acc(out: Chain, key, c: int) -> None:
    v = out.get(key, 0) + c
    if v:
        out[key] = v
    else:
        out.pop(key, None)


def bar_boundary(chain: Chain) -> Chain:
    """``[g_1|...|g_n] ↦ [g_2|...] + Σ (−1)^i [..|g_i g_{i+1}|..] + (−1)^n [..|g_{n−1}]``."""
    out: Chain = {}
    for t, c in chain.items():
        n = len(t)
        if n == 0:
            continue
        _acc(out, t[1:], c)
        for i in range(1, n):
            _acc(out, t[:i - 1] + (_add(t[i - 1], t[i]),) + t[i + 1:], (-1) ** i * c)
        _acc(out, t[:n - 1], (-1) ** n * c)
    return out


def gamma(chain: Chain, sign_shift: int = 0) -> Chain:
    """``[g_1|...|g_n] ↦ (−1)^{C(n,2)} [g_n⁻¹|...|g_1⁻¹]``.

    ``sign_shift=1`` uses ``(−1)^{C(n+1,2)}`` instead.
    """
    out: Chain = {}
    for t, c in chain.items():
        n = len(t)
        sign = (-1) ** comb(n + sign_shift, 2)
        _acc(out, tuple(_neg(g) for g in reversed(t)), sign * c)
    return out


def gamma_word(t: BarTuple) -> Tuple[int, BarTuple]:
    """The involution on a tuple of free-group words: ``(sign, reversed inverses)``."""
    return (-1) ** comb(len(t), 2), tuple(inverse(g) for g in reversed(t))


def _random_element(rng: random.Random, rank: int, allow_identity: bool) -> Element:
    while True:
        e = tuple(rng.randint(-2, 2) for _ in range(rank))
        if allow_identity or any(e):
            return e


def gamma_chain_map_check(n: int, trials: int, seed: int, rank: int = 2, mode: str = "commute",
                          sign_shift: int = 0) -> Tuple[int, int]:
    """Compare ``∂γ`` with ``γ∂`` on random monomial ``n``-tuples.

    ``mode="commute"`` tests ``∂γ = γ∂``; ``mode="anticommute"`` tests ``∂γ = −γ∂``.
    Returns ``(passed, total)``.
    """
    if n > 4:
        raise ValueError("tuple length capped at 4")
    rng = random.Random(seed)
    passed = 0
    for k in range(trials):
        t = tuple(_random_element(rng, rank, allow_identity=(k % 5 == 0)) for _ in range(n))
        chain = {t: 1}
        lhs = bar_boundary(gamma(chain, sign_shift))
        rhs = gamma(bar_boundary(chain), sign_shift)
        if mode == "anticommute":
            rhs = {key: -v for key, v in rhs.items()}
        passed += lhs == rhs
    return passed, trials


# --- Magnus expansion ----------------------------------------------------------------

@dataclass
class TensorSeries:
    """Truncated noncommutative power series in ``X_1, X_2, ...``."""

    N: int
    terms: Dict[Monomial, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {m: Fraction(c) for m, c in self.terms.items() if c and len(m) <= self.N}

    @classmethod
    def one(cls, N: int) -> "TensorSeries":
        return cls(N, {(): 1})

    def __add__(self, other: "TensorSeries") -> "TensorSeries":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return TensorSeries(min(self.N, other.N), out)

    def __neg__(self) -> "TensorSeries":
        return TensorSeries(self.N, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "TensorSeries") -> "TensorSeries":
        return self + (-other)

    def __rmul__(self, c) -> "TensorSeries":
        return TensorSeries(self.N, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other: "TensorSeries") -> "TensorSeries":
        N = min(self.N, other.N)
        out: Dict[Monomial, Fraction] = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                if len(a) + len(b) <= N:
                    out[a + b] = out.get(a + b, 0) + ca * cb
        return TensorSeries(N, out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorSeries):
            return NotImplemented
        return self.N == other.N and self.terms == other.terms

    def degree_part(self, d: int) -> Dict[Monomial, Fraction]:
        return {m: c for m, c in self.terms.items() if len(m) == d}

    def truncate(self, N: int) -> "TensorSeries":
        return TensorSeries(min(N, self.N), self.terms)

    def low_degree(self) -> int | None:
        """Smallest degree carrying a nonzero term, or None for the zero series."""
        return min((len(m) for m in self.terms), default=None)


def _letter_series(a: int, N: int) -> TensorSeries:
    g = abs(a)
    if a > 0:
        return TensorSeries(N, {(): 1, (g,): 1})
    # (1 + X)^{-1} = sum_k (-X)^k
    return TensorSeries(N, {(g,) * k: (-1) ** k for k in range(N + 1)})


def magnus(w: Word, N: int) -> TensorSeries:
    """Image of ``w`` under ``x_g ↦ 1 + X_g``, truncated above degree ``N``."""
    if N > MAGNUS_CAP:
        raise ValueError(f"truncation degree capped at {MAGNUS_CAP}")
    acc = TensorSeries.one(N)
    for a in w:
        acc = acc * _letter_series(a, N)
    return acc


def magnus_ring(x: RingElement, N: int) -> TensorSeries:
    total = TensorSeries(N)
    for w, c in x.terms.items():
        total = total + c * magnus(w, N)
    return total


def in_lower_central(g: Word, q: int) -> bool:
    """Magnus test: ``magnus(g)`` has no terms of positive degree below ``q``."""
    if q <= 1:
        return True
    return magnus(g, q - 1) == TensorSeries.one(q - 1)


# --- group-ring identities --------------------------------------------------------------

def eq20_check(g: Word, h: Word) -> bool:
    """``1 − [g,h] = (−(1−g)(1−h) + (1−h)(1−g)) g⁻¹ h⁻¹`` exactly in the group ring."""
    lhs = one_minus(commutator(g, h))
    rhs = (-phi((g, h)) + phi((h, g))) * RingElement.of(inverse(g)) * RingElement.of(inverse(h))
    return lhs == rhs


def eq21_check(g: Word, m: int, q: int, N: int | None = None) -> bool:
    """``m(1 − g) ≡ 1 − g^m`` modulo degree ``q+1`` for ``g`` in the ``q``-th lower central term."""
    N = q + 1 if N is None else N
    if N < q + 1:
        raise ValueError("truncation must reach degree q+1")
    lhs = magnus_ring(m * one_minus(g), N).truncate(q)
    rhs = magnus_ring(one_minus(word_pow(g, m)), N).truncate(q)
    return lhs == rhs


def random_commutator(rng: random.Random, q: int, rank: int, max_len: int = 2) -> Word:
    """Right-nested commutator of ``q`` random nonempty words."""
    words = []
    for _ in range(q):
        w = ()
        while not w:
            w = random_word(rng, rank, max_len)
        words.append(w)
    return right_nested(words)


def eq20_trials(trials: int, seed: int, rank: int = 3, max_len: int = 4) -> Tuple[int, int]:
    rng = random.Random(seed)
    passed = sum(eq20_check(random_word(rng, rank, max_len), random_word(rng, rank, max_len))
                 for _ in range(trials))
    return passed, trials


def eq21_trials(trials: int, seed: int, rank: int = 2) -> Tuple[int, int]:
    """Weights ``q = 2, 3`` alternate; exponents range over ``-3..4``."""
    rng = random.Random(seed)
    passed = 0
    for k in range(trials):
        q = 2 + k % 2
        g = random_commutator(rng, q, rank, max_len=1 if q == 3 else 2)
        m = rng.randint(-3, 4)
        passed += in_lower_central(g, q) and eq21_check(g, m, q)
    return passed, trials


# --- bracket expansion -------------------------------------------------------------------

def right_nested_expr(n: int) -> BracketExpr:
    """``[1, [2, ... [n-1, n]]]`` as a nested pair."""
    expr: BracketExpr = n
    for i in range(n - 1, 0, -1):
        expr = (i, expr)
    return expr


def _right_leaves(expr: BracketExpr) -> List[int]:
    leaves = []
    while isinstance(expr, tuple):
        left, expr = expr
        if isinstance(left, tuple):
            raise ValueError("bracket expression is not right-nested")
        leaves.append(left)
    leaves.append(expr)
    if len(set(leaves)) != len(leaves):
        raise ValueError("each leaf may appear only once")
    return leaves


def expand_bracket(expr: BracketExpr | int) -> Dict[Tuple[int, ...], int]:
    """Signed word sum ``(−1)^{n−1} Σ_a ↑^{a_1}(z_1, ↑^{a_2}(z_2, ...))``.

    ``↑⁰(a, b) = ab`` and ``↑¹(a, b) = −ba``; words are tuples of leaf labels.
    """
    leaves = _right_leaves(right_nested_expr(expr) if isinstance(expr, int) else expr)
    n = len(leaves)
    if n > BRACKET_CAP + 1:
        raise ValueError(f"bracket length capped at {BRACKET_CAP + 1}")
    cur: Dict[Tuple[int, ...], int] = {(leaves[-1],): 1}
    for z in reversed(leaves[:-1]):
        nxt: Dict[Tuple[int, ...], int] = {}
        for w, c in cur.items():
            nxt[(z,) + w] = nxt.get((z,) + w, 0) + c
            nxt[w + (z,)] = nxt.get(w + (z,), 0) - c
        cur = nxt
    sign = (-1) ** (n - 1)
    return {w: sign * c for w, c in cur.items() if c}


def lemma28_check(gens: Sequence[int], z_sign: int = -1) -> bool:
    """Leading term of ``magnus(1 − [x_{g1},[x_{g2},...]])`` against :func:`expand_bracket`.

    Leaf ``z_i`` stands for ``1 − x_{g_i}``, whose Magnus image is ``−X_{g_i}``;
    pass ``z_sign=+1`` to substitute ``X_{g_i}`` instead. Lower degrees must vanish.
    """
    n = len(gens)
    if n > BRACKET_CAP:
        raise ValueError(f"bracket length capped at {BRACKET_CAP}")
    c = right_nested([(g,) for g in gens])
    series = magnus_ring(one_minus(c), n)
    if any(len(mono) < n for mono in series.terms):
        return False
    expected: Dict[Monomial, Fraction] = {}
    for w, coef in expand_bracket(n).items():
        mono = tuple(gens[i - 1] for i in w)
        expected[mono] = expected.get(mono, 0) + coef * z_sign ** n
    expected = {m: v for m, v in expected.items() if v}
    return series.degree_part(n) == expected


def lemma28_trials(n: int, trials: int, seed: int, z_sign: int = -1) -> Tuple[int, int]:
    """Distinct generators first, then random generator choices (repeats allowed)."""
    rng = random.Random(seed)
    passed = lemma28_check(list(range(1, n + 1)), z_sign)
    for _ in range(trials - 1):
        passed += lemma28_check([rng.randint(1, n) for _ in range(n)], z_sign)
    return passed, trials


def linearity_check(g: Word, h: Word, n: int) -> bool:
    """Degree-``n`` part of ``1 − gh`` is the sum of those of ``1 − g`` and ``1 − h``."""
    exact = one_minus(word_mul(g, h)) == one_minus(g) * RingElement.of(h) + one_minus(h)
    whole = magnus_ring(one_minus(word_mul(g, h)), n).degree_part(n)
    parts = magnus_ring(one_minus(g) + one_minus(h), n).degree_part(n)
    return exact and whole == parts


def linearity_trials(n: int, trials: int, seed: int, rank: int = 3) -> Tuple[int, int]:
    rng = random.Random(seed)
    passed = 0
    for _ in range(trials):
        g = right_nested([(rng.choice([1, -1]) * rng.randint(1, rank),) for _ in range(n)])
        h = right_nested([(rng.choice([1, -1]) * rng.randint(1, rank),) for _ in range(n)])
        passed += linearity_check(g, h, n)
    return passed, trials
