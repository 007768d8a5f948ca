"""Verification suites producing :class:`~trigraph.report.Record` lists."""

from __future__ import annotations

import random
from typing import Callable, Dict, List

from . import group_ring as gr
from .chords import decorated_quotient_dimension, enumerate_colored, enumerate_diagrams
from .graphs import as_ihx_quotient_dimension, enumerate_trivalent
from .lagrangian import naturality_holds, run_trials, standard_pair, swapped_pair_equality
from .oracle import ORACLE_CAP, oracle_summary
from .report import Record, compare, info, ratio
from .tensors import (EXPECTED_TABLE, SymplecticSpace, check_gl_invariance, check_sp_invariance, color_sum,
                      contract_sp, figure8_basis_check, invariant_rank, kappa_iota_scalar, random_symplectic,
                      threshold_met)

REF_CHORDS = "number of linear chord diagrams is (2m-1)!!"
REF_COLORED = "number of 2-colored linear chord diagrams is (2m-1)!! 2^m"
REF_DEG1 = "degree-one connected graph space is one-dimensional, spanned by the theta graph"
REF_ORACLE = "independent brute-force enumeration over all pairings"
REF_TABLE = "dimension table of invariant spaces"
REF_THETA4 = "loop-free colored degree-one graph space is four-dimensional"
REF_DECOR = "colored antisymmetry quotient matches the GL exterior-cube invariants"


def _dfact(k: int) -> int:
    out = 1
    while k > 1:
        out, k = out * k, k - 2
    return out


def dims_records(max_m: int = 3) -> List[Record]:
    recs: List[Record] = []
    for m in range(1, 7):
        recs.append(compare(f"chords-m{m}", REF_CHORDS, _dfact(2 * m - 1), len(enumerate_diagrams(m))))
    for m in range(1, 6):
        recs.append(compare(f"colored-chords-m{m}", REF_COLORED, _dfact(2 * m - 1) * 2 ** m,
                            len(enumerate_colored(m))))
    for m in range(1, max_m + 1):
        classes = enumerate_trivalent(m)
        live = sum(1 for c in classes if not c.as_zero)
        dim_all = as_ihx_quotient_dimension(m)
        dim_conn = as_ihx_quotient_dimension(m, connected_only=True)
        if m <= ORACLE_CAP:
            o = oracle_summary(m)
            recs.append(compare(f"graph-classes-m{m}", REF_ORACLE, o["classes"], len(classes)))
            recs.append(compare(f"graph-as-zero-m{m}", REF_ORACLE, o["as_zero"], len(classes) - live))
            recs.append(compare(f"graph-dim-all-m{m}", REF_ORACLE, o["dim_all"], dim_all))
            recs.append(compare(f"graph-dim-connected-m{m}", REF_ORACLE, o["dim_connected"], dim_conn))
        else:
            recs.append(info(f"graph-classes-m{m}", "isomorphism classes of trivalent graphs", len(classes)))
            recs.append(info(f"graph-as-zero-m{m}", "classes killed by antisymmetry", len(classes) - live))
            recs.append(info(f"graph-dim-all-m{m}", "AS/IHX quotient dimension", dim_all))
            recs.append(info(f"graph-dim-connected-m{m}", "connected AS/IHX quotient dimension", dim_conn))
        if m == 1:
            recs.append(compare("graph-dim-connected-m1-literature", REF_DEG1, 1, dim_conn))
    recs.append(compare("decorated-dim-m1", REF_DECOR, EXPECTED_TABLE[("gl-wedge3", 1)],
                        decorated_quotient_dimension(1)))
    recs.append(compare("decorated-dim-m1-no-loops", REF_THETA4, 4, decorated_quotient_dimension(1, no_loops=True)))
    return recs


def table_records(n: int = 3) -> List[Record]:
    recs = []
    for (variant, m), expected in sorted(EXPECTED_TABLE.items()):
        r = invariant_rank(variant, m, n)
        rid = f"table-{variant}-m{m}-n{n}"
        if threshold_met(variant, m, n):
            recs.append(compare(rid, REF_TABLE, expected, r))
        else:
            recs.append(info(rid, REF_TABLE + " (below the injectivity threshold)", r))
    return recs


def table_rows(n: int = 3) -> List[Dict[str, object]]:
    return [{"variant": v, "m": m, "n": n, "rank": invariant_rank(v, m, n), "threshold_met": threshold_met(v, m, n)}
            for (v, m) in sorted(EXPECTED_TABLE)]


# --- suites taking (seed, trials, n) ------------------------------------------------

def suite_lemma22(seed: int, trials: int, n: int) -> List[Record]:
    ref = "coboundary of the product cochain: zero in even degree, next product cochain in odd degree"
    recs = []
    for k in range(1, 5):
        for rank in (2, 3):
            p, t = gr.lemma22_trials(k, trials, seed + 10 * k + rank, rank=rank)
            recs.append(ratio(f"lemma22-n{k}-F{rank}", ref, p, t))
    return recs


def suite_lemma28(seed: int, trials: int, n: int) -> List[Record]:
    ref = "leading term of 1 - right-nested commutator equals the signed bracket expansion"
    recs = []
    for k in range(2, 6):
        p, t = gr.lemma28_trials(k, min(trials, 50), seed + k)
        recs.append(ratio(f"lemma28-n{k}", ref, p, t))
        terms = gr.expand_bracket(k)
        recs.append(compare(f"lemma28-terms-n{k}", "bracket expansion has 2^(n-1) words", 2 ** (k - 1), len(terms)))
    for k in (2, 3):
        p, t = gr.linearity_trials(k, min(trials, 50), seed + 100 + k)
        recs.append(ratio(f"lemma28-linearity-n{k}", "leading-term map is additive on weight-n commutators", p, t))
    return recs


def suite_eq20(seed: int, trials: int, n: int) -> List[Record]:
    p, t = gr.eq20_trials(trials, seed)
    return [ratio("eq20", "1 - [g,h] = (-(1-g)(1-h) + (1-h)(1-g)) g^-1 h^-1 in the group ring", p, t)]


def suite_eq21(seed: int, trials: int, n: int) -> List[Record]:
    p, t = gr.eq21_trials(trials, seed)
    return [ratio("eq21", "m(1-g) = 1-g^m modulo I^(q+1) for g in the q-th lower central term", p, t)]


def suite_gamma(seed: int, trials: int, n: int) -> List[Record]:
    trials = min(trials, 50)
    recs = []
    for k in (1, 2, 3):
        p, t = gr.gamma_chain_map_check(k, trials, seed + k)
        recs.append(ratio(f"gamma-commutes-n{k}", "reversal involution with sign (-1)^C(n,2) commutes with the bar "
                                                   "boundary", p, t))
        p, t = gr.gamma_chain_map_check(k, trials, seed + k, mode="anticommute")
        recs.append(ratio(f"gamma-anticommutes-n{k}", "the same involution anticommutes with the bar boundary", p, t))
        p, t = gr.gamma_chain_map_check(k, trials, seed + k, sign_shift=1)
        recs.append(ratio(f"gamma-shifted-sign-commutes-n{k}", "reversal with sign (-1)^C(n+1,2) commutes with "
                                                                "the bar boundary", p, t))
    return recs


def suite_figure8(seed: int, trials: int, n: int) -> List[Record]:
    n = max(n, 3)
    res = figure8_basis_check(n)
    return [compare(f"figure8-rank-n{n}", REF_THETA4, 4, res["rank"]),
            compare(f"figure8-loops-vanish-n{n}", "images of loop-bearing colored graphs vanish in U", True,
                    res["loop_images_zero"])]


def suite_lagrangian(seed: int, trials: int, n: int) -> List[Record]:
    recs = []
    for k in sorted({3, 4, max(n, 3)}):
        agree = sum(r["agree"] for r in run_trials(k, trials, seed + k))
        recs.append(ratio(f"lagrangian-distinguish-n{k}", "cup form agrees iff the pairs are equal or swapped",
                          agree, trials))
        rng = random.Random(seed + 1000 + k)
        sp = SymplecticSpace(k)
        pairs = [standard_pair(k)] + [standard_pair(k).apply(random_symplectic(sp, rng)) for _ in range(4)]
        recs.append(ratio(f"lagrangian-swap-equality-n{k}", "cup form is unchanged by swapping the pair",
                          sum(swapped_pair_equality(p) for p in pairs), len(pairs)))
        recs.append(ratio(f"lagrangian-naturality-n{k}", "cup form is natural under symplectic maps",
                          sum(naturality_holds(p, random_symplectic(sp, rng)) for p in pairs[:3]), 3))
    return recs


def suite_properties(seed: int, trials: int, n: int) -> List[Record]:
    recs = []
    ok = total = 0
    for m in (1, 2, 3):
        for d in enumerate_diagrams(m):
            for k in (1, 2, 3):
                total += 1
                ok += color_sum(d, k) == contract_sp(d, k)
    recs.append(ratio("color-sum-identity", "signed sum over colorings of GL contractions is the Sp contraction",
                      ok, total))
    for m in (1, 2):
        for k in (1, 2, 3):
            p, t = check_sp_invariance(m, k, 20, seed + 7 * m + k)
            recs.append(ratio(f"sp-invariance-m{m}-n{k}", "contraction tensors are fixed by symplectic maps", p, t))
            p, t = check_gl_invariance(m, k, 20, seed + 11 * m + k)
            recs.append(ratio(f"gl-invariance-m{m}-n{k}", "colored contractions are fixed by diag(A, A^-T)", p, t))
    for k in range(2, 6):
        c = kappa_iota_scalar(k)
        recs.append(compare(f"kappa-iota-n{k}", "kappa after iota is a nonzero multiple of the identity; value "
                                                 "2(n-1) computed", 2 * (k - 1), c))
    recs.append(compare("threshold-sp-h-m2-n1", "below the threshold the diagram map is not injective", True,
                        invariant_rank("sp-h", 2, 1) < 3))
    recs.append(compare("threshold-sp-h-m2-n2", "at the threshold the three diagrams are independent", 3,
                        invariant_rank("sp-h", 2, 2)))
    return recs


IDENTITY_SUITES: Dict[str, Callable[[int, int, int], List[Record]]] = {
    "lemma22": suite_lemma22,
    "lemma28": suite_lemma28,
    "eq20": suite_eq20,
    "eq21": suite_eq21,
    "gamma": suite_gamma,
}

VERIFY_SUITES: Dict[str, Callable[[int, int, int], List[Record]]] = dict(
    IDENTITY_SUITES, figure8=suite_figure8, lagrangian=suite_lagrangian, properties=suite_properties)


def run_suite(name: str, seed: int, trials: int, n: int) -> List[Record]:
    return VERIFY_SUITES[name](seed, trials, n)
