"""Named identity checks, grouped into suites for the command line."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable

from . import filtration as F
from . import gradedchar as G
from . import modulelab as ML
from .qseries import TruncSeries, poch_inv, poch_poly, q_binom, q_int
from .sl2char import clebsch_gordan, decompose, irr_char


@dataclass(frozen=True)
class Check:
    name: str
    identity: str
    run: Callable[[], bool]


# -- qseries --------------------------------------------------------------------

def _poch_inverse(n_max: int = 12, hi: int = 40) -> bool:
    return all((poch_inv(n, hi) * poch_poly(n)).agrees(TruncSeries.one()) for n in range(n_max + 1))


def _qbinom_shape(n_max: int = 14) -> bool:
    for n in range(n_max + 1):
        for s in range(n + 1):
            f = q_binom(n, s)
            if f.at_one() != comb(n, s):
                return False
            deg = s * (n - s)
            if any(f[k] != f[deg - k] for k in range(deg + 1)):
                return False
            if 0 < s < n and not f.agrees(q_binom(n - 1, s - 1) + q_binom(n - 1, s).shift(s)):
                return False
    return True


def _mult_identity(top: int = 8) -> bool:
    return all(F.verify_mult_identity(l, m, n, (0, 40))
               for l in range(top + 1) for m in range(top + 1)
               for n in range(min(l, m) + 1))


# -- characters -------------------------------------------------------------------

def local_dims(top: int = 14) -> bool:
    return all(G.gchar_weyl_local(l).dim() == 2 ** l for l in range(1, top + 1))


def tensor_rule(top: int = 12, hi: int = 30) -> bool:
    w = (0, hi)
    for l in range(top + 1):
        lhs = G.gchar_tensor(G.gchar_weyl_global(l, w), G.gchar_weyl_global(1, w)).restrict(w)
        rhs = G.gchar_weyl_global(l + 1, w).scale(q_int(l + 1)).restrict(w)
        if l >= 1:
            rhs = rhs + G.gchar_weyl_global(l - 1, w).scale(poch_inv(1, hi)).restrict(w)
        if lhs.hi < hi or rhs.hi < hi or not lhs == rhs:
            return False
    return True


def tilting_vs_wedge(top: int = 8, window: G.Window = (-20, 40)) -> bool:
    for l in range(top + 1):
        a = G.a_shift(l)
        t = G.gchar_tilting(l, window).restrict(window)
        w = G.gchar_tau(G.gchar_wedge_w1(l, (window[0] + a, window[1] + a)), -a).restrict(window)
        if t.hi < window[1] or w.hi < window[1] or not t == w:
            return False
    return True


def _clebsch_gordan(top: int = 10) -> bool:
    return all(decompose(irr_char(l) * irr_char(m)) == clebsch_gordan(l, m)
               for l in range(top + 1) for m in range(top + 1))


def _local_tensor(top: int = 7) -> bool:
    return all(F.verify_local_tensor(l) for l in range(top + 1))


# -- filtration -------------------------------------------------------------------

def b_recursion(top: int = 12, window: G.Window = (-40, 40)) -> bool:
    table = F.b_coeff_recursion(top, window)
    return all(table[l].get(s, TruncSeries.zero()).agrees(F.b_coeff_closed(l, s, window))
               for l in range(top + 1) for s in range(l // 2 + 1))


def dual_local_expansion(top: int = 10, window: G.Window = (-40, 40)) -> bool:
    for l in range(top + 1):
        acc = G.GradedChar({}, window)
        for s in range(l // 2 + 1):
            acc = acc + G.gchar_weyl_local(l - 2 * s, window).scale(F.b_coeff_closed(l, s, window))
        if not acc == G.gchar_dual(G.gchar_weyl_local(l)):
            return False
    return True


def tensor_multiplicities(top: int = 6, window: G.Window = (0, 24)) -> bool:
    for l in range(top + 1):
        for m in range(top + 1):
            chi = G.gchar_tensor(G.gchar_weyl_global(l, window), G.gchar_weyl_global(m, window))
            got = F.peel(chi.restrict(window), F.Basis.GLOBAL_WEYL)
            if not (got.agrees(F.tensor_weyl_mult(l, m, window)) and got.certified_nonneg):
                return False
    return True


def _peel_roundtrip(top: int = 6) -> bool:
    for l in range(top + 1):
        chi = G.gchar_dual(G.gchar_weyl_local(l))
        fm = F.peel(chi, F.Basis.LOCAL_WEYL)
        if not fm.reconstruct(chi.window) == chi:
            return False
    return True


# -- module lab -------------------------------------------------------------------

def _truncated(chi: G.GradedChar, d_safe: int) -> G.GradedChar:
    return chi.restrict((0, d_safe))


def sym_global(top: int = 4, D: int = 8) -> bool:
    for l in range(1, top + 1):
        ds = D - l
        if ds < 0:
            continue
        M = ML.build(ML.Kind.SYM, l, D)
        if not ML.graded_char_of(M, ds) == _truncated(G.gchar_weyl_global(l, (0, ds)), ds):
            return False
    return True


def wedge_chars(top: int = 4, extra: int = 6) -> bool:
    for l in range(1, top + 1):
        a = G.a_shift(l)
        D = a + extra
        ds = D - l
        M = ML.build(ML.Kind.WEDGE, l, D)
        if not ML.graded_char_of(M, ds) == G.gchar_wedge_w1(l, (0, ds)).restrict((0, ds)):
            return False
        expect = poch_inv(l, D).shift(a).truncate(D)
        if not ML.wedge_top_space(l, D).agrees(expect):
            return False
    return True


def local_quotient(top: int = 6) -> bool:
    for l in range(1, top + 1):
        top_grade = G.socle_grade(l)
        D = top_grade + 1
        M = ML.build(ML.Kind.LOCAL_QUOTIENT, l, D)
        chi = ML.graded_char_of(M, D)
        if not chi == G.gchar_weyl_local(l, (0, D)):
            return False
        if M.size() != 2 ** l:
            return False
        grades = [d for (d, _) in M.blocks]
        if max(grades) != top_grade or chi.layer(top_grade) != {l % 2: 1}:
            return False
    return True


def garland(top: int = 5, comult_max: int = 4) -> bool:
    for l in range(top + 1):
        for s in range(l + 3):
            if not ML.verify_garland(l, s, max(s, l + 2), comult_max):
                return False
    return True


def ocanonical_sequence(top: int = 2, D: int = 6) -> bool:
    w = (0, D)
    for l in range(top + 1):
        M = ML.ProductRealization([ML.build(ML.Kind.SYM, l, D), ML.build(ML.Kind.SYM, 1, D)], D)
        sub, quo = ML.ocanonical(M, l + 1)
        want_sub = G.gchar_weyl_global(l + 1, w).scale(q_int(l + 1)).restrict(w)
        want_quo = (G.gchar_weyl_global(l - 1, w).scale(poch_inv(1, D)).restrict(w)
                    if l >= 1 else G.GradedChar({}, w))
        if not (sub == want_sub and quo == want_quo):
            return False
    return True


def _commutes(M: ML.Realization, g: str, r: int, s: int) -> bool:
    a = ML.gen_op(g, r)
    p = ML.tpow_op(s)
    for (d, _), labs in M.blocks.items():
        if d > M.D - r - s:
            continue
        for lab in labs:
            v = {lab: Fraction(1)}
            if ML._sub(M.apply(a, M.apply(p, v)), M.apply(p, M.apply(a, v))):
                return False
    return True


def bimodule(top: int = 3, D: int = 6) -> bool:
    for l in range(1, top + 1):
        for kind in (ML.Kind.TENSOR, ML.Kind.SYM, ML.Kind.WEDGE):
            M = ML.build(kind, l, D)
            for g in "xyh":
                for r in range(0, 3):
                    for s in range(1, 3):
                        if r + s <= D and not _commutes(M, g, r, s):
                            return False
    return True


def hw_weights(top: int = 3, D: int = 6) -> bool:
    for l in range(1, top + 1):
        M = ML.build(ML.Kind.TENSOR, l, D)
        for d in range(D - l + 1):
            for mu in range(-l, l, 2):
                if ML.highest_weight_vectors(M, d, mu).basis:
                    return False
    return True


def sym_weight_spaces(top: int = 4, D: int = 8) -> bool:
    for l in range(1, top + 1):
        M = ML.build(ML.Kind.SYM, l, D)
        for p in range(l + 1):
            f = G.weight_hilbert(l, p, (0, D))
            if any(len(M.block(d, l - 2 * p)) != f[d] for d in range(D + 1)):
                return False
    return True


# -- suites -------------------------------------------------------------------------

def suite(name: str, lambda_max: int = 4, trunc: int = 8) -> list[Check]:
    """Checks of one suite; ``lambda_max`` and ``trunc`` only scale the
    brute-force module checks."""
    L, D = lambda_max, trunc
    table = {
        "qseries": [
            Check("poch-inverse", "(1:u)_n (1-u)...(1-u^n) = 1", _poch_inverse),
            Check("qbinom-shape", "Gaussian binomials: palindromic, q-Pascal, binomial at u=1", _qbinom_shape),
            Check("mult-identity", "Gaussian binomial identity behind tensor multiplicities", _mult_identity),
        ],
        "characters": [
            Check("clebsch-gordan", "V(l) (x) V(m) = sum of V(l+m-2k)", _clebsch_gordan),
            Check("local-dims", "dim W_loc(l) = 2^l", local_dims),
            Check("tensor-rule", "W(l) (x) W(1) = [l+1] W(l+1) + (1:u)_1 W(l-1)", tensor_rule),
            Check("local-tensor", "W_loc(l) (x) W_loc(1) and its dual", _local_tensor),
            Check("tilting-wedge", "T(l) character = shifted exterior power of W(1)", tilting_vs_wedge),
        ],
        "filtration": [
            Check("b-recursion", "recursive b_l(s) = closed product form", b_recursion),
            Check("dual-local", "dual W_loc(l) = sum_s b_l(s) W_loc(l-2s)", dual_local_expansion),
            Check("tensor-mults", "global Weyl multiplicities of W(l) (x) W(m)", tensor_multiplicities),
            Check("peel-roundtrip", "peeled multiplicities reconstruct the character", _peel_roundtrip),
        ],
        "modulelab": [
            Check("sym-global", "S^l(W(1)) has the global Weyl character",
                  lambda: sym_global(L, D)),
            Check("sym-weights", "weight spaces of S^l(W(1))", lambda: sym_weight_spaces(L, D)),
            Check("wedge", "exterior powers of W(1) and their top weight space",
                  lambda: wedge_chars(L, max(D - G.a_shift(L), 1))),
            Check("local-quotient", "A_l/I_l quotient gives W_loc(l) with socle in top grade",
                  lambda: local_quotient(L)),
            Check("garland", "Garland elements: identity, vanishing, coproduct",
                  lambda: garland(L, min(4, D))),
            Check("ocanonical", "o-canonical sequence for W(l) (x) W(1)",
                  lambda: ocanonical_sequence(min(L - 1, 2), min(D, 6))),
            Check("bimodule", "left action commutes with right power sums",
                  lambda: bimodule(min(L, 3), min(D, 6))),
            Check("hw-weights", "no highest-weight vectors below weight l in W(1)^(x)l",
                  lambda: hw_weights(min(L, 3), min(D, 6))),
        ],
    }
    if name == "all":
        return [c for k in ("qseries", "characters", "filtration", "modulelab") for c in table[k]]
    return table[name]


SUITES = ("qseries", "characters", "filtration", "modulelab", "all")
