"""Acceptance criteria, each with its runtime budget.

Run directly (``python tests/test_acceptance.py``) or under pytest; either
way one PASS/FAIL line per criterion is printed.
"""

from __future__ import annotations

import time

import pytest

from sl2current import filtration as F
from sl2current import gradedchar as G
from sl2current import modulelab as ML
from sl2current.qseries import TruncSeries, poch_inv, q_int

RESULTS: dict[str, str] = {}


def _crit_1() -> bool:
    return all(G.gchar_weyl_local(l).dim() == 2 ** l for l in range(1, 15))


def _crit_2() -> bool:
    hi = 30
    w = (0, hi)
    for l in range(13):
        lhs = G.gchar_tensor(G.gchar_weyl_global(l, w), G.gchar_weyl_global(1, w)).restrict(w)
        rhs = G.gchar_weyl_global(l + 1, w).scale(q_int(l + 1)).restrict(w)
        if l >= 1:
            rhs = rhs + G.gchar_weyl_global(l - 1, w).scale(poch_inv(1, hi)).restrict(w)
        if lhs.window != w or rhs.window != w or not lhs == rhs:
            return False
    return True


def _crit_3() -> bool:
    w = (0, 24)
    for l in range(7):
        for m in range(7):
            chi = G.gchar_tensor(G.gchar_weyl_global(l, w), G.gchar_weyl_global(m, w)).restrict(w)
            fm = F.peel(chi, F.Basis.GLOBAL_WEYL)
            if fm.window[1] != 24 or not fm.agrees(F.tensor_weyl_mult(l, m, w)) or not fm.certified_nonneg:
                return False
    return True


def _crit_4() -> bool:
    w = (-40, 40)
    table = F.b_coeff_recursion(12, w)
    for l in range(13):
        for s in range(l // 2 + 1):
            if not table[l].get(s, TruncSeries.zero()).agrees(F.b_coeff_closed(l, s, w)):
                return False
    for l in range(11):
        acc = G.GradedChar({}, w)
        for s in range(l // 2 + 1):
            acc = acc + G.gchar_weyl_local(l - 2 * s, w).scale(F.b_coeff_closed(l, s, w))
        if not (acc.exact and acc == G.gchar_dual(G.gchar_weyl_local(l))):
            return False
    return True


def _crit_5() -> bool:
    w = (-20, 40)
    for l in range(9):
        a = G.a_shift(l)
        t = G.gchar_tilting(l, w).restrict(w)
        wedge = G.gchar_wedge_w1(l, (w[0] + a, w[1] + a))
        s = G.gchar_tau(wedge, -a).restrict(w)
        if t.window != w or s.window != w or not t == s:
            return False
    return True


def _crit_6() -> bool:
    D = 8
    for l in range(1, 5):
        ds = D - l
        chi = ML.graded_char_of(ML.build(ML.Kind.SYM, l, D), ds)
        if not chi == G.gchar_weyl_global(l, (0, ds)):
            return False
    return True


def _crit_7() -> bool:
    for l in range(1, 5):
        D = G.a_shift(l) + 6
        ds = D - l
        chi = ML.graded_char_of(ML.build(ML.Kind.WEDGE, l, D), ds)
        if not chi == G.gchar_wedge_w1(l, (0, ds)).restrict((0, ds)):
            return False
        want = poch_inv(l, D).shift(G.a_shift(l)).truncate(D)
        if not ML.wedge_top_space(l, D).agrees(want):
            return False
    return True


def _crit_8() -> bool:
    for l in range(1, 7):
        top = G.socle_grade(l)
        D = top + 1
        M = ML.build(ML.Kind.LOCAL_QUOTIENT, l, D)
        chi = ML.graded_char_of(M, D)
        if not chi == G.gchar_weyl_local(l, (0, D)):
            return False
        if max(d for d, _ in M.blocks) != top or chi.layer(top) != {l % 2: 1}:
            return False
    return True


def _crit_9() -> bool:
    for l in range(6):
        for s in range(l + 3):
            if not ML.verify_garland(l, s, max(s, l + 2), comult_max=4):
                return False
    return all(ML.verify_comultiplication(n, 6) for n in range(5))


def _crit_10() -> bool:
    D = 6
    w = (0, D)
    for l in range(3):
        M = ML.ProductRealization([ML.build(ML.Kind.SYM, l, D), ML.build(ML.Kind.SYM, 1, D)], D)
        sub, quo = ML.ocanonical(M, l + 1)
        want_sub = G.gchar_weyl_global(l + 1, w).scale(q_int(l + 1)).restrict(w)
        want_quo = (G.gchar_weyl_global(l - 1, w).scale(poch_inv(1, D)).restrict(w)
                    if l >= 1 else G.GradedChar({}, w))
        if not (sub == want_sub and quo == want_quo):
            return False
    return True


def _crit_11() -> bool:
    return all(F.verify_mult_identity(l, m, n, (0, 40))
               for l in range(9) for m in range(9) for n in range(min(l, m) + 1))


CRITERIA = [
    (1, "local Weyl dimension 2^lam, lam <= 14", _crit_1, 1.0),
    (2, "W(lam) (x) W(1) character rule, lam <= 12, window [0, 30]", _crit_2, 5.0),
    (3, "global Weyl multiplicities of W(lam) (x) W(mu), lam, mu <= 6", _crit_3, 10.0),
    (4, "b-coefficients: recursion vs product form, dual local expansion", _crit_4, 5.0),
    (5, "tilting character = shifted wedge character, lam <= 8", _crit_5, 2.0),
    (6, "brute-force S^lam(W(1)) = global Weyl character", _crit_6, 30.0),
    (7, "brute-force exterior powers and top weight space", _crit_7, 60.0),
    (8, "brute-force local Weyl quotient and socle grade", _crit_8, 30.0),
    (9, "Garland identity, vanishing and coproduct", _crit_9, 10.0),
    (10, "o-canonical filtration of W(lam) (x) W(1), lam <= 2", _crit_10, 60.0),
    (11, "Gaussian binomial multiplicity identity, lam, mu <= 8", _crit_11, 5.0),
]


def run_criterion(num: int, label: str, fn, budget: float) -> tuple[bool, str]:
    start = time.perf_counter()
    try:
        ok = bool(fn())
        note = ""
    except Exception as exc:  # a crash counts as a failure with its reason
        ok, note = False, f" ({type(exc).__name__}: {exc})"
    elapsed = time.perf_counter() - start
    in_time = elapsed < budget
    status = "PASS" if ok and in_time else "FAIL"
    line = f"{status} criterion {num:2d}: {label} [{elapsed:.2f}s / {budget:g}s]{note}"
    if ok and not in_time:
        line += " (over budget)"
    RESULTS[f"{num:02d}"] = line
    print(line)
    return status == "PASS", line


@pytest.mark.acceptance
@pytest.mark.parametrize("num,label,fn,budget", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(num, label, fn, budget):
    ok, line = run_criterion(num, label, fn, budget)
    assert ok, line


if __name__ == "__main__":
    import sys
    results = [run_criterion(*c)[0] for c in CRITERIA]
    sys.exit(0 if all(results) else 1)
