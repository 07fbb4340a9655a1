"""Filtration multiplicities against Weyl-type bases."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .gradedchar import (
    GradedChar,
    Window,
    gchar_dual,
    gchar_tensor,
    gchar_weyl_global,
    gchar_weyl_local,
)
from .qseries import (
    TruncSeries,
    WindowError,
    poch_inv,
    poch_poly,
    q_binom,
    q_int,
)


class Basis(enum.Enum):
    GLOBAL_WEYL = "global"
    LOCAL_WEYL = "local"
    DUAL_LOCAL_WEYL = "dual-local"


def basis_char(basis: Basis, mu: int, window: Window) -> GradedChar:
    if basis is Basis.GLOBAL_WEYL:
        return gchar_weyl_global(mu, window)
    if basis is Basis.LOCAL_WEYL:
        return gchar_weyl_local(mu, window)
    return gchar_dual(gchar_weyl_local(mu))


def _basis_for(basis: Basis, mu: int, m: TruncSeries, window: Window) -> GradedChar:
    # enough reach that basis(mu) * m is known up to window[1]
    if basis is Basis.GLOBAL_WEYL:
        return gchar_weyl_global(mu, (0, max(window[1] - m.lo, 0)))
    return basis_char(basis, mu, None)


@dataclass
class FiltMultiplicity:
    basis: Basis
    mults: dict[int, TruncSeries]
    window: Window
    certified_nonneg: bool = field(init=False)

    def __post_init__(self):
        self.mults = {k: f for k, f in sorted(self.mults.items(), reverse=True)
                      if not f.is_zero()}
        # a certificate, not a proof of filtration existence
        self.certified_nonneg = all(f.is_nonneg() for f in self.mults.values())

    def __getitem__(self, mu: int) -> TruncSeries:
        return self.mults.get(mu, TruncSeries.zero())

    def agrees(self, other: "FiltMultiplicity") -> bool:
        if self.basis is not other.basis:
            return False
        return all(self[k].agrees(other[k]) for k in set(self.mults) | set(other.mults))

    def reconstruct(self, window: Window | None = None) -> GradedChar:
        lo, hi = window or self.window
        acc = GradedChar({}, (lo, hi))
        for mu, m in self.mults.items():
            b = _basis_for(self.basis, mu, m, (lo, hi))
            acc = acc + b.scale(m).restrict((lo, hi))
        return acc

    def to_json(self) -> dict:
        return {
            "basis": self.basis.name,
            "mults": [{"weight": mu, "series": f.to_json()} for mu, f in sorted(self.mults.items())],
            "certified_nonneg": self.certified_nonneg,
        }


def _tighten(f: TruncSeries) -> TruncSeries:
    # padding zeros below the support would cost reach in products
    sup = f.support()
    return f.with_lo(sup[0]) if sup and not f.exact else f


def peel(chi: GradedChar, basis: Basis) -> FiltMultiplicity:
    """Triangular decomposition of ``chi`` from its highest sl2 label down.

    Each basis character has leading term ch V(mu) times 1 (local, dual local)
    or (1:u)_mu (global); the latter is undone by multiplying with the
    polynomial (1-u)...(1-u^mu), so no series division is needed.
    """
    lo, hi = chi.window
    rest = chi
    mults: dict[int, TruncSeries] = {}
    for mu in sorted(chi.keys(), reverse=True):
        cur = rest[mu]
        if cur.is_zero():
            continue
        m = (cur * poch_poly(mu)).truncate(hi) if basis is Basis.GLOBAL_WEYL else cur
        m = _tighten(m)
        b = _basis_for(basis, mu, m, (lo, hi))
        try:
            rest = rest - b.scale(m).restrict((lo, hi))
        except WindowError:
            raise WindowError("window too small") from None
        mults[mu] = m
    if any(not f.is_zero() for f in rest.terms.values()):
        raise WindowError("window too small")
    return FiltMultiplicity(basis, mults, (lo, rest.hi))


def tensor_weyl_mult(lam: int, mu: int, window: Window = (0, 24)) -> FiltMultiplicity:
    """Global Weyl multiplicities of W(lam) (x) W(mu) in closed form."""
    if lam < 0 or mu < 0:
        raise ValueError("highest weights must be nonnegative")
    lo, hi = window
    mults = {}
    for nu in range(min(lam, mu) + 1):
        mults[lam + mu - 2 * nu] = (q_binom(lam + mu - 2 * nu, mu - nu) * poch_inv(nu, hi)).truncate(hi)
    return FiltMultiplicity(Basis.GLOBAL_WEYL, mults, window)


def b_coeff_closed(lam: int, s: int, window: Window = (-40, 40)) -> TruncSeries:
    """Dual-local to local transition coefficient, from its product formula.

    Computed as a truncated series; the result must be a Laurent polynomial
    whose support stays strictly inside the window.
    """
    if s < 0 or 2 * s > lam:
        return TruncSeries.zero()
    lo, hi = window
    e = s * (s - lam)
    if e <= lo:
        raise WindowError("not dualizable: lowest term leaves the window")
    reach = hi - e
    f = (poch_inv(s, reach) * poch_inv(lam - 2 * s, reach) * poch_poly(lam)).shift(e).truncate(hi)
    if f[hi] != 0:
        raise WindowError("not dualizable: nonzero coefficient at window edge")
    return TruncSeries.poly(f.terms())


def b_coeff_recursion(lam_max: int, window: Window = (-40, 40)) -> dict[int, dict[int, TruncSeries]]:
    """All b_lam(s), lam <= lam_max, from the three-term recursion alone."""
    if lam_max < 1:
        raise ValueError("lam_max must be at least 1")
    zero = TruncSeries.zero()
    table: dict[int, dict[int, TruncSeries]] = {0: {0: TruncSeries.one()}, 1: {0: TruncSeries.one()}}

    def b(l: int, s: int) -> TruncSeries:
        return table.get(l, {}).get(s, zero)

    for lam in range(1, lam_max):
        row = {}
        for s in range((lam + 1) // 2 + 1):
            val = (b(lam, s)
                   + (1 - TruncSeries.monomial(lam - 2 * s + 2)) * b(lam, s - 1)
                   - (1 - TruncSeries.monomial(-lam)) * b(lam - 1, s - 1))
            if not val.is_zero():
                row[s] = val
        table[lam + 1] = row
    lo, hi = window
    for row in table.values():
        for f in row.values():
            sup = f.support()
            if sup and (sup[0] < lo or sup[1] > hi):
                raise WindowError("window too small")
    return table


def verify_mult_identity(lam: int, mu: int, nu: int, window: Window = (0, 40)) -> bool:
    """Gaussian-binomial identity behind the tensor multiplicity induction."""
    hi = window[1]
    n = lam + mu - 2 * nu
    lhs = (poch_inv(nu, hi) * poch_inv(1, hi)
           * (q_binom(n, mu - nu) - q_binom(n - 1, mu - 1 - nu)))
    second = q_binom(n - 2, mu - 1 - nu)
    rhs = q_binom(n - 1, mu - nu) * q_int(mu + 1)
    if not second.is_zero():
        rhs = rhs - second * q_int(n - 1)
    rhs = poch_inv(nu + 1, hi) * rhs
    return lhs.truncate(hi).agrees(rhs.truncate(hi))


def verify_local_tensor(lam: int) -> bool:
    """Local Weyl tensor rule with W_loc(1), and its dual form."""
    if lam < 1:
        return True
    one = gchar_weyl_local(1)
    lhs = gchar_tensor(gchar_weyl_local(lam), one)
    rhs = gchar_weyl_local(lam + 1) + gchar_weyl_local(lam - 1).scale(1 - TruncSeries.monomial(lam))
    if not lhs == rhs:
        return False
    d = lambda l: gchar_dual(gchar_weyl_local(l))
    lhs = gchar_tensor(d(lam), d(1))
    rhs = d(lam + 1) + d(lam - 1).scale(1 - TruncSeries.monomial(-lam))
    return lhs == rhs
