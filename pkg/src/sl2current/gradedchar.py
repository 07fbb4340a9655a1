"""Graded characters of sl2[t]-modules.

A graded character is stored as ``{lam: series}`` where the coefficient of
``u**r`` in ``series`` is the multiplicity of V(lam) in grade ``r``.
"""

from __future__ import annotations

import csv
import io
from math import comb
from typing import Mapping

from .qseries import (
    TruncSeries,
    WindowError,
    format_series,
    poch_inv,
    q_binom,
    substitute_inverse,
)
from .sl2char import Sl2Char, clebsch_gordan, irr_char

Window = tuple[int, int]


def default_window(lam: int) -> Window:
    return (-lam * lam, 3 * lam * lam)


def a_shift(lam: int) -> int:
    """Grade of the top weight space of the lam-th exterior power of W(1)."""
    return comb(lam, 2)


def socle_grade(lam: int) -> int:
    return (lam // 2) * ((lam + 1) // 2)


class GradedChar:
    __slots__ = ("terms", "window")

    def __init__(self, terms: Mapping[int, TruncSeries | int], window: Window):
        lo, hi = window
        series = {}
        for lam, f in terms.items():
            if lam < 0:
                raise ValueError("sl2 labels must be nonnegative")
            if isinstance(f, int):
                f = TruncSeries.monomial(0, f)
            if not f.exact:
                hi = min(hi, f.hi)
            series[lam] = f
        if hi < lo:
            raise WindowError("incompatible windows")
        out = {}
        for lam, f in series.items():
            f = f.truncate(hi)
            try:
                f = f.with_lo(lo)
            except WindowError:
                raise WindowError("window too small") from None
            if not f.is_zero():
                out[lam] = f
        self.terms = dict(sorted(out.items(), reverse=True))
        self.window = (lo, hi)

    @property
    def lo(self) -> int:
        return self.window[0]

    @property
    def hi(self) -> int:
        return self.window[1]

    @property
    def exact(self) -> bool:
        return all(f.exact for f in self.terms.values())

    def __getitem__(self, lam: int) -> TruncSeries:
        f = self.terms.get(lam)
        if f is not None:
            return f
        return TruncSeries.zero()

    def keys(self):
        return self.terms.keys()

    def __eq__(self, other):
        if not isinstance(other, GradedChar):
            return NotImplemented
        return all(self[k].agrees(other[k]) for k in set(self.terms) | set(other.terms))

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self):
        body = ", ".join(f"{k}: {format_series(f)}" for k, f in self.terms.items())
        return f"GradedChar({{{body}}}, window={self.window})"

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "GradedChar") -> "GradedChar":
        lo = min(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        keys = set(self.terms) | set(other.terms)
        return GradedChar({k: self[k] + other[k] for k in keys}, (lo, hi))

    def __neg__(self):
        return GradedChar({k: -f for k, f in self.terms.items()}, self.window)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, f: TruncSeries) -> "GradedChar":
        """Multiply every multiplicity series by ``f``."""
        window = (self.lo + f.lo, self.hi + f.hi)
        return GradedChar({k: f * g for k, g in self.terms.items()}, window)

    __rmul__ = scale

    def restrict(self, window: Window) -> "GradedChar":
        return GradedChar(self.terms, window)

    def weight_series(self, mu: int) -> TruncSeries:
        """Hilbert series of the weight-``mu`` space."""
        acc = TruncSeries.zero()
        for lam, f in self.terms.items():
            if lam >= abs(mu) and (lam - mu) % 2 == 0:
                acc = acc + f
        return acc

    def layer(self, r: int) -> dict[int, int]:
        """Multiplicities of the V(lam) in grade ``r``."""
        return {lam: f[r] for lam, f in self.terms.items() if f[r]}

    def collapse(self) -> Sl2Char:
        """Forget the grading (u -> 1); needs a finite-dimensional character."""
        out = Sl2Char()
        for lam, f in self.terms.items():
            out = out + irr_char(lam) * f.at_one()
        return out

    def dim(self) -> int:
        return sum((lam + 1) * f.at_one() for lam, f in self.terms.items())

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "window": {"lo": self.lo, "hi": self.hi},
            "terms": [{"weight": lam, "series": f.to_json()}
                      for lam, f in sorted(self.terms.items())],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "GradedChar":
        w = data["window"]
        terms = {int(t["weight"]): TruncSeries.from_json(t["series"]) for t in data["terms"]}
        return cls(terms, (int(w["lo"]), int(w["hi"])))

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["weight", "exponent", "coefficient"])
        for lam, f in sorted(self.terms.items()):
            for k, c in sorted(f.terms().items()):
                writer.writerow([lam, k, c])
        return buf.getvalue()


def _window(lam: int, window: Window | None) -> Window:
    return default_window(lam) if window is None else tuple(window)  # type: ignore[return-value]


def trivial(window: Window = (0, 0)) -> GradedChar:
    return GradedChar({0: TruncSeries.one()}, window)


def gchar_weyl_local(lam: int, window: Window | None = None) -> GradedChar:
    if lam < 0:
        raise ValueError("lam must be nonnegative")
    terms = {}
    for r in range(lam // 2 + 1):
        terms[lam - 2 * r] = q_binom(lam, r) - q_binom(lam, r - 1)
    return GradedChar(terms, _window(lam, window))


def gchar_weyl_global(lam: int, window: Window | None = None) -> GradedChar:
    lo, hi = _window(lam, window)
    p = poch_inv(lam, max(hi, 0))
    return gchar_weyl_local(lam, (lo, hi)).scale(p).restrict((lo, hi))


def weight_hilbert(lam: int, p: int, window: Window | None = None) -> TruncSeries:
    """Hilbert series of the weight ``lam - 2p`` space of W(lam)."""
    lo, hi = _window(lam, window)
    if p < 0 or p > lam:
        return TruncSeries.zero()
    return (poch_inv(lam, max(hi, 0)) * q_binom(lam, p)).truncate(hi)


def gchar_tau(chi: GradedChar, s: int) -> GradedChar:
    return GradedChar({k: f.shift(s) for k, f in chi.terms.items()},
                      (chi.lo + s, chi.hi + s))


def gchar_dual(chi: GradedChar) -> GradedChar:
    terms = {k: substitute_inverse(f) for k, f in chi.terms.items()}
    return GradedChar(terms, (-chi.hi, -chi.lo))


def gchar_tensor(a: GradedChar, b: GradedChar) -> GradedChar:
    window = (a.lo + b.lo, a.hi + b.hi)
    acc: dict[int, TruncSeries] = {}
    for l1, f in a.terms.items():
        for l2, g in b.terms.items():
            fg = f * g
            for lam in clebsch_gordan(l1, l2):
                acc[lam] = acc[lam] + fg if lam in acc else fg
    return GradedChar(acc, window)


def gchar_tilting(lam: int, window: Window | None = None) -> GradedChar:
    """Graded character of the indecomposable tilting module T(lam, 0)."""
    lo, hi = _window(lam, window)
    lo = min(lo, -socle_grade(lam))
    acc = GradedChar({}, (lo, hi))
    for s in range(lam // 2 + 1):
        e = s * (s - lam)
        reach = max(hi - e, 0)
        piece = gchar_weyl_global(lam - 2 * s, (0, reach)).scale(poch_inv(s, reach))
        acc = acc + gchar_tau(piece, e).restrict((lo, hi))
    return acc


def gchar_dual_local(lam: int, window: Window | None = None) -> GradedChar:
    return gchar_dual(gchar_weyl_local(lam)).restrict(_window(lam, window))


def gchar_wedge_w1(lam: int, window: Window | None = None) -> GradedChar:
    """Graded character of the lam-th exterior power of W(1)."""
    lo, hi = _window(lam, window)
    a = a_shift(lam)
    low = a - socle_grade(lam)
    reach = max(hi - low, 0)
    dual = gchar_dual(gchar_weyl_local(lam))
    return gchar_tau(dual.scale(poch_inv(lam, reach)), a).restrict((lo, hi))


FAMILIES = {
    "weyl-local": gchar_weyl_local,
    "weyl-global": gchar_weyl_global,
    "dual-local": gchar_dual_local,
    "tilting": gchar_tilting,
    "wedge-w1": gchar_wedge_w1,
}
