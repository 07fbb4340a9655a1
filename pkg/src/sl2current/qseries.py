"""Exact truncated Laurent series in ``u`` with integer coefficients.

A :class:`TruncSeries` stores the coefficients of ``u**lo .. u**hi``.  Every
coefficient below ``lo`` is zero.  Coefficients above ``hi`` are unknown,
unless the series is marked ``exact`` (a Laurent polynomial), in which case
they are zero as well.

Arithmetic never extends a truncation order: the result of an operation is
known exactly up to the smallest order its operands can certify.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterable, Mapping


class WindowError(ValueError):
    """Raised when windows cannot support the requested operation."""


class TruncSeries:
    __slots__ = ("lo", "hi", "coeffs", "exact")

    def __init__(self, lo: int, coeffs: Iterable[int], hi: int | None = None,
                 exact: bool = False):
        coeffs = tuple(int(c) for c in coeffs)
        if hi is None:
            hi = lo + len(coeffs) - 1
        if hi < lo - 1:
            raise WindowError("incompatible windows")
        n = hi - lo + 1
        if len(coeffs) < n:
            coeffs = coeffs + (0,) * (n - len(coeffs))
        elif len(coeffs) > n:
            coeffs = coeffs[:n]
        if exact:
            # canonical window for polynomials: the support hull
            nz = [i for i, c in enumerate(coeffs) if c]
            if nz:
                coeffs = coeffs[nz[0]:nz[-1] + 1]
                lo, hi = lo + nz[0], lo + nz[-1]
            else:
                coeffs, lo, hi = (), 0, -1
        self.lo = lo
        self.hi = hi
        self.coeffs = coeffs
        self.exact = exact

    # -- constructors ------------------------------------------------------

    @classmethod
    def poly(cls, terms: Mapping[int, int] | Iterable[int], lo: int = 0) -> "TruncSeries":
        """Exact Laurent polynomial from ``{exp: coeff}`` or a coefficient list."""
        if isinstance(terms, Mapping):
            terms = {k: v for k, v in terms.items() if v}
            if not terms:
                return cls(0, (), exact=True)
            a, b = min(terms), max(terms)
            return cls(a, [terms.get(k, 0) for k in range(a, b + 1)], exact=True)
        return cls(lo, list(terms), exact=True)

    @classmethod
    def zero(cls) -> "TruncSeries":
        return cls(0, (), exact=True)

    @classmethod
    def one(cls) -> "TruncSeries":
        return cls(0, (1,), exact=True)

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "TruncSeries":
        return cls(k, (c,), exact=True)

    # -- inspection --------------------------------------------------------

    @property
    def top(self) -> float:
        """Highest exponent known exactly (``inf`` for polynomials)."""
        return math.inf if self.exact else self.hi

    def __getitem__(self, k: int) -> int:
        if k < self.lo:
            return 0
        if k > self.hi:
            if self.exact:
                return 0
            raise WindowError(f"coefficient of u^{k} lies beyond truncation order {self.hi}")
        return self.coeffs[k - self.lo]

    def terms(self) -> dict[int, int]:
        return {self.lo + i: c for i, c in enumerate(self.coeffs) if c}

    def support(self) -> tuple[int, int] | None:
        t = self.terms()
        if not t:
            return None
        return min(t), max(t)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_nonneg(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def at_one(self) -> int:
        """Evaluate at ``u = 1``; only meaningful for polynomials."""
        if not self.exact:
            raise WindowError("cannot evaluate a truncated series at u=1")
        return sum(self.coeffs)

    # -- windows -----------------------------------------------------------

    def truncate(self, hi: int) -> "TruncSeries":
        """Forget every coefficient above ``hi``."""
        if self.exact and self.hi <= hi:
            return self
        if hi >= self.top:
            return self
        lo = min(self.lo, hi + 1)
        return TruncSeries(lo, [self[k] for k in range(lo, hi + 1)], hi)

    def with_lo(self, lo: int) -> "TruncSeries":
        """Re-express with lowest tracked exponent ``lo``.

        Raising ``lo`` is allowed only over zero coefficients.
        """
        if lo > self.lo and any(self[k] for k in range(self.lo, min(lo, self.hi + 1))):
            raise WindowError(f"nonzero coefficient below window floor {lo}")
        if self.exact:
            return self
        if lo > self.hi + 1:
            return TruncSeries(self.hi + 1, (), self.hi)
        return TruncSeries(lo, [self[k] for k in range(lo, self.hi + 1)], self.hi)

    def agrees(self, other: "TruncSeries | int") -> bool:
        """Compare coefficient-wise wherever both series are known."""
        other = _coerce(other)
        lo = min(self.lo, other.lo)
        top = min(self.top, other.top)
        if top == math.inf:
            top = max(self.hi, other.hi)
        return all(self[k] == other[k] for k in range(lo, int(top) + 1))

    __eq__ = agrees
    __hash__ = None  # type: ignore[assignment]

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        return series_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries(self.lo, [-c for c in self.coeffs], self.hi, self.exact)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncSeries(self.lo, [c * other for c in self.coeffs], self.hi, self.exact)
        return series_mul(self, other)

    def __rmul__(self, other):
        return self * other

    def shift(self, s: int) -> "TruncSeries":
        """Multiply by ``u**s``."""
        return TruncSeries(self.lo + s, self.coeffs, self.hi + s, self.exact)

    # -- rendering ---------------------------------------------------------

    def __repr__(self):
        body = format_series(self)
        if self.exact:
            return f"TruncSeries({body})"
        return f"TruncSeries({body} + O(u^{self.hi + 1}))"

    def to_json(self) -> dict:
        out = {"lo": self.lo, "hi": self.hi,
               "coeffs": [[k, c] for k, c in sorted(self.terms().items())]}
        if self.exact:
            out["exact"] = True
        return out

    @classmethod
    def from_json(cls, data: Mapping) -> "TruncSeries":
        lo, hi = int(data["lo"]), int(data["hi"])
        terms = {int(k): int(c) for k, c in data["coeffs"]}
        if any(k < lo or k > hi for k in terms):
            raise ValueError("coefficient outside declared window")
        return cls(lo, [terms.get(k, 0) for k in range(lo, hi + 1)], hi,
                   exact=bool(data.get("exact", False)))


def _coerce(x) -> TruncSeries:
    if isinstance(x, TruncSeries):
        return x
    if isinstance(x, int):
        return TruncSeries.monomial(0, x)
    raise TypeError(f"cannot treat {type(x).__name__} as a series")


def format_series(f: TruncSeries) -> str:
    """Sorted monomial string, e.g. ``u^-1 + 2 + u^3``."""
    parts = []
    for k, c in sorted(f.terms().items()):
        mono = "" if k == 0 else ("u" if k == 1 else f"u^{k}")
        if k == 0:
            s = str(abs(c))
        elif abs(c) == 1:
            s = mono
        else:
            s = f"{abs(c)}{mono}"
        parts.append(("- " if c < 0 else "+ ") + s)
    if not parts:
        return "0"
    out = " ".join(parts)
    return out[2:] if out.startswith("+ ") else "-" + out[2:]


def series_add(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    if a.exact and b.exact:
        lo, hi = min(a.lo, b.lo), max(a.hi, b.hi)
        return TruncSeries(lo, [a[k] + b[k] for k in range(lo, hi + 1)], hi, exact=True)
    lo, hi = min(a.lo, b.lo), int(min(a.top, b.top))
    if hi < lo - 1:
        raise WindowError("incompatible windows")
    return TruncSeries(lo, [a[k] + b[k] for k in range(lo, hi + 1)], hi)


def series_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """Cauchy product, known up to the smaller certified order."""
    if a.exact and a.is_zero() or b.exact and b.is_zero():
        return TruncSeries.zero()
    lo = a.lo + b.lo
    if a.exact and b.exact:
        hi = a.hi + b.hi
    else:
        hi = int(min(a.top + b.lo, b.top + a.lo))
    n = hi - lo + 1
    out = [0] * max(n, 0)
    ac, bc = a.coeffs, b.coeffs
    for i, x in enumerate(ac):
        if not x:
            continue
        for j in range(min(len(bc), n - i)):
            y = bc[j]
            if y:
                out[i + j] += x * y
    return TruncSeries(lo, out, hi, exact=a.exact and b.exact)


def substitute_inverse(f: TruncSeries) -> TruncSeries:
    """Replace ``u`` by ``1/u``; requires provably finite support."""
    if not f.exact:
        if f.hi < f.lo + 2 or f.coeffs[0] or f.coeffs[-1]:
            raise WindowError("not dualizable")
    t = f.terms()
    return TruncSeries.poly({-k: c for k, c in t.items()})


# -- q-combinatorics --------------------------------------------------------

@lru_cache(maxsize=None)
def _poch_poly_coeffs(n: int) -> tuple[int, ...]:
    c = [1]
    for m in range(1, n + 1):
        nxt = c + [0] * m
        for i, x in enumerate(c):
            nxt[i + m] -= x
        c = nxt
    return tuple(c)


def poch_poly(n: int) -> TruncSeries:
    """The polynomial (1-u)(1-u^2)...(1-u^n)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return TruncSeries(0, _poch_poly_coeffs(n), exact=True)


def poch_inv(n: int, hi: int) -> TruncSeries:
    """1/((1-u)...(1-u^n)) expanded up to ``u**hi``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if hi < 0:
        return TruncSeries(0, (), hi)
    c = [1] + [0] * hi
    for m in range(1, n + 1):
        for k in range(m, hi + 1):
            c[k] += c[k - m]
    return TruncSeries(0, c, hi)


def q_int(n: int) -> TruncSeries:
    """[n] = (1-u^n)/(1-u).  For negative n this is -(u^n + ... + u^-1)."""
    if n >= 0:
        return TruncSeries(0, [1] * n, exact=True)
    return TruncSeries(n, [-1] * (-n), exact=True)


@lru_cache(maxsize=None)
def _q_binom_coeffs(n: int, s: int) -> tuple[int, ...]:
    if s == 0 or s == n:
        return (1,)
    # q-Pascal: [n,s] = [n-1,s-1] + u^s [n-1,s]
    a = _q_binom_coeffs(n - 1, s - 1)
    b = _q_binom_coeffs(n - 1, s) if s <= n - 1 else ()
    out = [0] * (s * (n - s) + 1)
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i + s] += x
    return tuple(out)


def q_binom(n: int, s: int) -> TruncSeries:
    """Gaussian binomial coefficient as an exact polynomial."""
    if s < 0:
        return TruncSeries.zero()
    if s == 0:
        return TruncSeries.one()
    if n < 0:
        raise ValueError("q_binom(n, s) needs n >= 0 when s > 0")
    if s > n:
        return TruncSeries.zero()
    return TruncSeries(0, _q_binom_coeffs(n, s), exact=True)


u = TruncSeries.monomial(1)
