"""Characters of finite-dimensional sl2-modules."""

from __future__ import annotations

from collections import Counter
from typing import Mapping


class NotACharacter(ValueError):
    """The weight function is not the character of an sl2-module."""


class Sl2Char:
    """Finite-support map weight -> dimension."""

    __slots__ = ("weights",)

    def __init__(self, weights: Mapping[int, int] | None = None):
        self.weights = {int(k): int(v) for k, v in (weights or {}).items() if v}

    def __getitem__(self, mu: int) -> int:
        return self.weights.get(mu, 0)

    def __eq__(self, other):
        if isinstance(other, Sl2Char):
            return self.weights == other.weights
        return NotImplemented

    def __add__(self, other: "Sl2Char") -> "Sl2Char":
        c = Counter(self.weights)
        c.update(other.weights)
        return Sl2Char(c)

    def __mul__(self, other):
        if isinstance(other, int):
            return Sl2Char({k: v * other for k, v in self.weights.items()})
        return char_mul(self, other)

    __rmul__ = __mul__

    def dim(self) -> int:
        return sum(self.weights.values())

    def __repr__(self):
        return f"Sl2Char({dict(sorted(self.weights.items(), reverse=True))})"

    def to_json(self) -> dict:
        return {"weights": [[mu, d] for mu, d in sorted(self.weights.items())]}

    @classmethod
    def from_json(cls, data) -> "Sl2Char":
        return cls({int(mu): int(d) for mu, d in data["weights"]})


def irr_char(lam: int) -> Sl2Char:
    """Character of V(lam); zero when lam < 0."""
    if lam < 0:
        return Sl2Char()
    return Sl2Char({lam - 2 * p: 1 for p in range(lam + 1)})


def char_mul(a: Sl2Char, b: Sl2Char) -> Sl2Char:
    out: Counter = Counter()
    for mu, x in a.weights.items():
        for nu, y in b.weights.items():
            out[mu + nu] += x * y
    return Sl2Char(out)


def decompose(chi: Sl2Char | Mapping[int, int]) -> dict[int, int]:
    """Multiplicities of the V(lam) in ``chi``, peeled from the top weight.

    Raises :class:`NotACharacter` on a negative multiplicity or when the
    peeled sum does not reproduce ``chi``.
    """
    w = chi.weights if isinstance(chi, Sl2Char) else dict(chi)
    if not w:
        return {}
    top = max(abs(k) for k in w)
    mults = {}
    for lam in range(top, -1, -1):
        m = w.get(lam, 0) - w.get(lam + 2, 0)
        if m < 0:
            raise NotACharacter(f"negative multiplicity {m} for V({lam})")
        if m:
            mults[lam] = m
    rebuilt = Sl2Char()
    for lam, m in mults.items():
        rebuilt = rebuilt + irr_char(lam) * m
    if rebuilt.weights != {k: v for k, v in w.items() if v}:
        raise NotACharacter("weight function is not a sum of irreducible characters")
    return mults


def recompose(mults: Mapping[int, int]) -> Sl2Char:
    out = Sl2Char()
    for lam, m in mults.items():
        out = out + irr_char(lam) * m
    return out


def clebsch_gordan(lam: int, mu: int) -> dict[int, int]:
    if lam < 0 or mu < 0:
        raise ValueError("highest weights must be nonnegative")
    return {lam + mu - 2 * nu: 1 for nu in range(min(lam, mu) + 1)}
