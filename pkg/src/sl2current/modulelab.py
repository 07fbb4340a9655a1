"""Explicit truncated realizations of sl2[t]-modules built from W(1).

W(1) has basis ``(j, k)`` standing for ``e_j (x) t^k`` (j = 1, 2).  The
constructions here are tensor, symmetric and exterior powers of W(1), tensor
products of those, and the local Weyl quotient of a symmetric power by the
augmentation ideal of the symmetric polynomials acting on the right.

Everything is truncated at a total degree ``D``.  Operator images that land
above ``D`` are dropped, so statements about degree ``d`` are exact only when
they do not need such images.
"""

from __future__ import annotations

import enum
import math
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Callable, Iterable, Mapping, NamedTuple, Sequence

from . import linalg
from .gradedchar import GradedChar
from .qseries import TruncSeries
from .sl2char import NotACharacter, decompose

Letter = tuple[int, int]
Vector = dict  # label -> Fraction


class Kind(enum.Enum):
    TENSOR = "tensor"
    SYM = "sym"
    WEDGE = "wedge"
    LOCAL_QUOTIENT = "local"


@dataclass(frozen=True)
class Caps:
    lam: int = 6
    trunc: int = 12
    basis: int = 10**6


DEFAULT_CAPS = Caps()


class CapExceeded(RuntimeError):
    pass


class NoHeadroom(ValueError):
    pass


# -- single-letter operators --------------------------------------------------

LetterOp = Callable[[Letter], Sequence[tuple[Letter, int]]]


def gen_op(gen: str, r: int) -> LetterOp:
    """``gen (x) t^r`` on W(1), with x e2 = e1, y e1 = e2, h e_j = (3-2j) e_j."""
    if gen == "x":
        return lambda l: (((1, l[1] + r), 1),) if l[0] == 2 else ()
    if gen == "y":
        return lambda l: (((2, l[1] + r), 1),) if l[0] == 1 else ()
    if gen == "h":
        return lambda l: (((l[0], l[1] + r), 3 - 2 * l[0]),)
    raise ValueError(f"unknown generator {gen!r}")


def tpow_op(s: int) -> LetterOp:
    """Right multiplication by t^s on one tensor factor."""
    return lambda l: (((l[0], l[1] + s), 1),)


def letter_weight(l: Letter) -> int:
    return 3 - 2 * l[0]


# -- realizations -------------------------------------------------------------

class Realization:
    """Common interface: graded blocks of basis labels and Leibniz operators."""

    kind: Kind
    lam: int
    D: int
    blocks: dict[tuple[int, int], list]

    def _finish(self, labels: Iterable, caps: Caps):
        blocks: dict[tuple[int, int], list] = defaultdict(list)
        n = 0
        for lab in labels:
            n += 1
            if n > caps.basis:
                raise CapExceeded(f"basis exceeds cap of {caps.basis} labels")
            blocks[(self.degree(lab), self.weight(lab))].append(lab)
        self.blocks = {k: sorted(v) for k, v in sorted(blocks.items())}
        self.index = {lab: i for labs in self.blocks.values() for i, lab in enumerate(labs)}

    def block(self, d: int, mu: int) -> list:
        return self.blocks.get((d, mu), [])

    def block_dims(self) -> dict[tuple[int, int], int]:
        return {k: len(v) for k, v in self.blocks.items()}

    def weights(self) -> list[int]:
        return sorted({mu for _, mu in self.blocks})

    def size(self) -> int:
        return sum(len(v) for v in self.blocks.values())

    def apply(self, op: LetterOp, vec: Mapping) -> Vector:
        out: dict = defaultdict(Fraction)
        for lab, c in vec.items():
            for lab2, c2 in self._apply_label(op, lab):
                if self.degree(lab2) <= self.D:
                    out[lab2] += c * c2
        return {k: v for k, v in out.items() if v}

    def degree(self, lab) -> int:
        raise NotImplementedError

    def weight(self, lab) -> int:
        raise NotImplementedError

    def _apply_label(self, op: LetterOp, lab):
        raise NotImplementedError


class PowerRealization(Realization):
    """TENSOR, SYM or WEDGE power of W(1); labels are tuples of letters."""

    def __init__(self, kind: Kind, lam: int, D: int, caps: Caps = DEFAULT_CAPS):
        if kind not in (Kind.TENSOR, Kind.SYM, Kind.WEDGE):
            raise ValueError(kind)
        _check_caps(lam, D, caps)
        self.kind, self.lam, self.D = kind, lam, D
        self._finish(self._enumerate(), caps)

    def _enumerate(self):
        letters = [(j, k) for j in (1, 2) for k in range(self.D + 1)]
        step = {Kind.TENSOR: None, Kind.SYM: 0, Kind.WEDGE: 1}[self.kind]

        def rec(start, n, budget):
            if n == 0:
                yield ()
                return
            for i in range(start, len(letters)):
                l = letters[i]
                if l[1] > budget:
                    continue
                nxt = 0 if step is None else i + step
                for rest in rec(nxt, n - 1, budget - l[1]):
                    yield (l,) + rest

        return rec(0, self.lam, self.D)

    def degree(self, lab) -> int:
        return sum(k for _, k in lab)

    def weight(self, lab) -> int:
        return sum(3 - 2 * j for j, _ in lab)

    def _apply_label(self, op: LetterOp, lab):
        for i, l in enumerate(lab):
            for l2, c in op(l):
                new = lab[:i] + (l2,) + lab[i + 1:]
                if self.kind is Kind.TENSOR:
                    yield new, c
                elif self.kind is Kind.SYM:
                    yield tuple(sorted(new)), c
                else:
                    sign, srt = _sort_sign(new)
                    if sign:
                        yield srt, sign * c


def _sort_sign(t: tuple) -> tuple[int, tuple]:
    if len(set(t)) < len(t):
        return 0, t
    # parity of the sorting permutation via inversion count
    inv = sum(1 for i in range(len(t)) for j in range(i + 1, len(t)) if t[i] > t[j])
    return (-1 if inv % 2 else 1), tuple(sorted(t))


class ProductRealization(Realization):
    """Tensor product of realizations; labels are tuples of factor labels."""

    kind = Kind.TENSOR

    def __init__(self, factors: Sequence[Realization], D: int, caps: Caps = DEFAULT_CAPS):
        self.factors = list(factors)
        self.lam = sum(f.lam for f in factors)
        self.D = D
        if any(f.D < D for f in factors):
            raise ValueError("factors must be truncated at least at D")

        def gen():
            per = [[lab for labs in f.blocks.values() for lab in labs] for f in self.factors]
            for combo in product(*per):
                if self.degree(combo) <= D:
                    yield combo
        self._finish(gen(), caps)

    def degree(self, lab) -> int:
        return sum(f.degree(l) for f, l in zip(self.factors, lab))

    def weight(self, lab) -> int:
        return sum(f.weight(l) for f, l in zip(self.factors, lab))

    def _apply_label(self, op: LetterOp, lab):
        for i, (f, l) in enumerate(zip(self.factors, lab)):
            for l2, c in f._apply_label(op, l):
                yield lab[:i] + (l2,) + lab[i + 1:], c


class LocalQuotient(Realization):
    """SYM(lam) modulo the image of the positive-degree symmetric polynomials.

    Exact in every degree <= D: the ideal is generated by the power sums
    p_1..p_lam, which only raise degree, so the image in degree d comes from
    degrees below d.
    """

    kind = Kind.LOCAL_QUOTIENT

    def __init__(self, lam: int, D: int, caps: Caps = DEFAULT_CAPS):
        self.lam, self.D = lam, D
        self.sym = PowerRealization(Kind.SYM, lam, D, caps)
        self.ideal: dict[tuple[int, int], linalg.Echelon] = {}
        self.blocks = {}
        for (d, mu), labs in self.sym.blocks.items():
            ech = linalg.Echelon()
            idx = self.sym.index
            for s in range(1, lam + 1):
                op = tpow_op(s)
                for lab in self.sym.block(d - s, mu):
                    img = self.sym.apply(op, {lab: Fraction(1)})
                    ech.add({idx[k]: v for k, v in img.items()})
            self.ideal[(d, mu)] = ech
            self.blocks[(d, mu)] = [lab for i, lab in enumerate(labs) if i not in ech.pivots]
        self.blocks = {k: v for k, v in self.blocks.items() if v}
        self.index = {lab: i for labs in self.blocks.values() for i, lab in enumerate(labs)}

    def degree(self, lab) -> int:
        return self.sym.degree(lab)

    def weight(self, lab) -> int:
        return self.sym.weight(lab)

    def project(self, vec: Mapping) -> Vector:
        """Canonical representative of a SYM vector modulo the ideal image."""
        by_block: dict = defaultdict(dict)
        for lab, c in vec.items():
            by_block[(self.degree(lab), self.weight(lab))][self.sym.index[lab]] = c
        out = {}
        for key, row in by_block.items():
            labs = self.sym.blocks[key]
            for i, c in self.ideal[key].normal_form(row).items():
                out[labs[i]] = c
        return out

    def apply(self, op: LetterOp, vec: Mapping) -> Vector:
        return self.project(self.sym.apply(op, vec))

    def _apply_label(self, op, lab):
        raise TypeError("the quotient has no Leibniz rule on labels; use apply")


def _check_caps(lam: int, D: int, caps: Caps):
    if lam < 0 or D < 0:
        raise ValueError("lam and D must be nonnegative")
    if lam > caps.lam or D > caps.trunc:
        raise CapExceeded(f"lam={lam}, D={D} exceeds caps lam<={caps.lam}, D<={caps.trunc}")


def build(kind: Kind | str, lam: int, D: int, caps: Caps = DEFAULT_CAPS) -> Realization:
    kind = Kind(kind) if isinstance(kind, str) else kind
    if kind is Kind.LOCAL_QUOTIENT:
        _check_caps(lam, D, caps)
        return LocalQuotient(lam, D, caps)
    return PowerRealization(kind, lam, D, caps)


# -- operators ----------------------------------------------------------------

@dataclass
class OperatorMatrix:
    source: tuple[int, int]
    target: tuple[int, int]
    rows: int
    cols: int
    entries: dict[tuple[int, int], Fraction] = field(default_factory=dict)

    def dense(self) -> list[list[Fraction]]:
        m = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            m[i][j] = v
        return m

    def __matmul__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        if other.target != self.source:
            raise ValueError("block mismatch")
        acc: dict = defaultdict(Fraction)
        by_row = defaultdict(list)
        for (k, j), v in other.entries.items():
            by_row[k].append((j, v))
        for (i, k), a in self.entries.items():
            for j, b in by_row.get(k, ()):
                acc[(i, j)] += a * b
        return OperatorMatrix(other.source, self.target, self.rows, other.cols,
                              {k: v for k, v in acc.items() if v})

    def dump(self) -> str:
        return linalg.format_matrix(self.dense())


class OperatorFamily(NamedTuple):
    maps: dict[tuple[int, int], OperatorMatrix]
    truncated_at: int


def _family(M: Realization, op: LetterOp, ddeg: int, dwt: int) -> OperatorFamily:
    maps = {}
    for (d, mu), labs in M.blocks.items():
        tgt = (d + ddeg, mu + dwt)
        if d + ddeg > M.D:
            continue
        tlabs = M.blocks.get(tgt, [])
        ent = {}
        for j, lab in enumerate(labs):
            for k, v in M.apply(op, {lab: Fraction(1)}).items():
                ent[(M.index[k], j)] = v
        maps[(d, mu)] = OperatorMatrix((d, mu), tgt, len(tlabs), len(labs), ent)
    return OperatorFamily(maps, M.D)


_GEN_WT = {"x": 2, "y": -2, "h": 0}


def act(M: Realization, gen: str, r: int) -> OperatorFamily:
    """Block matrices of ``gen (x) t^r``."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    return _family(M, gen_op(gen, r), r, _GEN_WT[gen])


def right_powersum(M: Realization, s: int) -> OperatorFamily:
    """Block matrices of right multiplication by t_1^s + ... + t_lam^s."""
    if s < 1:
        raise ValueError("s must be positive")
    if M.kind is Kind.LOCAL_QUOTIENT:
        raise ValueError("power sums act on the quotient by zero only modulo truncation")
    return _family(M, tpow_op(s), s, 0)


# -- derived quantities -------------------------------------------------------

def layer_chars(M: Realization, D_safe: int) -> dict[int, dict[int, int]]:
    out: dict[int, dict[int, int]] = {d: {} for d in range(D_safe + 1)}
    for (d, mu), labs in M.blocks.items():
        if d <= D_safe:
            out[d][mu] = len(labs)
    return out


def _char_from_layers(layers: Mapping[int, Mapping[int, int]], D_safe: int) -> GradedChar:
    series: dict[int, list[int]] = defaultdict(lambda: [0] * (D_safe + 1))
    for d, wts in layers.items():
        try:
            mults = decompose(wts)
        except NotACharacter as exc:
            raise NotACharacter(f"layer not sl2-complete at degree {d}: {exc}") from None
        for lam, m in mults.items():
            series[lam][d] = m
    terms = {lam: TruncSeries(0, c, D_safe) for lam, c in series.items()}
    return GradedChar(terms, (0, D_safe))


def graded_char_of(M: Realization, D_safe: int | None = None) -> GradedChar:
    """Graded character read off the block dimensions, up to degree D_safe."""
    D_safe = M.D if D_safe is None else D_safe
    if D_safe > M.D:
        raise ValueError("D_safe exceeds the truncation degree")
    return _char_from_layers(layer_chars(M, D_safe), D_safe)


def wedge_top_space(lam: int, D: int, caps: Caps = DEFAULT_CAPS) -> TruncSeries:
    """Hilbert series of the weight-lam space of the lam-th exterior power."""
    M = build(Kind.WEDGE, lam, D, caps)
    return TruncSeries(0, [len(M.block(d, lam)) for d in range(D + 1)], D)


class HighestWeightSpace(NamedTuple):
    basis: list[Vector]
    degree: int
    weight: int
    checked_up_to: int  # largest r with x (x) t^r imposed


def highest_weight_vectors(M: Realization, d: int, mu: int, margin: int | None = None) -> HighestWeightSpace:
    """Joint kernel of x (x) t^r, 0 <= r <= D - d, on block (d, mu).

    Conditions for r > D - d are invisible in the truncation, so the result is
    exact only up to that bound.
    """
    margin = max(1, M.lam if margin is None else margin)
    if M.D - d < margin:
        raise NoHeadroom("no headroom; kernel not certifiable")
    labs = M.block(d, mu)
    images = []
    for lab in labs:
        img = {}
        for r in range(M.D - d + 1):
            for k, v in M.apply(gen_op("x", r), {lab: Fraction(1)}).items():
                img[(r, k)] = v
        images.append(img)
    ker = linalg.kernel(images)
    basis = [{labs[i]: c for i, c in v.items()} for v in ker]
    return HighestWeightSpace(basis, d, mu, M.D - d)


# -- Garland elements ---------------------------------------------------------

Monomial = tuple[int, ...]  # sorted exponents k of commuting factors h (x) t^k


@lru_cache(maxsize=None)
def garland_p(n: int) -> dict[Monomial, Fraction]:
    """P_n as a polynomial in the commuting elements h (x) t^k, k >= 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return {(): Fraction(1)}
    acc: dict[Monomial, Fraction] = defaultdict(Fraction)
    for s in range(n):
        for mono, c in garland_p(n - s - 1).items():
            acc[tuple(sorted(mono + (s + 1,)))] += c
    return {m: -c / n for m, c in acc.items() if c}


def apply_poly_h(M: Realization, poly: Mapping[Monomial, Fraction], vec: Mapping) -> Vector:
    out: dict = defaultdict(Fraction)
    for mono, c in poly.items():
        v = dict(vec)
        for k in mono:
            v = M.apply(gen_op("h", k), v)
            if not v:
                break
        for lab, x in v.items():
            out[lab] += c * x
    return {k: v for k, v in out.items() if v}


def apply_power(M: Realization, op: LetterOp, n: int, vec: Mapping) -> Vector:
    for _ in range(n):
        vec = M.apply(op, vec)
    return dict(vec)


def garland_lhs(M: Realization, s: int, vec: Mapping) -> Vector:
    """(x (x) t)^s (y (x) 1)^s applied to ``vec``."""
    return apply_power(M, gen_op("x", 1), s, apply_power(M, gen_op("y", 0), s, vec))


def _sub(a: Mapping, b: Mapping) -> Vector:
    out = dict(a)
    for k, v in b.items():
        nv = out.get(k, 0) - v
        if nv:
            out[k] = nv
        else:
            out.pop(k, None)
    return out


def verify_comultiplication(n: int, D: int, caps: Caps = DEFAULT_CAPS) -> bool:
    """P_n on W(1)(x)W(1) against sum_s P_s (x) P_{n-s}, on every basis vector
    of degree <= D - n."""
    if n > D:
        raise NoHeadroom("comultiplication check needs n <= D")
    one = build(Kind.TENSOR, 1, D, caps)
    two = build(Kind.TENSOR, 2, D, caps)
    for (d, _), labs in two.blocks.items():
        if d + n > D:
            continue
        for lab in labs:
            direct = apply_poly_h(two, garland_p(n), {lab: Fraction(1)})
            split: dict = defaultdict(Fraction)
            for s in range(n + 1):
                left = apply_poly_h(one, garland_p(s), {(lab[0],): Fraction(1)})
                right = apply_poly_h(one, garland_p(n - s), {(lab[1],): Fraction(1)})
                for (a,), x in left.items():
                    for (b,), y in right.items():
                        split[(a, b)] += x * y
            if _sub(direct, {k: v for k, v in split.items() if v}):
                return False
    return True


def verify_garland(lam: int, s: int, D: int, comult_max: int = 4,
                   caps: Caps = DEFAULT_CAPS) -> bool:
    """Garland's identity in SYM(lam).

    Every vector of weight lam is killed by x (x) C[t]; on each such basis
    vector of degree <= D - s checks (x(x)t)^s (y(x)1)^s v = (-1)^s (s!)^2 P_s v.
    Also checks P_s w = 0 on the generator w = e_1^lam once s > lam and, for
    s <= comult_max, the coproduct of P_s on W(1)(x)W(1).
    """
    if s > D:
        raise NoHeadroom("need s <= D")
    M = build(Kind.SYM, lam, D, caps)
    scale = (-1) ** s * math.factorial(s) ** 2
    for d in range(D - s + 1):
        for lab in M.block(d, lam):
            v = {lab: Fraction(1)}
            ps = apply_poly_h(M, garland_p(s), v)
            if _sub(garland_lhs(M, s, v), {k: scale * c for k, c in ps.items()}):
                return False
    w = {((1, 0),) * lam: Fraction(1)}
    if s >= lam + 1 and apply_poly_h(M, garland_p(s), w):
        return False
    if s <= comult_max and not verify_comultiplication(s, D, caps):
        return False
    return True


# -- o-canonical filtration -----------------------------------------------------

def ocanonical(M: Realization, weight: int) -> tuple[GradedChar, GradedChar]:
    """Graded characters of M^weight and M / M^weight up to degree D.

    M^weight is the submodule generated by all weight spaces of weight >=
    ``weight``.  Its degree-d part is the sl2-span of those weight spaces in
    degree d together with (g (x) t^r) M^weight[d - r], r >= 1, which only
    involves lower degrees, so the computation is exact through degree D.
    """
    if isinstance(M, LocalQuotient):
        raise ValueError("o-canonical filtration is implemented for tensor/power realizations")
    D = M.D
    span: dict[tuple[int, int], linalg.Echelon] = {}

    def echelon(key):
        if key not in span:
            span[key] = linalg.Echelon()
        return span[key]

    def to_cols(vec):
        return {M.index[k]: v for k, v in vec.items()}

    def insert(vec, queue):
        if not vec:
            return
        lab = next(iter(vec))
        key = (M.degree(lab), M.weight(lab))
        if echelon(key).add(to_cols(vec)):
            queue.append(vec)

    def vectors(key):
        labs = M.blocks[key]
        return [{labs[i]: c for i, c in row.items()} for row in span[key].basis()] if key in span else []

    for d in range(D + 1):
        queue: list = []
        for (dd, mu), labs in M.blocks.items():
            if dd == d and mu >= weight:
                for lab in labs:
                    insert({lab: Fraction(1)}, queue)
        for r in range(1, d + 1):
            for key in [k for k in M.blocks if k[0] == d - r]:
                for v in vectors(key):
                    for g in "xyh":
                        insert(M.apply(gen_op(g, r), v), queue)
        while queue:
            v = queue.pop()
            for g in "xy":
                insert(M.apply(gen_op(g, 0), v), queue)

    sub_layers = {d: {} for d in range(D + 1)}
    for (d, mu), ech in span.items():
        if ech.rank:
            sub_layers[d][mu] = ech.rank
    sub = _char_from_layers(sub_layers, D)
    return sub, graded_char_of(M, D) - sub


def report(M: Realization, D_safe: int | None = None) -> dict:
    D_safe = M.D if D_safe is None else D_safe
    return {
        "kind": M.kind.value,
        "lambda": M.lam,
        "trunc": M.D,
        "blocks": [{"degree": d, "weight": mu, "dim": len(labs)}
                   for (d, mu), labs in sorted(M.blocks.items())],
        "char": graded_char_of(M, D_safe).to_json(),
    }
