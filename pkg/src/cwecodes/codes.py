"""The codes C_D = {(Tr(a x1 + b x2))_{(x1, x2) in D} : a, b in F_q}.

D = {(x1, x2) : Tr(x1^(p^l+1)) = 1, Tr(x2) = 1}.  Because D is a product set,
the symbol counts of c(a, b) are the Z_p-convolution of the trace profiles of
a over D1 and of b over D2, so nothing here ever materializes a codeword.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .field import CodeSpec, FieldCtx, FieldElement


@dataclass(frozen=True)
class DefiningSet:
    ctx: FieldCtx = field(repr=False)
    l: int
    d1: np.ndarray = field(repr=False)
    d2: np.ndarray = field(repr=False)

    @property
    def n(self) -> int:
        return len(self.d1) * len(self.d2)

    def x1(self) -> list[FieldElement]:
        return [self.ctx.element(i) for i in self.d1]

    def x2(self) -> list[FieldElement]:
        return [self.ctx.element(i) for i in self.d2]


def build_defining_set(ctx: FieldCtx, l: int) -> DefiningSet:
    x = np.arange(ctx.q)
    pw = ctx.pow_idx(x, pow(ctx.p, l, ctx.q - 1) + 1)
    d1 = np.flatnonzero(ctx.trace_idx(pw) == 1)
    d2 = np.flatnonzero(ctx.trace_idx(x) == 1)
    d1.flags.writeable = False
    d2.flags.writeable = False
    return DefiningSet(ctx, l, d1, d2)


def trace_profile(ctx: FieldCtx, a, elements) -> np.ndarray:
    """counts[c] = #{x in elements : Tr(a x) = c}."""
    ia = ctx.index(ctx.element(a)) if not isinstance(a, (int, np.integer)) else int(a)
    vals = ctx.trace_idx(ctx.mul_idx(ia, np.asarray(elements, dtype=np.int64)))
    return np.bincount(vals, minlength=ctx.p)


def trace_profiles(ctx: FieldCtx, elements, rows=None) -> np.ndarray:
    """Stacked trace profiles: P[i, c] for a = rows[i] (default: every element)."""
    rows = np.arange(ctx.q) if rows is None else np.asarray(rows, dtype=np.int64)
    elements = np.asarray(elements, dtype=np.int64)
    vals = ctx.trace_idx(ctx.mul_idx(rows[:, None], elements[None, :]))
    return np.stack([(vals == c).sum(axis=1) for c in range(ctx.p)], axis=1)


def convolve_mod(u: np.ndarray, v: np.ndarray, p: int) -> np.ndarray:
    """Cyclic convolution over Z_p, broadcasting over leading axes."""
    out = np.zeros(np.broadcast_shapes(u.shape, v.shape), dtype=np.int64)
    for i in range(p):
        out += u[..., i : i + 1] * np.roll(v, i, axis=-1)
    return out


def n_rho(ds: DefiningSet, a, b) -> tuple[int, ...]:
    """Symbol counts (N_0, ..., N_{p-1}) of the codeword c(a, b)."""
    ctx = ds.ctx
    pa = trace_profile(ctx, a, ds.d1)
    pb = trace_profile(ctx, b, ds.d2)
    return tuple(int(c) for c in convolve_mod(pa, pb, ctx.p))


def n_rho_table(ds: DefiningSet, rows=None) -> np.ndarray:
    """N[i, b, rho] for a = rows[i] (default all a) and every b."""
    ctx = ds.ctx
    p1 = trace_profiles(ctx, ds.d1, rows)
    p2 = trace_profiles(ctx, ds.d2)
    return convolve_mod(p1[:, None, :], p2[None, :, :], ctx.p)


def codeword_weight(counts) -> int:
    return int(sum(counts)) - int(counts[0])


@dataclass
class WeightDistribution:
    """weight -> A_w, including A_0."""

    pairs: dict[int, int]

    def __eq__(self, other):
        if not isinstance(other, WeightDistribution):
            return NotImplemented
        return self.pairs == other.pairs

    @property
    def total(self) -> int:
        return sum(self.pairs.values())

    @property
    def nonzero_weights(self) -> list[int]:
        return sorted(w for w, a in self.pairs.items() if w and a)

    def items(self):
        return sorted(self.pairs.items())

    def __str__(self):
        terms = []
        for w, a in self.items():
            if w == 0:
                terms.append(str(a))
            else:
                terms.append(f"{a}z^{w}")
        return " + ".join(terms)


@dataclass
class CompleteWeightEnumerator:
    """Composition (t_0, ..., t_{p-1}) -> number of codewords with those counts."""

    p: int
    n: int
    terms: dict[tuple[int, ...], int]

    def __eq__(self, other):
        if not isinstance(other, CompleteWeightEnumerator):
            return NotImplemented
        return (self.p, self.n, self.terms) == (other.p, other.n, other.terms)

    @property
    def total(self) -> int:
        return sum(self.terms.values())

    def items(self):
        return sorted(self.terms.items())

    def weight_distribution(self) -> WeightDistribution:
        return weight_distribution(self, self.n)

    def to_json(self) -> list[dict]:
        return [
            {"composition": list(comp), "multiplicity": mult} for comp, mult in self.items()
        ]

    def __str__(self):
        parts = []
        for comp, mult in sorted(self.terms.items(), key=lambda t: (-t[1], t[0])):
            mono = "*".join(f"w{i}^{t}" for i, t in enumerate(comp) if t)
            parts.append(mono if mult == 1 else f"{mult}*{mono}")
        return " + ".join(parts)


def _aggregate(table: np.ndarray) -> dict[tuple[int, ...], int]:
    flat = table.reshape(-1, table.shape[-1])
    comps, counts = np.unique(flat, axis=0, return_counts=True)
    return {tuple(int(t) for t in c): int(k) for c, k in zip(comps, counts)}


def _cwe_chunk(args) -> dict[tuple[int, ...], int]:
    p, e, modulus, l, rows = args
    ctx = FieldCtx(p, e, modulus)
    return _aggregate(n_rho_table(build_defining_set(ctx, l), rows))


def cwe_bruteforce(ctx: FieldCtx, l: int, jobs: int = 1) -> CompleteWeightEnumerator:
    """Complete weight enumerator by visiting every (a, b) in F_q^2."""
    ds = build_defining_set(ctx, l)
    if jobs <= 1:
        terms = _aggregate(n_rho_table(ds))
    else:
        chunks = np.array_split(np.arange(ctx.q), jobs)
        terms: dict[tuple[int, ...], int] = {}
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            args = [(ctx.p, ctx.e, ctx.modulus, l, c) for c in chunks if len(c)]
            for part in pool.map(_cwe_chunk, args):
                for comp, k in part.items():
                    terms[comp] = terms.get(comp, 0) + k
    return CompleteWeightEnumerator(ctx.p, ds.n, dict(sorted(terms.items())))


def weight_distribution(cwe: CompleteWeightEnumerator, n: int) -> WeightDistribution:
    pairs: dict[int, int] = {}
    for comp, mult in cwe.terms.items():
        w = n - comp[0]
        pairs[w] = pairs.get(w, 0) + mult
    return WeightDistribution(dict(sorted(pairs.items())))


class CodeParams(NamedTuple):
    n: int
    k: int
    d: int

    def __str__(self):
        return f"[{self.n},{self.k},{self.d}]"


class InjectivityError(RuntimeError):
    """The map (a, b) -> c(a, b) has a nontrivial kernel."""


def code_params(wd: WeightDistribution, n: int, p: int, e: int) -> CodeParams:
    """[n, k, d] with k = 2e, after checking that only (0, 0) maps to the zero word."""
    if wd.total != p ** (2 * e):
        raise InjectivityError(f"{wd.total} codewords enumerated, expected {p ** (2 * e)}")
    if wd.pairs.get(0, 0) != 1:
        raise InjectivityError(
            f"{wd.pairs.get(0, 0)} pairs (a, b) give the zero word; dimension < 2e"
        )
    return CodeParams(n, 2 * e, min(wd.nonzero_weights))


@dataclass
class PlessReport:
    moments: tuple[int, int, int]
    expected: tuple[int, int, int]

    @property
    def passed(self) -> tuple[bool, bool, bool]:
        return tuple(a == b for a, b in zip(self.moments, self.expected))

    @property
    def ok(self) -> bool:
        return all(self.passed)


def pless_checks(wd: WeightDistribution, spec: CodeSpec) -> PlessReport:
    """First three power moments of the nonzero weights against the printed identities."""
    p, e, m, s = spec.p, spec.e, spec.m, spec.s
    t = e + m - 2 if spec.parity else e + m + s - 2
    nz = [(w, a) for w, a in wd.pairs.items() if w]
    moments = (
        sum(a for _, a in nz),
        sum(w * a for w, a in nz),
        sum(w * w * a for w, a in nz),
    )
    length = p ** (2 * e - 2) + p**t
    expected = (
        p ** (2 * e) - 1,
        p ** (2 * e - 1) * (p - 1) * length,
        p ** (2 * e - 2)
        * (p - 1)
        * length
        * (p ** (2 * e - 1) + p ** (t + 1) - p ** (2 * e - 2) - p**t + 1),
    )
    return PlessReport(moments, expected)


def griesmer_bound(k: int, d: int, p: int) -> int:
    """sum_{i<k} ceil(d / p^i)."""
    return sum(-(-d // p**i) for i in range(k))


class GriesmerResult(NamedTuple):
    bound: int
    classification: str


def griesmer_classify(n: int, k: int, d: int, p: int) -> GriesmerResult:
    """Classification certified by the Griesmer bound alone.

    'optimal' when no [n, k, d+1] code can exist, 'almost-optimal' when no
    [n, k, d+2] code can exist, 'neither' when the bound certifies nothing.
    """
    if k <= 0 or d <= 0:
        raise ValueError("k and d must be positive")
    bound = griesmer_bound(k, d, p)
    if griesmer_bound(k, d + 1, p) > n:
        label = "optimal"
    elif griesmer_bound(k, d + 2, p) > n:
        label = "almost-optimal"
    else:
        label = "neither"
    return GriesmerResult(bound, label)
