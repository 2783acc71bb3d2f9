"""Additive and quadratic characters, Gauss sums and Weil sums.

Every sum is available as an exact brute-force value in Z[zeta_p].  The
closed forms are separate functions so that a caller can compare the two
routes and report a disagreement instead of raising.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd
from typing import NamedTuple

import numpy as np

from .cyclotomic import CycInt, zeta_pow
from .field import FieldCtx, FieldElement, ParameterError
from .linalg import LinearSolver


class SumPair(NamedTuple):
    brute: object
    closed: object


# --- characters -----------------------------------------------------------


def eta(v: int, p: int) -> int:
    """Quadratic character of F_p with eta(0) = 0 (Euler's criterion)."""
    v %= p
    if v == 0:
        return 0
    return 1 if pow(v, (p - 1) // 2, p) == 1 else -1


def eta_prime(ctx: FieldCtx, x: FieldElement) -> int:
    """Quadratic character of F_q with eta'(0) = 0."""
    if not x:
        return 0
    return 1 if ctx.pow(x, (ctx.q - 1) // 2) == ctx.one else -1


def quadratic_char(v, domain) -> int:
    """eta(v) for domain an odd prime p, or eta'(v) for domain a FieldCtx."""
    if isinstance(domain, FieldCtx):
        return eta_prime(domain, domain.element(v))
    return eta(int(v), int(domain))


@dataclass(frozen=True)
class QuadChar:
    """eta' tabulated over element indices."""

    table: np.ndarray = field(repr=False)

    def __call__(self, idx) -> int:
        return int(self.table[int(idx)])


@lru_cache(maxsize=32)
def quad_char_table(ctx: FieldCtx) -> QuadChar:
    table = np.zeros(ctx.q, dtype=np.int64)
    nz = np.arange(1, ctx.q)
    table[1:] = np.where(ctx.log_table[nz] % 2 == 0, 1, -1)
    table.flags.writeable = False
    return QuadChar(table)


def additive_char(ctx: FieldCtx, u: FieldElement, v: FieldElement) -> CycInt:
    """chi_u(v) = zeta_p^Tr(uv)."""
    return zeta_pow(ctx.p, ctx.trace(ctx.mul(u, v)))


# --- Gauss sums -----------------------------------------------------------


def gauss_sum(domain) -> CycInt:
    """Brute-force quadratic Gauss sum over F_p (domain=p) or F_q (domain=FieldCtx)."""
    if isinstance(domain, FieldCtx):
        ctx = domain
        table = quad_char_table(ctx).table
        counts = np.zeros(ctx.p, dtype=np.int64)
        np.add.at(counts, ctx.trace_table, table)
        return CycInt.from_counts(ctx.p, counts)
    p = int(domain)
    counts = [eta(v, p) for v in range(p)]
    return CycInt.from_counts(p, counts)


def gauss_sum_closed(p: int, e: int) -> int | None:
    """(-1)^(e-1) (p*)^(e/2) with p* = eta(-1) p; None when e is odd (irrational)."""
    if e % 2:
        return None
    pstar = eta(-1, p) * p
    return (-1) ** (e - 1) * pstar ** (e // 2)


def gauss_sum_pair(domain) -> SumPair:
    if isinstance(domain, FieldCtx):
        return SumPair(gauss_sum(domain), gauss_sum_closed(domain.p, domain.e))
    return SumPair(gauss_sum(domain), None)


# --- quadratic polynomials ------------------------------------------------


def _quad_values(ctx: FieldCtx, a2, a1, a0) -> np.ndarray:
    x = np.arange(ctx.q)
    i2, i1, i0 = (ctx.index(ctx.element(a)) for a in (a2, a1, a0))
    sq = ctx.mul_idx(x, x)
    return ctx.add_idx(ctx.add_idx(ctx.mul_idx(i2, sq), ctx.mul_idx(i1, x)), i0)


def quad_poly_char_sum(ctx: FieldCtx, a2, a1, a0) -> SumPair:
    """sum_x zeta^Tr(a2 x^2 + a1 x + a0), brute force and closed form."""
    a2, a1, a0 = (ctx.element(a) for a in (a2, a1, a0))
    if not a2:
        raise ValueError("a2 must be nonzero")
    if ctx.e % 2:
        raise ParameterError("closed form needs even e (rational G')")
    counts = np.bincount(ctx.trace_idx(_quad_values(ctx, a2, a1, a0)), minlength=ctx.p)
    brute = CycInt.from_counts(ctx.p, counts)
    shift = a0 - a1 * a1 * ctx.inv(a2 * 4)
    closed = zeta_pow(ctx.p, ctx.trace(shift)).scale(
        eta_prime(ctx, a2) * gauss_sum_closed(ctx.p, ctx.e)
    )
    return SumPair(brute, closed)


def quad_poly_eta_sum(ctx: FieldCtx, a2, a1, a0) -> SumPair:
    """sum_x eta'(a2 x^2 + a1 x + a0), brute force and closed form."""
    a2, a1, a0 = (ctx.element(a) for a in (a2, a1, a0))
    if not a2:
        raise ValueError("a2 must be nonzero")
    table = quad_char_table(ctx).table
    brute = int(table[_quad_values(ctx, a2, a1, a0)].sum())
    disc = a1 * a1 - a0 * a2 * 4
    e2 = eta_prime(ctx, a2)
    closed = (ctx.q - 1) * e2 if not disc else -e2
    return SumPair(brute, closed)


# --- Weil sums ------------------------------------------------------------


def _weil_exponent(ctx: FieldCtx, l: int) -> int:
    return pow(ctx.p, l, ctx.q - 1) + 1


def weil_sum(ctx: FieldCtx, l: int, alpha, beta) -> CycInt:
    """S(alpha, beta) = sum_x zeta^Tr(alpha x^(p^l+1) + beta x), by enumeration."""
    ia = ctx.index(ctx.element(alpha))
    ib = ctx.index(ctx.element(beta))
    x = np.arange(ctx.q)
    pw = ctx.pow_idx(x, _weil_exponent(ctx, l))
    vals = (ctx.trace_idx(ctx.mul_idx(ia, pw)) + ctx.trace_idx(ctx.mul_idx(ib, x))) % ctx.p
    return CycInt.from_counts(ctx.p, np.bincount(vals, minlength=ctx.p))


def weil_sum_counts(ctx: FieldCtx, l: int) -> np.ndarray:
    """C[alpha, beta, k] = #{x : Tr(alpha x^(p^l+1) + beta x) = k} for all index pairs."""
    q, p = ctx.q, ctx.p
    T = ctx.trace_product_table
    pw = ctx.pow_idx(np.arange(q), _weil_exponent(ctx, l))
    out = np.zeros((q, q, p), dtype=np.int64)
    for a in range(q):
        vals = (T[a, pw][None, :] + T) % p
        for k in range(p):
            out[a, :, k] = (vals == k).sum(axis=1)
    return out


@dataclass(frozen=True)
class ArtinMap:
    """Matrix of X -> alpha^(p^l) X^(p^(2l)) + alpha X in the polynomial basis.

    Column i is the coordinate vector of the image of X^i.
    """

    alpha: FieldElement
    l: int
    matrix: np.ndarray = field(repr=False)
    solver: LinearSolver = field(repr=False, compare=False)

    def apply(self, x: FieldElement) -> FieldElement:
        ctx = self.alpha.field
        v = self.matrix @ np.array(x.coeffs, dtype=np.int64) % ctx.p
        return ctx.element(tuple(int(c) for c in v))

    @property
    def kernel_size(self) -> int:
        ctx = self.alpha.field
        return ctx.p ** (ctx.e - self.solver.rank)


def artin_map_value(ctx: FieldCtx, l: int, alpha_idx: int, x):
    """Index-level evaluation of alpha^(p^l) x^(p^(2l)) + alpha x."""
    a_pl = ctx.pow_idx(alpha_idx, pow(ctx.p, l))
    x = np.asarray(x, dtype=np.int64)
    return ctx.add_idx(
        ctx.mul_idx(a_pl, ctx.pow_idx(x, pow(ctx.p, 2 * l))), ctx.mul_idx(alpha_idx, x)
    )


@lru_cache(maxsize=8192)
def _artin_cached(ctx: FieldCtx, l_mod: int, alpha_idx: int) -> ArtinMap:
    basis = np.array([ctx.p**i for i in range(ctx.e)], dtype=np.int64)
    images = artin_map_value(ctx, l_mod, alpha_idx, basis)
    matrix = ctx.digits[images].T.copy()
    matrix.flags.writeable = False
    return ArtinMap(ctx.element(alpha_idx), l_mod, matrix, LinearSolver(matrix, ctx.p))


def artin_map(ctx: FieldCtx, l: int, alpha) -> ArtinMap:
    alpha = ctx.element(alpha)
    if not alpha:
        raise ValueError("alpha must be nonzero")
    # x^(p^l) only depends on l mod e
    return _artin_cached(ctx, l % ctx.e, ctx.index(alpha))


def _artin_rhs(ctx: FieldCtx, l: int, beta) -> np.ndarray:
    ib = ctx.index(ctx.element(beta))
    return ctx.digits[ctx.neg_idx(ctx.pow_idx(ib, pow(ctx.p, l)))]


def solve_artin(ctx: FieldCtx, l: int, alpha, beta) -> list[FieldElement]:
    """All X in F_q with alpha^(p^l) X^(p^(2l)) + alpha X = -beta^(p^l), by index order."""
    amap = artin_map(ctx, l, alpha)
    sols = amap.solver.all_solutions(_artin_rhs(ctx, l, beta))
    idx = sorted(int(i) for i in sols @ ctx._powers)
    return [ctx.element(i) for i in idx]


def _check_even_ratio(ctx: FieldCtx, l: int) -> tuple[int, int]:
    s = gcd(l, ctx.e)
    if ctx.e % 2 or (ctx.e // s) % 2:
        raise ParameterError(f"e/s must be even (e={ctx.e}, s={s})")
    return ctx.e // 2, s


def weil_sum_case(ctx: FieldCtx, l: int, alpha) -> bool:
    """True iff alpha^((q-1)/(p^s+1)) = (-1)^(m/s), the non-permutation case."""
    m, s = _check_even_ratio(ctx, l)
    alpha = ctx.element(alpha)
    lhs = ctx.pow_idx(ctx.index(alpha), (ctx.q - 1) // (ctx.p**s + 1))
    return int(lhs) == ctx.index(ctx.from_int((-1) ** (m // s)))


def weil_sum_closed(ctx: FieldCtx, l: int, alpha, beta) -> CycInt:
    """Closed-form S(alpha, beta) for alpha != 0 via a solution of the linearized equation."""
    alpha = ctx.element(alpha)
    if not alpha:
        raise ValueError("alpha must be nonzero")
    m, s = _check_even_ratio(ctx, l)
    p = ctx.p
    amap = artin_map(ctx, l, alpha)
    x0 = amap.solver.particular(_artin_rhs(ctx, l, beta))
    if x0 is None:
        return CycInt.zero(p)
    if weil_sum_case(ctx, l, alpha):
        scale = (-1) ** (m // s + 1) * p ** (m + s)
    else:
        scale = (-1) ** (m // s) * p**m
    ix0 = int(x0 @ ctx._powers)
    val = ctx.mul_idx(ctx.index(alpha), ctx.pow_idx(ix0, _weil_exponent(ctx, l)))
    return zeta_pow(p, -int(ctx.trace_idx(val))).scale(scale)


def solvable_beta_count(ctx: FieldCtx, l: int) -> int:
    """#{beta : X^(p^(2l)) + X = -beta^(p^l) is solvable}, by enumerating the image."""
    m, s = _check_even_ratio(ctx, l)
    if (m // s) % 2:
        raise ParameterError("m/s is odd: the map is a bijection, count is trivially q")
    x = np.arange(ctx.q)
    image = np.zeros(ctx.q, dtype=bool)
    image[artin_map_value(ctx, l, 1, x)] = True
    rhs = ctx.neg_idx(ctx.pow_idx(x, pow(ctx.p, l)))
    return int(image[rhs].sum())
