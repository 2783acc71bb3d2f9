"""Closed-form predictions for C_D and their comparison against enumeration.

Two regimes, keyed on m/s mod 2 (``CodeSpec.parity``): odd (length
p^(2e-2) + p^(e+m-2)) and even (length p^(2e-2) + p^(e+m+s-2), needs
m >= s + 1).  Per-codeword predictions depend on a only through whether
X^(p^(2l)) + X = -a^(p^l) is solvable and, if so, through Tr(gamma^(p^l+1))
for a solution gamma.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .charsums import eta, solve_artin
from .codes import (
    CodeParams,
    CompleteWeightEnumerator,
    GriesmerResult,
    PlessReport,
    WeightDistribution,
    build_defining_set,
    code_params,
    cwe_bruteforce,
    griesmer_classify,
    n_rho_table,
    pless_checks,
    weight_distribution,
)
from .field import CodeSpec, FieldCtx, ParameterError, make_field


@dataclass(frozen=True)
class _Consts:
    n: int
    base: int  # p^(2e-3)
    big: int  # p^(e+m-2) or p^(e+m+s-2)
    small: int  # p^(e+m-3) or p^(e+m+s-3)
    k_coef: int  # multiplicity of each (b, Tr(gamma^(p^l+1)) != 0) class
    l_coef: int  # multiplicity of the (b, Tr(gamma^(p^l+1)) = 0) class, a != 0
    m_coef: Fraction  # multiplicity of the uniform composition


def _check_hypotheses(spec: CodeSpec):
    if spec.parity == 0 and spec.m < spec.s + 1:
        raise ParameterError(f"m >= s+1 required when m/s is even (m={spec.m}, s={spec.s})")


def _consts(spec: CodeSpec) -> _Consts:
    _check_hypotheses(spec)
    p, e, m, s = spec.p, spec.e, spec.m, spec.s
    P = Fraction(p)
    if spec.parity:
        t = e + m - 2
        k_coef = P ** (e - 1) + P ** (m - 1)
        l_coef = P ** (e - 1) - P**m + P ** (m - 1) - 1
        m_coef = P**e * (P**e - P)
    else:
        t = e + m + s - 2
        k_coef = P ** (e - 2 * s - 1) + P ** (m - s - 1)
        l_coef = P ** (e - 2 * s - 1) - P ** (m - s) + P ** (m - s - 1) - 1
        m_coef = P**e * (P**e - P ** (1 - 2 * s))
    for v in (k_coef, l_coef):
        assert v.denominator == 1, v
    return _Consts(
        n=p ** (2 * e - 2) + p**t,
        base=p ** (2 * e - 3),
        big=p**t,
        small=p ** (t - 1),
        k_coef=int(k_coef),
        l_coef=int(l_coef),
        m_coef=m_coef,
    )


def predicted_length(spec: CodeSpec) -> int:
    return _consts(spec).n


def _half(x: Fraction) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"table multiplicity {x} is not an integer")
    return int(x)


def predicted_table(spec: CodeSpec) -> list[tuple[int, int]]:
    """The five (weight, multiplicity) rows of the closed-form weight table, unmerged."""
    _check_hypotheses(spec)
    P = Fraction(spec.p)
    e, m, s = spec.e, spec.m, spec.s
    c = _consts(spec)
    if spec.parity:
        u, v = m, e  # exponents that carry s in the even table
    else:
        u, v = m - s, e - 2 * s
    rows = [
        (c.n, P - 1),
        ((spec.p - 1) * (c.base + c.small), c.m_coef),
        (c.base * (spec.p - 1), (2 * P ** (u - 1) - 3 * P**u + P ** (u + 1)
                                 + 2 * P ** (v - 1) - P**v + P ** (v + 1) - 2) / 2),
        (c.base * (spec.p - 1) + 2 * c.big, (2 * P ** (u - 1) - 3 * P**u + P ** (u + 1)
                                             + 2 * P ** (v - 1) - 3 * P**v + P ** (v + 1)) / 2),
        (c.base * (spec.p - 1) + c.big, 1 - P - 2 * P ** (u - 1) + 3 * P**u - P ** (u + 1)
         - 2 * P ** (v - 1) + 2 * P**v),
    ]
    return [(w, _half(a)) for w, a in rows]


def predicted_weight_distribution(spec: CodeSpec) -> WeightDistribution:
    """The closed-form weight table with coinciding weights merged and zero rows dropped.

    Negative multiplicities are kept so that a comparison surfaces them.
    """
    pairs = {0: 1}
    for w, a in predicted_table(spec):
        pairs[w] = pairs.get(w, 0) + a
    return WeightDistribution({w: a for w, a in sorted(pairs.items()) if a != 0})


# --- per-codeword predictions ---------------------------------------------


@lru_cache(maxsize=65536)
def gamma_trace(ctx: FieldCtx, l: int, a_idx: int) -> int | None:
    """Tr(gamma^(p^l+1)) for the first solution gamma of X^(p^(2l)) + X = -a^(p^l).

    None when the equation has no solution.
    """
    sols = solve_artin(ctx, l, ctx.one, ctx.element(a_idx))
    if not sols:
        return None
    g = sols[0]
    return ctx.trace(ctx.pow(g, ctx.p ** (l % ctx.e) + 1))


def _prime_value(ctx: FieldCtx, x) -> int | None:
    """x as an integer in 0..p-1 if x lies in F_p, else None."""
    x = ctx.element(x)
    if any(x.coeffs[1:]):
        return None
    return x.coeffs[0]


def predicted_n_rho(spec: CodeSpec, ctx: FieldCtx, a, b) -> tuple[int, ...]:
    """(N_0, ..., N_{p-1}) of c(a, b) from the case analysis, N_0 = n - sum of the rest."""
    c = _consts(spec)
    p = spec.p
    a = ctx.element(a)
    bv = _prime_value(ctx, b)  # None when b lies outside F_p
    inv4 = pow(4, -1, p)
    counts = [0] * p
    if not a:
        if bv == 0:
            pass
        elif bv is not None:
            counts[bv] = c.n
        else:
            counts[1:] = [c.base + c.small] * (p - 1)
    elif bv is None:
        counts[1:] = [c.base + c.small] * (p - 1)
    else:
        t = gamma_trace(ctx, spec.l, ctx.index(a))
        if t is None:
            if spec.parity:
                raise AssertionError("linearized equation unsolvable in the permutation case")
            counts[1:] = [c.base + c.small] * (p - 1)
        elif bv == 0:
            for rho in range(1, p):
                counts[rho] = c.base if t == 0 else c.base - c.big * eta(rho * rho - 4 * t, p)
        elif t == 0:
            for rho in range(1, p):
                counts[rho] = c.base + c.big if rho == bv else c.base
        elif t == bv * bv * inv4 % p:
            for rho in range(1, p):
                counts[rho] = c.base - c.big * eta(rho * rho - 2 * bv * rho, p)
        else:
            for rho in range(1, p):
                counts[rho] = c.base - c.big * eta((rho - bv) ** 2 - 4 * t, p)
    counts[0] = c.n - sum(counts[1:])
    return tuple(counts)


def predicted_n_rho_table(spec: CodeSpec, ctx: FieldCtx) -> np.ndarray:
    """predicted_n_rho for every (a, b).

    The case analysis reads b only through b = 0, b in F_p^* or b outside F_p,
    so each row is built from b = 0..p-1 and one representative outside F_p.
    """
    q, p = ctx.q, ctx.p
    out = np.zeros((q, q, p), dtype=np.int64)
    for a in range(q):
        for b in range(p):
            out[a, b] = predicted_n_rho(spec, ctx, a, b)
        out[a, p:] = predicted_n_rho(spec, ctx, a, p)
    return out


@dataclass(frozen=True)
class PhiBreakdown:
    phi1: int
    phi2: int
    phi3: int
    phi4: int
    base: Fraction  # n/p

    @property
    def total(self) -> Fraction:
        return self.base + self.phi1 + self.phi2 + self.phi3 + self.phi4


def phi_breakdown(spec: CodeSpec, ctx: FieldCtx, a, b, rho: int) -> PhiBreakdown:
    """N_rho(a, b) = n/p + phi1 + phi2 + phi3 + phi4 for rho in F_p^*."""
    p = spec.p
    rho %= p
    if rho == 0:
        raise ValueError("rho must be nonzero")
    c = _consts(spec)
    e = spec.e
    a = ctx.element(a)
    bv = _prime_value(ctx, b)
    b_nonzero_prime = bv is not None and bv != 0
    b_zero = bv == 0
    t = gamma_trace(ctx, spec.l, ctx.index(a)) if a else None

    phi1 = -(p ** (2 * e - 3)) if (not a and b_zero) else 0

    phi2 = 0
    if not a and b_nonzero_prime:
        phi2 = p ** (2 * e - 3) * (p - 1) if rho == bv else -(p ** (2 * e - 3))

    # small = p^(e+m-3) (odd) or p^(e+m+s-3) (even); big = p * small
    phi3 = 0
    if b_zero:
        if not a:
            phi3 = -c.small
        elif t is None:
            phi3 = 0
        elif t == 0:
            phi3 = -c.small
        else:
            phi3 = -c.small - c.big * eta(rho * rho - 4 * t, p)

    phi4 = 0
    if b_nonzero_prime:
        if not a or t == 0:
            phi4 = c.small * (p - 1) if rho == bv else -c.small
        elif t is None:
            phi4 = 0
        else:
            phi4 = -c.small - c.big * eta((rho - bv) ** 2 - 4 * t, p)

    return PhiBreakdown(phi1, phi2, phi3, phi4, Fraction(c.n, p))


# --- the complete weight enumerator polynomial ------------------------------


def is_generator(g: int, p: int) -> bool:
    g %= p
    return g != 0 and len({pow(g, k, p) for k in range(1, p)}) == p - 1


def predicted_cwe(spec: CodeSpec, g: int) -> CompleteWeightEnumerator:
    """Every summand of the closed-form complete weight enumerator, aggregated.

    Index ranges are taken literally, including the exclusion
    alpha != beta, alpha != (p-1)/2 + beta in the double sum.
    """
    p = spec.p
    if not is_generator(g, p):
        raise ParameterError(f"g={g} does not generate F_{p}^*")
    c = _consts(spec)
    A, B, n = c.base, c.big, c.n
    half = (p - 1) // 2
    gp = [pow(g, k, p) for k in range(2 * p)]
    terms: dict[tuple[int, ...], Fraction] = {}

    def add(comp, mult):
        key = tuple(comp)
        terms[key] = terms.get(key, 0) + mult

    def comp_with(zero_exp, rest):
        return [zero_exp] + [rest(rho) for rho in range(1, p)]

    add([n] + [0] * (p - 1), 1)
    for al in range(1, p):
        comp = [0] * p
        comp[gp[al]] = n
        add(comp, 1)
    for al in range(1, p):
        add(comp_with(A, lambda r: A - B * eta(r * r - 2 * gp[al] * r, p)), c.k_coef)
    add([A + c.small] * p, c.m_coef)
    add(comp_with(A + B, lambda r: A), c.l_coef)
    for be in range(1, half + 1):
        add(comp_with(A + B * eta(-1, p),
                      lambda r: A - B * eta(r * r - 4 * gp[2 * be + 1], p)), c.k_coef)
    for be in range(1, half + 1):
        plus, minus = 2 * gp[be] % p, p - 2 * gp[be] % p
        comp = comp_with(A - B * eta(-1, p), lambda r: A - B * eta(r * r - 4 * gp[2 * be], p))
        comp[plus] = A
        comp[minus] = A
        add(comp, c.k_coef)
    for al in range(1, p):
        for be in range(1, half + 1):
            add(comp_with(A + B, lambda r: A - B * eta(r * r - 2 * gp[al] * r + gp[2 * be + 1], p)),
                c.k_coef)
    for be in range(1, half + 1):
        for al in range(1, p):
            if al == be or al == half + be:
                continue
            add(comp_with(A - B, lambda r: A - B * eta(r * r - 2 * gp[al] * r + gp[2 * be], p)),
                c.k_coef)
    for al in range(1, p):
        comp = [A] * p
        comp[gp[al]] = A + B
        add(comp, c.l_coef)

    out = {}
    for comp, mult in terms.items():
        if Fraction(mult).denominator != 1:
            raise ArithmeticError(f"non-integral multiplicity {mult} at {comp}")
        if mult != 0:
            out[comp] = int(mult)
    return CompleteWeightEnumerator(p, n, dict(sorted(out.items())))


# --- verification -----------------------------------------------------------


@dataclass
class VerificationReport:
    spec: CodeSpec
    length_match: bool
    wd_match: bool
    cwe_match: bool
    n_rho_match: bool
    per_codeword_mismatches: list[tuple] = field(default_factory=list)
    params: CodeParams | None = None
    brute_wd: WeightDistribution | None = None
    brute_cwe: CompleteWeightEnumerator | None = None
    predicted_wd: WeightDistribution | None = None
    predicted_cwe: CompleteWeightEnumerator | None = None
    pless: PlessReport | None = None
    griesmer: GriesmerResult | None = None
    findings: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.cwe_match and self.n_rho_match


def verify(spec: CodeSpec, modulus=None, g: int | None = None, jobs: int = 1) -> VerificationReport:
    """Enumerate C_D and compare every closed-form prediction exactly."""
    ctx = make_field(spec, modulus)
    p = spec.p
    if g is None:
        g = next(x for x in range(2, p + 1) if is_generator(x, p))
    ds = build_defining_set(ctx, spec.l)
    brute_cwe = cwe_bruteforce(ctx, spec.l, jobs=jobs)
    brute_wd = weight_distribution(brute_cwe, ds.n)
    pred_wd = predicted_weight_distribution(spec)
    pred_cwe = predicted_cwe(spec, g)

    actual = n_rho_table(ds)
    predicted = predicted_n_rho_table(spec, ctx)
    bad = np.argwhere((actual != predicted).any(axis=-1))
    mismatches = [
        (int(a), int(b), tuple(int(v) for v in predicted[a, b]), tuple(int(v) for v in actual[a, b]))
        for a, b in bad
    ]

    findings = [f"negative predicted multiplicity {a} at weight {w}"
                for w, a in pred_wd.pairs.items() if a < 0]
    length_match = predicted_length(spec) == ds.n
    wd_match = length_match and pred_wd == brute_wd
    cwe_match = wd_match and pred_cwe == brute_cwe
    params = code_params(brute_wd, ds.n, p, spec.e)
    return VerificationReport(
        spec=spec,
        length_match=length_match,
        wd_match=wd_match,
        cwe_match=cwe_match,
        n_rho_match=not mismatches,
        per_codeword_mismatches=mismatches,
        params=params,
        brute_wd=brute_wd,
        brute_cwe=brute_cwe,
        predicted_wd=pred_wd,
        predicted_cwe=pred_cwe,
        pless=pless_checks(brute_wd, spec),
        griesmer=griesmer_classify(params.n, params.k, params.d, p),
        findings=findings,
    )
