import itertools
import math
from fractions import Fraction

import numpy as np
import pytest

from cwecodes.codes import (
    InjectivityError,
    WeightDistribution,
    build_defining_set,
    code_params,
    codeword_weight,
    cwe_bruteforce,
    griesmer_bound,
    griesmer_classify,
    n_rho,
    n_rho_table,
    pless_checks,
    trace_profile,
    weight_distribution,
)
from cwecodes.field import CodeSpec

from conftest import field

CWE_321 = {
    (12, 0, 0): 1,
    (0, 12, 0): 1,
    (0, 0, 12): 1,
    (4, 4, 4): 54,
    (6, 3, 3): 4,
    (0, 6, 6): 4,
    (6, 6, 0): 4,
    (6, 0, 6): 4,
    (3, 3, 6): 4,
    (3, 6, 3): 4,
}


def direct_n_rho(ctx, ds, a, b):
    a, b = ctx.element(a), ctx.element(b)
    counts = [0] * ctx.p
    for x1 in ds.x1():
        for x2 in ds.x2():
            counts[ctx.trace(a * x1 + b * x2)] += 1
    return tuple(counts)


def test_defining_set_sizes():
    ctx = field(3, 2)
    ds = build_defining_set(ctx, 1)
    assert len(ds.d2) == 3
    assert len(ds.d1) == 4
    assert ds.n == 12
    for x in ds.x1():
        assert ctx.trace(x**4) == 1
    assert build_defining_set(field(3, 4), 2).n == 810


def test_trace_profile_examples():
    ctx = field(3, 2)
    ds = build_defining_set(ctx, 1)
    assert list(trace_profile(ctx, 0, ds.d1)) == [4, 0, 0]
    for a in range(9):
        assert trace_profile(ctx, a, ds.d2).sum() == 3
    assert list(trace_profile(ctx, ctx.one, ds.d2)) == [0, 3, 0]


def test_n_rho_convolution_matches_double_loop():
    ctx = field(3, 2)
    ds = build_defining_set(ctx, 1)
    table = n_rho_table(ds)
    for a, b in itertools.product(range(9), repeat=2):
        direct = direct_n_rho(ctx, ds, a, b)
        assert n_rho(ds, a, b) == direct
        assert tuple(table[a, b]) == direct


def test_n_rho_examples():
    ctx = field(3, 2)
    ds = build_defining_set(ctx, 1)
    assert n_rho(ds, 0, 0) == (12, 0, 0)
    assert n_rho(ds, 0, 1) == (0, 12, 0)
    for a in range(1, 9):
        for b in range(3, 9):
            assert n_rho(ds, a, b) == (4, 4, 4)
            assert codeword_weight(n_rho(ds, a, b)) == 8
    assert codeword_weight((12, 0, 0)) == 0
    assert codeword_weight(n_rho(ds, 0, 1)) == 12


@pytest.mark.parametrize("p,e,l", [(3, 2, 1), (5, 2, 1), (3, 4, 1), (3, 4, 2)])
def test_row_sums_equal_length(p, e, l):
    ds = build_defining_set(field(p, e), l)
    assert (n_rho_table(ds).sum(axis=-1) == ds.n).all()


def test_cwe_321():
    cwe = cwe_bruteforce(field(3, 2), 1)
    assert cwe.terms == CWE_321
    assert cwe.total == 81
    wd = weight_distribution(cwe, 12)
    assert wd.pairs == {0: 1, 6: 12, 8: 54, 9: 8, 12: 6}


def test_cwe_341_term():
    cwe = cwe_bruteforce(field(3, 4), 1)
    assert cwe.terms[(324, 324, 324)] == 6534
    assert all(sum(c) == 972 for c in cwe.terms)


def test_weight_distribution_342():
    wd = cwe_bruteforce(field(3, 4), 2).weight_distribution()
    assert wd.pairs == {0: 1, 486: 110, 540: 6318, 567: 100, 648: 30, 810: 2}


def test_parallel_enumeration_is_identical():
    ctx = field(3, 4)
    assert cwe_bruteforce(ctx, 2, jobs=3) == cwe_bruteforce(ctx, 2)


@pytest.mark.parametrize(
    "p,e,l,expected",
    [(3, 2, 1, (12, 4, 6)), (3, 4, 1, (972, 8, 486)), (3, 4, 2, (810, 8, 486))],
)
def test_code_params(p, e, l, expected):
    cwe = cwe_bruteforce(field(p, e), l)
    assert tuple(code_params(cwe.weight_distribution(), cwe.n, p, e)) == expected


def test_code_params_detects_kernel():
    wd = WeightDistribution({0: 3, 6: 78})
    with pytest.raises(InjectivityError):
        code_params(wd, 12, 3, 2)


def test_pless_321():
    wd = cwe_bruteforce(field(3, 2), 1).weight_distribution()
    rep = pless_checks(wd, CodeSpec(3, 2, 1))
    assert rep.moments[0] == 80
    assert rep.moments[1] == 12 * 6 + 54 * 8 + 8 * 9 + 6 * 12 == 648 == 3**3 * 2 * 12
    # second moment: both sides evaluated by hand
    assert rep.moments[2] == 12 * 36 + 54 * 64 + 8 * 81 + 6 * 144 == 5400
    assert rep.expected[2] == 9 * 2 * 12 * (27 + 9 - 9 - 3 + 1) == 5400
    assert rep.ok


def test_pless_detects_corruption():
    rep = pless_checks(WeightDistribution({0: 1, 6: 13, 8: 53, 9: 8, 12: 6}), CodeSpec(3, 2, 1))
    assert rep.passed[0] and not rep.passed[1]


def _griesmer_oracle(k, d, p):
    return sum(math.ceil(Fraction(d, p**i)) for i in range(k))


def test_griesmer_examples():
    res = griesmer_classify(12, 4, 6, 3)
    assert res.bound == 10 == _griesmer_oracle(4, 6, 3)
    assert res.classification == "almost-optimal"
    assert _griesmer_oracle(4, 8, 3) == 13 > 12
    for n in (1, 5, 9):
        assert griesmer_classify(n, 1, n, 3).classification == "optimal"
    assert griesmer_bound(8, 486, 3) == _griesmer_oracle(8, 486, 3) == 730
    with pytest.raises(ValueError):
        griesmer_classify(12, 0, 6, 3)


@pytest.mark.parametrize("k,d,p", [(k, d, p) for p in (3, 5) for k in (1, 2, 4, 8) for d in (1, 2, 7, 30, 486)])
def test_griesmer_bound_oracle(k, d, p):
    assert griesmer_bound(k, d, p) == _griesmer_oracle(k, d, p)


@pytest.mark.parametrize("p,e,l", [(3, 2, 1), (3, 2, 3), (5, 2, 1), (7, 2, 1), (3, 4, 1), (3, 4, 2)])
def test_weight_count(p, e, l):
    spec = CodeSpec(p, e, l)
    wd = cwe_bruteforce(field(p, e), l).weight_distribution()
    count = len(wd.nonzero_weights)
    assert count <= 5
    four = (spec.parity and spec.m == spec.s == 1) or (not spec.parity and spec.m == spec.s + 1)
    assert (count == 4) == bool(four)
