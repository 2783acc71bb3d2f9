"""Arithmetic in F_p and F_{p^e} = F_p[X]/(f(X)).

Elements are stored as length-e coefficient tuples, coefficient of X^i at
position i.  Every element also has an integer index

    idx = c_0 + c_1 p + ... + c_{e-1} p^{e-1}

which fixes the enumeration order (0 first, the prime subfield is 0..p-1).
The polynomial routines are the reference arithmetic; log/antilog and trace
tables over indices are built from them once per field and used by the
brute-force enumerations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from math import gcd

import numpy as np


class ParameterError(ValueError):
    """A parameter tuple violates a standing hypothesis."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class CodeSpec:
    """Parameters (p, e, l) of one code instance, with m = e/2 and s = gcd(l, e)."""

    p: int
    e: int
    l: int

    def __post_init__(self):
        if not is_prime(self.p) or self.p < 3:
            raise ParameterError(f"p must be an odd prime (got p={self.p})")
        if self.e < 2 or self.e % 2:
            raise ParameterError(f"e must be even and positive (got e={self.e})")
        if self.l < 1:
            raise ParameterError(f"l must be a positive integer (got l={self.l})")
        if (self.e // self.s) % 2:
            raise ParameterError(
                f"e/s must be even (got e={self.e}, s=gcd(l,e)={self.s})"
            )

    @property
    def m(self) -> int:
        return self.e // 2

    @property
    def s(self) -> int:
        return gcd(self.l, self.e)

    @property
    def q(self) -> int:
        return self.p**self.e

    @property
    def parity(self) -> int:
        """m/s mod 2: 1 selects the m/s odd closed forms, 0 the m/s even ones."""
        return (self.m // self.s) % 2


# --- polynomials over F_p, coefficient lists low-to-high -----------------


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    a = _trim([c % p for c in a])
    b = _trim([c % p for c in b])
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(b[-1], -1, p)
    quot = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        shift = len(a) - len(b)
        c = a[-1] * inv_lead % p
        quot[shift] = c
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % p
        _trim(a)
    return _trim(quot), a


def poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    b = _trim([c % p for c in b])
    while b:
        a, b = b, poly_divmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def poly_powmod(base: list[int], k: int, mod: list[int], p: int) -> list[int]:
    result = [1]
    base = poly_divmod(base, mod, p)[1]
    while k:
        if k & 1:
            result = poly_divmod(poly_mul(result, base, p), mod, p)[1]
        base = poly_divmod(poly_mul(base, base, p), mod, p)[1]
        k >>= 1
    return result


def is_irreducible(f: list[int] | tuple[int, ...], p: int) -> bool:
    """Irreducibility of a monic f over F_p.

    f of degree e is irreducible iff gcd(f, X^{p^i} - X) = 1 for 1 <= i <= e/2.
    """
    f = _trim([c % p for c in f])
    e = len(f) - 1
    if e < 1:
        return False
    if e == 1:
        return True
    xpow = [0, 1]
    for _ in range(e // 2):
        xpow = poly_powmod(xpow, p, f, p)
        diff = list(xpow) + [0] * max(0, 2 - len(xpow))
        diff[1] = (diff[1] - 1) % p
        if poly_gcd(f, diff, p) != [1]:
            return False
    return True


def smallest_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree e.

    Candidates are compared on (c_0, c_1, ..., c_{e-1}) with c_0 first.
    """
    for low in itertools.product(range(p), repeat=e):
        f = list(low) + [1]
        if is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # unreachable


# --- elements and field context ------------------------------------------


@dataclass(frozen=True, eq=False)
class FieldElement:
    coeffs: tuple[int, ...]
    field: "FieldCtx" = field(repr=False)

    @property
    def index(self) -> int:
        return self.field.index(self)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field is other.field and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self == self.field.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def _coerce(self, other):
        if isinstance(other, int):
            return self.field.from_int(other)
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise ValueError("elements belong to different fields")
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.field.add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.field.sub(self, other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.field.sub(other, self)

    def __neg__(self):
        return self.field.neg(self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.field.mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.field.mul(self, self.field.inv(other))

    def __pow__(self, k: int):
        return self.field.pow(self, k)

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                mono = "" if i == 0 else ("X" if i == 1 else f"X^{i}")
                coef = str(c) if (c != 1 or i == 0) else ""
                terms.append(coef + mono)
        return " + ".join(reversed(terms)) or "0"


class FieldCtx:
    """The field F_{p^e} in a fixed polynomial basis.

    Immutable after construction.  ``modulus`` is the monic defining
    polynomial as a coefficient tuple of length e+1 (low-to-high).
    """

    def __init__(self, p: int, e: int, modulus=None):
        if not is_prime(p):
            raise ParameterError(f"p must be prime (got p={p})")
        if e < 1:
            raise ParameterError(f"e must be positive (got e={e})")
        if modulus is None:
            modulus = smallest_irreducible(p, e)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != e + 1 or modulus[-1] != 1:
                raise ParameterError(
                    f"modulus must be monic of degree {e}: {modulus}"
                )
            if not is_irreducible(modulus, p):
                raise ParameterError(f"modulus {modulus} is not irreducible over F_{p}")
        self.p = p
        self.e = e
        self.q = p**e
        self.modulus = modulus
        self._powers = np.array([p**i for i in range(e)], dtype=np.int64)
        self.primitive_element = self._find_primitive()
        self._build_tables()

    def __repr__(self):
        return f"FieldCtx(p={self.p}, e={self.e}, modulus={self.modulus})"

    # conversions

    def element(self, value) -> FieldElement:
        """Element from an index, a coefficient sequence, or an existing element."""
        if isinstance(value, FieldElement):
            return value
        if isinstance(value, (int, np.integer)):
            value = int(value)
            if not 0 <= value < self.q:
                raise IndexError(f"element index {value} outside 0..{self.q - 1}")
            digits = []
            for _ in range(self.e):
                value, r = divmod(value, self.p)
                digits.append(r)
            return FieldElement(tuple(digits), self)
        coeffs = tuple(int(c) % self.p for c in value)
        if len(coeffs) > self.e:
            coeffs = self._reduce(list(coeffs))
        coeffs = coeffs + (0,) * (self.e - len(coeffs))
        return FieldElement(coeffs, self)

    def from_int(self, c: int) -> FieldElement:
        """The prime-subfield element c mod p."""
        return FieldElement((c % self.p,) + (0,) * (self.e - 1), self)

    def index(self, x: FieldElement) -> int:
        return sum(c * self.p**i for i, c in enumerate(x.coeffs))

    @property
    def zero(self) -> FieldElement:
        return self.from_int(0)

    @property
    def one(self) -> FieldElement:
        return self.from_int(1)

    def enumerate(self) -> list[FieldElement]:
        return [self.element(i) for i in range(self.q)]

    # polynomial-basis arithmetic (reference path)

    def _reduce(self, coeffs: list[int]) -> tuple[int, ...]:
        r = poly_divmod(coeffs, list(self.modulus), self.p)[1]
        return tuple(r) + (0,) * (self.e - len(r))

    def add(self, x: FieldElement, y: FieldElement) -> FieldElement:
        return FieldElement(
            tuple((a + b) % self.p for a, b in zip(x.coeffs, y.coeffs)), self
        )

    def sub(self, x: FieldElement, y: FieldElement) -> FieldElement:
        return FieldElement(
            tuple((a - b) % self.p for a, b in zip(x.coeffs, y.coeffs)), self
        )

    def neg(self, x: FieldElement) -> FieldElement:
        return FieldElement(tuple(-a % self.p for a in x.coeffs), self)

    def mul(self, x: FieldElement, y: FieldElement) -> FieldElement:
        return FieldElement(
            self._reduce(poly_mul(list(x.coeffs), list(y.coeffs), self.p)), self
        )

    def pow(self, x: FieldElement, k: int) -> FieldElement:
        if k < 0:
            return self.pow(self.inv(x), -k)
        result = self.one
        base = x
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def inv(self, x: FieldElement) -> FieldElement:
        if not x:
            raise ZeroDivisionError("inverse of zero in F_q")
        return self.pow(x, self.q - 2)

    def frobenius_iter(self, x: FieldElement, k: int) -> FieldElement:
        """x^(p^k); only k mod e Frobenius steps are applied."""
        if k < 0:
            raise ValueError("k must be non-negative")
        for _ in range(k % self.e):
            x = self.pow(x, self.p)
        return x

    def trace(self, x: FieldElement) -> int:
        acc = x
        y = x
        for _ in range(self.e - 1):
            y = self.pow(y, self.p)
            acc = self.add(acc, y)
        if any(acc.coeffs[1:]):
            raise AssertionError(f"trace left the prime field: {acc}")
        return acc.coeffs[0]

    def order(self, x: FieldElement) -> int:
        if not x:
            raise ValueError("zero has no multiplicative order")
        n = self.q - 1
        for r in prime_factors(self.q - 1):
            while n % r == 0 and self.pow(x, n // r) == self.one:
                n //= r
        return n

    def _find_primitive(self) -> FieldElement:
        n = self.q - 1
        factors = prime_factors(n)
        for i in range(1, self.q):
            x = self.element(i)
            if all(self.pow(x, n // r) != self.one for r in factors):
                return x
        raise AssertionError("no primitive element")  # unreachable

    # index tables (fast path)

    def _build_tables(self):
        q, p = self.q, self.p
        h = self.primitive_element
        exp = np.zeros(q - 1, dtype=np.int64)
        log = np.full(q, -1, dtype=np.int64)
        x = self.one
        for k in range(q - 1):
            i = self.index(x)
            exp[k] = i
            log[i] = k
            x = self.mul(x, h)
        digits = np.zeros((q, self.e), dtype=np.int64)
        rest = np.arange(q, dtype=np.int64)
        for i in range(self.e):
            digits[:, i] = rest % p
            rest //= p
        basis_trace = np.array(
            [self.trace(self.element(p**i)) for i in range(self.e)], dtype=np.int64
        )
        tr = digits @ basis_trace % p
        for arr in (exp, log, digits, tr):
            arr.flags.writeable = False
        self.exp_table = exp
        self.log_table = log
        self.digits = digits
        self.trace_table = tr

    def mul_idx(self, a, b):
        """Product of element indices (scalars or arrays)."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        la = self.log_table[a]
        lb = self.log_table[b]
        out = self.exp_table[(la + lb) % (self.q - 1)]
        return np.where((a == 0) | (b == 0), 0, out)

    def add_idx(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        return ((self.digits[a] + self.digits[b]) % self.p) @ self._powers

    def neg_idx(self, a):
        a = np.asarray(a, dtype=np.int64)
        return (-self.digits[a] % self.p) @ self._powers

    def pow_idx(self, a, k: int):
        """a^k for indices a and a non-negative integer k (0^0 = 1)."""
        a = np.asarray(a, dtype=np.int64)
        if k == 0:
            return np.ones_like(a)
        out = self.exp_table[self.log_table[a] * (k % (self.q - 1)) % (self.q - 1)]
        return np.where(a == 0, 0, out)

    def trace_idx(self, a):
        return self.trace_table[np.asarray(a, dtype=np.int64)]

    @cached_property
    def trace_product_table(self) -> np.ndarray:
        """T[u, v] = Tr(u v) for all index pairs."""
        idx = np.arange(self.q, dtype=np.int64)
        t = self.trace_table[self.mul_idx(idx[:, None], idx[None, :])]
        t.flags.writeable = False
        return t

    @cached_property
    def subfield_mask(self) -> np.ndarray:
        """True at the indices of the prime subfield F_p."""
        mask = np.zeros(self.q, dtype=bool)
        mask[: self.p] = True
        return mask


def make_field(spec: CodeSpec, modulus=None) -> FieldCtx:
    """Field F_{p^e} for a validated CodeSpec, deterministic unless modulus is given."""
    if not isinstance(spec, CodeSpec):
        raise TypeError("make_field expects a CodeSpec")
    return FieldCtx(spec.p, spec.e, modulus)


_OPS = {"add", "sub", "mul", "inv", "pow"}


def arith(op: str, x: FieldElement, y=None) -> FieldElement:
    """Dispatch one field operation by name; y is an exponent for 'pow'."""
    if op not in _OPS:
        raise ValueError(f"unknown op {op!r}")
    f = x.field
    if op == "inv":
        return f.inv(x)
    if op == "pow":
        if not isinstance(y, (int, np.integer)) or y < 0:
            raise ValueError("pow expects a non-negative integer exponent")
        return f.pow(x, int(y))
    return getattr(f, op)(x, y)
