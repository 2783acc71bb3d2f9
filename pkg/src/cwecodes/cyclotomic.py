"""Exact arithmetic in Z[zeta_p].

An element is stored in the integral basis 1, zeta, ..., zeta^(p-2);
zeta^(p-1) is rewritten as -(1 + zeta + ... + zeta^(p-2)).  Because this is a
Z-basis, two elements are equal iff their coefficient tuples are equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class CycInt:
    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.p - 1:
            raise ValueError(f"expected {self.p - 1} coefficients, got {len(self.coeffs)}")

    @classmethod
    def zero(cls, p: int) -> "CycInt":
        return cls(p, (0,) * (p - 1))

    @classmethod
    def integer(cls, p: int, n: int) -> "CycInt":
        return cls(p, (int(n),) + (0,) * (p - 2))

    @classmethod
    def from_counts(cls, p: int, counts: Sequence[int]) -> "CycInt":
        """sum_k counts[k] zeta^k for a length-p count vector."""
        if len(counts) != p:
            raise ValueError(f"expected {p} counts")
        top = int(counts[p - 1])
        return cls(p, tuple(int(c) - top for c in counts[: p - 1]))

    def _check(self, other: "CycInt"):
        if other.p != self.p:
            raise ValueError(f"mixing Z[zeta_{self.p}] and Z[zeta_{other.p}]")

    def _lift(self, other) -> "CycInt":
        if isinstance(other, CycInt):
            self._check(other)
            return other
        if isinstance(other, int):
            return CycInt.integer(self.p, other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return CycInt(self.p, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycInt(self.p, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        other = self._lift(other)
        if other is NotImplemented:
            return other
        p = self.p
        full = [0] * p
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    full[(i + j) % p] += a * b
        return CycInt.from_counts(p, full)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined in Z[zeta_p]")
        out = CycInt.integer(self.p, 1)
        for _ in range(k):
            out = out * self
        return out

    def scale(self, n: int) -> "CycInt":
        return CycInt(self.p, tuple(n * a for a in self.coeffs))

    def as_rational_integer(self) -> int | None:
        """n if self equals n in Z[zeta_p], else None."""
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def __str__(self):
        n = self.as_rational_integer()
        if n is not None:
            return str(n)
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}*z^{i}")
        return " + ".join(terms)


def zeta_pow(p: int, k: int) -> CycInt:
    """zeta_p^k in canonical form."""
    k %= p
    if k == p - 1:
        return CycInt(p, (-1,) * (p - 1))
    coeffs = [0] * (p - 1)
    coeffs[k] = 1
    return CycInt(p, tuple(coeffs))


def cyc_arith(op: str, x: CycInt, y) -> CycInt:
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "scale":
        if not isinstance(y, int):
            raise TypeError("scale expects an integer")
        return x.scale(y)
    raise ValueError(f"unknown op {op!r}")


def as_rational_integer(x: CycInt) -> int | None:
    return x.as_rational_integer()
