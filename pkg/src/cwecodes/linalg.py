"""Gaussian elimination over F_p for small dense systems."""

from __future__ import annotations

import itertools

import numpy as np


def rref(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of a mod p and its pivot columns."""
    a = np.array(a, dtype=np.int64) % p
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if len(nz) == 0:
            continue
        k = r + nz[0]
        a[[r, k]] = a[[k, r]]
        a[r] = a[r] * pow(int(a[r, c]), -1, p) % p
        for i in range(rows):
            if i != r and a[i, c]:
                a[i] = (a[i] - a[i, c] * a[r]) % p
        pivots.append(c)
        r += 1
    return a, pivots


def nullspace(a: np.ndarray, p: int) -> np.ndarray:
    """Basis of {x : a x = 0} mod p, one vector per row."""
    a = np.asarray(a, dtype=np.int64)
    red, pivots = rref(a, p)
    n = a.shape[1]
    free = [c for c in range(n) if c not in pivots]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, c in enumerate(pivots):
            basis[k, c] = -red[i, f] % p
    return basis


def solve(a: np.ndarray, b: np.ndarray, p: int) -> tuple[np.ndarray | None, np.ndarray]:
    """One solution of a x = b mod p (or None) and a nullspace basis."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64).reshape(-1, 1)
    n = a.shape[1]
    red, pivots = rref(np.hstack([a, b]), p)
    kernel = nullspace(a, p)
    if n in pivots:
        return None, kernel
    x = np.zeros(n, dtype=np.int64)
    for i, c in enumerate(pivots):
        x[c] = red[i, n]
    return x, kernel


def span(basis: np.ndarray, p: int) -> np.ndarray:
    """All p^k vectors in the F_p-span of k basis rows."""
    basis = np.asarray(basis, dtype=np.int64)
    k = basis.shape[0]
    if k == 0:
        return np.zeros((1, basis.shape[1]), dtype=np.int64)
    combos = np.array(list(itertools.product(range(p), repeat=k)), dtype=np.int64)
    return combos @ basis % p


class LinearSolver:
    """Factorization of a fixed matrix a mod p, reusable across right-hand sides."""

    def __init__(self, a: np.ndarray, p: int):
        a = np.asarray(a, dtype=np.int64) % p
        rows, n = a.shape
        red, pivots = rref(np.hstack([a, np.eye(rows, dtype=np.int64)]), p)
        self.p = p
        self.shape = a.shape
        self.pivots = [c for c in pivots if c < n]
        self.rank = len(self.pivots)
        self.transform = red[:, n:]
        self.kernel = nullspace(a, p)

    def particular(self, b) -> np.ndarray | None:
        """One solution of a x = b, or None when inconsistent."""
        eb = self.transform @ np.asarray(b, dtype=np.int64) % self.p
        if eb[self.rank :].any():
            return None
        x = np.zeros(self.shape[1], dtype=np.int64)
        x[self.pivots] = eb[: self.rank]
        return x

    def all_solutions(self, b) -> np.ndarray:
        x = self.particular(b)
        if x is None:
            return np.zeros((0, self.shape[1]), dtype=np.int64)
        return (x[None, :] + span(self.kernel, self.p)) % self.p
