"""Triangular reciprocal matrices over F_p.

The square matrix of order p^lam whose (i, j) entry is
``(-1)^(j-1) * C(p^lam - j, i - j)`` encodes the coefficient action of
``b(x) -> x^(-1) b(x^(-1))`` on the (x-1)-adic basis of
``F[x]/((x-1)^(p^lam))``.  This module builds it two independent ways
(entry formula vs. Kronecker recursion), truncates it to leading l x l
blocks, computes exact ranks over F_p, and slices out the odd-indexed
columns of ``G_l + I_l`` whose truncations span the fixed-point spaces of
the transform.

Matrices are dense ``int64`` arrays with entries reduced into ``[0, p)``
and are immutable after construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .binomial import g_entry
from .fieldcore import is_prime

# Hard stop for p^lam; full enumeration is long infeasible before this.
DEFAULT_SIZE_CAP = 2048


class MatrixFp:
    """Dense matrix over F_p; entries are int64 residues in [0, p)."""

    __slots__ = ("p", "data")

    def __init__(self, p: int, data):
        if p < 2 or not is_prime(p):
            raise ValueError(f"characteristic must be prime, got {p}")
        arr = np.array(data, dtype=np.int64)
        if arr.ndim != 2:
            raise ValueError(f"matrix data must be 2-dimensional, got shape {arr.shape}")
        arr %= p
        arr.setflags(write=False)
        self.p = p
        self.data = arr

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @classmethod
    def identity(cls, p: int, n: int) -> "MatrixFp":
        return cls(p, np.eye(n, dtype=np.int64))

    def _check_compatible(self, other: "MatrixFp") -> None:
        if not isinstance(other, MatrixFp):
            raise TypeError(f"expected MatrixFp, got {type(other).__name__}")
        if self.p != other.p:
            raise ValueError(f"mismatched characteristic: {self.p} vs {other.p}")

    def __add__(self, other: "MatrixFp") -> "MatrixFp":
        self._check_compatible(other)
        return MatrixFp(self.p, self.data + other.data)

    def __sub__(self, other: "MatrixFp") -> "MatrixFp":
        self._check_compatible(other)
        return MatrixFp(self.p, self.data - other.data)

    def __matmul__(self, other: "MatrixFp") -> "MatrixFp":
        self._check_compatible(other)
        return MatrixFp(self.p, self.data @ other.data)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, MatrixFp)
            and self.p == other.p
            and self.data.shape == other.data.shape
            and bool(np.array_equal(self.data, other.data))
        )

    __hash__ = None  # mutable-size payload; not meant for hashing

    def __repr__(self) -> str:
        return f"MatrixFp(p={self.p}, shape={self.data.shape})"


def _checked_order(p: int, lam: int, cap: int) -> int:
    if p < 3 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    if lam < 0:
        raise ValueError(f"level must be >= 0, got {lam}")
    n = p**lam
    if n > cap:
        raise ValueError(f"p**lam = {n} exceeds size cap {cap}")
    return n


def build_g_direct(p: int, lam: int, cap: int = DEFAULT_SIZE_CAP) -> MatrixFp:
    """Order-p^lam reciprocal matrix straight from the entry formula."""
    n = _checked_order(p, lam, cap)
    arr = np.zeros((n, n), dtype=np.int64)
    for i in range(1, n + 1):
        for j in range(1, i + 1):
            arr[i - 1, j - 1] = g_entry(p, lam, i, j)
    return MatrixFp(p, arr)


def kron(a: MatrixFp, b: MatrixFp) -> MatrixFp:
    """Kronecker product: the block matrix (a_ij * b)."""
    a._check_compatible(b)
    return MatrixFp(a.p, np.kron(a.data, b.data))


def build_g_kron(p: int, lam: int, cap: int = DEFAULT_SIZE_CAP) -> MatrixFp:
    """Order-p^lam reciprocal matrix by folding Kronecker products of the
    order-p one; equals :func:`build_g_direct` entrywise."""
    _checked_order(p, lam, cap)
    if lam == 0:
        return MatrixFp(p, [[1]])
    base = build_g_direct(p, 1, cap=cap)
    out = base
    for _ in range(lam - 1):
        out = kron(base, out)
    return out


def truncate_g(g: MatrixFp, l: int) -> MatrixFp:
    """Upper-left l x l block; lower-triangularity is preserved."""
    if g.rows != g.cols:
        raise ValueError("truncation requires a square matrix")
    if not 1 <= l <= g.rows:
        raise ValueError(f"need 1 <= l <= {g.rows}, got {l}")
    return MatrixFp(g.p, g.data[:l, :l])


def min_level(p: int, l: int) -> int:
    """Least lam >= 1 with l <= p^lam."""
    if l < 1:
        raise ValueError(f"length must be >= 1, got {l}")
    lam, n = 1, p
    while n < l:
        lam += 1
        n *= p
    return lam


@lru_cache(maxsize=None)
def g_truncated(p: int, l: int, cap: int = DEFAULT_SIZE_CAP) -> MatrixFp:
    """G_l: the l x l truncation of the minimal covering reciprocal matrix
    (lam recomputed as the least level with l <= p^lam).  Cached."""
    lam = min_level(p, l)
    if lam >= 2:
        g = build_g_kron(p, lam, cap=cap)
    else:
        g = build_g_direct(p, lam, cap=cap)
    return truncate_g(g, l)


def rank_fp(mat: MatrixFp) -> int:
    """Exact rank over F_p by Gaussian elimination on a working copy."""
    a = mat.data.copy()
    p = mat.p
    nrows, ncols = a.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        hits = np.nonzero(a[r:, c])[0]
        if hits.size == 0:
            continue
        pr = hits[0] + r
        if pr != r:
            a[[r, pr]] = a[[pr, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r] = (a[r] * inv) % p
        below = np.nonzero(a[r + 1 :, c])[0] + r + 1
        if below.size:
            a[below] = (a[below] - np.outer(a[below, c], a[r])) % p
        r += 1
    return r


@dataclass(frozen=True)
class SolutionColumn:
    """One odd-indexed column of G_l + I_l, restricted to rows
    delta+1..l (1-indexed).  These slices are the basis vectors of the
    truncated fixed-point spaces of the reciprocal transform.

    values: the F_p residues, length l - delta.
    source_index: the odd column index 2j - 1 it was cut from.
    delta: truncation offset (0 when untruncated).
    l: ambient matrix size.
    """

    values: tuple[int, ...]
    source_index: int
    delta: int
    l: int

    def __post_init__(self):
        if len(self.values) != self.l - self.delta:
            raise ValueError("column slice has wrong length")
        if self.source_index % 2 != 1 or not 1 <= self.source_index <= self.l:
            raise ValueError(f"source index must be odd in [1, {self.l}], got {self.source_index}")


def column_index_range(l: int, delta: int) -> tuple[int, int]:
    """Inclusive j-range of the valid odd columns 2j-1 for a given
    truncation: ceil(delta/2) + 1 <= j <= ceil(l/2)."""
    return (delta + 1) // 2 + 1, (l + 1) // 2


def solution_column(g_l: MatrixFp, j: int, delta: int = 0) -> SolutionColumn:
    """Rows delta+1..l of column 2j-1 of G_l + I_l."""
    if g_l.rows != g_l.cols:
        raise ValueError("expected the square truncated matrix G_l")
    l = g_l.rows
    if not 0 <= delta < l:
        raise ValueError(f"need 0 <= delta < {l}, got {delta}")
    jmin, jmax = column_index_range(l, delta)
    if not jmin <= j <= jmax:
        raise ValueError(f"need {jmin} <= j <= {jmax} for delta={delta}, l={l}, got j={j}")
    col = 2 * j - 1
    vals = g_l.data[delta:, col - 1].copy()
    # the identity contribution lands on the diagonal row, always >= delta+1
    vals[col - 1 - delta] = (vals[col - 1 - delta] + 1) % g_l.p
    return SolutionColumn(tuple(int(v) for v in vals), col, delta, l)
