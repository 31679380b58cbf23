"""The reciprocal transform b(x) -> x^(-1) b(x^(-1)) on F_{p^m}[x]/((x-1)^l),
its fixed-point solution spaces, and independent brute-force oracles.

Polynomials live in the (x-1)-adic basis: ``coeffs[i]`` multiplies
``(x-1)^i``.  That basis is the natural coordinate system for codes of
length p^s, since x^(p^s) - 1 = (x-1)^(p^s) in characteristic p.  The
covering level lam is always recomputed as the least power with
l <= p^lam, never carried around.

The production transform is a single triangular matrix-vector product
over F_p.  The oracle redoes the map by direct polynomial arithmetic
(basis change, substitution x -> x^(p^lam - 1), multiplication, reduction)
and never touches the matrices, so the two paths check each other.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

from .fieldcore import FieldSpec, FqElem
from .gmatrix import (
    SolutionColumn,
    column_index_range,
    g_truncated,
    min_level,
    solution_column,
)

XM1_TO_STD = "xm1_to_std"
STD_TO_XM1 = "std_to_xm1"


@dataclass(frozen=True)
class XPoly:
    """Element of F_{p^m}[x]/((x-1)^l) as its (x-1)-adic coefficient
    tuple (b_0, ..., b_{l-1}), entries being field-element tuples."""

    field: FieldSpec
    l: int
    coeffs: tuple[FqElem, ...]

    def __post_init__(self):
        if self.l < 0:
            raise ValueError(f"modulus exponent must be >= 0, got {self.l}")
        if len(self.coeffs) != self.l:
            raise ValueError(f"expected {self.l} coefficients, got {len(self.coeffs)}")
        m, p = self.field.m, self.field.p
        for c in self.coeffs:
            if len(c) != m or any(not 0 <= v < p for v in c):
                raise ValueError(f"coefficient {c} is not a reduced F_{p}^{m} tuple")

    @classmethod
    def zero(cls, field: FieldSpec, l: int) -> "XPoly":
        return cls(field, l, (field.zero(),) * l)

    def is_zero(self) -> bool:
        return not any(any(c) for c in self.coeffs)


def _to_array(coeffs: Sequence[FqElem]) -> np.ndarray:
    return np.array(coeffs, dtype=np.int64).reshape(len(coeffs), -1)

def _from_array(arr: np.ndarray) -> tuple[FqElem, ...]:
    return tuple(tuple(row) for row in arr.tolist())


@lru_cache(maxsize=None)
def _pascal_lower(p: int, size: int) -> np.ndarray:
    """Lower-triangular C(n, k) mod p for 0 <= k <= n < size."""
    a = np.zeros((size, size), dtype=np.int64)
    a[:, 0] = 1
    for n in range(1, size):
        a[n, 1 : n + 1] = (a[n - 1, :n] + a[n - 1, 1 : n + 1]) % p
    a.setflags(write=False)
    return a


@lru_cache(maxsize=None)
def _conv_matrix(p: int, size: int, direction: str) -> np.ndarray:
    """Change-of-basis matrix between the (x-1)-adic and standard
    monomial coordinates, acting on coefficient columns."""
    pa = _pascal_lower(p, size)
    if direction == XM1_TO_STD:
        # c_j = sum_i (-1)^(i-j) C(i, j) b_i
        mat = pa.T.copy()
        i = np.arange(size)
        odd = (i[None, :] - i[:, None]) % 2 == 1
        mat[odd] = (p - mat[odd]) % p
    elif direction == STD_TO_XM1:
        # b_i = sum_j C(j, i) c_j
        mat = pa.T.copy()
    else:
        raise ValueError(f"unknown direction {direction!r}")
    mat.setflags(write=False)
    return mat


def basis_convert(field: FieldSpec, coeffs: Sequence[FqElem], direction: str) -> tuple[FqElem, ...]:
    """Exact linear change of basis via binomial expansion; 'xm1_to_std'
    maps (x-1)-adic coefficients to standard ones, 'std_to_xm1' back.
    Round-tripping is the identity."""
    if not coeffs:
        return ()
    mat = _conv_matrix(field.p, len(coeffs), direction)
    return _from_array((mat @ _to_array(coeffs)) % field.p)


def reciprocal_transform(b: XPoly) -> XPoly:
    """Coefficients of x^(-1) b(x^(-1)) mod (x-1)^l: the truncated
    reciprocal matrix applied to the coefficient column."""
    if b.l == 0:
        return b
    g = g_truncated(b.field.p, b.l)
    out = (g.data @ _to_array(b.coeffs)) % b.field.p
    return XPoly(b.field, b.l, _from_array(out))


def reciprocal_oracle(b: XPoly) -> XPoly:
    """Same map by direct polynomial arithmetic, independent of any
    matrix: convert to the standard basis inside F[x]/(x^n - 1) for
    n = p^lam, substitute x -> x^(n-1), multiply by x^(n-1), reduce
    mod (x-1)^l, convert back."""
    field, l = b.field, b.l
    if l == 0:
        return b
    n = field.p ** min_level(field.p, l)
    std = list(basis_convert(field, b.coeffs, XM1_TO_STD))
    std += [field.zero()] * (n - l)
    out = [field.zero()] * n
    for j, c in enumerate(std):
        if any(c):
            # x^j -> x^(j(n-1)), then the extra factor x^(n-1)
            t = ((j + 1) * (n - 1)) % n
            out[t] = field.add(out[t], c)
    back = basis_convert(field, out, STD_TO_XM1)
    return XPoly(field, l, back[:l])


@dataclass(frozen=True)
class SolutionBasis:
    """Basis of the delta-truncated fixed-point space: the valid
    odd-indexed column slices of G_l + I_l.  The span over F_{p^m} has
    exactly (p^m)^dimension elements; dimension may be 0, in which case
    the span is just the zero vector."""

    field: FieldSpec
    l: int
    delta: int
    vectors: tuple[SolutionColumn, ...]

    @property
    def dimension(self) -> int:
        return len(self.vectors)

    def combine(self, params: Sequence[FqElem]) -> tuple[FqElem, ...]:
        """The span element sum(params[t] * vectors[t]), length l - delta."""
        if len(params) != self.dimension:
            raise ValueError(f"expected {self.dimension} parameters, got {len(params)}")
        n = self.l - self.delta
        if not params:
            return (self.field.zero(),) * n
        cols = np.array([v.values for v in self.vectors], dtype=np.int64).T  # (n, dim)
        pmat = _to_array(params)  # (dim, m)
        return _from_array((cols @ pmat) % self.field.p)

    def iter_span(self) -> Iterator[tuple[FqElem, ...]]:
        """Every element of the span, parameters in lexicographic order."""
        for combo in itertools.product(self.field.elements(), repeat=self.dimension):
            yield self.combine(combo)


def solution_basis(field: FieldSpec, l: int, delta: int = 0) -> SolutionBasis:
    """Basis vectors for the solutions supported on coefficients
    delta..l-1; dimension ceil(l/2) - ceil(delta/2)."""
    if not 0 <= delta < l:
        raise ValueError(f"need 0 <= delta < l, got delta={delta}, l={l}")
    g = g_truncated(field.p, l)
    jmin, jmax = column_index_range(l, delta)
    vectors = tuple(solution_column(g, j, delta) for j in range(jmin, jmax + 1))
    return SolutionBasis(field, l, delta, vectors)


def is_solution(b: XPoly, delta: int = 0) -> bool:
    """True iff b is fixed by the reciprocal transform, i.e.
    (G_l - I_l) B_l = 0, and its first delta coefficients vanish."""
    if any(any(c) for c in b.coeffs[:delta]):
        return False
    if b.l == 0:
        return True
    g = g_truncated(b.field.p, b.l)
    v = _to_array(b.coeffs)
    return not (((g.data @ v) - v) % b.field.p).any()


def kernel_oracle(field: FieldSpec, l: int, guard: int = 10_000_000) -> list[tuple[FqElem, ...]]:
    """All B in F_{p^m}^l with (G_l - I_l) B = 0, found by exhausting
    every candidate vector.  Test oracle only; refuses searches beyond
    ``guard`` candidates."""
    total = field.order**l
    if total > guard:
        raise ValueError(f"{total} candidates exceeds the oracle guard {guard}")
    g = g_truncated(field.p, l)
    gmi = (g.data - np.eye(l, dtype=np.int64)) % field.p
    out = []
    for combo in itertools.product(field.elements(), repeat=l):
        v = np.array(combo, dtype=np.int64)
        if not ((gmi @ v) % field.p).any():
            out.append(combo)
    return out
