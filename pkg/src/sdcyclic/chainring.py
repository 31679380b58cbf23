"""Arithmetic in R = F_{p^m} + u F_{p^m} (u^2 = 0) and an independent
verification engine for ideals of R[x]/(x^N -+ 1).

An element a + u*b is the pair (a, b) of field-element tuples; a length-N
vector over R is a tuple of such pairs.  The verifier knows nothing about
how codes were produced: it expands generator orbits (all cyclic or
negacyclic shifts of each generator and of u times it), splits a + u*b
into the 2N-dimensional (a | b) coordinates over F_{p^m}, and row-reduces
exactly.  Cardinality is (p^m)^dimension; a code is self-dual iff it is
self-orthogonal and has dimension p^s, since sizes of a code and its dual
multiply to the full space.

Orthogonality is checked on generator shifts only: the inner product is
bilinear and invariant under the (nega)cyclic shift applied to both
arguments, and u-multiples only ever shrink products because u^2 = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

import numpy as np

from .fieldcore import FieldSpec, FqElem

RElem = Tuple[FqElem, FqElem]
RVector = Tuple[RElem, ...]


def r_add(field: FieldSpec, x: RElem, y: RElem) -> RElem:
    return (field.add(x[0], y[0]), field.add(x[1], y[1]))


def r_neg(field: FieldSpec, x: RElem) -> RElem:
    return (field.neg(x[0]), field.neg(x[1]))


def r_mul(field: FieldSpec, x: RElem, y: RElem) -> RElem:
    """(a + ub)(c + ud) = ac + u(ad + bc)."""
    a, b = x
    c, d = y
    return (
        field.mul(a, c),
        field.add(field.mul(a, d), field.mul(b, c)),
    )


def r_zero(field: FieldSpec) -> RElem:
    return (field.zero(), field.zero())


def r_scale(field: FieldSpec, c: RElem, vec: RVector) -> RVector:
    return tuple(r_mul(field, c, v) for v in vec)


def inner_product(field: FieldSpec, xs: RVector, ys: RVector) -> RElem:
    """Euclidean inner product sum(x_i * y_i) in R."""
    if len(xs) != len(ys):
        raise ValueError(f"length mismatch: {len(xs)} vs {len(ys)}")
    acc = r_zero(field)
    for x, y in zip(xs, ys):
        acc = r_add(field, acc, r_mul(field, x, y))
    return acc


@dataclass(frozen=True)
class RIdealGens:
    """Generators of an ideal of R[x]/(x^N - ring_sign), each given as a
    length-N coefficient vector over R (already reduced)."""

    field: FieldSpec
    ring_sign: int  # +1 cyclic, -1 negacyclic
    generators: tuple[RVector, ...]

    def __post_init__(self):
        if self.ring_sign not in (1, -1):
            raise ValueError(f"ring sign must be +1 or -1, got {self.ring_sign}")
        if not self.generators:
            raise ValueError("at least one generator required")
        n = len(self.generators[0])
        if n < 1 or any(len(g) != n for g in self.generators):
            raise ValueError("generators must share one positive length")

    @property
    def n(self) -> int:
        return len(self.generators[0])


# ---------------------------------------------------------------------------
# Vectorized field kernels.  Arrays of field elements have the coefficient
# axis last: shape (..., m) of int64 residues.

@lru_cache(maxsize=None)
def _reduction_rows(field: FieldSpec) -> np.ndarray:
    """(2m-1, m) matrix expressing x^d mod the field modulus, d < 2m-1."""
    m = field.m
    rows = np.zeros((2 * m - 1, m), dtype=np.int64)
    rows[:m] = np.eye(m, dtype=np.int64)
    for t, red in enumerate(field.reduction):
        rows[m + t] = red
    rows.setflags(write=False)
    return rows


def _mul_arrays(field: FieldSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Broadcast elementwise field product; shapes (.., m) x (.., m)."""
    p, m = field.p, field.m
    if m == 1:
        return (a * b) % p
    shape = np.broadcast_shapes(a.shape[:-1], b.shape[:-1])
    conv = np.zeros(shape + (2 * m - 1,), dtype=np.int64)
    for i in range(m):
        for j in range(m):
            conv[..., i + j] += a[..., i] * b[..., j]
    return (conv % p) @ _reduction_rows(field) % p


def _gen_arrays(field: FieldSpec, vec: RVector) -> tuple[np.ndarray, np.ndarray]:
    a = np.array([v[0] for v in vec], dtype=np.int64)
    b = np.array([v[1] for v in vec], dtype=np.int64)
    return a, b


def _shift(x: np.ndarray, i: int, sign: int, p: int) -> np.ndarray:
    """Multiply by x^i: rotate i steps down, entries that wrapped past
    x^N pick up the ring sign."""
    if i == 0:
        return x
    out = np.roll(x, i, axis=0)
    if sign == -1:
        out[:i] = (-out[:i]) % p
    return out


def _orbit_rows(gens: RIdealGens) -> np.ndarray:
    """All shifts of every generator and of u times it, split into the
    (a | b) coordinates: shape (rows, 2N, m)."""
    field = gens.field
    n, sign, p = gens.n, gens.ring_sign, gens.field.p
    rows = []
    for g in gens.generators:
        a, b = _gen_arrays(field, g)
        zero = np.zeros_like(a)
        for i in range(n):
            ai = _shift(a, i, sign, p)
            bi = _shift(b, i, sign, p)
            rows.append(np.concatenate([ai, bi], axis=0))
            rows.append(np.concatenate([zero, ai], axis=0))  # u * x^i * g
    return np.stack(rows)


def _rref(field: FieldSpec, rows: np.ndarray) -> np.ndarray:
    """Reduced row echelon form over F_{p^m}; returns the nonzero rows,
    pivots normalized to 1 and ordered by column."""
    rows = rows.copy()
    p = field.p
    nrows, ncols = rows.shape[0], rows.shape[1]
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        hits = np.nonzero(rows[r:, c, :].any(axis=1))[0]
        if hits.size == 0:
            continue
        pr = hits[0] + r
        if pr != r:
            rows[[r, pr]] = rows[[pr, r]]
        inv = np.array(field.inv(tuple(int(v) for v in rows[r, c])), dtype=np.int64)
        rows[r] = _mul_arrays(field, rows[r], inv)
        others = np.nonzero(rows[:, c, :].any(axis=1))[0]
        others = others[others != r]
        if others.size:
            factors = rows[others, c, :]
            delta = _mul_arrays(field, factors[:, None, :], rows[r][None, :, :])
            rows[others] = (rows[others] - delta) % p
        r += 1
    return rows[:r]


def span_dimension(gens: RIdealGens) -> int:
    """F_{p^m}-dimension d of the spanned ideal; the code has (p^m)^d
    codewords."""
    return int(_rref(gens.field, _orbit_rows(gens)).shape[0])


def is_self_orthogonal(gens: RIdealGens) -> bool:
    """True iff [x^i g_a, g_b] = 0 for all generator pairs and shifts,
    which by bilinearity covers the whole span."""
    field = gens.field
    n, sign, p = gens.n, gens.ring_sign, gens.field.p
    arrs = [_gen_arrays(field, g) for g in gens.generators]
    shifted = [
        [(_shift(a, i, sign, p), _shift(b, i, sign, p)) for i in range(n)]
        for a, b in arrs
    ]
    for shifts_a in shifted:
        for ab, bb in arrs:
            for aa, ba in shifts_a:
                main = _mul_arrays(field, aa, ab).sum(axis=0) % p
                if main.any():
                    return False
                cross = (
                    _mul_arrays(field, aa, bb).sum(axis=0)
                    + _mul_arrays(field, ba, ab).sum(axis=0)
                ) % p
                if cross.any():
                    return False
    return True


def is_self_dual(gens: RIdealGens, s: int) -> bool:
    """Self-orthogonal and exactly half-sized: dimension p^s out of the
    ambient 2 p^s.  Over this chain ring |C| * |C-dual| = |R|^N, so the
    two conditions together give C = C-dual."""
    n = gens.field.p**s
    if gens.n != n:
        raise ValueError(f"generators have length {gens.n}, expected p^s = {n}")
    return is_self_orthogonal(gens) and span_dimension(gens) == n


def canonical_form(gens: RIdealGens) -> tuple[tuple[FqElem, ...], ...]:
    """The reduced row-echelon basis of the 2N-dimensional expansion,
    as nested tuples.  Equal ideals give identical forms, so this is the
    distinctness key for code sets."""
    red = _rref(gens.field, _orbit_rows(gens))
    return tuple(tuple(tuple(int(v) for v in entry) for entry in row) for row in red.tolist())
