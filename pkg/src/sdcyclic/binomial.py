"""Binomial coefficients modulo an odd prime, and the signed-binomial
entries of the triangular reciprocal matrices.

Indices reach p^lam (hundreds to thousands), so coefficients are computed
by base-p digit decomposition instead of factorials; the per-digit values
come from a cached p x p Pascal table.
"""

from __future__ import annotations

from functools import lru_cache

from .fieldcore import is_prime


@lru_cache(maxsize=None)
def _pascal_table(p: int) -> tuple[tuple[int, ...], ...]:
    """C(n, k) mod p for all 0 <= k <= n < p."""
    if not is_prime(p):
        raise ValueError(f"modulus must be prime, got {p}")
    rows = [[1] + [0] * (p - 1)]
    for n in range(1, p):
        prev = rows[-1]
        row = [1] * (n + 1) + [0] * (p - 1 - n)
        for k in range(1, n):
            row[k] = (prev[k - 1] + prev[k]) % p
        rows.append(row)
    return tuple(tuple(r) for r in rows)


def binom_mod_p(n: int, k: int, p: int) -> int:
    """C(n, k) mod p via digit decomposition: the product over base-p
    digits of C(n_i, k_i), which is 0 as soon as some k_i > n_i."""
    if n < 0 or k < 0:
        raise ValueError(f"binomial arguments must be non-negative, got ({n}, {k})")
    if k > n:
        return 0
    table = _pascal_table(p)
    out = 1
    while n > 0:
        nd, n = n % p, n // p
        kd, k = k % p, k // p
        if kd > nd:
            return 0
        out = (out * table[nd][kd]) % p
    return out


def g_entry(p: int, lam: int, i: int, j: int) -> int:
    """Entry (i, j), 1-indexed, of the p^lam x p^lam reciprocal matrix:
    (-1)^(j-1) * C(p^lam - j, i - j) mod p, defined for 1 <= j <= i."""
    n = p**lam
    if not 1 <= j <= i <= n:
        raise ValueError(f"need 1 <= j <= i <= {n}, got i={i}, j={j}")
    val = binom_mod_p(n - j, i - j, p)
    return val if j % 2 == 1 else (-val) % p
